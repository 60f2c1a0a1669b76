//! Small dense matrices: exact rational matrices for representation
//! checks, f64 matrices with a Jacobi eigensolver for the orthonormal
//! (square-root) representation.

use crate::scalar::Rat;

/// Dense square matrix over exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    pub dim: usize,
    entries: Vec<Rat>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> ExactMatrix {
        ExactMatrix {
            dim,
            entries: vec![Rat::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = ExactMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += &prod;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for i in 0..self.dim * self.dim {
            out.entries[i] += &rhs.entries[i];
        }
        out
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        self.add(&rhs.scale(&Rat::int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn commutator(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        a.mul(b).sub(&b.mul(a))
    }

    pub fn anticommutator(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        a.mul(b).add(&b.mul(a))
    }

    /// True when all entries with both indices below `size` are zero.
    pub fn is_zero_on_leading_block(&self, size: usize) -> bool {
        for i in 0..size.min(self.dim) {
            for j in 0..size.min(self.dim) {
                if !self[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Largest |i - j| over nonzero entries; 0 for diagonal/zero matrices.
    pub fn bandwidth(&self) -> usize {
        let mut w = 0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self[(i, j)].is_zero() {
                    w = w.max(i.abs_diff(j));
                }
            }
        }
        w
    }

    pub fn to_f64(&self) -> FloatMatrix {
        FloatMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(Rat::to_f64).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.dim + j]
    }
}

/// Dense square f64 matrix; just enough linear algebra for the float-side
/// representation checks.
#[derive(Clone, Debug)]
pub struct FloatMatrix {
    pub dim: usize,
    entries: Vec<f64>,
}

impl FloatMatrix {
    pub fn zeros(dim: usize) -> FloatMatrix {
        FloatMatrix {
            dim,
            entries: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> FloatMatrix {
        let mut m = FloatMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn mul(&self, rhs: &FloatMatrix) -> FloatMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = FloatMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..self.dim {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &FloatMatrix) -> FloatMatrix {
        let mut out = self.clone();
        for i in 0..self.dim * self.dim {
            out.entries[i] += rhs.entries[i];
        }
        out
    }

    pub fn sub(&self, rhs: &FloatMatrix) -> FloatMatrix {
        let mut out = self.clone();
        for i in 0..self.dim * self.dim {
            out.entries[i] -= rhs.entries[i];
        }
        out
    }

    pub fn scale(&self, c: f64) -> FloatMatrix {
        FloatMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn commutator(a: &FloatMatrix, b: &FloatMatrix) -> FloatMatrix {
        a.mul(b).sub(&b.mul(a))
    }

    pub fn anticommutator(a: &FloatMatrix, b: &FloatMatrix) -> FloatMatrix {
        a.mul(b).add(&b.mul(a))
    }

    /// Largest absolute entry on the leading `size` x `size` block.
    pub fn max_abs_on_leading_block(&self, size: usize) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..size.min(self.dim) {
            for j in 0..size.min(self.dim) {
                m = m.max(self[(i, j)].abs());
            }
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0f64, |m, e| m.max(e.abs()))
    }

    /// Eigenvalues of a symmetric matrix by the classical Jacobi rotation
    /// iteration; plenty accurate at the small sizes used here.
    pub fn symmetric_eigenvalues(&self) -> Vec<f64> {
        let n = self.dim;
        let mut a = self.clone();
        for _sweep in 0..100 {
            let mut off = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    off += a[(i, j)] * a[(i, j)];
                }
            }
            if off.sqrt() < 1e-14 {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    if apq.abs() < 1e-300 {
                        continue;
                    }
                    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = c * akp - s * akq;
                        a[(k, q)] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[(p, k)];
                        let aqk = a[(q, k)];
                        a[(p, k)] = c * apk - s * aqk;
                        a[(q, k)] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut eigs: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
        eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
        eigs
    }
}

impl std::ops::Index<(usize, usize)> for FloatMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FloatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.entries[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn exact_matrix_algebra() {
        let mut a = ExactMatrix::zeros(2);
        a[(0, 1)] = Rat::one();
        let mut b = ExactMatrix::zeros(2);
        b[(1, 0)] = Rat::one();
        let c = ExactMatrix::commutator(&a, &b);
        // [e01, e10] = diag(1, -1)
        assert_eq!(c[(0, 0)], Rat::one());
        assert_eq!(c[(1, 1)], Rat::int(-1));
        assert_eq!(a.bandwidth(), 1);
    }

    #[test]
    fn jacobi_eigenvalues_of_known_matrix() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        let mut m = FloatMatrix::zeros(2);
        m[(0, 0)] = 2.0;
        m[(0, 1)] = 1.0;
        m[(1, 0)] = 1.0;
        m[(1, 1)] = 2.0;
        let e = m.symmetric_eigenvalues();
        assert!((e[0] - 1.0).abs() < 1e-12);
        assert!((e[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn jacobi_on_tridiagonal() {
        // eigenvalues of tridiag(1, 0, 1) of size 3: -sqrt(2), 0, sqrt(2)
        let mut m = FloatMatrix::zeros(3);
        m[(0, 1)] = 1.0;
        m[(1, 0)] = 1.0;
        m[(1, 2)] = 1.0;
        m[(2, 1)] = 1.0;
        let e = m.symmetric_eigenvalues();
        let s = 2.0f64.sqrt();
        assert!((e[0] + s).abs() < 1e-12 && e[1].abs() < 1e-12 && (e[2] - s).abs() < 1e-12);
    }

    #[test]
    fn leading_block_masking() {
        let mut m = ExactMatrix::zeros(3);
        m[(2, 2)] = rat(1, 2);
        assert!(m.is_zero_on_leading_block(2));
        assert!(!m.is_zero_on_leading_block(3));
    }
}
