//! The four-parameter tuple shared by every family in this crate.

use serde::{Deserialize, Serialize};

use crate::scalar::Rat;

/// Parameters `(rho1, rho2, r1, r2)`. The combination
/// `g = rho1 + rho2 - r1 - r2` appears in every denominator and is always
/// recomputed from the fields rather than stored.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ParamSet {
    pub rho1: Rat,
    pub rho2: Rat,
    pub r1: Rat,
    pub r2: Rat,
}

impl ParamSet {
    pub fn new(rho1: Rat, rho2: Rat, r1: Rat, r2: Rat) -> ParamSet {
        ParamSet { rho1, rho2, r1, r2 }
    }

    pub fn g(&self) -> Rat {
        &(&self.rho1 + &self.rho2) - &(&self.r1 + &self.r2)
    }
}

impl std::fmt::Display for ParamSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(rho1={}, rho2={}, r1={}, r2={})",
            self.rho1, self.rho2, self.r1, self.r2
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn g_is_derived() {
        let p = ParamSet::new(Rat::one(), rat(1, 2), rat(1, 4), rat(1, 4));
        assert_eq!(p.g(), Rat::one());
    }
}
