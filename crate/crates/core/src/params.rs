use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ntheory::{modp, valuation};

/// Derived constants of `G(beta)`.
///
/// `n = |beta - 1|`, `n2 = n²`. `B` has order `n2`; `C` has order `n` when beta is even and `2n`
/// when beta is odd, in which case `C^n = B^(n2/2)` (`half`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupParams {
    pub beta: BigInt,
    pub n: BigInt,
    pub n2: BigInt,
    /// `beta mod n2`.
    pub beta_mod: BigInt,
    /// `(2 - beta) mod n2`, the inverse of `beta_mod`.
    pub beta0: BigInt,
    pub beta_even: bool,
    pub c_order: BigInt,
    /// `n2 / 2` for odd beta.
    pub half: Option<BigInt>,
    pub v2: u32,
    /// Least positive `e` with `A^e` central.
    pub a_central_exp: BigInt,
    /// `(beta - 1) mod n2`.
    pub(crate) bm1_mod: BigInt,
}

impl GroupParams {
    pub fn new(beta: impl Into<BigInt>) -> Result<Self> {
        let beta = beta.into();
        if beta.is_one() {
            return Err(Error::UnsupportedBeta);
        }
        if beta.is_zero() || beta == BigInt::from(2) {
            return Err(Error::DegenerateBeta(beta));
        }
        let bm1: BigInt = &beta - 1;
        let n = bm1.abs();
        let n2 = &n * &n;
        let beta_mod = modp(&beta, &n2);
        let beta0 = modp(&(2 - &beta), &n2);
        let beta_even = beta.is_even();
        let c_order = if beta_even { n.clone() } else { &n * 2 };
        let half = (!beta_even).then(|| &n2 / 2);
        let v2 = valuation(&n, &BigInt::from(2));
        Ok(GroupParams {
            a_central_exp: c_order.clone(),
            bm1_mod: modp(&bm1, &n2),
            beta,
            n,
            n2,
            beta_mod,
            beta0,
            beta_even,
            c_order,
            half,
            v2,
        })
    }

    /// `beta - 1` with its sign.
    pub fn beta_minus_one(&self) -> BigInt {
        &self.beta - 1
    }

    /// Order of the torsion subgroup, `n³`.
    pub fn torsion_order(&self) -> BigInt {
        &self.n2 * &self.n
    }

    /// Exponent of the torsion subgroup, `lcm(n2, c_order)`.
    pub fn torsion_exponent(&self) -> BigInt {
        self.n2.lcm(&self.c_order)
    }

    /// The quaternion case `beta ∈ {-1, 3}`.
    pub fn is_q8_case(&self) -> bool {
        self.n == BigInt::from(2)
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({})", self.beta)
    }
}
