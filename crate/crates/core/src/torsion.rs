//! The torsion subgroup `T = <B, C>` of order `|beta - 1|³` and its Sylow decomposition.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::closure::ensure_cap;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::MacdonaldGroup;
use crate::ntheory::{crt, factorize, valuation};

pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SylowKind {
    SplitMetacyclic,
    QuaternionQ8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowInfo {
    pub p: BigInt,
    /// `v_p(beta - 1)`.
    pub m: u32,
    /// `p^(3m)`.
    pub order: BigInt,
    pub kind: SylowKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionStructureReport {
    pub order: BigInt,
    pub is_split: bool,
    /// Order of the cyclic normal subgroup `<B>`, `(beta - 1)²`.
    pub kernel_order: BigInt,
    /// Order of the cyclic quotient, `|beta - 1|`.
    pub quotient_order: BigInt,
    pub sylow: Vec<SylowInfo>,
    /// A complement generator to `<B>` when `T` splits: `C` for even beta, `B^((beta-1)/2) C` for
    /// odd beta with `4 | beta - 1`.
    pub split_witness: Option<Element>,
}

/// All `n³` torsion elements `C^c B^b`, ordered lexicographically in `(c, b)`.
pub fn enumerate_torsion(g: &MacdonaldGroup, cap: u64) -> Result<Vec<Element>> {
    let p = g.params();
    ensure_cap(&p.torsion_order(), cap)?;
    let n = p.n.to_u64().expect("bounded by cap");
    let n2 = p.n2.to_u64().expect("bounded by cap");
    let mut out = Vec::with_capacity((n * n2) as usize);
    for c in 0..n {
        for b in 0..n2 {
            out.push(Element {
                a: BigInt::zero(),
                c: c.into(),
                b: b.into(),
            });
        }
    }
    Ok(out)
}

pub fn torsion_structure(g: &MacdonaldGroup) -> Result<TorsionStructureReport> {
    let p = g.params();
    let is_split = p.v2 != 1;
    let sylow = factorize(&p.n)?
        .into_iter()
        .map(|(prime, m)| {
            let kind = if prime == BigInt::from(2) && m == 1 {
                SylowKind::QuaternionQ8
            } else {
                SylowKind::SplitMetacyclic
            };
            SylowInfo {
                order: prime.pow(3 * m),
                p: prime,
                m,
                kind,
            }
        })
        .collect();
    let split_witness = if p.beta_even {
        Some(g.gen_c())
    } else if is_split {
        let half_step = g.power(&g.gen_b(), p.beta_minus_one() / 2);
        Some(g.multiply(&half_step, &g.gen_c()))
    } else {
        None
    };
    Ok(TorsionStructureReport {
        order: p.torsion_order(),
        is_split,
        kernel_order: p.n2.clone(),
        quotient_order: p.n.clone(),
        sylow,
        split_witness,
    })
}

/// Exponent `e` with `x^e` the `T_p`-component of any torsion `x`: `e ≡ 1` modulo the `p`-part of
/// the torsion exponent and `e ≡ 0` modulo its complement.
pub fn sylow_exponent(g: &MacdonaldGroup, prime: &BigInt) -> Result<BigInt> {
    let p = g.params();
    if prime <= &BigInt::one() || !(&p.n % prime).is_zero() {
        return Err(Error::PrimeNotDividing {
            p: prime.clone(),
            n: p.n.clone(),
        });
    }
    let exp = p.torsion_exponent();
    let p_part = prime.pow(valuation(&exp, prime));
    let rest = &exp / &p_part;
    Ok(crt(&BigInt::one(), &p_part, &BigInt::zero(), &rest).expect("coprime parts"))
}

pub fn sylow_projection(g: &MacdonaldGroup, x: &Element, prime: &BigInt) -> Result<Element> {
    if !x.is_torsion() {
        return Err(Error::NotTorsion(x.to_string()));
    }
    let e = sylow_exponent(g, prime)?;
    Ok(g.power(x, e))
}

/// Projections of `B` and `C` to `T_p`.
pub fn sylow_generators(g: &MacdonaldGroup, prime: &BigInt) -> Result<(Element, Element)> {
    Ok((
        sylow_projection(g, &g.gen_b(), prime)?,
        sylow_projection(g, &g.gen_c(), prime)?,
    ))
}

/// `p^(3 m)` with `m = v_p(beta - 1)`.
pub fn sylow_order(g: &MacdonaldGroup, prime: &BigInt) -> BigInt {
    prime.pow(3 * valuation(&g.params().n, prime))
}

/// Distinct primes dividing `n`.
pub fn primes_dividing(g: &MacdonaldGroup) -> Result<Vec<BigInt>> {
    Ok(factorize(&g.params().n)?.into_iter().map(|(p, _)| p).collect())
}
