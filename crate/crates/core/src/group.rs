//! Collection arithmetic in `G(beta) = <A, B | A^[A,B] = A, B^[B,A] = B^beta>`.
//!
//! Elements are kept in the normal form `A^a C^c B^b` with `C = [A, B]`. The commutation rules used
//! by [`MacdonaldGroup::multiply`]:
//!
//! * `A` and `C` commute;
//! * `B^C = B^(2 - beta)`, hence `B^j C^k = C^k B^(j (1 - k (beta - 1)))` modulo `n²`;
//! * `(B^j)^(A^x) = C^(-x j) B^(j + x (beta - 1) j (j + 1) / 2)` modulo `n²`;
//! * `C^n = 1` for even beta and `C^n = B^(n²/2)` (a central involution) for odd beta.
//!
//! Powers of beta collapse because `beta^k ≡ 1 + k (beta - 1)` modulo `(beta - 1)²`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::element::{Element, Letter, Order, Word};
use crate::error::{Error, Result};
use crate::ntheory::{factorize, modp};
use crate::params::GroupParams;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacdonaldGroup {
    params: GroupParams,
}

impl MacdonaldGroup {
    pub fn new(beta: impl Into<BigInt>) -> Result<Self> {
        Ok(Self::from_params(GroupParams::new(beta)?))
    }

    pub fn from_params(params: GroupParams) -> Self {
        MacdonaldGroup { params }
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn beta(&self) -> &BigInt {
        &self.params.beta
    }

    pub fn identity(&self) -> Element {
        Element::identity()
    }

    pub fn gen_a(&self) -> Element {
        self.normalize(1, 0, 0)
    }

    pub fn gen_b(&self) -> Element {
        self.normalize(0, 0, 1)
    }

    pub fn gen_c(&self) -> Element {
        self.normalize(0, 1, 0)
    }

    /// Builds an element from exponents that must already be canonical.
    pub fn element(
        &self,
        a: impl Into<BigInt>,
        c: impl Into<BigInt>,
        b: impl Into<BigInt>,
    ) -> Result<Element> {
        let e = Element {
            a: a.into(),
            c: c.into(),
            b: b.into(),
        };
        self.check(&e)?;
        Ok(e)
    }

    /// Whether `x` is in canonical range for this group.
    pub fn contains(&self, x: &Element) -> bool {
        !x.c.is_negative() && x.c < self.params.n && !x.b.is_negative() && x.b < self.params.n2
    }

    fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ParamsMismatch(x.to_string(), self.params.beta.clone()))
        }
    }

    /// Reduces the raw word `A^a C^c B^b` to canonical form.
    ///
    /// For odd beta each multiple of `n` removed from `c` contributes the central involution
    /// `B^(n²/2)`.
    pub fn normalize(
        &self,
        a: impl Into<BigInt>,
        c: impl Into<BigInt>,
        b: impl Into<BigInt>,
    ) -> Element {
        self.normalize_raw(a.into(), c.into(), b.into())
    }

    fn normalize_raw(&self, a: BigInt, c: BigInt, b: BigInt) -> Element {
        let p = &self.params;
        let (q, c) = c.div_mod_floor(&p.n);
        let b = match &p.half {
            Some(half) if q.is_odd() => modp(&(b + half), &p.n2),
            _ => modp(&b, &p.n2),
        };
        Element { a, c, b }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let p = &self.params;
        // (B^b1)^(A^a2) = C^(-a2 b1) B^t
        let t = if y.a.is_zero() || x.b.is_zero() {
            x.b.clone()
        } else {
            let tri: BigInt = (&x.b * (&x.b + 1u32)) >> 1usize;
            modp(&(&x.b + &y.a * &p.bm1_mod % &p.n2 * tri), &p.n2)
        };
        let c = &x.c - &y.a * &x.b + &y.c;
        // B^t C^c2 = C^c2 B^(t (1 - c2 (beta - 1)))
        let b = if y.c.is_zero() {
            t + &y.b
        } else {
            t * (1 - &y.c * &p.bm1_mod) + &y.b
        };
        self.normalize_raw(&x.a + &y.a, c, b)
    }

    /// [`multiply`](Self::multiply) with both operands checked against this group's ranges.
    pub fn try_multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.multiply(x, y))
    }

    pub fn inverse(&self, x: &Element) -> Element {
        let b_inv = self.normalize_raw(BigInt::zero(), BigInt::zero(), -&x.b);
        let c_inv = self.normalize_raw(BigInt::zero(), -&x.c, BigInt::zero());
        let a_inv = self.normalize_raw(-&x.a, BigInt::zero(), BigInt::zero());
        self.multiply(&self.multiply(&b_inv, &c_inv), &a_inv)
    }

    pub fn power(&self, x: &Element, k: impl Into<BigInt>) -> Element {
        let mut k: BigInt = k.into();
        let mut base = if k.is_negative() {
            k = -k;
            self.inverse(x)
        } else {
            x.clone()
        };
        if x.is_torsion() {
            k = k.mod_floor(&self.params.torsion_exponent());
        }
        let mut acc = Element::identity();
        while !k.is_zero() {
            if k.is_odd() {
                acc = self.multiply(&acc, &base);
            }
            k >>= 1usize;
            if !k.is_zero() {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: &Element, g: &Element) -> Element {
        self.multiply(&self.multiply(&self.inverse(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        let xy = self.multiply(x, y);
        let yx = self.multiply(y, x);
        self.multiply(&self.inverse(&yx), &xy)
    }

    pub fn order(&self, x: &Element) -> Result<Order> {
        if !x.is_torsion() {
            return Ok(Order::Infinite);
        }
        let mut ord = self.params.torsion_exponent();
        for (prime, _) in factorize(&self.params.n)? {
            while (&ord % &prime).is_zero() && self.power(x, &ord / &prime).is_identity() {
                ord /= &prime;
            }
        }
        Ok(Order::Finite(ord))
    }

    pub fn eval_word(&self, w: &Word) -> Element {
        w.0.iter().fold(Element::identity(), |acc, (letter, e)| {
            let g = match letter {
                Letter::A => self.normalize_raw(e.clone(), BigInt::zero(), BigInt::zero()),
                Letter::C => self.normalize_raw(BigInt::zero(), e.clone(), BigInt::zero()),
                Letter::B => self.normalize_raw(BigInt::zero(), BigInt::zero(), e.clone()),
            };
            self.multiply(&acc, &g)
        })
    }

    /// Parses and evaluates a word left to right.
    pub fn parse(&self, text: &str) -> Result<Element> {
        Ok(self.eval_word(&Word::parse(text)?))
    }

    pub fn format(&self, x: &Element) -> String {
        x.to_string()
    }

    /// Image of `x` in `G / <A^modulus>`; a group when `A^modulus` is central.
    pub fn reduce_a_mod(&self, x: &Element, modulus: &BigInt) -> Element {
        Element {
            a: modp(&x.a, modulus),
            c: x.c.clone(),
            b: x.b.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(beta: i64) -> MacdonaldGroup {
        MacdonaldGroup::new(beta).unwrap()
    }

    fn el(grp: &MacdonaldGroup, a: i64, c: i64, b: i64) -> Element {
        grp.element(a, c, b).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let g4 = g(4);
        assert_eq!(g4.normalize(0, 5, -1), el(&g4, 0, 2, 8));
        let g3 = g(3);
        assert_eq!(g3.normalize(0, 2, 0), el(&g3, 0, 0, 2));
        assert!(g3.normalize(0, 0, 0).is_identity());
    }

    #[test]
    fn multiply_examples() {
        let g4 = g(4);
        let (a, b, c) = (g4.gen_a(), g4.gen_b(), g4.gen_c());
        assert_eq!(g4.multiply(&b, &c), el(&g4, 0, 1, 7));
        assert_eq!(g4.multiply(&b, &a), el(&g4, 1, 2, 4));
        assert_eq!(g4.multiply(&a, &g4.identity()), a);
    }

    #[test]
    fn inverse_examples() {
        let g4 = g(4);
        assert_eq!(g4.inverse(&g4.gen_b()), el(&g4, 0, 0, 8));
        assert_eq!(g4.inverse(&g4.gen_c()), el(&g4, 0, 2, 0));
        let g3 = g(3);
        assert_eq!(g3.inverse(&g3.gen_c()), el(&g3, 0, 1, 2));
    }

    #[test]
    fn power_examples() {
        let g4 = g(4);
        assert!(g4.power(&g4.gen_c(), 3).is_identity());
        assert!(g4.power(&g4.gen_b(), 9).is_identity());
        let g5 = g(5);
        assert_eq!(g5.power(&g5.gen_a(), 8), el(&g5, 8, 0, 0));
        let x = el(&g5, 3, 1, 7);
        assert_eq!(g5.power(&x, -3), g5.inverse(&g5.power(&x, 3)));
        assert!(g5.power(&x, 0).is_identity());
    }

    #[test]
    fn conjugation_examples() {
        let g4 = g(4);
        let (a, b) = (g4.gen_a(), g4.gen_b());
        assert_eq!(g4.conjugate(&b, &a), el(&g4, 0, 2, 4));
        assert_eq!(g4.conjugate(&a, &b), el(&g4, 1, 1, 0));
        for beta in [-3, -2, -1, 3, 4, 5, 6, 7] {
            let grp = g(beta);
            assert_eq!(grp.commutator(&grp.gen_a(), &grp.gen_b()), grp.gen_c());
        }
    }

    #[test]
    fn order_examples() {
        let g4 = g(4);
        assert_eq!(g4.order(&g4.gen_b()).unwrap(), Order::Finite(9.into()));
        assert_eq!(g4.order(&g4.gen_c()).unwrap(), Order::Finite(3.into()));
        assert_eq!(g4.order(&g4.gen_a()).unwrap(), Order::Infinite);
        let g3 = g(3);
        assert_eq!(g3.order(&g3.gen_c()).unwrap(), Order::Finite(4.into()));
        assert_eq!(g3.order(&g3.identity()).unwrap(), Order::Finite(1.into()));
    }

    #[test]
    fn order_beyond_factorization_bound() {
        let big = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64) * BigInt::from(1_000_037u64);
        let grp = MacdonaldGroup::new(big + 1).unwrap();
        assert!(matches!(
            grp.order(&grp.gen_b()),
            Err(Error::FactorizationLimit(_))
        ));
        assert_eq!(grp.order(&grp.gen_a()).unwrap(), Order::Infinite);
    }

    #[test]
    fn parse_examples() {
        let g4 = g(4);
        assert_eq!(g4.parse("A^2*C*B^3").unwrap(), el(&g4, 2, 1, 3));
        assert_eq!(g4.parse("B*A").unwrap(), el(&g4, 1, 2, 4));
        assert!(g4.parse("").unwrap().is_identity());
        assert_eq!(g4.format(&g4.parse("B*A").unwrap()), "A*C^2*B^4");
    }

    #[test]
    fn params_mismatch() {
        let g4 = g(4);
        let g7 = g(7);
        let x = g7.element(0, 5, 30).unwrap();
        assert!(matches!(g4.try_multiply(&x, &g4.gen_b()), Err(Error::ParamsMismatch(..))));
        assert!(g4.element(0, 3, 0).is_err());
    }
}
