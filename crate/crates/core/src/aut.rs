//! Automorphisms of `G(beta)`, recorded by the images of `A` and `B`.
//!
//! Composition reads left to right: `compose(f, g)` applies `f` first, so `x^(fg) = (x^f)^g`, and
//! `inner(g)` is `x ↦ g⁻¹ x g`. Every automorphism factors as `Δ₁^eps ∘ inner(g) ∘ Δ₂^k`.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::closure::{bfs_closure, ensure_cap};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::MacdonaldGroup;
use crate::ntheory::{is_unit, mod_inverse, modp, primitive_root, valuation};
use crate::structure::center_representative;
use crate::torsion::sylow_generators;

#[derive(Debug, Clone)]
pub struct Automorphism {
    img_a: Element,
    img_b: Element,
    img_c: Element,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.img_a == other.img_a && self.img_b == other.img_b
    }
}

impl Eq for Automorphism {}

impl Hash for Automorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.img_a.hash(state);
        self.img_b.hash(state);
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A -> {}, B -> {}", self.img_a, self.img_b)
    }
}

impl Automorphism {
    /// Validates the images and builds the automorphism.
    pub fn new(g: &MacdonaldGroup, img_a: Element, img_b: Element) -> Result<Self> {
        let cert = is_valid_automorphism(g, &img_a, &img_b);
        if !cert.valid() {
            return Err(Error::InvalidAutomorphism(cert.failure()));
        }
        Ok(Self::unchecked(g, img_a, img_b))
    }

    fn unchecked(g: &MacdonaldGroup, img_a: Element, img_b: Element) -> Self {
        let img_c = g.commutator(&img_a, &img_b);
        Automorphism { img_a, img_b, img_c }
    }

    pub fn img_a(&self) -> &Element {
        &self.img_a
    }

    pub fn img_b(&self) -> &Element {
        &self.img_b
    }

    pub fn img_c(&self) -> &Element {
        &self.img_c
    }

    pub fn identity(g: &MacdonaldGroup) -> Self {
        Self::unchecked(g, g.gen_a(), g.gen_b())
    }

    pub fn inner(g: &MacdonaldGroup, x: &Element) -> Self {
        Self::unchecked(g, g.conjugate(&g.gen_a(), x), g.conjugate(&g.gen_b(), x))
    }

    /// `A ↦ A⁻¹, B ↦ B⁻¹`.
    pub fn delta1(g: &MacdonaldGroup) -> Self {
        Self::unchecked(g, g.inverse(&g.gen_a()), g.inverse(&g.gen_b()))
    }

    /// `A ↦ A B^(β-1), B ↦ B`.
    pub fn delta2(g: &MacdonaldGroup) -> Self {
        let a = g.multiply(&g.gen_a(), &g.power(&g.gen_b(), g.params().beta_minus_one()));
        Self::unchecked(g, a, g.gen_b())
    }

    pub fn is_identity(&self, g: &MacdonaldGroup) -> bool {
        self.img_a == g.gen_a() && self.img_b == g.gen_b()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardGenerators {
    pub delta1: Automorphism,
    pub delta2: Automorphism,
    pub inner_a: Automorphism,
    pub inner_b: Automorphism,
    pub inner_c: Automorphism,
}

impl StandardGenerators {
    pub fn to_vec(&self) -> Vec<Automorphism> {
        vec![
            self.delta1.clone(),
            self.delta2.clone(),
            self.inner_a.clone(),
            self.inner_b.clone(),
            self.inner_c.clone(),
        ]
    }
}

pub fn standard_generators(g: &MacdonaldGroup) -> StandardGenerators {
    StandardGenerators {
        delta1: Automorphism::delta1(g),
        delta2: Automorphism::delta2(g),
        inner_a: Automorphism::inner(g, &g.gen_a()),
        inner_b: Automorphism::inner(g, &g.gen_b()),
        inner_c: Automorphism::inner(g, &g.gen_c()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityCertificate {
    /// `img_a = A^(±1) t` and `img_b` torsion.
    pub shape: bool,
    pub relation_a: bool,
    pub relation_b: bool,
    pub surjective_on_t: bool,
}

impl ValidityCertificate {
    pub fn valid(&self) -> bool {
        self.shape && self.relation_a && self.relation_b && self.surjective_on_t
    }

    pub fn failure(&self) -> String {
        let mut out = Vec::new();
        if !self.shape {
            out.push("A must map to A^(+-1) times torsion and B to torsion");
        }
        if !self.relation_a {
            out.push("relation A^[A,B] = A fails");
        }
        if !self.relation_b {
            out.push("relation B^[B,A] = B^beta fails");
        }
        if !self.surjective_on_t {
            out.push("images of B and C do not generate the torsion subgroup");
        }
        out.join("; ")
    }
}

/// Checks the defining relations on the images and that the induced map on `T` is onto.
///
/// `T → (ℤ/n)²`, `C^c B^b ↦ (c, b) mod n` is a homomorphism with kernel `T' = <B^n>`, so two
/// elements generate `T` exactly when their images have unit determinant.
pub fn is_valid_automorphism(
    g: &MacdonaldGroup,
    img_a: &Element,
    img_b: &Element,
) -> ValidityCertificate {
    let p = g.params();
    let shape = img_a.a.abs().is_one() && img_b.is_torsion() && g.contains(img_a) && g.contains(img_b);
    if !shape {
        return ValidityCertificate {
            shape,
            relation_a: false,
            relation_b: false,
            surjective_on_t: false,
        };
    }
    let ab = g.commutator(img_a, img_b);
    let ba = g.commutator(img_b, img_a);
    let relation_a = g.conjugate(img_a, &ab) == *img_a;
    let relation_b = g.conjugate(img_b, &ba) == g.power(img_b, p.beta.clone());
    let det = &img_b.c * &ab.b - &img_b.b * &ab.c;
    let surjective_on_t = is_unit(&modp(&det, &p.n), &p.n);
    ValidityCertificate {
        shape,
        relation_a,
        relation_b,
        surjective_on_t,
    }
}

pub fn apply(g: &MacdonaldGroup, f: &Automorphism, x: &Element) -> Element {
    let a_part = g.power(&f.img_a, x.a.clone());
    let c_part = g.power(&f.img_c, x.c.clone());
    let b_part = g.power(&f.img_b, x.b.clone());
    g.multiply(&g.multiply(&a_part, &c_part), &b_part)
}

/// `f` then `h`.
pub fn compose(g: &MacdonaldGroup, f: &Automorphism, h: &Automorphism) -> Automorphism {
    Automorphism::unchecked(g, apply(g, h, &f.img_a), apply(g, h, &f.img_b))
}

pub fn aut_power(g: &MacdonaldGroup, f: &Automorphism, k: u64) -> Automorphism {
    (0..k).fold(Automorphism::identity(g), |acc, _| compose(g, &acc, f))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub eps: u8,
    /// Canonical representative modulo the center.
    pub g: Element,
    pub k: BigInt,
}

/// Writes `f = Δ₁^eps ∘ inner(g) ∘ Δ₂^k`.
///
/// Strip the sign with `Δ₁`. What remains is `inner(A^x C^y B^z) ∘ Δ₂^k`, and `Δ₂` fixes `T`
/// pointwise. `C ↦ C B^(z(β-1))` gives `z`; after removing `B^z`, `B ↦ C^(-x) B^(...)` gives `x`;
/// after removing `A^x`, `B ↦ B^(1 - y(β-1))` gives `y`; finally `A ↦ A B^(k(β-1))`.
pub fn decompose(g: &MacdonaldGroup, f: &Automorphism) -> Result<Decomposition> {
    let p = g.params();
    let n = &p.n;
    let bm1 = p.beta_minus_one();
    let invalid = || Error::InvalidAutomorphism(f.to_string());
    let eps: u8 = if f.img_a.a.is_negative() { 1 } else { 0 };
    let mut rest = if eps == 1 {
        compose(g, &Automorphism::delta1(g), f)
    } else {
        f.clone()
    };
    if !rest.img_a.a.is_one() {
        return Err(invalid());
    }
    let exact_div = |num: &BigInt| -> Result<BigInt> {
        let (q, r) = num.div_mod_floor(&bm1);
        if r.is_zero() {
            Ok(modp(&q, n))
        } else {
            Err(invalid())
        }
    };
    if !rest.img_c.c.is_one() || !rest.img_c.a.is_zero() {
        return Err(invalid());
    }
    let z = exact_div(&rest.img_c.b)?;
    rest = compose(g, &rest, &Automorphism::inner(g, &g.normalize(0, 0, -&z)));
    let x = modp(&-&rest.img_b.c, n);
    rest = compose(g, &rest, &Automorphism::inner(g, &g.normalize(-&x, 0, 0)));
    if !rest.img_b.c.is_zero() {
        return Err(invalid());
    }
    let y = exact_div(&(1 - &rest.img_b.b))?;
    rest = compose(g, &rest, &Automorphism::inner(g, &g.normalize(0, -&y, 0)));
    if rest.img_b != g.gen_b() || !rest.img_a.c.is_zero() {
        return Err(invalid());
    }
    let k = exact_div(&rest.img_a.b)?;
    let conj = center_representative(g, &g.normalize(x, y, z));
    let d = Decomposition { eps, g: conj, k };
    if recompose(g, &d) != *f {
        return Err(invalid());
    }
    Ok(d)
}

pub fn recompose(g: &MacdonaldGroup, d: &Decomposition) -> Automorphism {
    let tail = compose(g, &Automorphism::inner(g, &d.g), &delta2_power(g, &d.k));
    if d.eps == 1 {
        compose(g, &Automorphism::delta1(g), &tail)
    } else {
        tail
    }
}

/// `Δ₂^k: A ↦ A B^(k(β-1))`.
pub fn delta2_power(g: &MacdonaldGroup, k: &BigInt) -> Automorphism {
    let a = g.multiply(&g.gen_a(), &g.power(&g.gen_b(), k * g.params().beta_minus_one()));
    Automorphism::unchecked(g, a, g.gen_b())
}

pub fn aut_invert(g: &MacdonaldGroup, f: &Automorphism) -> Result<Automorphism> {
    let d = decompose(g, f)?;
    let back = compose(
        g,
        &delta2_power(g, &-&d.k),
        &Automorphism::inner(g, &g.inverse(&d.g)),
    );
    Ok(if d.eps == 1 {
        compose(g, &back, &Automorphism::delta1(g))
    } else {
        back
    })
}

/// Closure of the standard generators, sorted by formatted images.
pub fn aut_group(g: &MacdonaldGroup, cap: u64) -> Result<Vec<Automorphism>> {
    let n = &g.params().n;
    let n4 = n * n * n * n;
    ensure_cap(&(&n4 * 2), cap)?;
    let gens = standard_generators(g).to_vec();
    let mut all = bfs_closure(Automorphism::identity(g), &gens, cap, |x, y| compose(g, x, y))?;
    all.sort_by_cached_key(|f| (f.img_a.to_string(), f.img_b.to_string()));
    Ok(all)
}

/// A square matrix over `ℤ/modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutMatrix {
    pub dimension: usize,
    pub modulus: BigInt,
    pub entries: Vec<Vec<BigInt>>,
}

impl AutMatrix {
    pub fn identity(dimension: usize, modulus: &BigInt) -> Self {
        let entries = (0..dimension)
            .map(|i| {
                (0..dimension)
                    .map(|j| modp(&BigInt::from((i == j) as u8), modulus))
                    .collect()
            })
            .collect();
        AutMatrix {
            dimension,
            modulus: modulus.clone(),
            entries,
        }
    }

    /// `t_(i,j) = I + e_(i,j)`, 1-based.
    pub fn transvection(dimension: usize, modulus: &BigInt, i: usize, j: usize) -> Self {
        let mut m = Self::identity(dimension, modulus);
        m.entries[i - 1][j - 1] = modp(&BigInt::one(), modulus);
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dimension;
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let s: BigInt = (0..d).map(|k| &self.entries[i][k] * &other.entries[k][j]).sum();
                        modp(&s, &self.modulus)
                    })
                    .collect()
            })
            .collect();
        AutMatrix {
            dimension: d,
            modulus: self.modulus.clone(),
            entries,
        }
    }

    pub fn pow(&self, k: &BigInt) -> Self {
        let mut k = k.clone();
        let mut base = self.clone();
        let mut acc = Self::identity(self.dimension, &self.modulus);
        while k.is_positive() {
            if k.is_odd() {
                acc = acc.mul(&base);
            }
            k >>= 1usize;
            base = base.mul(&base);
        }
        acc
    }

    /// The shape `[[1, a, c, d], [0, s, b, 0], [0, 0, 1, 0], [0, 0, 0, 1]]` with `s = ±1`.
    pub fn has_standard_shape(&self) -> bool {
        if self.dimension != 4 {
            return false;
        }
        let m = &self.modulus;
        let one = modp(&BigInt::one(), m);
        let minus = modp(&-BigInt::one(), m);
        let e = &self.entries;
        let fixed = [
            (0, 0, &one),
            (1, 0, &BigInt::zero()),
            (1, 3, &BigInt::zero()),
            (2, 0, &BigInt::zero()),
            (2, 1, &BigInt::zero()),
            (2, 2, &one),
            (2, 3, &BigInt::zero()),
            (3, 0, &BigInt::zero()),
            (3, 1, &BigInt::zero()),
            (3, 2, &BigInt::zero()),
            (3, 3, &one),
        ];
        fixed.iter().all(|(i, j, v)| &e[*i][*j] == *v) && (e[1][1] == one || e[1][1] == minus)
    }
}

impl fmt::Display for AutMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Images of `Δ₁`-side, `Aδ`, `Bδ`, `Δ₂` in the matrix model; the fifth is `Δ₁ ∘ (BC)δ` in the
/// quaternion case, where `Δ₁` itself is not a generator.
fn matrix_generators(g: &MacdonaldGroup) -> (AutMatrix, AutMatrix, AutMatrix, AutMatrix) {
    let p = g.params();
    let n = &p.n;
    if p.is_q8_case() {
        let t = |i, j| AutMatrix::transvection(5, n, i, j);
        // Aδ has order 4 here, so it goes to t12 t23 rather than t12
        return (t(1, 5), t(1, 2).mul(&t(2, 3)), t(2, 3), t(1, 4));
    }
    let t = |i, j| AutMatrix::transvection(4, n, i, j);
    let mut d = AutMatrix::identity(4, n);
    d.entries[1][1] = modp(&-BigInt::one(), n);
    if p.beta_even {
        (d, t(1, 2), t(2, 3), t(1, 4))
    } else {
        (d.mul(&t(2, 3)), t(1, 2).mul(&t(2, 3)), t(2, 3), t(1, 4))
    }
}

/// Image of `f` in `GL₄(ℤ/n)`, or in `GL₅(ℤ/2)` when `β ∈ {-1, 3}`.
pub fn matrix_of(g: &MacdonaldGroup, f: &Automorphism) -> Result<AutMatrix> {
    let d = decompose(g, f)?;
    let (first, x, y, u) = matrix_generators(g);
    let mut conj = d.g.clone();
    if g.params().is_q8_case() && d.eps == 1 {
        // Δ₁ = κ ∘ inner((BC)⁻¹) with κ = Δ₁ ∘ (BC)δ
        let bc = g.multiply(&g.gen_b(), &g.gen_c());
        conj = center_representative(g, &g.multiply(&g.inverse(&bc), &conj));
    }
    let size = first.dimension;
    let n = &g.params().n;
    let xc = AutMatrix::transvection(size, n, 1, 3);
    let inner = x.pow(&conj.a).mul(&xc.pow(&conj.c)).mul(&y.pow(&modp(&conj.b, n)));
    let head = if d.eps == 1 {
        first
    } else {
        AutMatrix::identity(size, n)
    };
    Ok(head.mul(&inner).mul(&u.pow(&d.k)))
}

/// `κ = Δ₁ ∘ inner(BC)`, the extra generator of the restriction kernel when `β ∈ {-1, 3}`.
pub fn kappa(g: &MacdonaldGroup) -> Automorphism {
    let bc = g.multiply(&g.gen_b(), &g.gen_c());
    compose(g, &Automorphism::delta1(g), &Automorphism::inner(g, &bc))
}

/// An endomorphism of `T = <B, C>` by the images of `B` and `C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TAutomorphism {
    pub img_b_t: Element,
    pub img_c_t: Element,
}

impl fmt::Display for TAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B -> {}, C -> {}", self.img_b_t, self.img_c_t)
    }
}

impl TAutomorphism {
    pub fn identity(g: &MacdonaldGroup) -> Self {
        TAutomorphism {
            img_b_t: g.gen_b(),
            img_c_t: g.gen_c(),
        }
    }

    pub fn apply(&self, g: &MacdonaldGroup, x: &Element) -> Element {
        g.multiply(
            &g.power(&self.img_c_t, x.c.clone()),
            &g.power(&self.img_b_t, x.b.clone()),
        )
    }

    /// `self` then `other`.
    pub fn then(&self, g: &MacdonaldGroup, other: &Self) -> Self {
        TAutomorphism {
            img_b_t: other.apply(g, &self.img_b_t),
            img_c_t: other.apply(g, &self.img_c_t),
        }
    }

    /// Relations `B^(n²) = 1`, `C^n = B^(n²/2)` or `1`, `B^C = B^(2-β)`, and bijectivity.
    pub fn is_valid(&self, g: &MacdonaldGroup) -> bool {
        let p = g.params();
        let (b, c) = (&self.img_b_t, &self.img_c_t);
        if !b.is_torsion() || !c.is_torsion() {
            return false;
        }
        let c_n = match &p.half {
            Some(h) => g.power(b, h.clone()),
            None => g.identity(),
        };
        let det = &b.b * &c.c - &b.c * &c.b;
        g.power(b, p.n2.clone()).is_identity()
            && g.power(c, p.n.clone()) == c_n
            && g.conjugate(b, c) == g.power(b, p.beta0.clone())
            && is_unit(&modp(&det, &p.n), &p.n)
    }
}

pub fn restrict(_g: &MacdonaldGroup, f: &Automorphism) -> TAutomorphism {
    TAutomorphism {
        img_b_t: f.img_b.clone(),
        img_c_t: f.img_c.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionReport {
    pub kernel: Vec<Automorphism>,
    pub image_size: usize,
    pub aut_order: usize,
}

/// Kernel and image of `Λ: Aut(G) → Aut(T)` computed over the full automorphism group.
pub fn restriction_kernel(g: &MacdonaldGroup, cap: u64) -> Result<RestrictionReport> {
    let all = aut_group(g, cap)?;
    let id = TAutomorphism::identity(g);
    let kernel: Vec<Automorphism> = all.iter().filter(|f| restrict(g, f) == id).cloned().collect();
    let image: std::collections::HashSet<TAutomorphism> = all.iter().map(|f| restrict(g, f)).collect();
    Ok(RestrictionReport {
        kernel,
        image_size: image.len(),
        aut_order: all.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcGenerators {
    pub p: BigInt,
    pub m: u32,
    /// `β = 1 - p^m r`.
    pub r: BigInt,
    /// `r s ≡ 1 mod p^m`.
    pub s: BigInt,
    /// Primitive root modulo `p^m` used by `a`.
    pub i: BigInt,
    pub a: TAutomorphism,
    pub b: TAutomorphism,
    pub c: TAutomorphism,
    pub d: TAutomorphism,
}

impl BcGenerators {
    /// `b, c, a^(p^(m-1)(p-1)/2)`.
    pub fn extending_generators(&self, g: &MacdonaldGroup) -> Vec<TAutomorphism> {
        let e: BigInt = self.p.pow(self.m - 1) * (&self.p - 1) / 2;
        let e = e.to_u64().expect("small exponent");
        let a_pow = (0..e).fold(TAutomorphism::identity(g), |acc, _| acc.then(g, &self.a));
        vec![self.b.clone(), self.c.clone(), a_pow]
    }
}

/// Automorphisms `a_p, b_p, c_p, d_p` of `T_p` extended by the identity on the other Sylow factors:
/// with `x = B_p`, `y = C_p^s`: `x^a = x^i`, `y^b = x^(p^m) y`, `x^c = x y`, `y^d = y^(1+p^m)`.
pub fn bc_generators(g: &MacdonaldGroup, prime: &BigInt) -> Result<BcGenerators> {
    let params = g.params();
    if !params.beta_even {
        return Err(Error::BetaNotEven(params.beta.clone()));
    }
    if *prime == BigInt::from(2) || prime <= &BigInt::one() || !(&params.n % prime).is_zero() {
        return Err(Error::PrimeNotDividing {
            p: prime.clone(),
            n: params.n.clone(),
        });
    }
    let m = valuation(&params.n, prime);
    let pm = prime.pow(m);
    let r = (1 - &params.beta) / &pm;
    let s = mod_inverse(&r, &pm).expect("p does not divide r");
    let i: BigInt = primitive_root(prime.to_u64().expect("prime fits u64"), m)
        .expect("odd prime powers have primitive roots")
        .into();
    let (bp, cp) = sylow_generators(g, prime)?;
    let b_rest = g.multiply(&g.gen_b(), &g.inverse(&bp));
    let c_rest = g.multiply(&g.gen_c(), &g.inverse(&cp));
    let x = bp.clone();
    let y = g.power(&cp, s.clone());
    // C_p = y^r
    let new_c = |y_img: &Element| g.multiply(&g.power(y_img, r.clone()), &c_rest);
    let new_b = |x_img: &Element| g.multiply(x_img, &b_rest);
    let a = TAutomorphism {
        img_b_t: new_b(&g.power(&x, i.clone())),
        img_c_t: g.gen_c(),
    };
    let b = TAutomorphism {
        img_b_t: g.gen_b(),
        img_c_t: new_c(&g.multiply(&g.power(&x, pm.clone()), &y)),
    };
    let c = TAutomorphism {
        img_b_t: new_b(&g.multiply(&x, &y)),
        img_c_t: g.gen_c(),
    };
    let d = TAutomorphism {
        img_b_t: g.gen_b(),
        img_c_t: new_c(&g.power(&y, &pm + 1)),
    };
    Ok(BcGenerators {
        p: prime.clone(),
        m,
        r,
        s,
        i,
        a,
        b,
        c,
        d,
    })
}

/// The subgroup `<b_p, c_p, a_p^(p^(m-1)(p-1)/2)>` of automorphisms of `T` that extend to `G`.
pub fn extending_subgroup(g: &MacdonaldGroup, gens: &BcGenerators, cap: u64) -> Result<Vec<TAutomorphism>> {
    bfs_closure(
        TAutomorphism::identity(g),
        &gens.extending_generators(g),
        cap,
        |u, v| u.then(g, v),
    )
}

pub fn extends_to_g(g: &MacdonaldGroup, t: &TAutomorphism, prime: &BigInt, cap: u64) -> Result<bool> {
    let gens = bc_generators(g, prime)?;
    Ok(extending_subgroup(g, &gens, cap)?.contains(t))
}
