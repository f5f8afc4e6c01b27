//! The finite quotient `L(β) = G(β) / <A^(β-1)>` for `gcd(β - 1, 6) = 1`.
//!
//! Elements reuse the core normal form with the `A`-exponent reduced modulo `n`; written `a, c, b`
//! for the images of `A, C, B`.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::aut::{aut_group, standard_generators, Automorphism};
use crate::closure::{bfs_closure, ensure_cap};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::MacdonaldGroup;
use crate::ntheory::{euler_phi, is_unit, mod_inverse, modp};

pub type LElement = Element;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LGroup {
    g: MacdonaldGroup,
}

impl LGroup {
    pub fn new(beta: impl Into<BigInt>) -> Result<Self> {
        let g = MacdonaldGroup::new(beta)?;
        let gcd = g.params().n.gcd(&BigInt::from(6));
        if !gcd.is_one() {
            return Err(Error::GcdCondition {
                beta: g.params().beta.clone(),
                gcd,
            });
        }
        Ok(LGroup { g })
    }

    pub fn group(&self) -> &MacdonaldGroup {
        &self.g
    }

    pub fn n(&self) -> &BigInt {
        &self.g.params().n
    }

    pub fn order(&self) -> BigInt {
        self.n().pow(4)
    }

    /// Image of a `G`-element.
    pub fn project(&self, x: &Element) -> LElement {
        self.g.reduce_a_mod(x, self.n())
    }

    pub fn gen_a(&self) -> LElement {
        self.g.gen_a()
    }

    pub fn gen_b(&self) -> LElement {
        self.g.gen_b()
    }

    pub fn gen_c(&self) -> LElement {
        self.g.gen_c()
    }

    pub fn identity(&self) -> LElement {
        self.g.identity()
    }

    pub fn multiply(&self, x: &LElement, y: &LElement) -> LElement {
        self.project(&self.g.multiply(x, y))
    }

    pub fn inverse(&self, x: &LElement) -> LElement {
        self.project(&self.g.inverse(x))
    }

    pub fn power(&self, x: &LElement, k: impl Into<BigInt>) -> LElement {
        self.project(&self.g.power(x, k))
    }

    pub fn conjugate(&self, x: &LElement, h: &LElement) -> LElement {
        self.project(&self.g.conjugate(x, h))
    }

    pub fn commutator(&self, x: &LElement, y: &LElement) -> LElement {
        self.project(&self.g.commutator(x, y))
    }

    pub fn l_order(&self, x: &LElement) -> BigInt {
        let exp = self.n().pow(2);
        let mut ord = exp.clone();
        for (p, _) in crate::ntheory::factorize(&exp).expect("small n") {
            while (&ord % &p).is_zero() && self.power(x, &ord / &p).is_identity() {
                ord /= &p;
            }
        }
        ord
    }

    pub fn elements(&self, cap: u64) -> Result<Vec<LElement>> {
        ensure_cap(&self.order(), cap)?;
        let n = self.n().to_u64().expect("bounded by cap");
        let mut out = Vec::new();
        for a in 0..n {
            for c in 0..n {
                for b in 0..n * n {
                    out.push(self.g.normalize(a, c, b));
                }
            }
        }
        Ok(out)
    }

    pub fn is_central(&self, x: &LElement) -> bool {
        self.commutator(x, &self.gen_a()).is_identity() && self.commutator(x, &self.gen_b()).is_identity()
    }
}

#[derive(Debug, Clone)]
pub struct LAutomorphism {
    img_a: LElement,
    img_b: LElement,
    img_c: LElement,
}

impl PartialEq for LAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.img_a == other.img_a && self.img_b == other.img_b
    }
}

impl Eq for LAutomorphism {}

impl Hash for LAutomorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.img_a.hash(state);
        self.img_b.hash(state);
    }
}

impl fmt::Display for LAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a -> {}, b -> {}",
            self.img_a.to_string().to_lowercase(),
            self.img_b.to_string().to_lowercase()
        )
    }
}

impl LAutomorphism {
    pub fn new(l: &LGroup, img_a: LElement, img_b: LElement) -> Result<Self> {
        let f = Self::unchecked(l, l.project(&img_a), l.project(&img_b));
        if !f.is_valid(l) {
            return Err(Error::InvalidAutomorphism(f.to_string()));
        }
        Ok(f)
    }

    fn unchecked(l: &LGroup, img_a: LElement, img_b: LElement) -> Self {
        let img_c = l.commutator(&img_a, &img_b);
        LAutomorphism { img_a, img_b, img_c }
    }

    pub fn img_a(&self) -> &LElement {
        &self.img_a
    }

    pub fn img_b(&self) -> &LElement {
        &self.img_b
    }

    pub fn identity(l: &LGroup) -> Self {
        Self::unchecked(l, l.gen_a(), l.gen_b())
    }

    pub fn inner(l: &LGroup, x: &LElement) -> Self {
        Self::unchecked(l, l.conjugate(&l.gen_a(), x), l.conjugate(&l.gen_b(), x))
    }

    /// Relations of `L` hold for the images and the induced map on `L/γ₂(L) = (ℤ/n)²` is onto.
    pub fn is_valid(&self, l: &LGroup) -> bool {
        let (a, b) = (&self.img_a, &self.img_b);
        let n = l.n();
        let ab = l.commutator(a, b);
        let ba = l.commutator(b, a);
        let det = &a.a * &b.b - &a.b * &b.a;
        l.conjugate(a, &ab) == *a
            && l.conjugate(b, &ba) == l.power(b, l.g.params().beta.clone())
            && l.power(a, n.clone()).is_identity()
            && is_unit(&modp(&det, n), n)
    }

    pub fn apply(&self, l: &LGroup, x: &LElement) -> LElement {
        let a = l.power(&self.img_a, x.a.clone());
        let c = l.power(&self.img_c, x.c.clone());
        let b = l.power(&self.img_b, x.b.clone());
        l.multiply(&l.multiply(&a, &c), &b)
    }

    /// `self` then `other`.
    pub fn then(&self, l: &LGroup, other: &Self) -> Self {
        Self::unchecked(l, other.apply(l, &self.img_a), other.apply(l, &self.img_b))
    }

    pub fn is_identity(&self, l: &LGroup) -> bool {
        self.img_a == l.gen_a() && self.img_b == l.gen_b()
    }
}

/// `Ψ: a ↦ a, b ↦ ab`.
pub fn psi(l: &LGroup) -> LAutomorphism {
    LAutomorphism::unchecked(l, l.gen_a(), l.multiply(&l.gen_a(), &l.gen_b()))
}

/// `Δ₂: a ↦ a b^(β-1), b ↦ b`.
pub fn l_delta2(l: &LGroup) -> LAutomorphism {
    let a = l.multiply(&l.gen_a(), &l.power(&l.gen_b(), l.g.params().beta_minus_one()));
    LAutomorphism::unchecked(l, a, l.gen_b())
}

/// `μ_i: a ↦ a^i, b ↦ b^j` with `i j ≡ 1 mod n²`; returns `j` too.
pub fn mu(l: &LGroup, i: &BigInt) -> Result<(LAutomorphism, BigInt)> {
    let n2 = &l.g.params().n2;
    let j = mod_inverse(i, n2).ok_or_else(|| Error::NotAUnit {
        i: i.clone(),
        n: l.n().clone(),
    })?;
    let f = LAutomorphism::unchecked(l, l.power(&l.gen_a(), i.clone()), l.power(&l.gen_b(), j.clone()));
    Ok((f, j))
}

#[derive(Debug, Clone)]
pub struct LGenerators {
    pub psi: LAutomorphism,
    pub delta2: LAutomorphism,
    /// `(i, μ_i)` for the units `i` in `[1, n)`.
    pub mu: Vec<(BigInt, LAutomorphism)>,
    pub inner_a: LAutomorphism,
    pub inner_b: LAutomorphism,
    pub inner_c: LAutomorphism,
}

impl LGenerators {
    pub fn to_vec(&self) -> Vec<LAutomorphism> {
        let mut out = vec![self.psi.clone(), self.delta2.clone()];
        out.extend(self.mu.iter().map(|(_, f)| f.clone()));
        out.extend([self.inner_a.clone(), self.inner_b.clone(), self.inner_c.clone()]);
        out
    }
}

pub fn l_generators(l: &LGroup) -> Result<LGenerators> {
    let n = l.n().to_u64().ok_or_else(|| Error::CapExceeded {
        required: l.n().clone(),
        cap: u64::MAX,
    })?;
    let mut mus = Vec::new();
    for i in 1..n {
        let i = BigInt::from(i);
        if is_unit(&i, l.n()) {
            let (f, _) = mu(l, &i)?;
            mus.push((i, f));
        }
    }
    Ok(LGenerators {
        psi: psi(l),
        delta2: l_delta2(l),
        mu: mus,
        inner_a: LAutomorphism::inner(l, &l.gen_a()),
        inner_b: LAutomorphism::inner(l, &l.gen_b()),
        inner_c: LAutomorphism::inner(l, &l.gen_c()),
    })
}

pub fn l_aut_group(l: &LGroup, cap: u64) -> Result<Vec<LAutomorphism>> {
    let n = l.n();
    ensure_cap(&(euler_phi(n)? * n.pow(5)), cap)?;
    let gens = l_generators(l)?.to_vec();
    let mut all = bfs_closure(LAutomorphism::identity(l), &gens, cap, |x, y| x.then(l, y))?;
    all.sort_by_cached_key(|f| (f.img_a.to_string(), f.img_b.to_string()));
    Ok(all)
}

/// `Inn(L) × <Δ₂>`.
pub fn aut2(l: &LGroup, cap: u64) -> Result<Vec<LAutomorphism>> {
    let g = l_generators(l)?;
    bfs_closure(
        LAutomorphism::identity(l),
        &[g.inner_a, g.inner_b, g.inner_c, g.delta2],
        cap,
        |x, y| x.then(l, y),
    )
}

pub fn inn(l: &LGroup, cap: u64) -> Result<Vec<LAutomorphism>> {
    let g = l_generators(l)?;
    bfs_closure(
        LAutomorphism::identity(l),
        &[g.inner_a, g.inner_b, g.inner_c],
        cap,
        |x, y| x.then(l, y),
    )
}

pub type Mat2 = [[BigInt; 2]; 2];

pub fn mat2_mul(p: &Mat2, q: &Mat2, n: &BigInt) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| modp(&(&p[i][0] * &q[0][j] + &p[i][1] * &q[1][j]), n)))
}

pub fn mat2_identity(n: &BigInt) -> Mat2 {
    [
        [modp(&BigInt::one(), n), BigInt::zero()],
        [BigInt::zero(), modp(&BigInt::one(), n)],
    ]
}

/// Action on `L / Z₂(L)`, `Z₂(L) = <b^(β-1), c>`, over the basis of cosets of `a` and `b`; row `k`
/// holds the coordinates of the image of the `k`-th basis vector.
pub fn omega_matrix(l: &LGroup, f: &LAutomorphism) -> Result<Mat2> {
    if !f.is_valid(l) {
        return Err(Error::InvalidAutomorphism(f.to_string()));
    }
    let n = l.n();
    let row = |x: &LElement| [modp(&x.a, n), modp(&x.b, n)];
    Ok([row(&f.img_a), row(&f.img_b)])
}

/// Image of an automorphism of `G` under `τ: Aut(G) → Aut(L)`.
pub fn tau_embed(l: &LGroup, f: &Automorphism) -> LAutomorphism {
    LAutomorphism::unchecked(l, l.project(f.img_a()), l.project(f.img_b()))
}

/// Every standard generator of `Aut(G)` sends `A^(β-1)` to `A^(±(β-1))`.
pub fn k_characteristic_check(l: &LGroup) -> bool {
    let g = &l.g;
    let bm1 = g.params().beta_minus_one();
    let k = g.power(&g.gen_a(), bm1.clone());
    let k_inv = g.inverse(&k);
    standard_generators(g)
        .to_vec()
        .iter()
        .all(|f| {
            let img = crate::aut::apply(g, f, &k);
            img == k || img == k_inv
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LStructureReport {
    pub order: BigInt,
    pub center_size: usize,
    /// `Z(L) = <b^(β-1)>`.
    pub center_matches: bool,
    /// `(ab)^(β-1) = b^(β-1)`.
    pub psi_identity: bool,
    pub k_characteristic: bool,
    pub aut_order: usize,
    pub inn_order: usize,
    pub aut2_order: usize,
    pub kernel_omega_is_aut2: bool,
    pub omega_image_order: usize,
    pub v_conjugation: bool,
    pub tau_injective: bool,
    pub tau_image_order: usize,
}

pub fn l_structure_report(l: &LGroup, cap: u64) -> Result<LStructureReport> {
    let n = l.n().clone();
    let elems = l.elements(cap)?;
    let center: HashSet<LElement> = elems.iter().filter(|x| l.is_central(x)).cloned().collect();
    let b_n = l.power(&l.gen_b(), l.g.params().beta_minus_one());
    let z_span: HashSet<LElement> = bfs_closure(l.identity(), std::slice::from_ref(&b_n), cap, |x, y| l.multiply(x, y))?
        .into_iter()
        .collect();
    let ab = l.multiply(&l.gen_a(), &l.gen_b());
    let psi_identity = l.power(&ab, l.g.params().beta_minus_one()) == b_n;

    let all = l_aut_group(l, cap)?;
    let inner = inn(l, cap)?;
    let a2: HashSet<LAutomorphism> = aut2(l, cap)?.into_iter().collect();
    let id = mat2_identity(&n);
    let mut kernel = HashSet::new();
    let mut image = HashSet::new();
    for f in &all {
        let m = omega_matrix(l, f)?;
        if m == id {
            kernel.insert(f.clone());
        }
        image.insert(m);
    }
    let gens = l_generators(l)?;
    let v = omega_matrix(l, &gens.psi)?;
    let v_conjugation = gens.mu.iter().all(|(i, f)| {
        let u = omega_matrix(l, f).expect("valid");
        let u_inv = omega_matrix(l, &mu(l, &mod_inverse(i, &n).expect("unit")).expect("unit").0)
            .expect("valid");
        let lhs = mat2_mul(&mat2_mul(&u_inv, &v, &n), &u, &n);
        let mut rhs = id.clone();
        let e = (i * i).to_u64().expect("small");
        for _ in 0..e {
            rhs = mat2_mul(&rhs, &v, &n);
        }
        lhs == rhs
    });
    let g_auts = aut_group(&l.g, cap)?;
    let tau: HashSet<LAutomorphism> = g_auts.iter().map(|f| tau_embed(l, f)).collect();
    let all_set: HashSet<&LAutomorphism> = all.iter().collect();
    Ok(LStructureReport {
        order: l.order(),
        center_size: center.len(),
        center_matches: center == z_span,
        psi_identity,
        k_characteristic: k_characteristic_check(l),
        aut_order: all.len(),
        inn_order: inner.len(),
        aut2_order: a2.len(),
        kernel_omega_is_aut2: kernel == a2,
        omega_image_order: image.len(),
        v_conjugation,
        tau_injective: tau.len() == g_auts.len() && tau.iter().all(|f| all_set.contains(f)),
        tau_image_order: tau.len(),
    })
}
