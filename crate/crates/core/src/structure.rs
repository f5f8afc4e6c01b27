//! Center, lower central series and the quotient `G/Z ≅ H(ℤ/nℤ)`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::closure::{bfs_closure, ensure_cap};
use crate::element::Element;
use crate::error::Result;
use crate::group::MacdonaldGroup;
use crate::ntheory::modp;
use crate::oracle::FiniteGroupTable;

pub fn is_central(g: &MacdonaldGroup, x: &Element) -> bool {
    g.commutator(x, &g.gen_a()).is_identity() && g.commutator(x, &g.gen_b()).is_identity()
}

/// `{A^(β-1), B^(β-1)}` for even beta, `{B^(β-1), A^(β-1) C^((β-1)/2)}` for odd beta.
pub fn center_generators(g: &MacdonaldGroup) -> Vec<Element> {
    let bm1 = g.params().beta_minus_one();
    let b_part = g.power(&g.gen_b(), bm1.clone());
    if g.params().beta_even {
        vec![g.normalize(bm1, 0, 0), b_part]
    } else {
        let half = &bm1 / 2;
        vec![b_part, g.normalize(bm1, half, 0)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerCentralSeries {
    /// `γ₂ = <C, B^(β-1)>`.
    pub gamma2: Vec<Element>,
    /// `γ₃ = <B^(β-1)>`.
    pub gamma3: Vec<Element>,
    pub gamma3_order: BigInt,
    /// `γ₃` is nontrivial, central, and `[γ₂, G] = γ₃`.
    pub class_three: bool,
}

pub fn lower_central_series(g: &MacdonaldGroup) -> Result<LowerCentralSeries> {
    let b_n = g.power(&g.gen_b(), g.params().beta_minus_one());
    let gamma2 = vec![g.gen_c(), b_n.clone()];
    let gamma3 = vec![b_n.clone()];
    let gamma3_order = match g.order(&b_n)? {
        crate::Order::Finite(k) => k,
        crate::Order::Infinite => unreachable!("B has finite order"),
    };
    // [C, A] = 1 and [C, B] ∈ <B^(β-1)> generates it; [B^(β-1), s] = 1
    let cb = g.commutator(&g.gen_c(), &g.gen_b());
    let generates = (cb.b.gcd(&g.params().n2) == g.params().n) && cb.c.is_zero();
    let class_three = !b_n.is_identity()
        && is_central(g, &b_n)
        && g.commutator(&g.gen_c(), &g.gen_a()).is_identity()
        && generates;
    Ok(LowerCentralSeries {
        gamma2,
        gamma3,
        gamma3_order,
        class_three,
    })
}

/// `x^x_exp y^y_exp z^z_exp` in `H(ℤ/nℤ)` with `[x, y] = z` central.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeisElement {
    pub x_exp: BigInt,
    pub y_exp: BigInt,
    pub z_exp: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heisenberg {
    pub n: BigInt,
}

impl Heisenberg {
    pub fn new(n: BigInt) -> Self {
        Heisenberg { n }
    }

    pub fn element(&self, x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> HeisElement {
        HeisElement {
            x_exp: modp(&x.into(), &self.n),
            y_exp: modp(&y.into(), &self.n),
            z_exp: modp(&z.into(), &self.n),
        }
    }

    pub fn identity(&self) -> HeisElement {
        self.element(0, 0, 0)
    }

    pub fn x(&self) -> HeisElement {
        self.element(1, 0, 0)
    }

    pub fn y(&self) -> HeisElement {
        self.element(0, 1, 0)
    }

    pub fn z(&self) -> HeisElement {
        self.element(0, 0, 1)
    }

    /// `y^b x^a = x^a y^b z^(-ab)`.
    pub fn mul(&self, u: &HeisElement, v: &HeisElement) -> HeisElement {
        self.element(
            &u.x_exp + &v.x_exp,
            &u.y_exp + &v.y_exp,
            &u.z_exp + &v.z_exp - &v.x_exp * &u.y_exp,
        )
    }

    pub fn inverse(&self, u: &HeisElement) -> HeisElement {
        self.element(-&u.x_exp, -&u.y_exp, -(&u.x_exp * &u.y_exp) - &u.z_exp)
    }

    pub fn pow(&self, u: &HeisElement, k: u64) -> HeisElement {
        (0..k).fold(self.identity(), |acc, _| self.mul(&acc, u))
    }

    pub fn commutator(&self, u: &HeisElement, v: &HeisElement) -> HeisElement {
        let uv = self.mul(u, v);
        let vu = self.mul(v, u);
        self.mul(&self.inverse(&vu), &uv)
    }

    /// Unitriangular model: `x^i y^j z^k ↦ [[1, i, k + ij], [0, 1, j], [0, 0, 1]]`.
    pub fn to_matrix(&self, u: &HeisElement) -> [[BigInt; 3]; 3] {
        let corner = modp(&(&u.z_exp + &u.x_exp * &u.y_exp), &self.n);
        [
            [1.into(), u.x_exp.clone(), corner],
            [0.into(), 1.into(), u.y_exp.clone()],
            [0.into(), 0.into(), 1.into()],
        ]
    }

    pub fn mat_mul(&self, p: &[[BigInt; 3]; 3], q: &[[BigInt; 3]; 3]) -> [[BigInt; 3]; 3] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let s: BigInt = (0..3).map(|k| &p[i][k] * &q[k][j]).sum();
                modp(&s, &self.n)
            })
        })
    }
}

/// `h(A^a C^c B^b) = (xy)^a z^c y^b = x^a y^(a+b) z^(c - a(a-1)/2)`.
pub fn heisenberg_map(g: &MacdonaldGroup, x: &Element) -> HeisElement {
    let h = Heisenberg::new(g.params().n.clone());
    let tri: BigInt = (&x.a * (&x.a - 1)) / 2;
    h.element(x.a.clone(), &x.a + &x.b, &x.c - tri)
}

/// Canonical representative of `x Z` with all exponents in `[0, n)`.
pub fn center_representative(g: &MacdonaldGroup, x: &Element) -> Element {
    let u = heisenberg_map(g, x);
    let n = &g.params().n;
    let a = u.x_exp.clone();
    let tri: BigInt = (&a * (&a - 1)) / 2;
    g.normalize(
        a.clone(),
        modp(&(&u.z_exp + tri), n),
        modp(&(&u.y_exp - &a), n),
    )
}

/// Every element of `G / <A^e>`, `e` the first central power of `A`, in `(a, c, b)` order.
pub fn quotient_elements(g: &MacdonaldGroup, cap: u64) -> Result<Vec<Element>> {
    let p = g.params();
    ensure_cap(&(&p.a_central_exp * p.torsion_order()), cap)?;
    let e = p.a_central_exp.to_u64().expect("bounded by cap");
    let n = p.n.to_u64().expect("bounded by cap");
    let n2 = p.n2.to_u64().expect("bounded by cap");
    let mut out = Vec::with_capacity((e * n * n2) as usize);
    for a in 0..e {
        for c in 0..n {
            for b in 0..n2 {
                out.push(Element {
                    a: a.into(),
                    c: c.into(),
                    b: b.into(),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergCheck {
    pub homomorphism: bool,
    pub image_size: BigInt,
    pub kernel_size: usize,
    pub center_size: usize,
    pub kernel_is_center: bool,
    pub power_formula: bool,
}

impl HeisenbergCheck {
    pub fn passed(&self, n: &BigInt) -> bool {
        self.homomorphism
            && self.kernel_is_center
            && self.power_formula
            && self.image_size == n * n * n
    }
}

/// Exhaustive check of `h` on the finite quotient `G / <A^e>`.
pub fn check_heisenberg_iso_report(g: &MacdonaldGroup, cap: u64) -> Result<HeisenbergCheck> {
    let p = g.params();
    let e = &p.a_central_exp;
    let h = Heisenberg::new(p.n.clone());
    let elems = quotient_elements(g, cap)?;
    let gens = [g.gen_a(), g.gen_b()];
    let hgens: Vec<HeisElement> = gens.iter().map(|s| heisenberg_map(g, s)).collect();
    let mut homomorphism = true;
    let mut image = HashSet::new();
    let mut kernel = HashSet::new();
    for x in &elems {
        let hx = heisenberg_map(g, x);
        for (s, hs) in gens.iter().zip(&hgens) {
            let prod = g.reduce_a_mod(&g.multiply(x, s), e);
            if heisenberg_map(g, &prod) != h.mul(&hx, hs) {
                homomorphism = false;
            }
        }
        if hx == h.identity() {
            kernel.insert(x.clone());
        }
        image.insert(hx);
    }
    let center_gens: Vec<Element> = center_generators(g)
        .iter()
        .map(|z| g.reduce_a_mod(z, e))
        .collect();
    let center: HashSet<Element> = bfs_closure(g.identity(), &center_gens, cap, |x, y| {
        g.reduce_a_mod(&g.multiply(x, y), e)
    })?
    .into_iter()
    .collect();
    let xy = h.mul(&h.x(), &h.y());
    let n = p.n.to_u64().expect("bounded by cap");
    let power_formula = (0..=n).all(|k| {
        let kk = BigInt::from(k);
        let tri: BigInt = (&kk * (&kk - 1)) / 2;
        h.pow(&xy, k) == h.element(kk.clone(), kk.clone(), -tri)
    });
    Ok(HeisenbergCheck {
        homomorphism,
        image_size: image.len().into(),
        kernel_size: kernel.len(),
        center_size: center.len(),
        kernel_is_center: kernel == center,
        power_formula,
    })
}

pub fn check_heisenberg_iso(g: &MacdonaldGroup, cap: u64) -> Result<bool> {
    Ok(check_heisenberg_iso_report(g, cap)?.passed(&g.params().n))
}

/// Membership in `C_G(A) = <A, C, B^(β-1)>`.
pub fn in_centralizer_of_a(g: &MacdonaldGroup, x: &Element) -> bool {
    (&x.b % &g.params().n).is_zero()
}

/// `C Z` is central in `G / Z`.
pub fn c_in_second_center(g: &MacdonaldGroup) -> bool {
    let c = g.gen_c();
    [g.gen_a(), g.gen_b()]
        .iter()
        .all(|s| is_central(g, &g.commutator(&c, s)))
}

/// Core elements of `G / <A^e>` matching the oracle's centre, second centre, as canonical elements.
pub fn oracle_subgroup(g: &MacdonaldGroup, table: &FiniteGroupTable, idx: &[usize]) -> Vec<Element> {
    idx.iter()
        .map(|&i| {
            let (a, c, b) = table.label(i);
            g.normalize(a, c, b)
        })
        .collect()
}
