//! Isomorphisms between members of the family, globally and after projecting to one prime.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::Result;
use crate::group::MacdonaldGroup;
use crate::ntheory::{mod_inverse, modp, valuation};
use crate::torsion::sylow_projection;

/// A homomorphism `src → dst` given by the images of `A` and `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    pub img_a: Element,
    pub img_b: Element,
}

impl Homomorphism {
    pub fn apply(&self, dst: &MacdonaldGroup, x: &Element) -> Element {
        let img_c = dst.commutator(&self.img_a, &self.img_b);
        let a = dst.power(&self.img_a, x.a_exp().clone());
        let c = dst.power(&img_c, x.c_exp().clone());
        let b = dst.power(&self.img_b, x.b_exp().clone());
        dst.multiply(&dst.multiply(&a, &c), &b)
    }

    /// The defining relations of `src` hold for the images in `dst`.
    pub fn preserves_relations(&self, src: &MacdonaldGroup, dst: &MacdonaldGroup) -> bool {
        let (a, b) = (&self.img_a, &self.img_b);
        let ab = dst.commutator(a, b);
        let ba = dst.commutator(b, a);
        dst.conjugate(a, &ab) == *a && dst.conjugate(b, &ba) == dst.power(b, src.beta().clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    /// `G(β) → G(γ)`.
    pub forward: Homomorphism,
    /// `G(γ) → G(β)`.
    pub backward: Homomorphism,
    pub verified: bool,
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoDecision {
    No,
    Yes(IsoWitness),
}

fn verify_pair(
    g: &MacdonaldGroup,
    h: &MacdonaldGroup,
    forward: &Homomorphism,
    backward: &Homomorphism,
    g_targets: (&Element, &Element),
    h_targets: (&Element, &Element),
) -> bool {
    forward.preserves_relations(g, h)
        && backward.preserves_relations(h, g)
        && backward.apply(g, &forward.apply(h, &g.gen_a())) == *g_targets.0
        && backward.apply(g, &forward.apply(h, &g.gen_b())) == *g_targets.1
        && forward.apply(h, &backward.apply(g, &h.gen_a())) == *h_targets.0
        && forward.apply(h, &backward.apply(g, &h.gen_b())) == *h_targets.1
}

/// `G(β) ≅ G(γ)` exactly when `γ ∈ {β, 2 - β}`; for `γ = 2 - β` the witness is `A ↦ X⁻¹, B ↦ Y`.
pub fn iso_decision(beta: &BigInt, gamma: &BigInt) -> Result<IsoDecision> {
    let g = MacdonaldGroup::new(beta.clone())?;
    let h = MacdonaldGroup::new(gamma.clone())?;
    let (forward, backward) = if beta == gamma {
        (
            Homomorphism { img_a: h.gen_a(), img_b: h.gen_b() },
            Homomorphism { img_a: g.gen_a(), img_b: g.gen_b() },
        )
    } else if *gamma == 2 - beta {
        (
            Homomorphism { img_a: h.inverse(&h.gen_a()), img_b: h.gen_b() },
            Homomorphism { img_a: g.inverse(&g.gen_a()), img_b: g.gen_b() },
        )
    } else {
        return Ok(IsoDecision::No);
    };
    let verified = verify_pair(
        &g,
        &h,
        &forward,
        &backward,
        (&g.gen_a(), &g.gen_b()),
        (&h.gen_a(), &h.gen_b()),
    );
    Ok(IsoDecision::Yes(IsoWitness {
        forward,
        backward,
        verified,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowIso {
    pub m: u32,
    /// `β - 1 = p^m ℓ`.
    pub ell: BigInt,
    /// `γ - 1 = p^m r`.
    pub r: BigInt,
    /// Least positive solution of `i ℓ ≡ r mod p^m`.
    pub i: BigInt,
    /// `i j ≡ 1 mod p^(2m)`.
    pub j: BigInt,
    /// `G(γ)_p → G(β)_p`: `X ↦ A`, `Y ↦ B_p^i`.
    pub forward: Homomorphism,
    /// `G(β)_p → G(γ)_p`: `A ↦ X`, `B ↦ Y_p^j`.
    pub backward: Homomorphism,
    pub verified: bool,
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SylowIsoDecision {
    No,
    Yes(SylowIso),
}

/// `G(β)_p ≅ G(γ)_p` exactly when `v_p(β - 1) = v_p(γ - 1)`; elements of `G(·)_p` are elements of
/// `G(·)` whose torsion part lies in `T_p`.
pub fn sylow_local_iso(beta: &BigInt, gamma: &BigInt, p: &BigInt) -> Result<SylowIsoDecision> {
    let g = MacdonaldGroup::new(beta.clone())?;
    let h = MacdonaldGroup::new(gamma.clone())?;
    if p <= &BigInt::one() {
        return Ok(SylowIsoDecision::No);
    }
    let m = valuation(&g.params().n, p);
    if m == 0 || m != valuation(&h.params().n, p) {
        return Ok(SylowIsoDecision::No);
    }
    let pm = p.pow(m);
    let p2m = &pm * &pm;
    let ell = g.params().beta_minus_one() / &pm;
    let r = h.params().beta_minus_one() / &pm;
    let ell_inv = mod_inverse(&ell, &pm).expect("p does not divide ell");
    let mut i = modp(&(&r * ell_inv), &pm);
    if i.is_zero() {
        i = pm.clone();
    }
    let j = mod_inverse(&i, &p2m).expect("i is prime to p");
    let b_p = sylow_projection(&g, &g.gen_b(), p)?;
    let y_p = sylow_projection(&h, &h.gen_b(), p)?;
    let forward = Homomorphism {
        img_a: g.gen_a(),
        img_b: g.power(&b_p, i.clone()),
    };
    let backward = Homomorphism {
        img_a: h.gen_a(),
        img_b: h.power(&y_p, j.clone()),
    };
    let congruence = modp(&(power_mod_signed(beta, &i, &p2m) - gamma), &p2m).is_zero();
    let verified = congruence
        && verify_pair(
            &h,
            &g,
            &forward,
            &backward,
            (&h.gen_a(), &y_p),
            (&g.gen_a(), &b_p),
        );
    Ok(SylowIsoDecision::Yes(SylowIso {
        m,
        ell,
        r,
        i,
        j,
        forward,
        backward,
        verified,
    }))
}

fn power_mod_signed(base: &BigInt, exp: &BigInt, m: &BigInt) -> BigInt {
    modp(base, m).modpow(exp, m)
}
