//! Acceptance suite. Runs without the libtest harness and prints one line per criterion.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use macdonald::aut::{
    aut_group, bc_generators, compose, decompose, delta2_power, extending_subgroup, matrix_of, recompose, restrict,
    restriction_kernel, standard_generators, AutMatrix, Automorphism, TAutomorphism,
};
use macdonald::iso::{iso_decision, sylow_local_iso, IsoDecision, SylowIsoDecision};
use macdonald::lgroup::{l_generators, l_structure_report, mu, omega_matrix, LGroup};
use macdonald::oracle::{build_finite_quotient, build_torsion_model, FiniteGroupTable};
use macdonald::structure::{center_generators, check_heisenberg_iso_report};
use macdonald::torsion::{enumerate_torsion, sylow_projection, torsion_structure, SylowKind};
use macdonald::{Element, MacdonaldGroup};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: u64 = 1_000_000;
const BETAS: [i64; 8] = [-3, -2, -1, 3, 4, 5, 6, 7];

struct Check {
    pass: bool,
    detail: String,
}

impl Check {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Check {
            pass,
            detail: detail.into(),
        }
    }
}

fn g(beta: i64) -> MacdonaldGroup {
    MacdonaldGroup::new(beta).unwrap()
}

fn oracle_elements(g: &MacdonaldGroup, t: &FiniteGroupTable) -> Vec<Element> {
    t.labels().iter().map(|&(a, c, b)| g.normalize(a, c, b)).collect()
}

fn label(x: &Element) -> (u64, u64, u64) {
    (
        x.a_exp().to_u64().unwrap(),
        x.c_exp().to_u64().unwrap(),
        x.b_exp().to_u64().unwrap(),
    )
}

fn c1_collection() -> Check {
    let mut pairs = 0usize;
    for beta in BETAS {
        let grp = g(beta);
        let t = build_torsion_model(beta, CAP).unwrap();
        let elems = oracle_elements(&grp, &t);
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                if grp.multiply(x, y) != elems[t.mul(i, j)] {
                    return Check::new(false, format!("beta={beta}: {x} * {y} disagrees with the oracle"));
                }
                pairs += 1;
            }
        }
    }
    Check::new(true, format!("{pairs} products agree"))
}

fn c2_torsion() -> Check {
    for beta in BETAS {
        let grp = g(beta);
        let p = grp.params();
        let n = p.n.to_u64().unwrap();
        let r = torsion_structure(&grp).unwrap();
        let distinct: HashSet<Element> = enumerate_torsion(&grp, CAP).unwrap().into_iter().collect();
        if r.order != BigInt::from(n.pow(3)) || distinct.len() as u64 != n.pow(3) {
            return Check::new(false, format!("beta={beta}: |T| = {}", r.order));
        }
        // split over <B> iff some x with C-exponent prime to n has x^n = 1, searched in the oracle table
        let t = build_torsion_model(beta, CAP).unwrap();
        let split = (0..t.size()).any(|i| {
            let (_, c, _) = t.label(i);
            num_integer::gcd(c, n) == 1 && t.pow(i, n) == t.identity()
        });
        if split != (p.v2 != 1) || r.is_split != split {
            return Check::new(false, format!("beta={beta}: split {split}, v2 = {}", p.v2));
        }
        let q8 = r.sylow.iter().any(|s| s.kind == SylowKind::QuaternionQ8);
        if q8 != [-1, 3, 7].contains(&beta) {
            return Check::new(false, format!("beta={beta}: quaternion Sylow 2-subgroup reported {q8}"));
        }
        if q8 {
            let two = BigInt::from(2);
            let b = sylow_projection(&grp, &grp.gen_b(), &two).unwrap();
            let c = sylow_projection(&grp, &grp.gen_c(), &two).unwrap();
            let rel = grp.power(&b, 4).is_identity()
                && grp.power(&b, 2) == grp.power(&c, 2)
                && grp.conjugate(&b, &c) == grp.inverse(&b)
                && !grp.power(&b, 2).is_identity();
            if !rel {
                return Check::new(false, format!("beta={beta}: quaternion relations fail"));
            }
        }
    }
    Check::new(true, "orders n^3, splitting and quaternion cases {-1, 3, 7} confirmed")
}

fn c3_center() -> Check {
    for beta in BETAS {
        let grp = g(beta);
        let e = grp.params().a_central_exp.clone();
        let q = build_finite_quotient(beta, CAP).unwrap();
        let center: HashSet<usize> = q.center_of().into_iter().collect();
        let gens: Vec<usize> = center_generators(&grp)
            .iter()
            .map(|z| q.index_of(label(&grp.reduce_a_mod(z, &e))).unwrap())
            .collect();
        let span: HashSet<usize> = q.subgroup_closure(&gens).into_iter().collect();
        if span != center {
            return Check::new(false, format!("beta={beta}: oracle center {} vs span {}", center.len(), span.len()));
        }
        let h = check_heisenberg_iso_report(&grp, CAP).unwrap();
        if !h.passed(&grp.params().n) {
            return Check::new(false, format!("beta={beta}: Heisenberg map {h:?}"));
        }
    }
    Check::new(true, "oracle centers equal the generator spans; h has image n^3 and kernel Z")
}

fn c4_aut_orders() -> Check {
    let expected = [(3, 32), (-1, 32), (4, 162), (5, 512), (6, 1250), (7, 2592)];
    let mut got = vec![];
    for (beta, size) in expected {
        let grp = g(beta);
        let n = grp.params().n.to_u64().unwrap();
        let len = aut_group(&grp, CAP).unwrap().len();
        got.push(format!("{beta}:{len}"));
        if len != size || len as u64 != 2 * n.pow(4) {
            return Check::new(false, format!("beta={beta}: {len} automorphisms, expected {size}"));
        }
    }
    Check::new(true, got.join(" "))
}

fn c5_decomposition() -> Check {
    let mut total = 0;
    for beta in [3, -1, 4, 5, 6, 7] {
        let grp = g(beta);
        for f in aut_group(&grp, CAP).unwrap() {
            let d = decompose(&grp, &f).unwrap();
            if recompose(&grp, &d) != f {
                return Check::new(false, format!("beta={beta}: {f}"));
            }
            total += 1;
        }
    }
    Check::new(true, format!("{total} automorphisms reconstructed"))
}

fn matrix_homomorphism(grp: &MacdonaldGroup, all: &[Automorphism]) -> bool {
    // M(f s) = M(f) M(s) for every f and every generator s forces M to be a homomorphism
    let gens = standard_generators(grp).to_vec();
    let gen_m: Vec<AutMatrix> = gens.iter().map(|s| matrix_of(grp, s).unwrap()).collect();
    all.iter().all(|f| {
        let mf = matrix_of(grp, f).unwrap();
        gens.iter()
            .zip(&gen_m)
            .all(|(s, ms)| matrix_of(grp, &compose(grp, f, s)).unwrap() == mf.mul(ms))
    })
}

fn c6_matrices() -> Check {
    for beta in [4, 5, 6, 7] {
        let grp = g(beta);
        let n = grp.params().n.to_u64().unwrap();
        let all = aut_group(&grp, CAP).unwrap();
        let mats: HashSet<AutMatrix> = all.iter().map(|f| matrix_of(&grp, f).unwrap()).collect();
        let shaped = mats.iter().all(|m| m.has_standard_shape());
        // shape (1): s = ±1 (distinct as n > 2) and free a, b, c, d
        let shape_count = 2 * n.pow(4);
        if !(shaped && mats.len() == all.len() && mats.len() as u64 == shape_count) {
            return Check::new(false, format!("beta={beta}: {} images of {} automorphisms", mats.len(), all.len()));
        }
        if !matrix_homomorphism(&grp, &all) {
            return Check::new(false, format!("beta={beta}: not a homomorphism"));
        }
    }
    for beta in [-1, 3] {
        let grp = g(beta);
        let all = aut_group(&grp, CAP).unwrap();
        let mats: HashSet<AutMatrix> = all.iter().map(|f| matrix_of(&grp, f).unwrap()).collect();
        let dim5 = mats.iter().all(|m| m.dimension == 5 && m.modulus == BigInt::from(2));
        if !(dim5 && mats.len() == all.len() && matrix_homomorphism(&grp, &all)) {
            return Check::new(false, format!("beta={beta}: GL5(Z/2) embedding fails"));
        }
    }
    Check::new(true, "bijection onto shape (1) for 4..7, injective GL5(Z/2) image for -1, 3")
}

fn c7_restriction() -> Check {
    for beta in [4, 5, 6, 7] {
        let grp = g(beta);
        let n = grp.params().n.to_u64().unwrap();
        let r = restriction_kernel(&grp, CAP).unwrap();
        let kernel: HashSet<Automorphism> = r.kernel.into_iter().collect();
        let powers: HashSet<Automorphism> = (0..n).map(|k| delta2_power(&grp, &k.into())).collect();
        if kernel.len() as u64 != n || kernel != powers {
            return Check::new(false, format!("beta={beta}: kernel of order {}", kernel.len()));
        }
    }
    for beta in [-1, 3] {
        let grp = g(beta);
        let r = restriction_kernel(&grp, CAP).unwrap();
        let klein = r.kernel.len() == 4
            && r.kernel.iter().all(|f| compose(&grp, f, f).is_identity(&grp))
            && r.kernel
                .iter()
                .all(|f| r.kernel.iter().all(|h| compose(&grp, f, h) == compose(&grp, h, f)));
        let t = build_torsion_model(beta, CAP).unwrap();
        let aut_t = t.exhaustive_automorphisms(1 << 16).unwrap();
        let bi = t.index_of((0, 0, 1)).unwrap();
        let ci = t.index_of((0, 1, 0)).unwrap();
        let all = aut_group(&grp, CAP).unwrap();
        let image: HashSet<TAutomorphism> = all.iter().map(|f| restrict(&grp, f)).collect();
        let inside = image.iter().all(|u| {
            let ib = t.index_of(label(&u.img_b_t)).unwrap();
            let ic = t.index_of(label(&u.img_c_t)).unwrap();
            t.extend_to_automorphism(&[bi, ci], &[ib, ic]).is_some()
        });
        // 8 is the full 2-part of 24
        let sylow = image.len() == 8 && aut_t.len() == 24;
        if !(klein && inside && sylow) {
            return Check::new(
                false,
                format!("beta={beta}: kernel {}, image {}, |Aut(T)| {}", r.kernel.len(), image.len(), aut_t.len()),
            );
        }
    }
    Check::new(true, "kernel <Delta2> of order n for 4..7; C2 x C2 kernel and image 8 in Aut(Q8) of order 24")
}

fn c8_extension() -> Check {
    let g4 = g(4);
    let three = BigInt::from(3);
    let bc = bc_generators(&g4, &three).unwrap();
    let ext: HashSet<TAutomorphism> = extending_subgroup(&g4, &bc, CAP).unwrap().into_iter().collect();
    let image: HashSet<TAutomorphism> = aut_group(&g4, CAP).unwrap().iter().map(|f| restrict(&g4, f)).collect();
    let t4 = build_torsion_model(4, CAP).unwrap();
    let aut_t4 = t4.exhaustive_automorphisms(1 << 16).unwrap().len();
    let d_extends = ext.contains(&bc.d);
    let g10 = g(10);
    let bc10 = bc_generators(&g10, &three).unwrap();
    let ext10 = extending_subgroup(&g10, &bc10, CAP).unwrap().len();

    let mut fails = vec![];
    if ext.len() != 54 || ext != image {
        fails.push(format!("beta=4 subgroup {} vs image {}", ext.len(), image.len()));
    }
    if ext10 != 1458 {
        fails.push(format!("beta=10 subgroup {ext10}"));
    }
    if d_extends {
        fails.push(format!(
            "d_p extends (d_p is the identity on T; |Aut(T(4))| = {aut_t4} = |Im Lambda|, so every automorphism of T(4) extends)"
        ));
    }
    let base = format!("beta=4: |<b,c,a^e>| = {} = |Im Lambda| = {}; beta=10: {ext10}", ext.len(), image.len());
    if fails.is_empty() {
        Check::new(true, base)
    } else {
        Check::new(false, format!("{base}; failed: {}", fails.join("; ")))
    }
}

fn c9_isomorphisms() -> Check {
    let b = BigInt::from;
    let global = matches!(iso_decision(&b(4), &b(-2)).unwrap(), IsoDecision::Yes(w) if w.verified);
    let none = iso_decision(&b(4), &b(5)).unwrap() == IsoDecision::No;
    let local = match sylow_local_iso(&b(4), &b(7), &b(3)).unwrap() {
        SylowIsoDecision::Yes(s) => s.verified && s.i == b(2),
        SylowIsoDecision::No => false,
    };
    Check::new(
        global && none && local,
        format!("4~-2 verified {global}, 4!~5 {none}, Sylow-3 of 4 and 7 with i=2 {local}"),
    )
}

fn c10_lgroup() -> Check {
    let l = LGroup::new(6).unwrap();
    let gens = l_generators(&l).unwrap();
    let valid = gens.psi.is_valid(&l) && gens.mu.iter().all(|(_, f)| f.is_valid(&l)) && gens.mu.len() == 4;
    let j2 = mu(&l, &BigInt::from(2)).unwrap().1;
    let v = omega_matrix(&l, &gens.psi).unwrap();
    let r = l_structure_report(&l, CAP).unwrap();
    let pass = valid
        && j2 == BigInt::from(13)
        && v == [[BigInt::one(), BigInt::zero()], [BigInt::one(), BigInt::one()]]
        && r.aut_order == 12500
        && r.aut2_order == 625
        && r.kernel_omega_is_aut2
        && r.omega_image_order == 20
        && r.v_conjugation
        && r.tau_injective
        && r.tau_image_order == 1250
        && r.k_characteristic
        && r.center_size == 5
        && r.center_matches
        && r.psi_identity;
    Check::new(
        pass,
        format!(
            "|Aut(L)| = {}, |ker Omega| = {}, image {}, tau images {}, generators valid {valid}",
            r.aut_order, r.aut2_order, r.omega_image_order, r.tau_image_order
        ),
    )
}

fn random_big(rng: &mut ChaCha8Rng, words: usize) -> BigInt {
    let mut x = BigInt::zero();
    for _ in 0..words {
        x = (x << 64) + BigInt::from(rng.gen::<u64>());
    }
    if rng.gen() {
        -x
    } else {
        x
    }
}

fn large_beta_checks(beta: &BigInt, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let grp = MacdonaldGroup::new(beta.clone()).unwrap();
    let p = grp.params().clone();
    let (a, b, c) = (grp.gen_a(), grp.gen_b(), grp.gen_c());
    let bm1: BigInt = beta - 1;
    let rand_elt = |rng: &mut ChaCha8Rng| grp.normalize(random_big(rng, 2), random_big(rng, 2), random_big(rng, 3));
    let mut mults = 0;
    for _ in 0..25_000 {
        let (x, y, z) = (rand_elt(rng), rand_elt(rng), rand_elt(rng));
        let l = grp.multiply(&grp.multiply(&x, &y), &z);
        let r = grp.multiply(&x, &grp.multiply(&y, &z));
        mults += 4;
        if l != r {
            return Err(format!("associativity fails on {x}, {y}, {z}"));
        }
    }
    for _ in 0..1_000 {
        let x = rand_elt(rng);
        if !grp.multiply(&x, &grp.inverse(&x)).is_identity() || !grp.multiply(&grp.inverse(&x), &x).is_identity() {
            return Err(format!("inverse law fails on {x}"));
        }
    }

    let ab = grp.commutator(&a, &b);
    let ba = grp.commutator(&b, &a);
    let b_bm1 = grp.power(&b, bm1.clone());
    let mut rel = vec![
        ("A^[A,B] = A", grp.conjugate(&a, &ab) == a),
        ("B^[B,A] = B^beta", grp.conjugate(&b, &ba) == grp.power(&b, beta.clone())),
        ("A^B = A C", grp.conjugate(&a, &b) == grp.multiply(&a, &c)),
        ("B^A = B C^-1", grp.conjugate(&b, &a) == grp.multiply(&b, &grp.inverse(&c))),
        ("C^A = C", grp.conjugate(&c, &a) == c),
        (
            "C B C^-1 = B^beta",
            grp.multiply(&grp.multiply(&c, &b), &grp.inverse(&c)) == grp.power(&b, beta.clone()),
        ),
        (
            "B^(beta-1) central",
            grp.commutator(&b_bm1, &a).is_identity() && grp.commutator(&b_bm1, &b).is_identity(),
        ),
        ("B^((beta-1)^2) = 1", grp.power(&b, &bm1 * &bm1).is_identity()),
        (
            "C^(beta-1)",
            if p.v2 == 0 {
                grp.power(&c, bm1.clone()).is_identity()
            } else {
                grp.power(&c, bm1.clone()) == grp.power(&b, &bm1 * &bm1 / 2)
            },
        ),
        ("A of infinite order", !grp.power(&a, BigInt::from(1u64 << 40)).is_identity()),
    ];
    // (B^i)^A = C^-i B^(beta (1 + beta + ... + beta^(i-1)))
    let mut geo = BigInt::zero();
    let mut bp = BigInt::one();
    let mut ok = true;
    for i in 1..=100u32 {
        geo = (geo + &bp) % &p.n2;
        bp = (bp * beta) % &p.n2;
        let lhs = grp.conjugate(&grp.power(&b, i), &a);
        let rhs = grp.multiply(&grp.power(&c, -i64::from(i)), &grp.power(&b, beta * &geo));
        ok &= lhs == rhs;
    }
    rel.push(("(B^i)^A", ok));

    // A^(B^f) = A B^((beta-1)(beta + 2 beta^2 + ... + (f-1) beta^(f-1))) C^f
    let mut sum = BigInt::zero();
    let mut bf = BigInt::one();
    let mut con = true;
    let mut step4 = true;
    for f in 1..=100i64 {
        // sum holds beta + 2 beta^2 + ... + (f-1) beta^(f-1); bf = beta^f mod n2 after the update below
        let bfe = grp.power(&b, f);
        let lhs = grp.conjugate(&a, &bfe);
        let rhs = grp.multiply(&grp.multiply(&a, &grp.power(&b, &bm1 * &sum)), &grp.power(&c, f));
        con &= lhs == rhs;
        bf = (bf * beta) % &p.n2;
        sum = (sum + BigInt::from(f) * &bf) % &p.n2;
        // (C^-f)^(B^f) = C^-f B^(f (1 - beta^f))
        let cf = grp.power(&c, -f);
        step4 &= grp.conjugate(&cf, &bfe) == grp.multiply(&cf, &grp.power(&b, BigInt::from(f) * (1 - &bf)));
    }
    rel.push(("conjugation of A by B^f", con));
    rel.push(("conjugation of C^-f by B^f", step4));
    match rel.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(format!("beta={beta}: {name} fails")),
        None => Ok(mults),
    }
}

fn c11_large_beta() -> Check {
    let big: BigInt = BigInt::from(2).pow(64) + 5;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_6364);
    let mut total = 0;
    for beta in [big.clone(), -big] {
        match large_beta_checks(&beta, &mut rng) {
            Ok(m) => total += m,
            Err(e) => return Check::new(false, e),
        }
        assert!(beta.abs() > BigInt::from(u64::MAX));
    }
    Check::new(true, format!("{total} random multiplications, relation and conjugation identities for f <= 100"))
}

/// Number, name, time bound, check.
type Criterion = (u32, &'static str, Option<Duration>, fn() -> Check);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "collection agrees with the oracle", Some(Duration::from_secs(10)), c1_collection),
        (2, "torsion structure", Some(Duration::from_secs(1)), c2_torsion),
        (3, "center and Heisenberg quotient", Some(Duration::from_secs(5)), c3_center),
        (4, "Aut(G) orders", Some(Duration::from_secs(10)), c4_aut_orders),
        (5, "decomposition round trip", None, c5_decomposition),
        (6, "matrix embedding", None, c6_matrices),
        (7, "restriction map", None, c7_restriction),
        (8, "extension of torsion automorphisms", Some(Duration::from_secs(5)), c8_extension),
        (9, "isomorphisms", None, c9_isomorphisms),
        (10, "L(6)", Some(Duration::from_secs(60)), c10_lgroup),
        (11, "large beta", Some(Duration::from_secs(5)), c11_large_beta),
    ];
    let mut failed = vec![];
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let check = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let pass = check.pass && in_time;
        let timing = match limit {
            Some(l) => format!("{:.2}s < {}s", elapsed.as_secs_f64(), l.as_secs()),
            None => format!("{:.2}s", elapsed.as_secs_f64()),
        };
        println!(
            "criterion {id:>2} {} {name} [{timing}] {}",
            if pass { "PASS" } else { "FAIL" },
            check.detail
        );
        if !pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
