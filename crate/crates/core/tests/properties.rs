use std::collections::HashSet;

use macdonald::aut::{compose, decompose, delta2_power, recompose, Automorphism};
use macdonald::iso::{iso_decision, sylow_local_iso, IsoDecision, SylowIsoDecision};
use macdonald::lgroup::{l_generators, mat2_mul, omega_matrix, LAutomorphism, LGroup};
use macdonald::structure::{center_generators, heisenberg_map, is_central, Heisenberg};
use macdonald::torsion::{primes_dividing, sylow_order, sylow_projection, torsion_structure};
use macdonald::{Element, MacdonaldGroup};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

fn small_beta() -> impl Strategy<Value = i64> {
    (-40i64..=40).prop_filter("beta not in {0, 1, 2}", |b| ![0, 1, 2].contains(b))
}

/// Mostly small, sometimes around 2^64 or beyond.
fn any_beta() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        3 => small_beta().prop_map(BigInt::from),
        1 => (any::<u64>(), any::<bool>()).prop_map(|(x, neg)| {
            let b: BigInt = (BigInt::from(x) << 2) + 3;
            if neg { -b } else { b }
        }),
        1 => (any::<u64>(), any::<u64>()).prop_map(|(hi, lo)| (BigInt::from(hi) << 64) + lo + 5),
    ]
}

fn big_int() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        (-50i64..50).prop_map(BigInt::from),
        any::<i64>().prop_map(BigInt::from),
        (any::<i64>(), any::<u64>()).prop_map(|(hi, lo)| (BigInt::from(hi) << 64) + lo),
    ]
}

fn element(g: &MacdonaldGroup, t: (BigInt, BigInt, BigInt)) -> Element {
    g.normalize(t.0, t.1, t.2)
}

fn triple() -> impl Strategy<Value = (BigInt, BigInt, BigInt)> {
    (big_int(), big_int(), big_int())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_axioms(beta in any_beta(), x in triple(), y in triple(), z in triple()) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let (x, y, z) = (element(&g, x), element(&g, y), element(&g, z));
        prop_assert_eq!(g.multiply(&g.multiply(&x, &y), &z), g.multiply(&x, &g.multiply(&y, &z)));
        prop_assert_eq!(g.multiply(&x, &g.identity()), x.clone());
        prop_assert_eq!(g.multiply(&g.identity(), &x), x.clone());
        prop_assert!(g.multiply(&x, &g.inverse(&x)).is_identity());
        prop_assert!(g.contains(&x));
    }

    #[test]
    fn grammar_round_trip(beta in any_beta(), x in triple()) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let x = element(&g, x);
        let s = g.format(&x);
        prop_assert_eq!(g.parse(&s).unwrap(), x);
    }

    #[test]
    fn defining_relations_after_powers(beta in any_beta(), k in big_int()) {
        let g = MacdonaldGroup::new(beta.clone()).unwrap();
        let (a, b, c) = (g.gen_a(), g.gen_b(), g.gen_c());
        prop_assert_eq!(g.conjugate(&a, &c), a.clone());
        prop_assert_eq!(g.conjugate(&b, &a), g.multiply(&b, &g.inverse(&c)));
        prop_assert_eq!(g.conjugate(&b, &g.commutator(&b, &a)), g.power(&b, beta));
        // powers add
        let x = g.multiply(&a, &b);
        prop_assert_eq!(g.multiply(&g.power(&x, k.clone()), &g.power(&x, 3)), g.power(&x, k + 3));
    }

    #[test]
    fn conjugation_closed_form_matches_iteration(beta in any_beta(), j in big_int(), x in 0u32..60) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let bj = g.power(&g.gen_b(), j);
        let mut it = bj.clone();
        for _ in 0..x {
            it = g.conjugate(&it, &g.gen_a());
        }
        prop_assert_eq!(g.conjugate(&bj, &g.power(&g.gen_a(), x)), it);
    }

    #[test]
    fn conjugation_of_a_by_b_powers(beta in small_beta()) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let n = g.params().n.to_i64().unwrap();
        let n2 = &g.params().n2;
        let bb = BigInt::from(beta);
        let (a, b, c) = (g.gen_a(), g.gen_b(), g.gen_c());
        for f in 1..=3 * n {
            // beta + 2 beta^2 + ... + (f-1) beta^(f-1), summed term by term
            let mut sum = BigInt::zero();
            let mut pw = BigInt::from(1);
            for k in 1..f {
                pw = (pw * &bb) % n2;
                sum += BigInt::from(k) * &pw;
            }
            let bf = g.power(&b, f);
            let rhs = g.multiply(&g.multiply(&a, &g.power(&b, (&bb - 1) * &sum)), &g.power(&c, f));
            prop_assert_eq!(g.conjugate(&a, &bf), rhs, "f = {}", f);
            let cf = g.power(&c, -f);
            let beta_f = (pw * &bb) % n2;
            let rhs = g.multiply(&cf, &g.power(&b, BigInt::from(f) * (1 - beta_f)));
            prop_assert_eq!(g.conjugate(&cf, &bf), rhs);
        }
    }

    #[test]
    fn cyclic_intersection(beta in (-14i64..=16).prop_filter("", |b| ![0, 1, 2].contains(b))) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let n2 = g.params().n2.to_i64().unwrap();
        let c_ord = g.params().c_order.to_i64().unwrap();
        let bs: HashSet<Element> = (0..n2).map(|k| g.power(&g.gen_b(), k)).collect();
        let cs: HashSet<Element> = (0..c_ord).map(|k| g.power(&g.gen_c(), k)).collect();
        let both: HashSet<Element> = bs.intersection(&cs).cloned().collect();
        let cb = g.power(&g.gen_c(), beta - 1);
        let span: HashSet<Element> = (0..c_ord).map(|k| g.power(&cb, k)).collect();
        prop_assert_eq!(both, span);
    }

    #[test]
    fn sylow_parts_multiply_back(beta in any_beta(), c in big_int(), b in big_int()) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let Ok(primes) = primes_dividing(&g) else { return Ok(()) };
        let x = g.normalize(0, c, b);
        let mut prod = g.identity();
        let mut total = BigInt::from(1);
        for p in &primes {
            let xp = sylow_projection(&g, &x, p).unwrap();
            prop_assert_eq!(sylow_projection(&g, &xp, p).unwrap(), xp.clone());
            prod = g.multiply(&prod, &xp);
            total *= sylow_order(&g, p);
        }
        prop_assert_eq!(prod, x);
        prop_assert_eq!(total, g.params().torsion_order());
    }

    #[test]
    fn odd_split_witness(k in 1i64..200, neg in any::<bool>()) {
        // beta - 1 divisible by 4
        let beta = if neg { 1 - 4 * k } else { 1 + 4 * k };
        let g = MacdonaldGroup::new(beta).unwrap();
        let w = torsion_structure(&g).unwrap().split_witness.unwrap();
        let n = g.params().n.clone();
        prop_assert!(g.power(&w, n.clone()).is_identity());
        // <w> meets <B> trivially: no proper power lands in <B>
        for d in 1..n.to_i64().unwrap() {
            prop_assert!(!g.power(&w, d).c_exp().is_zero());
        }
    }

    #[test]
    fn heisenberg_map_is_a_homomorphism(beta in any_beta(), x in triple(), y in triple()) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let h = Heisenberg::new(g.params().n.clone());
        let (x, y) = (element(&g, x), element(&g, y));
        prop_assert_eq!(heisenberg_map(&g, &g.multiply(&x, &y)), h.mul(&heisenberg_map(&g, &x), &heisenberg_map(&g, &y)));
        for z in center_generators(&g) {
            prop_assert!(is_central(&g, &z));
            prop_assert_eq!(heisenberg_map(&g, &z), h.identity());
        }
    }

    #[test]
    fn automorphism_words(beta in any_beta(), word in proptest::collection::vec((0usize..5, triple()), 1..6), x in triple()) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let mut f = Automorphism::identity(&g);
        for (kind, t) in word {
            let step = match kind {
                0 => Automorphism::delta1(&g),
                1 => delta2_power(&g, &t.0),
                _ => Automorphism::inner(&g, &element(&g, t)),
            };
            f = compose(&g, &f, &step);
        }
        prop_assert!(Automorphism::new(&g, f.img_a().clone(), f.img_b().clone()).is_ok());
        let d = decompose(&g, &f).unwrap();
        prop_assert_eq!(recompose(&g, &d), f.clone());
        // f is a homomorphism on a sample product
        let x = element(&g, x);
        let y = g.multiply(&x, &g.gen_b());
        let fx = macdonald::aut::apply(&g, &f, &x);
        let fb = macdonald::aut::apply(&g, &f, &g.gen_b());
        prop_assert_eq!(macdonald::aut::apply(&g, &f, &y), g.multiply(&fx, &fb));
    }

    #[test]
    fn central_and_inner_commute(beta in any_beta(), k in big_int(), t in triple()) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let d2 = delta2_power(&g, &k);
        let inn = Automorphism::inner(&g, &element(&g, t));
        prop_assert_eq!(compose(&g, &d2, &inn), compose(&g, &inn, &d2));
    }

    #[test]
    fn delta1_inverts_inner(beta in any_beta()) {
        let g = MacdonaldGroup::new(beta).unwrap();
        let d1 = Automorphism::delta1(&g);
        for x in [g.gen_a(), g.gen_b()] {
            let lhs = compose(&g, &d1, &compose(&g, &Automorphism::inner(&g, &x), &d1));
            prop_assert_eq!(lhs, Automorphism::inner(&g, &g.inverse(&x)));
        }
    }

    #[test]
    fn iso_symmetry(beta in any_beta(), gamma in any_beta()) {
        let yes = |d: IsoDecision| matches!(d, IsoDecision::Yes(w) if w.verified);
        let fwd = iso_decision(&beta, &gamma).unwrap();
        let bwd = iso_decision(&gamma, &beta).unwrap();
        prop_assert_eq!(fwd == IsoDecision::No, bwd == IsoDecision::No);
        prop_assert_eq!(yes(fwd.clone()), fwd != IsoDecision::No);
        prop_assert!(yes(iso_decision(&beta, &(2 - &beta)).unwrap()));
    }

    #[test]
    fn sylow_iso_matches_orders(beta in small_beta(), gamma in small_beta(), p in prop::sample::select(vec![2i64, 3, 5, 7, 11])) {
        let p = BigInt::from(p);
        let (b, c) = (BigInt::from(beta), BigInt::from(gamma));
        let g = MacdonaldGroup::new(beta).unwrap();
        let h = MacdonaldGroup::new(gamma).unwrap();
        match sylow_local_iso(&b, &c, &p).unwrap() {
            SylowIsoDecision::Yes(s) => {
                prop_assert!(s.verified);
                prop_assert_eq!(sylow_order(&g, &p), sylow_order(&h, &p));
            }
            SylowIsoDecision::No => {
                let trivial = sylow_order(&g, &p) == BigInt::from(1);
                prop_assert!(trivial || sylow_order(&g, &p) != sylow_order(&h, &p));
            }
        }
    }

    #[test]
    fn omega_is_a_homomorphism(beta in prop::sample::select(vec![6i64, -4, 8, -6, 12, -10, 14]), word in proptest::collection::vec(0usize..64, 2..8)) {
        let l = LGroup::new(beta).unwrap();
        let gens = l_generators(&l).unwrap().to_vec();
        let n = l.n().clone();
        let mut f = LAutomorphism::identity(&l);
        let mut m = omega_matrix(&l, &f).unwrap();
        for w in word {
            let s = &gens[w % gens.len()];
            f = f.then(&l, s);
            m = mat2_mul(&m, &omega_matrix(&l, s).unwrap(), &n);
            prop_assert!(f.is_valid(&l));
        }
        prop_assert_eq!(omega_matrix(&l, &f).unwrap(), m);
    }
}
