//! Torsion subgroup and its Sylow pieces: `cargo run --example torsion -- 7`

use macdonald::torsion::{enumerate_torsion, sylow_generators, sylow_projection, torsion_structure, DEFAULT_CAP};
use macdonald::MacdonaldGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(7);
    let g = MacdonaldGroup::new(beta)?;
    let r = torsion_structure(&g)?;
    println!("T({beta}) = <B, C>, order {}", r.order);
    println!("  <B> of order {} is normal, quotient cyclic of order {}", r.kernel_order, r.quotient_order);
    match &r.split_witness {
        Some(w) => println!("  splits, complement generated by {}", g.format(w)),
        None => println!("  does not split"),
    }
    for s in &r.sylow {
        let (b, c) = sylow_generators(&g, &s.p)?;
        println!(
            "  p = {}: m = {}, order {}, {:?}, generated by {} and {}",
            s.p,
            s.m,
            s.order,
            s.kind,
            g.format(&b),
            g.format(&c)
        );
    }

    let x = g.multiply(&g.power(&g.gen_c(), 2), &g.power(&g.gen_b(), 5));
    let mut prod = g.identity();
    for s in &r.sylow {
        let xp = sylow_projection(&g, &x, &s.p)?;
        println!("  {} has {}-part {}", g.format(&x), s.p, g.format(&xp));
        prod = g.multiply(&prod, &xp);
    }
    assert_eq!(prod, x);

    if let Ok(all) = enumerate_torsion(&g, DEFAULT_CAP) {
        println!("enumerated {} torsion elements", all.len());
    }
    Ok(())
}
