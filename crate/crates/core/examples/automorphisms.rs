//! `Aut(G)`: generators, closure, decomposition and the matrix model.
//! `cargo run --example automorphisms -- 4`

use macdonald::aut::{aut_group, compose, decompose, matrix_of, recompose, standard_generators, Automorphism};
use macdonald::MacdonaldGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let g = MacdonaldGroup::new(beta)?;
    let gens = standard_generators(&g);
    println!("Delta1: {}", gens.delta1);
    println!("Delta2: {}", gens.delta2);
    println!("inner(A): {}", gens.inner_a);
    println!("inner(B): {}", gens.inner_b);

    let all = aut_group(&g, 1_000_000)?;
    println!("|Aut(G({beta}))| = {} (2 n^4 = {})", all.len(), 2 * g.params().n.pow(4));

    let h = compose(&g, &gens.delta2, &Automorphism::inner(&g, &g.parse("A*B^2")?));
    let f = compose(&g, &gens.delta1, &h);
    let d = decompose(&g, &f)?;
    println!("{f}");
    println!("  = Delta1^{} * Delta2^{} * inner({})", d.eps, d.k, g.format(&d.g));
    assert_eq!(recompose(&g, &d), f);
    println!("matrix:\n{}", matrix_of(&g, &f)?);

    // a bad assignment is rejected
    match Automorphism::new(&g, g.gen_a(), g.gen_a()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("A -> A, B -> A: {e}"),
    }
    Ok(())
}
