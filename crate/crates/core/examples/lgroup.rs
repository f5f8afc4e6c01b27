//! The quotient `L(β)` and its automorphism group: `cargo run --release --example lgroup -- 6`

use macdonald::lgroup::{l_generators, l_structure_report, mu, omega_matrix, LGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    let l = LGroup::new(beta)?;
    println!("L({beta}) has order {}", l.order());

    let gens = l_generators(&l)?;
    println!("Psi: {}  Omega = {:?}", gens.psi, omega_matrix(&l, &gens.psi)?);
    println!("Delta2: {}  Omega = {:?}", gens.delta2, omega_matrix(&l, &gens.delta2)?);
    for (i, _) in &gens.mu {
        let (f, j) = mu(&l, i)?;
        println!("mu_{i} (j = {j}): {f}  Omega = {:?}", omega_matrix(&l, &f)?);
    }

    let r = l_structure_report(&l, 1_000_000)?;
    println!("{r:#?}");
    Ok(())
}
