//! The brute-force table oracle next to collection: `cargo run --example oracle -- -3`

use macdonald::oracle::{build_finite_quotient, build_torsion_model};
use macdonald::MacdonaldGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(-3);
    let g = MacdonaldGroup::new(beta)?;
    let t = build_torsion_model(beta, 1_000_000)?;
    println!("torsion table: {} elements, axioms hold: {}", t.size(), t.check_axioms(true));

    let elems: Vec<_> = t.labels().iter().map(|&(_, c, b)| g.normalize(0, c, b)).collect();
    let mut mismatches = 0;
    for i in 0..t.size() {
        for j in 0..t.size() {
            let (_, c, b) = t.label(t.mul(i, j));
            if g.multiply(&elems[i], &elems[j]) != g.normalize(0, c, b) {
                mismatches += 1;
            }
        }
    }
    println!("{} products compared, {mismatches} mismatches", t.size() * t.size());

    let q = build_finite_quotient(beta, 1_000_000)?;
    println!(
        "G/<A^{}>: {} elements, center {}, lower central series lengths {:?}",
        g.params().a_central_exp,
        q.size(),
        q.center_of().len(),
        q.lower_central_series().iter().map(Vec::len).collect::<Vec<_>>()
    );
    let auts = t.exhaustive_automorphisms(1 << 16)?;
    println!("|Aut(T)| = {}", auts.len());
    Ok(())
}
