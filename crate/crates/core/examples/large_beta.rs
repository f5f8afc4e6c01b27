//! Arithmetic with a 65-bit parameter: `cargo run --release --example large_beta`

use macdonald::aut::{compose, decompose, delta2_power, recompose, Automorphism};
use macdonald::iso::{iso_decision, IsoDecision};
use macdonald::MacdonaldGroup;
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta: BigInt = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or_else(|| BigInt::from(2).pow(64) + 5);
    let g = MacdonaldGroup::new(beta.clone())?;
    println!("beta = {beta}, n = {}", g.params().n);

    let x = g.parse("A^123456789*B^-987654321*C^42")?;
    let y = g.parse("B^3*A^-7")?;
    println!("x*y = {}", g.format(&g.multiply(&x, &y)));
    println!("x^y = {}", g.format(&g.conjugate(&x, &y)));
    println!("|B| = {}", g.order(&g.gen_b())?);

    let f = compose(
        &g,
        &Automorphism::delta1(&g),
        &compose(&g, &delta2_power(&g, &BigInt::from(77)), &Automorphism::inner(&g, &g.parse("A^5*C^-3*B^11")?)),
    );
    // images written out by hand pass the same check
    assert_eq!(Automorphism::new(&g, f.img_a().clone(), f.img_b().clone())?, f);
    let d = decompose(&g, &f)?;
    println!("{f}\n  eps = {}, k = {}, g = {}", d.eps, d.k, g.format(&d.g));
    assert_eq!(recompose(&g, &d), f);

    if let IsoDecision::Yes(w) = iso_decision(&beta, &(2 - &beta))? {
        println!("G(beta) = G(2 - beta), verified: {}", w.verified);
    }
    Ok(())
}
