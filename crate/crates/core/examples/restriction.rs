//! Restriction to the torsion subgroup and the automorphisms of `T` that extend.
//! `cargo run --example restriction -- 10 3`

use macdonald::aut::{bc_generators, extending_subgroup, restrict, restriction_kernel, aut_group};
use macdonald::MacdonaldGroup;
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let beta: i64 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let p: BigInt = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or_else(|| 3.into());
    let g = MacdonaldGroup::new(beta)?;

    let r = restriction_kernel(&g, 1_000_000)?;
    println!("Aut(G({beta})) -> Aut(T): kernel {}, image {}", r.kernel.len(), r.image_size);
    for f in &r.kernel {
        println!("  {f}");
    }

    let bc = bc_generators(&g, &p)?;
    println!("p = {p}: m = {}, r = {}, s = {}, primitive root {}", bc.m, bc.r, bc.s, bc.i);
    let ext = extending_subgroup(&g, &bc, 1_000_000)?;
    println!("<b, c, a^((p-1)p^(m-1)/2)> has order {}", ext.len());
    println!("d is the identity on T: {}", bc.d == macdonald::aut::TAutomorphism::identity(&g));

    let image: std::collections::HashSet<_> = aut_group(&g, 1_000_000)?.iter().map(|f| restrict(&g, f)).collect();
    if g.params().n == p.pow(bc.m) {
        println!("equals the restriction image: {}", ext.iter().all(|t| image.contains(t)) && ext.len() == image.len());
    }
    Ok(())
}
