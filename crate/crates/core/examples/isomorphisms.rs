//! Global and Sylow-local isomorphisms: `cargo run --example isomorphisms -- 4 7 3`

use macdonald::iso::{iso_decision, sylow_local_iso, IsoDecision, SylowIsoDecision};
use macdonald::MacdonaldGroup;
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<BigInt> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let beta = args.first().cloned().unwrap_or_else(|| 4.into());
    let gamma = args.get(1).cloned().unwrap_or_else(|| 7.into());
    let p = args.get(2).cloned().unwrap_or_else(|| 3.into());
    let (g, h) = (MacdonaldGroup::new(beta.clone())?, MacdonaldGroup::new(gamma.clone())?);

    let partner = 2 - &beta;
    for other in [&gamma, &partner] {
        match iso_decision(&beta, other)? {
            IsoDecision::No => println!("G({beta}) and G({other}) are not isomorphic"),
            IsoDecision::Yes(w) => println!(
                "G({beta}) = G({other}) via A -> {}, B -> {} (verified: {})",
                w.forward.img_a, w.forward.img_b, w.verified
            ),
        }
    }

    match sylow_local_iso(&beta, &gamma, &p)? {
        SylowIsoDecision::No => println!("Sylow {p}-parts differ"),
        SylowIsoDecision::Yes(s) => {
            println!("G({beta})_{p} = G({gamma})_{p}: m = {}, i = {}, j = {}", s.m, s.i, s.j);
            println!("  X -> {}, Y -> {}", g.format(&s.forward.img_a), g.format(&s.forward.img_b));
            println!("  A -> {}, B -> {}", h.format(&s.backward.img_a), h.format(&s.backward.img_b));
            println!("  verified: {}", s.verified);
        }
    }
    Ok(())
}
