//! Normal-form arithmetic: `cargo run --example arithmetic -- 4 "B*A" "A^-2*C"`

use macdonald::{MacdonaldGroup, Order};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let beta: i64 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let g = MacdonaldGroup::new(beta)?;
    let x = g.parse(args.get(1).map_or("B*A", String::as_str))?;
    let y = g.parse(args.get(2).map_or("A^-2*C", String::as_str))?;

    println!("G({beta}): n = {}, |B| = {}, |C| = {}", g.params().n, g.params().n2, g.params().c_order);
    println!("x = {}", g.format(&x));
    println!("y = {}", g.format(&y));
    println!("x*y      = {}", g.format(&g.multiply(&x, &y)));
    println!("x^-1     = {}", g.format(&g.inverse(&x)));
    println!("x^y      = {}", g.format(&g.conjugate(&x, &y)));
    println!("[x, y]   = {}", g.format(&g.commutator(&x, &y)));
    println!("x^100    = {}", g.format(&g.power(&x, 100)));
    for (name, e) in [("x", &x), ("y", &y), ("C", &g.gen_c()), ("B*C", &g.multiply(&g.gen_b(), &g.gen_c()))] {
        match g.order(e)? {
            Order::Finite(k) => println!("|{name}| = {k}"),
            Order::Infinite => println!("|{name}| = infinite"),
        }
    }

    // defining relations
    let (a, b, c) = (g.gen_a(), g.gen_b(), g.gen_c());
    assert_eq!(g.conjugate(&a, &c), a);
    let ba = g.commutator(&b, &a);
    assert_eq!(g.conjugate(&b, &ba), g.power(&b, beta));
    println!("A^[A,B] = A and B^[B,A] = B^{beta} hold");
    Ok(())
}
