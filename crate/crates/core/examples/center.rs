//! Center, lower central series and the Heisenberg quotient: `cargo run --example center -- 5`

use macdonald::structure::{
    center_generators, center_representative, check_heisenberg_iso_report, heisenberg_map, lower_central_series,
    Heisenberg,
};
use macdonald::MacdonaldGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let g = MacdonaldGroup::new(beta)?;
    let n = g.params().n.clone();
    let z: Vec<String> = center_generators(&g).iter().map(|x| g.format(x)).collect();
    println!("Z(G({beta})) = <{}>", z.join(", "));

    let lcs = lower_central_series(&g)?;
    println!(
        "gamma2 = <{}>, gamma3 = <{}> of order {}, class 3: {}",
        lcs.gamma2.iter().map(|x| g.format(x)).collect::<Vec<_>>().join(", "),
        lcs.gamma3.iter().map(|x| g.format(x)).collect::<Vec<_>>().join(", "),
        lcs.gamma3_order,
        lcs.class_three
    );

    let h = Heisenberg::new(n.clone());
    let x = g.parse("A^2*B^3*C")?;
    let hx = heisenberg_map(&g, &x);
    println!("h({}) = {:?}", g.format(&x), hx);
    println!("matrix: {:?}", h.to_matrix(&hx));
    println!("representative mod Z: {}", g.format(&center_representative(&g, &x)));

    let report = check_heisenberg_iso_report(&g, 1_000_000)?;
    println!(
        "G/Z vs H(Z/{n}): homomorphism {}, image {}, kernel {} = center {}: {}",
        report.homomorphism, report.image_size, report.kernel_size, report.center_size, report.kernel_is_center
    );
    Ok(())
}
