//! Run the built-in self-checks: `cargo run --release --example verify -- 7 all`

use macdonald::suites::{run_suite, Suite};
use macdonald::MacdonaldGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let beta: i64 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(7);
    let suite: Suite = args.get(1).map_or("all", String::as_str).parse()?;
    let g = MacdonaldGroup::new(beta)?;
    let out = run_suite(&g, suite, 1_000_000)?;
    for v in &out.verdicts {
        let mark = if v.pass { "ok  " } else { "FAIL" };
        println!("{mark} {:<40} expected {:<8} computed {}", v.locus, v.expected, v.computed);
    }
    for (s, why) in &out.skipped {
        println!("skip {s}: {why}");
    }
    if out.first_failure().is_some() {
        std::process::exit(1);
    }
    Ok(())
}
