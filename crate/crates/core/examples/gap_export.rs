//! GAP input for `T(β)` and `L(β)`: `cargo run --example gap_export -- 6 > t6.g`

use macdonald::cli::gap_presentation;
use macdonald::MacdonaldGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    print!("{}", gap_presentation(&MacdonaldGroup::new(beta)?));
    Ok(())
}
