//! Mean oracle calls as the coloring family grows, written as CSV.

use hellyspace::cli::{bench_csv, bench_scaling, Family};
use hellyspace::field::FieldSpec;

fn main() -> hellyspace::Result<()> {
    let rows = bench_scaling(Family::Coloring, &[4, 6, 8, 10], 4, FieldSpec::default())?;
    print!("{}", bench_csv(&rows));
    Ok(())
}
