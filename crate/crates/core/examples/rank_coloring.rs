//! Rank of the 2-coloring systems, the default dimension bound for the solver.

use hellyspace::cli::gen_coloring;
use hellyspace::field::FieldSpec;
use hellyspace::linalg::{build_coeff_matrix, rank};
use hellyspace::poly::MonomialOrder;

fn main() -> hellyspace::Result<()> {
    let field = FieldSpec::default();
    for n in [4, 6, 8, 10] {
        let system = gen_coloring(n, field)?;
        let r = rank(&build_coeff_matrix(&system, MonomialOrder::GrevLex));
        println!("n = {n:2}  polynomials = {:3}  rank = {:3}  pivots = {:?}", system.len(), r.rank, r.pivot_columns);
    }
    Ok(())
}
