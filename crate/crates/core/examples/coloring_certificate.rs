//! Finds a small subsystem that already has no common zero, then re-checks it.

use hellyspace::cli::gen_coloring;
use hellyspace::field::FieldSpec;
use hellyspace::spaces::{solve_basis, SolveConfig};

fn main() -> hellyspace::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let system = gen_coloring(n, FieldSpec::default())?;
    let mut cfg = SolveConfig::new(system.clone());
    cfg.seed = 7;
    cfg.verify = true;
    let out = solve_basis(&cfg)?;

    println!("{} polynomials, dimension bound {}", system.len(), out.delta_used);
    println!("classification: {:?}", out.classification.unwrap());
    println!("certificate ({} polynomials):", out.basis.len());
    for &i in &out.basis {
        println!("  [{i:3}] {}", system.polys()[i]);
    }
    let v = out.verification.unwrap();
    println!("verified: {} using {} extra oracle calls", v.passed, v.calls);
    println!("sampling calls: {:?}", out.stats.calls);
    Ok(())
}
