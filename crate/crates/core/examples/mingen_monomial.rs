//! Picks a minimal generating subset out of a redundant homogeneous generating set.

use hellyspace::cli::parse_system;
use hellyspace::spaces::{estimate_gamma, mingen, MingenConfig};

const INPUT: &str = "\
x0^2
x0*x1
x1^2
x0^3 + x0*x1^2
x0^2*x1 - x1^3
x1^4
x0*x1 + x1^2
";

fn main() -> hellyspace::Result<()> {
    let system = parse_system(INPUT)?.system;
    let gamma = estimate_gamma(&system, system.order(), true)?;
    println!("generator bound from leading terms: {gamma}");

    let mut cfg = MingenConfig::new(system.clone(), gamma);
    cfg.assume_gb = true;
    cfg.verify = true;
    let out = mingen(&cfg)?;
    println!("kept {} of {} generators:", out.basis.len(), system.len());
    for &i in &out.basis {
        println!("  [{i}] {}", system.polys()[i]);
    }
    println!("verified: {}", out.verification.unwrap().passed);
    Ok(())
}
