//! Oracle-call counts on large random systems of fixed rank.
//!
//! The dimension bound stays at 6 while the number of polynomials grows, and the
//! call count grows roughly linearly with it.

use hellyspace::cli::{gen_random, RandomSpec};
use hellyspace::spaces::{solve_basis, SolveConfig};

fn main() -> hellyspace::Result<()> {
    for m in [100, 400, 1600] {
        let mut spec = RandomSpec::new(3, 2, m, 6);
        spec.seed = m as u64;
        let system = gen_random(&spec)?;
        let mut cfg = SolveConfig::new(system);
        cfg.verify = true;
        let out = solve_basis(&cfg)?;
        println!(
            "m = {m:5}  basis = {:?}  {:?}  calls = {:5}  rounds = {}/{}  verified = {}",
            out.basis,
            out.classification.unwrap(),
            out.stats.primitive_calls,
            out.stats.rounds_alg1,
            out.stats.rounds_alg2,
            out.verification.unwrap().passed
        );
    }
    Ok(())
}
