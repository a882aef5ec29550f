//! Plugging a non-algebraic problem into the sampler: the smallest interval
//! containing a set of points on the line.
//!
//! A point violates a set when it lies outside the set's interval. Every interval
//! is pinned by at most two points, so the dimension is 2.

use hellyspace::violator::{check_axioms, clarkson, ClarksonConfig, ViolatorOracle, ViolatorSpace};

struct Hull {
    points: Vec<i64>,
}

impl ViolatorSpace for Hull {
    fn ground_size(&self) -> usize {
        self.points.len()
    }

    fn violates(&self, basis: &[usize], h: usize) -> bool {
        let xs = basis.iter().map(|&i| self.points[i]);
        match (xs.clone().min(), xs.max()) {
            (Some(lo), Some(hi)) => !(lo..=hi).contains(&self.points[h]),
            _ => true,
        }
    }

    fn is_monotone(&self) -> bool {
        true
    }
}

fn main() -> hellyspace::Result<()> {
    let points: Vec<i64> = (0..5000u64).map(|i| (i.wrapping_mul(2654435761) % 100_003) as i64 - 50_000).collect();
    let small = ViolatorOracle::new(Hull { points: points[..10].to_vec() });
    println!("axioms hold on the first 10 points: {}", check_axioms(10, &small)?);

    let oracle = ViolatorOracle::new(Hull { points: points.clone() });
    let ground: Vec<usize> = (0..points.len()).collect();
    let out = clarkson(&ground, 2, &oracle, &ClarksonConfig::new(1))?;
    let xs: Vec<i64> = out.basis.iter().map(|&i| points[i]).collect();
    println!("basis {:?} -> points {:?}", out.basis, xs);
    println!("min/max by scan: {:?}", (points.iter().min(), points.iter().max()));
    println!("{} sampling calls for {} points", out.primitive_calls, points.len());
    Ok(())
}
