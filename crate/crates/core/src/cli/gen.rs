//! Instance generators.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{build_coeff_matrix, helly_bounds, rank};
use crate::poly::{Monomial, MonomialOrder, PolySystem, Polynomial};
use crate::violator::SampleRng;

/// The 2-coloring system of a graph on `n` vertices that has no proper 2-coloring.
///
/// Vertex `i` gets `x_i^2 - 1` (colors are ±1) and every edge `{i, j}` gets `x_i + x_j`
/// (endpoints differ). The graph joins every even vertex to every odd vertex and adds
/// the edge `{0, 2}`, which closes the odd cycle 0-1-2. Quadratics come first, then
/// edges in lexicographic order: `n + n²/4 + 1` polynomials of rank `2n`.
pub fn gen_coloring(n: usize, field: FieldSpec) -> Result<PolySystem> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::OddN(n));
    }
    if field.characteristic() == 2 {
        return Err(Error::CharTwo);
    }
    let ord = MonomialOrder::GrevLex;
    let one = Polynomial::one(field, n, ord);
    let x = |i| Polynomial::var(field, n, ord, i);
    let mut polys: Vec<Polynomial> = (0..n).map(|i| &(&x(i) * &x(i)) - &one).collect();
    for i in 0..n {
        for j in i + 1..n {
            if (i + j) % 2 == 1 || (i, j) == (0, 2) {
                polys.push(&x(i) + &x(j));
            }
        }
    }
    PolySystem::new(field, n, ord, polys)
}

/// Parameters of [`gen_random`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub nvars: usize,
    pub d: u32,
    pub m: usize,
    pub rank: usize,
    pub homogeneous: bool,
    pub seed: u64,
    pub field: FieldSpec,
}

impl RandomSpec {
    pub fn new(nvars: usize, d: u32, m: usize, rank: usize) -> Self {
        RandomSpec {
            nvars,
            d,
            m,
            rank,
            homogeneous: false,
            seed: 0,
            field: FieldSpec::default(),
        }
    }
}

fn monomials_up_to(nvars: usize, d: u32, exact: bool) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, nvars: usize, left: u32, exact: bool, out: &mut Vec<Monomial>) {
        if prefix.len() == nvars {
            if !exact || left == 0 {
                out.push(Monomial::new(prefix.clone()));
            }
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(prefix, nvars, left - e, exact, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, d, exact, &mut out);
    out
}

fn random_element(field: FieldSpec, rng: &mut SampleRng) -> FieldElement {
    match field {
        FieldSpec::Prime(p) => field.from_i64(rng.below(p as u64) as i64),
        FieldSpec::Rationals => field.from_i64(rng.below(19) as i64 - 9),
    }
}

/// `m` polynomials of degree `d` in `nvars` variables spanning a space of dimension `rank`.
///
/// Draws `rank` dense random polynomials until they are linearly independent, then emits
/// random nonzero linear combinations of them (or the core itself when `m == rank`).
pub fn gen_random(spec: &RandomSpec) -> Result<PolySystem> {
    let RandomSpec {
        nvars,
        d,
        m,
        rank: target,
        homogeneous,
        seed,
        field,
    } = *spec;
    if nvars == 0 {
        return Err(Error::InfeasibleParameters("need at least one variable".into()));
    }
    let bound = helly_bounds(nvars, d, homogeneous);
    if target == 0 || target as u128 > bound {
        return Err(Error::InfeasibleParameters(format!(
            "rank {target} is outside [1, {bound}] for {nvars} variables in degree {d}"
        )));
    }
    if m < target {
        return Err(Error::InfeasibleParameters(format!("m = {m} is below the rank {target}")));
    }
    let ord = MonomialOrder::GrevLex;
    let support = monomials_up_to(nvars, d, homogeneous);
    let mut rng = SampleRng::new(seed);
    let draw = |rng: &mut SampleRng| {
        let terms = support.iter().map(|mono| (mono.clone(), random_element(field, rng)));
        Polynomial::from_terms(field, nvars, ord, terms)
    };
    let core = loop {
        let core: Vec<Polynomial> = (0..target).map(|_| draw(&mut rng)).collect();
        let sys = PolySystem::new(field, nvars, ord, core.clone())?;
        if sys.len() == target && rank(&build_coeff_matrix(&sys, ord)).rank == target {
            break core;
        }
    };
    if m == target {
        return PolySystem::new(field, nvars, ord, core);
    }
    let mut polys = Vec::with_capacity(m);
    while polys.len() < m {
        let mut acc = Polynomial::zero(field, nvars, ord);
        for g in &core {
            acc = &acc + &g.scale(&random_element(field, &mut rng));
        }
        if !acc.is_zero() {
            polys.push(acc);
        }
    }
    let system = PolySystem::new(field, nvars, ord, polys)?;
    let got = rank(&build_coeff_matrix(&system, ord)).rank;
    if got != target {
        return Err(Error::InfeasibleParameters(format!("generated rank {got}, wanted {target}")));
    }
    Ok(system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIME;

    const P: FieldSpec = FieldSpec::Prime(DEFAULT_PRIME);

    fn rank_of(s: &PolySystem) -> usize {
        rank(&build_coeff_matrix(s, MonomialOrder::GrevLex)).rank
    }

    #[test]
    fn coloring_four() {
        let s = gen_coloring(4, P).unwrap();
        let lines: Vec<String> = s.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            lines,
            vec![
                "x0^2 - 1", "x1^2 - 1", "x2^2 - 1", "x3^2 - 1", "x0 + x1", "x0 + x2", "x0 + x3", "x1 + x2", "x2 + x3"
            ]
        );
        assert_eq!(rank_of(&s), 8);
    }

    #[test]
    fn coloring_sizes_and_ranks() {
        for n in [4, 6, 8, 10, 12] {
            let s = gen_coloring(n, P).unwrap();
            assert_eq!(s.len(), n + n * n / 4 + 1);
            assert_eq!(rank_of(&s), 2 * n);
        }
        assert_eq!(gen_coloring(5, P), Err(Error::OddN(5)));
        assert_eq!(gen_coloring(2, P), Err(Error::OddN(2)));
        assert_eq!(gen_coloring(4, FieldSpec::Prime(2)), Err(Error::CharTwo));
        assert_eq!(rank_of(&gen_coloring(6, FieldSpec::Rationals).unwrap()), 12);
    }

    #[test]
    fn random_linear_forms() {
        let mut spec = RandomSpec::new(2, 1, 500, 2);
        spec.homogeneous = true;
        let s = gen_random(&spec).unwrap();
        assert_eq!(s.len(), 500);
        assert!(s.iter().all(|p| p.is_homogeneous() && p.degree() == Some(1)));
        assert_eq!(rank_of(&s), 2);
    }

    #[test]
    fn random_core_only() {
        let mut spec = RandomSpec::new(3, 2, 6, 6);
        spec.homogeneous = true;
        let s = gen_random(&spec).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(rank_of(&s), 6);
        assert!(s.iter().all(|p| p.is_homogeneous() && p.degree() == Some(2)));
    }

    #[test]
    fn random_inhomogeneous_rank() {
        for seed in 0..5 {
            let mut spec = RandomSpec::new(3, 2, 40, 6);
            spec.seed = seed;
            let s = gen_random(&spec).unwrap();
            assert_eq!(rank_of(&s), 6);
            assert_eq!(s.max_degree(), 2);
        }
        let mut q = RandomSpec::new(2, 2, 10, 3);
        q.field = FieldSpec::Rationals;
        assert_eq!(rank_of(&gen_random(&q).unwrap()), 3);
    }

    #[test]
    fn random_rejects_bad_parameters() {
        let mut spec = RandomSpec::new(3, 2, 100, 7);
        spec.homogeneous = true;
        assert!(matches!(gen_random(&spec), Err(Error::InfeasibleParameters(_))));
        assert!(matches!(gen_random(&RandomSpec::new(3, 2, 3, 4)), Err(Error::InfeasibleParameters(_))));
        assert!(matches!(gen_random(&RandomSpec::new(3, 2, 3, 0)), Err(Error::InfeasibleParameters(_))));
    }

    #[test]
    fn random_is_reproducible() {
        let spec = RandomSpec::new(3, 2, 30, 5);
        assert_eq!(gen_random(&spec).unwrap(), gen_random(&spec).unwrap());
        let mut other = spec;
        other.seed = 1;
        assert_ne!(gen_random(&spec).unwrap(), gen_random(&other).unwrap());
    }
}
