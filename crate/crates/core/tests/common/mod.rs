#![allow(dead_code)]

use hellyspace::cli::{gen_coloring, gen_random, serialize_system, RandomSpec};
use hellyspace::field::FieldSpec;
use hellyspace::poly::{Monomial, MonomialOrder, PolySystem, Polynomial};
use hellyspace::violator::SampleRng;

pub const GREVLEX: MonomialOrder = MonomialOrder::GrevLex;
pub const F101: FieldSpec = FieldSpec::Prime(101);

/// Exponent vectors of all monomials in `nvars` variables with degree in `lo..=hi`.
pub fn monomials(nvars: usize, lo: u32, hi: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; nvars];
    loop {
        let deg: u32 = e.iter().sum();
        if (lo..=hi).contains(&deg) {
            out.push(Monomial::new(e.clone()));
        }
        // odometer over exponents 0..=hi
        let mut i = 0;
        loop {
            if i == nvars {
                return out;
            }
            e[i] += 1;
            if e[i] <= hi {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// A sparse random polynomial with 1 to 4 terms of degree in `lo..=hi` and small coefficients.
pub fn random_poly(rng: &mut SampleRng, field: FieldSpec, nvars: usize, lo: u32, hi: u32) -> Polynomial {
    let support = monomials(nvars, lo, hi);
    let nterms = 1 + rng.below(4) as usize;
    let terms: Vec<(Monomial, _)> = (0..nterms)
        .map(|_| {
            let m = support[rng.below(support.len() as u64) as usize].clone();
            (m, field.from_i64(rng.below(7) as i64 - 3))
        })
        .collect();
    Polynomial::from_terms(field, nvars, GREVLEX, terms)
}

pub fn random_system(rng: &mut SampleRng, field: FieldSpec, nvars: usize, lo: u32, hi: u32, m: usize) -> PolySystem {
    let polys: Vec<Polynomial> = (0..m).map(|_| random_poly(rng, field, nvars, lo, hi)).collect();
    PolySystem::new(field, nvars, GREVLEX, polys).unwrap()
}

/// A named input file for the command-line regression cases.
#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub text: String,
    /// `None` for solve-basis, `Some(gamma)` for mingen.
    pub gamma: Option<usize>,
    pub seed: u64,
}

fn case(name: &str, system: &PolySystem, gamma: Option<usize>, seed: u64) -> Case {
    Case {
        name: name.to_string(),
        text: serialize_system(system),
        gamma,
        seed,
    }
}

/// The regression suite: coloring instances, fixed-rank random systems, and
/// homogeneous generating-set instances.
pub fn regression_cases() -> Vec<Case> {
    let p = FieldSpec::default();
    let mut cases = Vec::new();
    for n in [4, 6, 8] {
        for seed in [0, 7] {
            cases.push(case(&format!("coloring{n}-s{seed}"), &gen_coloring(n, p).unwrap(), None, seed));
        }
    }
    let shapes = [
        (2, 1, 60, 2, false),
        (3, 2, 120, 6, false),
        (3, 2, 400, 6, true),
        (3, 2, 80, 4, true),
        (4, 2, 150, 5, false),
        (2, 2, 50, 3, false),
    ];
    for (k, &(nvars, d, m, rank, homogeneous)) in shapes.iter().enumerate() {
        let mut spec = RandomSpec::new(nvars, d, m, rank);
        spec.homogeneous = homogeneous;
        spec.seed = 100 + k as u64;
        let s = gen_random(&spec).unwrap();
        cases.push(case(&format!("random-{nvars}-{d}-{m}-{rank}"), &s, None, k as u64));
        if homogeneous {
            // same-degree forms: minimal generators = rank of the span
            cases.push(case(&format!("mingen-{nvars}-{d}-{m}-{rank}"), &s, Some(rank), k as u64));
        }
    }
    let mut spec = RandomSpec::new(3, 1, 90, 2);
    spec.homogeneous = true;
    cases.push(case("mingen-linear", &gen_random(&spec).unwrap(), Some(2), 3));
    cases.push(Case {
        name: "mingen-monomial".into(),
        text: "x0^2\nx0*x1\nx1^2\nx0^3\nx0^2*x1 + x1^3\nx1^4 - x0*x1^3\n".into(),
        gamma: Some(3),
        seed: 5,
    });
    cases.push(Case {
        name: "inconsistent-pair".into(),
        text: "x0\nx0 + 1\n".into(),
        gamma: None,
        seed: 0,
    });
    cases
}
