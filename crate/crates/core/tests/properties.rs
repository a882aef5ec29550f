mod common;

use std::collections::BTreeSet;

use common::{monomials, random_system, F101, GREVLEX};
use hellyspace::cli::{parse_system, serialize_system};
use hellyspace::field::FieldSpec;
use hellyspace::linalg::{build_coeff_matrix, rank};
use hellyspace::poly::{Monomial, PolySystem, Polynomial};
use hellyspace::spaces::{
    mingen, smallgen_oracle, solve_basis, solve_oracle, verify_solve, MingenConfig, SolveConfig,
};
use hellyspace::violator::{Phase, SampleRng};
use proptest::prelude::*;

const P: i64 = 101;

fn det_mod_p(a: &[Vec<i64>]) -> i64 {
    // Leibniz expansion; fine for the 6x6 matrices used here.
    fn rec(a: &[Vec<i64>], row: usize, used: &mut Vec<bool>, sign: i64, acc: i64, out: &mut i64) {
        let n = a.len();
        if row == n {
            *out = (*out + sign * acc).rem_euclid(P);
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            // sign flips once per earlier-row column to the right of c
            let inv = (0..c).filter(|&k| !used[k]).count();
            used[c] = true;
            let s = if inv % 2 == 0 { sign } else { -sign };
            rec(a, row + 1, used, s, acc * a[row][c] % P, out);
            used[c] = false;
        }
    }
    let mut out = 0;
    rec(a, 0, &mut vec![false; a.len()], 1, 1, &mut out);
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect()
}

/// Rank as the size of the largest nonvanishing minor.
fn minor_rank(rows: &[Vec<i64>]) -> usize {
    let nr = rows.len();
    let nc = rows.first().map_or(0, Vec::len);
    for k in (1..=nr.min(nc)).rev() {
        for rs in subsets(nr, k) {
            for cs in subsets(nc, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c]).collect()).collect();
                if det_mod_p(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

fn dense_rows(system: &PolySystem, support: &[Monomial]) -> Vec<Vec<i64>> {
    support
        .iter()
        .map(|mono| {
            system
                .iter()
                .map(|p| p.terms().iter().find(|(m, _)| m == mono).map_or(0, |(_, c)| c.residue().unwrap() as i64))
                .collect()
        })
        .collect()
}

fn scaled(system: &PolySystem, rng: &mut SampleRng) -> PolySystem {
    let f = system.field();
    let polys: Vec<Polynomial> = system.iter().map(|p| p.scale(&f.from_i64(1 + rng.below(100) as i64))).collect();
    PolySystem::new(f, system.nvars(), system.order(), polys).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_matches_minor_expansion(seed in any::<u64>(), m in 1usize..7) {
        let mut rng = SampleRng::new(seed);
        let system = random_system(&mut rng, F101, 2, 0, 2, m);
        let support = monomials(2, 0, 2);
        let expected = minor_rank(&dense_rows(&system, &support));
        prop_assert_eq!(rank(&build_coeff_matrix(&system, GREVLEX)).rank, expected);
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>(), m in 1usize..8, q in any::<bool>()) {
        let mut rng = SampleRng::new(seed);
        let field = if q { FieldSpec::Rationals } else { F101 };
        let system = random_system(&mut rng, field, 3, 0, 3, m);
        let parsed = parse_system(&serialize_system(&system)).unwrap();
        prop_assert!(parsed.zero_lines.is_empty());
        // the generator may have stripped zero polynomials; compare what survived
        prop_assert_eq!(parsed.system.field(), system.field());
        prop_assert_eq!(parsed.system.nvars(), system.nvars());
        prop_assert_eq!(parsed.system.polys(), system.polys());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn scaling_keeps_the_classification(seed in any::<u64>()) {
        let mut rng = SampleRng::new(seed);
        let system = random_system(&mut rng, F101, 2, 1, 2, 12);
        let other = scaled(&system, &mut rng);
        let mut cfg = SolveConfig::new(system.clone());
        cfg.seed = seed;
        let a = solve_basis(&cfg).unwrap();
        cfg.system = other.clone();
        let b = solve_basis(&cfg).unwrap();
        prop_assert_eq!(a.classification, b.classification);
        prop_assert!(verify_solve(&other, &a.basis, GREVLEX).unwrap().passed);
    }

    #[test]
    fn ideal_violation_is_weaker_than_radical_violation(seed in any::<u64>()) {
        let mut rng = SampleRng::new(seed);
        let system = random_system(&mut rng, F101, 2, 1, 2, 8);
        let solve = solve_oracle(&system, GREVLEX);
        let gen = smallgen_oracle(&system, GREVLEX);
        for _ in 0..6 {
            let g = system.len();
            let base: Vec<usize> = (0..g).filter(|_| rng.below(3) == 0).collect();
            let h = rng.below(g as u64) as usize;
            if solve.primitive(Phase::Other, &base, h) {
                prop_assert!(gen.primitive(Phase::Other, &base, h));
            }
        }
    }

    #[test]
    fn monomial_ideals_recover_their_minimal_generators(seed in any::<u64>(), count in 2usize..14) {
        let mut rng = SampleRng::new(seed);
        let pool = monomials(3, 1, 4);
        let mut picked = BTreeSet::new();
        while picked.len() < count {
            picked.insert(rng.below(pool.len() as u64) as usize);
        }
        let mut order: Vec<usize> = picked.into_iter().collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.below(i as u64 + 1) as usize);
        }
        let monos: Vec<Monomial> = order.iter().map(|&i| pool[i].clone()).collect();
        let minimal: Vec<usize> = (0..monos.len())
            .filter(|&i| !(0..monos.len()).any(|j| j != i && monos[j].divides(&monos[i])))
            .collect();
        let polys: Vec<Polynomial> =
            monos.iter().map(|m| Polynomial::from_terms(F101, 3, GREVLEX, [(m.clone(), F101.one())])).collect();
        let system = PolySystem::new(F101, 3, GREVLEX, polys).unwrap();
        let mut cfg = MingenConfig::new(system, minimal.len());
        cfg.seed = seed;
        cfg.verify = true;
        let out = mingen(&cfg).unwrap();
        prop_assert_eq!(out.basis, minimal);
        prop_assert!(out.verification.unwrap().passed);
    }
}

#[test]
fn minor_rank_oracle_sanity() {
    assert_eq!(minor_rank(&[vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(minor_rank(&[vec![1, 2], vec![3, 4]]), 2);
    assert_eq!(minor_rank(&[vec![0, 0, 0]]), 0);
    assert_eq!(det_mod_p(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]), P - 1);
}
