//! Linearization of polynomial systems: coefficient vectors, the coefficient
//! matrix, its exact rank, and the pivot subsystem that realizes the Helly bound.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{Monomial, MonomialOrder, PolySystem, Polynomial};

/// Row labels of a coefficient matrix: distinct monomials sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIndex {
    order: MonomialOrder,
    monomials: Vec<Monomial>,
    lookup: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(monomials: impl IntoIterator<Item = Monomial>, order: MonomialOrder) -> Self {
        let mut monomials: Vec<Monomial> = monomials.into_iter().collect();
        monomials.sort_by(|a, b| order.cmp(b, a));
        monomials.dedup();
        let lookup = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialIndex {
            order,
            monomials,
            lookup,
        }
    }

    /// Every monomial occurring in `system`.
    pub fn of_system(system: &PolySystem, order: MonomialOrder) -> Self {
        Self::new(system.iter().flat_map(|p| p.terms().iter().map(|(m, _)| m.clone())), order)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }
}

pub type SparseVector = Vec<(usize, FieldElement)>;

/// Coefficients of `f` indexed by `idx`, as `(row, value)` pairs sorted by row.
pub fn coeff_vector(f: &Polynomial, idx: &MonomialIndex) -> Result<SparseVector> {
    let mut v = f
        .terms()
        .iter()
        .map(|(m, c)| {
            idx.position(m)
                .map(|row| (row, c.clone()))
                .ok_or_else(|| Error::MonomialNotIndexed(m.to_string()))
        })
        .collect::<Result<SparseVector>>()?;
    v.sort_by_key(|(row, _)| *row);
    Ok(v)
}

/// Column `j` is the coefficient vector of polynomial `j`.
#[derive(Clone, Debug)]
pub struct CoeffMatrix {
    pub rows: MonomialIndex,
    pub cols: Vec<SparseVector>,
    pub field: FieldSpec,
}

impl CoeffMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Dense copy of column `j`.
    pub fn column_dense(&self, j: usize) -> Vec<FieldElement> {
        let mut v = vec![self.field.zero(); self.nrows()];
        for (r, c) in &self.cols[j] {
            v[*r] = c.clone();
        }
        v
    }

    /// Rebuilds polynomial `j` from its column.
    pub fn column_polynomial(&self, j: usize, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            nvars,
            self.rows.order(),
            self.cols[j].iter().map(|(r, c)| (self.rows.monomials()[*r].clone(), c.clone())),
        )
    }
}

pub fn build_coeff_matrix(system: &PolySystem, order: MonomialOrder) -> CoeffMatrix {
    let rows = MonomialIndex::of_system(system, order);
    let cols = system
        .iter()
        .map(|p| coeff_vector(p, &rows).expect("index covers the system"))
        .collect();
    CoeffMatrix {
        rows,
        cols,
        field: system.field(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    /// Columns that first raised the rank, scanning left to right.
    pub pivot_columns: Vec<usize>,
}

/// Exact column rank.
///
/// Columns are processed left to right; a column that is not in the span of the
/// earlier pivots becomes a pivot, with its topmost surviving row as pivot row.
pub fn rank(m: &CoeffMatrix) -> RankResult {
    let pivot_columns = match m.field {
        FieldSpec::Prime(p) => rank_mod_p(m, p as u64),
        FieldSpec::Rationals => rank_fraction_free(m),
    };
    RankResult {
        rank: pivot_columns.len(),
        pivot_columns,
    }
}

fn rank_mod_p(m: &CoeffMatrix, p: u64) -> Vec<usize> {
    let n = m.nrows();
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut out = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        if pivots.len() == n {
            break;
        }
        let mut v = vec![0u64; n];
        for (r, c) in col {
            v[*r] = c.residue().expect("prime field entry") as u64;
        }
        for (row, pv) in &pivots {
            let f = v[*row];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(pv) {
                    *x = (*x + (p - f) * y % p) % p;
                }
            }
        }
        if let Some(row) = v.iter().position(|&x| x != 0) {
            let inv = FieldSpec::Prime(p as u32)
                .from_i64(v[row] as i64)
                .inverse()
                .expect("nonzero")
                .residue()
                .unwrap() as u64;
            v.iter_mut().for_each(|x| *x = *x * inv % p);
            pivots.push((row, v));
            out.push(j);
        }
    }
    out
}

fn rank_fraction_free(m: &CoeffMatrix) -> Vec<usize> {
    let n = m.nrows();
    let mut pivots: Vec<(usize, Vec<BigInt>)> = Vec::new();
    let mut out = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        if pivots.len() == n {
            break;
        }
        // clear denominators: scaling a column does not change the rank
        let den = col.iter().fold(BigInt::one(), |acc, (_, c)| {
            acc.lcm(c.as_rational().expect("rational entry").denom())
        });
        let mut v = vec![BigInt::zero(); n];
        for (r, c) in col {
            let q = c.as_rational().unwrap();
            v[*r] = q.numer() * (&den / q.denom());
        }
        for (row, pv) in &pivots {
            if v[*row].is_zero() {
                continue;
            }
            let a = &pv[*row];
            let b = v[*row].clone();
            for (x, y) in v.iter_mut().zip(pv) {
                *x = &*x * a - &b * y;
            }
            strip_content(&mut v);
        }
        if let Some(row) = v.iter().position(|x| !x.is_zero()) {
            strip_content(&mut v);
            pivots.push((row, v));
            out.push(j);
        }
    }
    out
}

fn strip_content(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Indices of a linearly independent subsystem spanning the same coefficient space.
/// It cuts out the same variety as the whole system.
pub fn pivot_subsystem(system: &PolySystem, order: MonomialOrder) -> Vec<usize> {
    rank(&build_coeff_matrix(system, order)).pivot_columns
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// A priori bound on the rank of a system in `nvars` variables of degree at most `d`:
/// the number of degree-`d` monomials when homogeneous, otherwise the number of
/// monomials of degree at most `d`.
pub fn helly_bounds(nvars: usize, d: u32, homogeneous: bool) -> u128 {
    assert!(nvars >= 1, "need at least one variable");
    let n = nvars as u64 - 1;
    let d = d as u64;
    if homogeneous {
        binomial(n + d, d)
    } else {
        binomial(n + d + 1, n + 1)
    }
}
