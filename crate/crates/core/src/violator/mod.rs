//! Violator spaces and Clarkson's randomized basis computation.
//!
//! A violator space is a finite ground set `H` with a map `vi` from subsets to
//! subsets satisfying consistency (`G ∩ vi(G) = ∅`) and locality (`F ⊆ G` and
//! `G ∩ vi(F) = ∅` imply `vi(F) = vi(G)`). The engine only ever asks the
//! primitive question "is `h` in `vi(G)`?", through a [`ViolatorOracle`].

mod clarkson;
mod rng;

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

pub use clarkson::{
    basis2, brute_force_basis, clarkson, greedy_basis, BasisResult, ClarksonConfig, Multiplicities, SmallBasis,
};
pub use rng::{splitmix64, SampleRng, Streams};

use crate::error::{Error, Result};

/// A violator space over the ground set `0..ground_size()`.
pub trait ViolatorSpace: Sync {
    fn ground_size(&self) -> usize;

    /// Whether `h` lies in `vi(basis)`. `basis` is sorted; `h` may be a member of it.
    /// Must be deterministic.
    fn violates(&self, basis: &[usize], h: usize) -> bool;

    /// Whether `F ⊆ G` implies `vi(G) ⊆ vi(F)`. Monotone spaces admit a greedy
    /// basis search that is linear in the set size instead of exponential in δ.
    fn is_monotone(&self) -> bool {
        false
    }
}

impl<S: ViolatorSpace + ?Sized> ViolatorSpace for &S {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn violates(&self, basis: &[usize], h: usize) -> bool {
        (**self).violates(basis, h)
    }
    fn is_monotone(&self) -> bool {
        (**self).is_monotone()
    }
}

/// Which part of the computation issued a primitive query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    /// Violation scans of Clarkson's first algorithm.
    Alg1Scan,
    /// Violation scans of the reweighting second algorithm.
    Alg2Scan,
    /// Subset enumeration inside the brute-force basis search.
    BruteForce,
    /// Post-hoc certificate checks.
    Verify,
    /// Anything else (axiom checks, materialization).
    Other,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CallCounts {
    pub alg1_scans: u64,
    pub alg2_scans: u64,
    pub bruteforce: u64,
    pub verify: u64,
    #[serde(skip)]
    pub other: u64,
}

impl CallCounts {
    /// Calls made by the sampling algorithms themselves (verification and other excluded).
    pub fn sampling_total(&self) -> u64 {
        self.alg1_scans + self.alg2_scans + self.bruteforce
    }

    pub fn since(&self, earlier: &CallCounts) -> CallCounts {
        CallCounts {
            alg1_scans: self.alg1_scans - earlier.alg1_scans,
            alg2_scans: self.alg2_scans - earlier.alg2_scans,
            bruteforce: self.bruteforce - earlier.bruteforce,
            verify: self.verify - earlier.verify,
            other: self.other - earlier.other,
        }
    }
}

#[derive(Debug, Default)]
struct CallLedger {
    alg1_scans: AtomicU64,
    alg2_scans: AtomicU64,
    bruteforce: AtomicU64,
    verify: AtomicU64,
    other: AtomicU64,
}

impl CallLedger {
    fn counter(&self, phase: Phase) -> &AtomicU64 {
        match phase {
            Phase::Alg1Scan => &self.alg1_scans,
            Phase::Alg2Scan => &self.alg2_scans,
            Phase::BruteForce => &self.bruteforce,
            Phase::Verify => &self.verify,
            Phase::Other => &self.other,
        }
    }
}

/// A violator space plus the ledger counting every primitive query made against it.
pub struct ViolatorOracle<S> {
    space: S,
    ledger: CallLedger,
    parallel: bool,
}

/// Scans shorter than this run sequentially even when parallelism is on.
const PARALLEL_THRESHOLD: usize = 32;

impl<S: ViolatorSpace> ViolatorOracle<S> {
    pub fn new(space: S) -> Self {
        ViolatorOracle {
            space,
            ledger: CallLedger::default(),
            parallel: true,
        }
    }

    /// Enables or disables parallel violation scans. Results and counts do not depend on it.
    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn space(&self) -> &S {
        &self.space
    }

    pub fn ground_size(&self) -> usize {
        self.space.ground_size()
    }

    /// The primitive query `h ∈ vi(basis)`, counted under `phase`.
    pub fn primitive(&self, phase: Phase, basis: &[usize], h: usize) -> bool {
        self.ledger.counter(phase).fetch_add(1, Ordering::Relaxed);
        self.space.violates(basis, h)
    }

    pub fn counts(&self) -> CallCounts {
        let l = &self.ledger;
        CallCounts {
            alg1_scans: l.alg1_scans.load(Ordering::Relaxed),
            alg2_scans: l.alg2_scans.load(Ordering::Relaxed),
            bruteforce: l.bruteforce.load(Ordering::Relaxed),
            verify: l.verify.load(Ordering::Relaxed),
            other: l.other.load(Ordering::Relaxed),
        }
    }

    pub fn total_calls(&self) -> u64 {
        let c = self.counts();
        c.sampling_total() + c.verify + c.other
    }
}

/// `{h ∈ G \ C : h ∈ vi(C)}`, sorted. `c` must be sorted; makes `|G \ C|` queries.
pub fn violation_set<S: ViolatorSpace>(c: &[usize], g: &[usize], oracle: &ViolatorOracle<S>, phase: Phase) -> Vec<usize> {
    let candidates: Vec<usize> = g.iter().copied().filter(|h| c.binary_search(h).is_err()).collect();
    if oracle.parallel && candidates.len() >= PARALLEL_THRESHOLD {
        candidates
            .into_par_iter()
            .filter(|&h| oracle.primitive(phase, c, h))
            .collect()
    } else {
        candidates.into_iter().filter(|&h| oracle.primitive(phase, c, h)).collect()
    }
}

/// `vi(set) ∩ H` over the whole ground set, members of `set` included.
pub fn materialize<S: ViolatorSpace>(set: &[usize], oracle: &ViolatorOracle<S>) -> Vec<usize> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    (0..oracle.ground_size())
        .filter(|&h| oracle.primitive(Phase::Other, &sorted, h))
        .collect()
}

/// Largest ground set [`check_axioms`] will enumerate.
pub const AXIOM_CHECK_CAP: usize = 12;

/// Exhaustively checks consistency and locality of `vi` on the first `m` elements.
pub fn check_axioms<S: ViolatorSpace>(m: usize, oracle: &ViolatorOracle<S>) -> Result<bool> {
    if m > AXIOM_CHECK_CAP {
        return Err(Error::GroundSetTooLarge {
            m,
            cap: AXIOM_CHECK_CAP,
        });
    }
    let full = 1u32 << m;
    let members = |mask: u32| (0..m).filter(move |i| mask & (1 << i) != 0).collect::<Vec<_>>();
    let vi: Vec<u32> = (0..full)
        .into_par_iter()
        .map(|mask| {
            let set = members(mask);
            (0..m)
                .filter(|&h| oracle.primitive(Phase::Other, &set, h))
                .fold(0u32, |acc, h| acc | 1 << h)
        })
        .collect();
    for g in 0..full {
        if vi[g as usize] & g != 0 {
            return Ok(false);
        }
        // every submask F of G
        let mut f = g;
        loop {
            if vi[f as usize] & g == 0 && vi[f as usize] != vi[g as usize] {
                return Ok(false);
            }
            if f == 0 {
                break;
            }
            f = (f - 1) & g;
        }
    }
    Ok(true)
}

#[cfg(test)]
pub(crate) mod test_spaces {
    use super::ViolatorSpace;

    /// Points on a line; `h` violates `G` when it lies outside `[min G, max G]`.
    /// Combinatorial dimension 2.
    pub struct Interval(pub Vec<i64>);

    impl ViolatorSpace for Interval {
        fn ground_size(&self) -> usize {
            self.0.len()
        }
        fn violates(&self, basis: &[usize], h: usize) -> bool {
            let vals = basis.iter().map(|&i| self.0[i]);
            match (vals.clone().min(), vals.max()) {
                (Some(lo), Some(hi)) => self.0[h] < lo || self.0[h] > hi,
                _ => true,
            }
        }
        fn is_monotone(&self) -> bool {
            true
        }
    }

    /// Vectors over GF(2) encoded as bitmasks; `h` violates `G` when it is outside their span.
    /// Combinatorial dimension equals the rank.
    pub struct Span(pub Vec<u32>);

    impl ViolatorSpace for Span {
        fn ground_size(&self) -> usize {
            self.0.len()
        }
        fn violates(&self, basis: &[usize], h: usize) -> bool {
            let mut echelon: Vec<u32> = Vec::new();
            for &i in basis {
                let mut v = self.0[i];
                for &e in &echelon {
                    v = v.min(v ^ e);
                }
                if v != 0 {
                    echelon.push(v);
                    echelon.sort_unstable_by(|a, b| b.cmp(a));
                }
            }
            let mut v = self.0[h];
            for &e in &echelon {
                v = v.min(v ^ e);
            }
            v != 0
        }
        fn is_monotone(&self) -> bool {
            true
        }
    }

    /// Violates everything: breaks consistency.
    pub struct Everything(pub usize);

    impl ViolatorSpace for Everything {
        fn ground_size(&self) -> usize {
            self.0
        }
        fn violates(&self, _: &[usize], _: usize) -> bool {
            true
        }
    }
}
