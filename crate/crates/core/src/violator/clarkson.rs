use serde::Serialize;

use super::rng::{SampleRng, Streams};
use super::{violation_set, CallCounts, Phase, ViolatorOracle, ViolatorSpace};
use crate::error::{Error, Result};

/// How the base case of the reweighting algorithm finds a basis of a small set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SmallBasis {
    /// Greedy search when the space is monotone, exhaustive search otherwise.
    #[default]
    Auto,
    /// Minimum-cardinality basis by enumeration ([`brute_force_basis`]).
    Exhaustive,
    /// Inclusion-minimal basis by one forward and one pruning pass ([`greedy_basis`]).
    /// Only correct for monotone spaces.
    Greedy,
}

#[derive(Clone, Debug)]
pub struct ClarksonConfig {
    pub seed: u64,
    pub small_basis: SmallBasis,
    /// Upper bound on sampling rounds (both algorithms together) before giving up.
    pub max_rounds: usize,
}

impl ClarksonConfig {
    pub fn new(seed: u64) -> Self {
        ClarksonConfig {
            seed,
            small_basis: SmallBasis::Auto,
            max_rounds: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisResult {
    pub basis: Vec<usize>,
    pub delta_used: usize,
    /// Primitive queries issued by the sampling algorithms (verification excluded).
    pub primitive_calls: u64,
    pub calls: CallCounts,
    pub rounds_alg1: u64,
    pub rounds_alg2: u64,
    pub seed: u64,
}

/// Multiplicities `m(h)` over a sorted set `G`, all starting at 1.
///
/// Backed by a Fenwick tree so that weighted draws and doubling are logarithmic.
#[derive(Clone, Debug)]
pub struct Multiplicities {
    elements: Vec<usize>,
    weights: Vec<u64>,
    tree: Vec<u64>,
    total: u64,
}

impl Multiplicities {
    pub fn new(g: &[usize]) -> Self {
        let mut elements = g.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let n = elements.len();
        let mut m = Multiplicities {
            elements,
            weights: vec![1; n],
            tree: vec![0; n + 1],
            total: n as u64,
        };
        m.rebuild();
        m
    }

    fn rebuild(&mut self) {
        self.tree.iter_mut().for_each(|t| *t = 0);
        for i in 0..self.weights.len() {
            let mut j = i + 1;
            self.tree[j] += self.weights[i];
            j += j & j.wrapping_neg();
            if j < self.tree.len() {
                self.tree[j] += self.tree[i + 1];
            }
        }
    }

    fn add(&mut self, pos: usize, delta: u64) {
        let mut j = pos + 1;
        while j < self.tree.len() {
            self.tree[j] += delta;
            j += j & j.wrapping_neg();
        }
    }

    fn sub(&mut self, pos: usize, delta: u64) {
        let mut j = pos + 1;
        while j < self.tree.len() {
            self.tree[j] -= delta;
            j += j & j.wrapping_neg();
        }
    }

    /// Position whose cumulative weight range contains `target < total`.
    fn find(&self, mut target: u64) -> usize {
        let mut pos = 0;
        let mut step = self.tree.len().next_power_of_two() / 2;
        while step > 0 {
            let next = pos + step;
            if next < self.tree.len() && self.tree[next] <= target {
                pos = next;
                target -= self.tree[next];
            }
            step /= 2;
        }
        pos
    }

    fn position(&self, h: usize) -> Option<usize> {
        self.elements.binary_search(&h).ok()
    }

    pub fn get(&self, h: usize) -> Option<u64> {
        self.position(h).map(|i| self.weights[i])
    }

    /// `m(G)`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// `m(V)`; elements outside the set contribute nothing.
    pub fn weight_of(&self, v: &[usize]) -> u64 {
        v.iter().filter_map(|&h| self.get(h)).sum()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Doubles `m(h)` for every `h ∈ v` if `m(V)·3δ ≤ m(G)`. Returns whether it did.
    pub fn reweight(&mut self, v: &[usize], delta: usize) -> Result<bool> {
        let mv = self.weight_of(v) as u128;
        if mv * 3 * delta as u128 > self.total as u128 {
            return Ok(false);
        }
        if self.total.checked_add(mv as u64).is_none_or(|t| t > u64::MAX / 4) {
            return Err(Error::RoundLimit(0));
        }
        for &h in v {
            if let Some(i) = self.position(h) {
                let w = self.weights[i];
                self.weights[i] = 2 * w;
                self.add(i, w);
                self.total += w;
            }
        }
        Ok(true)
    }

    /// Draws `count` items without replacement from the multiset in which each `h`
    /// appears `m(h)` times; returns the distinct elements drawn, sorted.
    /// Asking for at least `m(G)` items returns the whole set.
    pub fn sample(&mut self, count: usize, rng: &mut SampleRng) -> Vec<usize> {
        if count as u64 >= self.total {
            return self.elements.clone();
        }
        let mut taken: Vec<(usize, u64)> = Vec::with_capacity(count);
        let mut remaining = self.total;
        for _ in 0..count {
            let pos = self.find(rng.below(remaining));
            self.sub(pos, 1);
            remaining -= 1;
            taken.push((pos, 1));
        }
        // restore the tree
        for &(pos, n) in &taken {
            self.add(pos, n);
        }
        let mut out: Vec<usize> = taken.iter().map(|&(pos, _)| self.elements[pos]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Minimum-cardinality basis of `g`: subsets in increasing size, lexicographic within a
/// size, first one with no violators in `g`. With `cap`, gives up with
/// [`Error::DeltaTooSmall`] instead of trying subsets larger than `cap`.
pub fn brute_force_basis<S: ViolatorSpace>(g: &[usize], oracle: &ViolatorOracle<S>, cap: Option<usize>) -> Result<Vec<usize>> {
    let mut g = g.to_vec();
    g.sort_unstable();
    g.dedup();
    let n = g.len();
    // elements that violated recently are tried first; only the call count depends on this
    let mut hot: Vec<usize> = g.clone();
    for k in 0..=n {
        if cap.is_some_and(|c| k > c) {
            return Err(Error::DeltaTooSmall { delta: cap.unwrap_or(0) });
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let subset: Vec<usize> = idx.iter().map(|&i| g[i]).collect();
            let violator = hot
                .iter()
                .position(|h| subset.binary_search(h).is_err() && oracle.primitive(Phase::BruteForce, &subset, *h));
            match violator {
                None => return Ok(subset),
                Some(p) => {
                    let h = hot.remove(p);
                    hot.insert(0, h);
                }
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("the whole set is always a basis of itself")
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Inclusion-minimal basis of `g` for a monotone space, with `|g| + |B|` queries.
///
/// A forward pass keeps each element that violates the elements kept so far; the kept
/// set then has no violators in `g`, so by locality it spans `vi(g)`. A pruning pass
/// drops every element that no longer violates the rest.
pub fn greedy_basis<S: ViolatorSpace>(g: &[usize], oracle: &ViolatorOracle<S>, cap: Option<usize>) -> Result<Vec<usize>> {
    let mut g = g.to_vec();
    g.sort_unstable();
    g.dedup();
    let mut kept: Vec<usize> = Vec::new();
    for &h in &g {
        if oracle.primitive(Phase::BruteForce, &kept, h) {
            kept.push(h);
        }
    }
    let mut i = 0;
    while i < kept.len() {
        let h = kept.remove(i);
        if oracle.primitive(Phase::BruteForce, &kept, h) {
            kept.insert(i, h);
            i += 1;
        }
    }
    match cap {
        Some(c) if kept.len() > c => Err(Error::DeltaTooSmall { delta: c }),
        _ => Ok(kept),
    }
}

struct Run<'a, S> {
    oracle: &'a ViolatorOracle<S>,
    delta: usize,
    greedy: bool,
    max_rounds: usize,
    rounds_alg1: u64,
    rounds_alg2: u64,
}

impl<S: ViolatorSpace> Run<'_, S> {
    fn new<'a>(oracle: &'a ViolatorOracle<S>, delta: usize, config: &ClarksonConfig) -> Run<'a, S> {
        let greedy = match config.small_basis {
            SmallBasis::Auto => oracle.space().is_monotone(),
            SmallBasis::Exhaustive => false,
            SmallBasis::Greedy => true,
        };
        Run {
            oracle,
            delta,
            greedy,
            max_rounds: config.max_rounds,
            rounds_alg1: 0,
            rounds_alg2: 0,
        }
    }

    fn tick(&self) -> Result<()> {
        if (self.rounds_alg1 + self.rounds_alg2) as usize >= self.max_rounds {
            return Err(Error::RoundLimit(self.max_rounds));
        }
        Ok(())
    }

    fn small_basis(&self, g: &[usize]) -> Result<Vec<usize>> {
        if self.greedy {
            greedy_basis(g, self.oracle, Some(self.delta))
        } else {
            brute_force_basis(g, self.oracle, Some(self.delta))
        }
    }

    fn basis2(&mut self, g: &[usize], rng: &mut SampleRng, mult: &mut Multiplicities) -> Result<Vec<usize>> {
        let sample = 6 * self.delta * self.delta;
        if g.len() <= sample {
            return self.small_basis(g);
        }
        loop {
            self.tick()?;
            self.rounds_alg2 += 1;
            let r = mult.sample(sample, rng);
            let c = self.small_basis(&r)?;
            let v = violation_set(&c, g, self.oracle, Phase::Alg2Scan);
            if v.is_empty() {
                return Ok(c);
            }
            mult.reweight(&v, self.delta).map_err(|_| Error::RoundLimit(self.max_rounds))?;
        }
    }

    fn alg1(&mut self, g: &[usize], streams: &mut Streams) -> Result<Vec<usize>> {
        let d = self.delta;
        if g.len() <= 9 * d * d {
            return self.basis2(g, &mut streams.alg2, &mut Multiplicities::new(g));
        }
        let sample = ((d * d * g.len()) as f64).sqrt() as usize;
        let sample = isqrt_fix(sample, d * d * g.len());
        let mut w: Vec<usize> = Vec::new();
        loop {
            self.tick()?;
            self.rounds_alg1 += 1;
            let pool: Vec<usize> = g.iter().copied().filter(|h| w.binary_search(h).is_err()).collect();
            let r = streams.alg1.subset(&pool, sample);
            let mut wr = w.clone();
            wr.extend(r);
            wr.sort_unstable();
            let c = self.basis2(&wr, &mut streams.alg2, &mut Multiplicities::new(&wr))?;
            let v = violation_set(&c, g, self.oracle, Phase::Alg1Scan);
            if v.is_empty() {
                return Ok(c);
            }
            // |V| ≤ 2√|G|
            if v.len() * v.len() <= 4 * g.len() {
                w.extend(v);
                w.sort_unstable();
            }
        }
    }
}

/// Corrects a floating-point square root to the exact `⌊√n⌋`.
fn isqrt_fix(mut r: usize, n: usize) -> usize {
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Clarkson's second algorithm on `g` with the given multiplicities and stream.
pub fn basis2<S: ViolatorSpace>(
    g: &[usize],
    delta: usize,
    oracle: &ViolatorOracle<S>,
    rng: &mut SampleRng,
    mult: &mut Multiplicities,
    config: &ClarksonConfig,
) -> Result<Vec<usize>> {
    let g = sorted(g);
    Run::new(oracle, delta.max(1), config).basis2(&g, rng, mult)
}

/// Clarkson's first algorithm: a basis of `g`, assuming combinatorial dimension at most `delta`.
pub fn clarkson<S: ViolatorSpace>(g: &[usize], delta: usize, oracle: &ViolatorOracle<S>, config: &ClarksonConfig) -> Result<BasisResult> {
    let delta = delta.max(1);
    let g = sorted(g);
    let before = oracle.counts();
    let mut run = Run::new(oracle, delta, config);
    let mut streams = Streams::new(config.seed);
    let basis = if g.is_empty() { Vec::new() } else { run.alg1(&g, &mut streams)? };
    let calls = oracle.counts().since(&before);
    Ok(BasisResult {
        basis,
        delta_used: delta,
        primitive_calls: calls.sampling_total(),
        calls,
        rounds_alg1: run.rounds_alg1,
        rounds_alg2: run.rounds_alg2,
        seed: config.seed,
    })
}

fn sorted(g: &[usize]) -> Vec<usize> {
    let mut g = g.to_vec();
    g.sort_unstable();
    g.dedup();
    g
}
