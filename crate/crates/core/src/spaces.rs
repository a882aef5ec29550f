//! The two algebraic violator spaces over a polynomial system `H`.
//!
//! In the solving space `h` violates `G` when `h` is outside `√⟨G⟩`, i.e. when `h`
//! does not vanish on all of `V(G)`; a basis cuts out the same variety as `H`, or is
//! a small certificate that `H` has no common zero. In the generating space `h`
//! violates `G` when `h ∉ ⟨G⟩`; a basis generates the same ideal as `H`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{radical_member_with, GbCache, GroebnerBasis};
use crate::linalg::{build_coeff_matrix, rank};
use crate::poly::{MonomialOrder, PolySystem};
use crate::violator::{clarkson, violation_set, BasisResult, ClarksonConfig, Phase, SmallBasis, ViolatorOracle, ViolatorSpace};

/// Shared state of both spaces: the system in the working order and a basis cache.
struct Algebra {
    system: PolySystem,
    order: MonomialOrder,
    cache: Arc<GbCache>,
}

impl Algebra {
    fn new(system: &PolySystem, order: MonomialOrder, cache: Arc<GbCache>) -> Self {
        Algebra {
            system: system.with_order(order),
            order,
            cache,
        }
    }

    fn basis_of(&self, indices: &[usize]) -> Arc<GroebnerBasis> {
        let sub = self.system.subsystem(indices).expect("indices come from the ground set");
        self.cache.basis(&sub, self.order)
    }
}

/// `h` violates `G` iff `h ∉ √⟨G⟩`.
pub struct SolveSpace(Algebra);

/// `h` violates `G` iff `h ∉ ⟨G⟩`.
pub struct SmallGenSpace(Algebra);

impl SolveSpace {
    pub fn new(system: &PolySystem, order: MonomialOrder, cache: Arc<GbCache>) -> Self {
        SolveSpace(Algebra::new(system, order, cache))
    }

    pub fn system(&self) -> &PolySystem {
        &self.0.system
    }
}

impl SmallGenSpace {
    pub fn new(system: &PolySystem, order: MonomialOrder, cache: Arc<GbCache>) -> Self {
        SmallGenSpace(Algebra::new(system, order, cache))
    }

    pub fn system(&self) -> &PolySystem {
        &self.0.system
    }
}

impl ViolatorSpace for SolveSpace {
    fn ground_size(&self) -> usize {
        self.0.system.len()
    }

    fn violates(&self, basis: &[usize], h: usize) -> bool {
        !radical_member_with(&self.0.system[h], &self.0.basis_of(basis))
    }

    fn is_monotone(&self) -> bool {
        true
    }
}

impl ViolatorSpace for SmallGenSpace {
    fn ground_size(&self) -> usize {
        self.0.system.len()
    }

    fn violates(&self, basis: &[usize], h: usize) -> bool {
        !self.0.basis_of(basis).contains(&self.0.system[h])
    }

    fn is_monotone(&self) -> bool {
        true
    }
}

pub fn solve_oracle(system: &PolySystem, order: MonomialOrder) -> ViolatorOracle<SolveSpace> {
    ViolatorOracle::new(SolveSpace::new(system, order, Arc::default()))
}

pub fn smallgen_oracle(system: &PolySystem, order: MonomialOrder) -> ViolatorOracle<SmallGenSpace> {
    ViolatorOracle::new(SmallGenSpace::new(system, order, Arc::default()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Feasible,
    Infeasible,
}

/// Result of re-checking a basis against the whole ground set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub passed: bool,
    /// Elements outside the basis that still violate it.
    pub violators: Vec<usize>,
    pub calls: u64,
    /// Set when the basis is larger than the supplied bound.
    pub oversized: bool,
}

#[derive(Clone, Debug)]
pub struct SolveConfig {
    pub system: PolySystem,
    pub delta_override: Option<usize>,
    pub order: MonomialOrder,
    pub seed: u64,
    pub verify: bool,
    pub small_basis: SmallBasis,
}

impl SolveConfig {
    pub fn new(system: PolySystem) -> Self {
        SolveConfig {
            order: system.order(),
            system,
            delta_override: None,
            seed: 0,
            verify: false,
            small_basis: SmallBasis::Auto,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MingenConfig {
    pub system: PolySystem,
    pub gamma: usize,
    pub order: MonomialOrder,
    pub seed: u64,
    /// The caller asserts that the input contains a Groebner basis of its ideal.
    pub assume_gb: bool,
    pub allow_inhomogeneous: bool,
    pub verify: bool,
    pub small_basis: SmallBasis,
}

impl MingenConfig {
    pub fn new(system: PolySystem, gamma: usize) -> Self {
        MingenConfig {
            order: system.order(),
            system,
            gamma,
            seed: 0,
            assume_gb: false,
            allow_inhomogeneous: false,
            verify: false,
            small_basis: SmallBasis::Auto,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub basis: Vec<usize>,
    /// `None` for generating-set runs.
    pub classification: Option<Classification>,
    pub delta_used: usize,
    pub stats: BasisResult,
    pub verification: Option<Verification>,
}

/// The rank of the coefficient matrix, the default combinatorial dimension of the solving space.
pub fn system_rank(system: &PolySystem, order: MonomialOrder) -> usize {
    rank(&build_coeff_matrix(system, order)).rank
}

/// A subsystem with the same variety as `cfg.system`, or a certificate that it has none.
pub fn solve_basis(cfg: &SolveConfig) -> Result<SolveOutcome> {
    if cfg.delta_override == Some(0) {
        return Err(Error::InfeasibleParameters("delta must be at least 1".into()));
    }
    let delta = cfg
        .delta_override
        .unwrap_or_else(|| system_rank(&cfg.system, cfg.order))
        .max(1);
    let cache = Arc::new(GbCache::default());
    let oracle = ViolatorOracle::new(SolveSpace::new(&cfg.system, cfg.order, cache.clone()));
    let stats = run_clarkson(&oracle, delta, cfg.seed, cfg.small_basis)?;
    let basis_gb = oracle.space().0.basis_of(&stats.basis);
    let classification = if basis_gb.is_unit() {
        Classification::Infeasible
    } else {
        Classification::Feasible
    };
    let verification = cfg.verify.then(|| verify_with(&oracle, &stats.basis, None));
    Ok(finish(stats, Some(classification), delta, verification, &oracle))
}

/// A generating subset of size at most `cfg.gamma` (minimal when γ is the Betti number).
pub fn mingen(cfg: &MingenConfig) -> Result<SolveOutcome> {
    if cfg.gamma == 0 {
        return Err(Error::InfeasibleParameters("gamma must be at least 1".into()));
    }
    if !cfg.allow_inhomogeneous {
        if let Some(index) = cfg.system.first_inhomogeneous() {
            return Err(Error::NotHomogeneous { index });
        }
    }
    let mut gamma = cfg.gamma;
    if cfg.assume_gb {
        gamma = gamma.min(estimate_gamma(&cfg.system, cfg.order, true)?.max(1));
    }
    let oracle = ViolatorOracle::new(SmallGenSpace::new(&cfg.system, cfg.order, Arc::default()));
    let stats = run_clarkson(&oracle, gamma, cfg.seed, cfg.small_basis)?;
    let verification = cfg.verify.then(|| verify_with(&oracle, &stats.basis, Some(cfg.gamma)));
    Ok(finish(stats, None, gamma, verification, &oracle))
}

fn run_clarkson<S: ViolatorSpace>(oracle: &ViolatorOracle<S>, delta: usize, seed: u64, small_basis: SmallBasis) -> Result<BasisResult> {
    let ground: Vec<usize> = (0..oracle.ground_size()).collect();
    let mut config = ClarksonConfig::new(seed);
    config.small_basis = small_basis;
    clarkson(&ground, delta, oracle, &config)
}

fn finish<S: ViolatorSpace>(
    mut stats: BasisResult,
    classification: Option<Classification>,
    delta: usize,
    verification: Option<Verification>,
    oracle: &ViolatorOracle<S>,
) -> SolveOutcome {
    stats.calls.verify = oracle.counts().verify;
    SolveOutcome {
        basis: stats.basis.clone(),
        classification,
        delta_used: delta,
        stats,
        verification,
    }
}

fn verify_with<S: ViolatorSpace>(oracle: &ViolatorOracle<S>, basis: &[usize], bound: Option<usize>) -> Verification {
    let before = oracle.counts().verify;
    let ground: Vec<usize> = (0..oracle.ground_size()).collect();
    let violators = violation_set(basis, &ground, oracle, Phase::Verify);
    let oversized = bound.is_some_and(|b| basis.len() > b);
    Verification {
        passed: violators.is_empty() && !oversized,
        violators,
        calls: oracle.counts().verify - before,
        oversized,
    }
}

fn check_indices(system: &PolySystem, basis: &[usize]) -> Result<Vec<usize>> {
    let mut b = basis.to_vec();
    b.sort_unstable();
    b.dedup();
    if let Some(&bad) = b.iter().find(|&&i| i >= system.len()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            len: system.len(),
        });
    }
    Ok(b)
}

/// Checks that every element of `system` lies in the radical of the `basis` subsystem.
pub fn verify_solve(system: &PolySystem, basis: &[usize], order: MonomialOrder) -> Result<Verification> {
    let b = check_indices(system, basis)?;
    Ok(verify_with(&solve_oracle(system, order), &b, None))
}

/// Checks that the `basis` subsystem generates every element of `system`, and optionally
/// that it has at most `gamma` elements.
pub fn verify_mingen(system: &PolySystem, basis: &[usize], order: MonomialOrder, gamma: Option<usize>) -> Result<Verification> {
    let b = check_indices(system, basis)?;
    Ok(verify_with(&smallgen_oracle(system, order), &b, gamma))
}

/// Number of minimal generators of the monomial ideal spanned by the leading monomials.
///
/// An upper bound on the minimal number of generators only when the system contains a
/// Groebner basis of its ideal, which the caller must assert with `assume_gb`.
pub fn estimate_gamma(system: &PolySystem, order: MonomialOrder, assume_gb: bool) -> Result<usize> {
    if !assume_gb {
        return Err(Error::GbHypothesisRequired);
    }
    let mut lms: Vec<_> = system
        .iter()
        .filter_map(|p| p.with_order(order).lm().cloned())
        .collect();
    lms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(a, b)));
    lms.dedup();
    let mut minimal: Vec<crate::poly::Monomial> = Vec::new();
    for m in lms {
        if !minimal.iter().any(|g| g.divides(&m)) {
            minimal.push(m);
        }
    }
    Ok(minimal.len())
}
