//! Groebner bases and the membership tests built on them.
//!
//! Radical membership uses the adjoined-variable criterion: `h` lies in the
//! radical of `<F>` exactly when `1` lies in `<F, 1 - y*h>`, with a fresh
//! variable `y` appended after the existing ones.

mod buchberger;
mod cache;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

pub use buchberger::s_polynomial;
pub use cache::GbCache;

use buchberger::{interreduce, reduce_full, Engine, Outcome};

use crate::field::FieldSpec;
use crate::poly::{MonomialOrder, PolySystem, Polynomial};

/// A reduced Groebner basis: monic, no generator has a term divisible by the leading
/// monomial of another, generators sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: PolySystem,
    order: MonomialOrder,
    source_hash: u64,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &PolySystem {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Digest of the generating set this basis was computed from.
    pub fn source_hash(&self) -> u64 {
        self.source_hash
    }

    pub fn field(&self) -> FieldSpec {
        self.generators.field()
    }

    pub fn nvars(&self) -> usize {
        self.generators.nvars()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    /// Basis of the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    pub fn normal_form(&self, h: &Polynomial) -> Polynomial {
        normal_form(h, self)
    }

    pub fn contains(&self, h: &Polynomial) -> bool {
        self.is_unit() || normal_form(h, self).is_zero()
    }
}

/// Order-independent digest of a generating set, as a sorted multiset of member digests.
pub fn system_digest(polys: &[Polynomial]) -> u64 {
    let mut ds: Vec<u64> = polys.iter().map(Polynomial::digest).collect();
    ds.sort_unstable();
    let mut h = DefaultHasher::new();
    ds.hash(&mut h);
    h.finish()
}

/// Remainder of `h` on division by `gb`; zero exactly when `h` lies in the ideal.
pub fn normal_form(h: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let h = h.with_order(gb.order);
    let basis: Vec<&Polynomial> = gb.generators.iter().collect();
    reduce_full(&h, &basis)
}

/// Reduced Groebner basis of `<F>` under `ord`. The empty system yields the empty basis.
pub fn buchberger(f: &PolySystem, ord: MonomialOrder) -> GroebnerBasis {
    let mut engine = Engine::new(ord);
    for p in f {
        engine.add(p);
    }
    finish(engine.run(), f.field(), f.nvars(), ord, system_digest(f.polys()))
}

fn finish(outcome: Outcome, field: FieldSpec, nvars: usize, ord: MonomialOrder, source_hash: u64) -> GroebnerBasis {
    let polys = match outcome {
        Outcome::Unit => vec![Polynomial::one(field, nvars, ord)],
        Outcome::Basis(b) => interreduce(b),
    };
    GroebnerBasis {
        generators: PolySystem::new(field, nvars, ord, polys).expect("basis shares the ring"),
        order: ord,
        source_hash,
    }
}

pub fn ideal_member(h: &Polynomial, f: &PolySystem, ord: MonomialOrder) -> bool {
    buchberger(f, ord).contains(h)
}

/// `h` vanishes on every common zero of `F` over the algebraic closure.
pub fn radical_member(h: &Polynomial, f: &PolySystem, ord: MonomialOrder) -> bool {
    radical_member_with(h, &buchberger(f, ord))
}

/// Radical membership against a precomputed basis of `<F>`.
///
/// The basis of `<F>` lifted to the ring with `y` is still a Groebner basis, so the
/// computation starts from it and only processes pairs involving `1 - y*h`.
pub fn radical_member_with(h: &Polynomial, gb: &GroebnerBasis) -> bool {
    if h.is_zero() || gb.is_unit() {
        return true;
    }
    if gb.is_empty() {
        return false;
    }
    if gb.contains(h) {
        return true;
    }
    let ord = gb.order;
    let lifted: Vec<Polynomial> = gb.generators.iter().map(|g| g.extend_vars(1)).collect();
    let n = gb.nvars();
    let field = gb.field();
    let y = Polynomial::var(field, n + 1, ord, n);
    let rabinowitsch = &Polynomial::one(field, n + 1, ord) - &(&y * &h.with_order(ord).extend_vars(1));
    let mut engine = Engine::seeded(ord, lifted);
    engine.add(&rabinowitsch);
    matches!(engine.run(), Outcome::Unit)
}

/// `V(F)` is empty over the algebraic closure.
pub fn is_unit_ideal(f: &PolySystem, ord: MonomialOrder) -> bool {
    buchberger(f, ord).is_unit()
}
