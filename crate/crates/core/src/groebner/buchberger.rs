use std::cmp::Ordering;

use crate::poly::{sub_mul_terms, Monomial, MonomialOrder, Polynomial, Term};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// How a Buchberger run ended.
pub(crate) enum Outcome {
    /// A nonzero constant appeared: the ideal is the whole ring.
    Unit,
    /// Minimal (not yet interreduced) Groebner basis.
    Basis(Vec<Polynomial>),
}

/// Buchberger's algorithm with the Gebauer-Moeller installation of the product
/// and chain criteria, and the normal selection strategy.
pub(crate) struct Engine {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    unit: bool,
}

impl Engine {
    pub fn new(order: MonomialOrder) -> Self {
        Engine {
            order,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            unit: false,
        }
    }

    /// Starts from a set that is already a Groebner basis: no pairs among its members
    /// need processing.
    pub fn seeded(order: MonomialOrder, basis: Vec<Polynomial>) -> Self {
        let mut e = Engine::new(order);
        e.unit = basis.iter().any(Polynomial::is_unit);
        e.active = (0..basis.len()).collect();
        e.polys = basis;
        e
    }

    /// Reduces `f` against the current basis and installs it if the remainder is nonzero.
    pub fn add(&mut self, f: &Polynomial) {
        if self.unit {
            return;
        }
        let f = f.with_order(self.order);
        let r = self.reduce(&f);
        if !r.is_zero() {
            self.install(r);
        }
    }

    pub fn run(mut self) -> Outcome {
        while !self.unit {
            let Some(k) = self.select_pair() else { break };
            let pair = self.pairs.swap_remove(k);
            let s = s_polynomial(&self.polys[pair.i], &self.polys[pair.j]);
            let r = self.reduce(&s);
            if !r.is_zero() {
                self.install(r);
            }
        }
        if self.unit {
            return Outcome::Unit;
        }
        Outcome::Basis(self.active.iter().map(|&i| self.polys[i].clone()).collect())
    }

    fn select_pair(&self) -> Option<usize> {
        let ord = self.order;
        (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            ord.cmp(&p.lcm, &q.lcm).then((p.i, p.j).cmp(&(q.i, q.j)))
        })
    }

    fn reduce(&self, f: &Polynomial) -> Polynomial {
        let basis: Vec<&Polynomial> = self.active.iter().map(|&i| &self.polys[i]).collect();
        reduce_full(f, &basis)
    }

    fn install(&mut self, r: Polynomial) {
        let r = r.primitive_part();
        if r.is_unit() {
            self.unit = true;
            return;
        }
        let h = self.polys.len();
        let lm_h = r.lm().expect("nonzero").clone();
        self.polys.push(r);

        // new candidate pairs (g, h), thinned by the chain criterion among themselves
        let mut candidates: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lm_g = self.polys[g].lm().unwrap();
                (g, lm_g.lcm(&lm_h), lm_g.is_coprime(&lm_h))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, lcm, coprime)) = candidates.pop() {
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, other, _)| other.divides(&lcm));
            if coprime || !dominated {
                kept.push((g, lcm, coprime));
            }
        }

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lm_h.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lm().unwrap().lcm(&lm_h);
            let lj = polys[p.j].lm().unwrap().lcm(&lm_h);
            li == p.lcm || lj == p.lcm
        });

        // product criterion: coprime leading monomials reduce to zero
        self.pairs.extend(
            kept.into_iter()
                .filter(|(_, _, coprime)| !coprime)
                .map(|(g, lcm, _)| Pair { i: g, j: h, lcm }),
        );

        self.active
            .retain(|&g| !lm_h.divides(polys[g].lm().unwrap()));
        self.active.push(h);
    }
}

/// S-polynomial of two nonzero polynomials sharing an order.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, cf) = (f.lm().expect("nonzero"), f.lc().unwrap());
    let (lg, cg) = (g.lm().expect("nonzero"), g.lc().unwrap());
    let lcm = lf.lcm(lg);
    let mf = lf.quotient_of(&lcm).unwrap();
    let mg = lg.quotient_of(&lcm).unwrap();
    let a = f.mul_term(&mf, &cf.inverse().unwrap());
    a.sub_mul_term(&cg.inverse().unwrap(), &mg, g)
}

/// Full reduction of `f` modulo `basis`: no term of the result is divisible by a
/// leading monomial of the basis.
pub(crate) fn reduce_full(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ord = f.order();
    let mut rest: Vec<Term> = f.terms().to_vec();
    let mut done: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < rest.len() {
        let (m, c) = &rest[start];
        let divisor = basis.iter().find(|g| g.lm().is_some_and(|lm| lm.divides(m)));
        match divisor {
            None => {
                done.push(rest[start].clone());
                start += 1;
            }
            Some(g) => {
                let q = g.lm().unwrap().quotient_of(m).unwrap();
                let coef = c.checked_div(g.lc().unwrap()).expect("nonzero leading coefficient");
                // the leading terms cancel exactly, so merge the tails only
                rest = sub_mul_terms(&rest[start + 1..], &coef, &q, &g.terms()[1..], ord);
                start = 0;
            }
        }
    }
    debug_assert!(done.windows(2).all(|w| ord.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
    Polynomial::from_sorted_terms(f.field(), f.nvars(), ord, done)
}

/// Turns a minimal Groebner basis into the reduced one: monic, tail-reduced, sorted
/// by ascending leading monomial.
pub(crate) fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(ord) = basis.first().map(Polynomial::order) else {
        return basis;
    };
    basis.sort_by(|a, b| ord.cmp(a.lm().unwrap(), b.lm().unwrap()));
    let mut out = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<&Polynomial> = basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
        let head = Polynomial::from_terms(
            basis[i].field(),
            basis[i].nvars(),
            ord,
            [basis[i].terms()[0].clone()],
        );
        let tail = &basis[i] - &head;
        let reduced_tail = reduce_full(&tail, &others);
        out.push((&head + &reduced_tail).monic());
    }
    out
}
