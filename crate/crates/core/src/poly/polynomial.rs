use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

pub type Term = (Monomial, FieldElement);

/// Sparse multivariate polynomial with terms kept sorted descending under `order`.
///
/// Invariant: no stored coefficient is zero, and no monomial appears twice.
#[derive(Clone)]
pub struct Polynomial {
    field: FieldSpec,
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked polynomial arithmetic; the result uses `f`'s monomial order.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    f.check_compatible(g)?;
    Ok(match op {
        PolyOp::Add => f + g,
        PolyOp::Sub => f - g,
        PolyOp::Mul => f * g,
    })
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            field,
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: FieldSpec, nvars: usize, order: MonomialOrder, c: FieldElement) -> Self {
        Self::from_terms(field, nvars, order, [(Monomial::one(nvars), c)])
    }

    pub fn one(field: FieldSpec, nvars: usize, order: MonomialOrder) -> Self {
        Self::constant(field, nvars, order, field.one())
    }

    /// The variable `x_var`.
    pub fn var(field: FieldSpec, nvars: usize, order: MonomialOrder, var: usize) -> Self {
        Self::from_terms(field, nvars, order, [(Monomial::var(nvars, var, 1), field.one())])
    }

    /// Builds a canonical polynomial: like terms are combined and zero coefficients dropped.
    ///
    /// Panics if a monomial has the wrong number of variables or a coefficient lies in another field.
    pub fn from_terms(
        field: FieldSpec,
        nvars: usize,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = Term>,
    ) -> Self {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            assert_eq!(c.field(), field, "coefficient field");
            match acc.get_mut(&m) {
                Some(existing) => *existing = &*existing + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            field,
            nvars,
            order,
            terms,
        }
    }

    /// Wraps terms already sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted_terms(field: FieldSpec, nvars: usize, order: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            field,
            nvars,
            order,
            terms,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Leading monomial under the stored order.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Leading coefficient under the stored order.
    pub fn lc(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    /// Leading term under `ord` (O(1) when `ord` is the stored order).
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(&Monomial, &FieldElement)> {
        let best = if ord == self.order {
            self.terms.first()
        } else {
            self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0))
        };
        best.map(|(m, c)| (m, c)).ok_or(Error::ZeroPolynomial)
    }

    pub fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    /// Same polynomial with terms re-sorted under `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { order, terms, ..*self }
    }

    /// Embeds into a ring with `extra` more variables appended after the existing ones.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        // appending zero exponents preserves both grevlex and lex comparisons
        let terms = self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect();
        Polynomial {
            terms,
            nvars: self.nvars + extra,
            ..*self
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { terms, ..*self }
    }

    /// `c * mono * self`.
    pub fn mul_term(&self, mono: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect();
        Polynomial { terms, ..*self }
    }

    /// `self - c * mono * g`, in one merge pass. `g` must share field, arity and order.
    pub fn sub_mul_term(&self, c: &FieldElement, mono: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.order, g.order);
        let terms = sub_mul_terms(&self.terms, c, mono, &g.terms, self.order);
        Polynomial { terms, ..*self }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.lc() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Over the rationals: the integer primitive part with positive leading coefficient.
    /// Over prime fields this is the monic polynomial.
    pub fn primitive_part(&self) -> Polynomial {
        if self.field != FieldSpec::Rationals || self.is_zero() {
            return self.monic();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let q = c.as_rational().expect("rational coefficient");
            den_lcm = den_lcm.lcm(q.denom());
            num_gcd = num_gcd.gcd(q.numer());
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if self.lc().and_then(FieldElement::as_rational).is_some_and(|q| q.is_negative()) {
            factor = -factor;
        }
        self.scale(&FieldElement::Rational(Box::new(factor)))
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.nvars, "point arity");
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Order-independent 64-bit digest of the mathematical polynomial.
    pub fn digest(&self) -> u64 {
        let mut terms: Vec<&Term> = self.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::Lex.cmp(&a.0, &b.0));
        let mut h = DefaultHasher::new();
        self.field.hash(&mut h);
        self.nvars.hash(&mut h);
        for (m, c) in terms {
            m.hash(&mut h);
            c.hash(&mut h);
        }
        h.finish()
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let other = if other.order == self.order {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.with_order(self.order))
        };
        let ord = self.order;
        let fix = |c: &FieldElement| if negate_other { -c } else { c.clone() };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), fix(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].1 + &fix(&b[j].1);
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
        Polynomial { terms: out, ..*self }
    }
}

/// Merges `a - c * mono * g` for descending term slices.
pub(crate) fn sub_mul_terms(a: &[Term], c: &FieldElement, mono: &Monomial, g: &[Term], ord: MonomialOrder) -> Vec<Term> {
    let neg = -c;
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    for (gm, gc) in g {
        let m = gm.mul(mono);
        while i < a.len() && ord.cmp(&a[i].0, &m) == Ordering::Greater {
            out.push(a[i].clone());
            i += 1;
        }
        let prod = gc * &neg;
        if i < a.len() && a[i].0 == m {
            let s = &a[i].1 + &prod;
            if !s.is_zero() {
                out.push((m, s));
            }
            i += 1;
        } else {
            out.push((m, prod));
        }
    }
    out.extend(a[i..].iter().cloned());
    out
}

fn assert_compatible(f: &Polynomial, g: &Polynomial) {
    if let Err(e) = f.check_compatible(g) {
        panic!("{e}");
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_compatible(self, rhs);
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_compatible(self, rhs);
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_compatible(self, rhs);
        let products = self
            .terms
            .iter()
            .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb)));
        Polynomial::from_terms(self.field, self.nvars, self.order, products)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { terms, ..*self }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        if self.field != other.field || self.nvars != other.nvars || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

/// Renders in the system-file grammar, e.g. `3*x0*x1^2 - x2 + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_repr();
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{}]", self.field)
    }
}
