//! Exact coefficient fields: prime fields `F_p` with `p < 2^31`, and the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest prime below `2^31`, the default modulus.
pub const DEFAULT_PRIME: u32 = 2_147_483_647;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => f.write_str("Q"),
        }
    }
}

impl FieldSpec {
    /// Prime field with the given modulus; rejects composites and moduli outside `[2, 2^31)`.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match *self {
            FieldSpec::Prime(p) => FieldElement::Prime {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
            FieldSpec::Rationals => FieldElement::Rational(Box::new(BigRational::from_integer(v.into()))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match *self {
            FieldSpec::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                FieldElement::Prime {
                    value: r.to_u32().expect("residue fits in u32"),
                    modulus: p,
                }
            }
            FieldSpec::Rationals => FieldElement::Rational(Box::new(BigRational::from_integer(v.clone()))),
        }
    }

    /// `num / den` in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        n.checked_div(&d)
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        self.from_ratio(q.numer(), q.denom())
    }
}

/// Deterministic Miller-Rabin, exact for every `n < 3_215_031_751`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Modular inverse by the extended Euclidean algorithm; `a` must be nonzero mod `p`.
fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u32
}

/// An element of a [`FieldSpec`] in canonical form.
///
/// Prime-field elements hold their residue in `[0, p)`; rationals are kept reduced
/// with a positive denominator, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Prime { value: u32, modulus: u32 },
    Rational(Box<BigRational>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary field arithmetic.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
    }
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
            FieldElement::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 0,
            FieldElement::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 1,
            FieldElement::Rational(q) => q.is_one(),
        }
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
            FieldElement::Rational(q) => FieldElement::Rational(Box::new(q.recip())),
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inverse()?)
    }

    /// Residue for prime fields, `None` over the rationals.
    pub fn residue(&self) -> Option<u32> {
        match self {
            FieldElement::Prime { value, .. } => Some(*value),
            FieldElement::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Prime { .. } => None,
        }
    }

    /// Signed representative: residues above `p/2` map to negatives. Used for printing.
    pub fn to_signed_string(&self) -> String {
        match self {
            FieldElement::Prime { value, modulus } => {
                if *value > modulus / 2 {
                    format!("-{}", modulus - value)
                } else {
                    value.to_string()
                }
            }
            FieldElement::Rational(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
        }
    }

    pub fn is_negative_repr(&self) -> bool {
        match self {
            FieldElement::Prime { value, modulus } => *value > modulus / 2,
            FieldElement::Rational(q) => q.is_negative(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_signed_string())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_signed_string())
    }
}

// The operator impls assume both operands share a field; mixing fields is a
// programming error caught here. `field_arith` is the checked entry point.
fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Prime { value: a, modulus: p }, FieldElement::Prime { value: b, modulus: q }) if p == q => {
                let s = *a as u64 + *b as u64;
                let p64 = *p as u64;
                FieldElement::Prime {
                    value: if s >= p64 { (s - p64) as u32 } else { s as u32 },
                    modulus: *p,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(Box::new(&**a + &**b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Prime { value: a, modulus: p }, FieldElement::Prime { value: b, modulus: q }) if p == q => {
                FieldElement::Prime {
                    value: if a >= b { a - b } else { a + (p - b) },
                    modulus: *p,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(Box::new(&**a - &**b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Prime { value: a, modulus: p }, FieldElement::Prime { value: b, modulus: q }) if p == q => {
                FieldElement::Prime {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(Box::new(&**a * &**b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            FieldElement::Rational(q) => FieldElement::Rational(Box::new(-&**q)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, v: i64) -> FieldElement {
        FieldSpec::Prime(p).from_i64(v)
    }

    fn q(n: i64, d: i64) -> FieldElement {
        FieldSpec::Rationals.from_ratio(&n.into(), &d.into()).unwrap()
    }

    #[test]
    fn prime_field_examples() {
        assert_eq!(field_arith(&gf(7, 3), &gf(7, 5), FieldOp::Div).unwrap(), gf(7, 2));
        assert_eq!(field_arith(&gf(7, 6), &gf(7, 6), FieldOp::Mul).unwrap(), gf(7, 1));
        assert_eq!(field_arith(&gf(7, 2), &gf(7, 6), FieldOp::Add).unwrap(), gf(7, 1));
        assert_eq!(field_arith(&gf(7, 2), &gf(7, 6), FieldOp::Sub).unwrap(), gf(7, 3));
    }

    #[test]
    fn rational_examples() {
        assert_eq!(field_arith(&q(1, 2), &q(1, 3), FieldOp::Add).unwrap(), q(5, 6));
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2), q(-1, 2));
        assert_eq!(q(-1, 2).to_signed_string(), "-1/2");
    }

    #[test]
    fn errors() {
        assert_eq!(
            field_arith(&gf(7, 1), &gf(7, 0), FieldOp::Div),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            field_arith(&gf(7, 1), &gf(11, 1), FieldOp::Add),
            Err(Error::FieldMismatch(..))
        ));
        assert!(matches!(
            field_arith(&gf(7, 1), &q(1, 1), FieldOp::Mul),
            Err(Error::FieldMismatch(..))
        ));
        assert_eq!(FieldSpec::prime(15), Err(Error::NonPrimeModulus(15)));
        assert_eq!(FieldSpec::prime(1 << 31), Err(Error::NonPrimeModulus(1 << 31)));
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
    }

    #[test]
    fn primality_matches_trial_division() {
        fn trial(n: u64) -> bool {
            n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
        }
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        for n in (2_147_480_000..2_147_483_648).step_by(7) {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn inverse_roundtrip_mod_p() {
        let f = FieldSpec::default();
        for v in [1i64, 2, 3, 12345, -1, 2_147_483_646] {
            let a = f.from_i64(v);
            assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn signed_printing() {
        assert_eq!(gf(7, -1).to_signed_string(), "-1");
        assert_eq!(gf(7, 3).to_signed_string(), "3");
        assert_eq!(gf(7, 4).to_signed_string(), "-3");
    }
}
