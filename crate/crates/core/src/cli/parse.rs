//! Reader and writer for the plain-text polynomial system format.
//!
//! ```text
//! % field 101          # or: % field Q      (default: 2147483647)
//! % vars 3             # optional; otherwise inferred from the highest index
//! x0^2 - 1
//! 3*x0*x1 + x2         # comments run to the end of the line
//! 1/2*x0 + 1/3         # fractions only over Q
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{Monomial, MonomialOrder, PolySystem, Polynomial};

/// A parsed system together with the line numbers of polynomials that were zero
/// and therefore dropped.
#[derive(Clone, Debug)]
pub struct ParsedSystem {
    pub system: PolySystem,
    pub zero_lines: Vec<usize>,
}

struct RawTerm {
    num: BigInt,
    den: BigInt,
    factors: Vec<(usize, u32)>,
}

struct RawPoly {
    line: usize,
    terms: Vec<RawTerm>,
}

pub fn parse_system(text: &str) -> Result<ParsedSystem> {
    parse_system_with_order(text, MonomialOrder::GrevLex)
}

pub fn parse_system_with_order(text: &str, order: MonomialOrder) -> Result<ParsedSystem> {
    let mut field: Option<(FieldSpec, usize)> = None;
    let mut declared_vars: Option<usize> = None;
    let mut raw: Vec<RawPoly> = Vec::new();
    let mut saw_polyline = false;

    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let content = match line.find('#') {
            Some(k) => &line[..k],
            None => line,
        };
        let chars: Vec<(usize, char)> = content
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        if line.contains('#') {
            saw_polyline = true;
        }
        if chars.is_empty() {
            continue;
        }
        let mut cur = Cursor {
            chars: &chars,
            pos: 0,
            line: lineno,
            eol_col: content.len() + 1,
        };
        if chars[0].1 == '%' {
            if !raw.is_empty() {
                return Err(cur.error("polynomial (directives must precede polynomials)"));
            }
            cur.pos = 1;
            if cur.eat_word("field") {
                let spec = if cur.eat('Q') {
                    FieldSpec::Rationals
                } else {
                    let p = cur.small_integer("field modulus")?;
                    FieldSpec::prime(p)?
                };
                cur.expect_end()?;
                match field {
                    Some((existing, _)) if existing != spec => {
                        return Err(Error::FieldDirectiveConflict { line: lineno })
                    }
                    _ => field = Some((spec, lineno)),
                }
            } else if cur.eat_word("vars") {
                let n = cur.integer()?;
                let n: usize = n.try_into().map_err(|_| cur.error("variable count"))?;
                cur.expect_end()?;
                if declared_vars.is_some_and(|d| d != n) {
                    return Err(cur.error("a single consistent vars directive"));
                }
                declared_vars = Some(n);
            } else {
                return Err(cur.error("'field' or 'vars'"));
            }
            continue;
        }
        saw_polyline = true;
        let fld = field.map(|f| f.0).unwrap_or_default();
        let terms = cur.poly(fld, declared_vars)?;
        raw.push(RawPoly { line: lineno, terms });
    }

    if !saw_polyline && raw.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            expected: "at least one polynomial line".into(),
        });
    }

    let field = field.map(|f| f.0).unwrap_or_default();
    let nvars = declared_vars.unwrap_or_else(|| {
        raw.iter()
            .flat_map(|p| p.terms.iter().flat_map(|t| t.factors.iter().map(|(v, _)| v + 1)))
            .max()
            .unwrap_or(0)
            .max(1)
    });

    let mut polys = Vec::with_capacity(raw.len());
    let mut zero_lines = Vec::new();
    for rp in raw {
        let mut terms = Vec::with_capacity(rp.terms.len());
        for t in rp.terms {
            let mut exps = vec![0u32; nvars];
            for (v, e) in t.factors {
                exps[v] += e;
            }
            terms.push((Monomial::new(exps), field.from_ratio(&t.num, &t.den)?));
        }
        let p = Polynomial::from_terms(field, nvars, order, terms);
        if p.is_zero() {
            zero_lines.push(rp.line);
        }
        polys.push(p);
    }
    let system = PolySystem::new(field, nvars, order, polys)?;
    Ok(ParsedSystem { system, zero_lines })
}

/// Writes `system` in the format read by [`parse_system`], directives included.
pub fn serialize_system(system: &PolySystem) -> String {
    let mut out = String::new();
    match system.field() {
        FieldSpec::Rationals => out.push_str("% field Q\n"),
        FieldSpec::Prime(p) => writeln!(out, "% field {p}").unwrap(),
    }
    writeln!(out, "% vars {}", system.nvars()).unwrap();
    for p in system {
        writeln!(out, "{p}").unwrap();
    }
    out
}

struct Cursor<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    line: usize,
    eol_col: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn col(&self) -> usize {
        self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.eol_col)
    }

    fn error(&self, expected: &str) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col(),
            expected: expected.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n].iter().map(|c| c.1).eq(word.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect_end(&self) -> Result<()> {
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            Err(self.error("end of line"))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_integer(&mut self, what: &str) -> Result<u64> {
        let col = self.col();
        let v = self.integer()?;
        v.try_into().map_err(|_| Error::Parse {
            line: self.line,
            column: col,
            expected: what.to_string(),
        })
    }

    fn poly(&mut self, field: FieldSpec, declared_vars: Option<usize>) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        loop {
            let mut t = self.term(field, declared_vars)?;
            if negative {
                t.num = -t.num;
            }
            terms.push(t);
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else if self.pos == self.chars.len() {
                return Ok(terms);
            } else {
                return Err(self.error("'+', '-', '*' or end of line"));
            }
        }
    }

    fn term(&mut self, field: FieldSpec, declared_vars: Option<usize>) -> Result<RawTerm> {
        let mut t = RawTerm {
            num: BigInt::one(),
            den: BigInt::one(),
            factors: Vec::new(),
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                t.num = self.integer()?;
                if self.peek() == Some('/') {
                    if field != FieldSpec::Rationals {
                        return Err(self.error("integer coefficient (fractions need '% field Q')"));
                    }
                    self.pos += 1;
                    let col = self.col();
                    t.den = self.integer()?;
                    if t.den.is_zero() {
                        return Err(Error::Parse {
                            line: self.line,
                            column: col,
                            expected: "nonzero denominator".into(),
                        });
                    }
                }
                if !self.eat('*') {
                    return Ok(t);
                }
                t.factors.push(self.monofactor(declared_vars)?);
            }
            Some('x') => t.factors.push(self.monofactor(declared_vars)?),
            _ => return Err(self.error("coefficient or variable")),
        }
        while self.eat('*') {
            t.factors.push(self.monofactor(declared_vars)?);
        }
        Ok(t)
    }

    fn monofactor(&mut self, declared_vars: Option<usize>) -> Result<(usize, u32)> {
        if !self.eat('x') {
            return Err(self.error("variable 'x<index>'"));
        }
        let col = self.col();
        let var = self.small_integer("variable index")? as usize;
        if let Some(n) = declared_vars {
            if var >= n {
                return Err(Error::Parse {
                    line: self.line,
                    column: col,
                    expected: format!("variable index below {n}"),
                });
            }
        }
        let mut exp = 1;
        if self.eat('^') {
            exp = self.small_integer("exponent")?;
            if exp > u32::MAX as u64 / 2 {
                return Err(self.error("smaller exponent"));
            }
        }
        Ok((var, exp as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infers_variable_count() {
        let p = parse_system("x0^2 - 1\nx0 + x1\n").unwrap();
        assert_eq!(p.system.len(), 2);
        assert_eq!(p.system.nvars(), 2);
        assert_eq!(p.system.field(), FieldSpec::default());
        assert_eq!(p.system[0].to_string(), "x0^2 - 1");
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_system("% field Q\n1/2*x0 + 1/3\n").unwrap();
        assert_eq!(p.system.field(), FieldSpec::Rationals);
        assert_eq!(p.system.len(), 1);
        assert_eq!(p.system[0].to_string(), "1/2*x0 + 1/3");
    }

    #[test]
    fn comments_and_whitespace() {
        let p = parse_system("# header\n3*x0*x1 + x2 # edge\n\n  - x 0 ^ 2 +4\n").unwrap();
        assert_eq!(p.system.len(), 2);
        assert_eq!(p.system.nvars(), 3);
        assert_eq!(p.system[0].to_string(), "3*x0*x1 + x2");
        assert_eq!(p.system[1].to_string(), "-x0^2 + 4");
    }

    #[test]
    fn zero_polynomials_are_reported() {
        let p = parse_system("x0\nx1 - x1\n0\nx1\n").unwrap();
        assert_eq!(p.system.len(), 2);
        assert_eq!(p.zero_lines, vec![2, 3]);
    }

    #[test]
    fn prime_field_directive_reduces() {
        let p = parse_system("% field 7\n% vars 3\n8*x0 - 15\n").unwrap();
        assert_eq!(p.system.nvars(), 3);
        assert_eq!(p.system[0].to_string(), "x0 - 1");
    }

    #[test]
    fn error_cases() {
        assert!(matches!(
            parse_system("% field 7\n% field Q\nx0\n"),
            Err(Error::FieldDirectiveConflict { line: 2 })
        ));
        assert_eq!(parse_system("% field 15\nx0\n").unwrap_err(), Error::NonPrimeModulus(15));
        assert!(matches!(
            parse_system("1/2*x0\n"),
            Err(Error::Parse { line: 1, column: 2, .. })
        ));
        assert!(matches!(
            parse_system("x0 + \n"),
            Err(Error::Parse { line: 1, column: 6, .. })
        ));
        assert!(matches!(
            parse_system("% vars 2\nx2\n"),
            Err(Error::Parse { line: 2, column: 2, .. })
        ));
        assert!(matches!(parse_system("x0\n2x1\n"), Err(Error::Parse { line: 2, column: 2, .. })));
        assert!(matches!(parse_system("x0\n% vars 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_system("% field Q\n1/0\n"), Err(Error::Parse { line: 2, column: 3, .. })));
        assert!(matches!(parse_system(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("% florp\n"), Err(Error::Parse { line: 1, column: 3, .. })));
    }

    #[test]
    fn serializer_roundtrip_examples() {
        for text in [
            "% field Q\n% vars 2\n-1/2*x0^2*x1 + 3*x1 - 7\nx0\n",
            "% field 101\n% vars 3\nx0*x1*x2 - 50\n2*x2^5 + 1\n",
        ] {
            let s = parse_system(text).unwrap().system;
            assert_eq!(serialize_system(&s), text);
            assert_eq!(parse_system(&serialize_system(&s)).unwrap().system, s);
        }
    }
}
