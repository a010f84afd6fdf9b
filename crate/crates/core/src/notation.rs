//! Parser for the compact structure-equation notation.
//!
//! ```text
//! equations := ["("] entry ("," entry)* [")"] ;
//! entry     := "0" ["^" nat] | sum ;
//! sum       := ["-"] term (("+"|"-") term)* ;
//! term      := [rational "*"] ["e"] index ;
//! index     := digit+            (dim <= 9)
//!            | "[" nat ("," nat)* "]" ;
//! rational  := nat ["/" nat] ;
//! ```
//!
//! `14-23` is `e^{14} − e^{23}`; index tuples need not be increasing
//! (`62` is `−e^{26}`). Whitespace is ignored.

use thiserror::Error;

use crate::exterior::{ExteriorError, Form, MultiIndex, MAX_DIM};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("index {index} at position {pos} is out of range for dimension {dim}")]
    IndexOutOfRange { pos: usize, index: usize, dim: usize },
    #[error("repeated index in the monomial at position {pos}")]
    RepeatedIndex { pos: usize },
    #[error("term at position {pos} has degree {found}, expected {expected}")]
    MixedDegree { pos: usize, expected: usize, found: usize },
    #[error("digit-run index at position {pos} is ambiguous in dimension {dim}; use the bracket form [i,j]")]
    AmbiguousIndex { pos: usize, dim: usize },
    #[error("expected {expected} entries, found {found}")]
    EntryCountMismatch { expected: usize, found: usize },
    #[error("dimension {0} is not supported")]
    Dimension(usize),
}

impl From<ExteriorError> for ParseError {
    fn from(e: ExteriorError) -> Self {
        ParseError::Syntax { pos: 0, msg: e.to_string() }
    }
}

#[derive(Debug, Clone)]
struct RawTerm<T> {
    pos: usize,
    coeff: T,
    /// 1-based, in written order.
    indices: Vec<usize>,
    compact: bool,
}

#[derive(Debug, Clone)]
enum RawEntry<T> {
    Zeros(usize),
    Sum(Vec<RawTerm<T>>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<R>(&self, msg: impl Into<String>) -> Result<R, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// A run of decimal digits (no interior whitespace).
    fn digits(&mut self) -> Result<(usize, String), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        Ok((start, String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
    }

    fn nat(&mut self) -> Result<usize, ParseError> {
        let (pos, d) = self.digits()?;
        d.parse().map_err(|_| ParseError::Syntax { pos, msg: format!("number {d} too large") })
    }

    fn bracket_index(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut out = vec![self.nat()?];
        while self.eat(b',') {
            out.push(self.nat()?);
        }
        if !self.eat(b']') {
            return self.error("expected ']'");
        }
        Ok(out)
    }

    fn term<T: Field>(&mut self, sign: bool) -> Result<RawTerm<T>, ParseError> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        let mut coeff = T::one();
        let mut had_coeff = false;
        if let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                let save = self.pos;
                let (_, num) = self.digits()?;
                let mut text = num.clone();
                if self.eat(b'/') {
                    let (_, den) = self.digits()?;
                    text = format!("{num}/{den}");
                    if !self.eat(b'*') {
                        return self.error("expected '*' after rational coefficient");
                    }
                    had_coeff = true;
                } else if self.eat(b'*') {
                    had_coeff = true;
                } else {
                    self.pos = save;
                }
                if had_coeff {
                    coeff = T::parse_exact(&text)
                        .ok_or(ParseError::Syntax { pos, msg: format!("bad coefficient {text}") })?;
                }
            }
        }
        self.eat(b'e');
        let (indices, compact) = if self.eat(b'[') {
            (self.bracket_index()?, false)
        } else {
            let (_, d) = self.digits()?;
            (d.bytes().map(|b| (b - b'0') as usize).collect(), true)
        };
        if sign {
            coeff = -coeff;
        }
        Ok(RawTerm { pos, coeff, indices, compact })
    }

    fn sum<T: Field>(&mut self) -> Result<Vec<RawTerm<T>>, ParseError> {
        let mut terms = Vec::new();
        let mut sign = self.eat(b'-');
        loop {
            terms.push(self.term(sign)?);
            if self.eat(b'+') {
                sign = false;
            } else if self.eat(b'-') {
                sign = true;
            } else {
                break;
            }
        }
        Ok(terms)
    }

    /// A lone `0` (optionally `0^j`) ends at a separator; anything else is a sum.
    fn zeros(&mut self) -> Result<Option<usize>, ParseError> {
        let save = self.pos;
        if self.peek() != Some(b'0') {
            return Ok(None);
        }
        self.pos += 1;
        if self.eat(b'^') {
            return Ok(Some(self.nat()?));
        }
        match self.peek() {
            None | Some(b',') | Some(b')') => Ok(Some(1)),
            _ => {
                self.pos = save;
                Ok(None)
            }
        }
    }

    fn entry<T: Field>(&mut self) -> Result<RawEntry<T>, ParseError> {
        match self.zeros()? {
            Some(n) => Ok(RawEntry::Zeros(n)),
            None => Ok(RawEntry::Sum(self.sum()?)),
        }
    }

    fn equations<T: Field>(&mut self) -> Result<Vec<RawEntry<T>>, ParseError> {
        let paren = self.eat(b'(');
        let mut entries = vec![self.entry()?];
        while self.eat(b',') {
            entries.push(self.entry()?);
        }
        if paren && !self.eat(b')') {
            return self.error("expected ')'");
        }
        if !self.at_end() {
            return self.error("unexpected trailing input");
        }
        Ok(entries)
    }
}

fn check_dim(dim: usize) -> Result<(), ParseError> {
    if dim == 0 || dim > MAX_DIM {
        return Err(ParseError::Dimension(dim));
    }
    Ok(())
}

/// Resolves written terms into a form of the expected degree (if known).
fn build_form<T: Field>(dim: usize, expected: Option<usize>, terms: Vec<RawTerm<T>>) -> Result<Form<T>, ParseError> {
    let mut degree = expected;
    let mut out: Option<Form<T>> = None;
    for t in terms {
        if t.compact && dim > 9 {
            return Err(ParseError::AmbiguousIndex { pos: t.pos, dim });
        }
        for &i in &t.indices {
            if i == 0 || i > dim {
                return Err(ParseError::IndexOutOfRange { pos: t.pos, index: i, dim });
            }
        }
        let deg = *degree.get_or_insert(t.indices.len());
        if t.indices.len() != deg {
            return Err(ParseError::MixedDegree { pos: t.pos, expected: deg, found: t.indices.len() });
        }
        // Wedge the generators in written order to pick up the sign.
        let mut term = Form::scalar(dim, t.coeff);
        for &i in &t.indices {
            term = term.wedge(&Form::monomial(dim, MultiIndex::single(i - 1), T::one()))?;
        }
        if term.is_zero() && !t.indices.is_empty() {
            return Err(ParseError::RepeatedIndex { pos: t.pos });
        }
        out = Some(match out {
            Some(acc) => acc.try_add(&term)?,
            None => term,
        });
    }
    Ok(out.unwrap_or_else(|| Form::zero(dim, degree.unwrap_or(0))))
}

/// Parses a single form in `sum` notation, e.g. `16+35+24` or `1/2*e136-e234`.
/// `0` denotes the zero form.
pub fn parse_form<T: Field>(text: &str, dim: usize) -> Result<Form<T>, ParseError> {
    parse_form_of_degree(text, dim, None)
}

pub fn parse_form_of_degree<T: Field>(text: &str, dim: usize, degree: Option<usize>) -> Result<Form<T>, ParseError> {
    check_dim(dim)?;
    let mut p = Parser::new(text);
    if p.zeros()? == Some(1) {
        if !p.at_end() {
            return p.error("unexpected trailing input");
        }
        return Ok(Form::zero(dim, degree.unwrap_or(0)));
    }
    let terms = p.sum()?;
    if !p.at_end() {
        return p.error("unexpected trailing input");
    }
    build_form(dim, degree, terms)
}

/// Parses structure equations into the list `d e^1, …, d e^m` of 2-forms.
/// When `dim` is `None` it is the number of entries after run-length expansion.
pub fn parse_differentials<T: Field>(text: &str, dim: Option<usize>) -> Result<Vec<Form<T>>, ParseError> {
    let entries: Vec<RawEntry<T>> = Parser::new(text).equations()?;
    let count: usize = entries
        .iter()
        .map(|e| match e {
            RawEntry::Zeros(n) => *n,
            RawEntry::Sum(_) => 1,
        })
        .sum();
    let dim = dim.unwrap_or(count);
    check_dim(dim)?;
    if count != dim {
        return Err(ParseError::EntryCountMismatch { expected: dim, found: count });
    }
    let mut out = Vec::with_capacity(dim);
    for e in entries {
        match e {
            RawEntry::Zeros(n) => out.extend((0..n).map(|_| Form::zero(dim, 2))),
            RawEntry::Sum(terms) => out.push(build_form(dim, Some(2), terms)?),
        }
    }
    Ok(out)
}

/// Canonical structure-equation rendering: no run-length compression, sorted
/// index pairs, e.g. `0,0,0,12,14-23,15+34`.
pub fn render_differentials<T: Field>(forms: &[Form<T>]) -> String {
    forms.iter().map(|f| f.render_compact()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn e(dim: usize, idx: &[usize]) -> Form<Rational> {
        Form::basis(dim, idx)
    }

    #[test]
    fn run_length_zeros() {
        let d = parse_differentials::<Rational>("0^4,12,13", None).unwrap();
        assert_eq!(d.len(), 6);
        assert!(d[..4].iter().all(|f| f.is_zero()));
        assert_eq!(d[4], e(6, &[1, 2]));
        assert_eq!(d[5], e(6, &[1, 3]));
    }

    #[test]
    fn signed_entries() {
        let d = parse_differentials::<Rational>("-23,0,0,-46,56,0", None).unwrap();
        assert_eq!(d[0], -&e(6, &[2, 3]));
        assert_eq!(d[3], -&e(6, &[4, 6]));
        assert_eq!(d[4], e(6, &[5, 6]));
        assert!(d[1].is_zero() && d[2].is_zero() && d[5].is_zero());
    }

    #[test]
    fn sums_and_parentheses() {
        let d = parse_differentials::<Rational>("(0^3, 12, 14-23, 15+34)", Some(6)).unwrap();
        assert_eq!(d[3], e(6, &[1, 2]));
        assert_eq!(d[4], &e(6, &[1, 4]) - &e(6, &[2, 3]));
        assert_eq!(d[5], &e(6, &[1, 5]) + &e(6, &[3, 4]));
    }

    #[test]
    fn rational_coefficients_and_order() {
        let f = parse_form::<Rational>("3*12 - 1/2*13 + 62", 6).unwrap();
        let expected = &(&e(6, &[1, 2]).scale(&Rational::from_int(3)) - &e(6, &[1, 3]).scale(&Rational::from_frac(1, 2)))
            - &e(6, &[2, 6]);
        assert_eq!(f, expected);
    }

    #[test]
    fn bracket_form_for_large_dims() {
        let d = parse_differentials::<Rational>("0^9,[1,2]", None).unwrap();
        assert_eq!(d[9], e(10, &[1, 2]));
        assert!(matches!(
            parse_differentials::<Rational>("0^9,12", None),
            Err(ParseError::AmbiguousIndex { .. })
        ));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_differentials::<Rational>("0,0,17", None),
            Err(ParseError::IndexOutOfRange { pos: 4, index: 7, dim: 3 })
        );
        assert_eq!(
            parse_differentials::<Rational>("0,0,12", Some(4)),
            Err(ParseError::EntryCountMismatch { expected: 4, found: 3 })
        );
        assert!(matches!(parse_differentials::<Rational>("0,,12", None), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_form::<Rational>("11", 3), Err(ParseError::RepeatedIndex { .. })));
        assert!(matches!(parse_form::<Rational>("12+3", 3), Err(ParseError::MixedDegree { .. })));
        assert!(matches!(parse_differentials::<Rational>("0,0,123", None), Err(ParseError::MixedDegree { .. })));
    }

    #[test]
    fn rendered_forms_parse_back() {
        let f = parse_form::<Rational>("1/2*e136 - e234 + 2*e456", 6).unwrap();
        assert_eq!(parse_form::<Rational>(&f.render(), 6).unwrap(), f);
        assert_eq!(parse_form::<Rational>("0", 6).unwrap(), Form::zero(6, 0));
    }
}
