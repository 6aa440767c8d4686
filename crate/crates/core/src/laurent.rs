//! Laurent polynomials in `x` and `y` with rational coefficients.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := [sign] [coeff ['*']] factor (['*'] factor)*  |  [sign] coeff
//! coeff  := digits ['/' digits]
//! factor := ('x' | 'y') [('^' | '**') [sign] digits]
//! ```
//!
//! Only the support matters for the Newton polygon; coefficients are kept
//! exactly so that cancellation is detected.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;
use crate::lattice::{convex_hull, LatticePoint};
use crate::Polygon;

/// Exponent vector `(i, j)` of the monomial `x^i y^j`.
pub type Exponent = (BigInt, BigInt);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigRational>,
}

impl LaurentPoly {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c·x^i y^j`, dropping the term if it cancels.
    pub fn add_term(&mut self, i: BigInt, j: BigInt, c: BigRational) {
        let key = (i, j);
        let sum = self.terms.remove(&key).unwrap_or_else(BigRational::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    /// Multiply by the monomial `x^a y^b`.
    pub fn shift(&self, a: &BigInt, b: &BigInt) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((i + a, j + b), c.clone()))
                .collect(),
        }
    }

    pub fn newton_polygon(&self) -> Polygon {
        let pts: Vec<_> = self
            .support()
            .map(|(i, j)| LatticePoint::new(i.clone(), j.clone()))
            .collect();
        convex_hull(&pts)
    }
}

pub fn newton_polygon(f: &LaurentPoly) -> Polygon {
    f.newton_polygon()
}

fn write_var(f: &mut fmt::Formatter<'_>, var: char, e: &BigInt) -> fmt::Result {
    if e.is_one() {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms by increasing `(i, j)`, joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let constant = i.is_zero() && j.is_zero();
            let mut need_star = false;
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
                need_star = true;
            }
            for (var, e) in [('x', i), ('y', j)] {
                if e.is_zero() {
                    continue;
                }
                if need_star {
                    f.write_str("*")?;
                }
                write_var(f, var, e)?;
                need_star = true;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>, ParseError> {
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Ok(None);
        }
        let num = self.digits()?;
        if self.peek() == Some('/') {
            self.bump();
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError::Syntax {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    fn factor(&mut self) -> Result<Option<(char, BigInt)>, ParseError> {
        let var = match self.peek() {
            Some(c @ ('x' | 'y')) => c,
            _ => return Ok(None),
        };
        self.bump();
        if self.eat("**") || self.eat("^") {
            let neg = self.sign().unwrap_or_default();
            let e = self.digits()?;
            return Ok(Some((var, if neg { -e } else { e })));
        }
        Ok(Some((var, BigInt::one())))
    }

    fn term(&mut self, negate: bool, f: &mut LaurentPoly) -> Result<(), ParseError> {
        let mut neg = negate;
        while let Some(n) = self.sign() {
            neg ^= n;
        }
        let start = self.pos;
        let coeff = self.coefficient()?;
        let mut i = BigInt::zero();
        let mut j = BigInt::zero();
        let mut n_factors = 0usize;
        loop {
            let save = self.pos;
            let starred = (coeff.is_some() || n_factors > 0) && self.eat("*");
            match self.factor()? {
                Some((var, e)) => {
                    if var == 'x' {
                        i += e;
                    } else {
                        j += e;
                    }
                    n_factors += 1;
                }
                None if starred => {
                    self.pos = save;
                    self.eat("*");
                    return self.err("expected 'x' or 'y' after '*'");
                }
                None => break,
            }
        }
        if coeff.is_none() && n_factors == 0 {
            self.pos = start;
            return match self.peek() {
                None => self.err("expected a term, found end of input"),
                Some(c) => self.err(format!("expected a term, found '{c}'")),
            };
        }
        let mut c = coeff.unwrap_or_else(BigRational::one);
        if neg {
            c = -c;
        }
        f.add_term(i, j, c);
        Ok(())
    }
}

/// Parse a Laurent polynomial, combining like terms.
pub fn parse(input: &str) -> Result<LaurentPoly, ParseError> {
    let mut cur = Cursor { src: input, pos: 0 };
    let mut f = LaurentPoly::new();
    cur.term(false, &mut f)?;
    loop {
        match cur.peek() {
            None => break,
            Some('+') | Some('-') => {
                let neg = cur.bump() == Some('-');
                cur.term(neg, &mut f)?;
            }
            Some(c) => return cur.err(format!("unexpected '{c}'")),
        }
    }
    if f.is_zero() {
        return Err(ParseError::EmptyPolynomial);
    }
    Ok(f)
}

impl std::str::FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
