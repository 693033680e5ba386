//! Text syntax for monomials and ideals.
//!
//! ```text
//! monomial := factor ('*' factor)* | '1'
//! factor   := ident ('_' digits)? ('^' digits)?
//! ideal    := '(' (monomial (',' monomial)*)? ')'
//! ```
//!
//! `x1_2` is the polarized variable with base `x1` and polar index 2.

use crate::error::{Error, Result};
use crate::monomial::{make_ideal, Monomial, MonomialIdeal, Variable};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{want}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos, format!("expected {wanted}, found `{c}`")),
            None => Error::parse(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.unexpected("a number"));
        }
        digits
            .parse()
            .map_err(|_| Error::parse(start, format!("number `{digits}` is too large")))
    }

    fn factor(&mut self) -> Result<(Variable, u32)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.unexpected("a variable")),
        }
        let ident = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        let var = split_polar(ident).ok_or_else(|| {
            Error::parse(start, format!("malformed variable `{ident}`"))
        })?;
        let exp = if self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            let e = self.number()?;
            if e == 0 {
                return Err(Error::parse(at, "exponents must be positive"));
            }
            e
        } else {
            1
        };
        Ok((var, exp))
    }

    fn monomial(&mut self) -> Result<Monomial> {
        self.skip_ws();
        if self.peek() == Some('1') {
            let at = self.pos;
            let n = self.number()?;
            if n != 1 {
                return Err(Error::parse(at, "only the constant 1 is a monomial"));
            }
            return Ok(Monomial::one());
        }
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Monomial::from_pairs(factors)
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

/// `x1_2` → (`x1`, 2); plain identifiers have no polar index. Returns
/// `None` for identifiers with a dangling or empty underscore suffix.
pub(crate) fn split_polar(ident: &str) -> Option<Variable> {
    match ident.rsplit_once('_') {
        Some((base, idx)) if !base.is_empty() && idx.chars().all(|c| c.is_ascii_digit()) => {
            let j: u32 = idx.parse().ok()?;
            if j == 0 || base.ends_with('_') {
                None
            } else {
                Some(Variable::polarized(base, j))
            }
        }
        _ if ident.ends_with('_') => None,
        _ => Some(Variable::new(ident)),
    }
}

/// Whether `name` can be a vertex / plain variable name: an ASCII letter
/// followed by letters, digits or underscores, not ending in `_<digits>`.
pub fn is_plain_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && matches!(split_polar(name), Some(v) if !v.is_polarized())
}

pub fn parse_monomial(src: &str) -> Result<Monomial> {
    let mut c = Cursor::new(src);
    let m = c.monomial()?;
    c.finish()?;
    Ok(m)
}

/// Parses `(g1, g2, ...)`. The ambient ring is the set of variables that
/// occur, in natural order.
pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    let mut c = Cursor::new(src);
    c.expect('(')?;
    let mut gens = Vec::new();
    let mut positions = Vec::new();
    c.skip_ws();
    if !c.eat(')') {
        loop {
            c.skip_ws();
            positions.push(c.pos);
            gens.push(c.monomial()?);
            if c.eat(')') {
                break;
            }
            c.expect(',')?;
        }
    }
    c.finish()?;
    if let Some(k) = gens.iter().position(Monomial::is_unit) {
        return Err(Error::parse(
            positions[k],
            "the unit ideal is not supported",
        ));
    }
    let mut ambient: Vec<Variable> = gens
        .iter()
        .flat_map(|g| g.exponents().map(|(v, _)| v.clone()))
        .collect();
    ambient.sort();
    ambient.dedup();
    make_ideal(gens, ambient)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_roundtrip() {
        for s in ["x1*x2^3", "x1_2*x1_3", "1", "a^10*b"] {
            assert_eq!(parse_monomial(s).unwrap().to_string(), s);
        }
        let m = parse_monomial(" x2 ^ 2 * x1 * x2 ").unwrap();
        assert_eq!(m.to_string(), "x1*x2^3");
        assert_eq!(m.degree(), 4);
    }

    #[test]
    fn ideal_parsing() {
        let i = parse_ideal("(x1*x2^3, x2*x3^2, x3*x4^4, x4*x1^5)").unwrap();
        assert_eq!(i.len(), 4);
        assert_eq!(i.ambient().len(), 4);
        assert_eq!(i.to_string(), "(x1*x2^3, x2*x3^2, x3*x4^4, x1^5*x4)");
        assert!(parse_ideal("()").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_ideal("(x1*x2, x3^)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("unexpected {other:?}"),
        }
        match parse_ideal("(x1, 1)") {
            Err(Error::Parse { pos, message }) => {
                assert_eq!(pos, 5);
                assert!(message.contains("unit"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_monomial("x^0").is_err());
        assert!(parse_monomial("x_").is_err());
        assert!(parse_monomial("2").is_err());
        assert!(parse_ideal("(x1").is_err());
        assert!(parse_ideal("(x1) junk").is_err());
    }

    #[test]
    fn identifiers() {
        assert!(is_plain_identifier("x1"));
        assert!(is_plain_identifier("leaf_a"));
        assert!(!is_plain_identifier("x1_2"));
        assert!(!is_plain_identifier("1x"));
        assert!(!is_plain_identifier(""));
        assert!(!is_plain_identifier("a-b"));
    }
}
