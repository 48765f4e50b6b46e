//! Text form of polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! ```
//! Whitespace is ignored between tokens.  Rendering lists terms in
//! descending order with coefficients as residues in `[0, p)`.

use std::sync::Arc;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::{check_degree, MAX_VARS};
use crate::error::{Error, Result};
use crate::field::FieldElement;

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.text[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.text[self.pos..].chars().next(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn coeff(&mut self) -> u32 {
        let p = self.ring.field().modulus() as u64;
        self.digits().bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p) as u32
    }

    fn factor(&mut self, exps: &mut [u32; MAX_VARS]) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            Some(c) => return self.err(format!("expected a variable, found `{c}`")),
            None => return self.err("expected a variable, found end of input"),
        }
        let start = self.pos;
        while matches!(self.text[self.pos..].chars().next(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name = &self.text[start..self.pos];
        let idx = self.ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = 1u32;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let d = self.digits();
            if d.is_empty() {
                return self.err("expected an exponent after `^`");
            }
            e = match d.parse::<u32>() {
                Ok(v) if v <= super::MAX_EXPONENT => v,
                _ => return self.err("exponent too large"),
            };
        }
        exps[idx] = exps[idx].saturating_add(e);
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let mut exps = [0u32; MAX_VARS];
        let mut c = 1u32;
        if matches!(self.peek(), Some(ch) if ch.is_ascii_digit()) {
            c = self.coeff();
        } else {
            self.factor(&mut exps)?;
        }
        while self.peek() == Some('*') {
            self.bump();
            self.factor(&mut exps)?;
        }
        let total = exps.iter().fold(0u32, |a, &e| a.saturating_add(e));
        check_degree(total)?;
        Ok((Monomial::from_exponents(&exps[..self.ring.nvars()]), c))
    }
}

pub(crate) fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut parser = Parser { text, pos: 0, ring };
    let field = *ring.field();
    let mut terms = Vec::new();
    let mut negative = false;
    if parser.peek() == Some('-') {
        parser.bump();
        negative = true;
    }
    loop {
        let (m, c) = parser.term()?;
        let c = FieldElement(c);
        terms.push((m, if negative { field.neg(c) } else { c }));
        match parser.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(ch) => return parser.err(format!("unexpected `{ch}`")),
        }
        parser.bump();
    }
    Ok(Polynomial::from_terms(ring, terms))
}

pub(crate) fn render(poly: &Polynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let vars = poly.ring().vars();
    let mut out = String::new();
    for (i, &(m, c)) in poly.terms().iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        let factors: Vec<String> = vars
            .iter()
            .enumerate()
            .filter_map(|(j, v)| match m.exponent(j) {
                0 => None,
                1 => Some(v.clone()),
                e => Some(format!("{v}^{e}")),
            })
            .collect();
        if factors.is_empty() {
            out.push_str(&c.to_string());
        } else {
            if c != FieldElement::ONE {
                out.push_str(&c.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn ring() -> Arc<Ring> {
        Ring::xyz(PrimeField::new(10009, 3).unwrap())
    }

    #[test]
    fn parses_examples() {
        let r = ring();
        let h = Polynomial::parse("x^3 - y^3", &r).unwrap();
        assert_eq!(h.render(), "x^3 + 10008*y^3");
        let q = Polynomial::parse("2*x*y^2 + z", &r).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.degree(), Some(3));
        assert_eq!(Polynomial::parse(" - x *y + 3 ", &r).unwrap().render(), "10008*x*y + 3");
        assert_eq!(Polynomial::parse("x - x", &r).unwrap().render(), "0");
    }

    #[test]
    fn reports_errors() {
        let r = ring();
        assert_eq!(
            Polynomial::parse("x^", &r),
            Err(Error::Syntax { pos: 2, msg: "expected an exponent after `^`".into() })
        );
        assert_eq!(Polynomial::parse("x + w", &r), Err(Error::UnknownVariable("w".into())));
        assert!(matches!(Polynomial::parse("x +", &r), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(Polynomial::parse("x y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(Polynomial::parse("", &r), Err(Error::Syntax { .. })));
    }

    proptest! {
        #[test]
        fn render_round_trips(ts in proptest::collection::vec(((0u32..5, 0u32..5, 0u32..5), 0i64..10009), 0..8)) {
            let r = ring();
            let f = *r.field();
            let p = Polynomial::from_terms(&r, ts.into_iter().map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), f.elem(k))));
            let text = p.render();
            let back = Polynomial::parse(&text, &r).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.render(), text);
        }
    }
}
