use super::polynomial::{coeff_is_negative, Coeff};
use super::{Monomial, Polynomial, Var};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};
use std::str::FromStr;

/// Text grammar:
///   poly ::= ['-'] term (('+'|'-') term)*
///   term ::= rational | [rational '*']? var+
///   var  ::= 'x[' int ',' int ']' | 'y[' int ']'
/// with rationals written as `p/q` or as integers. `var^k` is accepted on
/// input as shorthand for k repetitions; printing always repeats.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("polynomial parse error at byte {at}: {msg}")]
pub struct ParseError {
    pub at: usize,
    pub msg: String,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError {
            at: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", b as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(BigInt::from_str(s).unwrap())
    }

    fn small_uint(&mut self) -> Result<u8, ParseError> {
        let n = self.integer()?;
        u8::try_from(&n).map_err(|_| ParseError {
            at: self.pos,
            msg: "index out of range".to_string(),
        })
    }

    fn variable(&mut self) -> Result<Var, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                self.eat(b'[')?;
                let i = self.small_uint()?;
                self.eat(b',')?;
                let j = self.small_uint()?;
                self.eat(b']')?;
                Ok(Var::X(i, j))
            }
            Some(b'y') => {
                self.pos += 1;
                self.eat(b'[')?;
                let k = self.small_uint()?;
                self.eat(b']')?;
                Ok(Var::Y(k))
            }
            _ => self.err("expected variable"),
        }
    }

    fn rational(&mut self) -> Result<Coeff, ParseError> {
        let p = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let q = self.integer()?;
            if q == BigInt::from(0) {
                return self.err("zero denominator");
            }
            Ok(BigRational::new(p, q))
        } else {
            Ok(BigRational::from_integer(p))
        }
    }

    fn term(&mut self) -> Result<(Monomial, Coeff), ParseError> {
        self.skip_ws();
        let mut coeff = Coeff::one();
        let mut saw_coeff = false;
        if self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            coeff = self.rational()?;
            saw_coeff = true;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                // bare rational constant term
                return Ok((Monomial::one(), coeff));
            }
        }
        let mut pairs: Vec<(Var, u32)> = Vec::new();
        while let Some(b'x') | Some(b'y') = self.peek() {
            let v = self.variable()?;
            let mut e = 1u32;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let n = self.integer()?;
                e = u32::try_from(&n).map_err(|_| ParseError {
                    at: self.pos,
                    msg: "exponent out of range".to_string(),
                })?;
            }
            pairs.push((v, e));
            self.skip_ws();
        }
        if pairs.is_empty() {
            if saw_coeff {
                return self.err("expected variable after '*'");
            }
            return self.err("expected term");
        }
        Ok((Monomial::from_pairs(pairs), coeff))
    }
}

pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    let mut cur = Cursor {
        src: input.as_bytes(),
        pos: 0,
    };
    cur.skip_ws();
    if cur.peek() == Some(b'0') && cur.pos + 1 == cur.src.len() {
        return Ok(Polynomial::zero());
    }
    let mut sign = Coeff::one();
    if cur.peek() == Some(b'-') {
        cur.pos += 1;
        sign = -sign;
    } else if cur.peek() == Some(b'+') {
        cur.pos += 1;
    }
    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
    loop {
        let (m, c) = cur.term()?;
        terms.push((m, c * &sign));
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                sign = Coeff::one();
            }
            Some(b'-') => {
                cur.pos += 1;
                sign = -Coeff::one();
            }
            None => break,
            _ => return cur.err("expected '+', '-' or end of input"),
        }
    }
    Ok(Polynomial::from_terms(terms))
}

fn print_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for &(v, e) in m.exponents() {
        for _ in 0..e {
            s.push_str(&v.to_string());
        }
    }
    s
}

fn print_coeff_abs(c: &Coeff) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

pub(crate) fn print_terms(terms: &[(Monomial, Coeff)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = coeff_is_negative(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs_one = c.abs().is_one();
        if m.is_one() {
            out.push_str(&print_coeff_abs(c));
        } else if abs_one {
            out.push_str(&print_monomial(m));
        } else {
            out.push_str(&print_coeff_abs(c));
            out.push('*');
            out.push_str(&print_monomial(m));
        }
    }
    out
}
