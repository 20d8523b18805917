//! Reader for the polynomial text format.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | symbol ('^' uint)? | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! Whitespace is insignificant. The symbol `i` denotes the imaginary unit
//! unless it is one of the declared variables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::gaussian::GaussianRational;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

pub fn parse_poly<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<MultiPoly> {
    let vars: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Vec<String>,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
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

    fn expr(&mut self) -> Result<MultiPoly> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let value = if self.eat(b'/') {
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            offset: at,
                            message: "zero denominator".into(),
                        });
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                Ok(MultiPoly::constant(&self.vars, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.symbol();
                let base = if let Some(idx) = self.vars.iter().position(|v| *v == name) {
                    MultiPoly::var(&self.vars, &self.vars[idx].clone())?
                } else if name == "i" {
                    MultiPoly::constant(&self.vars, GaussianRational::i())
                } else {
                    return Err(Error::UnknownSymbol(name));
                };
                if self.eat(b'^') {
                    let e = self.uint()?;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    Ok(crate::exact::Ring::pow(&base, e as u64))
                } else {
                    Ok(base)
                }
            }
            _ => Err(self.error("expected a number, symbol or `(`")),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn symbol(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    #[test]
    fn simple_polynomial() {
        let p = parse_poly("4*x^2 - 1", &["x"]).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&[2]), GaussianRational::from_int(4));
        assert_eq!(p.coeff(&[0]), GaussianRational::from_int(-1));
    }

    #[test]
    fn three_terms_two_variables() {
        let p = parse_poly("u^3 - 2*u*v + 1", &["u", "v"]).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&[3, 0]), GaussianRational::from_int(1));
        assert_eq!(p.coeff(&[1, 1]), GaussianRational::from_int(-2));
        assert_eq!(p.coeff(&[0, 0]), GaussianRational::from_int(1));
    }

    #[test]
    fn dangling_operator_reports_offset() {
        assert_eq!(
            parse_poly("x +", &["x"]),
            Err(Error::Syntax {
                offset: 3,
                message: "expected a number, symbol or `(`".into()
            })
        );
    }

    #[test]
    fn other_errors() {
        assert_eq!(
            parse_poly("x + y", &["x"]),
            Err(Error::UnknownSymbol("y".into()))
        );
        assert!(matches!(
            parse_poly("(x + 1", &["x"]),
            Err(Error::Syntax { offset: 6, .. })
        ));
        assert!(matches!(
            parse_poly("3/0", &["x"]),
            Err(Error::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_poly("x 2", &["x"]),
            Err(Error::Syntax { offset: 2, .. })
        ));
    }

    #[test]
    fn parentheses_and_whitespace() {
        let p = parse_poly(" ( x + 1 ) * ( x - 1 ) ", &["x"]).unwrap();
        assert_eq!(p, parse_poly("x^2-1", &["x"]).unwrap());
        let q = parse_poly("-(x - 3/2)", &["x"]).unwrap();
        assert_eq!(q.coeff(&[0]).re, crate::exact::rational_frac(3, 2));
    }

    #[test]
    fn imaginary_unit() {
        let p = parse_poly("(1 - 2*i)*x + i", &["x"]).unwrap();
        assert_eq!(p.coeff(&[1]).im, rational(-2));
        assert_eq!(p.to_string(), "(1 - 2*i)*x + i");
        // a declared `i` is an ordinary variable
        let q = parse_poly("i^2", &["i"]).unwrap();
        assert_eq!(q.degree(), Some(2));
    }
}
