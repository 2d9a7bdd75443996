//! Text grammar for polynomials.
//!
//! Accepts the renderer's output in both spaced and compact form, e.g.
//! `1 - 3*q^2 + q^5`, `(1-q^2)^3*(1-q^3)^4`, `2*p*q_1^3`.  Whitespace is
//! insignificant.  Exponents apply to the preceding atom (variable, integer,
//! or parenthesized expression).

use super::{MultiPoly, PolyError, Var};
use num_bigint::BigInt;

pub fn parse_poly(input: &str) -> Result<MultiPoly, PolyError> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let poly = p.expression()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    // expression := ['-'|'+'] term (('+'|'-') term)*
    fn expression(&mut self) -> Result<MultiPoly, PolyError> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.bump();
                negate = true;
            }
            Some(b'+') => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                b'-' => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    // factor := atom ['^' integer]
    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.unsigned_integer()?;
            let e: u64 = e
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    // atom := integer | variable | '(' expression ')'
    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expression()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.unsigned_integer()?;
                Ok(MultiPoly::constant(BigInt::from(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let v = self.variable()?;
                Ok(MultiPoly::var(v))
            }
            _ => Err(self.error("expected integer, variable, or '('")),
        }
    }

    fn unsigned_integer(&mut self) -> Result<u128, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer too large"))
    }

    fn variable(&mut self) -> Result<Var, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Var::from_name(name).ok_or_else(|| PolyError::Parse {
            pos: start,
            msg: format!("unknown variable '{name}'"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{MultiPoly, PolyError, Var};

    fn qp(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parses_expanded_and_factored_forms() {
        assert_eq!(qp("1 - 3*q^2 + q^5").to_string(), "1 - 3*q^2 + q^5");
        let factored = qp("(1-q^2)^3*(1-q^3)^4");
        let expanded = qp("1 - q^2").pow(3).mul(&qp("1 - q^3").pow(4));
        assert_eq!(factored, expanded);
    }

    #[test]
    fn parses_all_variable_families() {
        let poly = qp("p + q + x1 + x2 + q_1 + q_12");
        let vars = poly.var_set();
        assert_eq!(
            vars,
            vec![Var::P, Var::Q, Var::X1, Var::X2, Var::QI(1), Var::QI(12)]
        );
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(qp("  1 -q ^ 2 "), qp("1-q^2"));
    }

    #[test]
    fn rejects_unknown_variables_and_garbage() {
        assert!(matches!(
            "1 + z".parse::<MultiPoly>(),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            "q_0".parse::<MultiPoly>(),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            "(1-q".parse::<MultiPoly>(),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            "1-q)".parse::<MultiPoly>(),
            Err(PolyError::Parse { .. })
        ));
    }

    #[test]
    fn unary_minus_and_constants() {
        assert_eq!(qp("-q"), MultiPoly::zero().sub(&MultiPoly::var(Var::Q)));
        assert_eq!(qp("-2 + 2"), MultiPoly::zero());
        assert_eq!(qp("3^2"), MultiPoly::from_i64(9));
    }
}
