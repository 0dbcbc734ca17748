//! Literal syntax for scalars: integers, `z`, `t`, `+ - * / ^` and parentheses.
//!
//! `z` denotes `zeta_m` for the order supplied by the caller.

use super::{ArithError, Scalar};

pub fn parse_scalar(src: &str, order: u32) -> Result<Scalar, ArithError> {
    super::scalar::check_order(order)?;
    let mut p = Parser { s: src.as_bytes(), pos: 0, order };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    order: u32,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ArithError {
        ArithError::Parse {
            input: String::from_utf8_lossy(self.s).into_owned(),
            at: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, ArithError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ArithError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                (&acc / &rhs).map_err(|_| self.err("division by zero"))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ArithError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, ArithError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i64 = e.parse().map_err(|_| self.err("exponent too large"))?;
            return base
                .pow(if neg { -e } else { e })
                .map_err(|_| self.err("zero to a negative power"));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String, ArithError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Scalar, ArithError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'z') => {
                self.pos += 1;
                Scalar::zeta(self.order, 1)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Scalar::t())
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer()?;
                let n: num_bigint::BigInt = digits.parse().unwrap();
                Ok(Scalar::from_rational(num_rational::BigRational::from_integer(n)))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_literals() {
        let v = parse_scalar("(1/2)*z^2 + t - 3", 4).unwrap();
        let z = Scalar::zeta(4, 1).unwrap();
        let want = &(&(&Scalar::from_ratio(1, 2) * &(&z * &z)) + &Scalar::t()) - &Scalar::from_int(3);
        assert_eq!(v, want);
        assert_eq!(parse_scalar("z^4", 4).unwrap(), Scalar::one());
        assert_eq!(parse_scalar("t^-1 * t", 1).unwrap(), Scalar::one());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("1 +", 1).is_err());
        assert!(parse_scalar("1/0", 1).is_err());
        assert!(parse_scalar("x", 1).is_err());
        assert!(parse_scalar("1", 0).is_err());
    }

    #[test]
    fn display_roundtrips() {
        for src in ["0", "-7/3", "z + 2", "(t^2 - z)/(t + 1/2)", "-t/(z*t - 1)", "t^-3"] {
            let v = parse_scalar(src, 6).unwrap();
            let back = parse_scalar(&v.to_string(), 6).unwrap();
            assert_eq!(v, back, "{src} -> {v}");
        }
    }
}
