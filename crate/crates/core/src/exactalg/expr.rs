//! A small parser for rational expressions in `M` and `N` written in the
//! table style: implicit products, `^` powers, parentheses and
//! `\frac{..}{..}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

use super::bivariate::{BiPoly, MNRational};

struct P<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> P<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of '{}'", self.i, String::from_utf8_lossy(self.s)))
    }

    fn skip(&mut self) {
        while self.i < self.s.len() && (self.s[self.i] as char).is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip();
        let st = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[st..self.i]).unwrap().parse().map_err(|_| self.err("expected integer"))
    }

    fn expr(&mut self) -> Result<MNRational> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                -self.product()?
            }
            Some(b'+') => {
                self.i += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = &acc + &self.product()?;
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<MNRational> {
        let mut acc = self.power()?;
        while matches!(self.peek(), Some(b'0'..=b'9' | b'M' | b'N' | b'(' | b'\\' | b'*')) {
            if self.peek() == Some(b'*') {
                self.i += 1;
            }
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MNRational> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e: u32 = self.int()?.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok((0..e).fold(MNRational::one(), |a, _| &a * &base));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MNRational> {
        match self.peek() {
            Some(b'0'..=b'9') => Ok(MNRational::constant(BigRational::from_integer(self.int()?))),
            Some(b'M') => {
                self.i += 1;
                Ok(MNRational::m())
            }
            Some(b'N') => {
                self.i += 1;
                Ok(MNRational::n())
            }
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                self.eat(b')')?;
                Ok(e)
            }
            Some(b'\\') if self.s[self.i..].starts_with(b"\\frac") => {
                self.i += 5;
                self.eat(b'{')?;
                let n = self.expr()?;
                self.eat(b'}')?;
                self.eat(b'{')?;
                let d = self.expr()?;
                self.eat(b'}')?;
                if num_traits::Zero::is_zero(&d) {
                    return Err(Error::DivisionByZero);
                }
                Ok(&n / &d)
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

/// Parse an expression such as `\frac{-M(M - N)}{N (N^2-1)}`.
pub fn parse_mn(s: &str) -> Result<MNRational> {
    let mut p = P { s: s.as_bytes(), i: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parse a polynomial in `M` and `N`; fails on a non-constant denominator.
pub fn parse_mn_poly(s: &str) -> Result<BiPoly> {
    let r = parse_mn(s)?;
    if r.den().deg_m() != Some(0) || r.den().deg_n() != Some(0) {
        return Err(Error::Parse(format!("'{s}' is not a polynomial")));
    }
    let c = r.den().leading().unwrap().1.clone();
    Ok(r.num().scale(&(BigRational::one() / c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Ring};

    #[test]
    fn table_forms() {
        let a = parse_mn("\\frac{M(MN-1)}{N (N^2-1)}").unwrap();
        let m = MNRational::m();
        let n = MNRational::n();
        let one = MNRational::one();
        let expect = &(&m * &(&(&m * &n) - &one)) / &(&n * &(&(&n * &n) - &one));
        assert_eq!(a, expect);
        assert_eq!(parse_mn("-2M^2 + 3").unwrap(), &(&(&m * &m) * &MNRational::from_i64(-2)) + &MNRational::from_i64(3));
        assert_eq!(parse_mn("\\frac{-1}{N}").unwrap().eval(&q(2), &q(4)), Some(crate::scalar::qf(-1, 4)));
        assert!(parse_mn("M +").is_err());
        assert!(parse_mn("\\frac{1}{N-N}").is_err());
        assert_eq!(parse_mn_poly("(M-N)^2").unwrap().len(), 3);
        assert!(parse_mn_poly("1/N").is_err());
    }
}
