//! Unreduced fractions of polynomials in `(z, s)` over `Q`.
//!
//! No gcds are taken, so arithmetic is cheap and only a zero test is exact.
//! The bivariate polynomials store `z` as `m` and `s` as `n`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactalg::BiPoly;
use crate::QPoly;

use super::curve::{CurveFn, Qs};

#[derive(Clone, Debug)]
pub struct ZsFrac {
    pub num: BiPoly,
    pub den: BiPoly,
}

fn s_poly(p: &QPoly) -> BiPoly {
    BiPoly::from_n_poly(p)
}

fn z_pow(k: u32) -> BiPoly {
    BiPoly::from_terms([((k, 0), crate::scalar::q(1))])
}

fn dz(p: &BiPoly) -> BiPoly {
    BiPoly::from_terms(
        p.terms()
            .filter(|((i, _), _)| *i > 0)
            .map(|(&(i, j), c)| ((i - 1, j), c * crate::scalar::q(i as i64))),
    )
}

impl ZsFrac {
    pub fn from_poly(p: BiPoly) -> Self {
        ZsFrac { num: p, den: BiPoly::one() }
    }

    pub fn s_const(c: &Qs) -> Self {
        ZsFrac { num: s_poly(c.num()), den: s_poly(c.den()) }
    }

    pub fn z() -> Self {
        Self::from_poly(BiPoly::m())
    }

    pub fn s() -> Self {
        Self::from_poly(BiPoly::n())
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(BiPoly::constant(crate::scalar::q(n)))
    }

    /// Clear the `s`-denominators of a polynomial in `z`.
    fn from_upoly(p: &crate::exactalg::UniPoly<Qs>) -> (BiPoly, BiPoly) {
        let mut l = QPoly::one();
        for c in p.coeffs() {
            let g = l.gcd(c.den());
            l = &l * &c.den().exact_div(&g).unwrap();
        }
        let mut acc = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let f = &s_poly(c.num()) * &s_poly(&l.exact_div(c.den()).unwrap());
            acc = &acc + &(&f * &z_pow(i as u32));
        }
        (acc, s_poly(&l))
    }

    pub fn from_curve_fn(f: &CurveFn) -> Self {
        let (n, ln) = Self::from_upoly(f.num());
        let (d, ld) = Self::from_upoly(f.den());
        ZsFrac { num: &n * &ld, den: &d * &ln }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn same_value(&self, o: &ZsFrac) -> bool {
        (&self.num * &o.den - &o.num * &self.den).is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_poly(BiPoly::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in `z`.
    pub fn dz(&self) -> Self {
        let num = &dz(&self.num) * &self.den - &self.num * &dz(&self.den);
        ZsFrac { num, den: &self.den * &self.den }
    }

    pub fn scale(&self, c: i64) -> Self {
        ZsFrac { num: self.num.scale(&crate::scalar::q(c)), den: self.den.clone() }
    }
}

impl<'a> Add<&'a ZsFrac> for &'a ZsFrac {
    type Output = ZsFrac;
    fn add(self, o: &ZsFrac) -> ZsFrac {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return ZsFrac { num: &self.num + &o.num, den: self.den.clone() };
        }
        ZsFrac { num: &self.num * &o.den + &o.num * &self.den, den: &self.den * &o.den }
    }
}

impl<'a> Sub<&'a ZsFrac> for &'a ZsFrac {
    type Output = ZsFrac;
    fn sub(self, o: &ZsFrac) -> ZsFrac {
        self + &(-o.clone())
    }
}

impl<'a> Mul<&'a ZsFrac> for &'a ZsFrac {
    type Output = ZsFrac;
    fn mul(self, o: &ZsFrac) -> ZsFrac {
        ZsFrac { num: &self.num * &o.num, den: &self.den * &o.den }
    }
}

impl<'a> Div<&'a ZsFrac> for &'a ZsFrac {
    type Output = ZsFrac;
    fn div(self, o: &ZsFrac) -> ZsFrac {
        assert!(!o.num.is_zero(), "division by zero");
        ZsFrac { num: &self.num * &o.den, den: &self.den * &o.num }
    }
}

impl Neg for ZsFrac {
    type Output = ZsFrac;
    fn neg(self) -> ZsFrac {
        ZsFrac { num: -self.num, den: self.den }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_and_equality() {
        // (s z)/(z - 1), derivative -s/(z-1)^2
        let zm1 = &ZsFrac::z() - &ZsFrac::int(1);
        let w = &(&ZsFrac::s() * &ZsFrac::z()) / &zm1;
        let expect = &(-ZsFrac::s()) / &zm1.pow(2);
        assert!(w.dz().same_value(&expect));
        assert!(!w.same_value(&expect));
        assert!((&w - &w).is_zero());
    }
}
