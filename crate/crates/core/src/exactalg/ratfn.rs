//! Univariate rational functions in lowest terms with monic denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

use super::poly::UniPoly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFn<F> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RatFn<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly<F>, den: UniPoly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.degree() == Some(0) {
                (num, den)
            } else {
                (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
            }
        };
        Self::normalize_lead(num, den)
    }

    fn normalize_lead(num: UniPoly<F>, den: UniPoly<F>) -> Self {
        let l = den.lead().unwrap().clone();
        if l.is_one() {
            RatFn { num, den }
        } else {
            let li = l.inv().unwrap();
            RatFn { num: num.scale(&li), den: den.scale(&li) }
        }
    }

    /// Multiply by a constant without a gcd.
    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        RatFn { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The constant value if this is a constant.
    pub fn as_constant(&self) -> Option<F> {
        if self.is_polynomial() && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// `None` when the point is a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }

    /// Substitute a rational function for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let (a, b) = (&inner.num, &inner.den);
        let n = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let homog = |p: &UniPoly<F>| {
            let mut acc = UniPoly::zero();
            let mut apow = UniPoly::one();
            let bpows: Vec<UniPoly<F>> = {
                let mut v = vec![UniPoly::one()];
                for _ in 0..n {
                    let last = v.last().unwrap();
                    v.push(last * b);
                }
                v
            };
            for i in 0..=n {
                let c = p.coeff(i);
                if !c.is_zero() {
                    acc += &(&apow * &bpows[n - i]).scale(&c);
                }
                apow = &apow * a;
            }
            acc
        };
        Self::new(homog(&self.num), homog(&self.den)).expect("composition hit a pole")
    }

    /// Map the coefficients through a field homomorphism.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFn<G> {
        RatFn::reduce(self.num.map(&f), self.den.map(&f))
    }
}

impl<F: Field> Zero for RatFn<F> {
    fn zero() -> Self {
        RatFn { num: UniPoly::zero(), den: UniPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFn<F> {
    fn one() -> Self {
        RatFn { num: UniPoly::one(), den: UniPoly::one() }
    }
}

impl<'a, F: Field> Add<&'a RatFn<F>> for &'a RatFn<F> {
    type Output = RatFn<F>;
    fn add(self, o: &RatFn<F>) -> RatFn<F> {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFn::reduce(&self.num + &o.num, self.den.clone());
        }
        if self.is_polynomial() && o.is_polynomial() {
            return RatFn::from_poly(&self.num + &o.num);
        }
        let g = self.den.gcd(&o.den);
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = o.den.exact_div(&g).unwrap();
        let n = &(&self.num * &d2) + &(&o.num * &d1);
        RatFn::reduce(n, &(&d1 * &d2) * &g)
    }
}

impl<'a, F: Field> Mul<&'a RatFn<F>> for &'a RatFn<F> {
    type Output = RatFn<F>;
    fn mul(self, o: &RatFn<F>) -> RatFn<F> {
        if self.is_zero() || o.is_zero() {
            return RatFn::zero();
        }
        if let Some(c) = self.as_constant() {
            return RatFn { num: o.num.scale(&c), den: o.den.clone() };
        }
        if let Some(c) = o.as_constant() {
            return RatFn { num: self.num.scale(&c), den: self.den.clone() };
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = o.den.exact_div(&g1).unwrap();
        let n2 = o.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFn::normalize_lead(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a, F: Field> Sub<&'a RatFn<F>> for &'a RatFn<F> {
    type Output = RatFn<F>;
    fn sub(self, o: &RatFn<F>) -> RatFn<F> {
        self + &(-o.clone())
    }
}

impl<'a, F: Field> Div<&'a RatFn<F>> for &'a RatFn<F> {
    type Output = RatFn<F>;
    fn div(self, o: &RatFn<F>) -> RatFn<F> {
        let inv = RatFn::normalize_lead(o.den.clone(), o.num.clone());
        self * &inv
    }
}

impl<F: Field> Add for RatFn<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}
impl<F: Field> Sub for RatFn<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}
impl<F: Field> Mul for RatFn<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}
impl<F: Field> Div for RatFn<F> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        assert!(!o.is_zero(), "division by zero rational function");
        &self / &o
    }
}
impl<F: Field> Neg for RatFn<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFn { num: -self.num, den: self.den }
    }
}

impl<F: Field> Ring for RatFn<F> {
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
}

impl<F: Field> Field for RatFn<F> {}

impl RatFn<BigRational> {
    pub fn pretty(&self, var: &str) -> String {
        let n = self.num.pretty(var);
        if self.is_polynomial() {
            return n;
        }
        let wrap = |s: String, p: &UniPoly<BigRational>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(self.den.pretty(var), &self.den))
    }
}

impl fmt::Display for RatFn<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qf;
    use proptest::prelude::*;

    type R = RatFn<BigRational>;
    type P = UniPoly<BigRational>;

    fn r(n: &[i64], d: &[i64]) -> R {
        R::new(P::from_ints(n), P::from_ints(d)).unwrap()
    }

    #[test]
    fn reduced_with_monic_den() {
        let a = r(&[-2, 2], &[-3, 0, 3]); // 2(x-1)/(3(x^2-1))
        assert_eq!(a.den(), &P::from_ints(&[1, 1]));
        assert_eq!(a.num(), &P::new(vec![qf(2, 3)]));
        assert!(R::new(P::one(), P::zero()).is_err());
    }

    #[test]
    fn compose_and_derivative() {
        let f = r(&[0, 1], &[1, -1]); // x/(1-x)
        let g = r(&[0, 1], &[1, 1]); // x/(1+x)
        assert_eq!(f.compose(&g), R::var());
        assert_eq!(f.derivative(), r(&[1], &[1, -2, 1]));
    }

    fn arb() -> impl Strategy<Value = R> {
        (prop::collection::vec(-6i64..6, 0..4), prop::collection::vec(-6i64..6, 1..4)).prop_filter_map(
            "nonzero den",
            |(n, d)| R::new(P::from_ints(&n), P::from_ints(&d)).ok(),
        )
    }

    proptest! {
        #[test]
        fn field_laws(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a);
            }
        }
    }
}
