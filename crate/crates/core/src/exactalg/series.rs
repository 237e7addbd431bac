//! Truncated power series and Laurent series.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

use super::poly::UniPoly;
use super::ratfn::RatFn;

/// Precision marker for series that are exact (finite sums).
pub const EXACT: i32 = i32::MAX / 4;

/// Power series known modulo `x^order`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// Series with the given coefficients, padded or cut to `order` terms.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order, C::zero());
        TruncSeries { coeffs }
    }

    pub fn from_poly(p: &UniPoly<C>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn to_poly(&self) -> UniPoly<C> {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::new((0..n).map(|i| self.coeffs[i].clone() + o.coeffs[i].clone()).collect(), n)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::new((0..n).map(|i| self.coeffs[i].clone() - o.coeffs[i].clone()).collect(), n)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(), self.order())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut v = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v, n)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::new(vec![C::one()], self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let n = self.order().saturating_sub(1);
        Self::new(
            (1..self.order()).map(|i| self.coeffs[i].clone() * C::from_i64(i as i64)).collect(),
            n,
        )
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::Invalid("inner series must vanish at 0".into()));
        }
        let n = self.order().min(inner.order());
        let mut acc = Self::new(vec![], n);
        for c in self.coeffs.iter().take(n).rev() {
            acc = acc.mul(inner).add(&Self::new(vec![c.clone()], n));
        }
        Ok(acc)
    }
}

impl<C: Field> TruncSeries<C> {
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeff(0).inv().ok_or(Error::DivisionByZero)?;
        let n = self.order();
        let mut v: Vec<C> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = if k == 0 { C::one() } else { C::zero() };
            for j in 1..=k {
                acc = acc - self.coeffs[j].clone() * v[k - j].clone();
            }
            v.push(acc * c0.clone());
        }
        Ok(Self::new(v, n))
    }

    /// Compositional inverse `g` with `self(g(x)) = x`, via Lagrange inversion.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::Invalid("series must vanish at 0".into()));
        }
        let a1 = self.coeff(1);
        if a1.inv().is_none() {
            return Err(Error::NonUnitLinearTerm);
        }
        let n = self.order();
        if n <= 1 {
            return Ok(Self::new(vec![], n));
        }
        // h = (f(x)/x)^{-1}; [x^k] g = [x^{k-1}] h^k / k
        let q = Self::new(self.coeffs[1..].to_vec(), n - 1);
        let h = q.inverse()?;
        let mut out = vec![C::zero(); n];
        let mut hp = Self::new(vec![C::one()], n - 1);
        for (k, slot) in out.iter_mut().enumerate().skip(1) {
            hp = hp.mul(&h);
            *slot = hp.coeff(k - 1) / C::from_i64(k as i64);
        }
        Ok(Self::new(out, n))
    }
}

/// Laurent series `sum c_i x^(val+i)` known for exponents below `prec`.
/// Coefficients past the end of `coeffs` (but below `prec`) are zero.
#[derive(Clone, PartialEq, Debug)]
pub struct Laurent<C> {
    pub val: i32,
    pub coeffs: Vec<C>,
    pub prec: i32,
}

impl<C: Ring> Laurent<C> {
    pub fn new(val: i32, mut coeffs: Vec<C>, prec: i32) -> Self {
        let len = (prec - val).max(0) as usize;
        coeffs.truncate(len);
        Laurent { val, coeffs, prec }
    }

    /// The exact constant one.
    pub fn one_exact() -> Self {
        Laurent { val: 0, coeffs: vec![C::one()], prec: EXACT }
    }

    /// `c x^k`, exact (known to precision `prec`).
    pub fn monomial(c: C, k: i32, prec: i32) -> Self {
        Self::new(k, vec![c], prec)
    }

    pub fn zero_to(prec: i32) -> Self {
        Laurent { val: prec, coeffs: vec![], prec }
    }

    /// Coefficient of `x^k`; panics if `k` is beyond the known precision.
    pub fn coeff(&self, k: i32) -> C {
        assert!(k < self.prec, "coefficient {k} beyond precision {}", self.prec);
        if k < self.val {
            C::zero()
        } else {
            self.coeffs.get((k - self.val) as usize).cloned().unwrap_or_else(C::zero)
        }
    }

    /// Drop leading zero coefficients so `val` is the true valuation.
    pub fn normalize(mut self) -> Self {
        let z = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..z);
        self.val += z as i32;
        self
    }

    pub fn truncate(&self, prec: i32) -> Self {
        let prec = prec.min(self.prec);
        let keep = (prec - self.val).max(0) as usize;
        Laurent { val: self.val.min(prec), coeffs: self.coeffs.iter().take(keep).cloned().collect(), prec }
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let val = self.val.min(o.val).min(prec);
        let end = (self.val + self.coeffs.len() as i32).max(o.val + o.coeffs.len() as i32).min(prec);
        let v = (val..end)
            .map(|k| {
                let a = if k >= self.val { self.coeff(k) } else { C::zero() };
                let b = if k >= o.val { o.coeff(k) } else { C::zero() };
                a + b
            })
            .collect();
        Laurent { val, coeffs: v, prec }
    }

    pub fn neg(&self) -> Self {
        Laurent { val: self.val, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(), prec: self.prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        Laurent { val: self.val, coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(), prec: self.prec }
    }

    /// Product of a series in another ring acting on this one.
    pub fn mul_with<S: Ring>(&self, o: &Laurent<S>, f: impl Fn(&S, &C) -> C) -> Self {
        let val = self.val + o.val;
        let prec = (self.prec + o.val).min(o.prec + self.val);
        let n = ((prec - val).max(0) as usize).min((self.coeffs.len() + o.coeffs.len()).saturating_sub(1));
        let mut v = vec![C::zero(); n];
        for (i, b) in o.coeffs.iter().enumerate().take(n) {
            if b.is_zero() {
                continue;
            }
            for (j, a) in self.coeffs.iter().enumerate().take(n - i) {
                if a.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].clone() + f(b, a);
            }
        }
        Laurent { val, coeffs: v, prec }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_with(o, |b, a| a.clone() * b.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Laurent::one_exact();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<C: Field> Laurent<C> {
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_to(EXACT)
    }

    /// Inverse known at most below exponent `prec`.
    pub fn inverse_to(&self, prec: i32) -> Result<Self> {
        let s = self.clone().normalize();
        if s.coeffs.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let len = (s.prec - s.val).min(prec + s.val);
        assert!(len < EXACT / 2, "inverse of an exact series needs a precision bound");
        let len = len.max(0) as usize;
        let t = TruncSeries::new(s.coeffs, len).inverse()?;
        Ok(Laurent { val: -s.val, coeffs: t.coeffs, prec: -s.val + len as i32 })
    }
}

impl<F: Field> RatFn<F> {
    /// Laurent expansion of `self(a + x)` known below exponent `prec`.
    pub fn laurent_at(&self, a: &F, prec: i32) -> Laurent<F> {
        let shift = UniPoly::new(vec![a.clone(), F::one()]);
        let n = self.num().compose(&shift);
        let d = self.den().compose(&shift);
        let vn = n.valuation().unwrap_or(0) as i32;
        let vd = d.valuation().unwrap() as i32;
        let val = vn - vd;
        if n.is_zero() {
            return Laurent::zero_to(prec);
        }
        if prec <= val {
            return Laurent::new(prec, vec![], prec);
        }
        let len = (prec - val) as usize;
        let ns = TruncSeries::new(n.coeffs()[vn as usize..].to_vec(), len);
        let ds = TruncSeries::new(d.coeffs()[vd as usize..].to_vec(), len);
        let q = ns.mul(&ds.inverse().unwrap());
        Laurent { val, coeffs: q.coeffs, prec }
    }

    /// Taylor expansion at 0 to `order` terms; errors at a pole.
    pub fn taylor(&self, order: usize) -> Result<TruncSeries<F>> {
        if self.den().coeff(0).is_zero() {
            return Err(Error::ExpansionPointPole);
        }
        let ns = TruncSeries::from_poly(self.num(), order);
        let ds = TruncSeries::from_poly(self.den(), order);
        Ok(ns.mul(&ds.inverse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};
    use num_rational::BigRational;
    use proptest::prelude::*;

    type S = TruncSeries<BigRational>;

    #[test]
    fn catalan_reversion() {
        // z - z^2 reverts to the Catalan generating function
        let f = S::new(vec![q(0), q(1), q(-1)], 5);
        let g = f.reversion().unwrap();
        assert_eq!(g.coeffs(), &[q(0), q(1), q(1), q(2), q(5)]);
        assert_eq!(f.compose(&g).unwrap().coeffs(), &[q(0), q(1), q(0), q(0), q(0)]);
    }

    #[test]
    fn reversion_needs_unit() {
        let f = S::new(vec![q(0), q(0), q(1)], 4);
        assert_eq!(f.reversion(), Err(Error::NonUnitLinearTerm));
    }

    #[test]
    fn laurent_expansion() {
        // 1/(x(1-x)) at 0: x^-1 + 1 + x + ...
        let r = RatFn::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[0, 1, -1])).unwrap();
        let l = r.laurent_at(&q(0), 2);
        assert_eq!(l.val, -1);
        assert_eq!(l.coeffs, vec![q(1), q(1), q(1)]);
        // around x = 1: -1/eps + ...
        let l1 = r.laurent_at(&q(1), 1);
        assert_eq!(l1.coeff(-1), q(-1));
        assert_eq!(l1.coeff(0), q(1));
        let inv = l1.inverse().unwrap();
        assert_eq!(inv.val, 1);
        assert_eq!(inv.coeff(1), q(-1));
        let one = l1.mul(&inv);
        assert_eq!(one.coeff(0), q(1));
        assert_eq!(one.prec, 2);
    }

    proptest! {
        #[test]
        fn reversion_is_inverse(c in prop::collection::vec((-9i64..9, 1i64..4), 1..7), a1 in 1i64..5) {
            let mut v = vec![q(0), qf(a1, 1)];
            v.extend(c.into_iter().map(|(n, d)| qf(n, d)));
            let n = v.len();
            let f = S::new(v, n);
            let g = f.reversion().unwrap();
            let id = f.compose(&g).unwrap();
            for k in 0..n {
                prop_assert_eq!(id.coeff(k), if k == 1 { q(1) } else { q(0) });
            }
            let id2 = g.compose(&f).unwrap();
            prop_assert_eq!(id2.coeff(1), q(1));
        }

        #[test]
        fn inverse_times_self(c in prop::collection::vec(-9i64..9, 1..8), c0 in 1i64..5) {
            let mut v = vec![q(c0)];
            v.extend(c.into_iter().map(q));
            let n = v.len();
            let f = S::new(v, n);
            let p = f.mul(&f.inverse().unwrap());
            prop_assert_eq!(p.coeff(0), q(1));
            for k in 1..n { prop_assert!(p.coeff(k).is_zero()); }
        }
    }
}
