//! Dense univariate polynomials with ascending coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, rational_to_string, Field, Ring};

/// Polynomial `c[0] + c[1] x + ...` with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        UniPoly { coeffs: v }
    }

    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate in any ring that the coefficients map into.
    pub fn eval_with<R: Ring>(&self, x: &R, embed: impl Fn(&C) -> R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::from_i64(i as i64))
                .collect(),
        )
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    /// Keep only the terms of degree below `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }
}

impl<C: Field> UniPoly<C> {
    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lead().unwrap().inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![C::zero(); r.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = r[i + dd].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
            }
            quo[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(quo), Self::new(r)))
    }

    /// Quotient when `d` divides `self`, otherwise `None`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).unwrap();
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return if self.is_zero() { Self::zero() } else { Self::one() };
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).unwrap().monic()
    }

    /// Yun's algorithm: `self = lc * prod_i f_i^i` with pairwise coprime
    /// square-free monic `f_i`. Entry `i - 1` of the result is `f_i`.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = df.exact_div(&a0).unwrap();
        let mut d = &c - &b.derivative();
        loop {
            let a = b.gcd(&d);
            out.push(a.clone());
            b = b.exact_div(&a).unwrap();
            if b.degree() == Some(0) {
                break;
            }
            c = d.exact_div(&a).unwrap();
            d = &c - &b.derivative();
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        out
    }
}

impl<C: Ring> Zero for UniPoly<C> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for UniPoly<C> {
    fn one() -> Self {
        UniPoly { coeffs: vec![C::one()] }
    }
}

impl<'a, C: Ring> Add<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, o: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a, C: Ring> Sub<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, o: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a, C: Ring> Mul<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, o: &UniPoly<C>) -> UniPoly<C> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(v)
    }
}

impl<C: Ring> Add for UniPoly<C> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}

impl<C: Ring> Sub for UniPoly<C> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}

impl<C: Ring> Mul for UniPoly<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<C: Ring> AddAssign<&UniPoly<C>> for UniPoly<C> {
    fn add_assign(&mut self, o: &UniPoly<C>) {
        if self.coeffs.len() < o.coeffs.len() {
            self.coeffs.resize(o.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a = a.clone() + b.clone();
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<C: Ring> Neg for UniPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        UniPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Ring> Ring for UniPoly<C> {
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
}

impl UniPoly<BigRational> {
    /// Coefficients as `"p/q"` strings, ascending.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_to_string).collect()
    }

    pub fn from_coeff_strings<S: AsRef<str>>(v: &[S]) -> Result<Self> {
        let c = v.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>>>()?;
        let p = Self::new(c.clone());
        if p.coeffs.len() != c.len() {
            return Err(Error::Parse("trailing zero coefficient".into()));
        }
        Ok(p)
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&n| crate::scalar::q(n)).collect())
    }

    /// Human-readable form with descending powers, e.g. `5t^2+5t` or `t^3+5t^2/2+t`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            let (n, d) = (a.numer(), a.denom());
            let pw = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&n.to_string());
            } else if !n.is_one() {
                out.push_str(&n.to_string());
                out.push_str(&pw);
            } else {
                out.push_str(&pw);
            }
            if !d.is_one() {
                out.push('/');
                out.push_str(&d.to_string());
            }
        }
        out
    }

    /// Inverse of [`UniPoly::pretty`].
    pub fn parse_pretty(s: &str, var: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid polynomial '{s}'"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = Self::zero();
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b.to_string()),
                None => (1, term.trim_start_matches('+').to_string()),
            };
            let (main, den) = match body.split_once('/') {
                Some((m, d)) => (m.to_string(), d.parse::<num_bigint::BigInt>().map_err(|_| bad())?),
                None => (body.clone(), num_bigint::BigInt::from(1)),
            };
            let (num, k) = match main.find(var) {
                None => (main.clone(), 0usize),
                Some(p) => {
                    let num = if p == 0 { "1".to_string() } else { main[..p].to_string() };
                    let rest = &main[p + var.len()..];
                    let k = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                    };
                    (num, k)
                }
            };
            let n: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            let c = BigRational::new(n * sign, den);
            acc = &acc + &Self::monomial(c, k);
        }
        Ok(acc)
    }
}

impl fmt::Display for UniPoly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};
    use proptest::prelude::*;

    type P = UniPoly<BigRational>;

    fn p(v: &[i64]) -> P {
        P::from_ints(v)
    }

    #[test]
    fn gcd_is_monic_and_zero_case() {
        assert!(P::zero().gcd(&P::zero()).is_zero());
        let a = p(&[-2, 2]); // 2(x-1)
        let b = p(&[-3, 0, 3]); // 3(x-1)(x+1)
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(P::zero().gcd(&a), p(&[-1, 1]));
    }

    #[test]
    fn yun() {
        // (x-1)^3 (x+2) x^2 times 5
        let f = p(&[-1, 1]).pow(3) * p(&[2, 1]) * p(&[0, 0, 5]);
        let d = f.squarefree_decomposition();
        assert_eq!(d.len(), 3);
        assert_eq!(d[0], p(&[2, 1]));
        assert_eq!(d[1], p(&[0, 1]));
        assert_eq!(d[2], p(&[-1, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 1]) * p(&[2, 1]) * p(&[0, 1]));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[0, 5, 5]).pretty("t"), "5t^2+5t");
        let h = P::new(vec![q(0), q(1), qf(5, 2), q(1)]);
        assert_eq!(h.pretty("t"), "t^3+5t^2/2+t");
        assert_eq!(P::new(vec![qf(-1, 3)]).pretty("t"), "-1/3");
        assert_eq!(P::new(vec![q(0), qf(1, 3)]).pretty("t"), "t/3");
        assert_eq!(p(&[1, -1]).pretty("t"), "-t+1");
        assert_eq!(P::zero().pretty("t"), "0");
    }

    #[test]
    fn coeff_strings_reject_trailing_zero() {
        assert!(P::from_coeff_strings(&["1", "0"]).is_err());
        assert_eq!(P::from_coeff_strings(&["0", "1/2"]).unwrap().to_coeff_strings(), ["0", "1/2"]);
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-20i64..20, 1i64..5), 0..7)
            .prop_map(|v| P::new(v.into_iter().map(|(n, d)| qf(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (qq, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&qq * &b) + &r, a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            let g = a.gcd(&b);
            if !g.is_zero() {
                prop_assert!(a.exact_div(&g).is_some());
                prop_assert!(b.exact_div(&g).is_some());
                prop_assert!(g.lead().unwrap().is_one());
            }
        }

        #[test]
        fn pretty_round_trip(a in arb_poly()) {
            prop_assert_eq!(P::parse_pretty(&a.pretty("t"), "t").unwrap(), a);
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
