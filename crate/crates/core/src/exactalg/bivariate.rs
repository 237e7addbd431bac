//! Bivariate polynomials and rational functions in `M` and `N`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

use super::poly::UniPoly;
use super::ratfn::RatFn;

type Q = BigRational;
type QPoly = UniPoly<Q>;

/// Sparse polynomial in `M`, `N`; keys are `(deg_M, deg_N)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Q>,
}

/// Graded lexicographic key with `M > N`.
fn grlex(k: &(u32, u32)) -> (u32, u32) {
    (k.0 + k.1, k.0)
}

impl BiPoly {
    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), Q)>) -> Self {
        let mut p = BiPoly::default();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, k: (u32, u32), c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn m() -> Self {
        Self::from_terms([((1, 0), Q::one())])
    }

    pub fn n() -> Self {
        Self::from_terms([((0, 1), Q::one())])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    pub fn deg_m(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn deg_n(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Leading term under graded lex order with `M > N`.
    pub fn leading(&self) -> Option<((u32, u32), &Q)> {
        self.terms.iter().max_by_key(|(k, _)| grlex(k)).map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        BiPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn eval(&self, m: &Q, n: &Q) -> Q {
        let mut acc = Q::zero();
        for ((i, j), c) in &self.terms {
            acc += c * num_traits::pow(m.clone(), *i as usize) * num_traits::pow(n.clone(), *j as usize);
        }
        acc
    }

    /// Coefficients of successive powers of `M`, each a polynomial in `N`.
    pub fn to_recursive(&self) -> UniPoly<QPoly> {
        let dm = match self.deg_m() {
            None => return UniPoly::zero(),
            Some(d) => d as usize,
        };
        let mut rows: Vec<Vec<Q>> = vec![Vec::new(); dm + 1];
        for ((i, j), c) in &self.terms {
            let r = &mut rows[*i as usize];
            if r.len() <= *j as usize {
                r.resize(*j as usize + 1, Q::zero());
            }
            r[*j as usize] = c.clone();
        }
        UniPoly::new(rows.into_iter().map(QPoly::new).collect())
    }

    pub fn from_recursive(p: &UniPoly<QPoly>) -> Self {
        let mut out = BiPoly::default();
        for (i, row) in p.coeffs().iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                out.add_term((i as u32, j as u32), c.clone());
            }
        }
        out
    }

    /// Polynomial in `N` alone, if `M` does not occur.
    pub fn as_n_poly(&self) -> Option<QPoly> {
        match self.deg_m() {
            None => Some(QPoly::zero()),
            Some(0) => Some(self.to_recursive().coeff(0)),
            _ => None,
        }
    }

    pub fn from_n_poly(p: &QPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(j, c)| ((0, j as u32), c.clone())))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &BiPoly) -> Option<BiPoly> {
        let (lk, lc) = d.leading()?;
        let lc = lc.clone();
        let mut r = self.clone();
        let mut quo = BiPoly::default();
        while let Some((k, c)) = r.leading() {
            if k.0 < lk.0 || k.1 < lk.1 {
                return None;
            }
            let mk = (k.0 - lk.0, k.1 - lk.1);
            let mc = c / &lc;
            let t = BiPoly::from_terms([(mk, mc.clone())]);
            r = &r - &(&t * d);
            quo.add_term(mk, mc);
        }
        Some(quo)
    }

    /// Gcd of the `N`-polynomial coefficients (monic).
    fn content(p: &UniPoly<QPoly>) -> QPoly {
        p.coeffs().iter().fold(QPoly::zero(), |g, c| g.gcd(c))
    }

    /// Greatest common divisor, normalized so the leading coefficient is one.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let a = self.to_recursive();
        let b = other.to_recursive();
        let ca = Self::content(&a);
        let cb = Self::content(&b);
        let c = ca.gcd(&cb);
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Self::from_n_poly(&c).normalized();
        }
        let pa = a.map(|x| x.exact_div(&ca).unwrap());
        let pb = b.map(|x| x.exact_div(&cb).unwrap());
        // Euclid over Q(N)[M], then clear denominators and take the primitive part.
        let fa: UniPoly<RatFn<Q>> = pa.map(|x| RatFn::from_poly(x.clone()));
        let fb: UniPoly<RatFn<Q>> = pb.map(|x| RatFn::from_poly(x.clone()));
        let g = fa.gcd(&fb);
        let lcm = g.coeffs().iter().fold(QPoly::one(), |l, x| {
            let d = x.den();
            let gg = l.gcd(d);
            (&l * d).exact_div(&gg).unwrap()
        });
        let gp: UniPoly<QPoly> = g.map(|x| (x.num() * &lcm).exact_div(x.den()).unwrap());
        let cg = Self::content(&gp);
        let gp = gp.map(|x| x.exact_div(&cg).unwrap());
        let rec = gp.map(|x| x * &c);
        Self::from_recursive(&rec).normalized()
    }

    /// Scaled so the graded-lex leading coefficient is one.
    pub fn normalized(&self) -> BiPoly {
        match self.leading() {
            None => BiPoly::default(),
            Some((_, c)) => self.scale(&(Q::one() / c)),
        }
    }

    /// Canonical string such as `M^2N^2-2M^2-3MN+4` (graded lex, descending).
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse(grlex(k)));
        let mut out = String::new();
        for k in keys {
            let c = &self.terms[&k];
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            let mono = {
                let mut s = String::new();
                for (v, e) in [("M", k.0), ("N", k.1)] {
                    match e {
                        0 => {}
                        1 => s.push_str(v),
                        _ => s.push_str(&format!("{v}^{e}")),
                    }
                }
                s
            };
            if mono.is_empty() || !a.numer().is_one() {
                out.push_str(&a.numer().to_string());
            }
            out.push_str(&mono);
            if !a.denom().is_one() {
                out.push_str(&format!("/{}", a.denom()));
            }
        }
        out
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::constant(Q::one())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, -c.clone());
        }
        r
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut r = BiPoly::default();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                r.add_term((k1.0 + k2.0, k1.1 + k2.1), c1 * c2);
            }
        }
        r
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, o: BiPoly) -> BiPoly {
        &self + &o
    }
}
impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, o: BiPoly) -> BiPoly {
        &self - &o
    }
}
impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, o: BiPoly) -> BiPoly {
        &self * &o
    }
}
impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Q::one())
    }
}
impl Ring for BiPoly {
    fn from_i64(n: i64) -> Self {
        BiPoly::constant(crate::scalar::q(n))
    }
}

/// Reduced quotient of bivariate polynomials; the denominator has
/// graded-lex leading coefficient one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MNRational {
    num: BiPoly,
    den: BiPoly,
}

impl MNRational {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.leading().map(|(k, _)| k) == Some((0, 0)) {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let l = Q::one() / den.leading().unwrap().1;
        MNRational { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self::reduce(p, BiPoly::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn m() -> Self {
        Self::from_poly(BiPoly::m())
    }

    pub fn n() -> Self {
        Self::from_poly(BiPoly::n())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    /// `None` at a pole.
    pub fn eval(&self, m: &Q, n: &Q) -> Option<Q> {
        let d = self.den.eval(m, n);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(m, n) / d)
        }
    }

    pub fn pretty(&self) -> String {
        let n = self.num.pretty();
        if self.den.is_one() {
            return n;
        }
        let wrap = |s: String, p: &BiPoly| if p.len() > 1 { format!("({s})") } else { s };
        format!("{}/{}", wrap(n, &self.num), wrap(self.den.pretty(), &self.den))
    }
}

impl Zero for MNRational {
    fn zero() -> Self {
        MNRational { num: BiPoly::zero(), den: BiPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for MNRational {
    fn one() -> Self {
        MNRational { num: BiPoly::one(), den: BiPoly::one() }
    }
}

impl<'a> Add<&'a MNRational> for &'a MNRational {
    type Output = MNRational;
    fn add(self, o: &MNRational) -> MNRational {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return MNRational::reduce(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = o.den.exact_div(&g).unwrap();
        MNRational::reduce(&(&self.num * &d2) + &(&o.num * &d1), &(&d1 * &d2) * &g)
    }
}

impl<'a> Mul<&'a MNRational> for &'a MNRational {
    type Output = MNRational;
    fn mul(self, o: &MNRational) -> MNRational {
        if self.is_zero() || o.is_zero() {
            return MNRational::zero();
        }
        MNRational::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a MNRational> for &'a MNRational {
    type Output = MNRational;
    fn sub(self, o: &MNRational) -> MNRational {
        self + &(-o.clone())
    }
}

impl<'a> Div<&'a MNRational> for &'a MNRational {
    type Output = MNRational;
    fn div(self, o: &MNRational) -> MNRational {
        assert!(!o.is_zero(), "division by zero");
        MNRational::reduce(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Add for MNRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}
impl Sub for MNRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}
impl Mul for MNRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}
impl Div for MNRational {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        &self / &o
    }
}
impl Neg for MNRational {
    type Output = Self;
    fn neg(self) -> Self {
        MNRational { num: -self.num, den: self.den }
    }
}
impl Ring for MNRational {
    fn from_i64(n: i64) -> Self {
        Self::constant(crate::scalar::q(n))
    }
}
impl Field for MNRational {}

impl fmt::Display for MNRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use proptest::prelude::*;

    fn bp(t: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(t.iter().map(|(k, c)| (*k, q(*c))))
    }

    #[test]
    fn gcd_of_products() {
        let a = bp(&[((1, 0), 1), ((0, 1), -1)]); // M - N
        let b = bp(&[((1, 1), 1), ((0, 0), -2)]); // MN - 2
        let c = bp(&[((0, 2), 1), ((0, 0), -1)]); // N^2 - 1
        let x = &(&a * &b) * &c;
        let y = &(&a * &c) * &bp(&[((1, 0), 2), ((0, 1), -1)]);
        assert_eq!(x.gcd(&y), (&a * &c).normalized());
        assert!(x.exact_div(&b).is_some());
        assert!(x.exact_div(&bp(&[((1, 0), 1), ((0, 0), 1)])).is_none());
    }

    #[test]
    fn printing_matches_table_style() {
        let p = bp(&[((2, 2), 1), ((2, 0), -2), ((1, 1), -3), ((0, 0), 4)]);
        assert_eq!(p.pretty(), "M^2N^2-2M^2-3MN+4");
        let r = MNRational::new(bp(&[((1, 0), 1)]), bp(&[((0, 1), 1)])).unwrap();
        assert_eq!(r.pretty(), "M/N");
    }

    #[test]
    fn reduction_cancels() {
        let a = bp(&[((1, 0), 1), ((0, 1), -1)]);
        let b = bp(&[((0, 2), 2), ((0, 0), -2)]);
        let r = MNRational::new(&a * &b, &a * &bp(&[((0, 1), 3)])).unwrap();
        assert_eq!(r.den(), &bp(&[((0, 1), 1)]));
    }

    fn arb() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -4i64..4), 0..5)
            .prop_map(|v| BiPoly::from_terms(v.into_iter().map(|(k, c)| (k, q(c)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn gcd_divides(a in arb(), b in arb(), c in arb()) {
            let x = &a * &c;
            let y = &b * &c;
            let g = x.gcd(&y);
            if !g.is_zero() {
                prop_assert!(x.exact_div(&g).is_some());
                prop_assert!(y.exact_div(&g).is_some());
                if !c.is_zero() {
                    prop_assert!(g.exact_div(&c.normalized()).is_some());
                }
            }
        }

        #[test]
        fn field_ops_consistent_with_eval(a in arb(), b in arb(), c in arb(), m in -5i64..5, n in 7i64..11) {
            prop_assume!(!b.is_zero() && !b.eval(&q(m), &q(n)).is_zero());
            let r = MNRational::new(a.clone(), b.clone()).unwrap();
            let s = MNRational::from_poly(c.clone());
            let sum = &r + &s;
            let prod = &r * &s;
            let (mm, nn) = (q(m), q(n));
            let rv = a.eval(&mm, &nn) / b.eval(&mm, &nn);
            prop_assert_eq!(sum.eval(&mm, &nn).unwrap(), &rv + c.eval(&mm, &nn));
            prop_assert_eq!(prod.eval(&mm, &nn).unwrap(), rv * c.eval(&mm, &nn));
        }
    }
}
