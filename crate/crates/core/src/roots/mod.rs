//! Exact real roots: Sturm chains, isolation, refinement and interlacing.

mod interlace;
mod scan;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{q, rational_to_decimal, rational_to_string};
use crate::QPoly;

pub use interlace::{interlaces, interlacing_verdicts, InterlaceVerdict};
pub use scan::{
    conjecture_scan, largeg_limits, largeg_root_table, LargeGRow, PairReport, ScanChecks, ScanEntry, ScanReport,
};

/// Sturm sequence of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    pub polys: Vec<QPoly>,
}

fn normalize_positive(p: QPoly) -> QPoly {
    match p.lead() {
        Some(l) => {
            let s = BigRational::one() / l.abs();
            p.scale(&s)
        }
        None => p,
    }
}

fn sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

impl SturmChain {
    pub fn new(p: &QPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p0 = normalize_positive(p.squarefree_part());
        let mut polys = vec![p0.clone()];
        let mut a = p0.clone();
        let mut b = normalize_positive(p0.derivative());
        while !b.is_zero() {
            polys.push(b.clone());
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = normalize_positive(-r);
        }
        Ok(SturmChain { polys })
    }

    pub fn base(&self) -> &QPoly {
        &self.polys[0]
    }

    /// Sign variations at `x`, zeros dropped.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.polys.iter().map(|p| sign(&p.eval(x))))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.polys.iter().map(|p| {
            let s = sign(p.lead().expect("nonzero"));
            let d = p.degree().unwrap_or(0);
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Interval `(low, high]` holding one distinct root, or the exact root when `low == high`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBox {
    pub low: BigRational,
    pub high: BigRational,
    pub multiplicity: usize,
}

impl RootBox {
    pub fn is_exact(&self) -> bool {
        self.low == self.high
    }

    pub fn width(&self) -> BigRational {
        &self.high - &self.low
    }

    /// Whether the root isolated by this box is a root of `f`.
    pub fn holds_root_of(&self, f: &QPoly) -> bool {
        if f.degree().unwrap_or(0) == 0 {
            return false;
        }
        if self.is_exact() {
            return f.eval(&self.low).is_zero();
        }
        // a non-exact box may end at a peeled root, which belongs to its own box
        let at_high = usize::from(f.eval(&self.high).is_zero());
        SturmChain::new(f).map(|c| c.count(&self.low, &self.high) > at_high).unwrap_or(false)
    }
}

impl Serialize for RootBox {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RootBox", 3)?;
        st.serialize_field("low", &rational_to_string(&self.low))?;
        st.serialize_field("high", &rational_to_string(&self.high))?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// All complex roots are real.
pub fn is_real_rooted(p: &QPoly) -> Result<bool> {
    let chain = SturmChain::new(p)?;
    Ok(chain.count_all() == chain.base().degree().unwrap_or(0))
}

fn cauchy_power_of_two(p: &QPoly) -> BigRational {
    let lead = p.lead().expect("nonzero").abs();
    let mut m = BigRational::zero();
    for c in p.coeffs() {
        let r = c.abs() / &lead;
        if r > m {
            m = r;
        }
    }
    let bound = m + BigRational::one();
    let mut b = BigRational::one();
    while b < bound {
        b = b * q(2);
    }
    b
}

fn mid(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / q(2)
}

fn bisect(chain: &SturmChain, a: BigRational, b: BigRational, n: usize, out: &mut Vec<(BigRational, BigRational)>) {
    if n == 0 {
        return;
    }
    if n == 1 && &b - &a <= BigRational::one() {
        if chain.base().eval(&b).is_zero() {
            out.push((b.clone(), b));
        } else {
            out.push((a, b));
        }
        return;
    }
    let m = mid(&a, &b);
    let left = chain.count(&a, &m);
    bisect(chain, a, m.clone(), left, out);
    bisect(chain, m, b, n - left, out);
}

/// Disjoint isolating boxes for the real roots, ascending, with multiplicities.
pub fn isolate_real_roots(p: &QPoly) -> Result<Vec<RootBox>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut s = p.squarefree_part().monic();
    let mut raw: Vec<(BigRational, BigRational)> = Vec::new();
    for r in [q(0), q(-1)] {
        if s.degree().unwrap_or(0) > 0 && s.eval(&r).is_zero() {
            raw.push((r.clone(), r.clone()));
            let lin = QPoly::new(vec![-r, q(1)]);
            s = s.exact_div(&lin).expect("root divides");
        }
    }
    if s.degree().unwrap_or(0) > 0 {
        let chain = SturmChain::new(&s)?;
        let b = cauchy_power_of_two(&s);
        let cuts = [-b.clone(), q(-1), q(0), b];
        for w in cuts.windows(2) {
            let n = chain.count(&w[0], &w[1]);
            bisect(&chain, w[0].clone(), w[1].clone(), n, &mut raw);
        }
    }
    raw.sort_by(|x, y| match x.0.cmp(&y.0) {
        Ordering::Equal => x.1.cmp(&y.1),
        o => o,
    });
    let factors = p.squarefree_decomposition();
    let boxes = raw
        .into_iter()
        .map(|(low, high)| {
            let mut bx = RootBox { low, high, multiplicity: 0 };
            bx.multiplicity = factors.iter().position(|f| bx.holds_root_of(f)).map_or(0, |i| i + 1);
            bx
        })
        .collect();
    Ok(boxes)
}

fn pow10(digits: usize) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(10), digits))
}

/// Bisect `(a, b]` around its single root until `done` accepts the interval.
/// Returns the final interval, or a degenerate one at an exact root.
fn narrow(
    chain: &SturmChain,
    mut a: BigRational,
    mut b: BigRational,
    done: impl Fn(&BigRational, &BigRational) -> bool,
) -> Result<(BigRational, BigRational)> {
    let base = chain.base();
    // a right endpoint that is a root belongs to a neighbouring exact box
    let mut excluded = base.eval(&b).is_zero();
    if a >= b || chain.count(&a, &b) != 1 + usize::from(excluded) {
        return Err(Error::BoxNotIsolating);
    }
    loop {
        if !excluded && base.eval(&b).is_zero() {
            return Ok((b.clone(), b));
        }
        if done(&a, &b) {
            return Ok((a, b));
        }
        let m = mid(&a, &b);
        if chain.count(&a, &m) == 1 {
            b = m;
            excluded = false;
        } else {
            a = m;
        }
    }
}

/// Exact roots print as integers or reduced decimals; others by bisection to `digits` places.
pub fn refine_root(p: &QPoly, bx: &RootBox, digits: usize) -> Result<String> {
    if bx.is_exact() {
        if !p.eval(&bx.low).is_zero() {
            return Err(Error::BoxNotIsolating);
        }
        return Ok(format_exact(&bx.low, digits));
    }
    let chain = SturmChain::new(p)?;
    let fine = BigRational::one() / (pow10(digits) * q(1000));
    let cap = BigRational::one() / pow10(digits + 40);
    let (a, b) = narrow(&chain, bx.low.clone(), bx.high.clone(), |a, b| {
        let w = b - a;
        w < fine && (w < cap || rational_to_decimal(a, digits) == rational_to_decimal(b, digits))
    })?;
    if a == b {
        return Ok(format_exact(&a, digits));
    }
    Ok(rational_to_decimal(&mid(&a, &b), digits))
}

/// Narrow a box until its width is below `eps`; exact boxes are returned unchanged.
pub fn shrink_box(p: &QPoly, bx: &RootBox, eps: &BigRational) -> Result<RootBox> {
    if bx.is_exact() {
        return Ok(bx.clone());
    }
    let chain = SturmChain::new(p)?;
    let (low, high) = narrow(&chain, bx.low.clone(), bx.high.clone(), |a, b| &(b - a) < eps)?;
    Ok(RootBox { low, high, multiplicity: bx.multiplicity })
}

fn format_exact(x: &BigRational, digits: usize) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        rational_to_decimal(x, digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qf;
    use proptest::prelude::*;

    #[test]
    fn real_rootedness() {
        assert!(!is_real_rooted(&QPoly::from_ints(&[1, 0, 1])).unwrap());
        assert!(is_real_rooted(&QPoly::from_ints(&[0, 1, 1])).unwrap());
        assert!(is_real_rooted(&QPoly::from_ints(&[0, 50, 128, 50])).unwrap());
        assert!(is_real_rooted(&QPoly::from_ints(&[3])).unwrap());
        assert_eq!(is_real_rooted(&QPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn isolation_examples() {
        let b = isolate_real_roots(&QPoly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b[0].low >= q(-2) && b[0].high <= q(-1));
        assert!(b[1].low >= q(1) && b[1].high <= q(2));
        let b = isolate_real_roots(&QPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(b, vec![RootBox { low: q(0), high: q(0), multiplicity: 2 }]);
        let b = isolate_real_roots(&QPoly::from_ints(&[0, 1, 3, 1])).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b[2].is_exact() && b[2].low.is_zero());
        assert!(b[0].low >= q(-4) && b[0].high < q(-2) && b[1].low >= q(-1) && b[1].high <= q(0));
    }

    #[test]
    fn multiplicities_and_exact_midpoints() {
        // (t - 1/2)^3 (t + 1)^2 t (t - 3)
        let mut p = QPoly::from_ints(&[1]);
        let f = |c: BigRational| QPoly::new(vec![-c, q(1)]);
        for _ in 0..3 {
            p = &p * &f(qf(1, 2));
        }
        p = &(&p * &f(q(-1))) * &f(q(-1));
        p = &(&p * &f(q(0))) * &f(q(3));
        let b = isolate_real_roots(&p).unwrap();
        let mults: Vec<usize> = b.iter().map(|x| x.multiplicity).collect();
        assert_eq!(mults, vec![2, 1, 3, 1]);
        assert_eq!(refine_root(&p, &b[2], 5).unwrap(), "0.50000");
        assert_eq!(refine_root(&p, &b[0], 5).unwrap(), "-1");
    }

    #[test]
    fn refine_sqrt2() {
        let p = QPoly::from_ints(&[-2, 0, 1]);
        let b = isolate_real_roots(&p).unwrap();
        assert_eq!(refine_root(&p, &b[1], 9).unwrap(), "1.414213562");
        assert_eq!(refine_root(&p, &b[0], 9).unwrap(), "-1.414213562");
        let bad = RootBox { low: q(-2), high: q(2), multiplicity: 1 };
        assert_eq!(refine_root(&p, &bad, 3), Err(Error::BoxNotIsolating));
    }

    proptest! {
        #[test]
        fn product_of_linear_factors(roots in proptest::collection::vec(-20i64..20, 1..7), den in 1i64..5, c in 1i64..9) {
            let mut p = QPoly::from_ints(&[c]);
            for &r in &roots {
                p = &p * &QPoly::new(vec![-qf(r, den), q(1)]);
            }
            prop_assert!(is_real_rooted(&p).unwrap());
            prop_assert!(is_real_rooted(&p.scale(&qf(-3, 7))).unwrap());
            let boxes = isolate_real_roots(&p).unwrap();
            let total: usize = boxes.iter().map(|b| b.multiplicity).sum();
            prop_assert_eq!(total, roots.len());
            let mut sorted: Vec<BigRational> = roots.iter().map(|&r| qf(r, den)).collect();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(boxes.len(), sorted.len());
            for (b, r) in boxes.iter().zip(&sorted) {
                prop_assert!(&b.low <= r && r <= &b.high);
            }
        }

        #[test]
        fn quadratic_with_complex_roots(a in 1i64..10, b in -5i64..5) {
            // (t - b)^2 + a has no real roots
            let p = QPoly::from_ints(&[b * b + a, -2 * b, 1]);
            prop_assert!(!is_real_rooted(&p).unwrap());
            prop_assert!(isolate_real_roots(&p).unwrap().is_empty());
        }
    }
}
