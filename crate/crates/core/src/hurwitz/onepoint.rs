//! One-part recursion, the genus-one relation and Narayana polynomials.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;

use crate::scalar::{q, qf};
use crate::QPoly;

use super::monotone_h;

/// `H_g(d)` from the three-term one-part recursion.
pub fn one_point_h(g: u32, d: usize) -> QPoly {
    let mut rows: Vec<Vec<QPoly>> = Vec::with_capacity(g as usize + 1);
    for gg in 0..=g as usize {
        let mut row = vec![QPoly::zero(); d.max(2) + 1];
        if gg == 0 {
            row[1] = QPoly::from_ints(&[1]);
        }
        row[2] = QPoly::new(vec![q(0), qf(1, 2)]);
        for k in 3..=d {
            let kk = k as i64;
            let tp1 = QPoly::from_ints(&[1, 1]);
            let tm1sq = QPoly::from_ints(&[1, -2, 1]);
            let mut acc = (&row[k - 1] * &tp1).scale(&q((kk - 1) * (2 * kk - 3)));
            acc = &acc - &(&row[k - 2] * &tm1sq).scale(&q((kk - 2) * (kk - 3)));
            if gg > 0 {
                acc += &rows[gg - 1][k].scale(&q(kk * kk * (kk - 1) * (kk - 1)));
            }
            row[k] = acc.scale(&qf(1, kk * kk));
        }
        rows.push(row);
    }
    rows[g as usize][d].clone()
}

/// Checks the genus-one relation between `H_1(d)`, `H_1(d-1)` and `H_1(d-2)`.
pub fn genus1_relation_holds(d: usize) -> bool {
    if d < 3 {
        return false;
    }
    let dd = d as i64;
    let lhs = monotone_h(1, &[d]).scale(&q(dd * (dd - 2)));
    let a = (&monotone_h(1, &[d - 1]) * &QPoly::from_ints(&[1, 1])).scale(&q((dd - 1) * (2 * dd - 1)));
    let b = (&monotone_h(1, &[d - 2]) * &QPoly::from_ints(&[1, -2, 1])).scale(&q((dd - 2) * (dd + 1)));
    lhs == &a - &b
}

/// `Nar_m(t) = sum_i (1/m) C(m,i) C(m,i-1) t^i`; `Nar_0 = 1`.
pub fn narayana(m: usize) -> QPoly {
    if m == 0 {
        return QPoly::from_ints(&[1]);
    }
    let mb = BigInt::from(m);
    let mut c = vec![BigRational::zero(); m + 1];
    for (i, ci) in c.iter_mut().enumerate().skip(1) {
        let v = binomial(mb.clone(), BigInt::from(i)) * binomial(mb.clone(), BigInt::from(i - 1));
        *ci = BigRational::new(v, mb.clone());
    }
    QPoly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_examples() {
        assert_eq!(one_point_h(1, 3), QPoly::new(vec![q(0), qf(5, 3), qf(5, 3)]));
        assert_eq!(one_point_h(1, 4), QPoly::new(vec![q(0), qf(15, 4), q(10), qf(15, 4)]));
        assert_eq!(one_point_h(0, 2), QPoly::new(vec![q(0), qf(1, 2)]));
        assert_eq!(one_point_h(3, 1), QPoly::zero());
    }

    #[test]
    fn one_point_agrees_with_cut_and_join() {
        for g in 0..=3 {
            for d in 1..=8 {
                assert_eq!(one_point_h(g, d), monotone_h(g, &[d]), "g={g} d={d}");
            }
        }
    }

    #[test]
    fn genus_one_relation() {
        for d in 3..=12 {
            assert!(genus1_relation_holds(d), "d={d}");
        }
    }

    #[test]
    fn narayana_matches_genus_zero_one_part() {
        assert_eq!(narayana(3), QPoly::from_ints(&[0, 1, 3, 1]));
        for m in 1..=10 {
            assert_eq!(monotone_h(0, &[m + 1]).scale(&q(m as i64 + 1)), narayana(m));
        }
    }
}
