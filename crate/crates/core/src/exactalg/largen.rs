//! Large-`N` expansion after the substitution `M = N/(1-t)`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::bivariate::{BiPoly, MNRational};
use super::poly::UniPoly;
use super::ratfn::RatFn;
use super::series::TruncSeries;

type Q = BigRational;
type TFn = RatFn<Q>;

/// Rewrite `p(N/(1-t), N) * (1-t)^deg_M(p)` as coefficients of `N^e` in `Q[t]`.
fn substitute(p: &BiPoly) -> (Vec<UniPoly<Q>>, u32) {
    let dm = p.deg_m().unwrap_or(0);
    let one_minus_t = UniPoly::from_ints(&[1, -1]);
    let de = p.terms().map(|(k, _)| k.0 + k.1).max().unwrap_or(0) as usize;
    let mut out = vec![UniPoly::zero(); de + 1];
    for ((i, j), c) in p.terms() {
        let term = one_minus_t.pow(dm - i).scale(c);
        out[(i + j) as usize] += &term;
    }
    (out, dm)
}

/// Coefficients `c_0..c_order` of `N^0, N^-1, ...` in the expansion of `w`
/// with `M = N/(1-t)`.
pub fn large_n_expand(w: &MNRational, order: usize) -> Result<Vec<TFn>> {
    if w.is_zero() {
        return Ok(vec![TFn::zero(); order + 1]);
    }
    let (pn, dmn) = substitute(w.num());
    let (pd, dmd) = substitute(w.den());
    let top_n = pn.iter().rposition(|c| !c.is_zero()).unwrap();
    let top_d = pd.iter().rposition(|c| !c.is_zero()).unwrap();
    if top_n > top_d {
        return Err(Error::PoleAtInfinity);
    }
    let shift = top_d - top_n;
    let len = order + 1;
    // series in u = 1/N with coefficients in Q(t)
    let lift = |v: &[UniPoly<Q>], top: usize| {
        TruncSeries::new(
            (0..len).map(|k| if k <= top { TFn::from_poly(v[top - k].clone()) } else { TFn::zero() }).collect(),
            len,
        )
    };
    let sn = lift(&pn, top_n);
    let sd = lift(&pd, top_d);
    let ratio = sn.mul(&sd.inverse()?);
    let one_minus_t = TFn::from_poly(UniPoly::from_ints(&[1, -1]));
    let fac = one_minus_t.pow(dmd as i32 - dmn as i32);
    Ok((0..len)
        .map(|j| if j >= shift { &ratio.coeff(j - shift) * &fac } else { TFn::zero() })
        .collect())
}

/// `(1-t)^k` as an element of `Q(t)`.
pub fn one_minus_t_pow(k: i32) -> TFn {
    TFn::from_poly(UniPoly::from_ints(&[1, -1])).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn bp(t: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(t.iter().map(|(k, c)| (*k, q(*c))))
    }

    fn t_over_sq(sign: i64) -> TFn {
        TFn::new(UniPoly::from_ints(&[0, sign]), UniPoly::from_ints(&[1, -2, 1])).unwrap()
    }

    #[test]
    fn transposition_weingarten() {
        // -M(M-N)/(N(N^2-1))
        let num = bp(&[((2, 0), -1), ((1, 1), 1)]);
        let den = bp(&[((0, 3), 1), ((0, 1), -1)]);
        let w = MNRational::new(num, den).unwrap();
        let c = large_n_expand(&w, 3).unwrap();
        assert_eq!(c, vec![TFn::zero(), t_over_sq(-1), TFn::zero(), t_over_sq(-1)]);
    }

    #[test]
    fn identity_weingarten() {
        // M(MN-1)/(N(N^2-1))
        let num = bp(&[((2, 1), 1), ((1, 0), -1)]);
        let den = bp(&[((0, 3), 1), ((0, 1), -1)]);
        let w = MNRational::new(num, den).unwrap();
        let c = large_n_expand(&w, 2).unwrap();
        let inv_sq = TFn::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[1, -2, 1])).unwrap();
        assert_eq!(c, vec![inv_sq, TFn::zero(), t_over_sq(1)]);
    }

    #[test]
    fn pole_at_infinity() {
        let w = MNRational::from_poly(bp(&[((0, 1), 1)]));
        assert_eq!(large_n_expand(&w, 2), Err(Error::PoleAtInfinity));
    }
}
