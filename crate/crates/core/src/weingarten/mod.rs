//! The Grassmannian Weingarten function `Wg^S(sigma)` as an exact rational
//! function of `M` and `N`.

mod format;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{large_n_expand, solve_linear, BiPoly, MNRational, RatFn, UniPoly};
use crate::oracles::weighted_counts;
use crate::scalar::Ring;
use crate::symgroup::{factorial, mn_character, GroupAlgebra, Partition, Permutation};
use crate::exactalg::largen::one_minus_t_pow;

pub use format::factored_string;

type Q = BigRational;

/// Largest `k` for the character formula.
pub const MAX_K_CHARACTER: usize = 8;
/// Largest `k` for the orthogonality solve.
pub const MAX_K_ORTHOGONALITY: usize = 6;

/// `Wg^S` on every conjugacy class of `S_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeingartenTable {
    pub k: usize,
    pub values: BTreeMap<Partition, MNRational>,
}

impl WeingartenTable {
    pub fn get(&self, sigma: &Permutation) -> &MNRational {
        &self.values[&sigma.cycle_type()]
    }

    /// Classes in the order used by the appendix tables (all fixed points
    /// first, the full cycle last).
    pub fn classes(&self) -> Vec<Partition> {
        let mut v = Partition::all(self.k);
        v.reverse();
        v
    }
}

fn char_cache() -> &'static RwLock<HashMap<usize, Arc<WeingartenTable>>> {
    static C: OnceLock<RwLock<HashMap<usize, Arc<WeingartenTable>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn lin_n(c: i64) -> BiPoly {
    BiPoly::from_terms([((0, 1), Q::one()), ((0, 0), Q::from_i64(c))])
}

fn lin_m(c: i64) -> BiPoly {
    BiPoly::from_terms([((1, 0), Q::one()), ((0, 0), Q::from_i64(c))])
}

/// Character-formula table for `S_k`, memoized.
pub fn sw_character_table(k: usize) -> Result<Arc<WeingartenTable>> {
    if k > MAX_K_CHARACTER {
        return Err(Error::BoundExceeded(format!("k = {k} > {MAX_K_CHARACTER}")));
    }
    if let Some(t) = char_cache().read().unwrap().get(&k) {
        return Ok(t.clone());
    }
    let lambdas = Partition::all(k);
    // common denominator prod_c (N + c)^{max multiplicity}
    let mut maxmult: BTreeMap<i64, usize> = BTreeMap::new();
    for l in &lambdas {
        let mut m: BTreeMap<i64, usize> = BTreeMap::new();
        for c in l.contents() {
            *m.entry(c).or_default() += 1;
        }
        for (c, e) in m {
            let x = maxmult.entry(c).or_default();
            *x = (*x).max(e);
        }
    }
    let mut lcd = BiPoly::one();
    for (&c, &e) in &maxmult {
        for _ in 0..e {
            lcd = &lcd * &lin_n(c);
        }
    }
    let lcd_scaled = lcd.scale(&Q::from_integer(factorial(k)));
    // per lambda: dim * prod(M+c) * lcd / prod(N+c)
    let weights: Vec<BiPoly> = lambdas
        .iter()
        .map(|l| {
            let mut num = BiPoly::constant(Q::from_integer(l.dimension()));
            let mut m: BTreeMap<i64, usize> = BTreeMap::new();
            for c in l.contents() {
                num = &num * &lin_m(c);
                *m.entry(c).or_default() += 1;
            }
            for (&c, &e) in &maxmult {
                for _ in m.get(&c).copied().unwrap_or(0)..e {
                    num = &num * &lin_n(c);
                }
            }
            num
        })
        .collect();
    let mut values = BTreeMap::new();
    for mu in &lambdas {
        let mut num = BiPoly::zero();
        for (l, w) in lambdas.iter().zip(&weights) {
            let chi = mn_character(l, mu)?;
            if chi != 0 {
                num = &num + &w.scale(&Q::from_i64(chi));
            }
        }
        values.insert(mu.clone(), MNRational::new(num, lcd_scaled.clone())?);
    }
    let t = Arc::new(WeingartenTable { k, values });
    char_cache().write().unwrap().insert(k, t.clone());
    Ok(t)
}

/// `Wg^S(sigma)` by the character formula.
pub fn sw_character(sigma: &Permutation) -> Result<MNRational> {
    Ok(sw_character_table(sigma.degree())?.get(sigma).clone())
}

/// Table for `S_k` obtained by solving the orthogonality relations class by
/// class, recursively from `S_{k-1}`.
pub fn sw_orthogonality_table(k: usize) -> Result<WeingartenTable> {
    if k > MAX_K_ORTHOGONALITY {
        return Err(Error::BoundExceeded(format!("k = {k} > {MAX_K_ORTHOGONALITY}")));
    }
    let mut prev = WeingartenTable { k: 0, values: BTreeMap::from([(Partition::empty(), MNRational::one())]) };
    for kk in 1..=k {
        prev = orthogonality_step(&prev, kk)?;
    }
    Ok(prev)
}

fn orthogonality_step(prev: &WeingartenTable, k: usize) -> Result<WeingartenTable> {
    let classes = Partition::all(k);
    let index: HashMap<Partition, usize> = classes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = MNRational::n();
    let m = MNRational::m();
    let mut a = vec![vec![MNRational::zero(); classes.len()]; classes.len()];
    let mut b = vec![MNRational::zero(); classes.len()];
    for (row, lambda) in classes.iter().enumerate() {
        let sigma = lambda.class_rep();
        // N W(sigma) + sum_i W(sigma (i k)) = [sigma(k)=k] M W(sigma↓) + sum_i [sigma(i)=k] W([sigma (i k)]↓)
        a[row][row] = &a[row][row] + &n;
        for i in 0..k - 1 {
            let s = sigma.compose(&Permutation::transposition(k, i, k - 1));
            let col = index[&s.cycle_type()];
            a[row][col] = &a[row][col] + &MNRational::one();
            if sigma.apply(i) == k - 1 {
                b[row] = &b[row] + prev.get(&s.restrict().unwrap());
            }
        }
        if sigma.apply(k - 1) == k - 1 {
            b[row] = &b[row] + &(&m * prev.get(&sigma.restrict().unwrap()));
        }
    }
    let x = solve_linear(a, b)?;
    Ok(WeingartenTable { k, values: classes.into_iter().zip(x).collect() })
}

/// Residual of the orthogonality relation at `sigma` for a candidate
/// function `w` on `S_k` and `S_{k-1}`.
pub fn orthogonality_residual(
    sigma: &Permutation,
    w: &dyn Fn(&Permutation) -> MNRational,
) -> MNRational {
    let k = sigma.degree();
    let mut lhs = &MNRational::n() * &w(sigma);
    let mut rhs = MNRational::zero();
    for i in 0..k - 1 {
        let s = sigma.compose(&Permutation::transposition(k, i, k - 1));
        lhs = &lhs + &w(&s);
        if sigma.apply(i) == k - 1 {
            rhs = &rhs + &w(&s.restrict().unwrap());
        }
    }
    if sigma.apply(k - 1) == k - 1 {
        rhs = &rhs + &(&MNRational::m() * &w(&sigma.restrict().unwrap()));
    }
    &lhs - &rhs
}

/// `∫ S_{i1 j1} ... S_{ik jk} dS`; only the equality pattern of indices matters.
pub fn convolution_integral(i: &[usize], j: &[usize]) -> Result<MNRational> {
    if i.len() != j.len() {
        return Err(Error::LengthMismatch(format!("{} vs {}", i.len(), j.len())));
    }
    let k = i.len();
    let table = sw_character_table(k)?;
    let mut acc = MNRational::zero();
    for sigma in Permutation::all(k) {
        if (0..k).all(|a| i[sigma.apply(a)] == j[a]) {
            acc = &acc + table.get(&sigma);
        }
    }
    Ok(acc)
}

/// Top coefficient in `M` of `Wg^S(sigma)`: the unitary Weingarten function.
pub fn uw_leading(sigma: &Permutation) -> Result<RatFn<Q>> {
    let w = sw_character(sigma)?;
    let num = w.num().to_recursive();
    let top = num.lead().cloned().unwrap_or_else(UniPoly::zero);
    let den = w.den().as_n_poly().ok_or_else(|| Error::Invalid("denominator depends on M".into()))?;
    RatFn::new(top, den)
}

/// Compares the large-`N` expansion of `Wg^S(sigma)` with brute-force
/// weighted counts of monotone factorisations, for `r = 0..=rmax`.
pub fn large_n_check(sigma: &Permutation, rmax: usize) -> Result<bool> {
    let k = sigma.degree();
    if k > 5 || rmax > 6 {
        return Err(Error::BoundExceeded(format!("k = {k}, rmax = {rmax}")));
    }
    let coeffs = large_n_expand(&sw_character(sigma)?, rmax)?;
    let counts = weighted_counts(sigma, rmax, false)?;
    let fac = one_minus_t_pow(k as i32);
    Ok(coeffs.iter().zip(&counts).enumerate().all(|(r, (c, h))| {
        let mut lhs = c * &fac;
        if r % 2 == 1 {
            lhs = -lhs;
        }
        lhs == RatFn::from_poly(h.clone())
    }))
}

/// `(n0 + J_i)^{-1}` as a polynomial in `J_i`, interpolating `1/(n0 + c)`
/// on the spectrum `c in {-(i-1), .., i-1}`.
fn jm_inverse_poly(i: usize, n0: &Q) -> Result<UniPoly<Q>> {
    let pts: Vec<i64> = (-(i as i64 - 1)..=(i as i64 - 1)).collect();
    let mut acc = UniPoly::zero();
    for &c in &pts {
        let d = n0 + Q::from_i64(c);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut basis = UniPoly::constant(Q::one() / d);
        for &c2 in &pts {
            if c2 != c {
                let lin = UniPoly::new(vec![Q::from_i64(-c2), Q::one()]);
                basis = (&basis * &lin).scale(&(Q::one() / Q::from_i64(c - c2)));
            }
        }
        acc += &basis;
    }
    Ok(acc)
}

fn eval_in_algebra(p: &UniPoly<Q>, x: &GroupAlgebra<Q>) -> GroupAlgebra<Q> {
    let k = x.degree();
    let mut acc = GroupAlgebra::zero(k);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add_scalar(c);
    }
    acc
}

/// Checks `sum_sigma Wg^S(sigma)(m0, n0) sigma = prod_i (m0 + J_i)/(n0 + J_i)`
/// in the group algebra of `S_k`.
pub fn jm_weingarten_identity_check(k: usize, m0: &Q, n0: &Q) -> Result<bool> {
    if k > 5 {
        return Err(Error::DegreeTooLarge(format!("k = {k} > 5")));
    }
    let table = sw_character_table(k)?;
    let mut lhs = GroupAlgebra::<Q>::zero(k);
    for sigma in Permutation::all(k) {
        let v = table.get(&sigma).eval(m0, n0).ok_or(Error::DivisionByZero)?;
        lhs = lhs.add(&GroupAlgebra::basis(&sigma, v));
    }
    let mut rhs = GroupAlgebra::<Q>::identity(k);
    for i in 1..=k {
        let j = GroupAlgebra::<Q>::jucys_murphy(k, i);
        let inv = eval_in_algebra(&jm_inverse_poly(i, n0)?, &j);
        if j.add_scalar(n0).mul(&inv) != GroupAlgebra::identity(k) {
            return Ok(false);
        }
        rhs = rhs.mul(&j.add_scalar(m0)).mul(&inv);
    }
    Ok(lhs == rhs)
}

/// Integer helper for tests and the CLI.
pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    fn perm(s: &str, k: usize) -> Permutation {
        Permutation::parse(s, k).unwrap()
    }

    fn bp(t: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(t.iter().map(|(k, c)| (*k, q(*c))))
    }

    #[test]
    fn character_examples() {
        assert_eq!(sw_character(&Permutation::identity(0)).unwrap(), MNRational::one());
        assert_eq!(sw_character(&Permutation::identity(1)).unwrap(), &MNRational::m() / &MNRational::n());
        // M(M-N)(2M-N) / (N(N^2-1)(N^2-4))
        let num = &(&bp(&[((1, 0), 1)]) * &bp(&[((1, 0), 1), ((0, 1), -1)])) * &bp(&[((1, 0), 2), ((0, 1), -1)]);
        let den = &(&bp(&[((0, 1), 1)]) * &bp(&[((0, 2), 1), ((0, 0), -1)])) * &bp(&[((0, 2), 1), ((0, 0), -4)]);
        assert_eq!(sw_character(&perm("(1 2 3)", 3)).unwrap(), MNRational::new(num, den).unwrap());
    }

    #[test]
    fn orthogonality_examples() {
        let t2 = sw_orthogonality_table(2).unwrap();
        let num = bp(&[((2, 1), 1), ((1, 0), -1)]);
        let den = bp(&[((0, 3), 1), ((0, 1), -1)]);
        assert_eq!(t2.values[&Partition::new(vec![1, 1]).unwrap()], MNRational::new(num, den).unwrap());
        for k in 1..=4 {
            let o = sw_orthogonality_table(k).unwrap();
            let c = sw_character_table(k).unwrap();
            assert_eq!(o.values, c.values);
        }
    }

    #[test]
    fn convolution_examples() {
        assert!(convolution_integral(&[1], &[2]).unwrap().is_zero());
        assert_eq!(convolution_integral(&[1], &[1]).unwrap(), &MNRational::m() / &MNRational::n());
        let expect = MNRational::new(bp(&[((2, 0), 1), ((1, 0), 1)]), bp(&[((0, 2), 1), ((0, 1), 1)])).unwrap();
        assert_eq!(convolution_integral(&[1, 1], &[1, 1]).unwrap(), expect);
        assert!(matches!(convolution_integral(&[1], &[1, 2]), Err(Error::LengthMismatch(_))));
    }

    #[test]
    fn unitary_leading() {
        assert_eq!(uw_leading(&Permutation::identity(0)).unwrap(), RatFn::one());
        let e = RatFn::new(UniPoly::from_ints(&[-1]), UniPoly::from_ints(&[0, -1, 0, 1])).unwrap();
        assert_eq!(uw_leading(&perm("(1 2)", 2)).unwrap(), e);
        let e2 = RatFn::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(uw_leading(&Permutation::identity(2)).unwrap(), e2);
    }

    #[test]
    fn large_n_examples() {
        assert!(large_n_check(&Permutation::identity(1), 4).unwrap());
        assert!(large_n_check(&perm("(1 2)", 2), 3).unwrap());
        assert!(large_n_check(&Permutation::identity(2), 2).unwrap());
    }

    #[test]
    fn residual_vanishes() {
        for k in 1..=4 {
            let w = |s: &Permutation| sw_character(s).unwrap();
            for sigma in Permutation::all(k) {
                assert!(orthogonality_residual(&sigma, &w).is_zero(), "{sigma}");
            }
        }
    }

    #[test]
    fn jucys_murphy_identity() {
        for k in 1..=3 {
            assert!(jm_weingarten_identity_check(k, &qf(7, 3), &qf(11, 2)).unwrap());
        }
        assert!(jm_weingarten_identity_check(2, &q(1), &q(-1)).is_err());
    }
}
