//! Series coefficients of correlators at the point `z = 0`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, RatFn, TruncSeries, UniPoly};
use crate::hurwitz::Family;
use crate::scalar::q;
use crate::{QPoly, QRatFn};

use super::correlator::{alpha_value, decode, Correlator};
use super::curve::{cpoly, qs, t_of_s, CurveFn, Qs, SpectralCurve};
use super::zs::ZsFrac;

/// `c(s)` as a rational function of `t = s^2`; fails unless `c` is even.
pub fn qs_to_t(c: &Qs) -> Result<QRatFn> {
    let neg = RatFn::from_poly(UniPoly::new(vec![q(0), q(-1)]));
    if &c.compose(&neg) != c {
        return Err(Error::OddPartInS(c.pretty("s")));
    }
    let halve = |p: &QPoly| -> Result<QPoly> {
        let cs = p.coeffs();
        if cs.iter().skip(1).step_by(2).any(|x| !x.is_zero()) {
            return Err(Error::OddPartInS(p.pretty("s")));
        }
        Ok(QPoly::new(cs.iter().step_by(2).cloned().collect()))
    };
    QRatFn::new(halve(c.num())?, halve(c.den())?)
}

fn qs_to_tpoly(c: &Qs) -> Result<QPoly> {
    let r = qs_to_t(c)?;
    if !r.is_polynomial() {
        return Err(Error::Invalid(format!("coefficient {} is not polynomial in t", r.pretty("t"))));
    }
    Ok(r.num().clone())
}

/// Local series `w(xi)` inverting the expansion coordinate.
fn w_of_xi(curve: &SpectralCurve, order: usize) -> Result<TruncSeries<Qs>> {
    curve.expansion_coordinate().taylor(order + 1)?.reversion()
}

struct Basis {
    w: TruncSeries<Qs>,
    dw: TruncSeries<Qs>,
    order: usize,
    cache: HashMap<u8, Vec<Qs>>,
}

impl Basis {
    fn new(curve: &SpectralCurve, order: usize) -> Result<Self> {
        let w = w_of_xi(curve, order)?;
        let dw = w.derivative();
        Ok(Basis { w, dw, order, cache: HashMap::new() })
    }

    /// Coefficients of `(w(xi) - a)^(-k) w'(xi)`.
    fn get(&mut self, c: u8) -> Result<&Vec<Qs>> {
        if !self.cache.contains_key(&c) {
            let (a, k) = decode(c);
            let shifted = self.w.sub(&TruncSeries::new(vec![qs(alpha_value(a))], self.order));
            let inv = shifted.inverse()?.pow(k as usize);
            let v = inv.mul(&self.dw).coeffs().to_vec();
            let mut v = v;
            v.resize(self.order, Qs::zero());
            self.cache.insert(c, v);
        }
        Ok(&self.cache[&c])
    }
}

/// Partitions with at most `n` parts, exactly `n` parts, each at most `mu_max`.
fn sorted_tuples(n: usize, mu_max: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (1..=cap).rev() {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, mu_max, &mut Vec::new(), &mut out);
    out
}

fn divide_by_parts(p: QPoly, mu: &[usize]) -> QPoly {
    let prod: i64 = mu.iter().map(|&m| m as i64).product();
    p.scale(&(crate::Rational::one() / q(prod)))
}

/// Values at every non-increasing `mu` with parts at most `mu_max`, from a stable correlator.
pub fn extract_coefficients(
    curve: &SpectralCurve,
    omega: &Correlator,
    mu_max: usize,
) -> Result<BTreeMap<Vec<usize>, QPoly>> {
    let mut basis = Basis::new(curve, mu_max)?;
    // contract one slot at a time, keeping prefixes non-increasing
    let mut level: HashMap<(Vec<usize>, Vec<u8>), Qs> =
        omega.terms.iter().map(|(k, c)| ((Vec::new(), k.clone()), c.clone())).collect();
    for _ in 0..omega.n {
        let mut next: HashMap<(Vec<usize>, Vec<u8>), Qs> = HashMap::new();
        for ((prefix, rest), c) in level {
            let cap = prefix.last().copied().unwrap_or(mu_max);
            let e = basis.get(rest[0])?.clone();
            for mu in 1..=cap {
                let v = &e[mu - 1];
                if v.is_zero() {
                    continue;
                }
                let mut p = prefix.clone();
                p.push(mu);
                let entry = next.entry((p, rest[1..].to_vec())).or_insert_with(Qs::zero);
                *entry = &*entry + &(&c * v);
            }
        }
        level = next;
    }
    let mut out = BTreeMap::new();
    for mu in sorted_tuples(omega.n, mu_max) {
        let v = level.get(&(mu.clone(), Vec::new())).cloned().unwrap_or_else(Qs::zero);
        out.insert(mu.clone(), divide_by_parts(qs_to_tpoly(&v)?, &mu));
    }
    Ok(out)
}

/// `(0,1)` values from `omega_{0,1} = y dx`.
pub fn extract_disk(curve: &SpectralCurve, mu_max: usize) -> Result<BTreeMap<Vec<usize>, QPoly>> {
    let order = mu_max + 2;
    let w = w_of_xi(curve, order)?;
    let y = curve.y_w.taylor(order)?.compose(&w)?;
    let y = y.scale(&qs(curve.y_sign));
    let mut out = BTreeMap::new();
    for mu in 1..=mu_max {
        // monotone: x = xi; dessin: x = 1/xi, so dx = -xi^(-2) dxi
        let c = match curve.family {
            Family::Monotone => y.coeff(mu - 1),
            Family::Dessin => -y.coeff(mu + 1),
        };
        out.insert(vec![mu], divide_by_parts(qs_to_tpoly(&c)?, &[mu]));
    }
    Ok(out)
}

/// Dense truncated series in two variables, `c[i][j]` for `i + j < order`.
#[derive(Clone)]
struct Bi {
    c: Vec<Vec<Qs>>,
    order: usize,
}

impl Bi {
    fn zero(order: usize) -> Self {
        Bi { c: (0..order).map(|i| vec![Qs::zero(); order - i]).collect(), order }
    }

    fn get(&self, i: usize, j: usize) -> Qs {
        if i + j < self.order {
            self.c[i][j].clone()
        } else {
            Qs::zero()
        }
    }

    fn mul(&self, o: &Bi) -> Bi {
        let mut r = Bi::zero(self.order);
        for i1 in 0..self.order {
            for j1 in 0..self.order - i1 {
                let a = &self.c[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..self.order - i1 - j1 {
                    for j2 in 0..self.order - i1 - j1 - i2 {
                        let b = &o.c[i2][j2];
                        if !b.is_zero() {
                            let cur = &r.c[i1 + i2][j1 + j2];
                            r.c[i1 + i2][j1 + j2] = cur + &(a * b);
                        }
                    }
                }
            }
        }
        r
    }

    fn sub(&self, o: &Bi) -> Bi {
        let mut r = self.clone();
        for i in 0..self.order {
            for j in 0..self.order - i {
                r.c[i][j] = &r.c[i][j] - &o.c[i][j];
            }
        }
        r
    }

    /// Quotient by `(a - b)`; the result is known to one order less.
    fn div_diff(&self) -> Bi {
        let order = self.order - 1;
        let mut g = Bi::zero(order);
        // F_{i,j} = G_{i-1,j} - G_{i,j-1}
        for total in 0..order {
            for j in 0..=total {
                let i = total - j;
                let prev = if j > 0 { g.c[i + 1][j - 1].clone() } else { Qs::zero() };
                let _ = prev;
                let f = self.get(i + 1, j);
                let back = if j > 0 { g.get(i + 1, j - 1) } else { Qs::zero() };
                g.c[i][j] = &f + &back;
            }
        }
        g
    }

    fn inverse(&self) -> Result<Bi> {
        let c0 = self.c[0][0].clone();
        let inv0 = Qs::one() / c0;
        let mut r = Bi::zero(self.order);
        r.c[0][0] = inv0.clone();
        for total in 1..self.order {
            for i in 0..=total {
                let j = total - i;
                let mut acc = Qs::zero();
                for i1 in 0..=i {
                    for j1 in 0..=j {
                        if i1 + j1 == 0 {
                            continue;
                        }
                        let a = self.get(i1, j1);
                        if !a.is_zero() {
                            acc = &acc + &(&a * &r.c[i - i1][j - j1]);
                        }
                    }
                }
                r.c[i][j] = -(&acc * &inv0);
            }
        }
        Ok(r)
    }
}

/// `(0,2)` values from `omega_{0,2} - dx dx / (x - x)^2`.
pub fn extract_cylinder(curve: &SpectralCurve, mu_max: usize) -> Result<BTreeMap<Vec<usize>, QPoly>> {
    let order = 2 * mu_max + 3;
    let w = w_of_xi(curve, order)?;
    let dw = w.derivative();
    // Q(a,b) = (w(a) - w(b)) / (a - b) = sum_k w_k h_{k-1}(a, b)
    let mut qab = Bi::zero(order);
    for k in 1..order {
        let wk = w.coeff(k);
        if wk.is_zero() {
            continue;
        }
        for i in 0..k {
            let j = k - 1 - i;
            if i + j < order {
                qab.c[i][j] = &qab.c[i][j] + &wk;
            }
        }
    }
    let mut dd = Bi::zero(order);
    for i in 0..order {
        for j in 0..order - i {
            dd.c[i][j] = &dw.coeff(i) * &dw.coeff(j);
        }
    }
    let q2 = qab.mul(&qab);
    let num = dd.sub(&q2).div_diff().div_diff();
    let mut inv = q2.inverse()?;
    inv.order = num.order;
    inv.c.truncate(num.order);
    for (i, row) in inv.c.iter_mut().enumerate() {
        row.truncate(num.order - i);
    }
    let val = num.mul(&inv);
    let mut out = BTreeMap::new();
    for mu in sorted_tuples(2, mu_max) {
        let c = val.get(mu[0] - 1, mu[1] - 1);
        out.insert(mu.clone(), divide_by_parts(qs_to_tpoly(&c)?, &mu));
    }
    Ok(out)
}

/// Closed form `-t z (z-1) (1-z+tz)^4 / (t z^2 - z^2 + 2z - 1)^5` over `Q(s)`.
pub fn w11_closed_form() -> CurveFn {
    let t = t_of_s();
    let one = qs(1);
    let lin = cpoly(vec![one.clone(), &t - &one]);
    let quad = cpoly(vec![-one.clone(), qs(2), &t - &one]);
    let zz1 = cpoly(vec![Qs::zero(), -one.clone(), one]);
    let num = (&zz1 * &lin.pow(4)).scale(&-t);
    CurveFn::new(num, quad.pow(5)).expect("nonzero")
}

/// Residual of the first-order equation for `w_{1,1}` as a function of `z`.
pub fn w11_ode_residual(curve: &SpectralCurve, w: &ZsFrac) -> ZsFrac {
    let x = ZsFrac::from_curve_fn(&curve.x);
    let t = &ZsFrac::s() * &ZsFrac::s();
    let one = ZsFrac::int(1);
    let tm1 = &t - &one;
    let tp1 = &t + &one;
    let tm1sq_x2 = &(&tm1 * &tm1) * &(&x * &x);
    let tp1_x = &tp1 * &x;
    let a = &(&tm1sq_x2 - &tp1_x.scale(2)) + &one;
    let b = &(&tm1sq_x2.scale(4) - &tp1_x.scale(3)) - &one;
    let dwdx = &w.dz() / &x.dz();
    let lhs = -(&(&x * &a) * &dwdx);
    &lhs - &(&b * w)
}

/// `omega_{1,1} / dx` from the recursion, as a function of `z`.
pub fn w11_from_correlator(curve: &SpectralCurve, omega11: &Correlator) -> Option<ZsFrac> {
    if omega11.n != 1 {
        return None;
    }
    // w = s z / (z - 1), so w - a = ((s - a) z + a) / (z - 1); put
    // everything over one denominator to keep the fractions small
    let z = BiPoly::m();
    let sv = BiPoly::n();
    let zm1 = &z - &BiPoly::one();
    let lin = |a: i64| {
        let av = BiPoly::constant(q(a));
        &(&(&sv - &av) * &z) + &av
    };
    let mut top = [0u32; 2];
    let mut l = QPoly::one();
    for (key, c) in &omega11.terms {
        let (a, k) = decode(key[0]);
        top[a as usize] = top[a as usize].max(k as u32);
        l = &l * &c.den().exact_div(&l.gcd(c.den())).unwrap();
    }
    let bpow = |p: &BiPoly, e: u32| (0..e).fold(BiPoly::one(), |acc, _| &acc * p);
    let mut num = BiPoly::zero();
    for (key, c) in &omega11.terms {
        let (a, k) = decode(key[0]);
        let (a, k) = (a as usize, k as u32);
        let coef = BiPoly::from_n_poly(&(c.num() * &l.exact_div(c.den()).unwrap()));
        let rest = &bpow(&lin(alpha_value(a as u8)), top[a] - k) * &bpow(&lin(alpha_value(1 - a as u8)), top[1 - a]);
        num = &num + &(&(&coef * &bpow(&zm1, k)) * &rest);
    }
    let den = &(&BiPoly::from_n_poly(&l) * &bpow(&lin(1), top[0])) * &bpow(&lin(-1), top[1]);
    let acc = ZsFrac { num, den };
    let w = &ZsFrac::from_poly(&sv * &z) / &ZsFrac::from_poly(zm1);
    let x = ZsFrac::from_curve_fn(&curve.x);
    Some(&(&acc * &w.dz()) / &x.dz())
}
