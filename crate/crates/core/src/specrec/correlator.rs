//! Correlators in the pole basis and the recursion itself.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Laurent, RatFn, UniPoly};
use crate::scalar::{q, qf};
use crate::{QRatFn, Rational};

use super::curve::{cpoly, qs, CurveFn, Qs, SpectralCurve};

/// Largest `2g - 2 + n` the engine accepts.
pub const MAX_DEPTH: i64 = 4;

/// Slot code for `(w - a)^(-k)` with `a = 1` (index 0) or `a = -1` (index 1).
pub fn code(alpha_idx: u8, k: u8) -> u8 {
    (k << 1) | alpha_idx
}

pub fn decode(c: u8) -> (u8, u8) {
    (c & 1, c >> 1)
}

pub fn alpha_value(idx: u8) -> i64 {
    if idx == 0 {
        1
    } else {
        -1
    }
}

/// `omega_{g,n} / (dw_1 ... dw_n)` as `sum c * prod_i (w_i - a_i)^(-k_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Correlator {
    pub g: u32,
    pub n: usize,
    pub terms: BTreeMap<Vec<u8>, Qs>,
}

impl Correlator {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Invariant under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        if self.n < 2 {
            return true;
        }
        for i in 0..self.n - 1 {
            for (key, c) in &self.terms {
                let mut k = key.clone();
                k.swap(i, i + 1);
                if self.terms.get(&k) != Some(c) {
                    return false;
                }
            }
        }
        true
    }

    /// Invariant under `(s, w) -> (-s, -w)`, which fixes `z` and `t`.
    pub fn is_even_in_s(&self) -> bool {
        let neg_s = neg_s_map();
        self.terms.iter().all(|(key, c)| {
            let mut k = key.clone();
            let mut sign = 1;
            for slot in k.iter_mut() {
                let (a, kk) = decode(*slot);
                *slot = code(1 - a, kk);
                if kk % 2 == 0 {
                    sign = -sign;
                }
            }
            let image = c.compose(&neg_s);
            let image = if sign < 0 { -image } else { image };
            self.terms.get(&k) == Some(&image)
        })
    }

    /// Canonical text in the variables `z1..zn` and `s`.
    pub fn raw_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (key, c) in &self.terms {
            // dw = -s dz / (z - 1)^2 and w - a = ((s - a) z + a) / (z - 1)
            let c = if self.n % 2 == 1 { -c.clone() } else { c.clone() };
            let c = &c * &Qs::var().pow(self.n as i32);
            let mut s = format!("({})", c.pretty("s"));
            for (i, slot) in key.iter().enumerate() {
                let (a, k) = decode(*slot);
                let z = format!("z{}", i + 1);
                let lin = if a == 0 { format!("((s-1)*{z}+1)") } else { format!("((s+1)*{z}-1)") };
                if k > 2 {
                    s.push_str(&format!("*({z}-1)^{}", k - 2));
                } else if k == 1 {
                    s.push_str(&format!("/({z}-1)"));
                }
                s.push_str(&format!("/{lin}^{k}"));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }

    /// Single-variable correlator as a rational function of `w` over `Q(s)`.
    pub fn to_curve_fn(&self) -> Option<CurveFn> {
        if self.n != 1 {
            return None;
        }
        let mut acc = CurveFn::zero();
        for (key, c) in &self.terms {
            let (a, k) = decode(key[0]);
            let lin = cpoly(vec![qs(-alpha_value(a)), qs(1)]);
            let f = CurveFn::new(UniPoly::constant(c.clone()), lin.pow(k as u32)).ok()?;
            acc = &acc + &f;
        }
        Some(acc)
    }
}

fn neg_s_map() -> QRatFn {
    RatFn::from_poly(UniPoly::new(vec![q(0), q(-1)]))
}

type LQ = Laurent<Rational>;
type LS = Laurent<Qs>;

/// One summand of a factor evaluated with its first slot at `w` or `sigma(w)`.
struct Piece {
    key: Vec<u8>,
    coeff: Qs,
    kind: Kind,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Kind {
    /// `(w - a)^(-k)`
    Direct(u8, u8),
    /// `(sigma(w) - a)^(-k)`
    Sigma(u8, u8),
    /// `(m + 1) (w - alpha)^m`
    Diag(u32),
    /// `(m + 1) (sigma(w) - alpha)^m`
    DiagSigma(u32),
}

struct Local {
    alpha: i64,
    series: HashMap<(Kind, i32), LQ>,
    dinv: Option<LS>,
    den: CurveFn,
}

impl Local {
    fn valuation(&self, k: Kind) -> i32 {
        let ai = if self.alpha == 1 { 0 } else { 1 };
        match k {
            Kind::Direct(a, kk) | Kind::Sigma(a, kk) => {
                if a == ai {
                    -(kk as i32)
                } else {
                    0
                }
            }
            Kind::Diag(m) | Kind::DiagSigma(m) => m as i32,
        }
    }

    fn series(&mut self, k: Kind, prec: i32) -> LQ {
        if let Some(l) = self.series.get(&(k, prec)) {
            return l.clone();
        }
        let alpha = q(self.alpha);
        let w = || UniPoly::new(vec![q(0), q(1)]);
        let lin = |a: i64| UniPoly::new(vec![q(-a), q(1)]);
        // sigma(w) - a = (1 - a w) / w
        let sig_minus = |a: i64| (UniPoly::new(vec![q(1), q(-a)]), w());
        let rf = match k {
            Kind::Direct(a, kk) => RatFn::new(UniPoly::one(), lin(alpha_value(a)).pow(kk as u32)),
            Kind::Sigma(a, kk) => {
                let (n, d) = sig_minus(alpha_value(a));
                RatFn::new(d.pow(kk as u32), n.pow(kk as u32))
            }
            Kind::Diag(m) => Ok(RatFn::from_poly(lin(self.alpha).pow(m).scale(&q(m as i64 + 1)))),
            Kind::DiagSigma(m) => {
                let (n, d) = sig_minus(self.alpha);
                RatFn::new(n.pow(m).scale(&q(m as i64 + 1)), d.pow(m))
            }
        }
        .expect("nonzero denominator");
        let l = rf.laurent_at(&alpha, prec);
        self.series.insert((k, prec), l.clone());
        l
    }

    /// `1 / Den` at this branch point, known below `prec`.
    fn dinv(&mut self, prec: i32) -> LS {
        if let Some(d) = &self.dinv {
            if d.prec >= prec {
                return d.truncate(prec);
            }
        }
        let inv = CurveFn::one() / self.den.clone();
        let d = inv.laurent_at(&qs(self.alpha), prec);
        self.dinv = Some(d.clone());
        d
    }

    /// Kernel coefficient of `(w_1 - alpha)^(-(m+1))`, known below `prec`.
    fn kernel(&mut self, m: u32, prec: i32) -> LS {
        let alpha = q(self.alpha);
        let w = UniPoly::new(vec![q(0), q(1)]);
        let lin = UniPoly::new(vec![-alpha.clone(), q(1)]);
        // sigma(w) - alpha = (1 - alpha w) / w, and sigma'(w) = -1/w^2
        let sm = UniPoly::new(vec![q(1), -alpha.clone()]);
        let num = &(&lin.pow(m) * &w.pow(m)) - &sm.pow(m);
        let b = RatFn::new(num.scale(&qf(-1, 2)), w.pow(m + 2)).unwrap();
        let dp = prec + 2;
        let bl = b.laurent_at(&alpha, dp);
        let d = self.dinv(dp);
        d.mul_with(&bl, |x, c| c.scale(x)).truncate(prec)
    }
}

/// Memoized recursion on one curve.
pub struct TrEngine {
    pub curve: SpectralCurve,
    done: BTreeMap<(u32, usize), Arc<Correlator>>,
    locals: Vec<Local>,
}

fn scale_lq(l: &LQ, c: &Qs) -> LS {
    Laurent { val: l.val, coeffs: l.coeffs.iter().map(|x| c.scale(x)).collect(), prec: l.prec }
}

impl TrEngine {
    pub fn new(curve: SpectralCurve) -> Self {
        // Den(w) = y_sign (y(w) - y(1/w)) x'(w)
        let inv_w = CurveFn::one() / CurveFn::var();
        let dy = &curve.y_w - &curve.y_w.compose(&inv_w);
        let den = (&dy * &curve.x_w.derivative()).scale(&qs(curve.y_sign));
        let locals = [1, -1]
            .into_iter()
            .map(|alpha| Local { alpha, series: HashMap::new(), dinv: None, den: den.clone() })
            .collect();
        TrEngine { curve, done: BTreeMap::new(), locals }
    }

    /// `omega_{g,n}` for `2g - 2 + n >= 1`.
    pub fn correlator(&mut self, g: u32, n: usize) -> Result<Arc<Correlator>> {
        let chi = 2 * g as i64 - 2 + n as i64;
        if n == 0 || chi < 1 {
            return Err(Error::Invalid(format!("({g},{n}) is not a stable pair")));
        }
        if chi > MAX_DEPTH {
            return Err(Error::DepthExceeded(format!("2g-2+n = {chi} exceeds {MAX_DEPTH}")));
        }
        if let Some(c) = self.done.get(&(g, n)) {
            return Ok(c.clone());
        }
        // dependencies first
        if g >= 1 && 2 * (g as i64 - 1) - 2 + (n as i64 + 1) >= 1 {
            self.correlator(g - 1, n + 1)?;
        }
        for g1 in 0..=g {
            for m1 in 0..n {
                let c1 = 2 * g1 as i64 - 2 + (m1 as i64 + 1);
                if c1 >= 1 && c1 < chi {
                    self.correlator(g1, m1 + 1)?;
                }
            }
        }
        let mut terms: BTreeMap<Vec<u8>, Qs> = BTreeMap::new();
        for li in 0..self.locals.len() {
            let part = self.residue_at(li, g, n)?;
            for (k, v) in part {
                let e = terms.entry(k).or_insert_with(Qs::zero);
                *e = &*e + &v;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        let c = Arc::new(Correlator { g, n, terms });
        if !c.is_even_in_s() {
            return Err(Error::OddPartInS(format!("omega_{{{g},{n}}}")));
        }
        self.done.insert((g, n), c.clone());
        Ok(c)
    }

    /// Pieces of `omega_{g',n'}` with slot 0 at `w` (or `sigma(w)`), other slots sent to `targets`.
    fn pieces(&self, g: u32, n: usize, at_sigma: bool, targets: &[usize], arity: usize) -> Vec<Piece> {
        let mut out = Vec::new();
        if g == 0 && n == 2 {
            // omega_{0,2}(w, z_j) = sum_m (m+1) (w-alpha)^m (z_j - alpha)^(-(m+2)), filled in later
            return out;
        }
        let c = &self.done[&(g, n)];
        for (key, coeff) in &c.terms {
            let (a, k) = decode(key[0]);
            let mut nk = vec![0u8; arity];
            for (i, &slot) in key[1..].iter().enumerate() {
                nk[targets[i]] = slot;
            }
            let kind = if at_sigma { Kind::Sigma(a, k) } else { Kind::Direct(a, k) };
            out.push(Piece { key: nk, coeff: coeff.clone(), kind });
        }
        out
    }

    fn diag_pieces(&self, li: usize, at_sigma: bool, target: usize, arity: usize, max_m: i32) -> Vec<Piece> {
        let ai = if self.locals[li].alpha == 1 { 0 } else { 1 };
        (0..=max_m.max(0) as u32)
            .map(|m| {
                let mut key = vec![0u8; arity];
                key[target] = code(ai, (m + 2) as u8);
                let kind = if at_sigma { Kind::DiagSigma(m) } else { Kind::Diag(m) };
                Piece { key, coeff: Qs::one(), kind }
            })
            .collect()
    }

    fn residue_at(&mut self, li: usize, g: u32, n: usize) -> Result<Vec<(Vec<u8>, Qs)>> {
        // F(eps): map from the key of z_2..z_n (slot 0 empty) to a Laurent series, known below eps^1
        let mut f: HashMap<Vec<u8>, LS> = HashMap::new();
        let add = |f: &mut HashMap<Vec<u8>, LS>, key: Vec<u8>, l: LS| {
            let e = f.entry(key).or_insert_with(|| Laurent::zero_to(1));
            *e = e.add(&l);
        };
        let ai = if self.locals[li].alpha == 1 { 0u8 } else { 1 };
        if g >= 1 {
            if g == 1 && n == 1 {
                // omega_{0,2}(w, sigma w) = w^2 / (w^2 - 1)^2
                let alpha = q(self.locals[li].alpha);
                let rf = RatFn::new(
                    UniPoly::new(vec![q(0), q(0), q(1)]),
                    UniPoly::new(vec![q(-1), q(0), q(1)]).pow(2),
                )
                .unwrap();
                let l = rf.laurent_at(&alpha, 1);
                add(&mut f, vec![0u8; n], scale_lq(&l, &Qs::one()));
            } else {
                let c = self.done[&(g - 1, n + 1)].clone();
                for (key, coeff) in &c.terms {
                    let (a, k) = decode(key[0]);
                    let (b, kb) = decode(key[1]);
                    let loc = &mut self.locals[li];
                    let k1 = Kind::Direct(a, k);
                    let k2 = Kind::Sigma(b, kb);
                    let (v1, v2) = (loc.valuation(k1), loc.valuation(k2));
                    if v1 + v2 >= 1 {
                        continue;
                    }
                    let l = loc.series(k1, 1 - v2).mul(&loc.series(k2, 1 - v1)).truncate(1);
                    let mut nk = vec![0u8; n];
                    nk[1..].copy_from_slice(&key[2..]);
                    add(&mut f, nk, scale_lq(&l, coeff));
                }
            }
        }
        // products over g1 + g2 = g and splits of the other variables
        let others = n - 1;
        for g1 in 0..=g {
            let g2 = g - g1;
            for mask in 0..(1u32 << others) {
                let i1: Vec<usize> = (0..others).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect();
                let i2: Vec<usize> = (0..others).filter(|j| mask >> j & 1 == 0).map(|j| j + 1).collect();
                if (g1 == 0 && i1.is_empty()) || (g2 == 0 && i2.is_empty()) {
                    continue;
                }
                let diag1 = g1 == 0 && i1.len() == 1;
                let diag2 = g2 == 0 && i2.len() == 1;
                let mut p1 = if diag1 { Vec::new() } else { self.pieces(g1, i1.len() + 1, false, &i1, n) };
                let mut p2 = if diag2 { Vec::new() } else { self.pieces(g2, i2.len() + 1, true, &i2, n) };
                let loc = &self.locals[li];
                let pole = |ps: &Vec<Piece>| ps.iter().map(|p| -loc.valuation(p.kind)).max().unwrap_or(0);
                if diag1 {
                    let m = pole(&p2);
                    p1 = self.diag_pieces(li, false, i1[0], n, m);
                }
                if diag2 {
                    let loc = &self.locals[li];
                    let m = p1.iter().map(|p| -loc.valuation(p.kind)).max().unwrap_or(0);
                    p2 = self.diag_pieces(li, true, i2[0], n, m);
                }
                let loc = &mut self.locals[li];
                for a in &p1 {
                    let va = loc.valuation(a.kind);
                    for b in &p2 {
                        let vb = loc.valuation(b.kind);
                        if va + vb >= 1 {
                            continue;
                        }
                        let l = loc.series(a.kind, 1 - vb).mul(&loc.series(b.kind, 1 - va)).truncate(1);
                        let key: Vec<u8> = a.key.iter().zip(&b.key).map(|(x, y)| x | y).collect();
                        add(&mut f, key, scale_lq(&l, &(&a.coeff * &b.coeff)));
                    }
                }
            }
        }
        // residue against the kernel
        let pmax = f.values().map(|l| -l.clone().normalize().val).max().unwrap_or(0);
        let mut kernels = Vec::new();
        let loc = &mut self.locals[li];
        for m in 1..=(pmax + 1).max(1) as u32 {
            kernels.push(loc.kernel(m, pmax.max(0)));
        }
        let mut out: HashMap<Vec<u8>, Qs> = HashMap::new();
        for (key, l) in &f {
            let l = l.clone().normalize();
            if l.coeffs.is_empty() {
                continue;
            }
            for (mi, ker) in kernels.iter().enumerate() {
                let m = mi as u32 + 1;
                let mut r = Qs::zero();
                for j in ker.val..ker.prec {
                    let fj = -1 - j;
                    if fj < l.val {
                        break;
                    }
                    let kj = ker.coeff(j);
                    let lj = l.coeff(fj);
                    if !kj.is_zero() && !lj.is_zero() {
                        r = &r + &(&kj * &lj);
                    }
                }
                if !r.is_zero() {
                    let mut k = key.clone();
                    k[0] = code(ai, (m + 1) as u8);
                    let e = out.entry(k).or_insert_with(Qs::zero);
                    *e = &*e + &r;
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}
