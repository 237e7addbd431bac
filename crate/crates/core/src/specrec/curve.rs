//! The two genus-zero spectral curves, over `Q(s)` with `t = s^2`.

use num_traits::{One, Zero};

use crate::exactalg::{RatFn, UniPoly};
use crate::hurwitz::Family;
use crate::scalar::q;
use crate::QRatFn;

/// Scalars of the recursion: rational functions of `s`.
pub type Qs = QRatFn;
/// Rational functions of one curve coordinate over `Q(s)`.
pub type CurveFn = RatFn<Qs>;

pub fn s_var() -> Qs {
    Qs::var()
}

pub fn t_of_s() -> Qs {
    let s = s_var();
    &s * &s
}

pub fn qs(n: i64) -> Qs {
    Qs::constant(q(n))
}

/// Polynomial in the curve coordinate from ascending `Q(s)` coefficients.
pub fn cpoly(c: Vec<Qs>) -> UniPoly<Qs> {
    UniPoly::new(c)
}

fn cfn(num: Vec<Qs>, den: Vec<Qs>) -> CurveFn {
    CurveFn::new(cpoly(num), cpoly(den)).expect("nonzero denominator")
}

#[derive(Clone, Debug)]
pub struct SpectralCurve {
    pub family: Family,
    /// `x`, `y` and the deck involution of `x`, in the coordinate `z`.
    pub x: CurveFn,
    pub y: CurveFn,
    pub involution: CurveFn,
    /// Zeros of `dx/dz`.
    pub branch_points: Vec<Qs>,
    /// `z = w / (w - s)`; the involution becomes `w -> 1/w`, branch points `w = 1, -1`.
    pub uniformizer: CurveFn,
    pub x_w: CurveFn,
    pub y_w: CurveFn,
    /// Sign applied to `y` in `omega_{0,1}` and in the kernel.
    pub y_sign: i64,
}

/// Curve data in `z` and in the uniformizing coordinate `w`.
pub fn build_curve(family: Family) -> SpectralCurve {
    let one = qs(1);
    let tm1 = &t_of_s() - &one;
    // 1 - z + t z
    let lin = vec![one.clone(), tm1.clone()];
    let (x, y, y_sign) = match family {
        Family::Monotone => (
            cfn(vec![Qs::zero(), one.clone(), -one.clone()], lin.clone()),
            cfn(lin.clone(), vec![one.clone(), -one.clone()]),
            1,
        ),
        Family::Dessin => (
            cfn(lin.clone(), vec![Qs::zero(), one.clone(), -one.clone()]),
            CurveFn::var(),
            -1,
        ),
    };
    let involution = cfn(vec![one.clone(), -one.clone()], lin);
    let s = s_var();
    let branch_points = vec![(&one / &(&one - &s)), (&one / &(&one + &s))];
    let uniformizer = cfn(vec![Qs::zero(), one.clone()], vec![-s, one]);
    let x_w = x.compose(&uniformizer);
    let y_w = y.compose(&uniformizer);
    SpectralCurve { family, x, y, involution, branch_points, uniformizer, x_w, y_w, y_sign }
}

/// Outcome of the identities a curve must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveChecks {
    pub fiber_invariant: bool,
    pub involutive: bool,
    pub branch_points: bool,
    pub degree_two: bool,
    pub equation: bool,
    pub trace: bool,
    pub uniformizer: bool,
}

impl CurveChecks {
    pub fn all(&self) -> bool {
        self.fiber_invariant
            && self.involutive
            && self.branch_points
            && self.degree_two
            && self.equation
            && self.trace
            && self.uniformizer
    }
}

impl SpectralCurve {
    /// The coordinate used for series extraction; it vanishes at `z = 0`.
    pub fn expansion_coordinate(&self) -> CurveFn {
        match self.family {
            Family::Monotone => self.x_w.clone(),
            Family::Dessin => CurveFn::one() / self.x_w.clone(),
        }
    }

    pub fn check(&self) -> CurveChecks {
        let sigma = &self.involution;
        let fiber_invariant = self.x.compose(sigma) == self.x;
        let involutive = sigma.compose(sigma) == CurveFn::var();
        let dnum = self.x.derivative().num().clone();
        let branch_points = dnum.degree() == Some(2)
            && self.branch_points.iter().all(|b| dnum.eval(b).is_zero())
            && self.branch_points[0] != self.branch_points[1];
        let degree_two = self.x.num().degree().max(self.x.den().degree()) == Some(2);
        let (x, y) = (&self.x, &self.y);
        let tm1 = CurveFn::constant(&t_of_s() - &qs(1));
        let one = CurveFn::one();
        let xy = x * y;
        let lhs = match self.family {
            Family::Monotone => &(&(&(&xy * y) + &(&tm1 * &xy)) - y) + &one,
            Family::Dessin => &(&(&(&xy * y) - &xy) + &(&tm1 * y)) + &one,
        };
        let equation = lhs.is_zero();
        let trace = match self.family {
            // y + y(sigma) = 1/x + 1 - t
            Family::Monotone => {
                let rhs = &(&one / x) - &tm1;
                &(y + &y.compose(sigma)) == &rhs
            }
            // y + y(sigma) = 1 - (t - 1)/x, from x y^2 - (x - t + 1) y + 1 = 0
            Family::Dessin => {
                let rhs = &one - &(&tm1 / x);
                &(y + &y.compose(sigma)) == &rhs
            }
        };
        let inv_w = CurveFn::one() / CurveFn::var();
        let u = &self.uniformizer;
        let uniformizer = u.compose(&inv_w) == sigma.compose(u)
            && u.eval(&qs(1)).as_ref() == Some(&self.branch_points[0])
            && u.eval(&qs(-1)).as_ref() == Some(&self.branch_points[1])
            && u.eval(&Qs::zero()) == Some(Qs::zero());
        CurveChecks { fiber_invariant, involutive, branch_points, degree_two, equation, trace, uniformizer }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curves_satisfy_identities() {
        for f in [Family::Monotone, Family::Dessin] {
            let c = build_curve(f);
            let r = c.check();
            assert!(r.all(), "{f}: {r:?}");
        }
    }

    #[test]
    fn uniformized_forms() {
        let c = build_curve(Family::Monotone);
        let s = s_var();
        // x = w / ((w - s)(1 - s w)), y = 1 - s w
        let d = cpoly(vec![-s.clone(), qs(1)]);
        let e = cpoly(vec![qs(1), -s.clone()]);
        let expect = CurveFn::new(cpoly(vec![Qs::zero(), qs(1)]), &d * &e).unwrap();
        assert_eq!(c.x_w, expect);
        assert_eq!(c.y_w, CurveFn::from_poly(e.clone()));
        let dc = build_curve(Family::Dessin);
        assert_eq!(dc.expansion_coordinate(), c.x_w);
    }
}
