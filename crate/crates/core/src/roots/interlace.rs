use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::QPoly;

use super::{is_real_rooted, isolate_real_roots};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InterlaceVerdict {
    pub weak: bool,
    pub strict: bool,
}

/// Weak interlacing `b1 <= a1 <= b2 <= ... <= an <= b(n+1)` of `p` into `q`.
pub fn interlaces(p: &QPoly, q: &QPoly) -> Result<bool> {
    Ok(interlacing_verdicts(p, q)?.weak)
}

/// Weak and strict verdicts; shared roots are compared exactly.
pub fn interlacing_verdicts(p: &QPoly, q: &QPoly) -> Result<InterlaceVerdict> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_real_rooted(p)? || !is_real_rooted(q)? {
        return Err(Error::NotRealRooted);
    }
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    if dq != dp + 1 {
        return Err(Error::DegreeGap);
    }
    if dp == 0 {
        return Ok(InterlaceVerdict { weak: true, strict: true });
    }
    // index every root by its position among the distinct roots of p*q
    let joint = isolate_real_roots(&(p * q))?;
    let index_roots = |f: &QPoly| -> Vec<usize> {
        let mut out = Vec::new();
        for (i, bx) in joint.iter().enumerate() {
            let m = multiplicity_in(f, bx);
            out.extend(std::iter::repeat(i).take(m));
        }
        out
    };
    let a = index_roots(p);
    let b = index_roots(q);
    debug_assert_eq!(a.len(), dp);
    debug_assert_eq!(b.len(), dq);
    let weak = (0..dp).all(|i| b[i] <= a[i] && a[i] <= b[i + 1]);
    let strict = (0..dp).all(|i| b[i] < a[i] && a[i] < b[i + 1]);
    Ok(InterlaceVerdict { weak, strict })
}

fn multiplicity_in(f: &QPoly, bx: &super::RootBox) -> usize {
    f.squarefree_decomposition().iter().position(|x| bx.holds_root_of(x)).map_or(0, |i| i + 1)
}
