//! Best-effort factored rendering in the style of the appendix tables.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{BiPoly, MNRational};

type Q = BigRational;

fn lin(terms: &[((u32, u32), i64)]) -> BiPoly {
    BiPoly::from_terms(terms.iter().map(|(k, c)| (*k, Q::from_integer((*c).into()))))
}

/// Strip repeated factors `f` from `p`, returning the multiplicity.
fn strip(p: &mut BiPoly, f: &BiPoly) -> u32 {
    let mut e = 0;
    while p.len() > 1 || p.leading().is_some_and(|(k, _)| k != (0, 0)) {
        match p.exact_div(f) {
            Some(q) => {
                *p = q;
                e += 1;
            }
            None => break,
        }
    }
    e
}

fn power(s: &str, e: u32, wrap: bool) -> String {
    let base = if wrap { format!("({s})") } else { s.to_string() };
    match e {
        0 => String::new(),
        1 => base,
        _ => format!("{base}^{e}"),
    }
}

/// Renders e.g. `-M(M-N)(MN-2)/(N(N^2-1)(N^2-4))`; falls back to the
/// expanded canonical form when the denominator does not split into
/// `N` and `N^2 - j^2` factors.
pub fn factored_string(w: &MNRational) -> String {
    if w.is_zero() {
        return "0".into();
    }
    let mut den = w.den().clone();
    let mut dparts = Vec::new();
    let e = strip(&mut den, &lin(&[((0, 1), 1)]));
    dparts.push(power("N", e, false));
    let mut j = 1i64;
    while den.len() > 1 && j < 16 {
        let e = strip(&mut den, &lin(&[((0, 2), 1), ((0, 0), -j * j)]));
        dparts.push(power(&format!("N^2-{}", j * j), e, true));
        j += 1;
    }
    if den.len() != 1 || den.leading().map(|(k, _)| k) != Some((0, 0)) {
        return w.pretty();
    }
    let dscale = den.leading().unwrap().1.clone();
    let mut num = w.num().scale(&(Q::one() / dscale));
    let mut nparts = Vec::new();
    for (f, s, wrap) in [
        (lin(&[((1, 0), 1)]), "M", false),
        (lin(&[((1, 0), 1), ((0, 1), -1)]), "M-N", true),
        (lin(&[((0, 1), 1)]), "N", false),
    ] {
        let e = strip(&mut num, &f);
        nparts.push(power(s, e, wrap));
    }
    let lead = num.leading().unwrap().1.clone();
    let neg = lead.is_negative();
    if neg {
        num = num.scale(&-Q::one());
    }
    let nbody: String = nparts.concat();
    let (content_str, rest) = if num.len() == 1 {
        let (k, c) = num.leading().unwrap();
        let c = c.clone();
        if !c.denom().is_one() {
            return w.pretty();
        }
        let mono = BiPoly::from_terms([(k, Q::one())]);
        let ms = if k == (0, 0) { String::new() } else { mono.pretty() };
        let cs = if c.is_one() && (k != (0, 0) || !nbody.is_empty()) { String::new() } else { c.numer().to_string() };
        (cs, ms)
    } else {
        if num.terms().any(|(_, c)| !c.denom().is_one()) {
            return w.pretty();
        }
        (String::new(), format!("({})", num.pretty()))
    };
    let mut numer = format!("{content_str}{nbody}{rest}");
    if numer.is_empty() {
        numer = "1".into();
    }
    let sign = if neg { "-" } else { "" };
    let dbody: String = dparts.concat();
    if dbody.is_empty() {
        return format!("{sign}{numer}");
    }
    let dfac = dparts.iter().filter(|s| !s.is_empty()).count();
    let dbody = if dfac > 1 || dbody.contains('^') && !dbody.starts_with('(') { format!("({dbody})") } else { dbody };
    format!("{sign}{numer}/{dbody}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::Permutation;
    use crate::weingarten::sw_character;

    fn f(s: &str, k: usize) -> String {
        factored_string(&sw_character(&Permutation::parse(s, k).unwrap()).unwrap())
    }

    #[test]
    fn table_style() {
        assert_eq!(f("()", 0), "1");
        assert_eq!(f("()", 1), "M/N");
        assert_eq!(f("(1 2)", 2), "-M(M-N)/(N(N^2-1))");
        assert_eq!(f("()", 2), "M(MN-1)/(N(N^2-1))");
        assert_eq!(f("(1 2)", 3), "-M(M-N)(MN-2)/(N(N^2-1)(N^2-4))");
        assert_eq!(f("(1 2 3)", 3), "M(M-N)(2M-N)/(N(N^2-1)(N^2-4))");
        assert_eq!(f("(1 2 3 4)", 4), "-M(M-N)(5M^2-5MN+N^2+1)/(N(N^2-1)(N^2-4)(N^2-9))");
    }
}
