//! Enumeration of monotone and strictly monotone factorisations.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::symgroup::Permutation;
use crate::QPoly;

/// Largest degree the brute-force search accepts.
pub const MAX_DEGREE: usize = 9;
/// Largest factorisation length the brute-force search accepts.
pub const MAX_LENGTH: usize = 10;

/// Sequence of transpositions `(a_i b_i)` with `a_i < b_i`, stored 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MonotoneFactorisation {
    pub transpositions: Vec<(usize, usize)>,
}

impl MonotoneFactorisation {
    pub fn len(&self) -> usize {
        self.transpositions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transpositions.is_empty()
    }

    /// Number of distinct `b_i`.
    pub fn hive(&self) -> usize {
        let mut bs: Vec<_> = self.transpositions.iter().map(|t| t.1).collect();
        bs.dedup();
        bs.len()
    }

    pub fn is_monotone(&self) -> bool {
        self.transpositions.windows(2).all(|w| w[0].1 <= w[1].1)
    }

    /// Right-to-left product in `S_k`.
    pub fn product(&self, k: usize) -> Permutation {
        self.transpositions
            .iter()
            .fold(Permutation::identity(k), |acc, &(a, b)| acc.compose(&Permutation::transposition(k, a - 1, b - 1)))
    }
}

impl fmt::Display for MonotoneFactorisation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (a, b)) in self.transpositions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a}{b})")?;
        }
        write!(f, ")")
    }
}

fn check_bounds(k: usize, r: usize) -> Result<()> {
    if k > MAX_DEGREE {
        return Err(Error::BoundExceeded(format!("degree {k} > {MAX_DEGREE}")));
    }
    if r > MAX_LENGTH {
        return Err(Error::BoundExceeded(format!("length {r} > {MAX_LENGTH}")));
    }
    Ok(())
}

/// Depth-first search state. `rem` is the product of the transpositions still
/// to be chosen (so the search ends when it is the identity), `pre` is the
/// prefix product, `uf` tracks the orbits of the group generated so far.
struct Search<'a> {
    k: usize,
    rmax: usize,
    transitive: bool,
    exact: bool,
    cycles_target: usize,
    rem: Vec<usize>,
    rem_cycles: usize,
    pre: Vec<usize>,
    pre_cycles: usize,
    uf: Vec<usize>,
    components: usize,
    stack: Vec<(usize, usize)>,
    visit: &'a mut dyn FnMut(&[(usize, usize)], usize),
}

fn same_cycle(p: &[usize], a: usize, b: usize) -> bool {
    let mut x = p[a];
    loop {
        if x == b {
            return true;
        }
        if x == a {
            return false;
        }
        x = p[x];
    }
}

fn find(uf: &[usize], mut x: usize) -> usize {
    while uf[x] != x {
        x = uf[x];
    }
    x
}

impl Search<'_> {
    /// Lower bound on further transpositions needed.
    fn needed(&self) -> usize {
        let dist = self.k - self.rem_cycles;
        if !self.transitive {
            return dist;
        }
        // joins must merge all orbits; the prefix cycle count moves by +-1
        let c = self.components;
        let a = (2 * (c - 1) + self.cycles_target).saturating_sub(self.pre_cycles);
        let b = self.pre_cycles.saturating_sub(self.cycles_target);
        dist.max(a).max(b)
    }

    fn run(&mut self, depth: usize, min_b: usize, hive: usize, last_b: usize) {
        if self.rem_cycles == self.k && (!self.transitive || self.components == 1) {
            (self.visit)(&self.stack, hive);
        }
        if depth == self.rmax {
            return;
        }
        let left = self.rmax - depth;
        for b in min_b..self.k {
            for a in 0..b {
                // rem' = (a b) ∘ rem
                let split = same_cycle(&self.rem, a, b);
                let new_rem_cycles = if split { self.rem_cycles + 1 } else { self.rem_cycles - 1 };
                // pre' = pre ∘ (a b)
                let pre_split = same_cycle(&self.pre, a, b);
                let new_pre_cycles = if pre_split { self.pre_cycles + 1 } else { self.pre_cycles - 1 };
                let (ra, rb) = (find(&self.uf, a), find(&self.uf, b));
                let merged = ra != rb;

                let saved_rem = (self.rem_cycles, self.pre_cycles, self.components);
                self.rem_cycles = new_rem_cycles;
                self.pre_cycles = new_pre_cycles;
                if merged {
                    self.components -= 1;
                }
                let need = self.needed();
                let parity_ok = !self.exact || (left as i64 - 1 + self.rem_cycles as i64 - self.k as i64) % 2 == 0;
                let ok = need < left && parity_ok;
                if ok {
                    let ia = self.rem.iter().position(|&x| x == a).unwrap();
                    let ib = self.rem.iter().position(|&x| x == b).unwrap();
                    self.rem[ia] = b;
                    self.rem[ib] = a;
                    self.pre.swap(a, b);
                    if merged {
                        self.uf[ra.max(rb)] = ra.min(rb);
                    }
                    self.stack.push((a + 1, b + 1));
                    let nh = if depth > 0 && last_b == b { hive } else { hive + 1 };
                    self.run(depth + 1, b, nh, b);
                    self.stack.pop();
                    if merged {
                        self.uf[ra.max(rb)] = ra.max(rb);
                    }
                    self.pre.swap(a, b);
                    self.rem[ia] = a;
                    self.rem[ib] = b;
                }
                (self.rem_cycles, self.pre_cycles, self.components) = saved_rem;
            }
        }
    }
}

fn search(
    sigma: &Permutation,
    rmax: usize,
    transitive: bool,
    exact: bool,
    visit: &mut dyn FnMut(&[(usize, usize)], usize),
) {
    let k = sigma.degree();
    let mut s = Search {
        k,
        rmax,
        transitive,
        exact,
        cycles_target: sigma.num_cycles(),
        rem: sigma.images().to_vec(),
        rem_cycles: sigma.num_cycles(),
        pre: (0..k).collect(),
        pre_cycles: k,
        uf: (0..k).collect(),
        components: k.max(1),
        stack: Vec::new(),
        visit,
    };
    s.run(0, 1, 0, usize::MAX);
}

/// All monotone factorisations of `sigma` of length `r`, in lexicographic order.
pub fn enumerate_monotone(sigma: &Permutation, r: usize) -> Result<Vec<MonotoneFactorisation>> {
    check_bounds(sigma.degree(), r)?;
    let mut out = Vec::new();
    search(sigma, r, false, true, &mut |st, _| {
        if st.len() == r {
            out.push(MonotoneFactorisation { transpositions: st.to_vec() });
        }
    });
    out.sort();
    Ok(out)
}

/// Entry `r` is the sum of `t^hive` over (transitive) monotone
/// factorisations of `sigma` of length `r`, for `r = 0..=rmax`.
pub fn weighted_counts(sigma: &Permutation, rmax: usize, transitive_only: bool) -> Result<Vec<QPoly>> {
    let k = sigma.degree();
    check_bounds(k, rmax)?;
    let mut counts = vec![vec![0u64; rmax + 2]; rmax + 1];
    search(sigma, rmax, transitive_only, false, &mut |st, hive| counts[st.len()][hive] += 1);
    Ok(counts
        .into_iter()
        .map(|row| QPoly::new(row.into_iter().map(|c| BigRational::from_integer(BigInt::from(c))).collect()))
        .collect())
}

/// The unique factorisation with strictly increasing `b_i`.
pub fn strictly_monotone(sigma: &Permutation) -> MonotoneFactorisation {
    let k = sigma.degree();
    let mut cur = sigma.clone();
    let mut rev = Vec::new();
    while let Some(m) = (0..k).rev().find(|&i| cur.apply(i) != i) {
        let a = cur.inverse().apply(m);
        cur = cur.compose(&Permutation::transposition(k, a, m));
        rev.push((a + 1, m + 1));
    }
    rev.reverse();
    MonotoneFactorisation { transpositions: rev }
}
