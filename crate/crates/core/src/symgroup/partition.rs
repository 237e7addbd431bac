//! Integer partitions and Young-diagram data.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

use super::perm::Permutation;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parse `"3,2,1"`, `"(3,2,1)"` or `"3 2 1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("invalid partition '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m[i]` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// `z_mu = prod_i i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=m {
                z *= BigInt::from(i) * BigInt::from(j);
            }
        }
        z
    }

    /// Size of the conjugacy class of this cycle type.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight()) / self.z()
    }

    pub fn product_of_parts(&self) -> BigInt {
        self.parts.iter().map(|&p| BigInt::from(p)).product()
    }

    /// Cells `(row, col)` (0-based) in reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j))).collect()
    }

    /// Contents `col - row` of all cells.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().into_iter().map(|(i, j)| j as i64 - i as i64).collect()
    }

    pub fn conjugate(&self) -> Self {
        let n = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (0..n).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let c = self.conjugate();
        self.cells().into_iter().map(|(i, j)| self.parts[i] - j + c.parts[j] - i - 1).collect()
    }

    /// Dimension of the irreducible representation, by the hook length formula.
    pub fn dimension(&self) -> BigInt {
        let h: BigInt = self.hook_lengths().into_iter().map(BigInt::from).product();
        factorial(self.weight()) / h
    }

    /// Permutation with this cycle type whose cycles are consecutive runs
    /// of letters, longest first: `(2,1)` gives `(12)(3)`.
    pub fn class_rep(&self) -> Permutation {
        let mut cycles = Vec::new();
        let mut start = 0;
        for &p in &self.parts {
            cycles.push((start..start + p).collect::<Vec<_>>());
            start += p;
        }
        Permutation::from_cycles(start, &cycles).unwrap()
    }

    /// All partitions of `k` in reverse lexicographic order.
    pub fn all(k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(k, k, &mut cur, &mut out);
        out
    }

    /// Comma separated parts, e.g. `3,2,1`.
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Ordered list of partitions of `k` (reverse lexicographic).
pub fn partitions_of(k: usize) -> Vec<Partition> {
    Partition::all(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        let v: Vec<_> = Partition::all(4).into_iter().map(|x| x.parts).collect();
        assert_eq!(v, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        let counts: Vec<_> = (0..=10).map(|k| Partition::all(k).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn young_data() {
        assert_eq!(p(&[2, 1]).dimension(), BigInt::from(2));
        assert_eq!(p(&[3, 2]).dimension(), BigInt::from(5));
        assert_eq!(p(&[2, 1]).contents(), vec![0, 1, -1]);
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(p(&[2, 2, 1]).class_size(), BigInt::from(15));
        assert_eq!(p(&[2, 2]).class_rep().compact_label(), "(12)(34)");
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for k in 0..9 {
            let s: BigInt = Partition::all(k).iter().map(|l| l.class_size()).sum();
            assert_eq!(s, factorial(k));
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("(1,3,2)").unwrap(), p(&[3, 2, 1]));
        assert_eq!(Partition::parse("4 2").unwrap(), p(&[4, 2]));
        assert!(Partition::parse("2,0").is_err());
    }
}
