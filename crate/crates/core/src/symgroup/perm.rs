//! Permutations in 0-based one-line notation.

use std::fmt;

use crate::error::{Error, Result};

use super::partition::Partition;

/// A permutation of `{0, .., k-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation { images: (0..k).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k || seen[x] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from 0-based cycles on `k` letters.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut used = vec![false; k];
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                if a >= k || used[a] {
                    return Err(Error::Invalid(format!("bad cycle {c:?}")));
                }
                used[a] = true;
                images[a] = c[(i + 1) % c.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition of 0-based letters `a != b`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(k);
        p.images.swap(a, b);
        p
    }

    /// Parse 1-based cycle notation like `(1 2 3)(4 5)` or `(12)(3)`.
    /// Letters without spaces are read as single digits.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid cycle notation '{s}'"));
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let body = open[..close].trim();
            let letters: Vec<usize> = if body.is_empty() {
                vec![]
            } else if body.contains(|c: char| c.is_whitespace() || c == ',') {
                body.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                body.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
            };
            if letters.iter().any(|&l| l == 0 || l > degree) {
                return Err(Error::DegreeMismatch(format!("letter out of range 1..{degree} in '{s}'")));
            }
            cycles.push(letters.into_iter().map(|l| l - 1).collect::<Vec<_>>());
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles).map_err(|_| bad())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in composition");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for s in 0..k {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.images[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut n = 0;
        for s in 0..k {
            if !seen[s] {
                n += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = self.images[x];
                }
            }
        }
        n
    }

    /// Whether letters `a` and `b` lie in the same cycle.
    pub fn same_cycle(&self, a: usize, b: usize) -> bool {
        let mut x = self.images[a];
        loop {
            if x == b {
                return true;
            }
            if x == a {
                return false;
            }
            x = self.images[x];
        }
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len()).collect()).unwrap()
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if (self.degree() - self.num_cycles()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Restriction to the first `k-1` letters; requires the last letter fixed.
    pub fn restrict(&self) -> Option<Self> {
        let k = self.degree();
        if k == 0 || self.images[k - 1] != k - 1 {
            return None;
        }
        Some(Permutation { images: self.images[..k - 1].to_vec() })
    }

    /// Extension by a fixed last letter.
    pub fn extend(&self) -> Self {
        let mut v = self.images.clone();
        v.push(v.len());
        Permutation { images: v }
    }

    /// Position of this permutation in the lexicographic order of `S_k`.
    pub fn rank(&self) -> usize {
        let k = self.degree();
        let mut r = 0;
        for i in 0..k {
            let smaller = self.images[i + 1..].iter().filter(|&&x| x < self.images[i]).count();
            r = r * (k - i) + smaller;
        }
        r
    }

    pub fn unrank(k: usize, mut r: usize) -> Self {
        let mut digits = vec![0; k];
        for i in (0..k).rev() {
            let base = k - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut avail: Vec<usize> = (0..k).collect();
        Permutation { images: digits.into_iter().map(|d| avail.remove(d)).collect() }
    }

    /// All permutations of `k` letters in lexicographic order.
    pub fn all(k: usize) -> impl Iterator<Item = Permutation> {
        let n: usize = (1..=k).product();
        (0..n).map(move |r| Self::unrank(k, r))
    }

    /// 1-based cycle notation omitting fixed points, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cs: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cs.is_empty() {
            return "()".into();
        }
        cs.iter()
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")))
            .collect()
    }

    /// Compact 1-based notation including fixed points, e.g. `(12)(3)`.
    pub fn compact_label(&self) -> String {
        if self.degree() == 0 {
            return "()".into();
        }
        let sep = if self.degree() > 9 { " " } else { "" };
        self.cycles()
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(sep)))
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}
