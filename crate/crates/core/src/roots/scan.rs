use std::ops::RangeInclusive;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::hurwitz::{monotone_h, Family};
use crate::scalar::qf;
use crate::symgroup::Partition;
use num_traits::Zero;

use super::{interlacing_verdicts, is_real_rooted, isolate_real_roots, refine_root, RootBox};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanChecks {
    pub real_rooted: bool,
    pub interlacing: bool,
}

impl Default for ScanChecks {
    fn default() -> Self {
        ScanChecks { real_rooted: true, interlacing: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub successor: Vec<usize>,
    pub weak: bool,
    pub strict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub g: u32,
    pub mu: Vec<usize>,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_rooted: Option<bool>,
    pub pairs: Vec<PairReport>,
    /// Isolating boxes, attached only to failing entries.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificate: Vec<RootBox>,
}

impl ScanEntry {
    pub fn passed(&self) -> bool {
        self.real_rooted != Some(false) && self.pairs.iter().all(|p| p.weak)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub family: Family,
    pub checks: ScanChecks,
    pub keys: usize,
    pub real_rooted_checks: usize,
    pub interlacing_checks: usize,
    pub strict_interlacing: usize,
    pub failures: Vec<ScanEntry>,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn successors(mu: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 0..mu.len() {
        let mut s = mu.to_vec();
        s[i] += 1;
        s.sort_unstable_by(|a, b| b.cmp(a));
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Real-rootedness and interlacing over every nonzero key in range, sorted by key.
pub fn conjecture_scan(
    family: Family,
    g_range: RangeInclusive<u32>,
    n_max: usize,
    weight_max: usize,
    checks: ScanChecks,
) -> ScanReport {
    let mut keys: Vec<(u32, Vec<usize>)> = Vec::new();
    for g in g_range {
        for w in 1..=weight_max {
            for p in Partition::all(w) {
                if p.len() <= n_max {
                    keys.push((g, p.parts().to_vec()));
                }
            }
        }
    }
    let entries: Vec<Option<ScanEntry>> = keys.par_iter().map(|(g, mu)| scan_key(family, *g, mu, checks)).collect();
    let entries: Vec<ScanEntry> = entries.into_iter().flatten().collect();
    let failures: Vec<ScanEntry> = entries.iter().filter(|e| !e.passed()).cloned().collect();
    ScanReport {
        family,
        checks,
        keys: entries.len(),
        real_rooted_checks: entries.iter().filter(|e| e.real_rooted.is_some()).count(),
        interlacing_checks: entries.iter().map(|e| e.pairs.len()).sum(),
        strict_interlacing: entries.iter().flat_map(|e| &e.pairs).filter(|p| p.strict).count(),
        failures,
        entries,
    }
}

fn scan_key(family: Family, g: u32, mu: &[usize], checks: ScanChecks) -> Option<ScanEntry> {
    let p = family.value(g, mu);
    if p.is_zero() {
        return None;
    }
    let real_rooted = if checks.real_rooted { is_real_rooted(&p).ok() } else { None };
    let mut pairs = Vec::new();
    if checks.interlacing {
        for s in successors(mu) {
            let qv = family.value(g, &s);
            let rep = match interlacing_verdicts(&p, &qv) {
                Ok(v) => PairReport { successor: s, weak: v.weak, strict: v.strict, error: None },
                Err(e) => PairReport { successor: s, weak: false, strict: false, error: Some(e.to_string()) },
            };
            pairs.push(rep);
        }
    }
    let mut entry = ScanEntry { g, mu: mu.to_vec(), value: p.pretty("t"), real_rooted, pairs, certificate: Vec::new() };
    if !entry.passed() {
        entry.certificate = isolate_real_roots(&p).unwrap_or_default();
    }
    Some(entry)
}

/// Conjectured limits `-(d-1-j)/j` for `j = 1..d-2`, then `0`.
pub fn largeg_limits(d: usize) -> Vec<BigRational> {
    let mut v: Vec<BigRational> = (1..d.saturating_sub(1)).map(|j| qf(-((d - 1 - j) as i64), j as i64)).collect();
    v.push(qf(0, 1));
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct LargeGRow {
    pub g: u32,
    pub roots: Vec<String>,
}

/// Refined roots of the monotone value at each genus, ascending, repeated by multiplicity.
pub fn largeg_root_table(g_list: &[u32], mu: &Partition, digits: usize) -> Result<Vec<LargeGRow>> {
    g_list
        .par_iter()
        .map(|&g| {
            let p = monotone_h(g, mu.parts());
            let mut roots = Vec::new();
            for bx in isolate_real_roots(&p)? {
                let s = refine_root(&p, &bx, digits)?;
                roots.extend(std::iter::repeat(s).take(bx.multiplicity));
            }
            Ok(LargeGRow { g, roots })
        })
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_rational;
    use num_traits::Signed;

    #[test]
    fn small_scans_pass() {
        let r = conjecture_scan(Family::Monotone, 0..=1, 3, 6, ScanChecks::default());
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.interlacing_checks > 0);
        let r = conjecture_scan(Family::Dessin, 0..=1, 2, 6, ScanChecks::default());
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn genus_zero_one_part_proven_range() {
        let r = conjecture_scan(Family::Monotone, 0..=0, 1, 12, ScanChecks::default());
        assert!(r.passed());
        assert_eq!(r.keys, 12);
    }

    #[test]
    fn limits() {
        assert_eq!(largeg_limits(7), vec![qf(-5, 1), qf(-2, 1), qf(-1, 1), qf(-1, 2), qf(-1, 5), qf(0, 1)]);
    }

    #[test]
    fn genus_ten_row() {
        let mu = Partition::new(vec![4, 2, 1]).unwrap();
        let rows = largeg_root_table(&[10], &mu, 12).unwrap();
        let expected = ["-5.041604716958", "-2.010612015758", "-1", "-0.4973609986225", "-0.1983495446670", "0"];
        assert_eq!(rows[0].roots.len(), 6);
        let tol = crate::scalar::qf(1, 10_000_000_000);
        for (got, want) in rows[0].roots.iter().zip(expected) {
            let d = parse_rational(got).unwrap() - parse_rational(want).unwrap();
            assert!(d.abs() < tol, "{got} vs {want}");
        }
        assert_eq!(rows[0].roots[2], "-1");
        assert_eq!(rows[0].roots[5], "0");
    }

    #[test]
    fn successors_dedup() {
        assert_eq!(successors(&[2, 2, 1]), vec![vec![3, 2, 1], vec![2, 2, 2]]);
    }
}
