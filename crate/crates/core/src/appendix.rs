//! Published reference tables, bundled as data, and a report that
//! recomputes every cell by the independent methods available for it.

use std::collections::BTreeMap;

use rayon::prelude::*;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{parse_mn, MNRational, UniPoly};
use crate::hurwitz::{connected_from_disconnected, one_point_h, times_mu, Family};
use crate::oracles::{dessin_connected_count, weighted_counts};
use crate::specrec::{build_curve, tr_table, TrEngine};
use crate::symgroup::{Partition, Permutation};
use crate::weingarten::{sw_character_table, sw_orthogonality_table, uw_leading};
use crate::QPoly;

const MONOTONE_G01: &str = include_str!("../data/monotone_g01.txt");
const MONOTONE_G23: &str = include_str!("../data/monotone_g23.txt");
const DESSIN_G01: &str = include_str!("../data/dessin_g01.txt");
const WEINGARTEN: &str = include_str!("../data/weingarten.txt");
const LARGEG_421: &str = include_str!("../data/largeg_421.txt");

/// Largest factorisation length the report hands to the brute-force oracle.
pub const ORACLE_LENGTH: usize = 8;

/// One cell `prod(mu) * H_g(mu)` (or `D_g`) of a published table.
#[derive(Clone, Debug, PartialEq)]
pub struct HurwitzCell {
    pub family: Family,
    pub g: u32,
    pub mu: Vec<usize>,
    pub times_mu: QPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeingartenCell {
    pub label: String,
    pub sigma: Permutation,
    pub unitary: MNRational,
    pub grassmannian: MNRational,
}

fn rows(src: &str) -> impl Iterator<Item = Vec<&str>> {
    src.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).map(|l| l.split('&').map(str::trim).collect())
}

fn hurwitz_table(src: &str, family: Family, genera: [u32; 2]) -> Result<Vec<HurwitzCell>> {
    let mut out = Vec::new();
    for r in rows(src) {
        let mu = Partition::parse(r[0])?.parts().to_vec();
        for (i, &g) in genera.iter().enumerate() {
            out.push(HurwitzCell { family, g, mu: mu.clone(), times_mu: UniPoly::parse_pretty(r[i + 1], "t")? });
        }
    }
    Ok(out)
}

/// Every Hurwitz-type cell: monotone for `g <= 3`, dessins for `g <= 1`.
pub fn hurwitz_cells() -> Vec<HurwitzCell> {
    let mut v = hurwitz_table(MONOTONE_G01, Family::Monotone, [0, 1]).expect("bundled data");
    v.extend(hurwitz_table(MONOTONE_G23, Family::Monotone, [2, 3]).expect("bundled data"));
    v.extend(hurwitz_table(DESSIN_G01, Family::Dessin, [0, 1]).expect("bundled data"));
    v
}

fn cycle_degree(s: &str) -> usize {
    s.chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(0) as usize
}

/// The Weingarten rows for `k <= 4`.
pub fn weingarten_cells() -> Vec<WeingartenCell> {
    rows(WEINGARTEN)
        .map(|r| WeingartenCell {
            label: r[0].to_string(),
            sigma: Permutation::parse(r[0], cycle_degree(r[0])).expect("bundled data"),
            unitary: parse_mn(r[1]).expect("bundled data"),
            grassmannian: parse_mn(r[2]).expect("bundled data"),
        })
        .collect()
}

/// Rows `(g, six decimal roots)` for `H_{g,3}(4,2,1)`, `g = 10..20`.
pub fn largeg_rows() -> Vec<(u32, Vec<String>)> {
    rows(LARGEG_421)
        .map(|r| (r[0].parse().expect("bundled data"), r[1..].iter().map(|s| s.to_string()).collect()))
        .collect()
}

/// Per-cell verdicts: method name to "agrees with the published value".
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CellReport {
    pub table: String,
    pub key: String,
    pub published: String,
    pub methods: BTreeMap<String, bool>,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.methods.len() >= 2 && self.methods.values().all(|&b| b)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AppendixReport {
    pub cells: Vec<CellReport>,
    pub mismatches: Vec<String>,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn mu_label(mu: &[usize]) -> String {
    let v: Vec<String> = mu.iter().map(|m| m.to_string()).collect();
    format!("({})", v.join(","))
}

fn tr_tables(family: Family, cells: &[&HurwitzCell]) -> Result<BTreeMap<(u32, usize), BTreeMap<Vec<usize>, QPoly>>> {
    let mut want: BTreeMap<(u32, usize), usize> = BTreeMap::new();
    for c in cells {
        let n = c.mu.len();
        if 2 * c.g as usize + n <= 5 {
            let e = want.entry((c.g, n)).or_default();
            *e = (*e).max(c.mu[0]);
        }
    }
    let mut engine = TrEngine::new(build_curve(family));
    let mut out = BTreeMap::new();
    for ((g, n), mu_max) in want {
        out.insert((g, n), tr_table(&mut engine, g, n, mu_max)?);
    }
    Ok(out)
}

fn hurwitz_reports(cells: &[HurwitzCell]) -> Result<Vec<CellReport>> {
    let mut tr = BTreeMap::new();
    for fam in [Family::Monotone, Family::Dessin] {
        let sub: Vec<&HurwitzCell> = cells.iter().filter(|c| c.family == fam).collect();
        tr.insert(fam, tr_tables(fam, &sub)?);
    }
    cells
        .par_iter()
        .map(|c| {
            let part = Partition::new(c.mu.clone())?;
            let same = |p: &QPoly| times_mu(p, &c.mu) == c.times_mu;
            let mut m = BTreeMap::new();
            m.insert("cut-and-join".to_string(), same(&c.family.value(c.g, &c.mu)));
            m.insert("characters".to_string(), same(&connected_from_disconnected(c.family, c.g as i64, &part)?));
            if let Some(v) = tr.get(&c.family).and_then(|t| t.get(&(c.g, c.mu.len()))).and_then(|t| t.get(&c.mu)) {
                m.insert("topological recursion".to_string(), same(v));
            }
            match c.family {
                Family::Monotone => {
                    let r = part.weight() + 2 * c.g as usize + c.mu.len() - 2;
                    if r <= ORACLE_LENGTH {
                        let counts = weighted_counts(&part.class_rep(), r, true)?;
                        m.insert("oracle".to_string(), counts[r] == c.times_mu);
                    }
                    if c.mu.len() == 1 {
                        m.insert("one-point".to_string(), same(&one_point_h(c.g, c.mu[0])));
                    }
                }
                Family::Dessin => {
                    m.insert("oracle".to_string(), same(&dessin_connected_count(&part, c.g as i64)?));
                }
            }
            Ok(CellReport {
                table: format!("{} g={}", c.family, c.g),
                key: mu_label(&c.mu),
                published: c.times_mu.pretty("t"),
                methods: m,
            })
        })
        .collect()
}

fn weingarten_reports(cells: &[WeingartenCell]) -> Result<Vec<CellReport>> {
    let kmax = cells.iter().map(|c| c.sigma.degree()).max().unwrap_or(0);
    let orth: Vec<_> = (0..=kmax).map(sw_orthogonality_table).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for c in cells {
        let k = c.sigma.degree();
        let ch = sw_character_table(k)?;
        let mut m = BTreeMap::new();
        m.insert("character".to_string(), ch.get(&c.sigma) == &c.grassmannian);
        m.insert("orthogonality".to_string(), orth[k].get(&c.sigma) == &c.grassmannian);
        out.push(CellReport {
            table: "Wg^S".into(),
            key: c.label.clone(),
            published: c.grassmannian.pretty(),
            methods: m,
        });
        let u = uw_leading(&c.sigma)?;
        let as_mn = MNRational::new(
            crate::exactalg::BiPoly::from_n_poly(u.num()),
            crate::exactalg::BiPoly::from_n_poly(u.den()),
        )?;
        let orth_top = {
            let w = orth[k].get(&c.sigma);
            let top = w.num().to_recursive().lead().cloned().unwrap_or_else(UniPoly::zero);
            let den = w.den().as_n_poly().ok_or_else(|| Error::Invalid("denominator depends on M".into()))?;
            MNRational::new(crate::exactalg::BiPoly::from_n_poly(&top), crate::exactalg::BiPoly::from_n_poly(&den))?
        };
        let mut m = BTreeMap::new();
        m.insert("character".to_string(), as_mn == c.unitary);
        m.insert("orthogonality".to_string(), orth_top == c.unitary);
        out.push(CellReport { table: "Wg^U".into(), key: c.label.clone(), published: c.unitary.pretty(), methods: m });
    }
    Ok(out)
}

/// Recompute every published cell.
pub fn report() -> Result<AppendixReport> {
    let mut cells = hurwitz_reports(&hurwitz_cells())?;
    cells.extend(weingarten_reports(&weingarten_cells())?);
    let mismatches = cells.iter().filter(|c| !c.passed()).map(|c| format!("{} {}", c.table, c.key)).collect();
    Ok(AppendixReport { cells, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_data_parses() {
        let h = hurwitz_cells();
        assert_eq!(h.len(), 2 * (22 + 15 + 22));
        assert_eq!(h[5].times_mu, QPoly::from_ints(&[0, 5, 5]));
        let w = weingarten_cells();
        assert_eq!(w.len(), 12);
        assert_eq!(w[0].sigma.degree(), 0);
        assert_eq!(w[3].sigma.cycle_type(), Partition::new(vec![2]).unwrap());
        let lg = largeg_rows();
        assert_eq!(lg.len(), 11);
        assert_eq!(lg[10].0, 20);
        assert_eq!(lg[10].1[0], "-5.001056436287");
    }
}
