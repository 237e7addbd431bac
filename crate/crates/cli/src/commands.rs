use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use anyhow::{Context, Result};
use serde_json::{json, Map, Value};

use deformed_hurwitz::appendix;
use deformed_hurwitz::exactalg::{BiPoly, MNRational};
use deformed_hurwitz::hurwitz::{times_mu, Family};
use deformed_hurwitz::oracles::{dessin_connected_count, dessin_disconnected_count, enumerate_monotone, weighted_counts};
use deformed_hurwitz::roots::{conjecture_scan, largeg_root_table, ScanChecks};
use deformed_hurwitz::scalar::rational_to_string;
use deformed_hurwitz::specrec::{build_curve, tr_table, verify_w11, TrEngine};
use deformed_hurwitz::symgroup::{Partition, Permutation};
use deformed_hurwitz::weingarten::{
    factored_string, sw_character_table, sw_orthogonality_table, uw_leading, WeingartenTable,
};
use deformed_hurwitz::QPoly;

use crate::{Cli, Command, Format, Method, OracleCommand, RootsCommand};

pub const MAX_GENUS: u32 = 30;
pub const MAX_WEIGHT: usize = 20;
pub const MAX_SCAN_GENUS: u32 = 5;
pub const MAX_SCAN_WEIGHT: usize = 12;
pub const MAX_ROOT_WEIGHT: usize = 12;
pub const MAX_DIGITS: usize = 40;
pub const MAX_TR_ORDER: usize = 8;

/// A problem with the request itself (exit status 2).
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    use deformed_hurwitz::Error as E;
    if e.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match e.downcast_ref::<E>() {
        Some(
            E::Parse(_)
            | E::DegreeMismatch(_)
            | E::WeightMismatch(_)
            | E::DegreeTooLarge(_)
            | E::BoundExceeded(_)
            | E::DepthExceeded(_)
            | E::Invalid(_),
        ) => 2,
        _ => 1,
    }
}

/// The artifact plus any verification failures (exit status 1).
pub struct Outcome {
    pub artifact: String,
    pub problems: Vec<String>,
}

impl Outcome {
    fn ok(artifact: String) -> Self {
        Outcome { artifact, problems: Vec::new() }
    }
}

pub fn emit(cli: &Cli, artifact: &str) -> Result<()> {
    match &cli.output {
        Some(p) => std::fs::write(p, artifact).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(artifact.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn format_for(cli: &Cli, allowed: &[Format]) -> Result<Format> {
    let f = cli.format.unwrap_or(allowed[0]);
    if !allowed.contains(&f) {
        return usage(format!("format {f:?} is not available for this command"));
    }
    Ok(f)
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Descending text form, e.g. `5t^2+5t`.
pub fn poly_string(p: &QPoly) -> String {
    p.pretty("t")
}

/// Ascending coefficients as exact strings.
pub fn coeff_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let p = Partition::parse(s).map_err(|e| Usage(e.to_string()))?;
    if p.is_empty() {
        return usage("parts must be nonempty");
    }
    Ok(p.parts().to_vec())
}

/// `a..b`, `a..=b`, `a-b`, `a,b,c` or `a`; `a..b` with `a > b` is empty.
pub fn parse_genus_list(s: &str) -> Result<Vec<u32>> {
    let bad = || Usage(format!("invalid genus list '{s}'"));
    let num = |x: &str| x.trim().parse::<u32>().map_err(|_| bad());
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        return Ok((a..=b).collect());
    }
    if let Some((a, b)) = s.split_once('-') {
        return Ok((num(a)?..=num(b)?).collect());
    }
    let mut v = s.split(',').filter(|x| !x.trim().is_empty()).map(num).collect::<std::result::Result<Vec<_>, _>>()?;
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

fn mu_key(mu: &[usize]) -> String {
    let v: Vec<String> = mu.iter().map(|m| m.to_string()).collect();
    format!("({})", v.join(","))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Hurwitz(a) => hurwitz(cli, a.family.into(), a.genus, &a.parts, a.times_mu),
        Command::Dessins(a) => hurwitz(cli, Family::Dessin, a.genus, &a.parts, a.times_mu),
        Command::Weingarten(a) => weingarten(cli, a.k, a.method),
        Command::Oracle(o) => oracle(cli, o),
        Command::Roots(r) => roots(cli, r),
        Command::Tr(a) => tr(cli, a.curve.into(), &a.gn, a.orders, a.raw),
        Command::ReportAppendix => report_appendix(cli),
        Command::Plot(a) => crate::plot::plot(cli, a),
    }
}

fn hurwitz(cli: &Cli, family: Family, g: u32, parts: &str, tm: bool) -> Result<Outcome> {
    let fmt = format_for(cli, &[Format::Json, Format::Csv])?;
    let mu = parse_parts(parts)?;
    if g > MAX_GENUS || mu.iter().sum::<usize>() > MAX_WEIGHT {
        return usage(format!("desk-scale bounds are genus <= {MAX_GENUS}, |mu| <= {MAX_WEIGHT}"));
    }
    let mut v = family.value(g, &mu);
    if tm {
        v = times_mu(&v, &mu);
    }
    let artifact = match fmt {
        Format::Json => to_json(&json!({
            "family": family.to_string(),
            "genus": g,
            "parts": mu,
            "times_mu": tm,
            "value": poly_string(&v),
            "coefficients": coeff_strings(&v),
        })),
        _ => to_csv(
            &["family", "genus", "parts", "times_mu", "value", "coefficients"],
            &[vec![
                family.to_string(),
                g.to_string(),
                mu_key(&mu),
                tm.to_string(),
                poly_string(&v),
                coeff_strings(&v).join(" "),
            ]],
        )?,
    };
    Ok(Outcome::ok(artifact))
}

fn unitary_string(sigma: &Permutation) -> Result<String> {
    let u = uw_leading(sigma)?;
    let mn = MNRational::new(BiPoly::from_n_poly(u.num()), BiPoly::from_n_poly(u.den()))?;
    Ok(factored_string(&mn))
}

fn weingarten(cli: &Cli, k: usize, method: Method) -> Result<Outcome> {
    let fmt = format_for(cli, &[Format::Json, Format::Csv])?;
    let char_t = match method {
        Method::Orthogonality => None,
        _ => Some(sw_character_table(k)?),
    };
    let orth_t = match method {
        Method::Character => None,
        _ => Some(sw_orthogonality_table(k)?),
    };
    let table: &WeingartenTable = char_t.as_deref().or(orth_t.as_ref()).expect("one method");
    let mut problems = Vec::new();
    if let (Some(a), Some(b)) = (&char_t, &orth_t) {
        for cls in a.classes() {
            if a.values[&cls] != b.values[&cls] {
                problems.push(format!("methods disagree on class {}", cls.to_csv()));
            }
        }
    }
    let mut rows = Vec::new();
    for cls in table.classes() {
        let sigma = cls.class_rep();
        rows.push((sigma.compact_label(), factored_string(&table.values[&cls]), unitary_string(&sigma)?));
    }
    let method_name = match method {
        Method::Character => "character",
        Method::Orthogonality => "orthogonality",
        Method::Both => "both",
    };
    let artifact = match fmt {
        Format::Json => {
            let mut sw = Map::new();
            let mut uw = Map::new();
            for (l, s, u) in &rows {
                sw.insert(l.clone(), Value::String(s.clone()));
                uw.insert(l.clone(), Value::String(u.clone()));
            }
            to_json(&json!({ "k": k, "method": method_name, "table": sw, "unitary": uw }))
        }
        _ => to_csv(
            &["sigma", "Wg^S", "Wg^U"],
            &rows.into_iter().map(|(l, s, u)| vec![l, s, u]).collect::<Vec<_>>(),
        )?,
    };
    Ok(Outcome { artifact, problems })
}

fn oracle(cli: &Cli, o: &OracleCommand) -> Result<Outcome> {
    format_for(cli, &[Format::Json])?;
    match o {
        OracleCommand::Monotone { perm, degree, length, transitive, list } => {
            let sigma = Permutation::parse(perm, *degree)?;
            let counts = weighted_counts(&sigma, *length, *transitive)?;
            let mu = sigma.cycle_type();
            let n = mu.len();
            let mut problems = Vec::new();
            let mut rows = Vec::new();
            for (r, c) in counts.iter().enumerate() {
                let mut row = Map::new();
                row.insert("length".into(), json!(r));
                row.insert("value".into(), json!(poly_string(c)));
                row.insert("coefficients".into(), json!(coeff_strings(c)));
                // r = |mu| + 2g - 2 + n
                let twice_g = (r + 2).checked_sub(mu.weight() + n);
                if *transitive && *degree > 0 && twice_g.is_some_and(|x| x % 2 == 0) {
                    let g = (twice_g.unwrap() / 2) as u32;
                    let expect = times_mu(&Family::Monotone.value(g, mu.parts()), mu.parts());
                    let ok = expect == *c;
                    if !ok {
                        problems.push(format!("length {r}: oracle differs from cut-and-join at genus {g}"));
                    }
                    row.insert("genus".into(), json!(g));
                    row.insert("matches_cut_and_join".into(), json!(ok));
                }
                rows.push(Value::Object(row));
            }
            let mut out = json!({
                "sigma": sigma.to_cycle_string(),
                "degree": degree,
                "transitive": transitive,
                "counts": rows,
            });
            if *list {
                let fs: Vec<Value> = enumerate_monotone(&sigma, *length)?
                    .iter()
                    .map(|f| {
                        let ts: Vec<String> = f.transpositions.iter().map(|(a, b)| format!("({a} {b})")).collect();
                        json!({ "transpositions": ts.join(""), "hive": f.hive() })
                    })
                    .collect();
                out["factorisations"] = Value::Array(fs);
            }
            Ok(Outcome { artifact: to_json(&out), problems })
        }
        OracleCommand::Dessin { parts, genus, disconnected } => {
            let mu = Partition::new(parse_parts(parts)?)?;
            let v = if *disconnected {
                dessin_disconnected_count(&mu, *genus)?
            } else {
                dessin_connected_count(&mu, *genus)?
            };
            let mut out = json!({
                "parts": mu.parts(),
                "genus": genus,
                "connected": !disconnected,
                "value": poly_string(&v),
                "coefficients": coeff_strings(&v),
            });
            let mut problems = Vec::new();
            if !disconnected && *genus >= 0 {
                let ok = Family::Dessin.value(*genus as u32, mu.parts()) == v;
                if !ok {
                    problems.push("oracle differs from cut-and-join".to_string());
                }
                out["matches_cut_and_join"] = json!(ok);
            }
            Ok(Outcome { artifact: to_json(&out), problems })
        }
    }
}

fn roots(cli: &Cli, r: &RootsCommand) -> Result<Outcome> {
    match r {
        RootsCommand::Scan { family, genus, n_max, weight_max, no_real_rooted, no_interlacing, brief } => {
            format_for(cli, &[Format::Json])?;
            let gs = parse_genus_list(genus)?;
            if gs.windows(2).any(|w| w[1] != w[0] + 1) {
                return usage("scan genera must be consecutive");
            }
            if gs.last().is_some_and(|&g| g > MAX_SCAN_GENUS) || *weight_max > MAX_SCAN_WEIGHT {
                return usage(format!("scan bounds are genus <= {MAX_SCAN_GENUS}, weight <= {MAX_SCAN_WEIGHT}"));
            }
            #[allow(clippy::reversed_empty_ranges)]
            let range = match (gs.first(), gs.last()) {
                (Some(&a), Some(&b)) => a..=b,
                _ => 1..=0,
            };
            let checks = ScanChecks { real_rooted: !no_real_rooted, interlacing: !no_interlacing };
            let mut report = conjecture_scan((*family).into(), range, *n_max, *weight_max, checks);
            if *brief {
                report.entries.clear();
            }
            let problems = report
                .failures
                .iter()
                .map(|f| format!("counterexample: g={} mu={}", f.g, mu_key(&f.mu)))
                .collect();
            let mut v = serde_json::to_value(&report)?;
            v["passed"] = json!(report.passed());
            Ok(Outcome { artifact: to_json(&v), problems })
        }
        RootsCommand::Table { parts, genus, digits } => {
            let fmt = format_for(cli, &[Format::Json, Format::Csv])?;
            let mu = Partition::new(parse_parts(parts)?)?;
            let gs = parse_genus_list(genus)?;
            if gs.is_empty() {
                return usage("empty genus range");
            }
            if gs.iter().any(|&g| g > MAX_GENUS) || mu.weight() > MAX_ROOT_WEIGHT || *digits > MAX_DIGITS {
                return usage(format!(
                    "bounds are genus <= {MAX_GENUS}, |mu| <= {MAX_ROOT_WEIGHT}, digits <= {MAX_DIGITS}"
                ));
            }
            let rows = largeg_root_table(&gs, &mu, *digits)?;
            let artifact = match fmt {
                Format::Json => to_json(&json!({
                    "family": "monotone",
                    "parts": mu.parts(),
                    "digits": digits,
                    "note": format!("decimal approximations to {digits} places of exactly isolated roots"),
                    "rows": serde_json::to_value(&rows)?,
                })),
                _ => {
                    let width = rows.iter().map(|r| r.roots.len()).max().unwrap_or(0);
                    let names: Vec<String> = (1..=width).map(|i| format!("alpha_{i}~{digits}dp")).collect();
                    let mut header = vec!["g"];
                    header.extend(names.iter().map(String::as_str));
                    let body: Vec<Vec<String>> = rows
                        .iter()
                        .map(|r| std::iter::once(r.g.to_string()).chain(r.roots.iter().cloned()).collect())
                        .collect();
                    to_csv(&header, &body)?
                }
            };
            Ok(Outcome::ok(artifact))
        }
    }
}

fn tr(cli: &Cli, family: Family, gn: &str, orders: usize, raw: bool) -> Result<Outcome> {
    format_for(cli, &[Format::Json])?;
    let (g, n) = match gn.split_once(',').map(|(a, b)| (a.trim().parse::<u32>(), b.trim().parse::<usize>())) {
        Some((Ok(g), Ok(n))) => (g, n),
        _ => return usage(format!("--gn expects 'g,n', got '{gn}'")),
    };
    if orders == 0 || orders > MAX_TR_ORDER {
        return usage(format!("--orders must be in 1..={MAX_TR_ORDER}"));
    }
    let mut engine = TrEngine::new(build_curve(family));
    let table = tr_table(&mut engine, g, n, orders)?;
    let mut tab = Map::new();
    for (mu, v) in &table {
        tab.insert(mu_key(mu), Value::String(poly_string(v)));
    }
    let mut out = json!({ "curve": family.to_string(), "g": g, "n": n, "orders": orders, "table": tab });
    if raw {
        out["raw"] = json!(match (g, n) {
            (0, 1) => "y(z1) dx(z1)".to_string(),
            (0, 2) => "1/(z1-z2)^2".to_string(),
            _ => engine.correlator(g, n)?.raw_string(),
        });
    }
    let mut problems = Vec::new();
    if (g, n) == (1, 1) && family == Family::Monotone {
        let r = verify_w11(&mut engine)?;
        if !r.passed() {
            problems.push("w11 closed form check failed".to_string());
        }
        out["w11"] = serde_json::to_value(&r)?;
    }
    Ok(Outcome { artifact: to_json(&out), problems })
}

fn report_appendix(cli: &Cli) -> Result<Outcome> {
    format_for(cli, &[Format::Json])?;
    let r = appendix::report()?;
    let mut by_table: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for c in &r.cells {
        let e = by_table.entry(c.table.clone()).or_default();
        e.0 += 1;
        e.1 += c.passed() as usize;
    }
    let summary: Map<String, Value> =
        by_table.into_iter().map(|(k, (n, ok))| (k, json!({ "cells": n, "matched": ok }))).collect();
    let mut v = serde_json::to_value(&r)?;
    v["summary"] = Value::Object(summary);
    v["passed"] = json!(r.passed());
    let problems = r.mismatches.iter().map(|m| format!("mismatch: {m}")).collect();
    Ok(Outcome { artifact: to_json(&v), problems })
}
