//! End-to-end acceptance criteria. Runs without the libtest harness so the
//! PASS/FAIL lines are always printed.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use deformed_hurwitz::appendix::{hurwitz_cells, largeg_rows, weingarten_cells};
use deformed_hurwitz::exactalg::{BiPoly, MNRational, UniPoly};
use deformed_hurwitz::hurwitz::{
    dessin_d, disconnected_table, genus1_relation_holds, lambda_structure, monotone_h, one_point_h, times_mu, Family,
};
use deformed_hurwitz::oracles::{dessin_connected_count, dessin_disconnected_count, weighted_counts};
use deformed_hurwitz::roots::{conjecture_scan, largeg_root_table, ScanChecks};
use deformed_hurwitz::scalar::{parse_rational, q, qf};
use deformed_hurwitz::specrec::{build_curve, tr_table, verify_w11, TrEngine};
use deformed_hurwitz::symgroup::{
    dimension_square_sum_check, first_orthogonality_check, jucys_cycle_identity_check, Partition, Permutation,
};
use deformed_hurwitz::weingarten::{
    jm_weingarten_identity_check, large_n_check, sw_character_table, sw_orthogonality_table,
};
use deformed_hurwitz::QPoly;

type Verdict = Result<String, String>;

fn check(cond: bool, ok: impl Into<String>, bad: impl Into<String>) -> Verdict {
    if cond {
        Ok(ok.into())
    } else {
        Err(bad.into())
    }
}

fn tpoly(c: &[i64]) -> QPoly {
    QPoly::from_ints(c)
}

fn leading_in_m(w: &MNRational) -> MNRational {
    let top = w.num().to_recursive().lead().cloned().unwrap_or_else(UniPoly::zero);
    MNRational::new(BiPoly::from_n_poly(&top), w.den().clone()).unwrap()
}

fn c1_monotone() -> Verdict {
    let cells: Vec<_> = hurwitz_cells().into_iter().filter(|c| c.family == Family::Monotone).collect();
    // spot checks typed in by hand against the bundled data
    let spot = [(1u32, vec![3usize], tpoly(&[0, 5, 5])), (3, vec![2, 2, 1], tpoly(&[0, 244464, 1087056, 1087056, 244464]))];
    for (g, mu, v) in &spot {
        if !cells.iter().any(|c| c.g == *g && c.mu == *mu && c.times_mu == *v) {
            return Err(format!("bundled data lacks g={g} {mu:?}"));
        }
    }
    let bad: Vec<String> = cells
        .iter()
        .filter(|c| times_mu(&monotone_h(c.g, &c.mu), &c.mu) != c.times_mu)
        .map(|c| format!("g={} {:?}", c.g, c.mu))
        .collect();
    check(
        cells.len() == 74 && bad.is_empty(),
        format!("{} cells, g <= 3", cells.len()),
        format!("{} cells, mismatches {bad:?}", cells.len()),
    )
}

fn c2_dessin() -> Verdict {
    let cells: Vec<_> = hurwitz_cells().into_iter().filter(|c| c.family == Family::Dessin).collect();
    if !cells.iter().any(|c| c.g == 0 && c.mu == [1] && c.times_mu == tpoly(&[0, 1])) {
        return Err("seed cell missing".into());
    }
    let bad: Vec<String> = cells
        .iter()
        .filter(|c| times_mu(&dessin_d(c.g, &c.mu), &c.mu) != c.times_mu)
        .map(|c| format!("g={} {:?}", c.g, c.mu))
        .collect();
    check(
        cells.len() == 44 && bad.is_empty(),
        format!("{} cells, g <= 1", cells.len()),
        format!("{} cells, mismatches {bad:?}", cells.len()),
    )
}

fn c3_weingarten() -> Verdict {
    let cells = weingarten_cells();
    let mut bad = Vec::new();
    let orth: Vec<_> = (0..=5).map(|k| sw_orthogonality_table(k).unwrap()).collect();
    for c in &cells {
        let k = c.sigma.degree();
        let ch = sw_character_table(k).unwrap();
        let (a, b) = (ch.get(&c.sigma), orth[k].get(&c.sigma));
        if a != &c.grassmannian || b != &c.grassmannian {
            bad.push(format!("Wg^S {}", c.label));
        }
        if leading_in_m(a) != c.unitary || leading_in_m(b) != c.unitary {
            bad.push(format!("Wg^U {}", c.label));
        }
    }
    for (k, o) in orth.iter().enumerate() {
        if *sw_character_table(k).unwrap() != *o {
            bad.push(format!("methods differ at k={k}"));
        }
    }
    check(
        cells.len() == 12 && bad.is_empty(),
        format!("{} classes k <= 4 by both methods; methods agree for k <= 5", cells.len()),
        format!("{bad:?}"),
    )
}

fn c4_oracle_monotone() -> Verdict {
    const R: usize = 8;
    let mut n_checked = 0;
    let mut bad = Vec::new();
    for d in 1..=R + 1 {
        for mu in Partition::all(d) {
            let n = mu.len();
            if d + n > R + 2 {
                continue;
            }
            let counts = weighted_counts(&mu.class_rep(), R, true).unwrap();
            for (r, c) in counts.iter().enumerate() {
                // r = |mu| + 2g - 2 + n
                let expect = match (r + 2).checked_sub(d + n) {
                    Some(x) if x % 2 == 0 => times_mu(&monotone_h((x / 2) as u32, mu.parts()), mu.parts()),
                    _ => QPoly::zero(),
                };
                n_checked += 1;
                if *c != expect {
                    bad.push(format!("{:?} r={r}", mu.parts()));
                }
            }
        }
    }
    check(bad.is_empty(), format!("{n_checked} (mu, length) pairs"), format!("{bad:?}"))
}

/// Set partitions of `0..n`, as block lists.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    fn rec(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            rec(i + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        rec(i + 1, n, cur, out);
        cur.pop();
    }
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// Disconnected count assembled from connected cut-and-join values, with
/// `sum (2 - 2 g_B) = 2 - 2g`.
fn disconnected_from_connected(mu: &[usize], g: i64) -> QPoly {
    let mut total = QPoly::zero();
    for blocks in set_partitions(mu.len()) {
        let b = blocks.len() as i64;
        // sum g_B = g - 1 + b
        let target = g - 1 + b;
        if target < 0 {
            continue;
        }
        let parts: Vec<Vec<usize>> = blocks.iter().map(|bl| bl.iter().map(|&i| mu[i]).collect()).collect();
        let mut acc = QPoly::zero();
        let mut gs = vec![0i64; blocks.len()];
        loop {
            if gs.iter().sum::<i64>() == target {
                let mut prod = QPoly::from_ints(&[1]);
                for (p, &gb) in parts.iter().zip(&gs) {
                    prod = &prod * &dessin_d(gb as u32, p);
                }
                acc = &acc + &prod;
            }
            let mut i = 0;
            while i < gs.len() {
                gs[i] += 1;
                if gs[i] <= target {
                    break;
                }
                gs[i] = 0;
                i += 1;
            }
            if i == gs.len() {
                break;
            }
        }
        total = &total + &acc;
    }
    total
}

fn c5_oracle_dessin() -> Verdict {
    let mut n_checked = 0;
    let mut bad = Vec::new();
    for d in 1..=6 {
        for mu in Partition::all(d) {
            let n = mu.len() as i64;
            for g in 0..=(d as i64) {
                n_checked += 1;
                if dessin_connected_count(&mu, g).unwrap() != dessin_d(g as u32, mu.parts()) {
                    bad.push(format!("connected {:?} g={g}", mu.parts()));
                }
            }
            for g in (1 - n)..=(d as i64) {
                n_checked += 1;
                let o = dessin_disconnected_count(&mu, g).unwrap();
                if o != disconnected_from_connected(mu.parts(), g)
                    || o != disconnected_table(Family::Dessin, g, &mu).unwrap()
                {
                    bad.push(format!("disconnected {:?} g={g}", mu.parts()));
                }
            }
        }
    }
    check(bad.is_empty(), format!("{n_checked} (mu, genus) cells, |mu| <= 6"), format!("{bad:?}"))
}

fn c6_large_n() -> Verdict {
    let mut n = 0;
    let mut bad = Vec::new();
    for k in 0..=5 {
        for sigma in Permutation::all(k) {
            n += 1;
            if !large_n_check(&sigma, 6).unwrap() {
                bad.push(sigma.to_cycle_string());
            }
        }
    }
    check(bad.is_empty(), format!("{n} permutations, rmax = 6"), format!("{bad:?}"))
}

fn c7_tr() -> Verdict {
    let pairs = [(0u32, 1usize), (0, 2), (0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 1)];
    let mut n = 0;
    let mut bad = Vec::new();
    for fam in [Family::Monotone, Family::Dessin] {
        let mut e = TrEngine::new(build_curve(fam));
        for (g, k) in pairs {
            let table = tr_table(&mut e, g, k, 6).map_err(|e| e.to_string())?;
            for (mu, v) in &table {
                n += 1;
                if *v != fam.value(g, mu) {
                    bad.push(format!("{fam} g={g} {mu:?}"));
                }
            }
        }
    }
    let mut e = TrEngine::new(build_curve(Family::Monotone));
    let w = verify_w11(&mut e).map_err(|e| e.to_string())?;
    if !w.passed() {
        bad.push(format!("w11 {w:?}"));
    }
    check(
        bad.is_empty(),
        format!(
            "{n} coefficients on both curves; w11 closed form equals the recursion with y -> -y \
             (table convention sign {}), ODE residuals vanish",
            w.table_convention_sign
        ),
        format!("{bad:?}"),
    )
}

fn c8_one_point() -> Verdict {
    let mut bad = Vec::new();
    for g in 0..=5 {
        for d in 1..=12 {
            if one_point_h(g, d) != monotone_h(g, &[d]) {
                bad.push(format!("g={g} d={d}"));
            }
        }
    }
    for d in 3..=12 {
        if !genus1_relation_holds(d) {
            bad.push(format!("genus-one relation d={d}"));
        }
    }
    check(bad.is_empty(), "g <= 5, d <= 12; genus-one relation 3 <= d <= 12", format!("{bad:?}"))
}

fn c9_lambda() -> Verdict {
    let mut n = 0;
    let mut bad = Vec::new();
    for g in 0..=3 {
        for d in 2..=10 {
            for mu in Partition::all(d) {
                let h = monotone_h(g, mu.parts());
                n += 1;
                let r = lambda_structure(&h, d);
                if h.is_zero() || !r.all() || h.degree() != Some(d - 1) {
                    bad.push(format!("g={g} {:?} {r:?}", mu.parts()));
                }
            }
        }
    }
    check(bad.is_empty(), format!("{n} values"), format!("{bad:?}"))
}

/// `sum_i (1/m) C(m,i) C(m,i-1) t^i`, with `Nar_0 = 1`.
fn narayana_oracle(m: usize) -> QPoly {
    if m == 0 {
        return tpoly(&[1]);
    }
    let binom = |n: usize, k: usize| -> BigInt { (0..k).fold(BigInt::from(1), |a, i| a * (n - i) / (i + 1)) };
    let mut c = vec![BigRational::zero(); m + 1];
    for (i, ci) in c.iter_mut().enumerate().skip(1) {
        *ci = BigRational::new(binom(m, i) * binom(m, i - 1), BigInt::from(m));
    }
    QPoly::new(c)
}

fn c10_narayana() -> Verdict {
    let bad: Vec<usize> =
        (0..=12).filter(|&m| times_mu(&monotone_h(0, &[m + 1]), &[m + 1]) != narayana_oracle(m)).collect();
    let spot = narayana_oracle(3) == tpoly(&[0, 1, 3, 1]);
    check(bad.is_empty() && spot, "mu <= 12", format!("{bad:?}"))
}

fn c11_scans() -> Verdict {
    let checks = ScanChecks { real_rooted: true, interlacing: true };
    let m = conjecture_scan(Family::Monotone, 0..=1, 3, 10, checks);
    let d = conjecture_scan(Family::Dessin, 0..=1, 2, 8, checks);
    check(
        m.passed() && d.passed(),
        format!(
            "monotone {} keys / {} pairs, dessin {} keys / {} pairs",
            m.keys, m.interlacing_checks, d.keys, d.interlacing_checks
        ),
        format!("failures: monotone {:?} dessin {:?}", m.failures, d.failures),
    )
}

fn c12_large_g() -> Verdict {
    let golden = largeg_rows();
    let gs: Vec<u32> = (10..=20).collect();
    let mu = Partition::new(vec![4, 2, 1]).unwrap();
    let rows = largeg_root_table(&gs, &mu, 14).map_err(|e| e.to_string())?;
    let tol = qf(1, 10_000_000_000);
    let g20 = golden.iter().find(|r| r.0 == 20).ok_or("no g=20 row")?;
    let ours20 = rows.iter().find(|r| r.g == 20).ok_or("no g=20 computed")?;
    if ours20.roots.len() != 6 {
        return Err(format!("{} roots at g=20", ours20.roots.len()));
    }
    let mut worst = BigRational::zero();
    for (a, b) in ours20.roots.iter().zip(&g20.1) {
        let diff = (parse_rational(a).unwrap() - parse_rational(b).unwrap()).abs();
        if diff > worst {
            worst = diff;
        }
    }
    let alpha1: Vec<BigRational> = rows.iter().map(|r| parse_rational(&r.roots[0]).unwrap()).collect();
    let increasing = alpha1.windows(2).all(|w| w[0] < w[1]);
    let below = alpha1.iter().all(|a| *a < q(-5));
    check(
        worst <= tol && increasing && below,
        "g = 20 row within 1e-10; alpha_1 increases toward -5 from below for g = 10..20",
        format!("max deviation {worst}, increasing {increasing}, below {below}"),
    )
}

fn c13_characters() -> Verdict {
    let mut bad = Vec::new();
    for k in 0..=8 {
        if !dimension_square_sum_check(k) {
            bad.push(format!("sum dim^2 k={k}"));
        }
    }
    for k in 0..=7 {
        if !first_orthogonality_check(k) {
            bad.push(format!("orthogonality k={k}"));
        }
    }
    for k in 0..=5 {
        if !jucys_cycle_identity_check(k, 4).unwrap() {
            bad.push(format!("Jucys k={k}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let m0 = qf(rng.gen_range(-40..=40), rng.gen_range(1..=9));
        // non-integer N avoids every pole
        let n0 = BigRational::new(BigInt::from(rng.gen_range(-80..=80) * 2 + 1), BigInt::from(2));
        for k in 1..=4 {
            if !jm_weingarten_identity_check(k, &m0, &n0).unwrap() {
                bad.push(format!("JM Weingarten k={k} M={m0} N={n0}"));
            }
        }
    }
    check(bad.is_empty(), "k <= 8 / 7 / 5; JM Weingarten identity at 5 random (M, N), k <= 4", format!("{bad:?}"))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Verdict); 13] = [
        ("appendix goldens, monotone", 10, c1_monotone),
        ("appendix goldens, dessins", 5, c2_dessin),
        ("appendix goldens, Weingarten", 30, c3_weingarten),
        ("oracle equivalence, monotone", 120, c4_oracle_monotone),
        ("oracle equivalence, dessins", 120, c5_oracle_dessin),
        ("large-N bridge", 60, c6_large_n),
        ("topological recursion cross-check", 300, c7_tr),
        ("one-point recursions", 10, c8_one_point),
        ("Lambda-polynomial structure", 60, c9_lambda),
        ("Narayana identity", 1, c10_narayana),
        ("conjecture scans", 600, c11_scans),
        ("large-g root table", 300, c12_large_g),
        ("character-theory self-tests", 60, c13_characters),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let v = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let dt = t0.elapsed();
        let v = match v {
            Ok(msg) if dt > Duration::from_secs(*budget) => Err(format!("{msg}; over the {budget} s budget")),
            other => other,
        };
        match v {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} ({:.2} s)", i + 1, dt.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} ({:.2} s)", i + 1, dt.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
