//! Disconnected tables from character sums and the connected/disconnected bridge.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::TruncSeries;
use crate::symgroup::{factorial, mn_character, Partition};
use crate::QPoly;

use super::Family;

pub const MAX_DISCONNECTED_WEIGHT: usize = 8;

type Memo = RwLock<HashMap<(Family, i64, Vec<usize>), QPoly>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(Default::default)
}

fn check_bound(mu: &Partition) -> Result<()> {
    if mu.weight() > MAX_DISCONNECTED_WEIGHT {
        return Err(Error::BoundExceeded(format!(
            "|mu| = {} exceeds {}",
            mu.weight(),
            MAX_DISCONNECTED_WEIGHT
        )));
    }
    Ok(())
}

fn big(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Disconnected value at genus `g` (possibly negative) from the character formula.
pub fn disconnected_table(family: Family, g: i64, mu: &Partition) -> Result<QPoly> {
    check_bound(mu)?;
    if mu.is_empty() {
        return Ok(if g == 1 { QPoly::one() } else { QPoly::zero() });
    }
    let key = (family, g, mu.parts().to_vec());
    if let Some(v) = memo().read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = match family {
        Family::Monotone => monotone_disconnected(g, mu)?,
        Family::Dessin => dessin_disconnected(g, mu)?,
    };
    memo().write().unwrap().insert(key, v.clone());
    Ok(v)
}

fn divide_by_parts(acc: QPoly, mu: &Partition) -> QPoly {
    acc.scale(&(BigRational::one() / big(&mu.product_of_parts())))
}

fn monotone_disconnected(g: i64, mu: &Partition) -> Result<QPoly> {
    let d = mu.weight();
    let r = d as i64 + 2 * g - 2 + mu.len() as i64;
    if r < 0 {
        return Ok(QPoly::zero());
    }
    let r = r as usize;
    let t = QPoly::from_ints(&[0, 1]);
    let mut acc = QPoly::zero();
    for lambda in Partition::all(d) {
        let chi = mn_character(&lambda, mu)?;
        if chi == 0 {
            continue;
        }
        // each box contributes 1 + t * sum_{j >= 1} (c h)^j
        let mut prod = TruncSeries::new(vec![QPoly::one()], r + 1);
        for c in lambda.contents() {
            let mut f = vec![QPoly::one()];
            let mut cj = BigInt::one();
            for _ in 1..=r {
                cj *= c;
                f.push(t.scale(&big(&cj)));
            }
            prod = prod.mul(&TruncSeries::new(f, r + 1));
        }
        let w = big(&(lambda.dimension() * BigInt::from(chi))) / big(&factorial(d));
        acc += &prod.coeff(r).scale(&w);
    }
    Ok(divide_by_parts(acc, mu))
}

fn dessin_disconnected(g: i64, mu: &Partition) -> Result<QPoly> {
    let d = mu.weight();
    let m = 2 * g - 2 + mu.len() as i64;
    let nus = Partition::all(d);
    let mut acc = QPoly::zero();
    for lambda in Partition::all(d) {
        let chi = mn_character(&lambda, mu)?;
        if chi == 0 {
            continue;
        }
        let mut content_poly = vec![QPoly::one()];
        for c in lambda.contents() {
            // multiply by (t + c h), coefficients indexed by the power of h
            let mut next = vec![QPoly::zero(); content_poly.len() + 1];
            for (j, a) in content_poly.iter().enumerate() {
                next[j] += &(a * &QPoly::from_ints(&[0, 1]));
                next[j + 1] += &a.scale(&BigRational::from_integer(BigInt::from(c)));
            }
            content_poly = next;
        }
        let mut inner = QPoly::zero();
        for nu in &nus {
            let idx = m + nu.len() as i64;
            if idx < 0 || idx as usize >= content_poly.len() {
                continue;
            }
            let x = mn_character(&lambda, nu)?;
            if x == 0 {
                continue;
            }
            let w = BigRational::new(BigInt::from(x), nu.z());
            inner += &content_poly[idx as usize].scale(&w);
        }
        acc += &inner.scale(&BigRational::from_integer(BigInt::from(chi)));
    }
    Ok(divide_by_parts(acc, mu))
}

/// Set partitions of `0..n` as restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, a: &mut Vec<usize>, maxb: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let mut blocks = vec![Vec::new(); maxb];
            for (j, &b) in a.iter().enumerate() {
                blocks[b].push(j);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=maxb {
            a.push(b);
            rec(i + 1, n, a, maxb.max(b + 1), out);
            a.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// All ways to write `total` as an ordered sum of `k` nonnegative integers.
fn compositions(total: i64, k: usize) -> Vec<Vec<i64>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if k == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Connected value recovered by inclusion-exclusion from disconnected tables.
pub fn connected_from_disconnected(family: Family, g: i64, mu: &Partition) -> Result<QPoly> {
    check_bound(mu)?;
    let mut cache = HashMap::new();
    connected_rec(family, g, mu.parts(), &mut cache)
}

fn connected_rec(
    family: Family,
    g: i64,
    parts: &[usize],
    cache: &mut HashMap<(i64, Vec<usize>), QPoly>,
) -> Result<QPoly> {
    if g < 0 {
        return Ok(QPoly::zero());
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if family == Family::Dessin && (sorted.iter().sum::<usize>() as i64) < 2 * g + sorted.len() as i64 {
        return Ok(QPoly::zero());
    }
    if let Some(v) = cache.get(&(g, sorted.clone())) {
        return Ok(v.clone());
    }
    let mu = Partition::new(sorted.clone())?;
    let mut value = disconnected_table(family, g, &mu)?;
    let n = sorted.len();
    for blocks in set_partitions(n) {
        let k = blocks.len();
        if k < 2 {
            continue;
        }
        let sub: Vec<Vec<usize>> = blocks.iter().map(|b| b.iter().map(|&i| sorted[i]).collect()).collect();
        // sum over blocks of (g_B - 1) equals g - 1
        for gs in compositions(g - 1 + k as i64, k) {
            let mut term = QPoly::one();
            for (b, &gb) in sub.iter().zip(&gs) {
                let c = connected_rec(family, gb, b, cache)?;
                if c.is_zero() {
                    term = QPoly::zero();
                    break;
                }
                term = &term * &c;
            }
            if !term.is_zero() {
                value = &value - &term;
            }
        }
    }
    cache.insert((g, sorted), value.clone());
    Ok(value)
}
