//! Irreducible characters of the symmetric group via Murnaghan–Nakayama.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::partition::{factorial, Partition};

type Key = (Vec<usize>, Vec<usize>);

fn cache() -> &'static RwLock<HashMap<Key, i64>> {
    static C: OnceLock<RwLock<HashMap<Key, i64>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `chi^lambda` evaluated on the class of cycle type `mu`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(format!("{lambda} vs {mu}")));
    }
    Ok(chi(lambda.parts(), mu.parts()))
}

fn chi(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = cache().read().unwrap().get(&key) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    // beta numbers: distinct, decreasing
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0i64;
    for i in 0..l {
        if beta[i] < r {
            continue;
        }
        let nb = beta[i] - r;
        if beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&b| b > nb && b < beta[i]).count();
        let mut newbeta = beta.clone();
        newbeta[i] = nb;
        newbeta.sort_unstable_by(|a, b| b.cmp(a));
        let nl = newbeta.len();
        let newlambda: Vec<usize> =
            newbeta.iter().enumerate().map(|(j, &b)| b + j + 1 - nl).filter(|&p| p > 0).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * chi(&newlambda, rest);
    }
    cache().write().unwrap().insert(key, total);
    total
}

/// Character table of `S_k`: rows indexed by `lambda`, columns by `mu`,
/// both in reverse lexicographic order.
pub fn character_table(k: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let ps = Partition::all(k);
    let rows = ps.iter().map(|l| ps.iter().map(|m| chi(l.parts(), m.parts())).collect()).collect();
    (ps, rows)
}

/// `sum_lambda dim(lambda)^2 == k!`
pub fn dimension_square_sum_check(k: usize) -> bool {
    let s: BigInt = Partition::all(k).iter().map(|l| l.dimension().pow(2)).sum();
    s == factorial(k)
}

/// First orthogonality: `sum_mu |C_mu| chi^l(mu) chi^l'(mu) = k! delta`.
pub fn first_orthogonality_check(k: usize) -> bool {
    let (ps, table) = character_table(k);
    let sizes: Vec<BigInt> = ps.iter().map(|m| m.class_size()).collect();
    let kf = factorial(k);
    for a in 0..ps.len() {
        for b in 0..ps.len() {
            let s: BigInt = (0..ps.len())
                .map(|c| &sizes[c] * BigInt::from(table[a][c]) * BigInt::from(table[b][c]))
                .sum();
            let expect = if a == b { kf.clone() } else { BigInt::zero() };
            if s != expect {
                return false;
            }
        }
    }
    true
}
