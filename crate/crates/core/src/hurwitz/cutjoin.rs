//! Memoized cut-and-join recursions.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::QPoly;

use super::Family;

/// Canonical memo key: parts sorted in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct HurwitzKey {
    pub family: Family,
    pub g: u32,
    pub mu: Vec<usize>,
}

impl HurwitzKey {
    pub fn new(family: Family, g: u32, mu: &[usize]) -> Self {
        let mut mu = mu.to_vec();
        mu.sort_unstable_by(|a, b| b.cmp(a));
        HurwitzKey { family, g, mu }
    }
}

/// Shared memo table; concurrent readers, last writer wins on identical values.
#[derive(Default)]
pub struct HurwitzTable {
    map: RwLock<HashMap<HurwitzKey, QPoly>>,
}

fn global() -> &'static HurwitzTable {
    static T: OnceLock<HurwitzTable> = OnceLock::new();
    T.get_or_init(HurwitzTable::default)
}

/// Connected deformed monotone Hurwitz number `H_{g,n}(mu)`.
pub fn monotone_h(g: u32, mu: &[usize]) -> QPoly {
    global().get(&HurwitzKey::new(Family::Monotone, g, mu))
}

/// Weighted count `D^t_{g,n}(mu)` of connected dessins.
pub fn dessin_d(g: u32, mu: &[usize]) -> QPoly {
    global().get(&HurwitzKey::new(Family::Dessin, g, mu))
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn lin_t(c0: i64, c1: i64) -> QPoly {
    QPoly::from_ints(&[c0, c1])
}

impl HurwitzTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &HurwitzKey) -> QPoly {
        if let Some(v) = self.map.read().unwrap().get(key) {
            return v.clone();
        }
        let v = self.compute(key);
        self.map.write().unwrap().insert(key.clone(), v.clone());
        v
    }

    fn value(&self, family: Family, g: i64, mu: &[usize]) -> QPoly {
        if g < 0 || mu.is_empty() || mu.contains(&0) {
            return QPoly::zero();
        }
        self.get(&HurwitzKey::new(family, g as u32, mu))
    }

    fn compute(&self, key: &HurwitzKey) -> QPoly {
        let fam = key.family;
        let g = key.g as i64;
        let mu = &key.mu;
        let n = mu.len() as i64;
        let weight: usize = mu.iter().sum();
        match fam {
            Family::Monotone => {
                if g == 0 && mu == &[1] {
                    return QPoly::one();
                }
            }
            Family::Dessin => {
                if (weight as i64) < 2 * g + n {
                    return QPoly::zero();
                }
                if g == 0 && mu == &[1] {
                    return lin_t(0, 1);
                }
            }
        }
        let m1 = mu[0];
        let rest = &mu[1..];
        // shift: monotone merges/splits mu_1, dessins lose one edge
        let shift = match fam {
            Family::Monotone => 0,
            Family::Dessin => 1,
        };
        let mut acc = QPoly::zero();
        for i in 0..rest.len() {
            let merged = m1 + rest[i] - shift;
            let mut parts = vec![merged];
            parts.extend(rest.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
            acc += &self.value(fam, g, &parts).scale(&rat(merged as i64));
        }
        if m1 >= 2 {
            let mut parts = vec![m1 - 1];
            parts.extend_from_slice(rest);
            let f = match fam {
                Family::Monotone => lin_t(-1, 1),
                Family::Dessin => lin_t(1, 1),
            };
            acc += &(&self.value(fam, g, &parts) * &f).scale(&rat(m1 as i64 - 1));
        }
        let total = m1 - shift;
        for alpha in 1..total {
            let beta = total - alpha;
            let mut inner = {
                let mut parts = vec![alpha, beta];
                parts.extend_from_slice(rest);
                self.value(fam, g - 1, &parts)
            };
            let s = rest.len();
            for mask in 0..(1u32 << s) {
                let mut p1 = vec![alpha];
                let mut p2 = vec![beta];
                for (j, &x) in rest.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        p1.push(x);
                    } else {
                        p2.push(x);
                    }
                }
                for g1 in 0..=g {
                    let a = self.value(fam, g1, &p1);
                    if a.is_zero() {
                        continue;
                    }
                    let b = self.value(fam, g - g1, &p2);
                    if !b.is_zero() {
                        inner += &(&a * &b);
                    }
                }
            }
            acc += &inner.scale(&rat((alpha * beta) as i64));
        }
        acc.scale(&(BigRational::from_integer(BigInt::from(1)) / rat(m1 as i64)))
    }
}
