//! Deformed monotone Hurwitz numbers and weighted dessin counts.

mod characters;
mod cutjoin;
mod onepoint;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::q;
use crate::QPoly;

pub use characters::{connected_from_disconnected, disconnected_table, MAX_DISCONNECTED_WEIGHT};
pub use cutjoin::{dessin_d, monotone_h, HurwitzKey, HurwitzTable};
pub use onepoint::{genus1_relation_holds, narayana, one_point_h};

/// Which enumeration a table entry belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Monotone,
    Dessin,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Monotone => "monotone",
            Family::Dessin => "dessin",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monotone" => Ok(Family::Monotone),
            "dessin" | "dessins" => Ok(Family::Dessin),
            _ => Err(Error::Parse(format!("unknown family '{s}'"))),
        }
    }
}

impl Family {
    /// Value of `family` at `(g, mu)` from the cut-and-join engine.
    pub fn value(self, g: u32, mu: &[usize]) -> QPoly {
        match self {
            Family::Monotone => monotone_h(g, mu),
            Family::Dessin => dessin_d(g, mu),
        }
    }
}

/// Structural checks on a monotone value with `|mu| = weight`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaReport {
    pub nonnegative: bool,
    pub symmetric: bool,
    pub unimodal: bool,
    pub degree_ok: bool,
    pub zero_constant: bool,
}

impl LambdaReport {
    pub fn all(&self) -> bool {
        self.nonnegative && self.symmetric && self.unimodal && self.degree_ok && self.zero_constant
    }
}

/// Nonnegative, palindromic with darga `darga`, unimodal, degree `darga - 1`.
pub fn lambda_structure(p: &QPoly, darga: usize) -> LambdaReport {
    let c: Vec<BigRational> = (0..=darga).map(|i| p.coeff(i)).collect();
    let nonnegative = c.iter().all(|x| *x >= q(0));
    let symmetric = (0..=darga).all(|i| c[i] == c[darga - i]);
    let peak = c.iter().enumerate().max_by(|a, b| a.1.cmp(b.1)).map(|(i, _)| i).unwrap_or(0);
    let unimodal = c[..=peak].windows(2).all(|w| w[0] <= w[1]) && c[peak..].windows(2).all(|w| w[0] >= w[1]);
    LambdaReport {
        nonnegative,
        symmetric,
        unimodal,
        degree_ok: p.degree() == Some(darga.saturating_sub(1)),
        zero_constant: p.coeff(0).is_zero(),
    }
}

/// Multiply by the product of the parts, the presentation used in tables.
pub fn times_mu(p: &QPoly, mu: &[usize]) -> QPoly {
    let prod: i64 = mu.iter().map(|&m| m as i64).product();
    p.scale(&q(prod))
}

/// `P(t) = t^darga P(1/t)`.
pub fn is_palindromic(p: &QPoly, darga: usize) -> bool {
    (0..=darga).all(|i| p.coeff(i) == p.coeff(darga - i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_checks() {
        let p = QPoly::from_ints(&[0, 4, 10, 4]);
        assert!(lambda_structure(&p, 4).all());
        let bad = QPoly::from_ints(&[0, 4, 1, 4]);
        assert!(!lambda_structure(&bad, 4).unimodal);
        assert_eq!("dessins".parse::<Family>().unwrap(), Family::Dessin);
        assert!("x".parse::<Family>().is_err());
    }
}
