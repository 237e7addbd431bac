//! Dessins d'enfant as pairs of permutations on the edge set.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::symgroup::{Partition, Permutation};
use crate::QPoly;

/// Largest number of edges the pair enumeration accepts.
pub const MAX_EDGES: usize = 7;

/// Black and white rotations; faces are the cycles of `black ∘ white`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DessinPair {
    pub black: Permutation,
    pub white: Permutation,
}

impl DessinPair {
    /// `2 - 2g` for the (possibly disconnected) surface.
    pub fn euler_characteristic(&self) -> i64 {
        let d = self.black.degree() as i64;
        let faces = self.black.compose(&self.white).num_cycles() as i64;
        self.black.num_cycles() as i64 + self.white.num_cycles() as i64 - d + faces
    }

    pub fn is_connected(&self) -> bool {
        let d = self.black.degree();
        if d == 0 {
            return true;
        }
        let mut seen = vec![false; d];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for y in [self.black.apply(x), self.white.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn count(mu: &Partition, g: i64, connected: bool) -> Result<QPoly> {
    let d = mu.weight();
    if d > MAX_EDGES {
        return Err(Error::BoundExceeded(format!("{d} edges > {MAX_EDGES}")));
    }
    let sigma0 = mu.class_rep();
    let target = 2 - 2 * g;
    let mut acc = vec![0u64; d + 2];
    for alpha in Permutation::all(d) {
        let beta = alpha.inverse().compose(&sigma0);
        let pair = DessinPair { black: alpha, white: beta };
        if pair.euler_characteristic() != target {
            continue;
        }
        if connected && !pair.is_connected() {
            continue;
        }
        acc[pair.black.num_cycles()] += 1;
    }
    let norm = BigRational::from_integer(mu.product_of_parts());
    Ok(QPoly::new(acc.into_iter().map(|c| BigRational::from_integer(BigInt::from(c)) / &norm).collect()))
}

/// Disconnected weighted count with labelled faces and Euler genus `g`.
pub fn dessin_disconnected_count(mu: &Partition, g: i64) -> Result<QPoly> {
    count(mu, g, false)
}

/// Connected weighted count of genus `g` dessins with face perimeters `mu`.
pub fn dessin_connected_count(mu: &Partition, g: i64) -> Result<QPoly> {
    count(mu, g, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};
    use num_traits::Zero;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(dessin_disconnected_count(&p(&[1]), 0).unwrap(), QPoly::from_ints(&[0, 1]));
        assert_eq!(dessin_disconnected_count(&p(&[2]), 0).unwrap(), QPoly::new(vec![q(0), qf(1, 2), qf(1, 2)]));
        assert_eq!(dessin_disconnected_count(&p(&[1, 1]), -1).unwrap(), QPoly::from_ints(&[0, 0, 1]));
        assert_eq!(
            dessin_connected_count(&p(&[2, 2]), 0).unwrap(),
            QPoly::new(vec![q(0), q(1), qf(5, 2), q(1)])
        );
        assert_eq!(dessin_connected_count(&p(&[3]), 1).unwrap(), QPoly::new(vec![q(0), qf(1, 3)]));
        assert!(dessin_connected_count(&p(&[1]), 1).unwrap().is_zero());
        assert!(matches!(dessin_connected_count(&p(&[8]), 0), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn vanishing_below_euler_bound() {
        for d in 1..=5 {
            for mu in Partition::all(d) {
                for g in 0..3i64 {
                    if (d as i64) < 2 * g + mu.len() as i64 {
                        assert!(dessin_connected_count(&mu, g).unwrap().is_zero());
                    }
                }
            }
        }
    }
}
