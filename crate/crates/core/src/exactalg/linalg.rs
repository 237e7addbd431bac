//! Dense linear solve over an exact field.

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Solve `a x = b` by Gaussian elimination with nonzero pivoting.
pub fn solve_linear<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Result<Vec<F>> {
    let n = b.len();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::LengthMismatch(format!("{n} unknowns")));
    }
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv().ok_or(Error::SingularSystem)?;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * inv.clone();
            for c in col..n {
                let v = a[r][c].clone() - f.clone() * a[col][c].clone();
                a[r][c] = v;
            }
            b[r] = b[r].clone() - f * b[col].clone();
        }
    }
    Ok((0..n).map(|i| b[i].clone() / a[i][i].clone()).collect())
}
