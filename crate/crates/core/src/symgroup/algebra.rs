//! The group algebra of `S_k`, class vectors and Jucys–Murphy elements.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::Ring;

use super::partition::Partition;
use super::perm::Permutation;

/// Dense element of the group algebra, indexed by permutation rank.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebra<C> {
    k: usize,
    coeffs: Vec<C>,
}

impl<C: Ring> GroupAlgebra<C> {
    pub fn zero(k: usize) -> Self {
        let n: usize = (1..=k).product();
        GroupAlgebra { k, coeffs: vec![C::zero(); n] }
    }

    pub fn basis(sigma: &Permutation, c: C) -> Self {
        let mut a = Self::zero(sigma.degree());
        a.coeffs[sigma.rank()] = c;
        a
    }

    pub fn identity(k: usize) -> Self {
        Self::basis(&Permutation::identity(k), C::one())
    }

    /// `J_i = (1 i) + ... + (i-1 i)` for 1-based `i`.
    pub fn jucys_murphy(k: usize, i: usize) -> Self {
        let mut a = Self::zero(k);
        for j in 0..i - 1 {
            a.coeffs[Permutation::transposition(k, j, i - 1).rank()] = C::one();
        }
        a
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn coefficient(&self, sigma: &Permutation) -> C {
        self.coeffs[sigma.rank()].clone()
    }

    /// Nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (Permutation, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(r, c)| (Permutation::unrank(self.k, r), c))
    }

    pub fn add(&self, o: &Self) -> Self {
        GroupAlgebra {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        GroupAlgebra { k: self.k, coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// `self + c * e`
    pub fn add_scalar(&self, c: &C) -> Self {
        let mut a = self.clone();
        a.coeffs[0] = a.coeffs[0].clone() + c.clone();
        a
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.k, o.k);
        let a: Vec<_> = self.terms().map(|(p, c)| (p, c.clone())).collect();
        let b: Vec<_> = o.terms().map(|(p, c)| (p, c.clone())).collect();
        let mut out = Self::zero(self.k);
        for (p, c) in &a {
            for (q, d) in &b {
                let r = p.compose(q).rank();
                out.coeffs[r] = out.coeffs[r].clone() + c.clone() * d.clone();
            }
        }
        out
    }

    /// Coefficients as a class vector, if they are constant on classes.
    pub fn to_class_vector(&self) -> Option<ClassVector<C>> {
        let mut v: BTreeMap<Partition, C> = BTreeMap::new();
        for (r, c) in self.coeffs.iter().enumerate() {
            let ct = Permutation::unrank(self.k, r).cycle_type();
            match v.get(&ct) {
                Some(x) if x != c => return None,
                Some(_) => {}
                None => {
                    v.insert(ct, c.clone());
                }
            }
        }
        Some(ClassVector { k: self.k, values: v })
    }
}

/// A class function on `S_k`, stored by cycle type.
#[derive(Clone, PartialEq, Debug)]
pub struct ClassVector<C> {
    pub k: usize,
    pub values: BTreeMap<Partition, C>,
}

impl<C: Ring> ClassVector<C> {
    pub fn get(&self, mu: &Partition) -> C {
        self.values.get(mu).cloned().unwrap_or_else(C::zero)
    }
}

/// Checks `prod (x + J_i) = sum_sigma x^{cycles(sigma)} sigma` for
/// `x = 0..=xmax`.
pub fn jucys_cycle_identity_check(k: usize, xmax: i64) -> Result<bool> {
    if k > 6 {
        return Err(Error::DegreeTooLarge(format!("k = {k} > 6")));
    }
    if k == 0 {
        return Ok(true);
    }
    type Q = BigRational;
    let js: Vec<GroupAlgebra<Q>> = (1..=k).map(|i| GroupAlgebra::jucys_murphy(k, i)).collect();
    for x in 0..=xmax {
        let xq = Q::from_i64(x);
        let mut lhs = GroupAlgebra::<Q>::identity(k);
        for j in &js {
            lhs = lhs.mul(&j.add_scalar(&xq));
        }
        let rhs = GroupAlgebra {
            k,
            coeffs: Permutation::all(k).map(|p| num_traits::pow(xq.clone(), p.num_cycles())).collect(),
        };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
