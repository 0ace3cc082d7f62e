//! Square matrices indexed by multipartitions.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::charge::{display_order, Multicharge};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partitions::Multipartition;

/// The parameters `(n, l, s_l, m)` selecting the degree-`m` part of a
/// level-`l` Fock space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub n: i64,
    pub l: usize,
    pub charge: Multicharge,
    pub m: usize,
}

impl Params {
    pub fn new(n: i64, l: usize, charge: Multicharge, m: usize) -> Result<Self> {
        if n < 1 || l < 1 {
            return Err(Error::BadParameters { n, l });
        }
        if charge.level() != l {
            return Err(Error::LevelMismatch {
                expected: l,
                found: charge.level(),
            });
        }
        Ok(Params { n, l, charge, m })
    }

    /// `Π^l_m` in the canonical display order.
    pub fn basis(&self) -> Vec<Multipartition> {
        display_order(self.l, self.m, &self.charge, self.n)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} l={} s=({}) m={}", self.n, self.l, self.charge, self.m)
    }
}

/// A square matrix whose rows and columns are both keyed by `order`.
///
/// Entries are stored densely in row-major layout; the layout is only a
/// presentation detail, all lookups go through keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMatrix<T> {
    order: Vec<Multipartition>,
    index: HashMap<Multipartition, usize>,
    entries: Vec<T>,
}

impl<T: Clone> LabeledMatrix<T> {
    pub fn filled(order: Vec<Multipartition>, value: T) -> Self {
        let dim = order.len();
        let index = order.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        LabeledMatrix {
            order,
            index,
            entries: vec![value; dim * dim],
        }
    }

    pub fn from_fn(order: Vec<Multipartition>, mut f: impl FnMut(&Multipartition, &Multipartition) -> T) -> Self {
        let entries = order
            .iter()
            .flat_map(|r| order.iter().map(|c| (r, c)).collect::<Vec<_>>())
            .map(|(r, c)| f(r, c))
            .collect();
        let index = order.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        LabeledMatrix { order, index, entries }
    }

    pub fn order(&self) -> &[Multipartition] {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn position(&self, key: &Multipartition) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn get(&self, row: &Multipartition, col: &Multipartition) -> Option<&T> {
        Some(self.at(self.position(row)?, self.position(col)?))
    }

    /// Entry at display positions.
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim() + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        let dim = self.dim();
        &mut self.entries[i * dim + j]
    }

    pub fn set(&mut self, row: &Multipartition, col: &Multipartition, value: T) -> Result<()> {
        let i = self.position(row).ok_or_else(|| Error::UnknownKey(row.to_string()))?;
        let j = self.position(col).ok_or_else(|| Error::UnknownKey(col.to_string()))?;
        *self.at_mut(i, j) = value;
        Ok(())
    }

    /// Same entries laid out along another ordering of the same keys.
    pub fn reordered(&self, order: Vec<Multipartition>) -> Result<Self> {
        let mut positions = Vec::with_capacity(order.len());
        for key in &order {
            positions.push(self.position(key).ok_or_else(|| Error::UnknownKey(key.to_string()))?);
        }
        if positions.len() != self.dim() {
            return Err(Error::Parse("reordering must list every key exactly once".into()));
        }
        Ok(LabeledMatrix::from_fn(order.clone(), |r, c| {
            self.at(self.index[r], self.index[c]).clone()
        }))
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> LabeledMatrix<U> {
        LabeledMatrix {
            order: self.order.clone(),
            index: self.index.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// `(row, col, entry)` in display order.
    pub fn iter(&self) -> impl Iterator<Item = (&Multipartition, &Multipartition, &T)> {
        let dim = self.dim();
        self.entries
            .iter()
            .enumerate()
            .map(move |(idx, v)| (&self.order[idx / dim], &self.order[idx % dim], v))
    }
}

/// Matrix entries that can be multiplied and summed.
pub trait Entry: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_product(&mut self, a: &Self, b: &Self);
}

impl Entry for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        self.add_scaled(a, b);
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl<T: Entry> LabeledMatrix<T> {
    pub fn identity(order: Vec<Multipartition>) -> Self {
        LabeledMatrix::from_fn(order, |r, c| if r == c { T::one() } else { T::zero() })
    }

    /// Key-aligned product; `other` may use a different layout.
    pub fn mul(&self, other: &LabeledMatrix<T>) -> Result<LabeledMatrix<T>> {
        let other = other.reordered(self.order.clone())?;
        let dim = self.dim();
        let mut out = LabeledMatrix::filled(self.order.clone(), T::zero());
        for i in 0..dim {
            for k in 0..dim {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        out.at_mut(i, j).add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn count_zeros(&self) -> usize {
        self.entries.iter().filter(|e| e.is_zero()).count()
    }

    /// Keys `(row, col)` where the two matrices disagree.
    pub fn differences(&self, other: &LabeledMatrix<T>) -> Vec<(Multipartition, Multipartition)> {
        let mut out = Vec::new();
        for (r, c, v) in self.iter() {
            if other.get(r, c) != Some(v) {
                out.push((r.clone(), c.clone()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn key(parts: &[usize]) -> Multipartition {
        Multipartition::from(Partition::new(parts.to_vec()))
    }

    #[test]
    fn keyed_lookup_survives_reordering() {
        let order = vec![key(&[2]), key(&[1, 1])];
        let mut m = LabeledMatrix::filled(order.clone(), 0i64);
        m.set(&key(&[1, 1]), &key(&[2]), 5).unwrap();
        let flipped = m.reordered(vec![key(&[1, 1]), key(&[2])]).unwrap();
        assert_eq!(flipped.get(&key(&[1, 1]), &key(&[2])), Some(&5));
        assert_eq!(*flipped.at(0, 1), 5);
        assert!(m.differences(&flipped).is_empty());
        assert!(m.set(&key(&[3]), &key(&[2]), 1).is_err());
    }

    #[test]
    fn product_with_identity() {
        let order = vec![key(&[2]), key(&[1, 1])];
        let mut m = LabeledMatrix::identity(order.clone());
        *m.at_mut(1, 0) = 3i64;
        let id = LabeledMatrix::<i64>::identity(vec![key(&[1, 1]), key(&[2])]);
        assert_eq!(m.mul(&id).unwrap(), m);
        assert_eq!(m.count_zeros(), 1);
    }
}
