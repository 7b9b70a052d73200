//! Lower-triangular arrays indexed by `(n, k)` with `0 <= k <= n <= max_n`.

use std::fmt;

use crate::exact_arith::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle<T> {
    rows: Vec<Vec<T>>,
}

impl<T> Triangle<T> {
    /// Builds a triangle from its rows. Row `n` must have exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        if rows.is_empty() || rows.iter().enumerate().any(|(n, r)| r.len() != n + 1) {
            return None;
        }
        Some(Self { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<T>>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(n, r)| r.len() == n + 1));
        Self { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&T> {
        self.rows.get(n)?.get(k)
    }

    pub fn row(&self, n: usize) -> Option<&[T]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// Replaces one entry; used to build fault-injection fixtures.
    pub fn set(&mut self, n: usize, k: usize, value: T) -> Option<T> {
        let slot = self.rows.get_mut(n)?.get_mut(k)?;
        Some(std::mem::replace(slot, value))
    }

    pub fn map<U>(&self, mut f: impl FnMut(usize, usize, &T) -> U) -> Triangle<U> {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| row.iter().enumerate().map(|(k, v)| f(n, k, v)).collect())
            .collect();
        Triangle { rows }
    }
}

/// The `F_{n,k}` triangle.
pub type RationalTriangle = Triangle<Rational>;

/// Signed Stirling numbers of the first kind.
pub type StirlingTable = Triangle<Integer>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleLabel {
    C,
    Q,
    D,
}

impl fmt::Display for TriangleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleLabel::C => "c",
            TriangleLabel::Q => "q",
            TriangleLabel::D => "d",
        })
    }
}

/// A triangle of positive integers tagged with which constant it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerTriangle {
    pub label: TriangleLabel,
    pub entries: Triangle<Integer>,
}

impl IntegerTriangle {
    pub fn max_n(&self) -> usize {
        self.entries.max_n()
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Integer> {
        self.entries.get(n, k)
    }

    pub fn row(&self, n: usize) -> Option<&[Integer]> {
        self.entries.row(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_is_enforced() {
        assert!(Triangle::from_rows(vec![vec![1], vec![1, 2]]).is_some());
        assert!(Triangle::from_rows(vec![vec![1], vec![1]]).is_none());
        assert!(Triangle::<u8>::from_rows(vec![]).is_none());
    }

    #[test]
    fn access_and_set() {
        let mut t = Triangle::from_rows(vec![vec![1], vec![2, 3]]).unwrap();
        assert_eq!(t.max_n(), 1);
        assert_eq!(t.get(1, 1), Some(&3));
        assert_eq!(t.get(0, 1), None);
        assert_eq!(t.set(1, 0, 9), Some(2));
        assert_eq!(t.row(1), Some(&[9, 3][..]));
        let doubled = t.map(|_, _, v| v * 2);
        assert_eq!(doubled.get(1, 1), Some(&6));
    }
}
