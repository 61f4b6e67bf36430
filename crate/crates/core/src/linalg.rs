//! Rank computations: an incremental row-echelon basis over any field, and
//! fraction-free Bareiss elimination over the integers.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::field::Scalar;

/// Row space of the vectors inserted so far, kept in echelon form with unit
/// pivots.
#[derive(Clone, Debug)]
pub struct EchelonBasis<S> {
    width: usize,
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> EchelonBasis<S> {
    pub fn new(width: usize) -> Self {
        EchelonBasis { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Basis vectors, each a linear combination of inserted vectors.
    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Reduces `v` against the basis.
    pub fn reduce(&self, mut v: Vec<S>) -> Vec<S> {
        assert_eq!(v.len(), self.width);
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let c = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*pivot) {
                if !r.is_zero() {
                    *x = x.clone() - c.clone() * r.clone();
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent of the basis.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        let v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inverse().expect("nonzero field element is invertible");
        let row = v.into_iter().map(|x| x * inv.clone()).collect();
        self.rows.push((pivot, row));
        true
    }
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !Zero::is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}
