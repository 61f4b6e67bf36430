//! Dense square matrices over a [`Scalar`] and exact characteristic
//! polynomial coefficients.
//!
//! Convention: `det(X + λE) = Σ_t λ^{n-t} σ_t(X)`, so `σ_t` is the `t`-th
//! elementary symmetric function of the eigenvalues (`σ_1 = tr`,
//! `σ_n = det`).

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::field::{FieldElement, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    /// Row-major entries; panics unless `data.len() == n * n` and `n >= 1`.
    pub fn from_rows(n: usize, data: Vec<S>) -> Self {
        assert!(n >= 1 && data.len() == n * n, "expected {n}x{n} entries");
        Matrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn zero_like(&self) -> Self {
        let z = self.data[0].zero_like();
        Matrix { n: self.n, data: vec![z; self.n * self.n] }
    }

    pub fn identity_like(&self) -> Self {
        self.scalar_like(self.data[0].one_like())
    }

    pub fn scalar_like(&self, c: S) -> Self {
        let mut m = self.zero_like();
        for i in 0..self.n {
            m.data[i * self.n + i] = c.clone();
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(self.data[j * n + i].clone());
            }
        }
        Matrix { n, data }
    }

    pub fn trace(&self) -> S {
        let mut acc = self.data[0].zero_like();
        for i in 0..self.n {
            acc = acc + self.data[i * self.n + i].clone();
        }
        acc
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix { n: self.n, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.identity_like();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Submatrix dropping the first row and column.
    fn trailing(&self) -> Self {
        let n = self.n - 1;
        let mut data = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                data.push(self.data[i * self.n + j].clone());
            }
        }
        Matrix { n, data }
    }
}

impl<'a, S: Scalar> Mul for &'a Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, o: &'a Matrix<S>) -> Matrix<S> {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.data[i * n].clone() * o.data[j].clone();
                for k in 1..n {
                    acc = acc + self.data[i * n + k].clone() * o.data[k * n + j].clone();
                }
                data.push(acc);
            }
        }
        Matrix { n, data }
    }
}

impl<'a, S: Scalar> Add for &'a Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, o: &'a Matrix<S>) -> Matrix<S> {
        assert_eq!(self.n, o.n);
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect() }
    }
}

/// `σ_1..σ_n` by Faddeev-LeVerrier. Divides by `1..n`; returns `None` when
/// one of those is not invertible in the field.
pub fn faddeev_leverrier<S: Scalar>(a: &Matrix<S>) -> Option<Vec<S>> {
    let n = a.n;
    let proto = &a.data[0];
    // M_0 = 0, c_0 = 1; M_k = A M_{k-1} + c_{k-1} I; c_k = -tr(A M_k)/k.
    let mut m = a.zero_like();
    let mut c = proto.one_like();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        m = &(a * &m) + &a.scalar_like(c.clone());
        let inv_k = proto.int_like(k as i64).inverse()?;
        c = -((a * &m).trace() * inv_k);
        // σ_k = (-1)^k c_k
        out.push(if k % 2 == 0 { c.clone() } else { -c.clone() });
    }
    Some(out)
}

/// Faddeev-LeVerrier on an integer matrix; the divisions by `k` are exact.
pub fn faddeev_leverrier_integer(a: &Matrix<BigInt>) -> Vec<BigInt> {
    let n = a.n;
    let mut m = a.zero_like();
    let mut c = BigInt::from(1);
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        m = &(a * &m) + &a.scalar_like(c.clone());
        let (quot, rem) = (a * &m).trace().div_rem(&BigInt::from(k));
        assert!(Zero::is_zero(&rem), "inexact division in integer Faddeev-LeVerrier");
        c = -quot;
        out.push(if k % 2 == 0 { c.clone() } else { -c.clone() });
    }
    out
}

/// Coefficients `[1, c_1, ..., c_n]` of `det(x I - A)`, division-free.
fn berkowitz_charpoly<S: Scalar>(a: &Matrix<S>) -> Vec<S> {
    let proto = &a.data[0];
    if a.n == 1 {
        return vec![proto.one_like(), -a.data[0].clone()];
    }
    let n = a.n;
    let alpha = a.data[0].clone();
    let rest = a.trailing();
    // Column C = A[1.., 0], row R = A[0, 1..].
    let mut col: Vec<S> = (1..n).map(|i| a.data[i * n].clone()).collect();
    let row: Vec<S> = (1..n).map(|j| a.data[j].clone()).collect();
    let dot = |r: &[S], c: &[S]| {
        let mut acc = r[0].clone() * c[0].clone();
        for k in 1..r.len() {
            acc = acc + r[k].clone() * c[k].clone();
        }
        acc
    };
    // Toeplitz first column: 1, -a, -R C, -R A' C, ..., -R A'^{n-2} C.
    let mut first = vec![proto.one_like(), -alpha];
    for step in 0..n - 1 {
        first.push(-dot(&row, &col));
        if step + 1 < n - 1 {
            let m = rest.n;
            col = (0..m)
                .map(|i| {
                    let row = &rest.data[i * m..(i + 1) * m];
                    let mut acc = row[0].clone() * col[0].clone();
                    for (r, c) in row.iter().zip(&col).skip(1) {
                        acc = acc + r.clone() * c.clone();
                    }
                    acc
                })
                .collect();
        }
    }
    let inner = berkowitz_charpoly(&rest);
    // (n+1) x n lower-triangular Toeplitz times inner (length n).
    (0..=n)
        .map(|i| {
            let mut acc = proto.zero_like();
            for (j, v) in inner.iter().enumerate().take(i + 1) {
                acc = acc + first[i - j].clone() * v.clone();
            }
            acc
        })
        .collect()
}

/// `σ_1..σ_n` by the Berkowitz algorithm; valid over any commutative ring.
pub fn berkowitz<S: Scalar>(a: &Matrix<S>) -> Vec<S> {
    berkowitz_charpoly(a)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| if k % 2 == 0 { c } else { -c })
        .collect()
}

/// `σ_1..σ_n`: Faddeev-LeVerrier over `Q`, Berkowitz over `F_p`.
pub fn char_coeffs(a: &Matrix<FieldElement>) -> Vec<FieldElement> {
    match &a.data[0] {
        FieldElement::Rational(_) => faddeev_leverrier(a).expect("division by 1..n is exact over Q"),
        FieldElement::Prime(_) => berkowitz(a),
    }
}
