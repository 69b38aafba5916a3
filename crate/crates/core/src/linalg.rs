//! Fraction-free Gaussian elimination over integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{laurent_divexact, LaurentPoly};

/// Integral domain with exact division, as needed by Bareiss elimination.
pub trait ExactDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other`, which the caller guarantees to be exact.
    fn divexact(&self, other: &Self) -> Result<Self>;
}

impl ExactDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn divexact(&self, other: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }
}

impl ExactDomain for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn divexact(&self, other: &Self) -> Result<Self> {
        laurent_divexact(self, other)
    }
}

fn check_square<T>(m: &[Vec<T>]) {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
}

/// Determinant by Bareiss elimination.
pub fn determinant<T: ExactDomain>(m: &[Vec<T>]) -> Result<T> {
    check_square(m);
    let n = m.len();
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.divexact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { T::one() } else { a[n - 1][n - 1].clone() };
    Ok(if negate { det.neg() } else { det })
}

/// Fraction-free inverse: returns `(d, M)` with `A^{-1} = M / d` and
/// `d = det A`. Every intermediate entry is a minor of `[A | I]`, so all
/// divisions are exact.
pub fn scaled_inverse<T: ExactDomain>(m: &[Vec<T>]) -> Result<(T, Vec<Vec<T>>)> {
    check_square(m);
    let n = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            let i = (k + 1..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(k, i);
            negate = !negate;
        }
        let pivot_row = a[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let v = pivot_row[k].mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                row[j] = v.divexact(&prev)?;
            }
            row[k] = T::zero();
        }
        prev = pivot_row[k].clone();
    }
    // the left block is now prev * I, the right block prev * A^{-1}
    let inv: Vec<Vec<T>> = a.into_iter().map(|r| r[n..].to_vec()).collect();
    let det = if negate { prev.neg() } else { prev };
    if negate {
        let inv = inv
            .into_iter()
            .map(|r| r.iter().map(|x| x.neg()).collect())
            .collect();
        Ok((det, inv))
    } else {
        Ok((det, inv))
    }
}
