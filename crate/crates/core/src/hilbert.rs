//! Shifted Hilbert matrices, their exact inverses, and the quantum analog.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{laurent_divexact, qint, LaurentPoly, RatFunc};
use crate::linalg::scaled_inverse;
use crate::triples::Triple;

/// Square matrix of exact rationals, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        RationalMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        RationalMatrix { rows }
    }

    pub fn trace(&self) -> BigRational {
        (0..self.size()).map(|i| self.rows[i][i].clone()).sum()
    }
}

/// `H(n, s)_{ij} = 1 / (i + j - 1 + s)` with 1-based indices.
pub fn hilbert(n: usize, s: u32) -> RationalMatrix {
    let rows = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| BigRational::new(BigInt::one(), BigInt::from(i + j - 1 + s as usize)))
                .collect()
        })
        .collect();
    RationalMatrix { rows }
}

/// Exact inverse by fraction-free elimination after clearing row
/// denominators. The product with the input is checked to be the identity.
pub fn invert_exact(m: &RationalMatrix) -> Result<RationalMatrix> {
    let n = m.size();
    assert!(m.rows.iter().all(|r| r.len() == n), "matrix must be square");
    let scales: Vec<BigInt> = m
        .rows
        .iter()
        .map(|r| r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
        .collect();
    let ints: Vec<Vec<BigInt>> = m
        .rows
        .iter()
        .zip(&scales)
        .map(|(r, d)| r.iter().map(|x| (x * d).to_integer()).collect())
        .collect();
    let (det, adj) = scaled_inverse(&ints)?;
    let rows: Vec<Vec<BigRational>> = adj
        .into_iter()
        .map(|r| {
            r.into_iter()
                .zip(&scales)
                .map(|(x, d)| BigRational::new(x * d, det.clone()))
                .collect()
        })
        .collect();
    let inv = RationalMatrix { rows };
    if m.mul(&inv) != RationalMatrix::identity(n) {
        return Err(Error::Singular);
    }
    Ok(inv)
}

pub fn trace_inverse(n: usize, s: u32) -> Result<BigRational> {
    Ok(invert_exact(&hilbert(n, s))?.trace())
}

/// Signed sum of row `(c+a-b)/2 + 1` of `H(a+1, b-a)^{-1}`, with the
/// triple sorted so that `a <= b <= c`.
pub fn rowsum_signed(a: u32, b: u32, c: u32) -> Result<BigInt> {
    let t = Triple::new(a, b, c);
    if !t.is_admissible() {
        return Err(Error::NotAdmissible(t.to_string()));
    }
    let Triple { a, b, c } = t.sorted();
    let inv = invert_exact(&hilbert(a as usize + 1, b - a))?;
    let row = ((c + a - b) / 2) as usize;
    let sum: BigRational = inv.rows[row].iter().sum();
    Ok(sum.to_integer())
}

/// Absolute row sum of [`rowsum_signed`], which equals `gon(a,b,c)`.
pub fn rowsum_gon(a: u32, b: u32, c: u32) -> Result<BigInt> {
    rowsum_signed(a, b, c).map(|v| v.abs())
}

/// Square matrix of rational functions in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: Vec<Vec<RatFunc>>,
}

impl QMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn trace(&self) -> RatFunc {
        (0..self.size()).fold(RatFunc::zero(), |acc, i| acc.add(&self.rows[i][i]))
    }
}

/// `H_q(n, s)_{ij} = 1 / [i + j - 1 + s]_q`.
pub fn q_hilbert(n: usize, s: u32) -> QMatrix {
    let rows = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    RatFunc::new(LaurentPoly::one(), qint((i + j - 1) as u32 + s))
                        .expect("q-integers of positive argument are nonzero")
                })
                .collect()
        })
        .collect();
    QMatrix { rows }
}

/// Inverse of `H_q(n, s)` over the rational functions.
///
/// Row `i` is scaled by `D_i = prod_j [i+j-1+s]` to get a Laurent
/// polynomial matrix `A = D H`, whose scaled inverse `(d, M)` gives
/// `H^{-1}_{ij} = M_{ij} D_j / d`.
pub fn q_invert(n: usize, s: u32) -> Result<QMatrix> {
    let shift = |i: usize, j: usize| (i + j + 1) as u32 + s;
    let scales: Vec<LaurentPoly> = (0..n)
        .map(|i| (0..n).fold(LaurentPoly::one(), |acc, j| &acc * &qint(shift(i, j))))
        .collect();
    let a: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| laurent_divexact(&scales[i], &qint(shift(i, j))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let (det, adj) = scaled_inverse(&a)?;
    let rows = adj
        .into_iter()
        .map(|r| {
            r.into_iter()
                .zip(&scales)
                .map(|(x, d)| RatFunc::new(&x * d, det.clone()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QMatrix { rows })
}

/// `tr H_q(n)^{-1}`.
pub fn q_trace_inverse(n: usize) -> Result<RatFunc> {
    q_trace_inverse_shifted(n, 0)
}

/// `tr H_q(n, s)^{-1}`, for probing a shifted quantum analog.
pub fn q_trace_inverse_shifted(n: usize, s: u32) -> Result<RatFunc> {
    Ok(q_invert(n, s)?.trace())
}
