//! The tet function and the quantities built from it: TET, 6j symbols,
//! Regge images, Racah cells and bi-unitarity sums.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, multinomial, PrimePowers, Surd};
use crate::gon::{gon3, gon3_prime_powers};
use crate::triples::{fusion_range, is_admissible_tet, TetLabels};

/// Face half-perimeters `sigma`, four-cycle half-perimeters `tau`, and the
/// summation bounds `max sigma`, `min tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TetPerimeters {
    pub sigma: [u32; 4],
    pub tau: [u32; 3],
    pub m_sigma: u32,
    pub m_tau: u32,
}

pub fn tet_perimeters(t: &TetLabels) -> TetPerimeters {
    let sigma = t.sigmas();
    let tau = t.taus();
    TetPerimeters {
        sigma,
        tau,
        m_sigma: *sigma.iter().max().expect("four faces"),
        m_tau: *tau.iter().min().expect("three cycles"),
    }
}

/// `tet(T) = sum_s (-1)^s (s+1)! / (prod_i (s - sigma_i)! prod_j (tau_j - s)!)`,
/// zero for non-admissible labels.
///
/// Each summand is a multinomial coefficient. The first one is built
/// directly and the rest follow from the ratio of consecutive terms, which
/// only involves machine-size factors.
pub fn tet(t: &TetLabels) -> BigInt {
    if !is_admissible_tet(t) {
        return BigInt::zero();
    }
    let per = tet_perimeters(t);
    if per.m_sigma > per.m_tau {
        return BigInt::zero();
    }
    let s0 = per.m_sigma as u64;
    let mut parts: Vec<u64> = per.sigma.iter().map(|&x| s0 - x as u64).collect();
    parts.extend(per.tau.iter().map(|&x| x as u64 - s0));
    parts.push(1);
    let mut term = multinomial(&parts);
    if s0 % 2 == 1 {
        term = -term;
    }
    let mut total = term.clone();
    for s in s0..per.m_tau as u64 {
        let num: u128 = (s as u128 + 2) * per.tau.iter().map(|&x| (x as u64 - s) as u128).product::<u128>();
        let den: u128 = per.sigma.iter().map(|&x| (s + 1 - x as u64) as u128).product();
        term = -(term * num) / den;
        total += &term;
    }
    total
}

/// `tet` of the regular tetrahedron with all labels `two_n`, from the
/// terminating balanced series
/// `(4n+1)!/(n!)^4 * sum_k (-n)_k^4 / ((1)_k^2 (-4n-1)_k k!)`.
pub fn tet_regular(two_n: u32) -> Result<BigInt> {
    if two_n % 2 == 1 {
        return Err(Error::OddArgument(two_n));
    }
    let n = (two_n / 2) as i64;
    let poch = |x: i64, k: i64| -> BigInt { (0..k).map(|i| BigInt::from(x + i)).product() };
    let mut series = BigRational::zero();
    for k in 0..=n {
        let num = poch(-n, k).pow(4);
        let den = poch(1, k).pow(2) * poch(-4 * n - 1, k) * factorial(k as u64);
        series += BigRational::new(num, den);
    }
    let pre = BigRational::new(factorial(4 * n as u64 + 1), factorial(n as u64).pow(4));
    let v = pre * series;
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// `J = prod_{i,j} (tau_j - sigma_i)!` and `E = a! b! c! d! e! f!`.
pub fn tet_normalizers(t: &TetLabels) -> (BigInt, BigInt) {
    let per = tet_perimeters(t);
    let mut j = BigInt::one();
    for &tau in &per.tau {
        for &sigma in &per.sigma {
            j *= factorial((tau - sigma) as u64);
        }
    }
    let e = t.flat().iter().map(|&x| factorial(x as u64)).product();
    (j, e)
}

/// `TET = J/E * tet`.
pub fn tet_k(t: &TetLabels) -> BigRational {
    let v = tet(t);
    if v.is_zero() {
        return BigRational::zero();
    }
    let (j, e) = tet_normalizers(t);
    BigRational::new(j * v, e)
}

/// Prime factorization of the product of the four face gons.
fn face_gon_product(t: &TetLabels) -> PrimePowers {
    let mut out = PrimePowers::one();
    for f in t.faces() {
        let g = gon3_prime_powers(f.a, f.b, f.c).expect("faces of an admissible tet");
        out.mul_pow(&g, 1);
    }
    out
}

/// Wigner 6j symbol `{a/2 b/2 c/2; d/2 e/2 f/2} = tet / sqrt(prod of face gons)`.
pub fn sixj(t: &TetLabels) -> Surd {
    let v = tet(t);
    if v.is_zero() {
        return Surd::zero();
    }
    let mut inv = PrimePowers::one();
    inv.mul_pow(&face_gon_product(t), -1);
    Surd::from_sqrt_factored(BigRational::from_integer(v), &inv)
}

/// The three Regge images, from the shifts `p12`, `p23` and `p31`.
///
/// Every image is checked to be an admissible tetrahedron.
pub fn regge_images(t: &TetLabels) -> Result<[TetLabels; 3]> {
    if !is_admissible_tet(t) {
        return Err(Error::NotAdmissible(t.to_string()));
    }
    let [a, b, c, d, e, f] = t.flat().map(|x| x as i64);
    let p12 = (a + b + d + e) / 2;
    let p23 = (b + c + e + f) / 2;
    let p31 = (a + c + d + f) / 2;
    let raw = [
        [p12 - a, p12 - b, c, p12 - d, p12 - e, f],
        [a, p23 - b, p23 - c, d, p23 - e, p23 - f],
        [p31 - a, b, p31 - c, p31 - d, e, p31 - f],
    ];
    let mut out = [*t; 3];
    for (slot, r) in out.iter_mut().zip(raw) {
        if r.iter().any(|&x| x < 0) {
            return Err(Error::ReggeViolation(t.to_string()));
        }
        let img = TetLabels::new(
            [r[0] as u32, r[1] as u32, r[2] as u32],
            [r[3] as u32, r[4] as u32, r[5] as u32],
        );
        if !is_admissible_tet(&img) {
            return Err(Error::ReggeViolation(t.to_string()));
        }
        *slot = img;
    }
    Ok(out)
}

/// Racah cell `C = (-1)^((a+c+d+f)/2) sqrt((b+1)(e+1)) 6j(T)`.
pub fn racah_cell(t: &TetLabels) -> Result<Surd> {
    if !is_admissible_tet(t) {
        return Err(Error::NotAdmissible(t.to_string()));
    }
    let [a, b, c, d, e, f] = t.flat();
    let v = tet(t);
    if v.is_zero() {
        return Ok(Surd::zero());
    }
    let sign = if ((a + c + d + f) / 2) % 2 == 0 { 1 } else { -1 };
    let mut x = PrimePowers::one();
    x.mul_pow(&face_gon_product(t), -1);
    x.mul_pow(&PrimePowers::of_u64((b as u64 + 1) * (e as u64 + 1)), 1);
    Ok(Surd::from_sqrt_factored(BigRational::from_integer(v * sign), &x))
}

/// Which label of `((a,b,c),(d,e,f))` is summed over in a bi-unitarity sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FreeSlot {
    B,
    E,
}

/// Range of the free label given the five fixed ones, listed in label
/// order with the free slot left out.
pub fn biunitarity_range(fixed: [u32; 5], slot: FreeSlot) -> BTreeSet<u32> {
    match slot {
        FreeSlot::B => {
            let [a, c, d, _e, f] = fixed;
            fusion_range(a, c).intersection(&fusion_range(d, f)).copied().collect()
        }
        FreeSlot::E => {
            let [a, _b, c, d, f] = fixed;
            fusion_range(a, f).intersection(&fusion_range(c, d)).copied().collect()
        }
    }
}

fn with_free(fixed: [u32; 5], slot: FreeSlot, x: u32) -> TetLabels {
    match slot {
        FreeSlot::B => {
            let [a, c, d, e, f] = fixed;
            TetLabels::new([a, x, c], [d, e, f])
        }
        FreeSlot::E => {
            let [a, b, c, d, f] = fixed;
            TetLabels::new([a, b, c], [d, x, f])
        }
    }
}

/// `sum (b+1)(e+1) tet^2 / (gon(a,b,c) gon(b,d,f) gon(a,e,f) gon(c,d,e))`
/// over the free slot. Equals 1 whenever the range is nonempty and the
/// fixed labels are consistent.
pub fn biunitarity_sum(fixed: [u32; 5], slot: FreeSlot) -> BigRational {
    let mut total = BigRational::zero();
    for x in biunitarity_range(fixed, slot) {
        let t = with_free(fixed, slot, x);
        let v = tet(&t);
        if v.is_zero() {
            continue;
        }
        let [_, b, _, _, e, _] = t.flat();
        let den: BigInt = t.faces().iter().map(|f| gon3(f.a, f.b, f.c)).product();
        let num = BigInt::from((b as u64 + 1) * (e as u64 + 1)) * &v * &v;
        total += BigRational::new(num, den);
    }
    total
}
