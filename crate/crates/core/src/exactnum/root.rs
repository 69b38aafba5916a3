use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclo::cyclotomic;
use super::laurent::LaurentPoly;
use super::poly;
use crate::error::{Error, Result};

/// Largest `kappa` for which exact reduction modulo `Phi_{2 kappa}` is offered.
pub const EXACT_KAPPA_LIMIT: u32 = 20_000;

/// The evaluation point `q = exp(i pi / kappa)`, with level `kappa - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    kappa: u32,
}

impl RootOfUnity {
    pub fn new(kappa: u32) -> Result<Self> {
        if kappa < 2 {
            return Err(Error::InvalidKappa(kappa));
        }
        Ok(RootOfUnity { kappa })
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn level(&self) -> u32 {
        self.kappa - 2
    }

    pub fn q(&self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::PI / self.kappa as f64)
    }

    /// Admissible and `a + b + c <= 2 kappa - 4`.
    pub fn admits(&self, a: u32, b: u32, c: u32) -> bool {
        crate::triples::is_admissible_triple(a as i64, b as i64, c as i64)
            && (a + b + c) as i64 <= 2 * self.kappa as i64 - 4
    }

    /// Value of `p` at the root, accurate to about double precision relative
    /// to the result.
    ///
    /// Large q-polynomials have coefficients many orders of magnitude
    /// above their value at the root, so plain double Horner loses every
    /// digit. The sum is instead evaluated in binary fixed point with enough
    /// guard bits to cover the coefficient size, and the precision is raised
    /// until the error bound is small against the result. A result that
    /// stays below the bound is settled by the exact residue test when
    /// `kappa` allows it.
    pub fn eval(&self, p: &LaurentPoly) -> Complex64 {
        if p.is_zero() {
            return Complex64::zero();
        }
        let sum_bits: u64 = {
            let total: BigInt = p.terms().iter().map(|t| t.1.abs()).sum();
            total.bits()
        };
        let n_bits = 64 - (p.len() as u64).leading_zeros() as u64;
        let mut guard = 96u64;
        loop {
            let prec = sum_bits + n_bits + guard;
            let (re, im) = horner_fixed(p, self.kappa, prec);
            // each Horner step loses a few ulps of the running sum
            let err_bits = sum_bits + 2 * n_bits + 4;
            let mag_bits = re.abs().max(im.abs()).bits();
            if mag_bits > err_bits + 60 {
                return Complex64::new(fixed_to_f64(&re, prec), fixed_to_f64(&im, prec));
            }
            if guard >= 1536 {
                if self.kappa <= EXACT_KAPPA_LIMIT && self.vanishes(p) {
                    return Complex64::zero();
                }
                return Complex64::new(fixed_to_f64(&re, prec), fixed_to_f64(&im, prec));
            }
            guard *= 2;
        }
    }

    /// Exact residue of `p` modulo `Phi_{2 kappa}`: the canonical
    /// coordinates of `p(q)` in the power basis of the cyclotomic field.
    pub fn residue(&self, p: &LaurentPoly) -> Result<Vec<BigInt>> {
        if self.kappa > EXACT_KAPPA_LIMIT {
            return Err(Error::SizeLimit(format!(
                "exact reduction needs kappa <= {EXACT_KAPPA_LIMIT}"
            )));
        }
        let k = self.kappa as i64;
        // fold with q^kappa = -1 into degrees below kappa
        let mut folded = vec![BigInt::zero(); self.kappa as usize];
        for (e, c) in p.terms() {
            let r = e.rem_euclid(2 * k);
            if r >= k {
                folded[(r - k) as usize] -= c;
            } else {
                folded[r as usize] += c;
            }
        }
        let (_, modulus) = cyclotomic(2 * self.kappa).to_dense();
        Ok(poly::rem_monic(&folded, &modulus))
    }

    /// Product of two residues, reduced again.
    pub fn residue_mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let (_, modulus) = cyclotomic(2 * self.kappa).to_dense();
        poly::rem_monic(&poly::mul(a, b), &modulus)
    }

    /// Exact test `p(q) = 0`. Requires `kappa <= EXACT_KAPPA_LIMIT`.
    pub fn vanishes(&self, p: &LaurentPoly) -> bool {
        self.residue(p).map(|r| r.is_empty()).unwrap_or(false)
    }
}

/// `pi * 2^prec`, from Machin's formula.
fn pi_fixed(prec: u64) -> BigInt {
    let guard = 32;
    let one = BigInt::one() << (prec + guard) as usize;
    let atan_inv = |x: u64| -> BigInt {
        let x2 = BigInt::from(x * x);
        let mut term = &one / BigInt::from(x);
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        while !term.is_zero() {
            let t = &term / BigInt::from(2 * k + 1);
            if k.is_multiple_of(2) {
                sum += t;
            } else {
                sum -= t;
            }
            term /= &x2;
            k += 1;
        }
        sum
    };
    let pi = atan_inv(5) * 16 - atan_inv(239) * 4;
    pi >> guard as usize
}

/// `(cos(pi/kappa), sin(pi/kappa)) * 2^prec` by Taylor series.
fn root_fixed(kappa: u32, prec: u64) -> (BigInt, BigInt) {
    let guard = 32u64;
    let p = prec + guard;
    let theta = pi_fixed(p) / BigInt::from(kappa);
    let mut cos = BigInt::one() << p as usize;
    let mut sin = BigInt::zero();
    let mut term = BigInt::one() << p as usize;
    let mut n = 1u64;
    loop {
        term = ((&term * &theta) >> p as usize) / BigInt::from(n);
        if term.is_zero() {
            break;
        }
        match n % 4 {
            1 => sin += &term,
            2 => cos -= &term,
            3 => sin -= &term,
            _ => cos += &term,
        }
        n += 1;
    }
    (cos >> guard as usize, sin >> guard as usize)
}

fn cmul(a: &(BigInt, BigInt), b: &(BigInt, BigInt), prec: u64) -> (BigInt, BigInt) {
    let re = (&a.0 * &b.0 - &a.1 * &b.1) >> prec as usize;
    let im = (&a.0 * &b.1 + &a.1 * &b.0) >> prec as usize;
    (re, im)
}

fn cpow(base: &(BigInt, BigInt), mut e: u64, prec: u64) -> (BigInt, BigInt) {
    let mut acc = (BigInt::one() << prec as usize, BigInt::zero());
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = cmul(&acc, &b, prec);
        }
        b = cmul(&b, &b, prec);
        e >>= 1;
    }
    acc
}

/// Horner evaluation of `p` at `exp(i pi / kappa)` in fixed point.
fn horner_fixed(p: &LaurentPoly, kappa: u32, prec: u64) -> (BigInt, BigInt) {
    let z = root_fixed(kappa, prec);
    let period = 2 * kappa as i64;
    let mut powers: HashMap<i64, (BigInt, BigInt)> = HashMap::new();
    let mut power = |gap: i64| -> (BigInt, BigInt) {
        let g = gap.rem_euclid(period);
        powers
            .entry(g)
            .or_insert_with(|| cpow(&z, g as u64, prec))
            .clone()
    };
    let terms = p.terms();
    let mut acc = (BigInt::zero(), BigInt::zero());
    let mut prev = terms.last().map(|t| t.0).unwrap_or(0);
    for (e, c) in terms.iter().rev() {
        if prev != *e {
            acc = cmul(&acc, &power(prev - e), prec);
        }
        acc.0 += c << prec as usize;
        prev = *e;
    }
    cmul(&acc, &power(prev), prec)
}

fn fixed_to_f64(x: &BigInt, prec: u64) -> f64 {
    let bits = x.bits() as i64;
    let shift = (bits - 62).max(0);
    let head = (x >> shift as usize).to_f64().unwrap_or(0.0);
    head * 2f64.powi((shift - prec as i64) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::laurent::qint;

    #[test]
    fn rejects_small_kappa() {
        assert_eq!(RootOfUnity::new(1), Err(Error::InvalidKappa(1)));
        assert_eq!(RootOfUnity::new(5).unwrap().level(), 3);
    }

    #[test]
    fn pi_digits() {
        let pi = pi_fixed(200);
        let approx = fixed_to_f64(&pi, 200);
        assert!((approx - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn qint_closed_form() {
        for kappa in [3u32, 7, 60] {
            let root = RootOfUnity::new(kappa).unwrap();
            let x = std::f64::consts::PI / kappa as f64;
            for n in 0..2 * kappa {
                let v = root.eval(&qint(n));
                let expect = (n as f64 * x).sin() / x.sin();
                assert!((v.re - expect).abs() < 1e-12, "kappa {kappa} n {n}");
                assert!(v.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn kappa_zero_of_qint() {
        // [kappa] vanishes exactly at q = exp(i pi / kappa)
        let root = RootOfUnity::new(9).unwrap();
        assert!(root.vanishes(&qint(9)));
        assert!(!root.vanishes(&qint(8)));
        assert_eq!(root.eval(&qint(9)), Complex64::zero());
    }

    #[test]
    fn survives_cancellation() {
        // (q^2 - 2 + q^-2) * big + 1 at kappa = 2: q^2 = -1 so the value is
        // -4 * big + 1, computed without loss
        let big = num_traits::pow(BigInt::from(10), 40);
        let p = LaurentPoly::from_terms(vec![
            (2, big.clone()),
            (0, -&big * 2 + 1),
            (-2, big.clone()),
        ]);
        let v = RootOfUnity::new(2).unwrap().eval(&p);
        assert!((v.re / -4e40 - 1.0).abs() < 1e-14);
    }
}
