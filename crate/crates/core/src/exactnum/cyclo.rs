//! Cyclotomic polynomials and exact fractions whose denominators are
//! products of them.
//!
//! Every balanced q-integer factors as `[n] = q^(1-n) * prod Phi_d(q)` over
//! the divisors `d >= 3` of `2n`, so quotients of q-factorial products have
//! exact cyclotomic factorizations. Keeping denominators in that form makes
//! sums of such quotients canonical without any polynomial gcd.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use parking_lot::Mutex;

use super::laurent::{laurent_divexact, LaurentPoly};

static CACHE: Mutex<Option<HashMap<u32, Arc<LaurentPoly>>>> = parking_lot::const_mutex(None);

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `n`-th cyclotomic polynomial, as a Laurent polynomial with exponents
/// `0..=phi(n)`. Computed from `prod (x^d - 1)^mu(n/d)` and cached.
pub fn cyclotomic(n: u32) -> Arc<LaurentPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = CACHE.lock().get_or_insert_with(HashMap::new).get(&n) {
        return p.clone();
    }
    let mut up = Vec::new();
    let mut down = Vec::new();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => up.push(d as usize),
            -1 => down.push(d as usize),
            _ => {}
        }
    }
    // coefficients stay tiny for the indices used here; i128 is ample
    let mut coeffs: Vec<i128> = vec![1];
    for d in up {
        let mut next = vec![0i128; coeffs.len() + d];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + d] += c;
            next[i] -= c;
        }
        coeffs = next;
    }
    for d in down {
        // divide by x^d - 1: a = q (x^d - 1) gives q_i = q_{i+d} - a_{i+d}
        let qlen = coeffs.len() - d;
        let mut quot = vec![0i128; qlen];
        for i in (0..qlen).rev() {
            let above = if i + d < qlen { quot[i + d] } else { 0 };
            quot[i] = above + coeffs[i + d];
        }
        coeffs = quot;
    }
    let poly = Arc::new(LaurentPoly::from_dense(
        0,
        coeffs.into_iter().map(BigInt::from).collect(),
    ));
    CACHE
        .lock()
        .get_or_insert_with(HashMap::new)
        .insert(n, poly.clone());
    poly
}

/// `Phi_d(1)`: `p` when `d` is a power of the prime `p`, otherwise 1 (for `d >= 2`).
fn cyclotomic_at_one(d: u32) -> BigInt {
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            let mut m = d;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return if m == 1 { BigInt::from(p) } else { BigInt::one() };
        }
        p += 1;
    }
    BigInt::from(d)
}

/// `q^shift * prod Phi_d(q)^e_d` with signed exponents; the factored form
/// of products and quotients of q-integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloProduct {
    shift: i64,
    exps: BTreeMap<u32, i64>,
}

impl CycloProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// The q-integer `[n]`, `n >= 1`.
    pub fn qint(n: u32) -> Self {
        assert!(n >= 1, "[0] is zero and has no factorization");
        let mut out = Self::one();
        out.shift = 1 - n as i64;
        for d in divisors(2 * n) {
            if d >= 3 {
                out.exps.insert(d, 1);
            }
        }
        out
    }

    /// The q-factorial `[n]!`.
    pub fn qfactorial(n: u32) -> Self {
        let mut out = Self::one();
        let n64 = n as i64;
        out.shift = -n64 * (n64 - 1) / 2;
        for d in 3..=2 * n {
            // d | 2k  iff  d / gcd(d, 2) | k
            let step = if d % 2 == 0 { d / 2 } else { d };
            let count = (n / step) as i64;
            if count > 0 {
                out.exps.insert(d, count);
            }
        }
        out
    }

    /// `self * other^power`.
    pub fn mul_pow(&mut self, other: &CycloProduct, power: i64) {
        self.shift += other.shift * power;
        for (&d, &e) in &other.exps {
            let slot = self.exps.entry(d).or_insert(0);
            *slot += e * power;
            if *slot == 0 {
                self.exps.remove(&d);
            }
        }
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::one();
        out.mul_pow(self, -1);
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.exps.values().all(|&e| e >= 0)
    }

    /// Expands a product with only non-negative exponents.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        if !self.is_polynomial() {
            return None;
        }
        let mut acc = LaurentPoly::monomial(self.shift, BigInt::one());
        for (&d, &e) in &self.exps {
            let phi = cyclotomic(d);
            for _ in 0..e {
                acc = &acc * &*phi;
            }
        }
        Some(acc)
    }
}

/// An exact element `num / prod Phi_d^e_d` of the field of rational
/// functions in `q`, kept with every cancellable cyclotomic factor removed.
/// Two fractions are equal exactly when their representations are.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloFraction {
    num: LaurentPoly,
    den: BTreeMap<u32, u32>,
}

impl CycloFraction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        CycloFraction {
            num: p,
            den: BTreeMap::new(),
        }
    }

    pub fn from_product(p: &CycloProduct) -> Self {
        Self::from_poly(LaurentPoly::one()).mul_product(p)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// The denominator multiplied out.
    pub fn denominator(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (&d, &e) in &self.den {
            let phi = cyclotomic(d);
            for _ in 0..e {
                acc = &acc * &*phi;
            }
        }
        acc
    }

    /// The value as a Laurent polynomial when the denominator is trivial.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_empty().then(|| self.num.clone())
    }

    /// Value at `q = 1`; defined because only `Phi_d` with `d >= 3` occur.
    pub fn eval_at_one(&self) -> BigRational {
        let mut den = BigInt::one();
        for (&d, &e) in &self.den {
            den *= num_traits::pow(cyclotomic_at_one(d), e as usize);
        }
        BigRational::new(self.num.eval_at_one(), den)
    }

    pub fn mul_product(mut self, p: &CycloProduct) -> Self {
        if self.num.is_zero() {
            return self;
        }
        self.num = self.num.shift(p.shift);
        let mut touched = Vec::new();
        for (&d, &e) in &p.exps {
            if e > 0 {
                let have = self.den.get(&d).copied().unwrap_or(0) as i64;
                let cancel = have.min(e);
                if cancel > 0 {
                    let left = (have - cancel) as u32;
                    if left == 0 {
                        self.den.remove(&d);
                    } else {
                        self.den.insert(d, left);
                    }
                }
                let phi = cyclotomic(d);
                for _ in 0..(e - cancel) {
                    self.num = &self.num * &*phi;
                }
            } else if e < 0 {
                *self.den.entry(d).or_insert(0) += (-e) as u32;
                touched.push(d);
            }
        }
        self.reduce(touched);
        self
    }

    pub fn mul(&self, other: &CycloFraction) -> Self {
        let mut out = CycloFraction {
            num: &self.num * &other.num,
            den: self.den.clone(),
        };
        if out.num.is_zero() {
            return Self::zero();
        }
        for (&d, &e) in &other.den {
            *out.den.entry(d).or_insert(0) += e;
        }
        let touched = out.den.keys().copied().collect();
        out.reduce(touched);
        out
    }

    pub fn add(&self, other: &CycloFraction) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut lcm = self.den.clone();
        for (&d, &e) in &other.den {
            let slot = lcm.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |f: &CycloFraction| {
            let mut acc = f.num.clone();
            for (&d, &e) in &lcm {
                let have = f.den.get(&d).copied().unwrap_or(0);
                let phi = cyclotomic(d);
                for _ in have..e {
                    acc = &acc * &*phi;
                }
            }
            acc
        };
        let num = lift(self) + lift(other);
        if num.is_zero() {
            return Self::zero();
        }
        let touched = lcm.keys().copied().collect();
        let mut out = CycloFraction { num, den: lcm };
        out.reduce(touched);
        out
    }

    pub fn neg(&self) -> Self {
        CycloFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn reduce(&mut self, touched: Vec<u32>) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for d in touched {
            let Some(&e) = self.den.get(&d) else { continue };
            let phi = cyclotomic(d);
            let mut left = e;
            while left > 0 {
                match laurent_divexact(&self.num, &phi) {
                    Ok(q) => {
                        self.num = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left == 0 {
                self.den.remove(&d);
            } else {
                self.den.insert(d, left);
            }
        }
    }
}

impl fmt::Display for CycloFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.denominator())
    }
}
