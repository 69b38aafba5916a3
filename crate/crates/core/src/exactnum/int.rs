//! Integer combinatorics: factorials, binomials, multinomials and prime
//! factorizations of factorial quotients.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use parking_lot::{const_rwlock, RwLock};

static FACTORIALS: RwLock<Vec<BigInt>> = const_rwlock(Vec::new());

/// `n!`, served from a process-wide table that grows on demand.
pub fn factorial(n: u64) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read();
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut small: u128 = 1;
    let mut i = 1u64;
    // After step i the accumulator holds C(n - k + i, i), always an integer.
    while i <= k {
        match small.checked_mul((n - k + i) as u128) {
            Some(v) => {
                small = v / i as u128;
                i += 1;
            }
            None => break,
        }
    }
    if i > k {
        return BigInt::from(small);
    }
    let mut big = BigUint::from(small);
    for j in i..=k {
        big *= n - k + j;
        big /= j;
    }
    BigInt::from(big)
}

/// Multinomial coefficient `(k1 + ... + kr)! / (k1! ... kr!)`, built as a
/// product of binomials so no full factorial is ever formed.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total = 0u64;
    let mut acc = BigInt::one();
    for &k in parts {
        total += k;
        if k > 0 {
            acc *= binomial(total, k);
        }
    }
    acc
}

/// Primes `<= n` by a plain sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Exponent of the prime `p` in `n!` (Legendre's formula).
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut v = 0;
    let mut q = n / p;
    while q > 0 {
        v += q;
        q /= p;
    }
    v
}

/// A nonzero rational number stored as a map prime -> signed exponent.
///
/// Products and quotients of factorials factor cheaply this way, and square
/// roots of such numbers split exactly into a rational part and a squarefree
/// radicand without any integer factoring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimePowers {
    exps: BTreeMap<u64, i64>,
}

impl PrimePowers {
    pub fn one() -> Self {
        Self::default()
    }

    /// Factorization of `n!`.
    pub fn factorial(n: u64) -> Self {
        let mut out = Self::one();
        for p in primes_up_to(n) {
            out.exps.insert(p, factorial_valuation(n, p) as i64);
        }
        out
    }

    /// Factorization of a positive machine integer by trial division.
    pub fn of_u64(mut n: u64) -> Self {
        assert!(n > 0, "cannot factor zero");
        let mut out = Self::one();
        let mut p = 2u64;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *out.exps.entry(p).or_insert(0) += 1;
                n /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > 1 {
            *out.exps.entry(n).or_insert(0) += 1;
        }
        out
    }

    /// `self * other^power` for a signed power.
    pub fn mul_pow(&mut self, other: &PrimePowers, power: i64) {
        for (&p, &e) in &other.exps {
            let slot = self.exps.entry(p).or_insert(0);
            *slot += e * power;
            if *slot == 0 {
                self.exps.remove(&p);
            }
        }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exps.iter().map(|(&p, &e)| (p, e))
    }

    /// The represented rational number.
    pub fn value(&self) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (&p, &e) in &self.exps {
            let pe: BigInt = Pow::pow(BigInt::from(p), e.unsigned_abs());
            if e > 0 {
                num *= pe;
            } else {
                den *= pe;
            }
        }
        BigRational::new(num, den)
    }

    /// Splits `sqrt(self)` as `outside * sqrt(radicand)` with a squarefree
    /// integer radicand.
    pub fn sqrt_split(&self) -> (BigRational, BigInt) {
        let mut out_num = BigInt::one();
        let mut out_den = BigInt::one();
        let mut radicand = BigInt::one();
        for (&p, &e) in &self.exps {
            let half = e.div_euclid(2);
            let odd = e.rem_euclid(2);
            let ph: BigInt = Pow::pow(BigInt::from(p), half.unsigned_abs());
            if half > 0 {
                out_num *= ph;
            } else {
                out_den *= ph;
            }
            if odd == 1 {
                radicand *= p;
            }
        }
        (BigRational::new(out_num, out_den), radicand)
    }
}
