use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Laurent polynomial in `q` with integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so derived
/// equality and hashing are canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(0, c)
    }

    /// `c * q^e`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut terms: Vec<(i64, BigInt)> = iter.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        LaurentPoly { terms: out }
    }

    /// Ordinary polynomial `coeffs[0] + coeffs[1] q + ...` times `q^low`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, c))
            .collect();
        LaurentPoly { terms }
    }

    /// Dense coefficients from the lowest to the highest exponent.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return (0, Vec::new());
        };
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Largest coefficient magnitude, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| t.1.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|t| &t.1).sum()
    }

    /// True when the coefficient of `q^e` equals that of `q^-e` for all `e`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.terms.len();
        (0..n).all(|i| {
            let (e, c) = &self.terms[i];
            let (f, d) = &self.terms[n - 1 - i];
            *e == -*f && c == d
        })
    }

    /// Greatest common divisor of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `k`, which must divide them all.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c / k)).collect(),
        }
    }

    /// Multiplies by `q^t - q^-t`.
    pub fn mul_binomial(&self, t: i64) -> Self {
        if t == 0 {
            return Self::zero();
        }
        self.shift(t) - self.shift(-t)
    }

    /// Exact division by `q^j - q^-j` (`j > 0`).
    pub fn div_binomial(&self, j: i64) -> Result<Self> {
        assert!(j > 0, "divisor exponent must be positive");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (lo, a) = self.to_dense();
        let hi = lo + a.len() as i64 - 1;
        // quotient spans [lo + j, hi - j]; with a[e] = q[e - j] - q[e + j]
        let qlo = lo + j;
        let qhi = hi - j;
        if qhi < qlo {
            return Err(Error::NotDivisible);
        }
        let len = (qhi - qlo + 1) as usize;
        let mut quot = vec![BigInt::zero(); len];
        let step = (2 * j) as usize;
        for x in (0..len).rev() {
            // exponent qlo + x; a index of exponent qlo + x + j is x + 2j
            let mut v = a[x + step].clone();
            if x + step < len {
                v += &quot[x + step];
            }
            quot[x] = v;
        }
        // remaining equations for the lowest 2j exponents of a
        for (i, ai) in a.iter().enumerate().take(step) {
            let expected = if i < len { -&quot[i] } else { BigInt::zero() };
            if *ai != expected {
                return Err(Error::NotDivisible);
            }
        }
        Ok(Self::from_dense(qlo, quot))
    }

    /// Exact division by the q-integer `[k]_q`, using
    /// `P / [k] = P (q - q^-1) / (q^k - q^-k)`.
    pub fn div_qint(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::NotDivisible);
        }
        if k == 1 {
            return Ok(self.clone());
        }
        self.mul_binomial(1).div_binomial(k as i64)
    }

    /// Multiplies by the q-integer `[k]_q`.
    pub fn mul_qint(&self, k: u32) -> Self {
        if k == 0 {
            return Self::zero();
        }
        self.mul_binomial(k as i64)
            .div_binomial(1)
            .expect("q-integer multiple is divisible by [1]")
    }

    /// Exact quotient `self / divisor`.
    pub fn divexact(&self, divisor: &LaurentPoly) -> Result<Self> {
        laurent_divexact(self, divisor)
    }

    /// Double-precision value at a complex point, see [`laurent_eval`].
    pub fn eval(&self, z: Complex64) -> Complex64 {
        laurent_eval(self, z)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

/// The balanced q-integer `q^(n-1) + q^(n-3) + ... + q^(1-n)`, zero for `n = 0`.
pub fn qint(n: u32) -> LaurentPoly {
    let n = n as i64;
    LaurentPoly {
        terms: (0..n).map(|i| (1 - n + 2 * i, BigInt::one())).collect(),
    }
}

/// `[s]! = [1][2]...[s]`.
pub fn qfactorial(s: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 2..=s {
        acc = acc.mul_qint(k);
    }
    acc
}

/// Balanced q-multinomial `[k1 + ... + kr]! / ([k1]! ... [kr]!)`.
///
/// Built one factor at a time as `acc * [t] / [j]`; every intermediate is a
/// product of q-binomials, so each division is exact and costs a single
/// linear pass.
pub fn qmultinomial(parts: &[u32]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut total = 0i64;
    for &k in parts {
        for j in 1..=k as i64 {
            total += 1;
            if j == total {
                continue;
            }
            acc = acc
                .mul_binomial(total)
                .div_binomial(j)
                .expect("q-binomial products are Laurent polynomials");
        }
    }
    acc
}

/// Balanced q-binomial `[n]! / ([k]! [n-k]!)`, zero when `k > n`.
pub fn qbinomial(n: u32, k: u32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    qmultinomial(&[k, n - k])
}

/// Exact quotient of Laurent polynomials.
///
/// Both operands are shifted to ordinary polynomials with nonzero constant
/// term; since such a divisor is coprime to `q`, Laurent divisibility is the
/// same as polynomial divisibility over the integers.
pub fn laurent_divexact(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    if b.is_zero() {
        return Err(Error::NotDivisible);
    }
    if a.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    if b.len() == 1 {
        let (e, c) = &b.terms[0];
        let mut terms = Vec::with_capacity(a.len());
        for (f, d) in &a.terms {
            let (q, r) = d.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            terms.push((f - e, q));
        }
        return Ok(LaurentPoly { terms });
    }
    let (alo, mut rem) = a.to_dense();
    let (blo, bd) = b.to_dense();
    if rem.len() < bd.len() {
        return Err(Error::NotDivisible);
    }
    let qlen = rem.len() - bd.len() + 1;
    let lead = bd.last().expect("nonzero divisor").clone();
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let top = &rem[i + bd.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        for (k, bk) in bd.iter().enumerate() {
            if !bk.is_zero() {
                rem[i + k] -= &q * bk;
            }
        }
        quot[i] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::NotDivisible);
    }
    Ok(LaurentPoly::from_dense(alo - blo, quot))
}

/// Double-precision value of `p` at `z` by Horner's rule over the exponent
/// gaps, after factoring out the lowest power.
///
/// The absolute error is bounded by roughly
/// `#terms * max|coeff| * 2^-52` times a small constant, so results whose
/// magnitude is far below the largest coefficient lose relative accuracy;
/// [`super::RootOfUnity::eval`] is the high-precision alternative.
pub fn laurent_eval(p: &LaurentPoly, z: Complex64) -> Complex64 {
    let Some(low) = p.min_exp() else {
        return Complex64::zero();
    };
    let mut acc = Complex64::zero();
    let mut prev = p.max_exp().unwrap_or(0);
    for (e, c) in p.terms.iter().rev() {
        acc = acc * z.powi((prev - e) as i32) + c.to_f64().unwrap_or(f64::NAN);
        prev = *e;
    }
    acc * z.powi(low as i32)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, true)
    }
}

fn merge(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let sign = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
        let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else if take_b {
            out.push((b.terms[j].0, sign(&b.terms[j].1)));
            j += 1;
        } else {
            let c = if negate_b {
                &a.terms[i].1 - &b.terms[j].1
            } else {
                &a.terms[i].1 + &b.terms[j].1
            };
            if !c.is_zero() {
                out.push((a.terms[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    LaurentPoly { terms: out }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return self.scale(c).shift(*e);
        }
        if self.len() == 1 {
            return rhs * self;
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                acc[(e + f - lo) as usize] += c * d;
            }
        }
        LaurentPoly::from_dense(lo, acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    terms: Vec<(i64, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentRepr {
            terms: self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (e, c) in repr.terms {
            let c: BigInt = c
                .parse()
                .map_err(|_| serde::de::Error::custom("bad coefficient"))?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
