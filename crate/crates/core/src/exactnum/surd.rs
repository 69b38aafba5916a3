use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::int::PrimePowers;

/// Trial division bound used when normalizing an arbitrary radicand.
const TRIAL_LIMIT: u64 = 1_000_000;

/// An exact number `coeff * sqrt(radicand)` with a squarefree radicand.
///
/// Zero is always stored as `0 * sqrt(1)` so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    coeff: BigRational,
    radicand: BigInt,
}

/// Canonicalizes `coeff * sqrt(radicand)`.
///
/// Square factors are pulled out of the radicand by trial division up to
/// the cube root of the remaining cofactor, followed by a perfect-square
/// test; this is exact whenever the cofactor left after dividing out primes
/// below one million is under 10^18. Radicands built internally come from
/// [`Surd::from_sqrt_factored`], which never needs to factor.
///
/// # Panics
/// Panics if `radicand` is negative.
pub fn surd_normalize(coeff: BigRational, radicand: BigInt) -> Surd {
    assert!(!radicand.is_negative(), "negative radicand");
    if coeff.is_zero() || radicand.is_zero() {
        return Surd::zero();
    }
    let (square_root, squarefree) = squarefree_split(&radicand);
    Surd {
        coeff: coeff * BigRational::from_integer(square_root),
        radicand: squarefree,
    }
}

/// Writes `n = s^2 * r` and returns `(s, r)`.
fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut kept = BigInt::one();
    let mut p = 2u64;
    loop {
        let pb = BigInt::from(p);
        if &pb * &pb * &pb > rest || p > TRIAL_LIMIT {
            break;
        }
        let mut count = 0u32;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            count += 1;
        }
        for _ in 0..count / 2 {
            outside *= &pb;
        }
        if count % 2 == 1 {
            kept *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // every prime left in `rest` exceeds its cube root, so `rest` is 1, a
    // prime, a product of two primes or a square
    let root = rest.sqrt();
    if &root * &root == rest {
        outside *= root;
    } else {
        kept *= rest;
    }
    (outside, kept)
}

impl Surd {
    pub fn zero() -> Self {
        Surd {
            coeff: BigRational::zero(),
            radicand: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Surd::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Surd {
            coeff: r,
            radicand: BigInt::one(),
        }
    }

    pub fn from_integer(n: BigInt) -> Self {
        Surd::from_rational(BigRational::from_integer(n))
    }

    /// `coeff * sqrt(x)` where `x` is given by its prime factorization,
    /// which may carry negative exponents.
    pub fn from_sqrt_factored(coeff: BigRational, x: &PrimePowers) -> Self {
        if coeff.is_zero() {
            return Surd::zero();
        }
        let (outside, radicand) = x.sqrt_split();
        Surd {
            coeff: coeff * outside,
            radicand,
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    /// The exact square, `coeff^2 * radicand`.
    pub fn square(&self) -> BigRational {
        &self.coeff * &self.coeff * BigRational::from_integer(self.radicand.clone())
    }

    pub fn signum(&self) -> i32 {
        match self.coeff.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let c = ratio_to_f64(&self.coeff);
        let r = self.radicand.to_f64().unwrap_or(f64::INFINITY);
        c * r.sqrt()
    }

    /// Parses the `p/q*sqrt(d)` text form (also accepts a bare rational).
    pub fn parse(s: &str) -> Option<Surd> {
        let s = s.trim();
        let (c, d) = match s.split_once("*sqrt(") {
            Some((c, rest)) => (c, rest.strip_suffix(')')?),
            None => (s, "1"),
        };
        let coeff = parse_rational(c)?;
        let radicand: BigInt = d.trim().parse().ok()?;
        if radicand.is_negative() {
            return None;
        }
        Some(surd_normalize(coeff, radicand))
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Rational to f64 that survives numerators and denominators beyond the
/// f64 range.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db - 60;
    let scaled = if shift >= 0 {
        r.numer() / (r.denom() << shift as usize)
    } else {
        (r.numer() << (-shift) as usize) / r.denom()
    };
    scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
}

/// Writes a rational always as `p/q`, even when `q = 1`.
pub(crate) fn rational_text(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*sqrt({})", rational_text(&self.coeff), self.radicand)
    }
}

impl Mul for &Surd {
    type Output = Surd;

    fn mul(self, rhs: &Surd) -> Surd {
        if self.is_zero() || rhs.is_zero() {
            return Surd::zero();
        }
        // both radicands squarefree: r1 r2 = g^2 (r1/g)(r2/g) with the
        // second factor squarefree
        let g = self.radicand.gcd(&rhs.radicand);
        let radicand = (&self.radicand / &g) * (&rhs.radicand / &g);
        Surd {
            coeff: &self.coeff * &rhs.coeff * BigRational::from_integer(g),
            radicand,
        }
    }
}

impl Mul for Surd {
    type Output = Surd;

    fn mul(self, rhs: Surd) -> Surd {
        &self * &rhs
    }
}

impl Mul<&BigRational> for &Surd {
    type Output = Surd;

    fn mul(self, rhs: &BigRational) -> Surd {
        if rhs.is_zero() {
            return Surd::zero();
        }
        Surd {
            coeff: &self.coeff * rhs,
            radicand: self.radicand.clone(),
        }
    }
}

impl Neg for Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        Surd {
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SurdRepr {
    coeff: String,
    radicand: String,
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SurdRepr {
            coeff: rational_text(&self.coeff),
            radicand: self.radicand.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Surd {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SurdRepr::deserialize(d)?;
        let coeff = parse_rational(&repr.coeff)
            .ok_or_else(|| serde::de::Error::custom("bad rational coefficient"))?;
        let radicand: BigInt = repr
            .radicand
            .parse()
            .map_err(|_| serde::de::Error::custom("bad radicand"))?;
        if radicand.is_negative() {
            return Err(serde::de::Error::custom("negative radicand"));
        }
        Ok(surd_normalize(coeff, radicand))
    }
}
