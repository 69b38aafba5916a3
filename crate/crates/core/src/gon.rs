//! The gon function on triples and polygons, the Kauffman theta value,
//! special Clebsch–Gordan coefficients and Stirling-type estimates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, PrimePowers, Surd};
use crate::triples::{fusion_range, fusion_range_multi, internal_vars, Triple};

const MEMO_LIMIT: usize = 1 << 20;

static GON3_MEMO: LazyLock<RwLock<HashMap<[u32; 3], BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

static POLY_MEMO: LazyLock<RwLock<HashMap<Vec<u32>, BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn memo_insert<K: std::hash::Hash + Eq>(memo: &RwLock<HashMap<K, BigInt>>, k: K, v: BigInt) {
    let mut w = memo.write();
    if w.len() >= MEMO_LIMIT {
        w.clear();
    }
    w.insert(k, v);
}

/// `gon(a,b,c) = (m+n+p+1)! / (m! n! p!)`, zero for non-admissible input.
pub fn gon3(a: u32, b: u32, c: u32) -> BigInt {
    let mut key = [a, b, c];
    key.sort_unstable();
    if let Some(v) = GON3_MEMO.read().get(&key) {
        return v.clone();
    }
    let v = gon3_uncached(a, b, c);
    memo_insert(&GON3_MEMO, key, v.clone());
    v
}

/// [`gon3`] without touching the shared cache.
pub fn gon3_uncached(a: u32, b: u32, c: u32) -> BigInt {
    let Ok(v) = internal_vars(Triple::new(a, b, c)) else {
        return BigInt::zero();
    };
    let (m, n, p, s) = (v.m as u64, v.n as u64, v.p as u64, v.sigma as u64);
    BigInt::from(p + m + 1) * binomial(s + 1, n) * binomial(p + m, p)
}

/// The two remaining binomial-product forms of [`gon3`], obtained by
/// cycling `(m, n, p)`.
pub fn gon3_alt_forms(a: u32, b: u32, c: u32) -> [BigInt; 2] {
    let Ok(v) = internal_vars(Triple::new(a, b, c)) else {
        return [BigInt::zero(), BigInt::zero()];
    };
    let (m, n, p, s) = (v.m as u64, v.n as u64, v.p as u64, v.sigma as u64);
    [
        BigInt::from(m + n + 1) * binomial(s + 1, p) * binomial(m + n, m),
        BigInt::from(n + p + 1) * binomial(s + 1, m) * binomial(n + p, n),
    ]
}

/// Kauffman's theta: `(-1)^sigma (sigma+1)! m! n! p! / ((m+n)! (m+p)! (n+p)!)`.
pub fn theta_k(a: u32, b: u32, c: u32) -> BigRational {
    let Ok(v) = internal_vars(Triple::new(a, b, c)) else {
        return BigRational::zero();
    };
    let (m, n, p, s) = (v.m as u64, v.n as u64, v.p as u64, v.sigma as u64);
    let num = factorial(s + 1) * factorial(m) * factorial(n) * factorial(p);
    let den = factorial(m + n) * factorial(m + p) * factorial(n + p);
    let r = BigRational::new(num, den);
    if s % 2 == 1 {
        -r
    } else {
        r
    }
}

/// gon of an arbitrary multiset of labels, by peeling the two largest
/// labels off and gluing along the intermediate channel.
pub fn gon_poly(xs: &[u32]) -> BigInt {
    let mut key = xs.to_vec();
    key.sort_unstable();
    gon_poly_sorted(key)
}

fn gon_poly_sorted(key: Vec<u32>) -> BigInt {
    match key.as_slice() {
        [] => return BigInt::one(),
        [a] => return if *a == 0 { BigInt::one() } else { BigInt::zero() },
        [a, b] => {
            return if a == b {
                BigInt::from(*a as u64 + 1)
            } else {
                BigInt::zero()
            }
        }
        [a, b, c] => return gon3(*a, *b, *c),
        _ => {}
    }
    if let Some(v) = POLY_MEMO.read().get(&key) {
        return v.clone();
    }
    let n = key.len();
    let (u, v) = (key[n - 2], key[n - 1]);
    let head = &key[..n - 2];
    let mids = fusion_range_multi(head);
    let mut total = BigInt::zero();
    for x in fusion_range(u, v) {
        if !mids.contains(&x) {
            continue;
        }
        let mut sub = head.to_vec();
        let at = sub.partition_point(|&y| y < x);
        sub.insert(at, x);
        let left = gon_poly_sorted(sub);
        if left.is_zero() {
            continue;
        }
        total += left * (gon3(x, u, v) / BigInt::from(x as u64 + 1));
    }
    memo_insert(&POLY_MEMO, key, total.clone());
    total
}

/// `gon(a,a,b,b)` from its terminating hypergeometric sum:
/// `sum_j (a+j+1)! (b+j+1)! / ((2j+1) j!^4 (a-j)! (b-j)!)`.
pub fn gon4_hyper(a: u32, b: u32) -> BigInt {
    let (a, b) = (a as u64, b as u64);
    let mut total = BigRational::zero();
    for j in 0..=a.min(b) {
        let num = factorial(a + j + 1) * factorial(b + j + 1);
        let fj = factorial(j);
        let den = BigInt::from(2 * j + 1)
            * fj.pow(4)
            * factorial(a - j)
            * factorial(b - j);
        total += BigRational::new(num, den);
    }
    assert!(total.is_integer(), "hypergeometric sum must be integral");
    total.to_integer()
}

/// A spin, stored as twice its value so half-integers are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spin(pub u32);

impl Spin {
    pub fn integer(j: u32) -> Self {
        Spin(2 * j)
    }

    pub fn twice(&self) -> u32 {
        self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Spin {
    type Err = String;

    /// Accepts `"3"`, `"3/2"` or `"1.5"`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let bad = || format!("bad spin {s:?}");
        if let Some((n, d)) = s.split_once('/') {
            let n: u32 = n.trim().parse().map_err(|_| bad())?;
            match d.trim() {
                "1" => Ok(Spin(2 * n)),
                "2" => Ok(Spin(n)),
                _ => Err(bad()),
            }
        } else if let Some((i, f)) = s.split_once('.') {
            let i: u32 = i.parse().map_err(|_| bad())?;
            match f.trim_end_matches('0') {
                "" => Ok(Spin(2 * i)),
                "5" => Ok(Spin(2 * i + 1)),
                _ => Err(bad()),
            }
        } else {
            s.parse::<u32>().map(Spin::integer).map_err(|_| bad())
        }
    }
}

/// Clebsch–Gordan coefficient `<j1 0 j2 0 | j 0>` for integer spins.
///
/// Equals `cos((j1+j2-j) pi/2) sqrt(2j+1) gon(j1,j2,j) / ((s+1) sqrt(gon(2j1,2j2,2j)))`
/// with `s = (j1+j2+j)/2`, and vanishes when the spins do not couple or
/// their sum is odd.
pub fn special_clebsch(j1: Spin, j2: Spin, j: Spin) -> Result<Surd> {
    for s in [j1, j2, j] {
        if !s.is_integer() {
            return Err(Error::NonIntegerSpin(s.to_string()));
        }
    }
    let (j1, j2, j) = (j1.0 / 2, j2.0 / 2, j.0 / 2);
    let g = gon3(j1, j2, j);
    if g.is_zero() {
        return Ok(Surd::zero());
    }
    let s = (j1 + j2 + j) / 2;
    let sign = if ((j1 + j2 - j) / 2) % 2 == 0 { 1 } else { -1 };
    let big = gon3(2 * j1, 2 * j2, 2 * j);
    // sqrt((2j+1) / big) = sqrt((2j+1) big) / big
    let coeff = BigRational::new(g * sign, BigInt::from(s as u64 + 1) * &big);
    let mut radical = PrimePowers::of_u64(2 * j as u64 + 1);
    radical.mul_pow(&gon3_prime_powers(2 * j1, 2 * j2, 2 * j)?, 1);
    Ok(Surd::from_sqrt_factored(coeff, &radical))
}

/// Prime factorization of `gon(a,b,c)` for an admissible triple.
pub fn gon3_prime_powers(a: u32, b: u32, c: u32) -> Result<PrimePowers> {
    let v = internal_vars(Triple::new(a, b, c))?;
    let mut out = PrimePowers::factorial(v.sigma as u64 + 1);
    for x in [v.m, v.n, v.p] {
        out.mul_pow(&PrimePowers::factorial(x as u64), -1);
    }
    Ok(out)
}

struct Shape {
    sigma: f64,
    m: f64,
    n: f64,
    p: f64,
    sigma_int: u64,
}

fn shape(a: u32, b: u32, c: u32) -> Result<Shape> {
    let v = internal_vars(Triple::new(a, b, c))?;
    if v.m == 0 || v.n == 0 || v.p == 0 {
        return Err(Error::Degenerate(Triple::new(a, b, c).to_string()));
    }
    Ok(Shape {
        sigma: v.sigma as f64,
        m: v.m as f64,
        n: v.n as f64,
        p: v.p as f64,
        sigma_int: v.sigma as u64,
    })
}

fn xlnx(x: f64) -> f64 {
    x * x.ln()
}

/// Natural log of the Stirling estimate for `gon(ka, kb, kc)`.
pub fn gon_asym_ln(a: u32, b: u32, c: u32, k: u32) -> Result<f64> {
    let s = shape(a, b, c)?;
    let area = (s.sigma * s.m * s.n * s.p).sqrt();
    let rate = xlnx(s.sigma) - xlnx(s.m) - xlnx(s.n) - xlnx(s.p);
    Ok((s.sigma * s.sigma / (2.0 * std::f64::consts::PI * area)).ln() + k as f64 * rate)
}

/// Stirling estimate `sigma^2/(2 pi A) (sigma^sigma / (m^m n^n p^p))^k` of
/// `gon(ka, kb, kc)`, with `A = sqrt(sigma m n p)`.
pub fn gon_asym(a: u32, b: u32, c: u32, k: u32) -> Result<f64> {
    gon_asym_ln(a, b, c, k).map(f64::exp)
}

/// Natural log of `|theta_k_asym|` and its sign.
pub fn theta_k_asym_ln(a: u32, b: u32, c: u32, k: u32) -> Result<(f64, i32)> {
    let s = shape(a, b, c)?;
    let area = (s.sigma * s.m * s.n * s.p).sqrt();
    let (mn, mp, np) = (s.m + s.n, s.m + s.p, s.n + s.p);
    let kf = k as f64;
    let pre = 1.5 * kf.ln() + (s.sigma * area * (2.0 * std::f64::consts::PI).sqrt()).ln()
        - 0.5 * (mn * mp * np).ln();
    let rate = xlnx(s.sigma) + xlnx(s.m) + xlnx(s.n) + xlnx(s.p) - xlnx(mn) - xlnx(np) - xlnx(mp);
    let sign = if (k as u64 * s.sigma_int).is_multiple_of(2) { 1 } else { -1 };
    Ok((pre + kf * rate, sign))
}

/// Stirling estimate of `theta_k(ka, kb, kc)`, sign included.
pub fn theta_k_asym(a: u32, b: u32, c: u32, k: u32) -> Result<f64> {
    theta_k_asym_ln(a, b, c, k).map(|(l, s)| s as f64 * l.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gon3_values() {
        for a in 0..10 {
            assert_eq!(gon3(a, a, 0), BigInt::from(a + 1));
        }
        assert_eq!(gon3(3, 7, 8), BigInt::from(2520));
        assert_eq!(gon3(8, 20, 24), BigInt::from(1181079900u64));
        assert_eq!(gon3(2, 2, 2), BigInt::from(24));
        assert!(gon3(1, 1, 1).is_zero());
        assert!(gon3(1, 1, 4).is_zero());
    }

    #[test]
    fn three_closed_forms_agree() {
        for (a, b, c) in [(3, 7, 8), (8, 20, 24), (5, 9, 6), (10, 0, 10)] {
            let g = gon3_uncached(a, b, c);
            assert_eq!(gon3_alt_forms(a, b, c), [g.clone(), g]);
        }
    }

    #[test]
    fn theta_values() {
        for a in 0..6u32 {
            let sign = if a % 2 == 0 { 1 } else { -1 };
            assert_eq!(theta_k(a, a, 0), BigRational::from(BigInt::from(sign * (a as i64 + 1))));
        }
        assert_eq!(theta_k(2, 2, 2), BigRational::from(BigInt::from(-3)));
        assert!(theta_k(1, 1, 1).is_zero());
    }

    #[test]
    fn polygons() {
        assert_eq!(gon_poly(&[11, 3, 4, 1, 5]), BigInt::from(18295200));
        assert_eq!(gon_poly(&[2, 2, 2, 2]), BigInt::from(381));
        assert_eq!(gon_poly(&[4, 7, 4, 7]), BigInt::from(18066760));
        let seq: Vec<BigInt> = (0..5).map(|a| gon_poly(&[a, a, a, a])).collect();
        assert_eq!(seq, [1, 16, 381, 10496, 307505].map(BigInt::from));
        assert!(gon_poly(&[1, 2, 2, 2]).is_zero());
        assert_eq!(gon_poly(&[0]), BigInt::one());
        assert_eq!(gon_poly(&[3, 3]), BigInt::from(4));
    }

    #[test]
    fn hypergeometric_form() {
        assert_eq!(gon4_hyper(0, 0), BigInt::one());
        assert_eq!(gon4_hyper(2, 2), BigInt::from(381));
        assert_eq!(gon4_hyper(4, 7), BigInt::from(18066760));
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(gon4_hyper(a, b), gon_poly(&[a, a, b, b]), "({a},{b})");
            }
        }
    }

    #[test]
    fn clebsch_values() {
        let s = |j| Spin::integer(j);
        assert_eq!(special_clebsch(s(0), s(0), s(0)).unwrap(), Surd::one());
        assert!(special_clebsch(s(1), s(1), s(1)).unwrap().is_zero());
        // sqrt(2/3) = 1/3 sqrt(6)
        assert_eq!(
            special_clebsch(s(1), s(1), s(2)).unwrap(),
            Surd::parse("1/3*sqrt(6)").unwrap()
        );
        assert!(matches!(
            special_clebsch(Spin(1), s(1), s(1)),
            Err(Error::NonIntegerSpin(_))
        ));
        // <1 0 1 0 | 0 0> = -1/sqrt(3)
        assert_eq!(
            special_clebsch(s(1), s(1), s(0)).unwrap(),
            Surd::parse("-1/3*sqrt(3)").unwrap()
        );
    }

    #[test]
    fn spin_parsing() {
        assert_eq!("3/2".parse::<Spin>().unwrap(), Spin(3));
        assert_eq!("2".parse::<Spin>().unwrap(), Spin(4));
        assert_eq!("2.5".parse::<Spin>().unwrap(), Spin(5));
        assert!("1/3".parse::<Spin>().is_err());
    }

    #[test]
    fn asymptotics_degenerate() {
        assert!(matches!(gon_asym(4, 4, 0, 3), Err(Error::Degenerate(_))));
        assert!(matches!(theta_k_asym(4, 4, 0, 3), Err(Error::Degenerate(_))));
    }
}
