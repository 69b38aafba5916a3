//! Test-side oracles written straight from the defining formulas, plus
//! seeded samplers. Nothing here calls into the library's arithmetic.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gontet::triples::{is_admissible_tet, TetLabels};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fact(n: i64) -> BigInt {
    assert!(n >= 0);
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn admissible(a: u32, b: u32, c: u32) -> bool {
    (a + b + c).is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b
}

/// `(sigma+1)! / ((sigma-a)! (sigma-b)! (sigma-c)!)`.
pub fn gon(a: u32, b: u32, c: u32) -> BigInt {
    if !admissible(a, b, c) {
        return BigInt::zero();
    }
    let s = ((a + b + c) / 2) as i64;
    fact(s + 1) / (fact(s - a as i64) * fact(s - b as i64) * fact(s - c as i64))
}

/// Kauffman theta: `(-1)^s (s+1)! (s-a)! (s-b)! (s-c)! / (a! b! c!)`.
pub fn theta(a: u32, b: u32, c: u32) -> BigRational {
    let s = ((a + b + c) / 2) as i64;
    let num = fact(s + 1) * fact(s - a as i64) * fact(s - b as i64) * fact(s - c as i64);
    let v = BigRational::new(num, fact(a as i64) * fact(b as i64) * fact(c as i64));
    if s % 2 == 0 { v } else { -v }
}

/// Faces are the triples meeting each pair of opposite edges `(a,d)`,
/// `(b,e)`, `(c,f)` once.
pub fn faces(t: &TetLabels) -> [[u32; 3]; 4] {
    let [a, b, c] = t.first;
    let [d, e, f] = t.second;
    [[a, b, c], [a, e, f], [d, b, f], [d, e, c]]
}

fn perimeters(t: &TetLabels) -> ([i64; 4], [i64; 3]) {
    let [a, b, c] = t.first.map(|x| x as i64);
    let [d, e, f] = t.second.map(|x| x as i64);
    let sig = faces(t).map(|v| (v.iter().sum::<u32>() / 2) as i64);
    let tau = [(a + b + d + e) / 2, (b + c + e + f) / 2, (a + c + d + f) / 2];
    (sig, tau)
}

/// `sum_s (-1)^s (s+1)! / (prod (s - sigma_i)! prod (tau_j - s)!)`.
pub fn tet(t: &TetLabels) -> BigInt {
    if !faces(t).iter().all(|f| admissible(f[0], f[1], f[2])) {
        return BigInt::zero();
    }
    let (sig, tau) = perimeters(t);
    let lo = *sig.iter().max().unwrap();
    let hi = *tau.iter().min().unwrap();
    let mut total = BigInt::zero();
    for s in lo..=hi {
        let den: BigInt = sig.iter().map(|&x| fact(s - x)).product::<BigInt>()
            * tau.iter().map(|&x| fact(x - s)).product::<BigInt>();
        let term = fact(s + 1) / den;
        if s % 2 == 0 { total += term } else { total -= term }
    }
    total
}

/// `prod_{i,j} (tau_j - sigma_i)! / prod_edges e! * tet`.
pub fn tet_kauffman(t: &TetLabels) -> BigRational {
    let (sig, tau) = perimeters(t);
    let mut j = BigInt::one();
    for s in sig {
        for u in tau {
            j *= fact(u - s);
        }
    }
    let e: BigInt = t.flat().iter().map(|&x| fact(x as i64)).product();
    BigRational::new(j * tet(t), e)
}

/// `tet^2 / prod gon(face)`, the square of the 6j symbol.
pub fn sixj_squared(t: &TetLabels) -> BigRational {
    let v = tet(t);
    let g: BigInt = faces(t).iter().map(|f| gon(f[0], f[1], f[2])).product();
    BigRational::new(&v * &v, g)
}

pub fn qint_at(n: i64, q: f64) -> f64 {
    (q.powi(n as i32) - q.powi(-n as i32)) / (q - 1.0 / q)
}

pub fn qfact_at(n: i64, q: f64) -> f64 {
    (1..=n).map(|k| qint_at(k, q)).product()
}

/// `[s+1]! / ([s-a]! [s-b]! [s-c]!)` at a real `q`.
pub fn gon_q_at(a: u32, b: u32, c: u32, q: f64) -> f64 {
    let s = ((a + b + c) / 2) as i64;
    qfact_at(s + 1, q) / (qfact_at(s - a as i64, q) * qfact_at(s - b as i64, q) * qfact_at(s - c as i64, q))
}

pub fn poly_at(p: &gontet::exactnum::LaurentPoly, q: f64) -> f64 {
    p.terms()
        .iter()
        .map(|(e, c)| c.to_string().parse::<f64>().unwrap() * q.powi(*e as i32))
        .sum()
}

pub fn triple<R: Rng>(rng: &mut R, max: u32) -> [u32; 3] {
    loop {
        let t = [(); 3].map(|_| rng.gen_range(0..=max));
        if admissible(t[0], t[1], t[2]) {
            return t;
        }
    }
}

fn completion<R: Rng>(rng: &mut R, a: u32, b: u32, max: u32) -> Option<u32> {
    let lo = a.abs_diff(b);
    let hi = (a + b).min(max);
    (lo <= hi).then(|| lo + 2 * rng.gen_range(0..=(hi - lo) / 2))
}

pub fn tetra<R: Rng>(rng: &mut R, max: u32) -> TetLabels {
    loop {
        let [a, b, c] = triple(rng, max);
        let d = rng.gen_range(0..=max);
        let (Some(e), Some(f)) = (completion(rng, c, d, max), completion(rng, b, d, max)) else {
            continue;
        };
        let t = TetLabels::new([a, b, c], [d, e, f]);
        if is_admissible_tet(&t) {
            return t;
        }
    }
}

/// Nine labels of two admissible tetrahedra sharing the face `(a,b,c)`.
pub fn bipyramid<R: Rng>(rng: &mut R, max: u32) -> [u32; 9] {
    loop {
        let t = tetra(rng, max);
        let [a, b, c] = t.first;
        let g = rng.gen_range(0..=max);
        let (Some(h), Some(k)) = (completion(rng, c, g, max), completion(rng, b, g, max)) else {
            continue;
        };
        let u = TetLabels::new([a, b, c], [g, h, k]);
        if is_admissible_tet(&u) {
            let [d, e, f] = t.second;
            return [a, b, c, d, e, f, g, h, k];
        }
    }
}
