//! Seeded random admissible inputs for the verification suites and benches.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use gontet::identities::Bipyramid;
use gontet::triples::{is_admissible_tet, is_admissible_triple, TetLabels};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn admissible(a: u32, b: u32, c: u32) -> bool {
    is_admissible_triple(a as i64, b as i64, c as i64)
}

/// Third label completing `(a, b)` to an admissible triple, if any fits
/// under `max`.
fn completion<R: Rng>(rng: &mut R, a: u32, b: u32, max: u32) -> Option<u32> {
    let lo = a.abs_diff(b);
    let hi = (a + b).min(max);
    if lo > hi {
        return None;
    }
    let steps = (hi - lo) / 2;
    Some(lo + 2 * rng.gen_range(0..=steps))
}

pub fn triple<R: Rng>(rng: &mut R, max: u32) -> [u32; 3] {
    loop {
        let a = rng.gen_range(0..=max);
        let b = rng.gen_range(0..=max);
        if let Some(c) = completion(rng, a, b, max) {
            return [a, b, c];
        }
    }
}

/// Uniform labels up to `max`, resampled until the four faces close up.
pub fn tet<R: Rng>(rng: &mut R, max: u32) -> TetLabels {
    loop {
        let [a, b, c] = triple(rng, max);
        let d = rng.gen_range(0..=max);
        let Some(f) = completion(rng, b, d, max) else { continue };
        let Some(e) = completion(rng, c, d, max) else { continue };
        let t = TetLabels::new([a, b, c], [d, e, f]);
        if is_admissible_tet(&t) {
            return t;
        }
    }
}

/// A second tetrahedron glued on the face `(a,b,c)` of a random first one.
pub fn bipyramid<R: Rng>(rng: &mut R, max: u32) -> Bipyramid {
    loop {
        let t = tet(rng, max);
        let [a, b, c] = t.first;
        let [d, e, f] = t.second;
        for _ in 0..64 {
            let g = rng.gen_range(0..=max);
            let Some(k) = completion(rng, b, g, max) else { continue };
            let Some(h) = completion(rng, c, g, max) else { continue };
            if let Ok(bp) = Bipyramid::new([a, b, c, d, e, f, g, h, k]) {
                return bp;
            }
        }
    }
}

/// Five fixed labels for a bi-unitarity sum around a random admissible tet.
pub fn quadruple<R: Rng>(rng: &mut R, max: u32) -> [u32; 4] {
    [(); 4].map(|_| rng.gen_range(0..=max))
}

pub fn is_admissible(t: [u32; 3]) -> bool {
    admissible(t[0], t[1], t[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_admissible_and_seeded() {
        let mut r = rng(3);
        for _ in 0..200 {
            assert!(is_admissible(triple(&mut r, 30)));
            let t = tet(&mut r, 25);
            assert!(is_admissible_tet(&t));
            assert!(t.flat().iter().all(|&x| x <= 25));
        }
        let a: Vec<_> = (0..5).map(|_| tet(&mut rng(9), 20)).collect();
        let b: Vec<_> = (0..5).map(|_| tet(&mut rng(9), 20)).collect();
        assert_eq!(a, b);
        let bp = bipyramid(&mut rng(1), 12);
        assert!(bp.labels.iter().all(|&x| x <= 12));
    }
}
