//! q-deformations of gon and tet, exact as Laurent polynomials in `q`,
//! with evaluation and truncated sums at `q = exp(i pi / kappa)`.

use std::collections::{BTreeSet, HashMap};
use std::sync::LazyLock;

use num_complex::Complex64;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::exactnum::{
    qint, qmultinomial, CycloFraction, CycloProduct, LaurentPoly, RootOfUnity, EXACT_KAPPA_LIMIT,
};
use crate::identities::{Bipyramid, IdentityReport};
use crate::tet::tet_perimeters;
use crate::triples::{fusion_range, is_admissible_tet, is_admissible_triple, q_fusion_range, TetLabels};

const MEMO_LIMIT: usize = 1 << 16;

/// Relative size of the imaginary part tolerated in values that are real
/// by palindromic symmetry.
pub const IMAG_TOLERANCE: f64 = 1e-6;

type PolyKey = (Vec<u32>, Option<u32>);

static POLY_MEMO: LazyLock<RwLock<HashMap<PolyKey, LaurentPoly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn admits(root: Option<&RootOfUnity>, a: u32, b: u32, c: u32) -> bool {
    match root {
        Some(r) => r.admits(a, b, c),
        None => is_admissible_triple(a as i64, b as i64, c as i64),
    }
}

fn fusion(a: u32, b: u32, root: Option<&RootOfUnity>) -> BTreeSet<u32> {
    match root {
        Some(r) => q_fusion_range(a, b, r),
        None => fusion_range(a, b),
    }
}

fn sign(exp: u32) -> i64 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `gon_q(a,b,c) = [sigma+1]! / ([m]! [n]! [p]!)`.
///
/// Zero when the triple is not admissible, or not q-admissible at `root`.
pub fn gon_q(a: u32, b: u32, c: u32, root: Option<&RootOfUnity>) -> LaurentPoly {
    if !admits(root, a, b, c) {
        return LaurentPoly::zero();
    }
    let m = (a + b - c) / 2;
    let n = (a + c - b) / 2;
    let p = (b + c - a) / 2;
    qmultinomial(&[m, n, p, 1])
}

/// `gon_q(a,b,c)` as a product of cyclotomic factors, for admissible input.
pub fn gon_q_product(a: u32, b: u32, c: u32) -> CycloProduct {
    assert!(
        is_admissible_triple(a as i64, b as i64, c as i64),
        "gon_q_product needs an admissible triple"
    );
    let sigma = (a + b + c) / 2;
    let mut out = CycloProduct::qfactorial(sigma + 1);
    for part in [sigma - c, sigma - b, sigma - a] {
        out.mul_pow(&CycloProduct::qfactorial(part), -1);
    }
    out
}

/// `gon_q` of a multiset, by the same peeling recursion as the classical
/// polygon function with weights `1/[x+1]`. At a root the intermediate
/// labels are restricted to q-admissible fusion channels.
pub fn gon_q_poly(xs: &[u32], root: Option<&RootOfUnity>) -> LaurentPoly {
    let mut key = xs.to_vec();
    key.sort_unstable();
    gon_q_poly_sorted(key, root)
}

fn gon_q_poly_sorted(key: Vec<u32>, root: Option<&RootOfUnity>) -> LaurentPoly {
    match key.as_slice() {
        [] => return LaurentPoly::one(),
        [a] => {
            return if *a == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        }
        [a, b] => {
            return if a == b && admits(root, *a, *b, 0) {
                qint(a + 1)
            } else {
                LaurentPoly::zero()
            }
        }
        [a, b, c] => return gon_q(*a, *b, *c, root),
        _ => {}
    }
    let memo_key = (key.clone(), root.map(|r| r.kappa()));
    if let Some(v) = POLY_MEMO.read().get(&memo_key) {
        return v.clone();
    }
    let n = key.len();
    let (u, v) = (key[n - 2], key[n - 1]);
    let head = &key[..n - 2];
    let mut total = LaurentPoly::zero();
    for x in fusion(u, v, root) {
        let mut sub = head.to_vec();
        let at = sub.partition_point(|&y| y < x);
        sub.insert(at, x);
        let left = gon_q_poly_sorted(sub, root);
        if left.is_zero() {
            continue;
        }
        let right = gon_q(x, u, v, root)
            .div_qint(x + 1)
            .expect("gon_q(x,u,v) is divisible by [x+1]");
        total += &(&left * &right);
    }
    let mut w = POLY_MEMO.write();
    if w.len() >= MEMO_LIMIT {
        w.clear();
    }
    w.insert(memo_key, total.clone());
    total
}

/// Exact test that `p` vanishes at `root`; numeric beyond the exact range.
fn vanishes_at(root: &RootOfUnity, p: &LaurentPoly, scale: f64) -> bool {
    if p.is_zero() {
        return true;
    }
    if root.kappa() <= EXACT_KAPPA_LIMIT {
        return root.vanishes(p);
    }
    root.eval(p).norm() <= 1e-9 * scale.max(1.0)
}

fn q_channel(
    x: u32,
    y: u32,
    z: u32,
    w: u32,
    root: Option<&RootOfUnity>,
) -> (LaurentPoly, BTreeSet<u32>) {
    let set: BTreeSet<u32> = fusion(x, y, root)
        .intersection(&fusion(z, w, root))
        .copied()
        .collect();
    let mut total = LaurentPoly::zero();
    for &s in &set {
        let right = gon_q(z, w, s, root)
            .div_qint(s + 1)
            .expect("gon_q(z,w,s) is divisible by [s+1]");
        total += &(&gon_q(x, y, s, root) * &right);
    }
    (total, set)
}

/// The s, t and u channels of the q-duality identity. Without a root the
/// channels are compared as Laurent polynomials; at a root, by their values.
pub fn verify_q_duality(
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    root: Option<&RootOfUnity>,
) -> IdentityReport<LaurentPoly> {
    let (s, ss) = q_channel(a, b, c, d, root);
    let (t, ts) = q_channel(a, d, b, c, root);
    let (u, us) = q_channel(a, c, b, d, root);
    let mut report = IdentityReport::new(
        vec![("s".into(), s), ("t".into(), t), ("u".into(), u)],
        vec![
            ("S".into(), ss.into_iter().collect()),
            ("T".into(), ts.into_iter().collect()),
            ("U".into(), us.into_iter().collect()),
        ],
    );
    if let Some(r) = root {
        let vals: Vec<&LaurentPoly> = report.values.iter().map(|(_, v)| v).collect();
        report.equal = vals.windows(2).all(|w| {
            let diff = w[0] - w[1];
            vanishes_at(r, &diff, w[0].max_abs_coeff().bits() as f64)
        });
    }
    report
}

fn tet_q_admissible(t: &TetLabels, root: Option<&RootOfUnity>) -> bool {
    is_admissible_tet(t) && t.faces().iter().all(|f| admits(root, f.a, f.b, f.c))
}

/// `tet_q(T) = sum_s (-1)^s [s+1]! / (prod_i [s - sigma_i]! prod_j [tau_j - s]!)`.
///
/// Zero for labels that are not admissible, or not q-admissible at `root`.
pub fn tet_q(t: &TetLabels, root: Option<&RootOfUnity>) -> LaurentPoly {
    if !tet_q_admissible(t, root) {
        return LaurentPoly::zero();
    }
    let per = tet_perimeters(t);
    let mut total = LaurentPoly::zero();
    for s in per.m_sigma..=per.m_tau {
        let mut parts: Vec<u32> = per.sigma.iter().map(|&x| s - x).collect();
        parts.extend(per.tau.iter().map(|&x| x - s));
        parts.push(1);
        let term = qmultinomial(&parts);
        if s % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// Real value of a palindromic polynomial at the root.
fn real_at(root: &RootOfUnity, p: &LaurentPoly, what: &str) -> Result<f64> {
    let z: Complex64 = root.eval(p);
    if z.im.abs() > IMAG_TOLERANCE * z.norm().max(f64::MIN_POSITIVE) && z.im.abs() > 1e-300 {
        return Err(Error::NumericInstability(format!(
            "{what}: imaginary part {:e} against value {:e}",
            z.im, z.re
        )));
    }
    Ok(z.re)
}

fn require_q_admissible(t: &TetLabels, root: &RootOfUnity) -> Result<()> {
    if !tet_q_admissible(t, Some(root)) {
        return Err(Error::NotQAdmissible {
            labels: t.to_string(),
            kappa: root.kappa(),
        });
    }
    Ok(())
}

/// `tet_q(T)` at `q = exp(i pi / kappa)`.
pub fn tet_q_at_root(t: &TetLabels, root: &RootOfUnity) -> Result<f64> {
    require_q_admissible(t, root)?;
    real_at(root, &tet_q(t, Some(root)), "tet_q")
}

/// `gon_q(a,b,c)` at the root, for a q-admissible triple.
pub fn gon_q_at_root(a: u32, b: u32, c: u32, root: &RootOfUnity) -> Result<f64> {
    if !root.admits(a, b, c) {
        return Err(Error::NotQAdmissible {
            labels: format!("[{a},{b},{c}]"),
            kappa: root.kappa(),
        });
    }
    real_at(root, &gon_q(a, b, c, Some(root)), "gon_q")
}

/// `TET_q = J_q / E_q * tet_q`, exact; zero for non-admissible labels.
pub fn tet_k_q(t: &TetLabels) -> CycloFraction {
    let v = tet_q(t, None);
    if v.is_zero() {
        return CycloFraction::zero();
    }
    let per = tet_perimeters(t);
    let mut factor = CycloProduct::one();
    for &tau in &per.tau {
        for &sigma in &per.sigma {
            factor.mul_pow(&CycloProduct::qfactorial(tau - sigma), 1);
        }
    }
    for x in t.flat() {
        factor.mul_pow(&CycloProduct::qfactorial(x), -1);
    }
    CycloFraction::from_poly(v).mul_product(&factor)
}

/// Quantum 6j symbol `tet_q / sqrt|prod of face gon_q|` at the root.
pub fn sixj_q(t: &TetLabels, root: &RootOfUnity) -> Result<f64> {
    require_q_admissible(t, root)?;
    let v = tet_q_at_root(t, root)?;
    let mut norm = 1.0f64;
    for f in t.faces() {
        norm *= gon_q_at_root(f.a, f.b, f.c, root)?.abs().sqrt();
    }
    Ok(v / norm)
}

/// `tet_q(T1) tet_q(T2) / ((-1)^((a+b+c)/2) gon_q(a,b,c))`.
pub fn hed1_q(bp: &Bipyramid) -> CycloFraction {
    let [a, b, c, ..] = bp.labels;
    let [t1, t2] = bp.tetrahedra();
    let num = &(&tet_q(&t1, None) * &tet_q(&t2, None)) * &LaurentPoly::constant(sign((a + b + c) / 2).into());
    if num.is_zero() {
        return CycloFraction::zero();
    }
    CycloFraction::from_poly(num).mul_product(&gon_q_product(a, b, c).inverse())
}

/// Range of the axis label in [`hed2_q`]: the classical range, cut down to
/// q-admissible channels at a root.
pub fn q_axis_range(bp: &Bipyramid, root: Option<&RootOfUnity>) -> BTreeSet<u32> {
    let [_, _, _, d, e, f, g, h, k] = bp.labels;
    let dg = fusion(d, g, root);
    let fk = fusion(f, k, root);
    fusion(h, e, root)
        .into_iter()
        .filter(|x| dg.contains(x) && fk.contains(x))
        .collect()
}

/// `sum_x (-1)^x [x+1] tet_q tet_q tet_q` over the three tetrahedra around
/// the axis, each divided by the signed `gon_q` of its face containing `x`.
pub fn hed2_q(bp: &Bipyramid, root: Option<&RootOfUnity>) -> CycloFraction {
    let [a, b, c, d, e, f, g, h, k] = bp.labels;
    let mut total = CycloFraction::zero();
    for x in q_axis_range(bp, root) {
        let t1 = tet_q(&TetLabels::new([c, e, d], [x, g, h]), None);
        let t2 = tet_q(&TetLabels::new([b, d, f], [x, k, g]), None);
        let t3 = tet_q(&TetLabels::new([a, e, f], [x, k, h]), None);
        let s = sign(x) * sign((x + d + g) / 2) * sign((x + f + k) / 2) * sign((x + e + h) / 2);
        let num = (&(&t1 * &t2) * &t3).mul_qint(x + 1);
        if num.is_zero() {
            continue;
        }
        let num = &num * &LaurentPoly::constant(s.into());
        let mut den = gon_q_product(x, d, g);
        den.mul_pow(&gon_q_product(x, f, k), 1);
        den.mul_pow(&gon_q_product(x, e, h), 1);
        let term = CycloFraction::from_poly(num).mul_product(&den.inverse());
        total = total.add(&term);
    }
    total
}

/// The quantum pentagon identity `hed1_q = hed2_q`.
///
/// Without a root both sides are compared as exact rational functions. At
/// a root the axis sum is truncated, the two sides differ as functions, and
/// the comparison is of their values: every denominator is a product of
/// `Phi_d` with `d < 2 kappa`, so the difference vanishes at the root
/// exactly when its numerator does.
pub fn verify_q_pentagon(
    bp: &Bipyramid,
    root: Option<&RootOfUnity>,
) -> Result<IdentityReport<CycloFraction>> {
    if let Some(r) = root {
        for t in bp.tetrahedra() {
            require_q_admissible(&t, r)?;
        }
    }
    let lhs = hed1_q(bp);
    let rhs = hed2_q(bp, root);
    let axis: Vec<u32> = q_axis_range(bp, root).into_iter().collect();
    let mut report = IdentityReport::new(
        vec![("hed1_q".into(), lhs), ("hed2_q".into(), rhs)],
        vec![("x".into(), axis)],
    );
    if let Some(r) = root {
        let diff = report.values[0].1.add(&report.values[1].1.neg());
        let scale = report.values[0].1.numerator().max_abs_coeff().bits() as f64;
        report.equal = vanishes_at(r, diff.numerator(), scale);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gon::{gon3, gon_poly};
    use crate::tet::{tet, tet_k};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn root(k: u32) -> RootOfUnity {
        RootOfUnity::new(k).unwrap()
    }

    #[test]
    fn gon_q_triples() {
        let g = gon_q(3, 7, 8, None);
        assert_eq!(g.min_exp(), Some(-29));
        assert_eq!(g.max_exp(), Some(29));
        assert_eq!(g.eval_at_one(), BigInt::from(2520));
        let expect = &(&(&qint(7) * &qint(8)) * &qint(9)) * &qint(10);
        assert_eq!(g.mul_qint(2), expect);
        assert_eq!(gon_q(5, 5, 0, None), qint(6));
        assert!(gon_q(1, 1, 1, None).is_zero());
        assert_eq!(
            CycloFraction::from_product(&gon_q_product(3, 7, 8)).to_laurent(),
            Some(g)
        );
    }

    #[test]
    fn root_truncation() {
        let r = root(5);
        assert!(!gon_q(2, 2, 2, Some(&r)).is_zero());
        assert!(gon_q(2, 3, 3, Some(&r)).is_zero());
        assert!(gon_q_poly(&[4, 4], Some(&r)).is_zero());
        assert_eq!(gon_q_poly(&[3, 3], Some(&r)), qint(4));
    }

    #[test]
    fn polygons() {
        let p = gon_q_poly(&[2, 2, 2, 2], None);
        let coeffs = [1, 4, 13, 27, 47, 63, 71, 63, 47, 27, 13, 4, 1];
        let expect = LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (12 - 2 * k as i64, BigInt::from(c))),
        );
        assert_eq!(p, expect);
        let p = gon_q_poly(&[11, 3, 4, 1, 5], None);
        assert_eq!(p.eval_at_one(), BigInt::from(18295200));
        assert_eq!(p.min_exp(), Some(-70));
        assert_eq!(gon_q_poly(&[0], None), LaurentPoly::one());
    }

    #[test]
    fn duality() {
        let rep = verify_q_duality(2, 2, 2, 2, None);
        assert!(rep.equal);
        assert_eq!(rep.lhs(), &gon_q_poly(&[2, 2, 2, 2], None));
        let rep = verify_q_duality(1, 1, 1, 1, Some(&root(3)));
        assert!(rep.equal);
        let rep = verify_q_duality(1, 2, 1, 1, None);
        assert!(rep.equal && rep.lhs().is_zero());
    }

    #[test]
    fn tet_q_values() {
        let t: TetLabels = "[[14,41,33],[50,23,21]]".parse().unwrap();
        let p = tet_q(&t, None);
        assert!(p.is_palindromic());
        assert_eq!(p.eval_at_one(), tet(&t));
        let v = tet_q_at_root(&t, &root(60)).unwrap();
        assert!((v / 1.53314e17 - 1.0).abs() < 1e-4, "{v}");
        let zero = TetLabels::new([0; 3], [0; 3]);
        assert_eq!(tet_q(&zero, None), LaurentPoly::one());
        assert_eq!(tet_q_at_root(&zero, &root(5)).unwrap(), 1.0);
    }

    #[test]
    fn tet_k_and_sixj_limits() {
        let t: TetLabels = "[[8,20,24],[15,13,17]]".parse().unwrap();
        assert_eq!(tet_k_q(&t).eval_at_one(), tet_k(&t));
        assert_eq!(
            tet_k_q(&t).eval_at_one(),
            BigRational::new(477531.into(), 92176448.into())
        );
        let classical = crate::tet::sixj(&t).to_f64();
        let q = sixj_q(&t, &root(100_000)).unwrap();
        assert!((q / classical - 1.0).abs() < 1e-6);
        let v = tet_q_at_root(&t, &root(1_000_000)).unwrap();
        let exact = 332385335268386400f64;
        assert!((v / exact - 1.0).abs() < 1e-6);
        assert!(sixj_q(&t, &root(20)).is_err());
        assert_eq!(gon3(8, 20, 24).to_string(), "1181079900");
    }

    #[test]
    fn pentagon_small() {
        let bp = Bipyramid::new([2, 2, 2, 2, 2, 2, 2, 2, 2]).unwrap();
        let rep = verify_q_pentagon(&bp, None).unwrap();
        assert!(rep.equal);
        let rep = verify_q_pentagon(&bp, Some(&root(5))).unwrap();
        assert!(rep.equal);
        let zero = Bipyramid::new([0; 9]).unwrap();
        let rep = verify_q_pentagon(&zero, Some(&root(3))).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.lhs().to_laurent(), Some(LaurentPoly::one()));
        assert_eq!(gon_poly(&[2, 2, 2, 2]), BigInt::from(381));
    }
}
