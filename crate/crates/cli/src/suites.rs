//! Verification suites behind the `verify` and `verify-q` verbs.

use clap::ValueEnum;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use gontet::exactnum::{BigInt, BigRational, RootOfUnity};
use gontet::gon::{gon3, gon4_hyper, gon_poly};
use gontet::hilbert::{rowsum_gon, trace_inverse};
use gontet::identities::{barycentric_p, dyson_ct, hed1, hed2, verify_duality, Bipyramid};
use gontet::quantum::{gon_q_poly, tet_k_q, tet_q, verify_q_duality, verify_q_pentagon};
use gontet::tet::{biunitarity_range, biunitarity_sum, regge_images, tet, tet_k, FreeSlot};
use gontet::triples::{is_admissible_triple, tet_symmetry_images};

use crate::sample;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Duality,
    Pascal,
    Beta,
    Divisibility,
    Regge,
    Symmetry,
    Biunit,
    Hed,
    Barycentric,
    Dyson,
    Hilbert,
    Hyper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QSuite {
    Duality,
    ClassicalLimit,
    Pentagon,
    Unimodal,
}

/// Outcome of a suite; `failures` keeps the first few offending inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

const KEEP_FAILURES: usize = 5;

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            suite: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(what());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Parameters shared by all suites: label bound, sample count, seed and
/// whether to enumerate exhaustively where that is supported.
#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub max: u32,
    pub count: usize,
    pub seed: u64,
    pub exhaustive: bool,
}

fn adm(a: u32, b: u32, c: u32) -> bool {
    is_admissible_triple(a as i64, b as i64, c as i64)
}

fn triples(max: u32) -> impl Iterator<Item = [u32; 3]> {
    (0..=max).flat_map(move |a| {
        (0..=max).flat_map(move |b| (0..=max).filter(move |&c| adm(a, b, c)).map(move |c| [a, b, c]))
    })
}

pub fn run(suite: Suite, p: SuiteParams) -> SuiteReport {
    let mut rng = sample::rng(p.seed);
    let name = suite.to_possible_value().expect("named").get_name().to_string();
    let mut rep = SuiteReport::new(&name);
    match suite {
        Suite::Duality => {
            let one = |q: [u32; 4], rep: &mut SuiteReport| {
                let r = verify_duality(q[0], q[1], q[2], q[3]);
                rep.check(r.equal, || format!("{q:?}"));
            };
            if p.exhaustive {
                for a in 0..=p.max {
                    for b in 0..=p.max {
                        for c in 0..=p.max {
                            for d in 0..=p.max {
                                one([a, b, c, d], &mut rep);
                            }
                        }
                    }
                }
            } else {
                for _ in 0..p.count {
                    one(sample::quadruple(&mut rng, p.max), &mut rep);
                }
            }
        }
        Suite::Pascal => {
            for [a, b, c] in triples(p.max) {
                if a == 0 || b == 0 || c == 0 {
                    continue;
                }
                if !(adm(a - 1, b, c - 1) && adm(a - 1, b - 1, c) && adm(a, b - 1, c - 1)) {
                    continue;
                }
                let sigma = BigInt::from((a + b + c) / 2);
                let lhs = gon3(a - 1, b, c - 1) + gon3(a - 1, b - 1, c) + gon3(a, b - 1, c - 1);
                let ok = lhs * (&sigma + 1) == sigma * gon3(a, b, c);
                rep.check(ok, || format!("[{a},{b},{c}]"));
            }
        }
        Suite::Beta => {
            for [a, b, c] in triples(p.max) {
                let inv = |x: BigInt| BigRational::new(BigInt::one(), x);
                let lhs = inv(gon3(a + 1, b, c + 1)) + inv(gon3(a + 1, b + 1, c)) + inv(gon3(a, b + 1, c + 1));
                let s = ((a + b + c) / 2) as i64;
                let rhs = BigRational::new((s + 3).into(), (s + 2).into()) * inv(gon3(a, b, c));
                rep.check(lhs == rhs, || format!("[{a},{b},{c}]"));
            }
        }
        Suite::Divisibility => {
            for [a, b, c] in triples(p.max) {
                let g = gon3(a, b, c);
                let ok = [a, b, c]
                    .iter()
                    .all(|&x| (&g % BigInt::from(x + 1)).is_zero());
                rep.check(ok, || format!("[{a},{b},{c}]"));
            }
        }
        Suite::Regge => {
            for _ in 0..p.count {
                let t = sample::tet(&mut rng, p.max);
                let v = tet(&t);
                let ok = match regge_images(&t) {
                    Ok(imgs) => imgs.iter().all(|i| tet(i) == v),
                    Err(_) => false,
                };
                rep.check(ok, || t.to_string());
            }
        }
        Suite::Symmetry => {
            for _ in 0..p.count {
                let t = sample::tet(&mut rng, p.max);
                let v = tet(&t);
                let ok = tet_symmetry_images(&t).iter().all(|i| tet(i) == v);
                rep.check(ok, || t.to_string());
            }
        }
        Suite::Biunit => {
            for _ in 0..p.count {
                let t = sample::tet(&mut rng, p.max);
                let [a, b, c, d, e, f] = t.flat();
                let (fixed, slot) = if rng.gen_bool(0.5) {
                    ([a, c, d, e, f], FreeSlot::B)
                } else {
                    ([a, b, c, d, f], FreeSlot::E)
                };
                let ok = !biunitarity_range(fixed, slot).is_empty()
                    && biunitarity_sum(fixed, slot) == BigRational::one();
                rep.check(ok, || format!("{fixed:?} {slot:?}"));
            }
        }
        Suite::Hed => {
            for _ in 0..p.count {
                let bp = sample::bipyramid(&mut rng, p.max);
                let ok = matches!(hed1(&bp), Ok(v) if BigRational::from_integer(v.clone()) == hed2(&bp));
                rep.check(ok, || format!("{:?}", bp.labels));
            }
        }
        Suite::Barycentric => {
            for _ in 0..p.count {
                let t = sample::tet(&mut rng, p.max);
                let v = BigRational::from_integer(tet(&t));
                let top = t.flat().into_iter().max().unwrap_or(0) + 2;
                let ok = (0..=top).all(|d| {
                    let w = BigRational::from_integer(BigInt::from((d as u64 + 1).pow(2)));
                    barycentric_p(&t, d) == &v * w
                });
                rep.check(ok, || t.to_string());
            }
        }
        Suite::Dyson => {
            let top = p.max.min(gontet::identities::DYSON_LIMIT);
            for m in 0..=top {
                for n in 0..=top - m {
                    for q in 0..=top - m - n {
                        let ok = matches!(dyson_ct(m, n, q), Ok(v) if v == gon3(m + n, n + q, q + m));
                        rep.check(ok, || format!("({m},{n},{q})"));
                    }
                }
            }
        }
        Suite::Hilbert => {
            for a in 0..=p.max {
                let ok = matches!(trace_inverse(a as usize + 1, 0),
                    Ok(v) if v == BigRational::from_integer(gon_poly(&[a, a, a, a])));
                rep.check(ok, || format!("trace n={}", a + 1));
                for b in a..=p.max {
                    let ok = matches!(trace_inverse(a as usize + 1, b - a),
                        Ok(v) if v == BigRational::from_integer(gon_poly(&[a, b, a, b])));
                    rep.check(ok, || format!("shifted trace ({a},{b})"));
                    for c in b - a..=a + b {
                        if !adm(a, b, c) {
                            continue;
                        }
                        let ok = matches!(rowsum_gon(a, b, c), Ok(v) if v == gon3(a, b, c));
                        rep.check(ok, || format!("rowsum [{a},{b},{c}]"));
                    }
                }
            }
        }
        Suite::Hyper => {
            for a in 0..=p.max {
                for b in 0..=p.max {
                    rep.check(gon4_hyper(a, b) == gon_poly(&[a, a, b, b]), || format!("({a},{b})"));
                }
            }
        }
    }
    rep
}

fn is_q2_unimodal(p: &gontet::exactnum::LaurentPoly) -> bool {
    let (_, dense) = p.to_dense();
    if dense.is_empty() {
        return false;
    }
    let coeffs: Vec<&BigInt> = dense.iter().step_by(2).collect();
    if dense.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return false;
    }
    let n = coeffs.len();
    let symmetric = (0..n).all(|i| coeffs[i] == coeffs[n - 1 - i]);
    let monic = coeffs[0].is_one() && coeffs[n - 1].is_one();
    let peak = coeffs.windows(2).take_while(|w| w[0] <= w[1]).count();
    let unimodal = coeffs[peak..].windows(2).all(|w| w[0] >= w[1]);
    symmetric && monic && unimodal
}

pub fn run_q(suite: QSuite, p: SuiteParams, root: Option<&RootOfUnity>) -> SuiteReport {
    let mut rng = sample::rng(p.seed);
    let name = suite.to_possible_value().expect("named").get_name().to_string();
    let mut rep = SuiteReport::new(&name);
    match suite {
        QSuite::Duality => {
            let one = |q: [u32; 4], rep: &mut SuiteReport| {
                let r = verify_q_duality(q[0], q[1], q[2], q[3], root);
                rep.check(r.equal, || format!("{q:?}"));
            };
            if p.exhaustive {
                for a in 0..=p.max {
                    for b in 0..=p.max {
                        for c in 0..=p.max {
                            for d in 0..=p.max {
                                one([a, b, c, d], &mut rep);
                            }
                        }
                    }
                }
            } else {
                for _ in 0..p.count {
                    one(sample::quadruple(&mut rng, p.max), &mut rep);
                }
            }
        }
        QSuite::ClassicalLimit => {
            for _ in 0..p.count {
                let t = sample::tet(&mut rng, p.max);
                let ok = tet_q(&t, None).eval_at_one() == tet(&t) && tet_k_q(&t).eval_at_one() == tet_k(&t);
                rep.check(ok, || t.to_string());
            }
        }
        QSuite::Pentagon => {
            for _ in 0..p.count {
                let bp: Bipyramid = sample::bipyramid(&mut rng, p.max);
                match verify_q_pentagon(&bp, root) {
                    Ok(r) => rep.check(r.equal, || format!("{:?}", bp.labels)),
                    Err(_) => continue,
                }
            }
        }
        QSuite::Unimodal => {
            for _ in 0..p.count {
                let n = rng.gen_range(3..=5);
                let xs: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=p.max)).collect();
                let poly = gon_q_poly(&xs, None);
                if poly.is_zero() {
                    continue;
                }
                rep.check(poly.is_palindromic() && is_q2_unimodal(&poly), || format!("{xs:?}"));
            }
        }
    }
    rep
}
