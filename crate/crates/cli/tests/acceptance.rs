//! Acceptance run: one PASS / FAIL / UNMET line per criterion.
//!
//! UNMET marks a criterion that cannot be measured on this machine (for
//! example parallel scaling with fewer than four cores); it is reported but
//! does not fail the run. Any FAIL makes the process exit nonzero.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};

use gontet::exactnum::{ratio_to_f64, BigInt, BigRational, LaurentPoly, RootOfUnity};
use gontet::gon::{gon3, gon_asym, gon_poly, theta_k, theta_k_asym};
use gontet::hilbert::{hilbert, invert_exact, q_trace_inverse, rowsum_signed, trace_inverse};
use gontet::identities::{
    barycentric_enum, barycentric_p, barycentric_terms, cube, dyson_ct, hed1, hed2, Bipyramid,
    CubeLabels,
};
use gontet::quantum::{gon_q, gon_q_poly, tet_q_at_root};
use gontet::spinnet::{evaluate, factors, ColoredGraph, Prescription};
use gontet::tet::{biunitarity_sum, sixj, tet, tet_k, tet_regular, FreeSlot};
use gontet::triples::TetLabels;

use gontet_cli::bench::{self, BenchCase};
use gontet_cli::sample;
use gontet_cli::suites::{run, run_q, QSuite, Suite, SuiteParams, SuiteReport};
use gontet_cli::table::{table, TableKind, TableRequest};

enum Status {
    Pass,
    Fail,
    Unmet,
}

type Check = Result<String, String>;
type Criterion = Box<dyn FnOnce() -> Result<(Status, String), String>>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(s: &str) -> BigInt {
    s.parse().expect("decimal literal")
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn tl(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> TetLabels {
    TetLabels::new([a, b, c], [d, e, f])
}

// Oracles from the factorial definitions, sharing no code with the library.

fn fact(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn admissible(a: u32, b: u32, c: u32) -> bool {
    (a + b + c).is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b
}

fn gon_oracle(a: u32, b: u32, c: u32) -> BigInt {
    if !admissible(a, b, c) {
        return BigInt::zero();
    }
    let s = ((a + b + c) / 2) as i64;
    fact(s + 1) / (fact(s - a as i64) * fact(s - b as i64) * fact(s - c as i64))
}

fn tet_oracle(t: &TetLabels) -> BigInt {
    let [a, b, c] = t.first;
    let [d, e, f] = t.second;
    let faces = [[a, b, c], [a, e, f], [d, b, f], [d, e, c]];
    if !faces.iter().all(|x| admissible(x[0], x[1], x[2])) {
        return BigInt::zero();
    }
    let sig = faces.map(|x| ((x[0] + x[1] + x[2]) / 2) as i64);
    let tau = [(a + b + d + e) / 2, (b + c + e + f) / 2, (a + c + d + f) / 2].map(|x| x as i64);
    let mut total = BigInt::zero();
    for s in *sig.iter().max().unwrap()..=*tau.iter().min().unwrap() {
        let den: BigInt = sig.iter().map(|&x| fact(s - x)).product::<BigInt>()
            * tau.iter().map(|&x| fact(x - s)).product::<BigInt>();
        let term = fact(s + 1) / den;
        if s % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let v = f();
    let dt = start.elapsed();
    ensure(dt <= limit, || format!("{what} took {dt:?}, limit {limit:?}"))?;
    Ok(v)
}

fn suite_ok(r: &SuiteReport) -> Result<(), String> {
    ensure(r.ok() && r.passed > 0, || {
        format!("{}: {} passed, {} failed, first failures {:?}", r.suite, r.passed, r.failed, r.failures)
    })
}

fn params(max: u32, count: usize, exhaustive: bool) -> SuiteParams {
    SuiteParams { max, count, seed: 2024, exhaustive }
}

fn golden_gons() -> Check {
    let second = Duration::from_secs(1);
    let triples: [([u32; 3], &str); 5] = [
        ([3, 7, 8], "2520"),
        ([8, 20, 24], "1181079900"),
        ([20, 15, 17], "1044074631600"),
        ([8, 13, 17], "42325920"),
        ([24, 15, 13], "21903663600"),
    ];
    for ([a, b, c], v) in triples {
        let got = timed(second, "gon3", || gon3(a, b, c))?;
        ensure(got == big(v) && got == gon_oracle(a, b, c), || format!("gon({a},{b},{c}) = {got}"))?;
    }
    let polys: [(&[u32], &str); 3] =
        [(&[2, 2, 2, 2], "381"), (&[4, 7, 4, 7], "18066760"), (&[11, 3, 4, 1, 5], "18295200")];
    for (xs, v) in polys {
        let got = timed(second, "gon_poly", || gon_poly(xs))?;
        ensure(got == big(v), || format!("gon{xs:?} = {got}"))?;
    }
    let a189766 = [
        "1", "16", "381", "10496", "307505", "9316560", "288307285", "9052917760", "287307428985",
        "9192433560080",
    ];
    for (a, v) in a189766.iter().enumerate() {
        let a = a as u32;
        let got = timed(second, "gon(a,a,a,a)", || gon_poly(&[a, a, a, a]))?;
        ensure(got == big(v), || format!("gon({a},{a},{a},{a}) = {got}"))?;
    }
    ensure(gon3(4, 7, 9) == BigInt::from(9240), || "gon(4,7,9)".into())?;
    let row = rowsum_signed(4, 7, 9).map_err(|e| e.to_string())?;
    ensure(row == BigInt::from(-9240), || format!("row sum for (4,7,9) = {row}"))?;
    Ok("19 values exact, each under 1 s".into())
}

fn golden_tets() -> Check {
    let cases = [
        (tl(8, 20, 24, 15, 13, 17), "332385335268386400"),
        (tl(14, 41, 33, 50, 23, 21), "-671777611858249170324639542553600"),
        (
            tl(50, 30, 76, 92, 48, 84),
            "370574512884046997485176381045189319801237495334758378762795196256000",
        ),
        (tl(0, 0, 0, 0, 0, 0), "1"),
    ];
    for (t, v) in cases {
        let got = tet(&t);
        ensure(got == big(v) && got == tet_oracle(&t), || format!("tet{t} = {got}"))?;
    }
    let regular = ["1", "96", "-17010", "-20160000", "-5259003750", "2819345937408", "3019973370942528"];
    for (n, v) in regular.iter().enumerate() {
        let two_n = 2 * n as u32;
        let got = tet_regular(two_n).map_err(|e| e.to_string())?;
        let direct = tet_oracle(&tl(two_n, two_n, two_n, two_n, two_n, two_n));
        ensure(got == big(v) && got == direct, || format!("tet_regular({two_n}) = {got}"))?;
    }
    Ok("4 tets and 7 regular values exact".into())
}

fn tet_k_and_sixj() -> Check {
    let t = tl(8, 20, 24, 15, 13, 17);
    let k = tet_k(&t);
    ensure(k == BigRational::new(477531.into(), 92176448.into()), || format!("TET = {k}"))?;
    let s = sixj(&t);
    let coeff = BigRational::new(53059.into(), BigInt::from(23940) * 50830);
    ensure(s.coeff() == &coeff && s.radicand() == &BigInt::from(50830), || format!("6j = {s}"))?;
    // 6j^2 = tet^2 / prod gon(faces), from the oracles
    let v = tet_oracle(&t);
    let g = gon_oracle(8, 20, 24) * gon_oracle(8, 13, 17) * gon_oracle(15, 20, 17) * gon_oracle(15, 13, 24);
    ensure(s.square() == BigRational::new(&v * &v, g), || "6j squared".into())?;
    Ok(format!("TET = {k}, 6j = {s}"))
}

fn identity_suites() -> Check {
    let start = Instant::now();
    let mut total = 0;
    let runs = [
        (Suite::Duality, params(20, 0, true)),
        (Suite::Duality, params(60, 500, false)),
        (Suite::Pascal, params(40, 0, true)),
        (Suite::Beta, params(40, 0, true)),
        (Suite::Divisibility, params(60, 0, true)),
        (Suite::Regge, params(30, 200, false)),
        (Suite::Symmetry, params(30, 200, false)),
        (Suite::Biunit, params(25, 100, false)),
    ];
    for (suite, p) in runs {
        let r = run(suite, p);
        suite_ok(&r)?;
        total += r.passed;
    }
    for (fixed, slot) in [([8, 20, 15, 17, 13], FreeSlot::B), ([8, 24, 20, 15, 13], FreeSlot::E)] {
        let s = biunitarity_sum(fixed, slot);
        ensure(s.is_one(), || format!("bi-unitarity {fixed:?} {slot:?} = {s}"))?;
        total += 1;
    }
    let dt = start.elapsed();
    ensure(dt <= Duration::from_secs(60), || format!("suites took {dt:?}"))?;
    Ok(format!("{total} checks in {:.1} s", dt.as_secs_f64()))
}

fn pentagon() -> Check {
    // the side labels of the published tuple are listed with d,e and g,k
    // exchanged relative to the gluing convention used here
    let bp = Bipyramid::new([28, 6, 26, 23, 31, 19, 39, 17, 33]).map_err(|e| e.to_string())?;
    let v = big("1395161475725373449470726604935680000");
    let h1 = hed1(&bp).map_err(|e| e.to_string())?;
    ensure(h1 == v, || format!("hed1 = {h1}"))?;
    ensure(hed2(&bp) == BigRational::from_integer(v), || "hed2 differs".into())?;
    let axis: BTreeSet<u32> = (16..=48).step_by(2).collect();
    ensure(bp.axis_range() == axis, || format!("axis {:?}", bp.axis_range()))?;
    let r = run(Suite::Hed, params(25, 100, false));
    suite_ok(&r)?;
    Ok(format!("published instance and {} seeded bipyramids", r.passed))
}

fn barycentric() -> Check {
    let t = tl(2, 1, 3, 1, 2, 2);
    let sizes: Vec<usize> = (0..=5).map(|d| barycentric_enum(&t, d).len()).collect();
    ensure(sizes == [1, 5, 8, 10, 10, 10], || format!("cardinalities {sizes:?}"))?;
    let one = barycentric_enum(&t, 1);
    ensure(one == [(0, 3, 1), (2, 1, 1), (2, 1, 3), (2, 3, 1), (2, 3, 3)], || format!("delta 1: {one:?}"))?;
    for (d, p) in [-24i64, -96, -216, -384, -600, -864].into_iter().enumerate() {
        let got = barycentric_p(&t, d as u32);
        ensure(got == int(p), || format!("P({d}) = {got}"))?;
        let w = int(((d + 1) * (d + 1)) as i64);
        ensure(got / w == int(-24), || format!("P({d}) normalized"))?;
    }
    let mut terms: Vec<BigRational> = barycentric_terms(&t, 1).into_iter().map(|(_, v)| v).collect();
    terms.sort();
    let mut expect: Vec<BigRational> =
        [(-24, 1), (-64, 3), (-32, 3), (40, 3), (-160, 3)].iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
    expect.sort();
    ensure(terms == expect, || "delta 1 terms".into())?;
    let r = run(Suite::Barycentric, params(12, 50, false));
    suite_ok(&r)?;
    Ok(format!("worked example and {} seeded tets", r.passed))
}

fn cube_values() -> Check {
    let cases = [(0, "1", 1), (1, "-63488", 15), (2, "5580307647", 127), (3, "-297180797599744", 648)];
    for (n, v, count) in cases {
        let c = cube(&CubeLabels::uniform(n)).map_err(|e| e.to_string())?;
        ensure(c.value == big(v) && c.assignments == count, || {
            format!("cube({n}) = {} over {}", c.value, c.assignments)
        })?;
    }
    let unequal = CubeLabels::from([2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1]);
    let c = cube(&unequal).map_err(|e| e.to_string())?;
    ensure(c.value == BigInt::from(1994112), || format!("unequal cube = {}", c.value))?;
    Ok("cube(0..3) and the unequal instance".into())
}

fn hilbert_theorems() -> Check {
    let as_ints = |n: usize, s: u32| -> Result<Vec<Vec<i64>>, String> {
        let m = invert_exact(&hilbert(n, s)).map_err(|e| e.to_string())?;
        Ok(m.rows.iter().map(|r| r.iter().map(|x| x.to_integer().try_into().unwrap()).collect()).collect())
    };
    let h3 = as_ints(3, 0)?;
    ensure(h3 == [[9, -36, 30], [-36, 192, -180], [30, -180, 180]], || format!("H(3)^-1 = {h3:?}"))?;
    let h53 = as_ints(5, 3)?;
    let expect = [
        [19600, -141120, 352800, -369600, 138600],
        [-141120, 1058400, -2721600, 2910600, -1108800],
        [352800, -2721600, 7144200, -7761600, 2993760],
        [-369600, 2910600, -7761600, 8537760, -3326400],
        [138600, -1108800, 2993760, -3326400, 1306800],
    ];
    ensure(h53 == expect, || format!("H(5,3)^-1 = {h53:?}"))?;
    let tr = |n, s| trace_inverse(n, s).map_err(|e| e.to_string());
    ensure(tr(3, 0)? == int(381), || "tr H(3)^-1".into())?;
    ensure(tr(5, 3)? == int(18066760), || "tr H(5,3)^-1".into())?;
    // Hilbert suite covers a,b <= 10 and every admissible c between them
    let r = run(Suite::Hilbert, params(10, 0, true));
    suite_ok(&r)?;
    let mut rows = 0;
    for c in 11..=14u32 {
        for b in 0..=c {
            for a in 0..=b {
                if admissible(a, b, c) {
                    let v = rowsum_signed(a, b, c).map_err(|e| e.to_string())?;
                    ensure(v.abs() == gon_oracle(a, b, c), || format!("row sum ({a},{b},{c})"))?;
                    rows += 1;
                }
            }
        }
    }
    let qt = q_trace_inverse(3).map_err(|e| e.to_string())?.to_laurent().ok_or("q-trace not polynomial")?;
    let coeffs = [1, 4, 13, 27, 47, 63, 71, 63, 47, 27, 13, 4, 1];
    let expect = LaurentPoly::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (2 * i as i64 - 12, BigInt::from(c))));
    ensure(qt == expect, || format!("q-trace {qt:?}"))?;
    Ok(format!("displayed inverses, {} theorem checks, q-trace", r.passed + rows))
}

fn quantum() -> Check {
    let p = gon_q(3, 7, 8, None);
    ensure(p.min_exp() == Some(-29) && p.max_exp() == Some(29) && p.is_palindromic(), || {
        format!("gon_q(3,7,8) spans {:?}..{:?}", p.min_exp(), p.max_exp())
    })?;
    ensure(p.eval_at_one() == BigInt::from(2520), || "gon_q(3,7,8) at q=1".into())?;
    let sq = gon_q_poly(&[2, 2, 2, 2], None);
    let head: Vec<BigInt> = sq.terms().iter().take(7).map(|(_, c)| c.clone()).collect();
    let want: Vec<BigInt> = [1, 4, 13, 27, 47, 63, 71].into_iter().map(BigInt::from).collect();
    ensure(head == want && sq.is_palindromic(), || format!("gon_q(2,2,2,2) head {head:?}"))?;
    let pent = gon_q_poly(&[11, 3, 4, 1, 5], None);
    ensure(pent.eval_at_one() == BigInt::from(18295200), || "q-pentagon at q=1".into())?;
    let root60 = RootOfUnity::new(60).map_err(|e| e.to_string())?;
    let v = tet_q_at_root(&tl(14, 41, 33, 50, 23, 21), &root60).map_err(|e| e.to_string())?;
    ensure((v / 1.53314e17 - 1.0).abs() < 1e-4, || format!("tet_q at kappa 60 = {v:e}"))?;
    let limit = run_q(QSuite::ClassicalLimit, params(20, 100, false), None);
    suite_ok(&limit)?;
    let duality = run_q(QSuite::Duality, params(10, 0, true), None);
    suite_ok(&duality)?;
    let mut pent_checks = 0;
    for kappa in [5u32, 6, 7, 9] {
        let root = RootOfUnity::new(kappa).map_err(|e| e.to_string())?;
        let max = (kappa - 2).min(6);
        let r = run_q(QSuite::Pentagon, SuiteParams { seed: kappa as u64, ..params(max, 60, false) }, Some(&root));
        suite_ok(&r)?;
        pent_checks += r.passed;
    }
    Ok(format!(
        "displayed values, {} q=1 limits, {} q-dualities, {} root-of-unity pentagons",
        limit.passed, duality.passed, pent_checks
    ))
}

fn dyson() -> Check {
    let mut n_checked = 0;
    for m in 0..=8u32 {
        for n in 0..=8 - m {
            for p in 0..=8 - m - n {
                let v = dyson_ct(m, n, p).map_err(|e| e.to_string())?;
                ensure(v == gon_oracle(m + n, n + p, p + m), || format!("dyson ({m},{n},{p}) = {v}"))?;
                n_checked += 1;
            }
        }
    }
    Ok(format!("{n_checked} triples with m+n+p <= 8"))
}

fn spin_nets() -> Check {
    let surd = |g: &ColoredGraph, p| evaluate(g, p).map(|v| v.to_surd()).map_err(|e| e.to_string());
    for a in 0..=15u32 {
        let k = surd(&ColoredGraph::Theta(a, a, 0), Prescription::K)?;
        let sign = if a % 2 == 0 { 1 } else { -1 };
        ensure(k.square() == int((a as i64 + 1).pow(2)) && k.to_f64().signum() == sign as f64, || {
            format!("theta_K({a},{a},0) = {k}")
        })?;
    }
    let mut rng = sample::rng(77);
    let mut checked = 0;
    for i in 0..150 {
        let g = if i % 2 == 0 {
            let [a, b, c] = sample::triple(&mut rng, 25);
            let u = surd(&ColoredGraph::Theta(a, b, c), Prescription::U)?;
            let sign = if ((a + b + c) / 2) % 2 == 0 { 1 } else { -1 };
            ensure(u.square().is_one() && u.to_f64() == sign as f64, || format!("theta_U({a},{b},{c}) = {u}"))?;
            ColoredGraph::Theta(a, b, c)
        } else {
            let t = sample::tet(&mut rng, 25);
            let g = ColoredGraph::Tetra(t);
            ensure(surd(&g, Prescription::Z)?.square() == BigRational::from_integer(tet_oracle(&t).pow(2)), || {
                format!("tetra Z {t}")
            })?;
            ensure(surd(&g, Prescription::K)?.coeff() == &tet_k(&t), || format!("tetra K {t}"))?;
            ensure(surd(&g, Prescription::U)? == sixj(&t), || format!("tetra U {t}"))?;
            g
        };
        let f = factors(&g).map_err(|e| e.to_string())?;
        let z = surd(&g, Prescription::Z)?.square();
        let j2 = BigRational::from_integer(&f.j * &f.j);
        let e2 = BigRational::from_integer(&f.e * &f.e);
        ensure(surd(&g, Prescription::P)?.square() == &j2 * &z, || format!("P factor {g:?}"))?;
        ensure(surd(&g, Prescription::K)?.square() == &j2 * &z / e2, || format!("K factor {g:?}"))?;
        ensure(surd(&g, Prescription::U)?.square() * f.n.square() == z, || format!("U factor {g:?}"))?;
        checked += 1;
    }
    Ok(format!("theta normalizations and {checked} seeded graphs"))
}

fn performance() -> Result<(Status, String), String> {
    let tet_report = bench::bench(BenchCase::TetSpeed, bench::MIN_RUNS, 0);
    ensure(tet_report.median_ms <= 10.0, || format!("tet median {} ms", tet_report.median_ms))?;
    let inputs = bench::sixj_inputs(0);
    let start = Instant::now();
    let nonzero = bench::sixj_batch(&inputs);
    let batch = start.elapsed();
    ensure(batch <= Duration::from_secs(30), || format!("10^4 sixj took {batch:?}"))?;
    ensure(nonzero > 0, || "sixj batch all zero".into())?;

    let max = 14;
    let time_table = |jobs| {
        let start = Instant::now();
        let rows = table(&TableRequest { kind: TableKind::Tet, max, jobs: Some(jobs) }, None).map(|r| r.len());
        (start.elapsed(), rows)
    };
    let (t1, rows1) = time_table(1);
    let (t4, rows4) = time_table(4);
    ensure(rows1.is_ok() && rows1.as_ref().ok() == rows4.as_ref().ok(), || "table rows differ".into())?;
    let speedup = t1.as_secs_f64() / t4.as_secs_f64();
    let cores = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let detail = format!(
        "tet median {:.3} ms, 10^4 sixj in {:.2} s, table speedup {speedup:.2}x on 4 workers ({cores} cores)",
        tet_report.median_ms,
        batch.as_secs_f64()
    );
    if cores < 4 {
        return Ok((Status::Unmet, format!("{detail}; scaling needs at least 4 cores")));
    }
    ensure(speedup >= 2.0, || detail.clone())?;
    Ok((Status::Pass, detail))
}

fn asymptotics() -> Check {
    let mut notes = Vec::new();
    for [a, b, c] in [[2u32, 3, 3], [4, 5, 7]] {
        let (mut ge, mut te) = (Vec::new(), Vec::new());
        for k in [20u32, 40, 80] {
            let exact = ratio_to_f64(&BigRational::from_integer(gon_oracle(k * a, k * b, k * c)));
            ge.push((gon_asym(a, b, c, k).map_err(|e| e.to_string())? / exact - 1.0).abs());
            let exact = ratio_to_f64(&theta_k(k * a, k * b, k * c));
            let est = theta_k_asym(a, b, c, k).map_err(|e| e.to_string())?;
            ensure(est.signum() == exact.signum(), || format!("theta sign at ({a},{b},{c}) k={k}"))?;
            te.push((est / exact - 1.0).abs());
        }
        let decreasing = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]);
        ensure(decreasing(&ge) && decreasing(&te), || format!("({a},{b},{c}): gon {ge:?}, theta {te:?}"))?;
        notes.push(format!("({a},{b},{c}) gon err {:.1e}->{:.1e}", ge[0], ge[2]));
    }
    Ok(notes.join(", "))
}

fn record(id: u32, name: &str, f: impl FnOnce() -> Result<(Status, String), String>) -> Status {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    let (status, detail) = match outcome {
        Ok((s, d)) => (s, d),
        Err(d) => (Status::Fail, d),
    };
    let tag = match status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Unmet => "UNMET",
    };
    println!("{id:>2} {tag:<5} {name} [{secs:.2} s]: {detail}");
    status
}

fn plain(f: fn() -> Check) -> impl FnOnce() -> Result<(Status, String), String> {
    move || f().map(|d| (Status::Pass, d))
}

fn main() {
    let criteria: Vec<(u32, &str, Criterion)> = vec![
        (1, "gon golden values", Box::new(plain(golden_gons))),
        (2, "tet golden values", Box::new(plain(golden_tets))),
        (3, "TET and 6j", Box::new(plain(tet_k_and_sixj))),
        (4, "identity suites", Box::new(plain(identity_suites))),
        (5, "bipyramid identity", Box::new(plain(pentagon))),
        (6, "barycentric subdivision", Box::new(plain(barycentric))),
        (7, "cube", Box::new(plain(cube_values))),
        (8, "Hilbert matrices", Box::new(plain(hilbert_theorems))),
        (9, "quantum", Box::new(plain(quantum))),
        (10, "Dyson constant term", Box::new(plain(dyson))),
        (11, "spin-net prescriptions", Box::new(plain(spin_nets))),
        (12, "performance", Box::new(performance)),
        (13, "asymptotics", Box::new(plain(asymptotics))),
    ];
    let (mut pass, mut fail, mut unmet) = (0, 0, 0);
    for (id, name, f) in criteria {
        match record(id, name, f) {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Unmet => unmet += 1,
        }
    }
    println!("acceptance: {pass} passed, {fail} failed, {unmet} unmet");
    if fail > 0 {
        std::process::exit(1);
    }
}
