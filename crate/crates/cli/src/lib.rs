//! Command-line front end for the `gontet` library.
//!
//! Every verb prints one JSON object (or one per line for `table`), with
//! all exact values as decimal strings. Exit codes: 0 on success, 1 on a
//! domain error or a failed check, 2 on a usage error.

pub mod bench;
pub mod cache;
pub mod error;
pub mod output;
pub mod sample;
pub mod suites;
pub mod table;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use gontet::exactnum::{ratio_to_f64, LaurentPoly, RatFunc, RootOfUnity, Surd};
use gontet::gon::{gon3, gon_asym, gon_poly, special_clebsch, theta_k, theta_k_asym, Spin};
use gontet::hilbert::{invert_exact, hilbert, q_invert, rowsum_signed};
use gontet::identities::{
    barycentric_enum, barycentric_p, barycentric_terms, cube, dyson_ct, hed1, hed2, verify_duality,
    Bipyramid, CubeLabels,
};
use gontet::quantum::{gon_q, gon_q_poly, sixj_q, tet_q, tet_q_at_root};
use gontet::spinnet::{evaluate, factors, ColoredGraph, Prescription};
use gontet::tet::{biunitarity_range, biunitarity_sum, regge_images, sixj, tet, tet_k, tet_regular, FreeSlot};
use gontet::triples::{
    is_admissible_polygon, is_admissible_tet, is_admissible_triple, parse_labels, TetLabels,
};

pub use error::CliError;
pub use output::Format;

#[derive(Debug, Parser)]
#[command(name = "gontet", version, about = "Exact gon, tet and related spin-network symbols")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Evaluate at q = exp(i pi / KAPPA) and truncate sums to level KAPPA - 2.
    #[arg(long, global = true)]
    pub kappa: Option<u32>,
    /// Seed for sampled inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Treat non-admissible input as an error instead of the value 0.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Cache file for table generation.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Worker threads for table generation.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Slot {
    B,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Loop,
    Theta,
    Tetra,
}

/// Labels may be given as separate words or bracketed lists.
#[derive(Debug, clap::Args)]
pub struct Labels {
    #[arg(required = true, num_args = 1..)]
    pub labels: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// gon of a triple or of a polygon multiset.
    Gon(Labels),
    /// Kauffman theta of a triple.
    ThetaK(Labels),
    /// Clebsch-Gordan coefficient with zero magnetic numbers.
    Clebsch0 { j1: Spin, j2: Spin, j: Spin },
    /// Stirling estimate of gon(ka,kb,kc), or of theta-k with --theta.
    GonAsym {
        #[command(flatten)]
        labels: Labels,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        theta: bool,
    },
    /// tet of a labelled tetrahedron.
    Tet(Labels),
    /// TET = J/E tet.
    TetK(Labels),
    /// tet of the regular tetrahedron with all labels equal to the argument.
    TetRegular { label: u32 },
    /// Wigner 6j symbol as a surd.
    Sixj(Labels),
    /// The three Regge images and their tet values.
    Regge(Labels),
    /// Bi-unitarity sum over the free slot given the other five labels.
    Biunit {
        #[arg(long, value_enum)]
        slot: Slot,
        #[command(flatten)]
        labels: Labels,
    },
    /// Channel sums of the duality identity.
    Duality(Labels),
    /// Both sides of the bipyramid identity.
    Hed(Labels),
    /// Barycentric subdivision sum at central label delta.
    Barycentric {
        #[arg(long)]
        delta: u32,
        #[command(flatten)]
        labels: Labels,
    },
    /// Cube sum from twelve edge labels, or all equal with --uniform.
    Cube {
        #[arg(long)]
        uniform: Option<u32>,
        labels: Vec<String>,
    },
    /// Constant term of the Dyson product.
    DysonCt { m: u32, n: u32, p: u32 },
    /// Exact inverse of the shifted Hilbert matrix (q-analog with --q).
    HilbertInv {
        n: usize,
        #[arg(long, default_value_t = 0)]
        shift: u32,
        #[arg(long)]
        q: bool,
    },
    /// Trace of the inverse shifted Hilbert matrix (q-analog with --q).
    HilbertTrace {
        n: usize,
        #[arg(long, default_value_t = 0)]
        shift: u32,
        #[arg(long)]
        q: bool,
    },
    /// Signed Hilbert row sum that equals gon up to sign.
    HilbertRowsum(Labels),
    /// gon_q of a triple or polygon.
    GonQ(Labels),
    /// tet_q of a tetrahedron.
    TetQ(Labels),
    /// Quantum 6j symbol at the root given by --kappa.
    SixjQ(Labels),
    /// Run an identity suite.
    Verify {
        #[arg(value_enum)]
        suite: suites::Suite,
        #[arg(long, default_value_t = 20)]
        max: u32,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Run a q-identity suite, at the root given by --kappa if any.
    VerifyQ {
        #[arg(value_enum)]
        suite: suites::QSuite,
        #[arg(long, default_value_t = 6)]
        max: u32,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Loop, theta or tetrahedron graph under a prescription.
    Spinnet {
        #[arg(long, value_enum)]
        graph: GraphKind,
        #[arg(long)]
        prescription: Prescription,
        #[command(flatten)]
        labels: Labels,
    },
    /// Table over all admissible inputs with labels up to --max.
    Table {
        #[arg(value_enum)]
        kind: table::TableKind,
        #[arg(long)]
        max: Option<u32>,
        /// Bound on the label of tet-regular rows.
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Time a fixed workload.
    Bench {
        #[arg(value_enum)]
        case: bench::BenchCase,
        #[arg(long, default_value_t = bench::MIN_RUNS)]
        runs: usize,
    },
}

struct Ctx {
    root: Option<RootOfUnity>,
    seed: u64,
    strict: bool,
    cache: Option<PathBuf>,
    jobs: Option<usize>,
}

impl Ctx {
    /// Under `--strict` non-admissible input is an error; otherwise the
    /// command goes on and reports the vanishing value.
    fn admissible(&self, ok: bool, what: &str) -> Result<(), CliError> {
        if !ok && self.strict {
            return Err(gontet::Error::NotAdmissible(what.to_string()).into());
        }
        Ok(())
    }

    fn root(&self) -> Result<&RootOfUnity, CliError> {
        self.root
            .as_ref()
            .ok_or_else(|| CliError::Usage("this command needs --kappa".into()))
    }
}

fn labels(l: &Labels, want: Option<usize>) -> Result<Vec<u32>, CliError> {
    let v = parse_labels(&l.labels.join(" ")).map_err(CliError::Usage)?;
    match want {
        Some(n) if v.len() != n => Err(CliError::Usage(format!("expected {n} labels, got {}", v.len()))),
        _ if v.is_empty() => Err(CliError::Usage("no labels given".into())),
        _ => Ok(v),
    }
}

fn tet_labels(l: &Labels) -> Result<TetLabels, CliError> {
    let v = labels(l, Some(6))?;
    Ok(TetLabels::new([v[0], v[1], v[2]], [v[3], v[4], v[5]]))
}

fn adm(a: u32, b: u32, c: u32) -> bool {
    is_admissible_triple(a as i64, b as i64, c as i64)
}

fn surd_json(s: &Surd) -> Value {
    json!({"coeff": s.coeff().to_string(), "radicand": s.radicand().to_string()})
}

fn float(x: f64) -> String {
    format!("{x:e}")
}

fn poly_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn ratfunc_json(r: &RatFunc) -> Value {
    json!({"num": poly_json(r.num()), "den": poly_json(r.den())})
}

fn q_value(p: &LaurentPoly, at_root: Option<Result<f64, gontet::Error>>, ctx: &Ctx) -> Result<Value, CliError> {
    let mut v = json!({"poly": poly_json(p), "at_one": p.eval_at_one().to_string()});
    if let Some(r) = at_root {
        let x = match r {
            Ok(x) => x,
            Err(e @ gontet::Error::NotQAdmissible { .. }) if ctx.strict => return Err(e.into()),
            Err(gontet::Error::NotQAdmissible { .. }) => 0.0,
            Err(e) => return Err(e.into()),
        };
        v["at_root"] = json!(float(x));
    }
    Ok(v)
}

fn execute(cmd: &Command, ctx: &Ctx) -> Result<Value, CliError> {
    Ok(match cmd {
        Command::Gon(l) => {
            let v = labels(l, None)?;
            if let [a, b, c] = v[..] {
                ctx.admissible(adm(a, b, c), &format!("{v:?}"))?;
                json!({"value": gon3(a, b, c).to_string()})
            } else {
                ctx.admissible(is_admissible_polygon(&v), &format!("{v:?}"))?;
                json!({"value": gon_poly(&v).to_string()})
            }
        }
        Command::ThetaK(l) => {
            let v = labels(l, Some(3))?;
            ctx.admissible(adm(v[0], v[1], v[2]), &format!("{v:?}"))?;
            json!({"value": theta_k(v[0], v[1], v[2]).to_string()})
        }
        Command::Clebsch0 { j1, j2, j } => {
            let ok = adm(j1.twice(), j2.twice(), j.twice()) && (j1.twice() + j2.twice() + j.twice()) % 4 == 0;
            ctx.admissible(ok, &format!("({j1},{j2},{j})"))?;
            surd_json(&special_clebsch(*j1, *j2, *j)?)
        }
        Command::GonAsym { labels: l, k, theta } => {
            let v = labels(l, Some(3))?;
            let (a, b, c, k) = (v[0], v[1], v[2], *k);
            let (est, exact) = if *theta {
                (theta_k_asym(a, b, c, k)?, ratio_to_f64(&theta_k(k * a, k * b, k * c)))
            } else {
                (gon_asym(a, b, c, k)?, ratio_to_f64(&gon3(k * a, k * b, k * c).into()))
            };
            json!({
                "k": k,
                "estimate": float(est),
                "exact": float(exact),
                "relative_error": float((est / exact - 1.0).abs()),
            })
        }
        Command::Tet(l) => {
            let t = tet_labels(l)?;
            ctx.admissible(is_admissible_tet(&t), &t.to_string())?;
            json!({"value": tet(&t).to_string()})
        }
        Command::TetK(l) => {
            let t = tet_labels(l)?;
            ctx.admissible(is_admissible_tet(&t), &t.to_string())?;
            json!({"value": tet_k(&t).to_string()})
        }
        Command::TetRegular { label } => json!({"value": tet_regular(*label)?.to_string()}),
        Command::Sixj(l) => {
            let t = tet_labels(l)?;
            ctx.admissible(is_admissible_tet(&t), &t.to_string())?;
            surd_json(&sixj(&t))
        }
        Command::Regge(l) => {
            let t = tet_labels(l)?;
            let imgs = regge_images(&t)?;
            json!({
                "images": imgs.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
                "values": imgs.iter().map(|i| tet(i).to_string()).collect::<Vec<_>>(),
                "value": tet(&t).to_string(),
            })
        }
        Command::Biunit { slot, labels: l } => {
            let v = labels(l, Some(5))?;
            let fixed = [v[0], v[1], v[2], v[3], v[4]];
            let slot = match slot {
                Slot::B => FreeSlot::B,
                Slot::E => FreeSlot::E,
            };
            let range = biunitarity_range(fixed, slot);
            ctx.admissible(!range.is_empty(), &format!("{fixed:?}"))?;
            json!({"range": range, "sum": biunitarity_sum(fixed, slot).to_string()})
        }
        Command::Duality(l) => {
            let v = labels(l, Some(4))?;
            let r = verify_duality(v[0], v[1], v[2], v[3]);
            ctx.admissible(!r.lhs().is_zero(), &format!("{v:?}"))?;
            serde_json::to_value(&r).expect("reports serialize")
        }
        Command::Hed(l) => {
            let v = labels(l, Some(9))?;
            let arr: [u32; 9] = v.clone().try_into().expect("nine labels");
            match Bipyramid::new(arr) {
                Ok(bp) => {
                    let h1 = hed1(&bp)?;
                    let h2 = hed2(&bp);
                    json!({
                        "hed1": h1.to_string(),
                        "hed2": h2.to_string(),
                        "equal": num_traits::One::is_one(&(h2.clone() / gontet::exactnum::BigRational::from_integer(h1.clone())))
                            || (h1.is_zero() && h2.is_zero()),
                        "axis": bp.axis_range(),
                    })
                }
                Err(e) if ctx.strict => return Err(e.into()),
                Err(_) => json!({"hed1": "0", "hed2": "0", "equal": true, "axis": Vec::<u32>::new()}),
            }
        }
        Command::Barycentric { delta, labels: l } => {
            let t = tet_labels(l)?;
            ctx.admissible(is_admissible_tet(&t), &t.to_string())?;
            let sols = barycentric_enum(&t, *delta);
            let terms = barycentric_terms(&t, *delta);
            let p = barycentric_p(&t, *delta);
            let w = gontet::exactnum::BigRational::from_integer(((*delta as u64 + 1).pow(2)).into());
            json!({
                "delta": delta,
                "count": sols.len(),
                "solutions": sols.iter().map(|&(a, b, c)| [a, b, c]).collect::<Vec<_>>(),
                "terms": terms.iter().map(|(_, v)| v.to_string()).collect::<Vec<_>>(),
                "p": p.to_string(),
                "p_normalized": (p / w).to_string(),
            })
        }
        Command::Cube { uniform, labels: l } => {
            let edges = match (uniform, l.is_empty()) {
                (Some(n), true) => CubeLabels::uniform(*n),
                (None, false) => {
                    let v = parse_labels(&l.join(" ")).map_err(CliError::Usage)?;
                    let arr: [u32; 12] = v
                        .try_into()
                        .map_err(|v: Vec<u32>| CliError::Usage(format!("expected 12 labels, got {}", v.len())))?;
                    CubeLabels::from(arr)
                }
                _ => return Err(CliError::Usage("give either --uniform N or twelve edge labels".into())),
            };
            serde_json::to_value(cube(&edges)?).expect("cube values serialize")
        }
        Command::DysonCt { m, n, p } => json!({
            "value": dyson_ct(*m, *n, *p)?.to_string(),
            "gon": gon3(m + n, n + p, p + m).to_string(),
        }),
        Command::HilbertInv { n, shift, q } => {
            if *q {
                let m = q_invert(*n, *shift)?;
                let rows: Vec<Vec<Value>> =
                    m.rows.iter().map(|r| r.iter().map(ratfunc_json).collect()).collect();
                json!({"matrix": rows})
            } else {
                let m = invert_exact(&hilbert(*n, *shift))?;
                let rows: Vec<Vec<String>> =
                    m.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                json!({"matrix": rows})
            }
        }
        Command::HilbertTrace { n, shift, q } => {
            if *q {
                ratfunc_json(&q_invert(*n, *shift)?.trace())
            } else {
                json!({"value": invert_exact(&hilbert(*n, *shift))?.trace().to_string()})
            }
        }
        Command::HilbertRowsum(l) => {
            let v = labels(l, Some(3))?;
            let s = rowsum_signed(v[0], v[1], v[2])?;
            json!({"signed": s.to_string(), "value": num_traits::Signed::abs(&s).to_string()})
        }
        Command::GonQ(l) => {
            let v = labels(l, None)?;
            let root = ctx.root.as_ref();
            let p = if let [a, b, c] = v[..] {
                gon_q(a, b, c, root)
            } else {
                gon_q_poly(&v, root)
            };
            ctx.admissible(!p.is_zero(), &format!("{v:?}"))?;
            let at_root = root.map(|r| Ok(r.eval(&p).re));
            q_value(&p, at_root, ctx)?
        }
        Command::TetQ(l) => {
            let t = tet_labels(l)?;
            let root = ctx.root.as_ref();
            let p = tet_q(&t, root);
            ctx.admissible(!p.is_zero() || is_admissible_tet(&t), &t.to_string())?;
            q_value(&p, root.map(|r| tet_q_at_root(&t, r)), ctx)?
        }
        Command::SixjQ(l) => {
            let t = tet_labels(l)?;
            let root = ctx.root()?;
            match sixj_q(&t, root) {
                Ok(x) => json!({"value": float(x)}),
                Err(e @ gontet::Error::NotQAdmissible { .. }) if ctx.strict => return Err(e.into()),
                Err(gontet::Error::NotQAdmissible { .. }) => json!({"value": float(0.0)}),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Verify { suite, max, count, exhaustive } => {
            let p = suites::SuiteParams { max: *max, count: *count, seed: ctx.seed, exhaustive: *exhaustive };
            suite_value(suites::run(*suite, p))?
        }
        Command::VerifyQ { suite, max, count, exhaustive } => {
            let p = suites::SuiteParams { max: *max, count: *count, seed: ctx.seed, exhaustive: *exhaustive };
            suite_value(suites::run_q(*suite, p, ctx.root.as_ref()))?
        }
        Command::Spinnet { graph, prescription, labels: l } => {
            let g = match graph {
                GraphKind::Loop => ColoredGraph::Loop(labels(l, Some(1))?[0]),
                GraphKind::Theta => {
                    let v = labels(l, Some(3))?;
                    ColoredGraph::Theta(v[0], v[1], v[2])
                }
                GraphKind::Tetra => ColoredGraph::Tetra(tet_labels(l)?),
            };
            if !g.is_admissible() && !ctx.strict {
                json!({"value": "0"})
            } else {
                let f = factors(&g)?;
                json!({
                    "value": evaluate(&g, *prescription)?.to_string(),
                    "j": f.j.to_string(),
                    "e": f.e.to_string(),
                    "n": f.n.to_string(),
                })
            }
        }
        Command::Table { kind, max, n_max } => {
            let bound = match kind {
                table::TableKind::TetRegular => n_max.or(*max),
                _ => *max,
            }
            .ok_or_else(|| CliError::Usage("table needs --max (or --n-max for tet-regular)".into()))?;
            let mut cache = ctx.cache.as_deref().map(cache::Cache::open).transpose()?;
            let req = table::TableRequest { kind: *kind, max: bound, jobs: ctx.jobs };
            Value::Array(table::table(&req, cache.as_mut())?)
        }
        Command::Bench { case, runs } => {
            serde_json::to_value(bench::bench(*case, *runs, ctx.seed)).expect("reports serialize")
        }
    })
}

fn suite_value(r: suites::SuiteReport) -> Result<Value, CliError> {
    let v = serde_json::to_value(&r).expect("reports serialize");
    if r.ok() {
        Ok(v)
    } else {
        Err(CliError::Failed(v.to_string()))
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// result to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let root = match cli.kappa.map(RootOfUnity::new).transpose() {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let ctx = Ctx {
        root,
        seed: cli.seed,
        strict: cli.strict,
        cache: cli.cache.clone(),
        jobs: cli.jobs,
    };
    match execute(&cli.command, &ctx) {
        Ok(v) => {
            if write!(out, "{}", output::render(&v, cli.format)).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
