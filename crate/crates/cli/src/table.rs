//! Bulk tables over label ranges, computed in parallel and emitted in
//! canonical key order.

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};

use gontet::gon::gon3;
use gontet::tet::{sixj, tet, tet_regular};
use gontet::triples::{canonical_tet, is_admissible_tet, is_admissible_triple, TetLabels};

use crate::cache::Cache;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Gon,
    Tet,
    TetRegular,
    Sixj,
}

/// Sorted admissible triples `a <= b <= c <= max`.
pub fn gon_inputs(max: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for c in 0..=max {
        for b in 0..=c {
            for a in 0..=b {
                if is_admissible_triple(a as i64, b as i64, c as i64) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Admissible tetrahedra with labels `<= max`, one per symmetry orbit.
pub fn tet_inputs(max: u32) -> Vec<TetLabels> {
    let mut out = Vec::new();
    let r = 0..=max;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                if !is_admissible_triple(a as i64, b as i64, c as i64) {
                    continue;
                }
                for d in r.clone() {
                    for e in r.clone() {
                        for f in r.clone() {
                            let t = TetLabels::new([a, b, c], [d, e, f]);
                            if is_admissible_tet(&t) && canonical_tet(&t) == t {
                                out.push(t);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        b = b.num_threads(n.max(1));
    }
    b.build().map_err(|e| CliError::Failed(format!("thread pool: {e}")))
}

/// Computes `(key, value)` for every input, taking cached values where
/// present and recording new ones.
fn cached_map<I, F>(
    inputs: Vec<I>,
    key: impl Fn(&I) -> String + Sync,
    compute: F,
    cache: Option<&mut Cache>,
    jobs: Option<usize>,
) -> Result<Vec<(I, String)>, CliError>
where
    I: Send + Sync,
    F: Fn(&I) -> String + Sync,
{
    let pool = pool(jobs)?;
    let results: Vec<(I, Option<String>)> = match &cache {
        Some(c) => inputs
            .into_iter()
            .map(|i| {
                let hit = c.get(&key(&i)).cloned();
                (i, hit)
            })
            .collect(),
        None => inputs.into_iter().map(|i| (i, None)).collect(),
    };
    let filled: Vec<(I, String, bool)> = pool.install(|| {
        results
            .into_par_iter()
            .map(|(i, hit)| match hit {
                Some(v) => (i, v, false),
                None => {
                    let v = compute(&i);
                    (i, v, true)
                }
            })
            .collect()
    });
    if let Some(c) = cache {
        for (i, v, fresh) in &filled {
            if *fresh {
                c.insert(key(i), v.clone());
            }
        }
        c.flush()?;
    }
    Ok(filled.into_iter().map(|(i, v, _)| (i, v)).collect())
}

pub struct TableRequest {
    pub kind: TableKind,
    pub max: u32,
    pub jobs: Option<usize>,
}

/// Records in canonical key order, independent of `jobs` and of the cache.
pub fn table(req: &TableRequest, cache: Option<&mut Cache>) -> Result<Vec<Value>, CliError> {
    let mut rows: Vec<(Vec<u32>, Value)> = match req.kind {
        TableKind::Gon => cached_map(
            gon_inputs(req.max),
            |t| format!("gon:[{},{},{}]", t[0], t[1], t[2]),
            |t| gon3(t[0], t[1], t[2]).to_string(),
            cache,
            req.jobs,
        )?
        .into_iter()
        .map(|(t, v)| (t.to_vec(), json!({"labels": format!("[{},{},{}]", t[0], t[1], t[2]), "value": v})))
        .collect(),
        TableKind::Tet => cached_map(
            tet_inputs(req.max),
            |t| format!("tet:{t}"),
            |t| tet(t).to_string(),
            cache,
            req.jobs,
        )?
        .into_iter()
        .map(|(t, v)| (t.flat().to_vec(), json!({"labels": t.to_string(), "value": v})))
        .collect(),
        TableKind::Sixj => {
            let pool = pool(req.jobs)?;
            let inputs = tet_inputs(req.max);
            pool.install(|| {
                inputs
                    .into_par_iter()
                    .map(|t| {
                        let s = sixj(&t);
                        let v = json!({
                            "labels": t.to_string(),
                            "coeff": s.coeff().to_string(),
                            "radicand": s.radicand().to_string(),
                        });
                        (t.flat().to_vec(), v)
                    })
                    .collect()
            })
        }
        TableKind::TetRegular => (0..=req.max)
            .step_by(2)
            .map(|n| {
                let v = tet_regular(n).expect("even argument");
                (vec![n], json!({"label": n.to_string(), "value": v.to_string()}))
            })
            .collect(),
    };
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(rows.into_iter().map(|(_, v)| v).collect())
}
