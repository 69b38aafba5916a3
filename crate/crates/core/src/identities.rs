//! Composite identities: the channel duality of gon, the bipyramid, the
//! barycentric subdivision, the cube sum and the Dyson constant term.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gon::gon3;
use crate::tet::tet;
use crate::triples::{fusion_range, is_admissible_tet, is_admissible_triple, TetLabels};

/// Several exact evaluations of what should be the same quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport<T> {
    /// Named evaluations; the first two are the left and right hand sides.
    pub values: Vec<(String, T)>,
    pub equal: bool,
    /// Summation sets used, by name.
    pub witness: Vec<(String, Vec<u32>)>,
}

impl<T: PartialEq + Clone> IdentityReport<T> {
    pub fn new(values: Vec<(String, T)>, witness: Vec<(String, Vec<u32>)>) -> Self {
        let equal = values.windows(2).all(|w| w[0].1 == w[1].1);
        IdentityReport {
            values,
            equal,
            witness,
        }
    }

    pub fn lhs(&self) -> &T {
        &self.values[0].1
    }

    pub fn rhs(&self) -> &T {
        &self.values[1].1
    }
}

impl<T: fmt::Display> Serialize for IdentityReport<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let values: Vec<(&str, String)> =
            self.values.iter().map(|(k, v)| (k.as_str(), v.to_string())).collect();
        let mut st = s.serialize_struct("IdentityReport", 3)?;
        st.serialize_field("values", &values)?;
        st.serialize_field("equal", &self.equal)?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

fn channel(x: u32, y: u32, z: u32, w: u32) -> (BigInt, BTreeSet<u32>) {
    let set: BTreeSet<u32> = fusion_range(x, y)
        .intersection(&fusion_range(z, w))
        .copied()
        .collect();
    let mut total = BigInt::zero();
    for &s in &set {
        total += gon3(x, y, s) * gon3(z, w, s) / BigInt::from(s as u64 + 1);
    }
    (total, set)
}

/// The s, t and u channel sums for the quadrilateral `(a,b,c,d)`.
pub fn verify_duality(a: u32, b: u32, c: u32, d: u32) -> IdentityReport<BigInt> {
    let (s, ss) = channel(a, b, c, d);
    let (t, ts) = channel(a, d, b, c);
    let (u, us) = channel(a, c, b, d);
    IdentityReport::new(
        vec![("s".into(), s), ("t".into(), t), ("u".into(), u)],
        vec![
            ("S".into(), ss.into_iter().collect()),
            ("T".into(), ts.into_iter().collect()),
            ("U".into(), us.into_iter().collect()),
        ],
    )
}

/// Two tetrahedra `((a,b,c),(d,e,f))` and `((a,b,c),(g,h,k))` glued along
/// the face `(a,b,c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[u32; 9]", into = "[u32; 9]")]
pub struct Bipyramid {
    pub labels: [u32; 9],
}

impl From<[u32; 9]> for Bipyramid {
    fn from(labels: [u32; 9]) -> Self {
        Bipyramid { labels }
    }
}

impl From<Bipyramid> for [u32; 9] {
    fn from(b: Bipyramid) -> Self {
        b.labels
    }
}

impl Bipyramid {
    /// Checks that both tetrahedra are admissible.
    pub fn new(labels: [u32; 9]) -> Result<Self> {
        let bp = Bipyramid { labels };
        for t in bp.tetrahedra() {
            if !is_admissible_tet(&t) {
                return Err(Error::NotAdmissible(format!("{labels:?}")));
            }
        }
        Ok(bp)
    }

    pub fn tetrahedra(&self) -> [TetLabels; 2] {
        let [a, b, c, d, e, f, g, h, k] = self.labels;
        [
            TetLabels::new([a, b, c], [d, e, f]),
            TetLabels::new([a, b, c], [g, h, k]),
        ]
    }

    /// Range of the internal edge `x` in [`hed2`].
    pub fn axis_range(&self) -> BTreeSet<u32> {
        let [_, _, _, d, e, f, g, h, k] = self.labels;
        let dg = fusion_range(d, g);
        let fk = fusion_range(f, k);
        fusion_range(h, e)
            .into_iter()
            .filter(|x| dg.contains(x) && fk.contains(x))
            .collect()
    }
}

fn sign(exp: i64) -> i64 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `tet(T1) tet(T2) / ((-1)^((a+b+c)/2) gon(a,b,c))`, which is an integer.
pub fn hed1(bp: &Bipyramid) -> Result<BigInt> {
    let [a, b, c, ..] = bp.labels;
    let [t1, t2] = bp.tetrahedra();
    let g = gon3(a, b, c);
    if g.is_zero() {
        return Ok(BigInt::zero());
    }
    let num = tet(&t1) * tet(&t2) * sign(((a + b + c) / 2) as i64);
    let q = BigRational::new(num, g);
    if !q.is_integer() {
        return Err(Error::NonIntegral(format!("hed1 of {:?}", bp.labels)));
    }
    Ok(q.to_integer())
}

/// Three tetrahedra around the axis `x` joining the two apexes:
/// `sum_x tet((c,e,d),(x,g,h)) tet((b,d,f),(x,k,g)) tet((a,e,f),(x,k,h)) (-1)^x (x+1)`
/// divided by the three signed gons of the faces containing `x`.
pub fn hed2(bp: &Bipyramid) -> BigRational {
    let [a, b, c, d, e, f, g, h, k] = bp.labels;
    let mut total = BigRational::zero();
    for x in bp.axis_range() {
        let t1 = tet(&TetLabels::new([c, e, d], [x, g, h]));
        let t2 = tet(&TetLabels::new([b, d, f], [x, k, g]));
        let t3 = tet(&TetLabels::new([a, e, f], [x, k, h]));
        let num = t1 * t2 * t3 * BigInt::from(x as u64 + 1);
        if num.is_zero() {
            continue;
        }
        let s = sign(x as i64)
            * sign(((x + d + g) / 2) as i64)
            * sign(((x + f + k) / 2) as i64)
            * sign(((x + e + h) / 2) as i64);
        let den = gon3(x, d, g) * gon3(x, f, k) * gon3(x, e, h);
        total += BigRational::new(num * s, den);
    }
    total
}

/// Admissible `(alpha, beta, gamma)` for the barycentric subdivision of
/// `t = ((a,b,c),(A,B,C))` with central labels `delta`, in lexicographic order.
pub fn barycentric_enum(t: &TetLabels, delta: u32) -> Vec<(u32, u32, u32)> {
    let [a, b, c] = t.first;
    let [ca, cb, cc] = t.second;
    let adm = |x: u32, y: u32, z: u32| is_admissible_triple(x as i64, y as i64, z as i64);
    let mut out = Vec::new();
    for alpha in fusion_range(ca, delta) {
        for beta in fusion_range(cb, delta) {
            if !adm(alpha, beta, c) {
                continue;
            }
            for gamma in fusion_range(cc, delta) {
                if adm(a, beta, gamma) && adm(alpha, b, gamma) {
                    out.push((alpha, beta, gamma));
                }
            }
        }
    }
    out
}

/// Contribution `P1 P2 P3` of each solution of [`barycentric_enum`].
pub fn barycentric_terms(t: &TetLabels, delta: u32) -> Vec<((u32, u32, u32), BigRational)> {
    let [a, b, c] = t.first;
    let [ca, cb, cc] = t.second;
    let d = delta;
    barycentric_enum(t, delta)
        .into_iter()
        .map(|(al, be, ga)| {
            let tets = tet(&TetLabels::new([a, b, c], [al, be, ga]))
                * tet(&TetLabels::new([a, cb, cc], [d, ga, be]))
                * tet(&TetLabels::new([cc, ca, b], [al, ga, d]))
                * tet(&TetLabels::new([ca, cb, c], [be, al, d]));
            let gons = gon3(a, be, ga)
                * gon3(ca, al, d)
                * gon3(al, b, ga)
                * gon3(be, cb, d)
                * gon3(al, be, c)
                * gon3(ga, d, cc);
            let weights = BigInt::from(
                (al as u64 + 1) * (be as u64 + 1) * (ga as u64 + 1) * (d as u64 + 1),
            );
            let half = ((a + be + ga)
                + (al + ca + d)
                + (al + b + ga)
                + (be + cb + d)
                + (al + be + c)
                + (ga + cc + d))
                / 2;
            let s = sign((al + be + ga + d) as i64) * sign(half as i64);
            let v = BigRational::new(tets * weights * s, gons);
            ((al, be, ga), v)
        })
        .collect()
}

/// `P(delta)`, which equals `(delta+1)^2 tet(t)`.
pub fn barycentric_p(t: &TetLabels, delta: u32) -> BigRational {
    barycentric_terms(t, delta).into_iter().map(|(_, v)| v).sum()
}

/// The twelve edges of a parallelepiped with vertices `0..8`, in the order
/// `01, 13, 32, 20, 45, 57, 76, 64, 04, 15, 26, 37`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[u32; 12]", into = "[u32; 12]")]
pub struct CubeLabels {
    pub edges: [u32; 12],
}

impl From<[u32; 12]> for CubeLabels {
    fn from(edges: [u32; 12]) -> Self {
        CubeLabels { edges }
    }
}

impl From<CubeLabels> for [u32; 12] {
    fn from(c: CubeLabels) -> Self {
        c.edges
    }
}

impl CubeLabels {
    pub const EDGE_NAMES: [&'static str; 12] =
        ["01", "13", "32", "20", "45", "57", "76", "64", "04", "15", "26", "37"];

    pub fn uniform(n: u32) -> Self {
        CubeLabels { edges: [n; 12] }
    }
}

/// Value of the cube sum and the number of admissible diagonal assignments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeValue {
    #[serde(with = "crate::serde_bigint")]
    pub value: BigInt,
    pub assignments: usize,
}

/// The cube sum over the five-tetrahedron dissection with inner
/// tetrahedron `[1,2,4,7]`.
///
/// For each admissible choice of the six face diagonals the summand is the
/// product of the five tets, divided by the gons of the four inner faces,
/// times `x + 1` for every diagonal. No extra signs are applied.
pub fn cube(labels: &CubeLabels) -> Result<CubeValue> {
    let [x01, x13, x23, x02, x45, x57, x67, x46, x04, x15, x26, x37] = labels.edges;
    let range = |p: (u32, u32), q: (u32, u32)| -> Vec<u32> {
        fusion_range(p.0, p.1)
            .intersection(&fusion_range(q.0, q.1))
            .copied()
            .collect()
    };
    let adm = |x: u32, y: u32, z: u32| is_admissible_triple(x as i64, y as i64, z as i64);
    let r12 = range((x01, x02), (x23, x13));
    let r14 = range((x01, x04), (x45, x15));
    let r24 = range((x02, x04), (x46, x26));
    let r17 = range((x15, x57), (x13, x37));
    let r27 = range((x23, x37), (x26, x67));
    let r47 = range((x46, x67), (x45, x57));

    let mut total = BigRational::zero();
    let mut count = 0usize;
    for &d12 in &r12 {
        for &d14 in &r14 {
            for &d24 in &r24 {
                if !adm(d12, d24, d14) {
                    continue;
                }
                for &d17 in &r17 {
                    for &d27 in &r27 {
                        if !adm(d12, d27, d17) {
                            continue;
                        }
                        for &d47 in &r47 {
                            if !adm(d14, d47, d17) || !adm(d24, d47, d27) {
                                continue;
                            }
                            let tets = [
                                TetLabels::new([x01, d12, x02], [d24, x04, d14]),
                                TetLabels::new([d24, x46, x26], [x67, d27, d47]),
                                TetLabels::new([d14, x45, x15], [x57, d17, d47]),
                                TetLabels::new([d12, x23, x13], [x37, d17, d27]),
                                TetLabels::new([d12, d24, d14], [d47, d17, d27]),
                            ];
                            if !tets.iter().all(is_admissible_tet) {
                                continue;
                            }
                            count += 1;
                            let num: BigInt = tets.iter().map(tet).product::<BigInt>()
                                * [d12, d14, d24, d17, d27, d47]
                                    .iter()
                                    .map(|&x| BigInt::from(x as u64 + 1))
                                    .product::<BigInt>();
                            let den = gon3(d12, d24, d14)
                                * gon3(d12, d27, d17)
                                * gon3(d14, d47, d17)
                                * gon3(d24, d47, d27);
                            total += BigRational::new(num, den);
                        }
                    }
                }
            }
        }
    }
    if !total.is_integer() {
        return Err(Error::NonIntegral(format!("cube sum {total}")));
    }
    Ok(CubeValue {
        value: total.to_integer(),
        assignments: count,
    })
}

/// Largest `m + n + p` accepted by [`dyson_ct`].
pub const DYSON_LIMIT: u32 = 12;

type Monomial = (i32, i32, i32);

fn poly_mul(a: &HashMap<Monomial, BigInt>, b: &HashMap<Monomial, BigInt>) -> HashMap<Monomial, BigInt> {
    let mut out: HashMap<Monomial, BigInt> = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = (ea.0 + eb.0, ea.1 + eb.1, ea.2 + eb.2);
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Constant term in `u, v, w` of
/// `(1-1/w) (1-u)^m (1-1/u)^n (1-v)^n (1-1/v)^p (1-w)^p (1-1/(vw)) (1-uv)^m
/// (1-vw)^n (1-1/(uv))^p (1-1/(uvw)) (1-uvw)^m`, by direct expansion.
pub fn dyson_ct(m: u32, n: u32, p: u32) -> Result<BigInt> {
    if m + n + p > DYSON_LIMIT {
        return Err(Error::SizeLimit(format!(
            "dyson_ct needs m + n + p <= {DYSON_LIMIT}"
        )));
    }
    let factors: [(Monomial, u32); 12] = [
        ((0, 0, -1), 1),
        ((1, 0, 0), m),
        ((-1, 0, 0), n),
        ((0, 1, 0), n),
        ((0, -1, 0), p),
        ((0, 0, 1), p),
        ((0, -1, -1), 1),
        ((1, 1, 0), m),
        ((0, 1, 1), n),
        ((-1, -1, 0), p),
        ((-1, -1, -1), 1),
        ((1, 1, 1), m),
    ];
    let mut acc: HashMap<Monomial, BigInt> = HashMap::from([((0, 0, 0), BigInt::one())]);
    for (mono, power) in factors {
        let binom: HashMap<Monomial, BigInt> =
            HashMap::from([((0, 0, 0), BigInt::one()), (mono, BigInt::from(-1))]);
        for _ in 0..power {
            acc = poly_mul(&acc, &binom);
        }
    }
    Ok(acc.remove(&(0, 0, 0)).unwrap_or_default())
}
