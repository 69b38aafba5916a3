//! Admissible triples and tetrahedra, fusion ranges and the tetrahedral
//! symmetry group.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::RootOfUnity;
use crate::linalg;

/// Three edge labels, each twice a spin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct Triple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Triple {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Triple { a, b, c }
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible_triple(self.a as i64, self.b as i64, self.c as i64)
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    /// Same triple with labels sorted ascending.
    pub fn sorted(&self) -> Triple {
        let mut v = self.as_array();
        v.sort_unstable();
        v.into()
    }
}

impl From<[u32; 3]> for Triple {
    fn from(v: [u32; 3]) -> Self {
        Triple::new(v[0], v[1], v[2])
    }
}

impl From<Triple> for [u32; 3] {
    fn from(t: Triple) -> Self {
        t.as_array()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

impl FromStr for Triple {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let v = parse_labels(s)?;
        match v.as_slice() {
            [a, b, c] => Ok(Triple::new(*a, *b, *c)),
            _ => Err(format!("expected three labels, got {}", v.len())),
        }
    }
}

/// Reads non-negative integers out of a bracketed list such as `[[1,2,3],[4,5,6]]`.
pub fn parse_labels(s: &str) -> std::result::Result<Vec<u32>, String> {
    s.split(|c: char| c == ',' || c == '[' || c == ']' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|e| format!("bad label {t:?}: {e}")))
        .collect()
}

/// Internal variables of an admissible triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InternalVars {
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub sigma: u32,
}

impl InternalVars {
    /// The triple `(m + n, n + p, p + m)`.
    pub fn to_triple(&self) -> Triple {
        Triple::new(self.m + self.n, self.n + self.p, self.p + self.m)
    }
}

/// Triangle inequalities, non-negativity and even perimeter.
pub fn is_admissible_triple(a: i64, b: i64, c: i64) -> bool {
    a >= 0
        && b >= 0
        && c >= 0
        && a + b - c >= 0
        && b + c - a >= 0
        && c + a - b >= 0
        && (a + b + c) % 2 == 0
}

pub fn internal_vars(t: Triple) -> Result<InternalVars> {
    if !t.is_admissible() {
        return Err(Error::NotAdmissible(t.to_string()));
    }
    let (a, b, c) = (t.a, t.b, t.c);
    Ok(InternalVars {
        m: (c + a - b) / 2,
        n: (a + b - c) / 2,
        p: (b + c - a) / 2,
        sigma: (a + b + c) / 2,
    })
}

/// `{|a - b|, |a - b| + 2, ..., a + b}`.
pub fn fusion_range(a: u32, b: u32) -> BTreeSet<u32> {
    (a.abs_diff(b)..=a + b).step_by(2).collect()
}

/// Left fold of [`fusion_range`] over the list, with set semantics.
pub fn fusion_range_multi(xs: &[u32]) -> BTreeSet<u32> {
    let Some((&first, rest)) = xs.split_first() else {
        return BTreeSet::from([0]);
    };
    let mut acc = BTreeSet::from([first]);
    for &x in rest {
        let mut next = BTreeSet::new();
        for &y in &acc {
            next.extend(fusion_range(y, x));
        }
        acc = next;
    }
    acc
}

/// Fusion range truncated at level `kappa - 2`: keeps `c` with
/// `a + b + c <= 2 kappa - 4`.
pub fn q_fusion_range(a: u32, b: u32, root: &RootOfUnity) -> BTreeSet<u32> {
    let bound = 2 * root.kappa() as i64 - 4;
    fusion_range(a, b)
        .into_iter()
        .filter(|&c| (a + b + c) as i64 <= bound)
        .collect()
}

/// Polygon labels are admissible when the trivial label occurs in their
/// iterated fusion.
pub fn is_admissible_polygon(xs: &[u32]) -> bool {
    fusion_range_multi(xs).contains(&0)
}

/// Classification of a labelled tetrahedron by its Cayley–Menger determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeomKind {
    Euclidean,
    Minkowskian,
    Flat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeomClass {
    pub kind: GeomKind,
    #[serde(with = "crate::serde_bigint")]
    pub delta: BigInt,
}

/// Six edge labels `((a,b,c),(d,e,f))`, with `a,d`, `b,e` and `c,f` on
/// opposite edges. The faces are `(a,b,c)`, `(b,d,f)`, `(a,e,f)` and
/// `(c,d,e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[[u32; 3]; 2]", into = "[[u32; 3]; 2]")]
pub struct TetLabels {
    pub first: [u32; 3],
    pub second: [u32; 3],
}

impl TetLabels {
    pub fn new(first: [u32; 3], second: [u32; 3]) -> Self {
        TetLabels { first, second }
    }

    pub fn flat(&self) -> [u32; 6] {
        let [a, b, c] = self.first;
        let [d, e, f] = self.second;
        [a, b, c, d, e, f]
    }

    pub fn faces(&self) -> [Triple; 4] {
        let [a, b, c, d, e, f] = self.flat();
        [
            Triple::new(a, b, c),
            Triple::new(b, d, f),
            Triple::new(a, e, f),
            Triple::new(c, d, e),
        ]
    }

    /// Face half-perimeters, in face order.
    pub fn sigmas(&self) -> [u32; 4] {
        self.faces().map(|t| (t.a + t.b + t.c) / 2)
    }

    /// Half-sums over the three four-cycles of edges.
    pub fn taus(&self) -> [u32; 3] {
        let [a, b, c, d, e, f] = self.flat();
        [(a + b + d + e) / 2, (a + f + d + c) / 2, (e + f + b + c) / 2]
    }
}

impl From<[[u32; 3]; 2]> for TetLabels {
    fn from(v: [[u32; 3]; 2]) -> Self {
        TetLabels::new(v[0], v[1])
    }
}

impl From<TetLabels> for [[u32; 3]; 2] {
    fn from(t: TetLabels) -> Self {
        [t.first, t.second]
    }
}

impl fmt::Display for TetLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.flat();
        write!(f, "[[{a},{b},{c}],[{d},{e},{g}]]")
    }
}

impl FromStr for TetLabels {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let v = parse_labels(s)?;
        match v.as_slice() {
            [a, b, c, d, e, f] => Ok(TetLabels::new([*a, *b, *c], [*d, *e, *f])),
            _ => Err(format!("expected six labels, got {}", v.len())),
        }
    }
}

pub fn is_admissible_tet(t: &TetLabels) -> bool {
    t.faces().iter().all(Triple::is_admissible)
}

const COLUMN_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

const EVEN_FLIPS: [[bool; 3]; 4] = [
    [false, false, false],
    [true, true, false],
    [true, false, true],
    [false, true, true],
];

/// The 24 relabelings induced by the symmetries of the tetrahedron:
/// permutations of the opposite-edge columns combined with swapping the
/// two labels in an even number of columns.
pub fn tet_symmetry_images(t: &TetLabels) -> Vec<TetLabels> {
    let cols = [
        (t.first[0], t.second[0]),
        (t.first[1], t.second[1]),
        (t.first[2], t.second[2]),
    ];
    let mut out = Vec::with_capacity(24);
    for perm in COLUMN_PERMS {
        for flips in EVEN_FLIPS {
            let mut first = [0; 3];
            let mut second = [0; 3];
            for k in 0..3 {
                let (top, bottom) = cols[perm[k]];
                (first[k], second[k]) = if flips[k] { (bottom, top) } else { (top, bottom) };
            }
            out.push(TetLabels::new(first, second));
        }
    }
    out
}

/// Lexicographically least image under the tetrahedral group.
pub fn canonical_tet(t: &TetLabels) -> TetLabels {
    tet_symmetry_images(t)
        .into_iter()
        .min_by_key(|x| x.flat())
        .expect("the group is nonempty")
}

/// Cayley–Menger determinant with the labels read as edge lengths.
///
/// Vertices `0..4` carry `|01| = a`, `|12| = b`, `|02| = c`, `|23| = d`,
/// `|03| = e`, `|13| = f`. For a Euclidean tetrahedron `delta = 288 V^2`.
pub fn cayley_menger(t: &TetLabels) -> GeomClass {
    let sq = |x: u32| BigInt::from(x as u64 * x as u64);
    let [a, b, c, d, e, f] = t.flat().map(sq);
    let z = BigInt::zero;
    let o = || BigInt::from(1);
    let m = vec![
        vec![z(), a.clone(), c.clone(), e.clone(), o()],
        vec![a, z(), b.clone(), f.clone(), o()],
        vec![c, b, z(), d.clone(), o()],
        vec![e, f, d, z(), o()],
        vec![o(), o(), o(), o(), z()],
    ];
    let delta = linalg::determinant(&m).expect("integer Bareiss divisions are exact");
    let kind = if delta.is_positive() {
        GeomKind::Euclidean
    } else if delta.is_negative() {
        GeomKind::Minkowskian
    } else {
        GeomKind::Flat
    };
    GeomClass { kind, delta }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_basics() {
        assert!(is_admissible_triple(0, 0, 0));
        assert!(!is_admissible_triple(1, 1, 1));
        assert!(is_admissible_triple(2, 1, 3));
        assert!(!is_admissible_triple(-2, 1, 3));
        assert!(!is_admissible_triple(1, 1, 4));
    }

    #[test]
    fn internal_variables() {
        let v = internal_vars(Triple::new(3, 7, 8)).unwrap();
        assert_eq!((v.m, v.n, v.p, v.sigma), (2, 1, 6, 9));
        assert_eq!(v.to_triple(), Triple::new(3, 7, 8));
        let v = internal_vars(Triple::new(5, 5, 0)).unwrap();
        assert_eq!((v.m, v.n, v.p), (0, 5, 0));
        assert!(internal_vars(Triple::new(1, 1, 1)).is_err());
    }

    #[test]
    fn fusion_examples() {
        assert_eq!(fusion_range(1, 4), BTreeSet::from([3, 5]));
        assert_eq!(fusion_range(3, 5), BTreeSet::from([2, 4, 6, 8]));
        assert_eq!(fusion_range(7, 0), BTreeSet::from([7]));
        assert_eq!(fusion_range_multi(&[3, 4, 1]), BTreeSet::from([0, 2, 4, 6, 8]));
        assert_eq!(
            fusion_range_multi(&[4, 11, 3]),
            (4..=18).step_by(2).collect::<BTreeSet<u32>>()
        );
    }

    #[test]
    fn truncated_fusion() {
        let r4 = RootOfUnity::new(4).unwrap();
        assert_eq!(q_fusion_range(2, 2, &r4), BTreeSet::from([0]));
        let r3 = RootOfUnity::new(3).unwrap();
        assert_eq!(q_fusion_range(1, 1, &r3), BTreeSet::from([0]));
        let r9 = RootOfUnity::new(9).unwrap();
        assert_eq!(q_fusion_range(3, 4, &r9), fusion_range(3, 4));
    }

    #[test]
    fn tetrahedra() {
        assert!(is_admissible_tet(&TetLabels::new([8, 20, 24], [15, 13, 17])));
        assert!(is_admissible_tet(&TetLabels::new([2, 1, 3], [1, 2, 2])));
        assert!(!is_admissible_tet(&TetLabels::new([1, 1, 1], [1, 1, 1])));
    }

    #[test]
    fn symmetry_orbit() {
        let t = TetLabels::new([1, 2, 3], [4, 5, 6]);
        let orbit: BTreeSet<_> = tet_symmetry_images(&t).into_iter().collect();
        assert_eq!(orbit.len(), 24);
        // the face presentations listed alongside the definition
        let [a, b, c, d, e, f] = t.flat();
        for alt in [
            TetLabels::new([b, d, f], [e, a, c]),
            TetLabels::new([a, f, e], [d, c, b]),
            TetLabels::new([c, d, e], [f, a, b]),
        ] {
            assert!(orbit.contains(&alt));
            assert_eq!(canonical_tet(&alt), canonical_tet(&t));
        }
        let r = TetLabels::new([2, 2, 2], [2, 2, 2]);
        assert_eq!(canonical_tet(&r), r);
    }

    #[test]
    fn cayley_menger_regular() {
        let g = cayley_menger(&TetLabels::new([2, 2, 2], [2, 2, 2]));
        assert_eq!(g.delta, BigInt::from(256));
        assert_eq!(g.kind, GeomKind::Euclidean);
        // a degenerate layout: two coincident vertices
        let g = cayley_menger(&TetLabels::new([0, 3, 3], [4, 3, 3]));
        assert_eq!(g.kind, GeomKind::Flat);
    }

    #[test]
    fn label_parsing() {
        let t: TetLabels = "[[8,20,24],[15,13,17]]".parse().unwrap();
        assert_eq!(t, TetLabels::new([8, 20, 24], [15, 13, 17]));
        assert_eq!(t.to_string(), "[[8,20,24],[15,13,17]]");
        assert!("[1,2]".parse::<Triple>().is_err());
    }
}
