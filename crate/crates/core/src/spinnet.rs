//! Loop, theta and tetrahedron spin networks under the integer, Penrose,
//! Kauffman and unitary evaluation prescriptions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, PrimePowers, Surd};
use crate::gon::{gon3, gon3_prime_powers};
use crate::tet::tet;
use crate::triples::{is_admissible_tet, is_admissible_triple, TetLabels};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoredGraph {
    Loop(u32),
    Theta(u32, u32, u32),
    /// The tetrahedron graph dual to the labelled tetrahedron.
    Tetra(TetLabels),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Prescription {
    /// Integer evaluation.
    Z,
    /// Penrose evaluation.
    P,
    /// Kauffman evaluation.
    K,
    /// Unitary evaluation.
    U,
}

impl FromStr for Prescription {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "Z" | "z" => Ok(Prescription::Z),
            "P" | "p" => Ok(Prescription::P),
            "K" | "k" => Ok(Prescription::K),
            "U" | "u" => Ok(Prescription::U),
            _ => Err(format!("unknown prescription {s:?}, expected Z, P, K or U")),
        }
    }
}

/// Conversion factors between prescriptions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factors {
    #[serde(with = "crate::serde_bigint")]
    pub j: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub e: BigInt,
    pub n: Surd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinValue {
    Integer(BigInt),
    Rational(BigRational),
    Surd(Surd),
}

impl SpinValue {
    pub fn to_surd(&self) -> Surd {
        match self {
            SpinValue::Integer(n) => Surd::from_integer(n.clone()),
            SpinValue::Rational(r) => Surd::from_rational(r.clone()),
            SpinValue::Surd(s) => s.clone(),
        }
    }
}

impl fmt::Display for SpinValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinValue::Integer(n) => write!(f, "{n}"),
            SpinValue::Rational(r) => write!(f, "{r}"),
            SpinValue::Surd(s) => write!(f, "{s}"),
        }
    }
}

impl ColoredGraph {
    /// Edge colours around each trivalent vertex.
    pub fn vertices(&self) -> Vec<[u32; 3]> {
        match *self {
            ColoredGraph::Loop(_) => Vec::new(),
            ColoredGraph::Theta(a, b, c) => vec![[a, b, c]; 2],
            ColoredGraph::Tetra(t) => t.faces().iter().map(|f| f.as_array()).collect(),
        }
    }

    pub fn edges(&self) -> Vec<u32> {
        match *self {
            ColoredGraph::Loop(n) => vec![n],
            ColoredGraph::Theta(a, b, c) => vec![a, b, c],
            ColoredGraph::Tetra(t) => t.flat().to_vec(),
        }
    }

    pub fn is_admissible(&self) -> bool {
        match *self {
            ColoredGraph::Loop(_) => true,
            ColoredGraph::Theta(a, b, c) => is_admissible_triple(a as i64, b as i64, c as i64),
            ColoredGraph::Tetra(t) => is_admissible_tet(&t),
        }
    }

    fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible(format!("{self:?}")))
        }
    }
}

fn parity_sign(exp: u32) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `J = prod_v (s_v - v1)! (s_v - v2)! (s_v - v3)!`, `E = prod_e col(e)!`
/// and `N = prod_v sqrt|Theta_v|` with `|Theta_v| = gon(v1, v2, v3)`.
///
/// The loop takes the same value under every prescription, so its factors
/// are all 1.
pub fn factors(g: &ColoredGraph) -> Result<Factors> {
    g.require_admissible()?;
    if let ColoredGraph::Loop(_) = g {
        return Ok(Factors {
            j: BigInt::one(),
            e: BigInt::one(),
            n: Surd::one(),
        });
    }
    let mut j = BigInt::one();
    let mut radicand = PrimePowers::one();
    for [x, y, z] in g.vertices() {
        let s = (x + y + z) / 2;
        for v in [x, y, z] {
            j *= factorial((s - v) as u64);
        }
        radicand.mul_pow(&gon3_prime_powers(x, y, z)?, 1);
    }
    let e = g.edges().iter().map(|&x| factorial(x as u64)).product();
    let n = Surd::from_sqrt_factored(BigRational::one(), &radicand);
    Ok(Factors { j, e, n })
}

fn integer_value(g: &ColoredGraph) -> BigInt {
    match *g {
        ColoredGraph::Loop(n) => parity_sign(n) * BigInt::from(n as u64 + 1),
        ColoredGraph::Theta(a, b, c) => parity_sign((a + b + c) / 2) * gon3(a, b, c),
        ColoredGraph::Tetra(t) => tet(&t),
    }
}

/// Value of the coloured graph under prescription `p`.
pub fn evaluate(g: &ColoredGraph, p: Prescription) -> Result<SpinValue> {
    g.require_admissible()?;
    let z = integer_value(g);
    if let ColoredGraph::Loop(_) = g {
        return Ok(SpinValue::Integer(z));
    }
    let f = factors(g)?;
    Ok(match p {
        Prescription::Z => SpinValue::Integer(z),
        Prescription::P => SpinValue::Integer(f.j * z),
        Prescription::K => SpinValue::Rational(BigRational::new(f.j * z, f.e)),
        Prescription::U => {
            if z.is_zero() {
                SpinValue::Surd(Surd::zero())
            } else {
                let mut inv = PrimePowers::one();
                for [x, y, w] in g.vertices() {
                    inv.mul_pow(&gon3_prime_powers(x, y, w)?, -1);
                }
                SpinValue::Surd(Surd::from_sqrt_factored(BigRational::from_integer(z), &inv))
            }
        }
    })
}
