//! Dense integer polynomials `c[0] + c[1] x + ...`, used internally for gcds,
//! cyclotomic polynomials and reductions modulo them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<BigInt>;

pub(crate) fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn primitive_part(p: &[BigInt]) -> Dense {
    let g = content(p);
    if g.is_zero() {
        return Vec::new();
    }
    let mut out: Dense = p.iter().map(|c| c / &g).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        for c in out.iter_mut() {
            *c = -&*c;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a monic `m`.
pub(crate) fn rem_monic(a: &[BigInt], m: &[BigInt]) -> Dense {
    let dm = m.len() - 1;
    let mut r: Dense = a.to_vec();
    if r.len() <= dm {
        return trim(r);
    }
    for i in (dm..r.len()).rev() {
        let top = std::mem::take(&mut r[i]);
        if top.is_zero() {
            continue;
        }
        for k in 0..dm {
            if !m[k].is_zero() {
                r[i - dm + k] -= &top * &m[k];
            }
        }
    }
    r.truncate(dm);
    trim(r)
}

/// Pseudo-remainder of `a` by `b` up to a nonzero scalar factor.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        r.truncate(dr + 1);
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for k in 0..=db {
            r[dr - db + k] -= &lr * &b[k];
        }
        let g = content(&r);
        if !g.is_zero() && !g.is_one() {
            for c in r.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
    trim(r)
}

/// Primitive gcd over the integers (positive leading coefficient), times the
/// gcd of the contents.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if a.is_empty() {
        return primitive_part(&b);
    }
    if b.is_empty() {
        return primitive_part(&a);
    }
    let c = content(&a).gcd(&content(&b));
    let (mut x, mut y) = (primitive_part(&a), primitive_part(&b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    x.into_iter().map(|v| v * &c).collect()
}
