use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::laurent::{laurent_divexact, LaurentPoly};
use super::poly;
use crate::error::{Error, Result};

/// Quotient of Laurent polynomials in lowest terms.
///
/// Canonical form: numerator and denominator share no factor, the
/// denominator's lowest exponent is 0, its leading coefficient is positive,
/// and the combined integer content is 1. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Singular);
        }
        Ok(normalize(num, den))
    }

    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        normalize(p, LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if the denominator is a unit.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.den.len() == 1 {
            laurent_divexact(&self.num, &self.den).ok()
        } else {
            None
        }
    }

    /// Value at `q = 1`, or `None` when the denominator vanishes there.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let d = self.den.eval_at_one();
        (!d.is_zero()).then(|| BigRational::new(self.num.eval_at_one(), d))
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.den == other.den {
            return normalize(&self.num + &other.num, self.den.clone());
        }
        normalize(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        normalize(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::Singular);
        }
        Ok(normalize(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
    if num.is_zero() {
        return RatFunc::zero();
    }
    let (nlo, nd) = num.to_dense();
    let (dlo, dd) = den.to_dense();
    let g = poly::gcd(&nd, &dd);
    let (mut nd, mut dd) = if g.len() > 1 {
        let gp = LaurentPoly::from_dense(0, g);
        let n = laurent_divexact(&LaurentPoly::from_dense(0, nd), &gp)
            .expect("gcd divides the numerator");
        let d = laurent_divexact(&LaurentPoly::from_dense(0, dd), &gp)
            .expect("gcd divides the denominator");
        (n.to_dense().1, d.to_dense().1)
    } else {
        (nd, dd)
    };
    let c = poly::content(&nd).gcd(&poly::content(&dd));
    let flip = dd.last().is_some_and(|x| x.is_negative());
    for x in nd.iter_mut() {
        *x = &*x / &c;
        if flip {
            *x = -&*x;
        }
    }
    for x in dd.iter_mut() {
        *x = &*x / &c;
        if flip {
            *x = -&*x;
        }
    }
    RatFunc {
        num: LaurentPoly::from_dense(nlo - dlo, nd),
        den: LaurentPoly::from_dense(0, dd),
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<BigInt> for RatFunc {
    fn from(n: BigInt) -> Self {
        RatFunc::from_poly(LaurentPoly::constant(n))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::one().div(self)
    }

    pub fn from_integer(n: i64) -> Self {
        RatFunc::from(BigInt::from(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::laurent::qint;

    #[test]
    fn reciprocal_qint_normal_form() {
        // 1/[2] = q / (q^2 + 1)
        let r = RatFunc::new(LaurentPoly::one(), qint(2)).unwrap();
        assert_eq!(r.num(), &LaurentPoly::monomial(1, 1.into()));
        assert_eq!(r.den(), &qint(2).shift(1));
    }

    #[test]
    fn cancels_common_factor() {
        let a = &qint(3) * &qint(4);
        let b = &qint(4) * &qint(5);
        let r = RatFunc::new(a, b).unwrap();
        let s = RatFunc::new(qint(3), qint(5)).unwrap();
        assert_eq!(r, s);
    }

    #[test]
    fn field_laws() {
        let a = RatFunc::new(qint(3), qint(2)).unwrap();
        let b = RatFunc::new(qint(5).shift(3), -&qint(4)).unwrap();
        assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&b).div(&b).unwrap(), a);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn scalar_content_removed() {
        let r = RatFunc::new(
            LaurentPoly::constant(6.into()),
            LaurentPoly::constant((-4).into()),
        )
        .unwrap();
        assert_eq!(r.num(), &LaurentPoly::constant((-3).into()));
        assert_eq!(r.den(), &LaurentPoly::constant(2.into()));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }
}
