//! Exact number tower: integers, rationals, surds, Laurent polynomials in q,
//! rational functions in q, and evaluation at roots of unity.

pub mod cyclo;
pub mod int;
pub mod laurent;
pub(crate) mod poly;
pub mod ratfunc;
pub mod root;
pub mod surd;

pub use cyclo::{cyclotomic, CycloFraction, CycloProduct};
pub use int::{binomial, factorial, multinomial, PrimePowers};
pub use laurent::{laurent_divexact, laurent_eval, qbinomial, qfactorial, qint, qmultinomial, LaurentPoly};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use ratfunc::RatFunc;
pub use root::{RootOfUnity, EXACT_KAPPA_LIMIT};
pub use surd::{ratio_to_f64, surd_normalize, Surd};
