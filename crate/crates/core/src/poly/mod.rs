//! Exact multivariate polynomials and the Gröbner kernel.

mod field;
mod groebner;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod registry;

pub use field::{Field, FieldScalar};
pub(crate) use groebner::TrackedBasis;
pub use groebner::{buchberger_extend, buchberger_reduced, normal_form};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial_at;
pub use polynomial::Polynomial;
pub use registry::{Limits, Registry};
