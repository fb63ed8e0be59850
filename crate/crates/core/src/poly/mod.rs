//! Univariate, Laurent and sparse multivariate polynomials over the
//! cyclotomic tower, plus real root counting over ℚ.

mod laurent;
mod multi;
mod parse;
mod sturm;
mod uni;

pub use laurent::LaurentPoly;
pub use multi::{substitute_map, MultiPoly};
pub use parse::{parse_poly, parse_poly_with_var, parse_scalar};
pub use sturm::{attains_nonpositive, nonpositive_witness, sturm_count, Interval, SturmChain};
pub use uni::UniPoly;
