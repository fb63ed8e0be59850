//! Exact scalars: rationals, cyclotomic fields ℚ(ζ_N), and roots of unity.

mod cyclo;
pub mod ratpoly;
mod root;

pub use cyclo::{cyclotomic_polynomial, euler_phi, max_order, rational_sqrt_exact, CycloNum};
pub use root::RootOfUnity;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
