use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::CycloNum;
use crate::error::{Error, Result};

/// ζ_order^exponent, kept as an exponent so that group operations never
/// touch field arithmetic. Equality compares the reduced fraction
/// `exponent / order`, so ζ₄² and ζ₂ are the same root.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RootOfUnity {
    order: u32,
    exponent: u32,
}

impl RootOfUnity {
    pub fn new(order: u32, exponent: i64) -> Self {
        assert!(order > 0, "root of unity of order 0");
        RootOfUnity { order, exponent: exponent.rem_euclid(order as i64) as u32 }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exponent: 0 }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Same root with the smallest possible order.
    pub fn reduced(&self) -> Self {
        let g = self.order.gcd(&self.exponent);
        RootOfUnity { order: self.order / g, exponent: self.exponent / g }
    }

    /// The exact multiplicative order of the root.
    pub fn multiplicative_order(&self) -> u32 {
        self.reduced().order
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let n = self.order.lcm(&other.order);
        let e = self.exponent as u64 * (n / self.order) as u64
            + other.exponent as u64 * (n / other.order) as u64;
        RootOfUnity::new(n, (e % n as u64) as i64).reduced()
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(self.order, -(self.exponent as i64))
    }

    pub fn conj(&self) -> RootOfUnity {
        self.inv()
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        let e = (self.exponent as i128 * k as i128).rem_euclid(self.order as i128);
        RootOfUnity::new(self.order, e as i64).reduced()
    }

    /// The square root ζ_{2N}^e of ζ_N^e: the one with the smallest
    /// nonnegative exponent in μ_{2N}.
    pub fn square_root(&self) -> RootOfUnity {
        RootOfUnity::new(self.order * 2, self.exponent as i64).reduced()
    }

    /// ζ_{kN}^e, a k-th root of ζ_N^e.
    pub fn nth_root(&self, k: u32) -> RootOfUnity {
        RootOfUnity::new(self.order * k, self.exponent as i64).reduced()
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    pub fn to_cyclo(&self) -> Result<CycloNum> {
        let r = self.reduced();
        CycloNum::zeta_pow(r.order, r.exponent as i64)
    }

    pub fn from_cyclo(x: &CycloNum) -> Result<RootOfUnity> {
        x.as_root_of_unity()
            .ok_or_else(|| Error::NotInGroup(format!("{x} is not a root of unity")))
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        self.exponent as u64 * other.order as u64 == other.exponent as u64 * self.order as u64
    }
}

impl Eq for RootOfUnity {}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        match (r.order, r.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (_, 1) => write!(f, "zeta({})", r.order),
            (n, e) => write!(f, "zeta({n})^{e}"),
        }
    }
}
