use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 2×2 integer matrix of determinant ±1, stored row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Gl2z(pub [[i64; 2]; 2]);

impl Gl2z {
    pub const IDENTITY: Gl2z = Gl2z([[1, 0], [0, 1]]);

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = Gl2z([[a, b], [c, d]]);
        if m.det().abs() != 1 {
            return Err(Error::NotInGroup(format!("{m} has determinant {}", m.det())));
        }
        Ok(m)
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn mul(&self, o: &Gl2z) -> Gl2z {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = o.0;
        Gl2z([[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]])
    }

    pub fn inverse(&self) -> Gl2z {
        let [[a, b], [c, d]] = self.0;
        let det = self.det();
        Gl2z([[d * det, -b * det], [-c * det, a * det]])
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn is_involution(&self) -> bool {
        self.mul(self) == Self::IDENTITY
    }
}

impl fmt::Display for Gl2z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "({a} {b}; {c} {d})")
    }
}

/// Conjugacy classes of elements `M` with `M² = I` in GL₂(ℤ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionClass {
    Identity,
    /// `(1 0; 0 −1)`
    Sigma1,
    /// `(−1 0; 0 −1)`
    Sigma2,
    /// `(0 1; 1 0)`
    Sigma3,
}

impl InvolutionClass {
    pub fn matrix(self) -> Gl2z {
        match self {
            InvolutionClass::Identity => Gl2z::IDENTITY,
            InvolutionClass::Sigma1 => Gl2z([[1, 0], [0, -1]]),
            InvolutionClass::Sigma2 => Gl2z([[-1, 0], [0, -1]]),
            InvolutionClass::Sigma3 => Gl2z([[0, 1], [1, 0]]),
        }
    }
}

impl fmt::Display for InvolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InvolutionClass::Identity => "identity",
            InvolutionClass::Sigma1 => "sigma1",
            InvolutionClass::Sigma2 => "sigma2",
            InvolutionClass::Sigma3 => "sigma3",
        };
        f.write_str(s)
    }
}

/// Finds the class of an involution `M` and `B` with `B⁻¹·M·B` equal to the
/// class representative.
pub fn gl2z_involution_class(m: &Gl2z) -> Result<(InvolutionClass, Gl2z)> {
    if !m.is_involution() {
        return Err(Error::NotAnInvolution);
    }
    let direct = [
        InvolutionClass::Identity,
        InvolutionClass::Sigma1,
        InvolutionClass::Sigma2,
        InvolutionClass::Sigma3,
    ]
    .into_iter()
    .find(|c| c.matrix() == *m);
    let (class, b) = if let Some(class) = direct {
        (class, Gl2z::IDENTITY)
    } else {
        // eigenvalues 1 and −1; start from a primitive eigenvector for 1
        let [[a, b], [c, d]] = m.0;
        let (v1, v2) = if a - 1 != 0 || b != 0 { (b, 1 - a) } else { (d - 1, -c) };
        let g = v1.gcd(&v2);
        let (v1, v2) = (v1 / g, v2 / g);
        let e = v1.extended_gcd(&v2);
        let p = Gl2z([[v1, -e.y], [v2, e.x]]);
        let reduced = p.inverse().mul(m).mul(&p);
        // reduced = (1 t; 0 −1); the shear (1 s; 0 1) turns t into t + 2s
        let t = reduced.entry(0, 1);
        let shear = Gl2z([[1, -t.div_euclid(2)], [0, 1]]);
        let pb = p.mul(&shear);
        if t.rem_euclid(2) == 0 {
            (InvolutionClass::Sigma1, pb)
        } else {
            let swap = Gl2z([[1, 1], [1, 0]]);
            (InvolutionClass::Sigma3, pb.mul(&swap.inverse()))
        }
    };
    if b.inverse().mul(m).mul(&b) != class.matrix() {
        return Err(Error::Invariant(format!("conjugator {b} does not reduce {m}")));
    }
    Ok((class, b))
}
