use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{gl2z_involution_class, is_cocycle, Chain, Classified, Gl2z, GroupElement, InvolutionClass};
use crate::arith::CycloNum;
use crate::error::{Error, Result};

/// `(a·x^{m₁₁}y^{m₁₂}, b·x^{m₂₁}y^{m₂₂})`, an automorphism of the torus
/// `(𝔸¹∖{0})²`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MonomialAut {
    pub a: CycloNum,
    pub b: CycloNum,
    pub m: Gl2z,
}

impl MonomialAut {
    pub fn new(a: CycloNum, b: CycloNum, m: Gl2z) -> Self {
        MonomialAut { a, b, m }
    }

    pub fn scaling(a: CycloNum, b: CycloNum) -> Self {
        Self::new(a, b, Gl2z::IDENTITY)
    }

    pub fn matrix(m: Gl2z) -> Self {
        Self::new(CycloNum::one(), CycloNum::one(), m)
    }

    /// The image of the point `(x, y)`; both coordinates must be nonzero.
    pub fn eval(&self, x: &CycloNum, y: &CycloNum) -> Result<(CycloNum, CycloNum)> {
        let mono = |c: &CycloNum, i: usize| -> Result<CycloNum> {
            Ok(&(c * &x.pow(self.m.entry(i, 0))?) * &y.pow(self.m.entry(i, 1))?)
        };
        Ok((mono(&self.a, 0)?, mono(&self.b, 1)?))
    }
}

impl GroupElement for MonomialAut {
    fn identity() -> Self {
        Self::matrix(Gl2z::IDENTITY)
    }

    fn compose(&self, g: &Self) -> Self {
        let twist = |c: &CycloNum, i: usize| -> CycloNum {
            let ga = g.a.pow(self.m.entry(i, 0)).expect("nonzero scalar");
            let gb = g.b.pow(self.m.entry(i, 1)).expect("nonzero scalar");
            &(c * &ga) * &gb
        };
        MonomialAut { a: twist(&self.a, 0), b: twist(&self.b, 1), m: self.m.mul(&g.m) }
    }

    fn inverse(&self) -> Self {
        let n = self.m.inverse();
        let part = |i: usize| -> CycloNum {
            let x = self.a.pow(-n.entry(i, 0)).expect("nonzero scalar");
            let y = self.b.pow(-n.entry(i, 1)).expect("nonzero scalar");
            &x * &y
        };
        MonomialAut { a: part(0), b: part(1), m: n }
    }

    fn conj(&self) -> Self {
        MonomialAut { a: self.a.conj(), b: self.b.conj(), m: self.m }
    }
}

impl fmt::Display for MonomialAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |c: &CycloNum, i: usize| -> String {
            let mut factors = Vec::new();
            if !c.is_one() {
                factors.push(if c.is_rational() { c.to_string() } else { format!("({c})") });
            }
            for (j, v) in ["x", "y"].iter().enumerate() {
                match self.m.entry(i, j) {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    k => factors.push(format!("{v}^{k}")),
                }
            }
            if factors.is_empty() {
                "1".into()
            } else {
                factors.join("*")
            }
        };
        write!(f, "({}, {})", part(&self.a, 0), part(&self.b, 1))
    }
}

/// The six real forms of `(𝔸¹∖{0})²`, where `Γ₁`, `Γ₂`, `Γ₃` are the real
/// forms `x ↦ x̄`, `x ↦ 1/x̄` and `x ↦ −1/x̄` of `𝔸¹∖{0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorusClass {
    #[serde(rename = "G1xG1")]
    G1G1,
    #[serde(rename = "G1xG2")]
    G1G2,
    #[serde(rename = "G1xG3")]
    G1G3,
    #[serde(rename = "G2xG2")]
    G2G2,
    #[serde(rename = "G3xG3")]
    G3G3,
    #[serde(rename = "A2-minus-conic")]
    PlaneMinusConic,
}

impl TorusClass {
    pub const ALL: [TorusClass; 6] = [
        TorusClass::G1G1,
        TorusClass::G1G2,
        TorusClass::G1G3,
        TorusClass::G2G2,
        TorusClass::G3G3,
        TorusClass::PlaneMinusConic,
    ];

    pub fn representative(self) -> MonomialAut {
        let one = CycloNum::one;
        let s1 = InvolutionClass::Sigma1.matrix();
        let s2 = InvolutionClass::Sigma2.matrix();
        match self {
            TorusClass::G1G1 => MonomialAut::identity(),
            TorusClass::G1G2 => MonomialAut::matrix(s1),
            TorusClass::G1G3 => MonomialAut::new(one(), -one(), s1),
            TorusClass::G2G2 => MonomialAut::matrix(s2),
            TorusClass::G3G3 => MonomialAut::new(-one(), -one(), s2),
            TorusClass::PlaneMinusConic => MonomialAut::matrix(InvolutionClass::Sigma3.matrix()),
        }
    }
}

impl fmt::Display for TorusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TorusClass::G1G1 => "G1xG1",
            TorusClass::G1G2 => "G1xG2",
            TorusClass::G1G3 => "G1xG3",
            TorusClass::G2G2 => "G2xG2",
            TorusClass::G3G3 => "G3xG3",
            TorusClass::PlaneMinusConic => "A2-minus-conic",
        };
        f.write_str(s)
    }
}

/// For a real rational `t ≠ 0`, returns `√|t|` and whether `t > 0`.
pub(crate) fn real_scale(t: &CycloNum) -> Result<(CycloNum, bool)> {
    let r = t
        .to_rational()
        .ok_or_else(|| Error::NotRepresentable(format!("{t} is not rational")))?;
    if r.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok((CycloNum::sqrt_rational(&r.abs())?, r.is_positive()))
}

/// Reduces a cocycle of `Aut((𝔸¹∖{0})²)` to one of the six representatives.
///
/// The matrix part is brought to `I`, `σ₁`, `σ₂` or `σ₃` first; then the
/// scalars are normalised by diagonal conjugations. Real scalars that are
/// not rational are reported as not representable.
pub fn reduce_torus_cocycle(nu: &MonomialAut) -> Result<Classified<MonomialAut, TorusClass>> {
    if !is_cocycle(nu) {
        return Err(Error::NotACocycle);
    }
    let (sigma, b) = gl2z_involution_class(&nu.m)?;
    let mut chain = Chain::new(nu);
    if b != Gl2z::IDENTITY {
        chain.apply(&MonomialAut::matrix(b));
    }
    let (a, b) = (chain.current.a.clone(), chain.current.b.clone());
    let class = match sigma {
        InvolutionClass::Identity => {
            chain.apply(&MonomialAut::scaling(a.sqrt()?, b.sqrt()?));
            TorusClass::G1G1
        }
        InvolutionClass::Sigma1 => {
            let (xi, positive) = real_scale(&b)?;
            chain.apply(&MonomialAut::scaling(a.sqrt()?, xi));
            if positive {
                TorusClass::G1G2
            } else {
                TorusClass::G1G3
            }
        }
        InvolutionClass::Sigma2 => {
            let (xa, pa) = real_scale(&a)?;
            let (xb, pb) = real_scale(&b)?;
            chain.apply(&MonomialAut::scaling(xa, xb));
            let shear = MonomialAut::matrix(Gl2z([[1, 0], [1, 1]]));
            match (pa, pb) {
                (true, true) => TorusClass::G2G2,
                (false, false) => TorusClass::G3G3,
                (false, true) => {
                    chain.apply(&shear);
                    TorusClass::G3G3
                }
                (true, false) => {
                    chain.apply(&MonomialAut::matrix(InvolutionClass::Sigma3.matrix()));
                    chain.apply(&shear);
                    TorusClass::G3G3
                }
            }
        }
        InvolutionClass::Sigma3 => {
            chain.apply(&MonomialAut::scaling(a, CycloNum::one()));
            TorusClass::PlaneMinusConic
        }
    };
    let reduction = chain.finish(nu)?;
    if reduction.normal_form != class.representative() {
        return Err(Error::Invariant(format!("reduced to {}, expected {class}", reduction.normal_form)));
    }
    Ok(Classified { class, reduction })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn law_matches_evaluation() {
        let f = MonomialAut::new(CycloNum::i(), CycloNum::from_int(2), Gl2z([[2, 1], [1, 1]]));
        let g = MonomialAut::new(CycloNum::from_int(3), -CycloNum::i(), Gl2z([[0, 1], [1, 0]]));
        let (x, y) = (CycloNum::from_int(5), CycloNum::from_ratio(1, 7));
        let (gx, gy) = g.eval(&x, &y).unwrap();
        assert_eq!(f.compose(&g).eval(&x, &y).unwrap(), f.eval(&gx, &gy).unwrap());
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(f.inverse().compose(&f).is_identity());
    }

    #[test]
    fn conj_example() {
        let f = MonomialAut::scaling(CycloNum::i(), -CycloNum::i());
        assert_eq!(f.conj(), MonomialAut::scaling(-CycloNum::i(), CycloNum::i()));
    }

    #[test]
    fn examples() {
        let r = reduce_torus_cocycle(&MonomialAut::identity()).unwrap();
        assert_eq!(r.class, TorusClass::G1G1);
        let inv = MonomialAut::matrix(InvolutionClass::Sigma2.matrix());
        assert_eq!(reduce_torus_cocycle(&inv).unwrap().class, TorusClass::G2G2);
        let nu = MonomialAut::new(-CycloNum::one(), CycloNum::one(), InvolutionClass::Sigma2.matrix());
        let r = reduce_torus_cocycle(&nu).unwrap();
        assert_eq!(r.class, TorusClass::G3G3);
        assert_eq!(r.reduction.witness.m, Gl2z([[1, 0], [1, 1]]));
    }

    #[test]
    fn representatives_reduce_to_themselves() {
        for class in TorusClass::ALL {
            let rep = class.representative();
            assert!(is_cocycle(&rep), "{class}");
            let r = reduce_torus_cocycle(&rep).unwrap();
            assert_eq!(r.class, class);
        }
    }
}
