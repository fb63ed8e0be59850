use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::real_scale;
use super::{is_cocycle, Chain, Classified, GroupElement};
use crate::arith::CycloNum;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// `(λ·x·y^m + c(y), μ·y^e)` with `e = ±1`, an automorphism of
/// `𝔸¹ × (𝔸¹∖{0})`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HalfTorusAut {
    pub lambda: CycloNum,
    pub m: i64,
    pub c: LaurentPoly,
    pub mu: CycloNum,
    pub e: i8,
}

impl HalfTorusAut {
    pub fn new(lambda: CycloNum, m: i64, c: LaurentPoly, mu: CycloNum, e: i8) -> Result<Self> {
        if e != 1 && e != -1 {
            return Err(Error::NotInGroup(format!("exponent of y must be ±1, got {e}")));
        }
        if lambda.is_zero() || mu.is_zero() {
            return Err(Error::NotInGroup("scalars must be nonzero".into()));
        }
        Ok(HalfTorusAut { lambda, m, c, mu, e })
    }

    /// `(λx, μy)`.
    pub fn scaling(lambda: CycloNum, mu: CycloNum) -> Self {
        HalfTorusAut { lambda, m: 0, c: LaurentPoly::zero(), mu, e: 1 }
    }

    /// `(x + h(y), y)`.
    pub fn translation(h: LaurentPoly) -> Self {
        HalfTorusAut { lambda: CycloNum::one(), m: 0, c: h, mu: CycloNum::one(), e: 1 }
    }

    /// `(x·y^k, y)`.
    pub fn shear(k: i64) -> Self {
        HalfTorusAut { lambda: CycloNum::one(), m: k, c: LaurentPoly::zero(), mu: CycloNum::one(), e: 1 }
    }

    pub fn eval(&self, x: &CycloNum, y: &CycloNum) -> Result<(CycloNum, CycloNum)> {
        let u = &(&(&self.lambda * x) * &y.pow(self.m)?) + &self.c.eval(y);
        Ok((u, &self.mu * &y.pow(self.e as i64)?))
    }
}

impl GroupElement for HalfTorusAut {
    fn identity() -> Self {
        Self::scaling(CycloNum::one(), CycloNum::one())
    }

    fn compose(&self, g: &Self) -> Self {
        let mu_m = g.mu.pow(self.m).expect("nonzero scalar");
        let factor = &self.lambda * &mu_m;
        let shift = g.e as i64 * self.m;
        let c = &g.c.shift(shift).scale(&factor) + &self.c.substitute(&g.mu, g.e as i64);
        HalfTorusAut {
            lambda: &factor * &g.lambda,
            m: g.m + shift,
            c,
            mu: &self.mu * &g.mu.pow(self.e as i64).expect("nonzero scalar"),
            e: self.e * g.e,
        }
    }

    fn inverse(&self) -> Self {
        let e = self.e as i64;
        let mu = self.mu.pow(-e).expect("nonzero scalar");
        let factor = &self.lambda * &mu.pow(self.m).expect("nonzero scalar");
        let fi = factor.inv().expect("nonzero scalar");
        let c = self.c.substitute(&mu, e).shift(-e * self.m).scale(&-&fi);
        HalfTorusAut { lambda: fi, m: -e * self.m, c, mu, e: self.e }
    }

    fn conj(&self) -> Self {
        HalfTorusAut {
            lambda: self.lambda.conj(),
            m: self.m,
            c: self.c.conj(),
            mu: self.mu.conj(),
            e: self.e,
        }
    }
}

impl fmt::Display for HalfTorusAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scalar = |c: &CycloNum| -> String {
            if c.is_one() {
                String::new()
            } else if c.is_rational() {
                format!("{c}*")
            } else {
                format!("({c})*")
            }
        };
        let mut first = format!("{}x", scalar(&self.lambda));
        if self.m != 0 {
            first.push_str(&format!("*y^{}", self.m));
        }
        if !self.c.is_zero() {
            first.push_str(&format!(" + ({})", self.c));
        }
        let second = if self.e == 1 { "y".to_string() } else { "y^-1".to_string() };
        write!(f, "({first}, {}{second})", scalar(&self.mu))
    }
}

/// The four real forms of `𝔸¹ × (𝔸¹∖{0})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HalfTorusClass {
    #[serde(rename = "A1xG1")]
    A1G1,
    #[serde(rename = "A1xG2")]
    A1G2,
    #[serde(rename = "A1xG3")]
    A1G3,
    #[serde(rename = "P2-minus-conic")]
    PlaneMinusConic,
}

impl HalfTorusClass {
    pub const ALL: [HalfTorusClass; 4] = [
        HalfTorusClass::A1G1,
        HalfTorusClass::A1G2,
        HalfTorusClass::A1G3,
        HalfTorusClass::PlaneMinusConic,
    ];

    pub fn representative(self) -> HalfTorusAut {
        let one = CycloNum::one;
        let inv = |mu: CycloNum, m: i64| HalfTorusAut { lambda: one(), m, c: LaurentPoly::zero(), mu, e: -1 };
        match self {
            HalfTorusClass::A1G1 => HalfTorusAut::identity(),
            HalfTorusClass::A1G2 => inv(one(), 0),
            HalfTorusClass::A1G3 => inv(-one(), 0),
            HalfTorusClass::PlaneMinusConic => inv(one(), -1),
        }
    }
}

impl fmt::Display for HalfTorusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HalfTorusClass::A1G1 => "A1xG1",
            HalfTorusClass::A1G2 => "A1xG2",
            HalfTorusClass::A1G3 => "A1xG3",
            HalfTorusClass::PlaneMinusConic => "P2-minus-conic",
        };
        f.write_str(s)
    }
}

/// Reduces a cocycle of `Aut(𝔸¹ × (𝔸¹∖{0}))` to one of the four
/// representatives.
///
/// The exponent matrix `(1 m; 0 e)` is first brought to `(1 0; 0 1)`,
/// `(1 0; 0 −1)` or `(1 −1; 0 −1)` by a shear `(x·y^k, y)`. The scalars are
/// then normalised and finally `c(y)` is removed by a translation.
pub fn reduce_halftorus_cocycle(nu: &HalfTorusAut) -> Result<Classified<HalfTorusAut, HalfTorusClass>> {
    if !is_cocycle(nu) {
        return Err(Error::NotACocycle);
    }
    let mut chain = Chain::new(nu);
    if nu.e == -1 {
        let k = -(nu.m + 1).div_euclid(2);
        if k != 0 {
            chain.apply(&HalfTorusAut::shear(k));
        }
    }
    let half = CycloNum::from_ratio(1, 2);
    let one = CycloNum::one;
    let class = match (chain.current.e, chain.current.m) {
        (1, 0) => {
            let cur = &chain.current;
            let theta = HalfTorusAut::scaling(cur.lambda.sqrt()?, cur.mu.sqrt()?);
            chain.apply(&theta);
            let h = chain.current.c.scale(&half);
            chain.apply(&HalfTorusAut::translation(h));
            HalfTorusClass::A1G1
        }
        (-1, 0) => {
            let cur = &chain.current;
            let (xi, positive) = real_scale(&cur.mu)?;
            let theta = HalfTorusAut::scaling(cur.lambda.sqrt()?, xi);
            chain.apply(&theta);
            let h = chain.current.c.conj().scale(&-&half);
            chain.apply(&HalfTorusAut::translation(h));
            if positive {
                HalfTorusClass::A1G2
            } else {
                HalfTorusClass::A1G3
            }
        }
        (-1, -1) => {
            let (xi, _) = real_scale(&chain.current.mu)?;
            chain.apply(&HalfTorusAut::scaling(one(), xi));
            let eps = chain.current.lambda.sqrt()?;
            chain.apply(&HalfTorusAut::scaling(eps, one()));
            let h = chain.current.c.conj().shift(1).scale(&-&half);
            chain.apply(&HalfTorusAut::translation(h));
            HalfTorusClass::PlaneMinusConic
        }
        (e, m) => {
            return Err(Error::Invariant(format!("exponent matrix (1 {m}; 0 {e}) is not reduced")));
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

    fn lp(terms: &[(i64, CycloNum)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms)
    }

    #[test]
    fn law_matches_evaluation() {
        let i = CycloNum::i();
        let f = HalfTorusAut::new(i.clone(), 2, lp(&[(-1, CycloNum::from_int(3)), (1, i.clone())]), CycloNum::from_int(2), -1)
            .unwrap();
        let g = HalfTorusAut::new(CycloNum::from_int(5), -3, lp(&[(0, CycloNum::one()), (2, -&i)]), -i.clone(), 1)
            .unwrap();
        let (x, y) = (CycloNum::from_int(3), CycloNum::from_ratio(2, 7));
        let (gx, gy) = g.eval(&x, &y).unwrap();
        assert_eq!(f.compose(&g).eval(&x, &y).unwrap(), f.eval(&gx, &gy).unwrap());
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(f.inverse().compose(&f).is_identity());
        assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn examples() {
        assert_eq!(reduce_halftorus_cocycle(&HalfTorusAut::identity()).unwrap().class, HalfTorusClass::A1G1);
        let nu = HalfTorusClass::A1G3.representative();
        assert_eq!(reduce_halftorus_cocycle(&nu).unwrap().class, HalfTorusClass::A1G3);
        let nu = HalfTorusClass::PlaneMinusConic.representative();
        assert_eq!(reduce_halftorus_cocycle(&nu).unwrap().class, HalfTorusClass::PlaneMinusConic);
    }

    #[test]
    fn translation_part_is_removed() {
        let i = CycloNum::i();
        // c̄(y) + c(y⁻¹) = 0 holds for c = i(y + y⁻¹)
        let c = lp(&[(1, i.clone()), (-1, i.clone())]);
        let nu = HalfTorusAut::new(CycloNum::one(), 0, c, CycloNum::one(), -1).unwrap();
        assert!(is_cocycle(&nu));
        let r = reduce_halftorus_cocycle(&nu).unwrap();
        assert_eq!(r.class, HalfTorusClass::A1G2);
        let bad = HalfTorusAut::new(CycloNum::one(), 0, lp(&[(1, i.clone()), (-1, -i)]), CycloNum::one(), -1).unwrap();
        assert!(!is_cocycle(&bad));
    }

    #[test]
    fn representatives_reduce_to_themselves() {
        for class in HalfTorusClass::ALL {
            let rep = class.representative();
            assert!(is_cocycle(&rep));
            assert_eq!(reduce_halftorus_cocycle(&rep).unwrap().class, class);
        }
    }
}
