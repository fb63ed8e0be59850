use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::CycloNum;
use crate::error::{Error, Result};

/// A 2×2 matrix over the cyclotomic tower, row-major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Mat2(pub [[CycloNum; 2]; 2]);

impl Mat2 {
    pub fn new(a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    pub fn scalar(s: CycloNum) -> Self {
        Self::new(s.clone(), CycloNum::zero(), CycloNum::zero(), s)
    }

    pub fn columns(u: [CycloNum; 2], v: [CycloNum; 2]) -> Self {
        let [u0, u1] = u;
        let [v0, v1] = v;
        Self::new(u0, v0, u1, v1)
    }

    pub fn det(&self) -> CycloNum {
        let [[a, b], [c, d]] = &self.0;
        &(a * d) - &(b * c)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &(&self.0[i][0] * &o.0[0][j]) + &(&self.0[i][1] * &o.0[1][j]);
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn apply(&self, v: &[CycloNum; 2]) -> [CycloNum; 2] {
        let e = |i: usize| &(&self.0[i][0] * &v[0]) + &(&self.0[i][1] * &v[1]);
        [e(0), e(1)]
    }

    pub fn scale(&self, s: &CycloNum) -> Mat2 {
        let [[a, b], [c, d]] = &self.0;
        Mat2::new(a * s, b * s, c * s, d * s)
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let di = det.inv()?;
        let [[a, b], [c, d]] = &self.0;
        Ok(Mat2::new(d * &di, -(b * &di), -(c * &di), a * &di))
    }

    pub fn conj(&self) -> Mat2 {
        let [[a, b], [c, d]] = &self.0;
        Mat2::new(a.conj(), b.conj(), c.conj(), d.conj())
    }

    pub fn is_diagonal(&self) -> bool {
        self.0[0][1].is_zero() && self.0[1][0].is_zero()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.0;
        write!(f, "({a}, {b}; {c}, {d})")
    }
}

/// The sign `ε` of a PGL₂ cocycle together with `R` such that
/// `R⁻¹·A·R̄ = (0 s; 1 0)`, where `A·Ā = s·I` and `ε = sign(s)`.
#[derive(Clone, Debug, Serialize)]
pub struct PglReduction {
    pub epsilon: i8,
    pub s: CycloNum,
    pub v: [CycloNum; 2],
    pub r: Mat2,
    pub normal_form: Mat2,
}

/// Computes the invariant `ε` of the cocycle represented by `A` in `PGL₂(ℂ)`.
///
/// `A` must satisfy `A·Ā = s·I` for a nonzero rational `s`; for `det A = 1`
/// this forces `s = ±1`. The vector `v` is a unit vector when `A` is not
/// diagonal and `(1, i)` or `(1, 1)` otherwise, and `R = (v | A·v̄)`.
pub fn pgl2_cocycle_epsilon(a: &Mat2) -> Result<PglReduction> {
    let prod = a.mul(&a.conj());
    let s = prod.0[0][0].clone();
    if prod != Mat2::scalar(s.clone()) {
        return Err(Error::NotACocycle);
    }
    let sr = s.to_rational().ok_or(Error::NotACocycle)?;
    if sr.is_zero() {
        return Err(Error::NotACocycle);
    }
    let epsilon = if sr.is_positive() { 1 } else { -1 };
    let (zero, one) = (CycloNum::zero, CycloNum::one);
    let candidates: Vec<[CycloNum; 2]> = if a.is_diagonal() {
        vec![[one(), CycloNum::i()], [one(), one()]]
    } else {
        vec![[one(), zero()], [zero(), one()]]
    };
    for v in candidates {
        let vbar = [v[0].conj(), v[1].conj()];
        let w = a.apply(&vbar);
        let r = Mat2::columns(v.clone(), w);
        if r.det().is_zero() {
            continue;
        }
        let normal_form = r.inverse()?.mul(a).mul(&r.conj());
        if normal_form != Mat2::new(zero(), s.clone(), one(), zero()) {
            return Err(Error::Invariant(format!("R = {r} does not reduce {a}")));
        }
        return Ok(PglReduction { epsilon, s, v, r, normal_form });
    }
    Err(Error::Invariant(format!("no admissible vector for {a}")))
}
