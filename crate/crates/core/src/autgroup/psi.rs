use serde::{Deserialize, Serialize};

use super::{is_cocycle, Chain, GroupElement, Reduction};
use crate::arith::CycloNum;
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, UniPoly};

/// `ψ_{a,b,c,d,r}`, the automorphism
/// `(ax, by + (p(cz+d+x·r(x)) − ab·p(z))/(ax), cz + d + x·r(x))` of `xy = p(z)`.
///
/// The composition law does not depend on `p`; membership does, see
/// [`PsiElement::belongs_to`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PsiElement {
    pub a: CycloNum,
    pub b: CycloNum,
    pub c: CycloNum,
    pub d: CycloNum,
    pub r: UniPoly,
}

impl PsiElement {
    pub fn new(a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum, r: UniPoly) -> Self {
        PsiElement { a, b, c, d, r }
    }

    /// `ψ_{a,b,c,d,0}`.
    pub fn affine(a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum) -> Self {
        Self::new(a, b, c, d, UniPoly::zero())
    }

    /// `ψ_{1,1,1,0,r}`.
    pub fn shear(r: UniPoly) -> Self {
        Self::new(CycloNum::one(), CycloNum::one(), CycloNum::one(), CycloNum::zero(), r)
    }

    /// Checks `a, b, c ≠ 0` and `ab·p(z) = p(cz+d)`.
    pub fn belongs_to(&self, p: &UniPoly) -> bool {
        if self.a.is_zero() || self.b.is_zero() || self.c.is_zero() {
            return false;
        }
        p.compose_affine(&self.c, &self.d) == p.scale(&(&self.a * &self.b))
    }

    pub fn check(&self, p: &UniPoly) -> Result<()> {
        if self.belongs_to(p) {
            Ok(())
        } else {
            Err(Error::NotInGroup(format!("{} does not preserve xy = {}", self, p)))
        }
    }

    /// The three coordinate polynomials of the map on 𝔸³.
    pub fn to_map(&self, p: &UniPoly) -> Result<[MultiPoly; 3]> {
        self.check(p)?;
        let (x, y, z) = MultiPoly::xyz();
        let fx = x.scale(&self.a);
        let fz = &(&z.scale(&self.c) + &MultiPoly::constant(3, self.d.clone()))
            + &(&x * &MultiPoly::from_uni(&self.r, 3, 0));
        let mut pz = MultiPoly::zero(3);
        for coeff in p.coeffs().iter().rev() {
            pz = &(&pz * &fz) + &MultiPoly::constant(3, coeff.clone());
        }
        let num = &pz - &MultiPoly::from_uni(p, 3, 2).scale(&(&self.a * &self.b));
        let quot = num
            .div_by_var(0)
            .ok_or_else(|| Error::Invariant("second coordinate is not polynomial".into()))?;
        let fy = &y.scale(&self.b) + &quot.scale(&self.a.inv()?);
        Ok([fx, fy, fz])
    }
}

impl GroupElement for PsiElement {
    fn identity() -> Self {
        Self::shear(UniPoly::zero())
    }

    fn compose(&self, g: &Self) -> Self {
        // ψ ∘ ψ' = ψ_{aa', bb', cc', cd'+d, c·r'(x) + a'·r(a'x)}
        let r = &g.r.scale(&self.c) + &self.r.compose_affine(&g.a, &CycloNum::zero()).scale(&g.a);
        PsiElement {
            a: &self.a * &g.a,
            b: &self.b * &g.b,
            c: &self.c * &g.c,
            d: &(&self.c * &g.d) + &self.d,
            r,
        }
    }

    fn inverse(&self) -> Self {
        let ai = self.a.inv().expect("a is nonzero");
        let ci = self.c.inv().expect("c is nonzero");
        let r = self.r.compose_affine(&ai, &CycloNum::zero()).scale(&-(&ai * &ci));
        PsiElement {
            a: ai,
            b: self.b.inv().expect("b is nonzero"),
            d: -(&self.d * &ci),
            c: ci,
            r,
        }
    }

    fn conj(&self) -> Self {
        PsiElement {
            a: self.a.conj(),
            b: self.b.conj(),
            c: self.c.conj(),
            d: self.d.conj(),
            r: self.r.conj(),
        }
    }
}

impl std::fmt::Display for PsiElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "psi[a={}, b={}, c={}, d={}, r={}]",
            self.a,
            self.b,
            self.c,
            self.d,
            self.r.display_var("x")
        )
    }
}

/// Reduces a cocycle of `B(p)` to the form `ψ_{1,b,c,d,0}`.
///
/// First conjugate by `ψ_{ε,ε⁻¹,1,0,0}` with `ε² = a`, which turns the
/// cocycle into `ψ_{1,ab,c,d,s}`, then by `ψ_{1,1,1,0,s/2}`.
pub fn reduce_b_cocycle(tau: &PsiElement, p: &UniPoly) -> Result<Reduction<PsiElement>> {
    if !p.is_real() {
        return Err(Error::NotReal);
    }
    let deg = p.degree().unwrap_or(0);
    if deg < 2 {
        return Err(Error::DegreeTooSmall { found: deg, required: 2 });
    }
    tau.check(p)?;
    if !is_cocycle(tau) {
        return Err(Error::NotACocycle);
    }
    let mut chain = Chain::new(tau);
    if !tau.a.is_one() {
        let eps = tau.a.sqrt()?;
        let theta = PsiElement::affine(eps.clone(), eps.inv()?, CycloNum::one(), CycloNum::zero());
        chain.apply(&theta);
    }
    if !chain.current.r.is_zero() {
        let half = CycloNum::from_ratio(1, 2);
        let theta = PsiElement::shear(chain.current.r.scale(&half));
        chain.apply(&theta);
    }
    let red = chain.finish(tau)?;
    if !red.normal_form.a.is_one() || !red.normal_form.r.is_zero() {
        return Err(Error::Invariant(format!("unexpected normal form {}", red.normal_form)));
    }
    Ok(red)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::conjugate;
    use crate::poly::substitute_map;

    fn c(n: i64) -> CycloNum {
        CycloNum::from_int(n)
    }

    fn i() -> CycloNum {
        CycloNum::i()
    }

    #[test]
    fn shears_add() {
        let r1 = UniPoly::from_ints(&[1, 2]);
        let r2 = UniPoly::from_ints(&[0, 0, 3]);
        let g = PsiElement::shear(r1.clone()).compose(&PsiElement::shear(r2.clone()));
        assert_eq!(g, PsiElement::shear(&r1 + &r2));
    }

    #[test]
    fn inverse_and_conj() {
        let f = PsiElement::new(i(), -i(), c(1), c(0), UniPoly::from_ints(&[0, 1]).scale(&i()));
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(f.inverse().compose(&f).is_identity());
        let g = PsiElement::affine(i(), -i(), c(1), c(0));
        assert_eq!(g.conj(), PsiElement::affine(-i(), i(), c(1), c(0)));
    }

    #[test]
    fn composition_matches_substitution() {
        let p = UniPoly::from_ints(&[0, 0, 1]);
        let f = PsiElement::new(c(2), CycloNum::from_ratio(1, 2), c(1), c(0), UniPoly::from_ints(&[1, 1]));
        let g = PsiElement::new(i(), i(), i(), c(0), UniPoly::from_ints(&[3]));
        let [fx, fy, fz] = f.to_map(&p).unwrap();
        let [gx, gy, gz] = g.to_map(&p).unwrap();
        let expect = [
            substitute_map(&fx, &gx, &gy, &gz),
            substitute_map(&fy, &gx, &gy, &gz),
            substitute_map(&fz, &gx, &gy, &gz),
        ];
        assert_eq!(f.compose(&g).to_map(&p).unwrap(), expect);
    }

    #[test]
    fn cocycle_checks() {
        assert!(is_cocycle(&PsiElement::identity()));
        let s = PsiElement::shear(UniPoly::monomial(i(), 2));
        assert!(is_cocycle(&s));
        let bad = PsiElement::affine(c(2), CycloNum::from_ratio(1, 2), c(1), c(0));
        assert!(!is_cocycle(&bad));
    }

    #[test]
    fn reduce_examples() {
        let p = UniPoly::from_ints(&[0, 0, 1]);
        let tau = PsiElement::shear(UniPoly::monomial(i(), 2));
        let red = reduce_b_cocycle(&tau, &p).unwrap();
        assert!(red.normal_form.is_identity());
        assert_eq!(red.witness, PsiElement::shear(UniPoly::monomial(&i() * &CycloNum::from_ratio(1, 2), 2)));

        let red = reduce_b_cocycle(&PsiElement::identity(), &p).unwrap();
        assert!(red.witness.is_identity());

        let tau = PsiElement::affine(c(-1), c(-1), c(1), c(0));
        let red = reduce_b_cocycle(&tau, &p).unwrap();
        assert!(red.normal_form.is_identity());
        assert_eq!(conjugate(&red.witness, &tau), red.normal_form);
    }
}
