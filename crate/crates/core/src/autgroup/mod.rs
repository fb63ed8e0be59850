//! Automorphism groups of `xy = p(z)` and of the two tori, together with the
//! constructive reduction of Galois 1-cocycles to normal forms.
//!
//! Every group element type implements [`GroupElement`]. A real structure is
//! encoded by a cocycle `τ` with `τ ∘ conj(τ) = id`, and two cocycles are
//! equivalent when `θ⁻¹ ∘ τ ∘ conj(θ) = τ'` for some `θ`. Reductions always
//! return that `θ`, and check it before returning.

mod affine;
mod gl2z;
mod h1;
mod halftorus;
mod monomial;
mod pgl2;
mod psi;

use std::fmt;

use serde::Serialize;

pub use affine::{classify_a_cocycle, AClass, AffineAut};
pub use gl2z::{gl2z_involution_class, Gl2z, InvolutionClass};
pub use h1::{h1_mu_bruteforce, H1Class};
pub use halftorus::{reduce_halftorus_cocycle, HalfTorusAut, HalfTorusClass};
pub use monomial::{reduce_torus_cocycle, MonomialAut, TorusClass};
pub use pgl2::{pgl2_cocycle_epsilon, Mat2, PglReduction};
pub use psi::{reduce_b_cocycle, PsiElement};

use crate::error::{Error, Result};

pub trait GroupElement: Clone + PartialEq + fmt::Debug {
    fn identity() -> Self;

    /// `self ∘ other`: `other` is applied first.
    fn compose(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    /// Coefficientwise complex conjugation.
    fn conj(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

pub fn is_cocycle<G: GroupElement>(g: &G) -> bool {
    g.compose(&g.conj()).is_identity()
}

/// `θ⁻¹ ∘ τ ∘ conj(θ)`.
pub fn conjugate<G: GroupElement>(theta: &G, tau: &G) -> G {
    theta.inverse().compose(tau).compose(&theta.conj())
}

/// A normal form together with the element conjugating the input onto it.
#[derive(Clone, Debug, Serialize)]
pub struct Reduction<G> {
    pub normal_form: G,
    pub witness: G,
}

impl<G: GroupElement> Reduction<G> {
    pub fn verify(&self, input: &G) -> bool {
        conjugate(&self.witness, input) == self.normal_form
    }
}

/// A reduction onto one of finitely many labelled representatives.
#[derive(Clone, Debug, Serialize)]
pub struct Classified<G, L> {
    pub class: L,
    #[serde(flatten)]
    pub reduction: Reduction<G>,
}

impl<G: GroupElement, L> Classified<G, L> {
    pub fn verify(&self, input: &G) -> bool {
        self.reduction.verify(input)
    }
}

/// Running product of conjugations applied to a cocycle.
struct Chain<G> {
    current: G,
    witness: G,
}

impl<G: GroupElement> Chain<G> {
    fn new(tau: &G) -> Self {
        Chain { current: tau.clone(), witness: G::identity() }
    }

    fn apply(&mut self, theta: &G) {
        self.current = conjugate(theta, &self.current);
        self.witness = self.witness.compose(theta);
    }

    fn finish(self, input: &G) -> Result<Reduction<G>> {
        let red = Reduction { normal_form: self.current, witness: self.witness };
        if red.verify(input) {
            Ok(red)
        } else {
            Err(Error::Invariant("conjugating witness failed to verify".into()))
        }
    }
}
