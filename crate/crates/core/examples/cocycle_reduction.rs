//! Reducing real structures on `xy = p(z)` to normal form, with witnesses.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realforms::autgroup::{classify_a_cocycle, conjugate, reduce_b_cocycle, AClass, PsiElement};
use realforms::invariants::invariants;
use realforms::{sample, CycloNum, UniPoly};

fn main() -> realforms::Result<()> {
    // a shear with purely imaginary r is trivial
    let z2 = UniPoly::from_ints(&[0, 0, 1]);
    let tau = PsiElement::shear(UniPoly::monomial(CycloNum::i(), 2));
    let r = reduce_b_cocycle(&tau, &z2)?;
    println!("{tau}\n  -> {}\n  witness {}", r.normal_form, r.witness);

    // hide each representative behind a random conjugation and recover it
    let p = UniPoly::from_ints(&[0, 0, 1, 0, 1]);
    let inv = invariants(&p)?;
    let n = inv.n.finite().expect("z^4 + z^2 has period 2");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    println!("\np = {p}");
    for class in AClass::occurring(inv.d, inv.hp) {
        let tau = class.representative(inv.m, n)?;
        let theta = sample::affine(&mut rng, &p)?;
        let hidden = conjugate(&theta, &tau);
        let r = classify_a_cocycle(&hidden, &p)?;
        assert!(r.verify(&hidden));
        println!("{class}: {hidden}  ->  {} via {}", r.class, r.reduction.witness);
    }
    Ok(())
}
