//! Real forms of the punctured line and the two tori, and the reduction of
//! explicit real structures on them.

use realforms::autgroup::{reduce_halftorus_cocycle, reduce_torus_cocycle, Gl2z, HalfTorusAut, MonomialAut};
use realforms::classify::{classify_torus, TorusKind};
use realforms::{CycloNum, LaurentPoly};

fn main() -> realforms::Result<()> {
    for kind in [TorusKind::PuncturedLine, TorusKind::Torus, TorusKind::HalfTorus] {
        let r = classify_torus(kind);
        println!("{kind:?}: {} forms", r.count);
        for c in &r.classes {
            println!("    {:<15} {}", c.label, c.equation);
        }
    }

    let lam = &CycloNum::from_int(2) + &CycloNum::i();
    let nu = MonomialAut::new(lam.inv()?, lam.conj(), Gl2z([[0, 1], [1, 0]]));
    let r = reduce_torus_cocycle(&nu)?;
    println!("\n{nu} is {} via {}", r.class, r.reduction.witness);

    let c = LaurentPoly::from_terms(&[(1, CycloNum::i()), (-1, CycloNum::i())]);
    let nu = HalfTorusAut::new(CycloNum::one(), 0, c, CycloNum::one(), -1)?;
    let r = reduce_halftorus_cocycle(&nu)?;
    println!("{nu} is {} via {}", r.class, r.reduction.witness);
    Ok(())
}
