//! Which complex surfaces `xy = p(z)` admit a real structure at all.

use realforms::invariants::real_form_exists;
use realforms::poly::parse_poly;

fn main() -> realforms::Result<()> {
    for text in ["z^3 + i", "z^3 + z + 1 + i", "i z^4 + 2", "z^2 + (1 + i) z", "z^5 + zeta(5)"] {
        let p = parse_poly(text)?;
        let r = real_form_exists(&p)?;
        match (&r.witness, r.exists) {
            (Some(w), _) => println!("{text:<18} yes: ({}) p({} z + {}) = {}", w.lambda, w.a, w.b, w.real_poly),
            (None, true) => println!("{text:<18} yes (scaling outside the cyclotomic tower)"),
            (None, false) => println!("{text:<18} no"),
        }
    }
    Ok(())
}
