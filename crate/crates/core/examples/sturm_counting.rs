//! Counting and isolating real roots with Sturm chains.

use realforms::poly::{nonpositive_witness, parse_poly, sturm_count, Interval};

fn main() -> realforms::Result<()> {
    for text in ["z^3 - 3z + 2", "z^4 - 5z^2 + 4", "z^2 + 1", "(z^2 - 2)^2 (z - 1/3)"] {
        let f = parse_poly(text)?;
        let n = sturm_count(&f, &Interval::WholeLine)?;
        let w = nonpositive_witness(&f)?;
        let w = w.map_or("none".to_string(), |t| format!("f({t}) <= 0"));
        println!("{text:<24} real roots: {n}   nonpositive value: {w}");
    }
    Ok(())
}
