//! Real forms of `xy = p(z)` for a handful of polynomials.

use realforms::classify::classify;
use realforms::poly::parse_poly;

fn main() -> realforms::Result<()> {
    let inputs = std::env::args().skip(1).collect::<Vec<_>>();
    let defaults = ["z^2 - 1", "z^2", "z^3", "z^4", "z^3 + z", "z^4 + z^2", "z^6 + z^2", "z^3 + 3z^2", "z^3 + i"];
    let inputs: Vec<&str> = if inputs.is_empty() { defaults.to_vec() } else { inputs.iter().map(String::as_str).collect() };

    for text in inputs {
        let r = classify(&parse_poly(text)?)?;
        println!("xy = {}   [{}]  ->  {} real forms", r.input, r.condition, r.count);
        for rep in &r.representatives {
            let pts = if rep.real_points { "real points" } else { "no real points" };
            println!("    {}  {} = 0   ({pts})", rep.bits, rep.equation);
        }
    }
    Ok(())
}
