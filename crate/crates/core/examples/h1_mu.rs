//! First Galois cohomology of the n-th roots of unity, by brute force.

use realforms::autgroup::h1_mu_bruteforce;

fn main() {
    for n in 1..=12 {
        let classes = h1_mu_bruteforce(n);
        let reps: Vec<String> = classes.iter().map(|c| c.representative.to_string()).collect();
        println!("n = {n:>2}: {} class(es), representatives {}", classes.len(), reps.join(", "));
    }
}
