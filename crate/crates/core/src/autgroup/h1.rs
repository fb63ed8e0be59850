use serde::Serialize;

use crate::arith::RootOfUnity;

/// One class of `H¹(Gal(ℂ/ℝ), μ_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Class {
    pub representative: RootOfUnity,
    pub members: Vec<RootOfUnity>,
}

/// Computes `H¹(Gal(ℂ/ℝ), μ_n)` by brute force.
///
/// Every element of `μ_n` is a cocycle, and conjugation acts by
/// `ν ↦ α⁻¹·ν·ᾱ = ν·α⁻²`. Classes are orbits under this action, found by
/// union-find over exponents.
pub fn h1_mu_bruteforce(n: u32) -> Vec<H1Class> {
    assert!(n >= 1, "n must be positive");
    let n = n as usize;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for nu in 0..n {
        for alpha in 0..n {
            let image = (nu + 2 * (n - alpha)) % n;
            let (ra, rb) = (find(&mut parent, nu), find(&mut parent, image));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut classes: Vec<H1Class> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for k in 0..n {
        let root = find(&mut parent, k);
        let zeta = RootOfUnity::new(n as u32, k as i64);
        if index[root] == usize::MAX {
            index[root] = classes.len();
            classes.push(H1Class { representative: zeta, members: Vec::new() });
        }
        classes[index[root]].members.push(zeta);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(h1_mu_bruteforce(1).len(), 1);
        assert_eq!(h1_mu_bruteforce(3).len(), 1);
        let four = h1_mu_bruteforce(4);
        assert_eq!(four.len(), 2);
        assert!(four[1].members.contains(&RootOfUnity::new(4, 1)));
        assert!(four[1].members.contains(&RootOfUnity::new(4, 3)));
    }
}
