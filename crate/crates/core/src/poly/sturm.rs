//! Real root counting for polynomials with rational coefficients.

use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::arith::{ratpoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Interval {
    WholeLine,
    /// The half-open interval `(lo, hi]`.
    HalfOpen(Rational, Rational),
}

/// Sturm chain of the squarefree part of a rational polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Vec<Rational>>,
}

impl SturmChain {
    pub fn new(f: &[Rational]) -> Result<Self> {
        let mut f = f.to_vec();
        ratpoly::trim(&mut f);
        if f.is_empty() {
            return Err(Error::Invariant("Sturm chain of the zero polynomial".into()));
        }
        let g = ratpoly::gcd(&f, &ratpoly::derivative(&f));
        let (squarefree, _) = ratpoly::div_rem(&f, &g);
        let mut chain = vec![squarefree.clone(), ratpoly::derivative(&squarefree)];
        while !chain.last().unwrap().is_empty() {
            let n = chain.len();
            let (_, r) = ratpoly::div_rem(&chain[n - 2], &chain[n - 1]);
            chain.push(r.iter().map(|c| -c).collect());
        }
        chain.pop();
        Ok(SturmChain { chain })
    }

    pub fn squarefree(&self) -> &[Rational] {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| ratpoly::sign(&ratpoly::eval(p, x))))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let d = ratpoly::degree(p).unwrap_or(0);
            let s = ratpoly::sign(&p[d]);
            if !positive && d % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in the interval.
    pub fn count(&self, interval: &Interval) -> usize {
        match interval {
            Interval::WholeLine => {
                self.variations_at_infinity(false) - self.variations_at_infinity(true)
            }
            Interval::HalfOpen(lo, hi) => {
                if lo >= hi {
                    return 0;
                }
                // for a squarefree chain V(a) - V(b) counts roots in (a, b]
                self.variations_at(lo) - self.variations_at(hi)
            }
        }
    }

    /// Disjoint half-open rational intervals each holding exactly one root,
    /// in increasing order.
    pub fn isolate(&self) -> Vec<(Rational, Rational)> {
        let f = &self.chain[0];
        let d = ratpoly::degree(f).unwrap_or(0);
        if d == 0 {
            return Vec::new();
        }
        // Cauchy bound
        let bound = f[..d]
            .iter()
            .map(|c| (c / &f[d]).abs())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a })
            + Rational::one();
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let k = self.count(&Interval::HalfOpen(lo.clone(), hi.clone()));
            if k == 0 {
                continue;
            }
            if k == 1 {
                out.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.sort();
        out
    }
}

/// Number of distinct real roots of `f` in the interval.
pub fn sturm_count(f: &UniPoly, interval: &Interval) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::Invariant("root count of the zero polynomial".into()));
    }
    Ok(SturmChain::new(&f.to_rationals()?)?.count(interval))
}

/// Whether `f(t) ≤ 0` for some real `t`.
pub fn attains_nonpositive(f: &UniPoly) -> Result<bool> {
    let f = f.to_rationals()?;
    let Some(d) = ratpoly::degree(&f) else {
        return Ok(true);
    };
    if f[d].is_negative() && d > 0 {
        return Ok(true);
    }
    if !ratpoly::eval(&f, &Rational::zero()).is_positive() {
        return Ok(true);
    }
    if d == 0 {
        return Ok(false);
    }
    // positive leading coefficient and positive at 0: nonpositive values
    // occur exactly when there is a real root
    Ok(SturmChain::new(&f)?.count(&Interval::WholeLine) > 0)
}

/// A rational point where `f` is nonpositive, when one can be exhibited.
/// Polynomials that touch zero only at irrational double roots have no such
/// point and yield `None` even though [`attains_nonpositive`] is true.
pub fn nonpositive_witness(f: &UniPoly) -> Result<Option<Rational>> {
    let f = f.to_rationals()?;
    let zero = Rational::zero();
    let Some(d) = ratpoly::degree(&f) else {
        return Ok(Some(zero));
    };
    if !ratpoly::eval(&f, &zero).is_positive() {
        return Ok(Some(zero));
    }
    if d == 0 {
        return Ok(None);
    }
    let chain = SturmChain::new(&f)?;
    let sf = chain.squarefree();
    if ratpoly::degree(sf) == Some(1) {
        let root = -&sf[0] / &sf[1];
        if !ratpoly::eval(&f, &root).is_positive() {
            return Ok(Some(root));
        }
    }
    let roots = chain.isolate();
    let mut samples: Vec<Rational> = Vec::new();
    for (lo, hi) in &roots {
        samples.push(lo.clone());
        samples.push(hi.clone());
        // refine to expose the sign on both sides of each root
        let (mut a, mut b) = (lo.clone(), hi.clone());
        for _ in 0..64 {
            let mid = (&a + &b) / Rational::from_integer(2.into());
            samples.push(mid.clone());
            if ratpoly::eval(&f, &mid).is_zero() {
                return Ok(Some(mid));
            }
            if chain.count(&Interval::HalfOpen(a.clone(), mid.clone())) == 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
    }
    let far = roots.last().map(|(_, hi)| hi.clone() + Rational::one()).unwrap_or_else(Rational::one);
    samples.push(far.clone());
    samples.push(-far);
    Ok(samples.into_iter().find(|t| !ratpoly::eval(&f, t).is_positive()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_line_counts() {
        assert_eq!(sturm_count(&UniPoly::from_ints(&[1, 0, 1]), &Interval::WholeLine).unwrap(), 0);
        assert_eq!(sturm_count(&UniPoly::from_ints(&[0, -1, 0, 1]), &Interval::WholeLine).unwrap(), 3);
    }

    #[test]
    fn half_open_count() {
        let f = UniPoly::from_ints(&[4, 0, -5, 0, 1]);
        let iv = Interval::HalfOpen(Rational::zero(), Rational::from_integer(3.into()));
        assert_eq!(sturm_count(&f, &iv).unwrap(), 2);
        let iv = Interval::HalfOpen(Rational::from_integer(1.into()), Rational::from_integer(2.into()));
        assert_eq!(sturm_count(&f, &iv).unwrap(), 1);
    }

    #[test]
    fn repeated_roots_count_once() {
        // (z - 1)^2 (z + 2)
        let f = &UniPoly::from_ints(&[1, -2, 1]) * &UniPoly::from_ints(&[2, 1]);
        assert_eq!(sturm_count(&f, &Interval::WholeLine).unwrap(), 2);
    }

    #[test]
    fn nonpositivity() {
        assert!(!attains_nonpositive(&UniPoly::from_ints(&[1, 0, 1])).unwrap());
        assert!(attains_nonpositive(&UniPoly::from_ints(&[-1, 0, 1])).unwrap());
        assert!(attains_nonpositive(&UniPoly::from_ints(&[-1, 0, -1])).unwrap());
        // (z - 3)^2 touches zero away from the origin
        assert!(attains_nonpositive(&UniPoly::from_ints(&[9, -6, 1])).unwrap());
        assert_eq!(
            nonpositive_witness(&UniPoly::from_ints(&[9, -6, 1])).unwrap(),
            Some(Rational::from_integer(3.into()))
        );
    }

    #[test]
    fn isolation_separates_close_roots() {
        // (10z - 1)(10z - 2)(z - 5)
        let f = &(&UniPoly::from_ints(&[-1, 10]) * &UniPoly::from_ints(&[-2, 10])) * &UniPoly::from_ints(&[-5, 1]);
        let chain = SturmChain::new(&f.to_rationals().unwrap()).unwrap();
        assert_eq!(chain.isolate().len(), 3);
    }

    #[test]
    fn non_rational_input_is_rejected() {
        let f = UniPoly::new(vec![crate::arith::CycloNum::i(), crate::arith::CycloNum::one()]);
        assert!(matches!(sturm_count(&f, &Interval::WholeLine), Err(Error::NotRational(_))));
    }
}
