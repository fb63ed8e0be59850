//! Dense polynomials over ℚ stored low-degree first.
//!
//! These are plain slices/vectors rather than a wrapper type; they back the
//! cyclotomic field inverse and the Sturm machinery, both of which only ever
//! need ℚ coefficients.

use num_traits::{One, Signed, Zero};

use super::Rational;

pub fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x + y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let neg: Vec<Rational> = b.iter().map(|c| -c).collect();
    add(a, &neg)
}

pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
    let mut out: Vec<Rational> = a.iter().map(|c| c * s).collect();
    trim(&mut out);
    out
}

/// Euclidean division. Panics if `b` is zero.
pub fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut rem: Vec<Rational> = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let factor = &rem[dr] / &lead;
        let shift = dr - db;
        for (k, c) in b.iter().enumerate().take(db + 1) {
            rem[shift + k] -= &factor * c;
        }
        quot[shift] = factor;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn monic(a: &[Rational]) -> Vec<Rational> {
    match degree(a) {
        Some(d) => {
            let inv = a[d].recip();
            scale(a, &inv)
        }
        None => Vec::new(),
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// Extended Euclid: returns `(g, s)` with `s·a ≡ g (mod m)` and `g` monic.
pub fn ext_gcd_mod(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let d = degree(&r0).map(|d| r0[d].clone()).unwrap_or_else(Rational::one);
    let inv = d.recip();
    (scale(&r0, &inv), scale(&s0, &inv))
}

pub fn derivative(a: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
        .collect();
    trim(&mut out);
    out
}

pub fn eval(a: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Sign of the value, as -1, 0 or 1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Solve `cols · y = target` for `y`, where `cols` are the column vectors of
/// a matrix with full column rank. Returns `None` if no solution exists.
pub fn solve_columns(cols: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let ncols = cols.len();
    // augmented matrix, row-major
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = cols
                .iter()
                .map(|c| c.get(r).cloned().unwrap_or_else(Rational::zero))
                .collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(ncols);
    for col in 0..ncols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=ncols {
                    let delta = &f * &m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if (pivot_row..rows).any(|r| !m[r][ncols].is_zero()) {
        return None;
    }
    let mut y = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        y[c] = m[r][ncols].clone();
    }
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from_integer(c.into())).collect()
    }

    #[test]
    fn division_and_gcd() {
        // (z^2 - 1) / (z - 1) = z + 1
        let (quot, rem) = div_rem(&q(&[-1, 0, 1]), &q(&[-1, 1]));
        assert_eq!(quot, q(&[1, 1]));
        assert!(rem.is_empty());
        // gcd(z^2 - 1, z^2 + 2z + 1) = z + 1
        assert_eq!(gcd(&q(&[-1, 0, 1]), &q(&[1, 2, 1])), q(&[1, 1]));
    }

    #[test]
    fn inverse_mod_polynomial() {
        // inverse of (1 + z) modulo z^2 + 1 is (1 - z)/2
        let (g, s) = ext_gcd_mod(&q(&[1, 1]), &q(&[1, 0, 1]));
        assert_eq!(g, q(&[1]));
        let (_, r) = div_rem(&mul(&s, &q(&[1, 1])), &q(&[1, 0, 1]));
        assert_eq!(r, q(&[1]));
    }

    #[test]
    fn solve_small_system() {
        let cols = vec![q(&[1, 0, 1]), q(&[0, 1, 1])];
        let y = solve_columns(&cols, &q(&[2, 3, 5])).unwrap();
        assert_eq!(y, q(&[2, 3]));
        assert!(solve_columns(&cols, &q(&[2, 3, 4])).is_none());
    }
}
