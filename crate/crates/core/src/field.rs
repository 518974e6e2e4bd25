//! Finite fields `GF(p^deg)` and Paley tournaments over them.
//!
//! Field elements are the integers `0..q`. The element with rank `r` is the
//! polynomial whose coefficient vector is the base-`p` expansion of `r`,
//! least-significant digit first (constant term first). The modulus is the
//! lexicographically smallest monic irreducible polynomial of the requested
//! degree, comparing coefficient vectors from the constant term up.

use thiserror::Error;

use crate::bitset::BitSet;
use crate::digraph::{Digraph, DigraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("{p}^{deg} overflows the native integer width")]
    Overflow { p: u64, deg: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("Paley tournaments need q ≡ 3 (mod 4), got q = {0}")]
    NotThreeModFour(u64),
    #[error("no irreducible polynomial of degree {deg} found over GF({p})")]
    NoModulus { p: u64, deg: u32 },
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^deg` with `p` prime.
pub fn prime_power(q: u64) -> Result<(u64, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut rest = q;
    let mut deg = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        deg += 1;
    }
    if rest == 1 {
        Ok((p, deg))
    } else {
        Err(FieldError::NotPrimePower(q))
    }
}

// Polynomials over GF(p) as coefficient vectors, constant term first, with no
// trailing zeros (the zero polynomial is empty).
fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo the nonzero polynomial `b` over GF(p).
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() * lead_inv % p;
        for (i, &bc) in b.iter().enumerate() {
            let sub = factor * bc % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

fn digits(mut r: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(r % p);
        r /= p;
    }
    out
}

/// Monic polynomial of degree `deg` whose lower coefficients are the digits of
/// `r`, constant term first.
fn monic_from_rank(r: u64, p: u64, deg: usize) -> Vec<u64> {
    let mut c = digits(r, p, deg);
    c.push(1);
    c
}

/// Irreducibility by trial division with every monic polynomial of degree
/// `1..=deg/2`; degree-1 divisors are exactly the roots.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for r in 0..count {
            if poly_rem(f, &monic_from_rank(r, p, d), p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// `GF(p^deg)` with elements `0..q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    deg: u32,
    q: u64,
    modulus: Vec<u64>,
}

pub fn build_field(p: u64, deg: u32) -> Result<FiniteField, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if deg == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let q = p.checked_pow(deg).ok_or(FieldError::Overflow { p, deg })?;
    let d = deg as usize;

    // Lexicographic order from the constant term up means c0 is the most
    // significant coordinate of the search.
    let modulus = (0..q)
        .map(|r| {
            let mut c: Vec<u64> = digits(r, p, d);
            c.reverse();
            c.push(1);
            c
        })
        .find(|f| is_irreducible(f, p))
        .ok_or(FieldError::NoModulus { p, deg })?;

    let field = FiniteField { p, deg, q, modulus };
    // Spot-check the multiplicative group order on a few elements.
    for a in (1..q).take(4).chain(std::iter::once(q - 1)) {
        if field.pow(a, q - 1) != 1 {
            return Err(FieldError::NoModulus { p, deg });
        }
    }
    Ok(field)
}

impl FiniteField {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn coeffs(&self, a: u64) -> Vec<u64> {
        digits(a, self.p, self.deg as usize)
    }

    fn rank(&self, c: &[u64]) -> u64 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(i, j)| (i + j) % self.p).collect();
        self.rank(&s)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let n: Vec<u64> = self.coeffs(a).iter().map(|&c| (self.p - c) % self.p).collect();
        self.rank(&n)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; x.len() + y.len()];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.deg as usize, 0);
        self.rank(&r)
    }

    pub fn pow(&self, a: u64, mut exp: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.q - 2))
    }

    /// The nonzero squares.
    pub fn nonzero_squares(&self) -> BitSet {
        let q = self.q as usize;
        BitSet::from_indices(q, (1..self.q).map(|z| self.mul(z, z) as usize))
    }
}

/// The Paley tournament on `GF(p^deg)`: `x → y` iff `x - y` is a nonzero
/// square.
pub fn paley_tournament(p: u64, deg: u32) -> Result<Digraph, FieldError> {
    let field = build_field(p, deg)?;
    let q = field.order();
    if q % 4 != 3 {
        return Err(FieldError::NotThreeModFour(q));
    }
    let squares = field.nonzero_squares();
    let diff: Vec<Vec<u64>> = (0..q).map(|x| (0..q).map(|y| field.sub(x, y)).collect()).collect();
    Ok(Digraph::from_fn(q as usize, |x, y| {
        squares.contains(diff[x][y] as usize)
    })?)
}

/// Paley tournament of prime-power order `q`.
pub fn paley_of_order(q: u64) -> Result<Digraph, FieldError> {
    let (p, deg) = prime_power(q)?;
    paley_tournament(p, deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::classify;

    #[test]
    fn prime_field() {
        let f = build_field(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(build_field(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(build_field(3, 0), Err(FieldError::ZeroDegree));
        assert_eq!(build_field(2, 64), Err(FieldError::Overflow { p: 2, deg: 64 }));
        assert_eq!(prime_power(12), Err(FieldError::NotPrimePower(12)));
        assert_eq!(prime_power(27), Ok((3, 3)));
        assert_eq!(prime_power(31), Ok((31, 1)));
    }

    // Independent check of the GF(27) modulus: a cubic is irreducible over
    // GF(3) iff it has no root, so evaluate at 0, 1, 2 directly.
    #[test]
    fn gf27_modulus_is_irreducible_cubic() {
        let f = build_field(3, 3).unwrap();
        assert_eq!(f.order(), 27);
        let m = f.modulus();
        assert_eq!(m.len(), 4);
        assert_eq!(m[3], 1);
        for x in 0..3u64 {
            let val = m.iter().rev().fold(0, |acc, &c| (acc * x + c) % 3);
            assert_ne!(val, 0, "root {x} of modulus {m:?}");
        }
        // Every smaller candidate in constant-term-first lexicographic order
        // has a root.
        for c0 in 0..3u64 {
            for c1 in 0..3u64 {
                for c2 in 0..3u64 {
                    if (c0, c1, c2) >= (m[0], m[1], m[2]) {
                        continue;
                    }
                    let has_root = (0..3u64).any(|x| (x * x * x + c2 * x * x + c1 * x + c0) % 3 == 0);
                    assert!(has_root);
                }
            }
        }
    }

    #[test]
    fn field_axioms_gf27_and_gf49() {
        for (p, deg) in [(3, 3), (7, 2), (2, 3)] {
            let f = build_field(p, deg).unwrap();
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                    assert_eq!(f.pow(a, q - 1), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
            for a in (0..q).step_by(3) {
                for b in (0..q).step_by(5) {
                    for c in (0..q).step_by(2) {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn paley_seven_out_neighbourhood() {
        let g = paley_tournament(7, 1).unwrap();
        // squares mod 7 by enumeration
        let mut residues: Vec<usize> = (1..7usize).map(|z| z * z % 7).collect();
        residues.sort();
        residues.dedup();
        assert_eq!(residues, vec![1, 2, 4]);
        // x -> y iff x - y is a residue, so 0 -> y iff -y is a residue
        let expected: Vec<usize> = (1..7).filter(|y| residues.contains(&((7 - y) % 7))).collect();
        assert_eq!(g.out_neighbors(0).iter().collect::<Vec<_>>(), expected);
        assert_eq!(expected, vec![3, 5, 6]);
        // the residues themselves dominate 0
        assert_eq!(g.in_neighbors(0).iter().collect::<Vec<_>>(), residues);
    }

    #[test]
    fn paley_requires_three_mod_four() {
        assert_eq!(paley_tournament(5, 1), Err(FieldError::NotThreeModFour(5)));
        assert_eq!(paley_tournament(3, 2), Err(FieldError::NotThreeModFour(9)));
    }

    #[test]
    fn paley_graphs_are_doubly_regular() {
        for q in [3u64, 7, 11, 19, 23, 27, 31, 43, 47] {
            let g = paley_of_order(q).unwrap();
            let c = classify(&g);
            assert!(c.is_doubly_regular, "q={q}");
            assert_eq!(c.regular_degree, Some(((q - 1) / 2) as usize));
            assert_eq!(c.lambda, Some(((q - 3) / 4) as usize));
            // A Aᵀ = ((v+1)/4) I + ((v-3)/4) J entrywise
            let v = q as usize;
            for a in 0..v {
                for b in 0..v {
                    let entry = g.out_neighbors(a).intersection_count(g.out_neighbors(b));
                    let expected = if a == b { (v + 1) / 4 + (v - 3) / 4 } else { (v - 3) / 4 };
                    assert_eq!(entry, expected);
                }
            }
        }
    }
}
