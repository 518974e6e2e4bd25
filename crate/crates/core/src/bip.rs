//! Block intersection polynomials and the adjacency polynomial of a doubly
//! regular tournament.
//!
//! Everything here is exact. Sign changes of these polynomials at single
//! integers decide whether a transitive subtournament of a given size can
//! exist, so no floating point is used.
//!
//! For sequences `M = [m_0..m_s]` and `Λ = [λ_0..λ_t]` with `t ≤ s` the block
//! intersection polynomial is
//!
//! ```text
//! B(x, M, Λ) = Σ_{j=0..t} C(t,j) · P(-x, t-j) · ( P(s,j) λ_j - Σ_{i=j..s} P(i,j) m_i )
//! ```
//!
//! where `P(x,k) = x(x-1)…(x-k+1)`. If nonnegative numbers `n_i ≥ m_i` satisfy
//! `Σ_i C(i,j) n_i = C(s,j) λ_j` for `j ≤ t`, then `B(b) ≥ 0` at every
//! integer `b`.
//!
//! For a doubly regular tournament on `v = 4m - 1` vertices and a transitive
//! subtournament of size `y`, taking `t = 2`, `M = 0` and the averaged
//! intersection numbers gives the adjacency polynomial
//!
//! ```text
//! C(x, y) = x(x+1)(4m-1-y) - 2xy(2m - (y+1)/2) + y(y-1)(m - (y+1)/3)
//! ```
//!
//! and `3·C(x, y) = 3L·x² - 3L(y-1)·x + y(y-1)(3m-y-1)` with `L = 4m-1-y`.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::digraph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipError {
    #[error("need s >= t, got s = {s}, t = {t}")]
    DegreeOrder { s: usize, t: usize },
    #[error("M must have s + 1 = {expected} entries, got {found}")]
    MLength { expected: usize, found: usize },
    #[error("Λ must have t + 1 = {expected} entries, got {found}")]
    LambdaLength { expected: usize, found: usize },
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `P(x, k) = x(x-1)…(x-k+1)`, with `P(x, 0) = 1`.
pub fn falling_factorial(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, i| acc * (x - int(i as i64)))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Parameters `s`, `t`, `M`, `Λ` of a block intersection polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct BipInput {
    s: usize,
    t: usize,
    m: Vec<BigRational>,
    lambda: Vec<BigRational>,
}

impl BipInput {
    pub fn new(s: usize, t: usize, m: Vec<BigRational>, lambda: Vec<BigRational>) -> Result<Self, BipError> {
        if t > s {
            return Err(BipError::DegreeOrder { s, t });
        }
        if m.len() != s + 1 {
            return Err(BipError::MLength {
                expected: s + 1,
                found: m.len(),
            });
        }
        if lambda.len() != t + 1 {
            return Err(BipError::LambdaLength {
                expected: t + 1,
                found: lambda.len(),
            });
        }
        Ok(Self { s, t, m, lambda })
    }

    /// The `t = 2` input for a size-`s` transitive subtournament of a doubly
    /// regular tournament of order `4m-1`, with the given lower bounds `M`
    /// (all zero for the adjacency polynomial).
    pub fn doubly_regular(m: u64, s: usize, lower: Vec<BigRational>) -> Result<Self, BipError> {
        let m = m as i64;
        let (v, k, lambda) = (4 * m - 1, 2 * m - 1, m - 1);
        let s_i = s as i64;
        let lambdas = vec![
            int(v - s_i),
            int(k) - BigRational::new(BigInt::from(s_i - 1), BigInt::from(2)),
            int(lambda) - BigRational::new(BigInt::from(s_i - 2), BigInt::from(3)),
        ];
        Self::new(s, 2, lower, lambdas)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Coefficient of `P(-x, t-j)` in the defining sum.
    fn inner(&self, j: usize) -> BigRational {
        let s = int(self.s as i64);
        let tail: BigRational = (j..=self.s)
            .map(|i| falling_factorial(&int(i as i64), j) * &self.m[i])
            .sum();
        falling_factorial(&s, j) * &self.lambda[j] - tail
    }
}

/// `B(x, M, Λ)` evaluated directly from the defining sum.
pub fn block_intersection_poly(input: &BipInput, x: &BigRational) -> BigRational {
    let neg_x = -x;
    (0..=input.t)
        .map(|j| {
            BigRational::from_integer(binomial(input.t, j)) * falling_factorial(&neg_x, input.t - j) * input.inner(j)
        })
        .sum()
}

/// Coefficients of `B(x, M, Λ)` as a polynomial in `x`, constant term first.
pub fn block_intersection_coeffs(input: &BipInput) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); input.t + 1];
    for j in 0..=input.t {
        // P(-x, n) = ∏_{i<n} (-x - i), expanded
        let mut p = vec![BigRational::one()];
        for i in 0..(input.t - j) {
            let mut next = vec![BigRational::zero(); p.len() + 1];
            for (d, c) in p.iter().enumerate() {
                next[d] -= c * int(i as i64);
                next[d + 1] -= c;
            }
            p = next;
        }
        let scale = BigRational::from_integer(binomial(input.t, j)) * input.inner(j);
        for (d, c) in p.into_iter().enumerate() {
            out[d] += c * &scale;
        }
    }
    out
}

/// `3·C(x, y)` as an integer quadratic `a x² + b x + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjPolynomial {
    pub m: u64,
    pub y: u64,
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl AdjPolynomial {
    /// `3·C(x, y)`.
    pub fn eval3(&self, x: &BigInt) -> BigInt {
        (&self.a * x + &self.b) * x + &self.c
    }

    /// `C(x, y)` itself.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let three = int(3);
        let (a, b, c) = (
            BigRational::from_integer(self.a.clone()),
            BigRational::from_integer(self.b.clone()),
            BigRational::from_integer(self.c.clone()),
        );
        ((a * x + b) * x + c) / three
    }

    /// Coefficients of `C(x, y)`, constant term first.
    pub fn coefficients(&self) -> [BigRational; 3] {
        let third = |n: &BigInt| BigRational::new(n.clone(), BigInt::from(3));
        [third(&self.c), third(&self.b), third(&self.a)]
    }
}

pub fn adjacency_poly(m: u64, y: u64) -> AdjPolynomial {
    let (m_i, y_i) = (BigInt::from(m), BigInt::from(y));
    let l = BigInt::from(4) * &m_i - 1 - &y_i;
    let a = BigInt::from(3) * &l;
    let y_minus_1: BigInt = &y_i - 1u32;
    let prod: BigInt = &a * &y_minus_1;
    let b = -prod;
    let c: BigInt = &y_i * &y_minus_1 * (BigInt::from(3) * &m_i - &y_i - 1);
    AdjPolynomial { m, y, a, b, c }
}

/// Whether `a x² + b x + c ≥ 0` at every integer `x`, for `a ≥ 0`.
fn nonneg_at_integers(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    let f = |x: &BigInt| (a * x + b) * x + c;
    if a.is_zero() {
        return b.is_zero() && !c.is_negative();
    }
    debug_assert!(a.is_positive());
    // the minimum over the integers sits at floor or ceil of -b / 2a
    let lo = (-b).div_floor(&(BigInt::from(2) * a));
    let hi = &lo + 1;
    !f(&lo).is_negative() && !f(&hi).is_negative()
}

/// Whether `C(b, y) ≥ 0` for every integer `b`.
///
/// A doubly regular tournament of order `4m-1` can contain a transitive
/// subtournament of size `y` only if this holds. Sizes `y ≤ 1` are always
/// feasible.
pub fn bip_feasible(m: u64, y: u64) -> bool {
    if y <= 1 {
        return true;
    }
    let p = adjacency_poly(m, y);
    if p.a.is_negative() {
        return false;
    }
    nonneg_at_integers(&p.a, &p.b, &p.c)
}

/// Result of scanning every candidate size `1 < y < 4m-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipScan {
    pub m: u64,
    /// Largest `y` such that every size in `2..=y` is feasible.
    pub bound: u64,
    /// Feasible sizes above the first infeasible one; empty when
    /// feasibility is monotone.
    pub non_monotone: Vec<u64>,
}

pub fn bip_scan(m: u64) -> BipScan {
    let top = 4 * m - 2;
    let mut bound = None;
    let mut non_monotone = Vec::new();
    for y in 2..=top {
        let ok = bip_feasible(m, y);
        match (bound, ok) {
            (None, false) => bound = Some(y - 1),
            (Some(_), true) => non_monotone.push(y),
            _ => {}
        }
    }
    BipScan {
        m,
        bound: bound.unwrap_or(top.max(1)),
        non_monotone,
    }
}

/// Largest `y` such that `C(b, y') ≥ 0` at all integers for every
/// `1 < y' ≤ y`.
pub fn bip_bound(m: u64) -> u64 {
    bip_scan(m).bound
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseBound {
    pub case: u8,
    pub bound: u64,
}

/// The closed-form bounds obtained from `C(x, y)` at the sizes near
/// `√(1+12m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm54Result {
    pub m: u64,
    /// `⌊√(1+12m)⌋`
    pub floor_sqrt: u64,
    /// Whether `1+12m` is a perfect square.
    pub epsilon_is_zero: bool,
    pub cases: Vec<CaseBound>,
    pub bound: u64,
}

impl Thm54Result {
    pub fn applicable_cases(&self) -> Vec<u8> {
        self.cases.iter().map(|c| c.case).collect()
    }
}

/// Case analysis on `f = ⌊√(1+12m)⌋`:
///
/// 1. always `s ≤ f - 1`;
/// 2. if `1+12m` is a square, `s ≤ f - 2`;
/// 3. if it is not and `f - 1` is odd, `s ≤ f - 2`;
/// 4. if it is not and `f > (-1 + √(1+48m))/2`, `s ≤ f - 2`.
///
/// Case 4's strict inequality is tested as `(2f+1)² > 1+48m`.
pub fn thm54_bound(m: u64) -> Thm54Result {
    let n = 1 + 12 * m as u128;
    let f = n.sqrt();
    let exact = f * f == n;
    let floor = f as u64;
    let mut cases = vec![CaseBound {
        case: 1,
        bound: floor - 1,
    }];
    if exact {
        cases.push(CaseBound {
            case: 2,
            bound: floor - 2,
        });
    } else {
        if (f - 1) % 2 == 1 {
            cases.push(CaseBound {
                case: 3,
                bound: floor - 2,
            });
        }
        if (2 * f + 1) * (2 * f + 1) > 1 + 48 * m as u128 {
            cases.push(CaseBound {
                case: 4,
                bound: floor - 2,
            });
        }
    }
    let bound = cases.iter().map(|c| c.bound).min().expect("case 1 always applies");
    Thm54Result {
        m,
        floor_sqrt: floor,
        epsilon_is_zero: exact,
        cases,
        bound,
    }
}

/// `n_i = |{q ∉ Γ : |N(q) ∩ Γ| = i}|` for `i = 0..=s`, where `N(q)` is the set
/// of vertices dominating `q`.
pub fn intersection_numbers(g: &Digraph, members: &BitSet) -> Vec<u64> {
    let s = members.count();
    let mut n = vec![0u64; s + 1];
    for q in (0..g.v()).filter(|&q| !members.contains(q)) {
        n[g.in_neighbors(q).intersection_count(members)] += 1;
    }
    n
}
