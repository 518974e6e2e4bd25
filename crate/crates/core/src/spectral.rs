//! Spectrum of the Seidel matrix `S = i(A - Aᵀ)` of a digraph.
//!
//! `S` is Hermitian, so its eigenvalues are real, and because `Sᵀ = -S` they
//! come in pairs `±θ`. We never form `S`. All spectral work goes through the
//! real skew-symmetric matrix `K = A - Aᵀ`:
//!
//! * the eigenvalues of the real symmetric positive-semidefinite matrix
//!   `H = KᵀK = S²` are the squares `θ²`, each nonzero one repeated `2·m_θ`
//!   times;
//! * the projector `E_θ` is the Lagrange interpolation polynomial
//!   `∏_{τ≠θ} (S - τI)/(θ - τ)`. Grouping the factors for `±τ` gives
//!   `(H - τ²I)/(θ² - τ²)`, so `E_θ = P_{θ²} (S + θI)/(2θ)` for `θ ≠ 0` and
//!   `E_0 = P_0`, where `P_μ` interpolates `H` at its distinct eigenvalues.
//!
//! The interpolation form is exact in exact arithmetic but loses accuracy in
//! floating point once there are many distinct eigenvalues, so spectra
//! computed by [`spectrum`] carry an orthonormal eigenbasis of `H` and apply
//! `P_μ` as an orthogonal projection. [`project_interpolated`] keeps the
//! interpolation route available as an independent check.
//!
//! The main angle of `θ` is `β_θ = ‖E_θ 1‖ / √v` and the main eigenvalues are
//! those with `β_θ` above [`MAIN_ANGLE_TOL`].

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::digraph::Digraph;
use crate::linalg::jacobi_eigen;

/// Relative tolerance for merging numerically equal eigenvalues; scaled by
/// `max(1, spectral radius)`.
pub const GROUPING_TOL: f64 = 1e-7;

/// Main angles at or below this value count as zero.
pub const MAIN_ANGLE_TOL: f64 = 1e-7;

const MAX_JACOBI_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("vector has length {found}, digraph has {expected} vertices")]
    Dimension { expected: usize, found: usize },
    #[error("symmetric eigensolver did not converge within {sweeps} Jacobi sweeps")]
    NoConvergence { sweeps: usize },
    #[error("eigenvalue {value} of the Seidel matrix has no partner -{value} (numerical failure)")]
    Unpaired { value: f64 },
    #[error("no main eigenvalue found (numerical failure)")]
    NoMainEigenvalue,
}

/// A complex vector stored as separate real and imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl ComplexVector {
    pub fn real(re: Vec<f64>) -> Self {
        let im = vec![0.0; re.len()];
        Self { re, im }
    }

    pub fn len(&self) -> usize {
        self.re.len()
    }

    pub fn is_empty(&self) -> bool {
        self.re.is_empty()
    }

    pub fn norm_sq(&self) -> f64 {
        self.re.iter().chain(&self.im).map(|x| x * x).sum()
    }

    fn axpby(&self, a: f64, other: &ComplexVector, b: f64) -> ComplexVector {
        let lin = |x: &[f64], y: &[f64]| x.iter().zip(y).map(|(p, q)| a * p + b * q).collect();
        ComplexVector {
            re: lin(&self.re, &other.re),
            im: lin(&self.im, &other.im),
        }
    }
}

/// A set of vertices; its characteristic vector is the `χ` of the quadratic
/// forms below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet(BitSet);

impl VertexSet {
    pub fn new(v: usize, members: impl IntoIterator<Item = usize>) -> Self {
        Self(BitSet::from_indices(v, members))
    }

    pub fn all(v: usize) -> Self {
        Self(BitSet::full(v))
    }

    pub fn size(&self) -> usize {
        self.0.count()
    }

    pub fn bits(&self) -> &BitSet {
        &self.0
    }

    pub fn characteristic(&self) -> Vec<f64> {
        (0..self.0.universe())
            .map(|i| if self.0.contains(i) { 1.0 } else { 0.0 })
            .collect()
    }
}

impl From<BitSet> for VertexSet {
    fn from(b: BitSet) -> Self {
        Self(b)
    }
}

/// `K x` for `K = A - Aᵀ`.
pub fn skew_action(g: &Digraph, x: &[f64]) -> Vec<f64> {
    (0..g.v())
        .map(|a| {
            let plus: f64 = g.out_neighbors(a).iter().map(|b| x[b]).sum();
            let minus: f64 = g.in_neighbors(a).iter().map(|b| x[b]).sum();
            plus - minus
        })
        .collect()
}

/// `S x` with `S = i(A - Aᵀ)`: `S(p + iq) = -Kq + iKp`.
pub fn seidel_action(g: &Digraph, x: &ComplexVector) -> Result<ComplexVector, SpectralError> {
    check_len(g, x.len())?;
    let kre = skew_action(g, &x.re);
    let kim = skew_action(g, &x.im);
    Ok(ComplexVector {
        re: kim.into_iter().map(|t| -t).collect(),
        im: kre,
    })
}

fn check_len(g: &Digraph, found: usize) -> Result<(), SpectralError> {
    if found == g.v() {
        Ok(())
    } else {
        Err(SpectralError::Dimension { expected: g.v(), found })
    }
}

/// One distinct eigenvalue of the Seidel matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    pub main_angle: f64,
    pub is_main: bool,
}

/// Distinct Seidel eigenvalues in descending order with multiplicities and
/// main angles.
#[derive(Debug, Clone)]
pub struct SeidelSpectrum {
    v: usize,
    entries: Vec<SpectrumEntry>,
    basis: Option<Arc<Eigenbasis>>,
}

impl PartialEq for SeidelSpectrum {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.entries == other.entries
    }
}

/// Orthonormal eigenvectors of `H = KᵀK`, grouped by distinct eigenvalue
/// (same order as [`SeidelSpectrum::squares`]).
#[derive(Debug)]
struct Eigenbasis {
    groups: Vec<Vec<Vec<f64>>>,
}

impl SeidelSpectrum {
    /// Assembles a spectrum from known data. Entries are sorted descending.
    pub fn from_entries(v: usize, mut entries: Vec<SpectrumEntry>) -> Self {
        entries.sort_by(|a, b| b.eigenvalue.total_cmp(&a.eigenvalue));
        Self {
            v,
            entries,
            basis: None,
        }
    }

    /// The spectrum shared by every doubly regular tournament on `v`
    /// vertices: `±√v` with multiplicity `(v-1)/2` each and a simple, main
    /// eigenvalue 0.
    pub fn doubly_regular(v: usize) -> Self {
        let r = (v as f64).sqrt();
        let half = (v - 1) / 2;
        let entry = |eigenvalue, multiplicity, main_angle: f64| SpectrumEntry {
            eigenvalue,
            multiplicity,
            main_angle,
            is_main: main_angle > MAIN_ANGLE_TOL,
        };
        Self::from_entries(v, vec![entry(r, half, 0.0), entry(0.0, 1, 1.0), entry(-r, half, 0.0)])
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// All `v` eigenvalues, descending, repeated by multiplicity.
    pub fn expanded(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.eigenvalue, e.multiplicity))
            .collect()
    }

    pub fn theta_max(&self) -> f64 {
        self.entries[0].eigenvalue
    }

    pub fn spectral_radius(&self) -> f64 {
        self.theta_max().abs()
    }

    pub fn main_eigenvalues(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().filter(|e| e.is_main).map(|e| e.eigenvalue)
    }

    pub fn non_main_eigenvalues(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().filter(|e| !e.is_main).map(|e| e.eigenvalue)
    }

    /// Largest main eigenvalue.
    pub fn alpha(&self) -> f64 {
        self.main_eigenvalues().next().expect("main set is nonempty")
    }

    /// Largest non-main eigenvalue, if there is one.
    pub fn gamma(&self) -> Option<f64> {
        self.non_main_eigenvalues().next()
    }

    pub fn angle_sum_sq(&self) -> f64 {
        self.entries.iter().map(|e| e.main_angle * e.main_angle).sum()
    }

    /// Distinct eigenvalues of `H = S²`, one per `±θ` pair, descending.
    fn squares(&self) -> Vec<f64> {
        self.entries
            .iter()
            .filter(|e| e.eigenvalue >= 0.0)
            .map(|e| e.eigenvalue * e.eigenvalue)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.entries).expect("spectrum serialises")
    }
}

fn skew_gram(g: &Digraph) -> Vec<f64> {
    let v = g.v();
    let k: Vec<f64> = (0..v * v)
        .map(|ab| {
            let (a, b) = (ab / v, ab % v);
            f64::from(u8::from(g.has_edge(a, b))) - f64::from(u8::from(g.has_edge(b, a)))
        })
        .collect();
    let mut h = vec![0.0; v * v];
    for a in 0..v {
        for b in a..v {
            let dot: f64 = (0..v).map(|c| k[c * v + a] * k[c * v + b]).sum();
            h[a * v + b] = dot;
            h[b * v + a] = dot;
        }
    }
    h
}

/// Computes the Seidel spectrum and main angles of `g`.
pub fn spectrum(g: &Digraph) -> Result<SeidelSpectrum, SpectralError> {
    let v = g.v();
    let eig =
        jacobi_eigen(skew_gram(g), v, MAX_JACOBI_SWEEPS).map_err(|sweeps| SpectralError::NoConvergence { sweeps })?;

    // columns sorted by descending |θ|
    let mut order: Vec<(f64, usize)> = eig
        .values
        .iter()
        .enumerate()
        .map(|(c, &mu)| (mu.max(0.0).sqrt(), c))
        .collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let radius = order.first().map_or(0.0, |o| o.0);
    let tol = GROUPING_TOL * radius.max(1.0);

    // (sum of |θ|, columns) per group of numerically equal values
    let mut groups: Vec<(f64, Vec<usize>)> = Vec::new();
    for &(t, c) in &order {
        match groups.last_mut() {
            Some((sum, cols)) if (*sum / cols.len() as f64 - t).abs() <= tol => {
                *sum += t;
                cols.push(c);
            }
            _ => groups.push((t, vec![c])),
        }
    }

    let mut entries = Vec::new();
    let mut basis = Vec::new();
    let mut zero_cols = Vec::new();
    for (sum, cols) in groups {
        let n = cols.len();
        let value = sum / n as f64;
        if value <= tol {
            zero_cols.extend(cols);
            continue;
        }
        if n % 2 == 1 {
            return Err(SpectralError::Unpaired { value });
        }
        for sign in [1.0, -1.0] {
            entries.push(SpectrumEntry {
                eigenvalue: sign * value,
                multiplicity: n / 2,
                main_angle: 0.0,
                is_main: false,
            });
        }
        basis.push(cols.iter().map(|&c| eig.vector(c).collect()).collect());
    }
    if !zero_cols.is_empty() {
        entries.push(SpectrumEntry {
            eigenvalue: 0.0,
            multiplicity: zero_cols.len(),
            main_angle: 0.0,
            is_main: false,
        });
        basis.push(zero_cols.iter().map(|&c| eig.vector(c).collect()).collect());
    }
    let mut spec = SeidelSpectrum::from_entries(v, entries);
    spec.basis = Some(Arc::new(Eigenbasis { groups: basis }));

    let ones = ComplexVector::real(vec![1.0; v]);
    let norm = (v as f64).sqrt();
    for i in 0..spec.entries.len() {
        let w = project(g, &spec, i, &ones)?;
        let beta = w.norm_sq().sqrt() / norm;
        spec.entries[i].main_angle = beta;
        spec.entries[i].is_main = beta > MAIN_ANGLE_TOL;
    }
    if spec.main_eigenvalues().next().is_none() {
        return Err(SpectralError::NoMainEigenvalue);
    }
    Ok(spec)
}

impl SeidelSpectrum {
    fn square_index(&self, index: usize) -> usize {
        let mu = self.entries[index].eigenvalue.powi(2);
        self.squares()
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - mu).abs().total_cmp(&(b.1 - mu).abs()))
            .map(|(i, _)| i)
            .expect("spectrum is nonempty")
    }
}

/// Splits `P_{θ²} x` into `E_θ x = P_{θ²}(S + θI)x / (2θ)`.
fn split_pair(g: &Digraph, theta: f64, w: ComplexVector) -> Result<ComplexVector, SpectralError> {
    if theta == 0.0 {
        return Ok(w);
    }
    let sw = seidel_action(g, &w)?;
    Ok(sw.axpby(0.5 / theta, &w, 0.5))
}

/// `E_θ x` for the eigenvalue `spec.entries()[index]`.
///
/// Uses the stored eigenbasis when `spec` came from [`spectrum`] and falls
/// back to [`project_interpolated`] for spectra assembled by hand.
pub fn project(
    g: &Digraph,
    spec: &SeidelSpectrum,
    index: usize,
    x: &ComplexVector,
) -> Result<ComplexVector, SpectralError> {
    check_len(g, x.len())?;
    let Some(basis) = &spec.basis else {
        return project_interpolated(g, spec, index, x);
    };
    let group = &basis.groups[spec.square_index(index)];
    let mut w = ComplexVector::real(vec![0.0; g.v()]);
    for u in group {
        let cre: f64 = u.iter().zip(&x.re).map(|(a, b)| a * b).sum();
        let cim: f64 = u.iter().zip(&x.im).map(|(a, b)| a * b).sum();
        for (i, ui) in u.iter().enumerate() {
            w.re[i] += cre * ui;
            w.im[i] += cim * ui;
        }
    }
    split_pair(g, spec.entries[index].eigenvalue, w)
}

/// `E_θ x` for the eigenvalue `spec.entries()[index]`, evaluated as the
/// Lagrange interpolation polynomial in `S` applied to `x` by repeated
/// [`seidel_action`].
///
/// Accurate to about `1e-10` while the spectrum has at most a dozen or so
/// distinct values; rounding error grows with the product of eigenvalue
/// ratios beyond that.
pub fn project_interpolated(
    g: &Digraph,
    spec: &SeidelSpectrum,
    index: usize,
    x: &ComplexVector,
) -> Result<ComplexVector, SpectralError> {
    check_len(g, x.len())?;
    let theta = spec.entries[index].eigenvalue;
    let mu = theta * theta;
    let squares = spec.squares();
    let own = spec.square_index(index);

    let mut w = x.clone();
    for (j, &nu) in squares.iter().enumerate() {
        if j == own {
            continue;
        }
        let hw = seidel_action(g, &seidel_action(g, &w)?)?;
        w = hw.axpby(1.0 / (mu - nu), &w, -nu / (mu - nu));
    }
    split_pair(g, theta, w)
}

/// `χᵀ F_G χ = Σ_{θ main} ‖E_θ χ‖²`.
pub fn quadratic_form_f(g: &Digraph, spec: &SeidelSpectrum, set: &VertexSet) -> Result<f64, SpectralError> {
    check_len(g, set.bits().universe())?;
    if set.size() == 0 {
        return Ok(0.0);
    }
    let chi = ComplexVector::real(set.characteristic());
    let mut total = 0.0;
    for (i, e) in spec.entries.iter().enumerate() {
        if e.is_main {
            total += project(g, spec, i, &chi)?.norm_sq();
        }
    }
    Ok(total)
}

/// `χᵀ S S* χ = ‖K χ‖²`, an integer.
pub fn quadratic_form_ss(g: &Digraph, set: &VertexSet) -> Result<u64, SpectralError> {
    check_len(g, set.bits().universe())?;
    let members = set.bits();
    Ok((0..g.v())
        .map(|a| {
            let plus = g.out_neighbors(a).intersection_count(members) as i64;
            let minus = g.in_neighbors(a).intersection_count(members) as i64;
            ((plus - minus) * (plus - minus)) as u64
        })
        .sum())
}
