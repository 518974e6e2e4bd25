//! Cyclic Jacobi eigensolver for real symmetric matrices.

/// Dense symmetric eigendecomposition `H = V diag(λ) Vᵀ`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Eigenvalues, unsorted.
    pub values: Vec<f64>,
    /// Row-major `n×n`; column `c` is the eigenvector of `values[c]`.
    pub vectors: Vec<f64>,
    pub n: usize,
    pub sweeps: usize,
}

impl SymmetricEigen {
    pub fn vector(&self, c: usize) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |r| self.vectors[r * self.n + c])
    }
}

/// Diagonalises the symmetric row-major matrix `a` by cyclic Jacobi sweeps.
/// Returns `Err(sweeps)` if the off-diagonal mass has not vanished after
/// `max_sweeps` sweeps.
pub fn jacobi_eigen(mut a: Vec<f64>, n: usize, max_sweeps: usize) -> Result<SymmetricEigen, usize> {
    assert_eq!(a.len(), n * n);
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let total: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut sweeps = 0;
    loop {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * total || off == 0.0 {
            break;
        }
        if sweeps == max_sweeps {
            return Err(sweeps);
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // rotation angle annihilating a[p][q]
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Ok(SymmetricEigen {
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
        n,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct_error(h: &[f64], e: &SymmetricEigen) -> f64 {
        let n = e.n;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let r: f64 = (0..n)
                    .map(|c| e.vectors[i * n + c] * e.values[c] * e.vectors[j * n + c])
                    .sum();
                worst = worst.max((r - h[i * n + j]).abs());
            }
        }
        worst
    }

    #[test]
    fn diagonal_and_2x2() {
        let e = jacobi_eigen(vec![2.0, 1.0, 1.0, 2.0], 2, 50).unwrap();
        let mut vals = e.values.clone();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-15 && (vals[1] - 3.0).abs() < 1e-15);
        let d = jacobi_eigen(vec![5.0, 0.0, 0.0, -1.0], 2, 50).unwrap();
        assert_eq!(d.sweeps, 0);
        assert_eq!(d.values, vec![5.0, -1.0]);
    }

    // KᵀK for a 6-vertex tournament with a degenerate spectrum; a library
    // QR-based solver returned a wrong eigenbasis for this matrix.
    #[test]
    fn degenerate_gram_matrix() {
        let adj = [
            [0, 0, 1, 1, 0, 1],
            [1, 0, 0, 0, 0, 1],
            [0, 1, 0, 0, 0, 1],
            [0, 1, 1, 0, 0, 0],
            [1, 1, 1, 1, 0, 0],
            [0, 0, 0, 1, 1, 0],
        ];
        let n = 6;
        let k = |a: usize, b: usize| (adj[a][b] - adj[b][a]) as f64;
        let h: Vec<f64> = (0..n * n)
            .map(|ij| (0..n).map(|c| k(c, ij / n) * k(c, ij % n)).sum())
            .collect();
        let e = jacobi_eigen(h.clone(), n, 100).unwrap();
        assert!(reconstruct_error(&h, &e) < 1e-12);
        for c1 in 0..n {
            for c2 in 0..n {
                let dot: f64 = e.vector(c1).zip(e.vector(c2)).map(|(x, y)| x * y).sum();
                let expected = if c1 == c2 { 1.0 } else { 0.0 };
                assert!((dot - expected).abs() < 1e-12);
            }
        }
    }
}
