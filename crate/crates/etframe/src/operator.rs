//! Dense real symmetric operators with a deterministic eigendecomposition.

use nalgebra::{DMatrix, DVector};

use crate::config::ToleranceConfig;
use crate::error::{Error, Result};

/// A real symmetric `dim x dim` matrix. Entries are symmetrized on
/// construction, so `entries[(i, j)] == entries[(j, i)]` holds exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricOperator {
    dim: usize,
    entries: DMatrix<f64>,
}

impl SymmetricOperator {
    /// Symmetrize a square matrix into an operator. Fails on non-square or
    /// empty input.
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows != cols {
            return Err(Error::InvalidInput(format!(
                "matrix must be square, got {rows}x{cols}"
            )));
        }
        if rows == 0 {
            return Err(Error::InvalidInput("matrix dimension must be >= 1".into()));
        }
        let mut entries = DMatrix::zeros(rows, rows);
        for i in 0..rows {
            for j in i..rows {
                let v = 0.5 * (matrix[(i, j)] + matrix[(j, i)]);
                entries[(i, j)] = v;
                entries[(j, i)] = v;
            }
        }
        Ok(SymmetricOperator { dim: rows, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(
                "rows must form a non-empty square matrix".into(),
            ));
        }
        let flat: Vec<f64> = rows.iter().flatten().copied().collect();
        SymmetricOperator::new(DMatrix::from_row_slice(n, n, &flat))
    }

    pub fn diagonal(values: &[f64]) -> Self {
        assert!(!values.is_empty(), "diagonal needs at least one entry");
        let n = values.len();
        SymmetricOperator {
            dim: n,
            entries: DMatrix::from_fn(n, n, |i, j| if i == j { values[i] } else { 0.0 }),
        }
    }

    pub fn identity(dim: usize) -> Self {
        assert!(dim >= 1);
        SymmetricOperator {
            dim,
            entries: DMatrix::identity(dim, dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1);
        SymmetricOperator {
            dim,
            entries: DMatrix::zeros(dim, dim),
        }
    }

    /// Rank-one operator `x (x .)`, i.e. the outer product of `x` with itself.
    /// When `x` is a unit vector the result is a rank-one projection.
    pub fn outer(x: &DVector<f64>) -> Self {
        let n = x.len();
        assert!(n >= 1, "outer product needs a non-empty vector");
        let mut entries = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = x[i] * x[j];
                entries[(i, j)] = v;
                entries[(j, i)] = v;
            }
        }
        SymmetricOperator { dim: n, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entries[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.norm()
    }

    pub fn apply(&self, v: &DVector<f64>) -> DVector<f64> {
        &self.entries * v
    }

    pub fn scale(&self, c: f64) -> Self {
        SymmetricOperator {
            dim: self.dim,
            entries: &self.entries * c,
        }
    }

    /// Entry-wise sum; symmetry is preserved exactly.
    pub fn add(&self, other: &SymmetricOperator) -> SymmetricOperator {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SymmetricOperator {
            dim: self.dim,
            entries: &self.entries + &other.entries,
        }
    }

    /// Entry-wise difference; symmetry is preserved exactly.
    pub fn sub(&self, other: &SymmetricOperator) -> SymmetricOperator {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SymmetricOperator {
            dim: self.dim,
            entries: &self.entries - &other.entries,
        }
    }

    fn check_finite(&self) -> Result<()> {
        if self.entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(
                "matrix has non-finite entries".into(),
            ));
        }
        Ok(())
    }

    /// Eigendecomposition with eigenvalues in non-increasing order and a fixed
    /// sign convention: each eigenvector's entry of largest magnitude is
    /// positive, ties broken by lowest index. Deterministic for identical
    /// input.
    pub fn eig(&self) -> Result<EigenSystem> {
        self.check_finite()?;
        let sym = self
            .entries
            .clone()
            .try_symmetric_eigen(f64::EPSILON, 10_000)
            .ok_or_else(|| Error::Internal("eigendecomposition did not converge".into()))?;

        let n = self.dim;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            sym.eigenvalues[b]
                .partial_cmp(&sym.eigenvalues[a])
                .expect("finite eigenvalues")
        });

        let mut values = Vec::with_capacity(n);
        let mut vectors = DMatrix::zeros(n, n);
        for (slot, &src) in order.iter().enumerate() {
            values.push(sym.eigenvalues[src]);
            let col = sym.eigenvectors.column(src);
            let mut best = 0;
            for i in 1..n {
                if col[i].abs() > col[best].abs() {
                    best = i;
                }
            }
            let flip = if col[best] < 0.0 { -1.0 } else { 1.0 };
            for i in 0..n {
                vectors[(i, slot)] = flip * col[i];
            }
        }
        Ok(EigenSystem { values, vectors })
    }

    /// The `n`-th largest eigenvalue counting multiplicity (1-based).
    pub fn mu(&self, n: usize) -> Result<f64> {
        if n < 1 || n > self.dim {
            return Err(Error::InvalidInput(format!(
                "eigenvalue index {n} out of range 1..={}",
                self.dim
            )));
        }
        Ok(self.eig()?.values[n - 1])
    }

    /// Numerical rank: eigenvalues with magnitude above
    /// `tol_rank * max(1, spectral radius)`.
    pub fn rank_eps(&self, cfg: &ToleranceConfig) -> Result<usize> {
        Ok(self.eig()?.rank_eps(cfg))
    }

    /// Spectral norm, i.e. the largest eigenvalue magnitude.
    pub fn spectral_norm(&self) -> Result<f64> {
        Ok(self.eig()?.spectral_radius())
    }

    /// Whether the operator is idempotent within `tol_recon`, relative to its
    /// Frobenius norm.
    pub fn is_projection(&self, cfg: &ToleranceConfig) -> bool {
        let squared = &self.entries * &self.entries;
        let residual = (&squared - &self.entries).norm();
        residual <= cfg.tol_recon * self.frobenius_norm().max(1.0)
    }

    /// Zero out eigenvalues in `[-tol_psd * max(1, spectral radius), 0)` and
    /// reconstruct. Rejects genuinely indefinite operators.
    pub fn psd_clamp(&self, cfg: &ToleranceConfig) -> Result<SymmetricOperator> {
        let es = self.eig()?;
        let floor = -cfg.tol_psd * es.spectral_radius().max(1.0);
        let min = *es.values.last().expect("dim >= 1");
        if min < floor {
            return Err(Error::NotPsd(format!(
                "eigenvalue {min:.3e} below tolerance {floor:.3e}"
            )));
        }
        let clamped: Vec<f64> = es
            .values
            .iter()
            .map(|&v| if v < 0.0 { 0.0 } else { v })
            .collect();
        Ok(es.reconstruct_with(&clamped))
    }

    /// Inverse square root of a positive definite operator, computed through
    /// the eigendecomposition.
    pub fn inv_sqrt(&self, cfg: &ToleranceConfig) -> Result<SymmetricOperator> {
        let es = self.eig()?;
        let min = *es.values.last().expect("dim >= 1");
        if min <= cfg.tol_psd {
            return Err(Error::NotInvertible(format!(
                "eigenvalue {min:.3e} not above tolerance {:.3e}",
                cfg.tol_psd
            )));
        }
        let mapped: Vec<f64> = es.values.iter().map(|&v| 1.0 / v.sqrt()).collect();
        Ok(es.reconstruct_with(&mapped))
    }
}

/// Result of [`SymmetricOperator::eig`]: eigenvalues in non-increasing order
/// paired with orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    values: Vec<f64>,
    vectors: DMatrix<f64>,
}

impl EigenSystem {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &DMatrix<f64> {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> DVector<f64> {
        self.vectors.column(i).clone_owned()
    }

    pub fn spectral_radius(&self) -> f64 {
        let top = self.values.first().map_or(0.0, |v| v.abs());
        let bottom = self.values.last().map_or(0.0, |v| v.abs());
        top.max(bottom)
    }

    pub fn rank_eps(&self, cfg: &ToleranceConfig) -> usize {
        let threshold = cfg.tol_rank * self.spectral_radius().max(1.0);
        self.values.iter().filter(|v| v.abs() > threshold).count()
    }

    /// Sum of `values[i] * v_i (v_i .)` over all eigenpairs.
    pub fn reconstruct(&self) -> SymmetricOperator {
        self.reconstruct_with(&self.values)
    }

    /// Reconstruct with replacement eigenvalues on the same eigenvectors.
    pub fn reconstruct_with(&self, values: &[f64]) -> SymmetricOperator {
        let n = self.dim();
        assert_eq!(values.len(), n);
        let mut entries = DMatrix::zeros(n, n);
        for (slot, &lambda) in values.iter().enumerate() {
            if lambda == 0.0 {
                continue;
            }
            let col = self.vectors.column(slot);
            for i in 0..n {
                for j in i..n {
                    entries[(i, j)] += lambda * col[i] * col[j];
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                entries[(j, i)] = entries[(i, j)];
            }
        }
        SymmetricOperator { dim: n, entries }
    }

    /// Frobenius distance between the Gram matrix of the eigenvectors and the
    /// identity.
    pub fn orthonormality_residual(&self) -> f64 {
        let n = self.dim();
        let gram = self.vectors.transpose() * &self.vectors;
        (gram - DMatrix::identity(n, n)).norm()
    }
}
