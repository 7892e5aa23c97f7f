use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical tolerances used across the crate.
///
/// `tol_rank` and `tol_psd` are relative to the spectral radius of the
/// operator under test; `tol_bisect` bounds the bracket width of the angle
/// parameter in the case-2 root search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub tol_rank: f64,
    pub tol_psd: f64,
    pub tol_recon: f64,
    pub tol_orth: f64,
    pub tol_bisect: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            tol_rank: 1e-9,
            tol_psd: 1e-9,
            tol_recon: 1e-8,
            tol_orth: 1e-10,
            tol_bisect: 1e-13,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("tol_rank", self.tol_rank),
            ("tol_psd", self.tol_psd),
            ("tol_recon", self.tol_recon),
            ("tol_orth", self.tol_orth),
            ("tol_bisect", self.tol_bisect),
        ];
        for (name, value) in fields {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "{name} must be strictly positive, got {value}"
                )));
            }
        }
        Ok(())
    }
}
