//! Signal containers: an ordered set of equal-length real vectors with
//! optional integer labels.

use crate::error::{Error, Result};

/// Norm threshold below which a vector of dimension `n` is treated as
/// directionless. Scaled by `sqrt(n)` so that high-dimensional vectors with
/// tiny per-sample values are not falsely flagged.
pub fn norm_floor(n: usize) -> f64 {
    1e-12 * (n as f64).sqrt()
}

/// Euclidean norm of a vector.
pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Inner product of two equal-length vectors.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// An ordered collection of `N` signals of common dimension `n`, stored
/// row-major, with optional per-signal integer labels.
///
/// Invariants enforced at construction: `n >= 2`, every entry finite, all
/// rows of equal length.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalSet {
    dim: usize,
    data: Vec<f64>,
    labels: Option<Vec<i64>>,
}

impl SignalSet {
    /// Builds a set from row vectors.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::ShapeMismatch("signal set must not be empty".into()));
        }
        let dim = rows[0].len();
        if dim < 2 {
            return Err(Error::ShapeMismatch(format!(
                "signals must have dimension >= 2, found {dim}"
            )));
        }
        let mut data = Vec::with_capacity(rows.len() * dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            if let Some(bad) = row.iter().find(|x| !x.is_finite()) {
                return Err(Error::ShapeMismatch(format!(
                    "non-finite value {bad} in signal {i}"
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            dim,
            data,
            labels: None,
        })
    }

    /// Builds a set from a flat row-major buffer of `count * dim` values.
    pub fn from_flat(dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::ShapeMismatch(format!(
                "signals must have dimension >= 2, found {dim}"
            )));
        }
        if data.is_empty() || data.len() % dim != 0 {
            return Err(Error::ShapeMismatch(format!(
                "flat buffer of {} values is not a multiple of dimension {dim}",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|x| !x.is_finite()) {
            return Err(Error::ShapeMismatch(format!("non-finite value {bad}")));
        }
        Ok(Self {
            dim,
            data,
            labels: None,
        })
    }

    /// Attaches one label per signal (e.g. ground-truth classes, 0 meaning
    /// background).
    pub fn with_labels(mut self, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: labels.len(),
                right: self.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Number of signals.
    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    /// True when the set holds no signals (construction forbids this; kept
    /// for API completeness).
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Common signal dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Borrow signal `j`.
    pub fn row(&self, j: usize) -> &[f64] {
        &self.data[j * self.dim..(j + 1) * self.dim]
    }

    /// Iterate over signals in order.
    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim)
    }

    /// Optional per-signal labels.
    pub fn labels(&self) -> Option<&[i64]> {
        self.labels.as_deref()
    }

    /// Degeneracy floor for this set's dimension.
    pub fn norm_floor(&self) -> f64 {
        norm_floor(self.dim)
    }

    /// Returns a copy with the signs of the listed signals flipped.
    pub fn with_flipped_signs(&self, indices: &[usize]) -> Self {
        let mut out = self.clone();
        for &j in indices {
            for x in &mut out.data[j * out.dim..(j + 1) * out.dim] {
                *x = -*x;
            }
        }
        out
    }
}
