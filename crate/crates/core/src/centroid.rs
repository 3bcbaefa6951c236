//! Cluster centroid estimation: the representative unit direction of a set
//! of signals, computed as the first principal component of the cluster
//! unioned with its negation.
//!
//! The union of a cluster with its negated points has exactly zero mean, and
//! each +/- pair contributes `2 * s s^T` to its covariance, so PC1 of the
//! union equals the dominant eigenvector of the uncentered scatter matrix
//! `M = sum s s^T` of the cluster alone. Only the scatter form is computed
//! here; the explicit union construction lives in the test oracles.

use crate::error::{Error, Result};
use crate::signal::{dot, norm, norm_floor};

/// Convergence tolerance for power iteration: deviation of the successive
/// iterate |cos| from 1.
const POWER_TOL: f64 = 1e-12;
/// Hard cap on power iteration steps.
const POWER_MAX_ITER: usize = 10_000;

/// K unit-norm direction vectors (learned features) with canonical sign.
///
/// Invariants: every centroid is unit norm to 1e-12 and canonically signed
/// (its largest-magnitude entry is positive, ties resolved at the lowest
/// index).
#[derive(Debug, Clone, PartialEq)]
pub struct CentroidBank {
    dim: usize,
    centroids: Vec<Vec<f64>>,
}

impl CentroidBank {
    /// Builds a bank from direction vectors, normalizing each to unit length
    /// and applying the canonical sign convention.
    pub fn from_directions(directions: Vec<Vec<f64>>) -> Result<Self> {
        if directions.is_empty() {
            return Err(Error::ShapeMismatch("centroid bank must not be empty".into()));
        }
        let dim = directions[0].len();
        let floor = norm_floor(dim);
        let mut centroids = Vec::with_capacity(directions.len());
        for mut d in directions {
            if d.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: d.len(),
                });
            }
            let n = norm(&d);
            if n <= floor {
                return Err(Error::DegenerateNorm { norm: n, floor });
            }
            for x in &mut d {
                *x /= n;
            }
            canonicalize_sign(&mut d);
            centroids.push(d);
        }
        Ok(Self { dim, centroids })
    }

    /// Number of centroids `K`.
    pub fn k(&self) -> usize {
        self.centroids.len()
    }

    /// Signal dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Borrow centroid `i`.
    pub fn get(&self, i: usize) -> &[f64] {
        &self.centroids[i]
    }

    /// Iterate over centroids in order.
    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.centroids.iter().map(|c| c.as_slice())
    }
}

/// Flips `v` in place so its largest-magnitude entry (lowest index on ties)
/// is positive. Resolves the inherent sign ambiguity of principal components
/// deterministically.
pub fn canonicalize_sign(v: &mut [f64]) {
    let mut arg = 0usize;
    let mut best = f64::NEG_INFINITY;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > best {
            best = x.abs();
            arg = i;
        }
    }
    if v[arg] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Representative unit direction of a cluster: the dominant eigenvector of
/// the members' uncentered scatter matrix, normalized and canonically
/// signed. Higher-amplitude members pull the direction proportionally to
/// their squared norm; degenerate members contribute (essentially) nothing
/// and need no filtering.
pub fn compute_centroid<'a, I>(members: I) -> Result<Vec<f64>>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut iter = members.into_iter().peekable();
    let first = iter.peek().ok_or(Error::EmptyCluster)?;
    let n = first.len();
    let floor = norm_floor(n);

    let mut scatter = vec![0.0; n * n];
    let mut count = 0usize;
    let mut viable = false;
    for s in iter {
        debug_assert_eq!(s.len(), n);
        count += 1;
        if norm(s) > floor {
            viable = true;
        }
        // Accumulate the upper triangle of s s^T; mirrored below.
        for i in 0..n {
            let si = s[i];
            for j in i..n {
                scatter[i * n + j] += si * s[j];
            }
        }
    }
    if !viable {
        return Err(Error::AllDegenerate { count });
    }
    for i in 0..n {
        for j in 0..i {
            scatter[i * n + j] = scatter[j * n + i];
        }
    }

    let mut v = top_eigenvector(&scatter, n)?;
    canonicalize_sign(&mut v);
    Ok(v)
}

/// Dominant eigenvector of a symmetric positive semi-definite `n x n` matrix
/// (row-major), by power iteration.
///
/// The start vector is the normalized column of `m` with the largest norm,
/// which cannot lie in the kernel of a PSD matrix. Iteration stops when the
/// successive-iterate |cos| deviates from 1 by at most 1e-12, or after
/// 10 000 steps (a flat spectrum makes the direction ill-defined; the fixed
/// point reached from the deterministic start is returned).
pub fn top_eigenvector(m: &[f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(m.len(), n * n, "matrix buffer must be n*n");
    let frobenius = norm(m);
    let floor = norm_floor(n);
    if frobenius <= floor * floor {
        return Err(Error::ZeroMatrix { frobenius });
    }

    // Deterministic start: the column with the largest norm.
    let mut start_col = 0usize;
    let mut best = f64::NEG_INFINITY;
    for j in 0..n {
        let cn: f64 = (0..n).map(|i| m[i * n + j] * m[i * n + j]).sum();
        if cn > best {
            best = cn;
            start_col = j;
        }
    }
    let mut v: Vec<f64> = (0..n).map(|i| m[i * n + start_col]).collect();
    let vn = norm(&v);
    for x in &mut v {
        *x /= vn;
    }

    let mut next = vec![0.0; n];
    for _ in 0..POWER_MAX_ITER {
        matvec(m, n, &v, &mut next);
        let nn = norm(&next);
        if nn <= floor {
            // Start vector annihilated despite the PSD guard; fall back to
            // the current iterate rather than divide by zero.
            return Ok(v);
        }
        for x in &mut next {
            *x /= nn;
        }
        let c = dot(&v, &next).abs();
        std::mem::swap(&mut v, &mut next);
        if 1.0 - c <= POWER_TOL {
            break;
        }
    }
    Ok(v)
}

fn matvec(m: &[f64], n: usize, v: &[f64], out: &mut [f64]) {
    for (i, o) in out.iter_mut().enumerate() {
        *o = dot(&m[i * n..(i + 1) * n], v);
    }
}
