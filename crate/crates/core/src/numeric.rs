//! Numeric spectrum oracle: dense Jacobi plus exact certification.
//!
//! This path is deliberately independent of the structural clique route. The
//! Jacobi eigenvalues are only ever treated as *claims*: an integer claim
//! `lambda` with multiplicity `m` is accepted once the exact nullity of
//! `L - lambda I` (fraction-free elimination over the integers) equals `m`
//! and the claimed multiplicities account for every vertex. Anything short of
//! that is reported as numeric-only with the `certified` flag cleared.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Zero};

use crate::bareiss;
use crate::error::Error;
use crate::graph::SimpleGraph;
use crate::rat::Rat;
use crate::spectrum::LaplacianSpectrum;
use crate::Result;

/// Tunables for the numeric oracle.
#[derive(Debug, Clone)]
pub struct NumericOptions {
    /// Jacobi convergence tolerance on the largest off-diagonal entry.
    pub jacobi_tol: f64,
    /// Window within which an eigenvalue is snapped to the nearest integer.
    pub snap_tol: f64,
    /// Safety cap on Jacobi sweeps.
    pub max_sweeps: usize,
}

impl Default for NumericOptions {
    fn default() -> Self {
        NumericOptions {
            jacobi_tol: 1e-9,
            snap_tol: 1e-6,
            max_sweeps: 80,
        }
    }
}

/// Maximum graph size accepted by the numeric oracle.
pub const NUMERIC_VERTEX_BOUND: usize = 2000;

/// A numeric spectrum, exact when `certified` is set.
#[derive(Debug, Clone)]
pub struct NumericSpectrum {
    pub spectrum: LaplacianSpectrum,
    pub certified: bool,
}

/// Compute the Laplacian spectrum numerically and certify integer claims
/// exactly. Certification failure is not an error: the approximate spectrum
/// is returned with `certified = false`.
pub fn spectrum_numeric(g: &SimpleGraph, opts: &NumericOptions) -> Result<NumericSpectrum> {
    let n = g.vertex_count();
    if n > NUMERIC_VERTEX_BOUND {
        return Err(Error::SizeBound {
            what: "numeric spectrum vertex count",
            got: n,
            bound: NUMERIC_VERTEX_BOUND,
        });
    }
    if n == 0 {
        return Ok(NumericSpectrum {
            spectrum: LaplacianSpectrum::new(Vec::new())?,
            certified: true,
        });
    }
    let mut lap = vec![0.0f64; n * n];
    for u in 0..n {
        lap[u * n + u] = g.degree(u) as f64;
        for v in 0..n {
            if g.has_edge(u, v) {
                lap[u * n + v] = -1.0;
            }
        }
    }
    let Some(eigenvalues) =
        crate::jacobi::symmetric_eigenvalues(&lap, n, opts.jacobi_tol, opts.max_sweeps)
    else {
        return Err(Error::Uncertified(format!(
            "jacobi did not converge within {} sweeps",
            opts.max_sweeps
        )));
    };

    // Snap every eigenvalue to the nearest integer when close enough.
    let mut all_integers = true;
    let mut counts: Vec<(i64, usize)> = Vec::new();
    for &ev in &eigenvalues {
        let nearest = ev.round();
        if (ev - nearest).abs() <= opts.snap_tol {
            let key = nearest as i64;
            match counts.last_mut() {
                Some((k, m)) if *k == key => *m += 1,
                _ => counts.push((key, 1)),
            }
        } else {
            all_integers = false;
            break;
        }
    }

    if all_integers {
        let mut certified = counts.iter().all(|&(ev, _)| ev >= 0);
        if certified {
            for &(ev, mult) in &counts {
                if claimed_nullity(g, ev) != mult {
                    certified = false;
                    break;
                }
            }
        }
        if certified {
            let entries = counts
                .iter()
                .map(|&(ev, m)| (Rat::from_integer(BigInt::from(ev)), m))
                .collect();
            let spectrum = LaplacianSpectrum::new(entries)?;
            // Certified nullities covering every vertex pin the exact
            // spectrum; the trace identity then holds by construction.
            debug_assert_eq!(spectrum.vertex_count(), n);
            return Ok(NumericSpectrum {
                spectrum,
                certified: true,
            });
        }
    }

    uncertified(&approximate_cluster(&eigenvalues, opts))
}

/// Exact nullity of L - ev*I over the integers.
fn claimed_nullity(g: &SimpleGraph, ev: i64) -> usize {
    let n = g.vertex_count();
    let mut mat = vec![vec![BigInt::from(0); n]; n];
    for u in 0..n {
        mat[u][u] = BigInt::from(g.degree(u) as i64 - ev);
        for v in 0..n {
            if g.has_edge(u, v) {
                mat[u][v] = BigInt::from(-1);
            }
        }
    }
    bareiss::nullity(mat)
}

fn approximate_cluster(eigenvalues: &[f64], opts: &NumericOptions) -> Vec<(Rat, usize)> {
    let mut entries: Vec<(Rat, usize)> = Vec::new();
    let mut i = 0;
    while i < eigenvalues.len() {
        let mut j = i + 1;
        while j < eigenvalues.len() && (eigenvalues[j] - eigenvalues[j - 1]).abs() <= opts.snap_tol
        {
            j += 1;
        }
        let mean: f64 = eigenvalues[i..j].iter().sum::<f64>() / (j - i) as f64;
        let snapped = if mean.abs() <= opts.snap_tol { 0.0 } else { mean };
        let value = Rat::from_f64(snapped.max(0.0)).unwrap_or_else(Rat::zero);
        entries.push((value, j - i));
        i = j;
    }
    entries
}

fn uncertified(entries: &[(Rat, usize)]) -> Result<NumericSpectrum> {
    Ok(NumericSpectrum {
        spectrum: LaplacianSpectrum::new(entries.to_vec())?,
        certified: false,
    })
}
