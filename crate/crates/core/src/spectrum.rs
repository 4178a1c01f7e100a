//! Exact Laplacian spectra and Laplacian energy.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::graph::CliqueDecomposition;
use crate::rat::Rat;
use crate::Result;

/// Multiset of exact rational Laplacian eigenvalues, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianSpectrum {
    entries: Vec<(Rat, usize)>,
}

impl LaplacianSpectrum {
    /// Merge, sort and validate entries (eigenvalues must be >= 0 and
    /// multiplicities positive).
    pub fn new(entries: Vec<(Rat, usize)>) -> Result<Self> {
        let mut merged: BTreeMap<Rat, usize> = BTreeMap::new();
        for (value, mult) in entries {
            if mult == 0 {
                return Err(Error::InconsistentSpectrum("zero multiplicity".into()));
            }
            if value.is_negative() {
                return Err(Error::InconsistentSpectrum(format!(
                    "negative eigenvalue {value}"
                )));
            }
            *merged.entry(value).or_insert(0) += mult;
        }
        Ok(LaplacianSpectrum {
            entries: merged.into_iter().collect(),
        })
    }

    pub fn entries(&self) -> &[(Rat, usize)] {
        &self.entries
    }

    pub fn vertex_count(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Sum of eigenvalues with multiplicity; equals 2|E| for a Laplacian.
    pub fn trace(&self) -> Rat {
        let mut acc = Rat::zero();
        for (value, mult) in &self.entries {
            acc += value * Rat::from_integer(BigInt::from(*mult));
        }
        acc
    }

    /// Multiplicity of the eigenvalue 0 (the number of components).
    pub fn zero_multiplicity(&self) -> usize {
        self.entries
            .first()
            .filter(|(v, _)| v.is_zero())
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// True iff every eigenvalue is an integer.
    pub fn is_l_integral(&self) -> bool {
        self.entries
            .iter()
            .all(|(v, _)| v.denom() == &BigInt::from(1))
    }

    /// "0^1 8^5 12^4 14^4" rendering (integer eigenvalues print bare).
    pub fn display_compact(&self) -> String {
        self.entries
            .iter()
            .map(|(v, m)| {
                let base = if v.denom() == &BigInt::from(1) {
                    v.numer().to_string()
                } else {
                    format!("{}/{}", v.numer(), v.denom())
                };
                format!("{base}^{m}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Laplacian spectrum of the complement of a disjoint clique union on `n`
/// vertices: {0} + {n^(c-1)} + {(n - a_i)^(a_i - 1)} over cliques a_i.
pub fn spectrum_from_cliques(d: &CliqueDecomposition, n: usize) -> Result<LaplacianSpectrum> {
    if d.vertex_count() != n {
        return Err(Error::InconsistentSpectrum(format!(
            "clique sizes sum to {}, not {n}",
            d.vertex_count()
        )));
    }
    if n == 0 {
        return LaplacianSpectrum::new(Vec::new());
    }
    let mut entries: Vec<(Rat, usize)> = vec![(Rat::zero(), 1)];
    let c = d.clique_count();
    if c > 1 {
        entries.push((Rat::from_integer(BigInt::from(n)), c - 1));
    }
    for &a in d.sizes() {
        if a > 1 {
            entries.push((Rat::from_integer(BigInt::from(n - a)), a - 1));
        }
    }
    LaplacianSpectrum::new(entries)
}

/// Exact Laplacian energy: sum of mult * |mu - 2E/V| over the spectrum.
/// The spectrum is cross-checked against the supplied edge and vertex counts
/// before anything is summed.
pub fn laplacian_energy(s: &LaplacianSpectrum, edges: usize, vertices: usize) -> Result<Rat> {
    if vertices == 0 {
        return Err(Error::InconsistentSpectrum("graph has no vertices".into()));
    }
    if s.vertex_count() != vertices {
        return Err(Error::InconsistentSpectrum(format!(
            "multiplicities sum to {}, not {vertices}",
            s.vertex_count()
        )));
    }
    let two_e = Rat::from_integer(BigInt::from(2 * edges));
    if s.trace() != two_e {
        return Err(Error::InconsistentSpectrum(format!(
            "trace {} != 2|E| = {}",
            s.trace(),
            two_e
        )));
    }
    match s.entries().first() {
        Some((v, _)) if v.is_zero() => {}
        _ => {
            return Err(Error::InconsistentSpectrum(
                "smallest eigenvalue is not zero".into(),
            ))
        }
    }
    let mean = two_e / Rat::from_integer(BigInt::from(vertices));
    let mut energy = Rat::zero();
    for (value, mult) in s.entries() {
        energy += (value - &mean).abs() * Rat::from_integer(BigInt::from(*mult));
    }
    Ok(energy)
}
