//! Adjacency spectra of small dense graphs (cyclic Jacobi eigensolver) and
//! the spectrum identity for wreath products with a cocomplete inner factor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ring::FiniteCommRing;
use crate::ring_graphs::{ring_cayley, CertVerdict, RingPrimalityCertificate};

/// Vertex-count cap for the dense eigensolver.
pub const MAX_SPECTRUM_SIZE: usize = 256;

/// Off-diagonal Frobenius norm the Jacobi iteration must reach.
pub const SOLVER_RESIDUAL: f64 = 1e-9;

/// Absolute tolerance for grouping floating-point eigenvalues into
/// multiplicity classes (far above the solver residual, far below the gaps
/// in the small integer-ish spectra this crate produces).
pub const GROUPING_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenvalueEntry {
    pub value: f64,
    pub multiplicity: usize,
}

/// A real spectrum as eigenvalue/multiplicity pairs, sorted descending.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spectrum {
    pub eigenvalues: Vec<EigenvalueEntry>,
}

impl Spectrum {
    /// Group raw values at the standard tolerance and sort descending.
    pub fn from_values(mut values: Vec<f64>) -> Spectrum {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let mut eigenvalues: Vec<EigenvalueEntry> = Vec::new();
        for v in values {
            match eigenvalues.last_mut() {
                Some(last) if (last.value - v).abs() <= GROUPING_TOLERANCE => {
                    last.multiplicity += 1;
                }
                _ => eigenvalues.push(EigenvalueEntry {
                    value: v,
                    multiplicity: 1,
                }),
            }
        }
        Spectrum { eigenvalues }
    }

    pub fn total_multiplicity(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    /// Flat value list, multiplicities expanded, descending.
    pub fn expanded(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat(e.value).take(e.multiplicity))
            .collect()
    }

    pub fn multiplicity_of(&self, value: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|e| (e.value - value).abs() <= GROUPING_TOLERANCE)
            .map(|e| e.multiplicity)
            .sum()
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().map(|e| e.value)
    }

    /// Multiset equality at the given per-eigenvalue tolerance.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        let a = self.expanded();
        let b = other.expanded();
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
    }
}

/// Eigenvalues of the symmetric 0/1 adjacency matrix, by cyclic Jacobi
/// sweeps down to an off-diagonal Frobenius norm of 1e-9.
pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.n();
    if n > MAX_SPECTRUM_SIZE {
        return Err(Error::CapExceeded {
            what: "spectrum vertex count",
            size: n,
            cap: MAX_SPECTRUM_SIZE,
        });
    }
    let mut a = vec![0.0f64; n * n];
    for u in 0..n {
        for v in 0..n {
            if g.has_edge(u, v) {
                a[u * n + v] = 1.0;
            }
        }
    }
    jacobi_eigenvalues(&mut a, n)?;
    let values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let spectrum = Spectrum::from_values(values);
    debug_assert!(
        spectrum.expanded().iter().sum::<f64>().abs() <= 1e-6,
        "adjacency matrices are traceless"
    );
    Ok(spectrum)
}

/// Diagonalize a symmetric matrix in place by cyclic Jacobi rotations.
fn jacobi_eigenvalues(a: &mut [f64], n: usize) -> Result<()> {
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
        }
        s.sqrt()
    };
    for _sweep in 0..100 {
        if off(a) <= SOLVER_RESIDUAL {
            return Ok(());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < SOLVER_RESIDUAL / ((n * n) as f64) {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
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
            }
        }
    }
    if off(a) <= SOLVER_RESIDUAL {
        Ok(())
    } else {
        Err(Error::Unsupported(
            "Jacobi iteration did not converge".into(),
        ))
    }
}

/// Spectrum of G · E-style wreath products from the factor spectra: shift
/// and scale Spec(G) by the inner degree and size, then append |G| copies
/// of Spec(H) with one occurrence of the inner degree removed.
pub fn wreath_spectrum(
    spec_g: &Spectrum,
    g_size: usize,
    spec_h: &Spectrum,
    h_size: usize,
    r_h: f64,
) -> Result<Spectrum> {
    if spec_h.multiplicity_of(r_h) == 0 {
        return Err(Error::HypothesesNotMet(format!(
            "{r_h} is not an eigenvalue of the inner spectrum"
        )));
    }
    let mut values: Vec<f64> = spec_g
        .expanded()
        .iter()
        .map(|&l| r_h + (h_size as f64) * l)
        .collect();
    let mut inner = spec_h.expanded();
    let drop_at = inner
        .iter()
        .position(|&v| (v - r_h).abs() <= GROUPING_TOLERANCE)
        .expect("presence checked above");
    inner.remove(drop_at);
    for _ in 0..g_size {
        values.extend_from_slice(&inner);
    }
    let out = Spectrum::from_values(values);
    debug_assert_eq!(out.total_multiplicity(), g_size * h_size);
    Ok(out)
}

/// The zero-eigenvalue bound for decomposed ring Cayley graphs: a
/// not-prime connected anti-connected Cay(R,S) must have 0 as an
/// eigenvalue with multiplicity at least |R|/2. Returns whether the bound
/// holds (false would mean an implementation bug, not a property of the
/// input).
pub fn zero_multiplicity_check(
    ring: &FiniteCommRing,
    s: &[usize],
    cert: &RingPrimalityCertificate,
) -> Result<bool> {
    if cert.verdict != CertVerdict::NotPrime {
        return Err(Error::HypothesesNotMet(
            "the zero-multiplicity bound applies to not-prime certificates only".into(),
        ));
    }
    let graph = ring_cayley(ring, s)?;
    let spectrum = adjacency_spectrum(&graph)?;
    let zero_mult = spectrum.multiplicity_of(0.0);
    Ok(2 * zero_mult >= ring.size())
}
