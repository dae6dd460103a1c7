//! Spectra of graph matrices: the numeric eigensolver wrapper, closed-form
//! spectra for standard families, product-spectrum formulas, the iterated
//! corona spectrum recursion, and trace-normalized density spectra.
//!
//! Conventions used throughout:
//! - eigenvalue lists are sorted ascending and store repeats explicitly
//!   (multiplicities are recoverable by grouping within tolerance);
//! - both `L` and `Q` are positive semidefinite, so values in
//!   `(-1e-6, tol)` are clamped to exact zero and anything below `-1e-6`
//!   is a hard error;
//! - a density spectrum is the spectrum divided by the degree sum `2m`,
//!   i.e. the eigenvalues of the trace-one state `rho = M / 2m`.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily, MatrixKind};
use crate::matrix::{graph_matrix, jacobi_eigenvalues};
use crate::products::corona_vertex_count;

/// Default convergence / clamping tolerance for spectral computations.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Eigenvalues below this are treated as evidence of a non-PSD matrix.
const HARD_PSD_FLOOR: f64 = -1e-6;

/// Where a spectrum came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    Numeric,
    ClosedForm,
    ProductFormula,
}

impl SpectrumSource {
    pub fn name(self) -> &'static str {
        match self {
            SpectrumSource::Numeric => "numeric",
            SpectrumSource::ClosedForm => "closed-form",
            SpectrumSource::ProductFormula => "product-formula",
        }
    }
}

/// A multiset of real eigenvalues of `L(G)` or `Q(G)`, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    kind: MatrixKind,
    source: SpectrumSource,
}

impl Spectrum {
    /// Eigensolves `matrix(g, kind)` with the cyclic Jacobi method.
    pub fn numeric(g: &Graph, kind: MatrixKind, tol: f64) -> Result<Self> {
        let vals = jacobi_eigenvalues(&graph_matrix(g, kind), tol)?;
        Spectrum::from_eigenvalues(vals, kind, SpectrumSource::Numeric, tol)
    }

    /// Wraps a precomputed eigenvalue list, sorting and clamping near-zero
    /// values. Fails if any value is below the PSD floor.
    pub fn from_eigenvalues(
        mut values: Vec<f64>,
        kind: MatrixKind,
        source: SpectrumSource,
        tol: f64,
    ) -> Result<Self> {
        for v in &mut values {
            if *v < HARD_PSD_FLOOR {
                return Err(Error::NotPositiveSemidefinite(*v));
            }
            if *v < tol {
                *v = 0.0;
            }
        }
        values.sort_unstable_by(f64::total_cmp);
        Ok(Spectrum { values, kind, source })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn source(&self) -> SpectrumSource {
        self.source
    }

    /// Sum of eigenvalues; equals the degree sum `2m` of the originating
    /// graph.
    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// Unnormalized moment sum over nonzero eigenvalues, with `0^q = 0`.
    pub fn moment_sum(&self, q: f64) -> Result<f64> {
        if q <= 0.0 {
            return Err(Error::NonPositiveQ(q));
        }
        Ok(self.values.iter().filter(|&&v| v > 0.0).map(|v| v.powf(q)).sum())
    }
}

/// Largest elementwise gap between two sorted spectra viewed as multisets;
/// infinite when the lengths differ.
pub fn max_multiset_deviation(a: &Spectrum, b: &Spectrum) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Eigenvalues of the density matrix `rho = M / 2m`: a sorted probability
/// vector (sums to one, entries in `[0, 1]`).
#[derive(Debug, Clone, PartialEq)]
pub struct DensitySpectrum {
    probs: Vec<f64>,
}

impl DensitySpectrum {
    /// Divides a spectrum through by the degree sum `2m`.
    pub fn new(spectrum: &Spectrum, edge_count: usize) -> Result<Self> {
        if edge_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let d = (2 * edge_count) as f64;
        let probs: Vec<f64> = spectrum.values.iter().map(|v| v / d).collect();
        DensitySpectrum::from_probs(probs)
    }

    /// Wraps a probability vector, checking nonnegativity and unit sum
    /// (within 1e-9).
    pub fn from_probs(mut probs: Vec<f64>) -> Result<Self> {
        for &p in &probs {
            if p < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "density spectrum entry {p} is negative"
                )));
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "density spectrum sums to {sum}, expected 1"
            )));
        }
        probs.sort_unstable_by(f64::total_cmp);
        Ok(DensitySpectrum { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// Moment sum `S_q = sum gamma_i^q` over nonzero entries (`0^q = 0`).
pub fn moment_sum(ds: &DensitySpectrum, q: f64) -> Result<f64> {
    if q <= 0.0 {
        return Err(Error::NonPositiveQ(q));
    }
    Ok(ds.probs.iter().filter(|&&p| p > 0.0).map(|p| p.powf(q)).sum())
}

/// Closed-form spectrum for a standard family.
///
/// Formulas (all validated against the Jacobi oracle, which settles the two
/// printed variants that fail the trace test `tr = 2m`):
/// - cycle `C_n`:  L: `2 - 2cos(2 pi j / n)`;  Q: `2 + 2cos(2 pi j / n)`
/// - path `P_n`:   L: `2 - 2cos(pi j / n)` (the `2 - cos` variant has trace
///   `2n - 1 != 2(n-1)` and is rejected); Q: same multiset as L since paths
///   are bipartite
/// - complete `K_n`:  L: `{0, n^(n-1)}`;  Q: `{(n-2)^(n-1), 2(n-1)}`
/// - `K_{p,q}` (L only): `{0, p^(q-1), q^(p-1), p+q}` — the multiplicity
///   assignment `p^(p-1), q^(q-1)` has trace `p^2 + q^2 != 2pq` and is
///   rejected by the same trace test
pub fn closed_form_spectrum(family: &GraphFamily, kind: MatrixKind) -> Result<Spectrum> {
    use std::f64::consts::PI;
    let values: Vec<f64> = match (family, kind) {
        (&GraphFamily::Cycle(n), _) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3 (got {n})")));
            }
            let sign = if kind == MatrixKind::Laplacian { -1.0 } else { 1.0 };
            (0..n)
                .map(|j| 2.0 + sign * 2.0 * (2.0 * PI * j as f64 / n as f64).cos())
                .collect()
        }
        (&GraphFamily::Path(n), _) => {
            if n < 2 {
                return Err(Error::InvalidParameter(format!("path needs n >= 2 (got {n})")));
            }
            (0..n).map(|j| 2.0 - 2.0 * (PI * j as f64 / n as f64).cos()).collect()
        }
        (&GraphFamily::Complete(n), MatrixKind::Laplacian) => {
            if n < 1 {
                return Err(Error::InvalidParameter(format!("complete needs n >= 1 (got {n})")));
            }
            let mut v = vec![0.0];
            v.extend(std::iter::repeat_n(n as f64, n - 1));
            v
        }
        (&GraphFamily::Complete(n), MatrixKind::SignlessLaplacian) => {
            if n < 1 {
                return Err(Error::InvalidParameter(format!("complete needs n >= 1 (got {n})")));
            }
            if n == 1 {
                vec![0.0]
            } else {
                let mut v: Vec<f64> = std::iter::repeat_n((n - 2) as f64, n - 1).collect();
                v.push(2.0 * (n - 1) as f64);
                v
            }
        }
        (&GraphFamily::Bipartite(p, q), MatrixKind::Laplacian) => {
            if p < 1 || q < 1 {
                return Err(Error::InvalidParameter(format!(
                    "bipartite needs p, q >= 1 (got {p},{q})"
                )));
            }
            let mut v = vec![0.0];
            v.extend(std::iter::repeat_n(p as f64, q - 1));
            v.extend(std::iter::repeat_n(q as f64, p - 1));
            v.push((p + q) as f64);
            v
        }
        (&GraphFamily::Bipartite(..), MatrixKind::SignlessLaplacian) => {
            return Err(Error::UnsupportedCombination)
        }
        (&GraphFamily::ErdosRenyi { .. }, _) => return Err(Error::UnsupportedCombination),
    };
    Spectrum::from_eigenvalues(values, kind, SpectrumSource::ClosedForm, DEFAULT_TOL)
}

/// Both roots of `t^2 - (x + n + 1) t + x = 0`, sorted ascending.
///
/// This is the corona spectral map: applying it to each Laplacian eigenvalue
/// of `G_1` (with `n` the order of `G_2`) yields the non-copy eigenvalues of
/// `G_1 o G_2`. Root sum is `x + n + 1` and root product is `x`.
pub fn f_l_roots(x: f64, n: usize) -> (f64, f64) {
    let b = x + n as f64 + 1.0;
    let disc = (b * b - 4.0 * x).sqrt();
    let hi = 0.5 * (b + disc);
    // product form for the small root avoids cancellation near x = 0
    let lo = if hi != 0.0 { x / hi } else { 0.0 };
    (lo, hi)
}

/// Auxiliary graph data needed by some product-spectrum formulas.
#[derive(Debug, Clone, Default)]
pub struct ProductAux {
    /// Regularities `(k1, k2)` of the factors; required for Kronecker and
    /// strong products.
    pub regularity: Option<(usize, usize)>,
    /// Vertex degrees of the first factor; required for the lexicographic
    /// product.
    pub g1_degrees: Option<Vec<usize>>,
}

impl ProductAux {
    /// Collects everything derivable from the factor graphs: degrees always,
    /// regularity when both factors are regular.
    pub fn from_graphs(g1: &Graph, g2: &Graph) -> Self {
        ProductAux {
            regularity: match (g1.regularity(), g2.regularity()) {
                (Some(k1), Some(k2)) => Some((k1, k2)),
                _ => None,
            },
            g1_degrees: Some(g1.degrees()),
        }
    }
}

/// Laplacian spectrum of a product graph from the factor spectra.
///
/// Eigenvalue maps, with `a` ranging over `s1` and `b` over `s2`:
/// - cartesian: `a + b`
/// - kronecker (k1-, k2-regular factors): `k1 b + k2 a - a b`
/// - strong (regular factors): `(1 + k2) a + (1 + k1) b - a b`
/// - lexicographic: `a n2` for each `a`, plus `b + deg1(i) n2` for every
///   vertex `i` of the first factor and every `b` past the smallest
/// - corona: both roots of `f_l_roots(a, n2)` for each `a`, plus `b + 1`
///   with multiplicity `n1` for every `b` past the smallest
pub fn product_spectrum(
    s1: &Spectrum,
    s2: &Spectrum,
    kind: crate::products::ProductKind,
    aux: &ProductAux,
) -> Result<Spectrum> {
    use crate::products::ProductKind;

    if s1.kind() != MatrixKind::Laplacian || s2.kind() != MatrixKind::Laplacian {
        return Err(Error::LaplacianRequired);
    }
    let n1 = s1.len();
    let n2 = s2.len();
    let mut values = Vec::new();
    match kind {
        ProductKind::Cartesian => {
            for &a in s1.values() {
                for &b in s2.values() {
                    values.push(a + b);
                }
            }
        }
        ProductKind::Kronecker | ProductKind::Strong => {
            let (k1, k2) = aux.regularity.ok_or(Error::RegularityRequired)?;
            let (k1, k2) = (k1 as f64, k2 as f64);
            for &a in s1.values() {
                for &b in s2.values() {
                    let v = match kind {
                        ProductKind::Kronecker => k1 * b + k2 * a - a * b,
                        _ => (1.0 + k2) * a + (1.0 + k1) * b - a * b,
                    };
                    values.push(v);
                }
            }
        }
        ProductKind::Lexicographic => {
            let degrees = aux.g1_degrees.as_ref().ok_or(Error::MissingAux("g1 degrees"))?;
            if degrees.len() != n1 {
                return Err(Error::MissingAux("g1 degrees length mismatch"));
            }
            for &a in s1.values() {
                values.push(a * n2 as f64);
            }
            for &b in &s2.values()[1..] {
                for &d in degrees {
                    values.push(b + (d * n2) as f64);
                }
            }
        }
        ProductKind::Corona => {
            for &a in s1.values() {
                let (lo, hi) = f_l_roots(a, n2);
                values.push(lo);
                values.push(hi);
            }
            for &b in &s2.values()[1..] {
                for _ in 0..n1 {
                    values.push(b + 1.0);
                }
            }
        }
    }
    Spectrum::from_eigenvalues(values, MatrixKind::Laplacian, SpectrumSource::ProductFormula, DEFAULT_TOL)
}

/// Laplacian spectrum of the corona graph `G^(m)` from the seed spectrum,
/// by unrolling the per-step corona map: every eigenvalue of `G^(k)` splits
/// into the two `f_l_roots`, and each seed eigenvalue past the smallest
/// contributes `lambda + 1` with multiplicity `|V(G^(k))|`.
///
/// The result is exact for any seed (regular or not, connected or not); the
/// test suite cross-checks it against eigensolving the constructed graph.
pub fn corona_graph_spectrum(seed: &Spectrum, iterations: usize, cap: usize) -> Result<Spectrum> {
    if seed.kind() != MatrixKind::Laplacian {
        return Err(Error::LaplacianRequired);
    }
    let n = seed.len();
    let required = corona_vertex_count(n, iterations);
    if required > cap as u128 {
        return Err(Error::SizeCapExceeded { required, cap });
    }
    let mut current = seed.values().to_vec();
    let mut copies = n;
    for _ in 0..iterations {
        let mut next = Vec::with_capacity(current.len() * 2 + (n - 1) * copies);
        for &lam in &current {
            let (lo, hi) = f_l_roots(lam, n);
            next.push(lo);
            next.push(hi);
        }
        for &lam in &seed.values()[1..] {
            for _ in 0..copies {
                next.push(lam + 1.0);
            }
        }
        current = next;
        copies *= n + 1;
    }
    Spectrum::from_eigenvalues(
        current,
        MatrixKind::Laplacian,
        SpectrumSource::ProductFormula,
        DEFAULT_TOL,
    )
}
