//! # spectral-entropy
//!
//! Generalized graph entropies from Laplacian spectra.
//!
//! A graph `G` with degree sum `d = 2m` defines the trace-one states
//! `rho_L = L(G)/d` and `rho_Q = Q(G)/d` (`L = D - A`, `Q = D + A`). Their
//! eigenvalues form a probability vector, and this crate computes the
//! entropy families that factor through it:
//!
//! | Family | Formula |
//! |--------|---------|
//! | Sharma-Mittal `H_{q,r}` | `[(S_q)^{(1-r)/(1-q)} - 1] / (1-r)` |
//! | Renyi `H_q` | `log2(S_q) / (1-q)` |
//! | Tsallis `H_q` | `(S_q - 1) / (1-q)` |
//! | von Neumann | `-sum gamma log2 gamma` |
//!
//! where `S_q = sum gamma_i^q` is the moment sum of the density spectrum.
//!
//! ## What's here
//!
//! - [`graph`]: immutable simple graphs, family generators (cycle, path,
//!   complete, complete bipartite, seeded Erdos-Renyi), edge-list text I/O.
//! - [`matrix`]: dense symmetric matrices and a cyclic Jacobi eigensolver,
//!   the numeric oracle everything else is checked against.
//! - [`spectra`]: closed-form spectra for the standard families, spectra of
//!   the five graph products (Cartesian, Kronecker, strong, lexicographic,
//!   corona), the iterated corona-growth spectrum recursion, and density
//!   spectra.
//! - [`entropy`]: the four entropy functionals with limit routing between
//!   them (`r -> 1` Renyi, `r -> q` Tsallis, `(q,r) -> (1,1)` von Neumann).
//! - [`bounds`]: entropy bounds from degree sums, edge counts, spanning-tree
//!   counts (exact matrix-tree via fraction-free elimination), clique
//!   number (exact branch-and-bound), and spanning-subgraph enumeration,
//!   aggregated into [`bounds::BoundReport`].
//! - [`verify`]: the cross-validation suite behind the `verify` CLI verb.
//! - [`cli`]: implementations of the `spectral-entropy` binary's commands.
//!
//! ## Quick start
//!
//! ```rust
//! use spectral_entropy::graph::{generate, MatrixKind};
//! use spectral_entropy::spectra::{Spectrum, DensitySpectrum, DEFAULT_TOL};
//! use spectral_entropy::entropy::{entropy, EntropyParams};
//!
//! let c4 = generate(&"cycle:4".parse().unwrap()).unwrap();
//! let spectrum = Spectrum::numeric(&c4, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
//! let density = DensitySpectrum::new(&spectrum, c4.edge_count()).unwrap();
//!
//! let h = entropy(&density, &EntropyParams::sharma_mittal(2.0, 2.0)).unwrap();
//! assert!((h - 0.625).abs() < 1e-12);
//!
//! let vn = entropy(&density, &EntropyParams::von_neumann()).unwrap();
//! assert!((vn - 1.5).abs() < 1e-12);
//! ```
//!
//! Runnable walkthroughs live in `examples/` (one per capability); the
//! `spectral-entropy` binary exposes the same operations as subcommands.

pub mod bounds;
pub mod cli;
pub mod entropy;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod products;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, GraphFamily, MatrixKind};
pub use products::ProductKind;
pub use spectra::{DensitySpectrum, Spectrum};
