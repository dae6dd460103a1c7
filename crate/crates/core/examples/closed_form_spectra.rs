//! Closed-form spectra for cycles, paths, complete and complete bipartite
//! graphs, cross-checked against the Jacobi eigensolver.
//!
//! ```bash
//! cargo run -p spectral-entropy --example closed_form_spectra
//! ```

use spectral_entropy::graph::{generate, GraphFamily, MatrixKind};
use spectral_entropy::spectra::{
    closed_form_spectrum, max_multiset_deviation, Spectrum, DEFAULT_TOL,
};

fn main() {
    let cases = [
        ("cycle:6", MatrixKind::Laplacian),
        ("cycle:6", MatrixKind::SignlessLaplacian),
        ("cycle:5", MatrixKind::SignlessLaplacian),
        ("path:5", MatrixKind::Laplacian),
        ("path:5", MatrixKind::SignlessLaplacian),
        ("complete:5", MatrixKind::Laplacian),
        ("complete:5", MatrixKind::SignlessLaplacian),
        ("bipartite:2,4", MatrixKind::Laplacian),
    ];
    for (spec, kind) in cases {
        let family: GraphFamily = spec.parse().unwrap();
        let formula = closed_form_spectrum(&family, kind).unwrap();
        let g = generate(&family).unwrap();
        let numeric = Spectrum::numeric(&g, kind, DEFAULT_TOL).unwrap();
        let dev = max_multiset_deviation(&formula, &numeric);
        let values: Vec<String> = formula.values().iter().map(|v| format!("{v:.4}")).collect();
        println!("{spec:<16} {}  [{}]  oracle dev {dev:.2e}", kind.short_name(), values.join(", "));
    }

    // Paths are bipartite, so L and Q share a spectrum; odd cycles are not,
    // and the two spectra differ.
    println!();
    let p5_l = closed_form_spectrum(&"path:5".parse().unwrap(), MatrixKind::Laplacian).unwrap();
    let p5_q = closed_form_spectrum(&"path:5".parse().unwrap(), MatrixKind::SignlessLaplacian).unwrap();
    println!(
        "P_5: max |L - Q| over the sorted spectra = {:.2e}",
        max_multiset_deviation(&p5_l, &p5_q)
    );
    let c5_l = closed_form_spectrum(&"cycle:5".parse().unwrap(), MatrixKind::Laplacian).unwrap();
    let c5_q = closed_form_spectrum(&"cycle:5".parse().unwrap(), MatrixKind::SignlessLaplacian).unwrap();
    println!(
        "C_5: max |L - Q| over the sorted spectra = {:.2e}",
        max_multiset_deviation(&c5_l, &c5_q)
    );
}
