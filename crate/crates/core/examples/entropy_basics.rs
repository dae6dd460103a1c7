//! Compute all four entropy families for a few small graphs.
//!
//! ```bash
//! cargo run -p spectral-entropy --example entropy_basics
//! ```

use spectral_entropy::entropy::{entropy, EntropyParams};
use spectral_entropy::graph::{generate, MatrixKind};
use spectral_entropy::spectra::{DensitySpectrum, Spectrum, DEFAULT_TOL};

fn main() {
    let specs = ["complete:2", "complete:3", "cycle:4", "path:6", "bipartite:2,3"];
    println!("{:<16} {:>10} {:>10} {:>10} {:>12}", "graph", "H_{2,2}", "Renyi_2", "Tsallis_2", "von Neumann");
    for spec in specs {
        let g = generate(&spec.parse().unwrap()).unwrap();
        let spectrum = Spectrum::numeric(&g, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        let ds = DensitySpectrum::new(&spectrum, g.edge_count()).unwrap();

        let sm = entropy(&ds, &EntropyParams::sharma_mittal(2.0, 2.0)).unwrap();
        let re = entropy(&ds, &EntropyParams::renyi(2.0)).unwrap();
        let ts = entropy(&ds, &EntropyParams::tsallis(2.0)).unwrap();
        let vn = entropy(&ds, &EntropyParams::von_neumann()).unwrap();
        println!("{spec:<16} {sm:>10.6} {re:>10.6} {ts:>10.6} {vn:>12.6}");
    }

    // K_2 is a pure state: a single edge has density spectrum {0, 1} and
    // zero entropy in every family.
    // K_n has n-1 equal nonzero probabilities 1/(n-1), so its Renyi entropy
    // is log2(n-1) at every order, matching von Neumann.
    println!();
    for n in [3usize, 5, 9] {
        let g = generate(&format!("complete:{n}").parse().unwrap()).unwrap();
        let spectrum = Spectrum::numeric(&g, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        let ds = DensitySpectrum::new(&spectrum, g.edge_count()).unwrap();
        println!(
            "K_{n}: Renyi_0.5 = {:.6}, Renyi_3 = {:.6}, log2(n-1) = {:.6}",
            entropy(&ds, &EntropyParams::renyi(0.5)).unwrap(),
            entropy(&ds, &EntropyParams::renyi(3.0)).unwrap(),
            ((n - 1) as f64).log2()
        );
    }

    // Sharma-Mittal routing: parameters within the limit tolerance of r = 1,
    // r = q, or (q, r) = (1, 1) evaluate the corresponding limiting family.
    let g = generate(&"cycle:4".parse().unwrap()).unwrap();
    let spectrum = Spectrum::numeric(&g, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
    let ds = DensitySpectrum::new(&spectrum, g.edge_count()).unwrap();
    println!();
    println!(
        "C_4 H_{{2, 1+1e-12}} routes to Renyi_2: {:.6}",
        entropy(&ds, &EntropyParams::sharma_mittal(2.0, 1.0 + 1e-12)).unwrap()
    );
    println!(
        "C_4 H_{{1+1e-12, 1+1e-12}} routes to von Neumann: {:.6}",
        entropy(&ds, &EntropyParams::sharma_mittal(1.0 + 1e-12, 1.0 + 1e-12)).unwrap()
    );
}
