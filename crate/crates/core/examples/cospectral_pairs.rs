//! Non-isomorphic graphs with equal spectra have equal entropies of every
//! family: the entropies are functions of the density spectrum alone.
//!
//! ```bash
//! cargo run -p spectral-entropy --example cospectral_pairs
//! ```

use spectral_entropy::entropy::{entropy, EntropyParams};
use spectral_entropy::graph::MatrixKind;
use spectral_entropy::spectra::{DensitySpectrum, Spectrum, DEFAULT_TOL};
use spectral_entropy::verify::{cospectral_laplacian_pair, cospectral_signless_pair};

fn main() {
    let (g1, g2) = cospectral_laplacian_pair();
    println!("Laplacian-cospectral pair on 8 vertices:");
    println!("  G1 edges: {:?}", g1.edges());
    println!("  G2 edges: {:?}", g2.edges());
    for (label, g) in [("G1", &g1), ("G2", &g2)] {
        let s = Spectrum::numeric(g, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        let ds = DensitySpectrum::new(&s, g.edge_count()).unwrap();
        let probs: Vec<String> = ds.probs().iter().map(|p| format!("{p:.6}")).collect();
        println!("  {label} density spectrum: [{}]", probs.join(", "));
        println!(
            "  {label} H_{{2,3}} = {:.10}, Renyi_2 = {:.10}, vN = {:.10}",
            entropy(&ds, &EntropyParams::sharma_mittal(2.0, 3.0)).unwrap(),
            entropy(&ds, &EntropyParams::renyi(2.0)).unwrap(),
            entropy(&ds, &EntropyParams::von_neumann()).unwrap(),
        );
    }

    println!();
    let (h1, h2) = cospectral_signless_pair();
    println!("Signless-Laplacian-cospectral pair on 4 vertices");
    println!("(triangle + isolated vertex vs the star K_1,3):");
    for (label, g) in [("H1", &h1), ("H2", &h2)] {
        let s = Spectrum::numeric(g, MatrixKind::SignlessLaplacian, DEFAULT_TOL).unwrap();
        let ds = DensitySpectrum::new(&s, g.edge_count()).unwrap();
        let probs: Vec<String> = ds.probs().iter().map(|p| format!("{p:.6}")).collect();
        println!("  {label} edges {:?} -> Q density [{}]", g.edges(), probs.join(", "));
        println!(
            "  {label} Tsallis_0.5 = {:.10}, vN = {:.10}",
            entropy(&ds, &EntropyParams::tsallis(0.5)).unwrap(),
            entropy(&ds, &EntropyParams::von_neumann()).unwrap(),
        );
    }
    println!();
    println!("The two members of each pair print identical values: the");
    println!("entropies cannot distinguish cospectral graphs.");
}
