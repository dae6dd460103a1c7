//! The five graph products: construction, spectral formulas, and the
//! eigensolver cross-check.
//!
//! ```bash
//! cargo run -p spectral-entropy --example graph_products
//! ```

use spectral_entropy::entropy::{entropy, EntropyParams};
use spectral_entropy::graph::{generate, Graph, MatrixKind};
use spectral_entropy::products::{product, ProductKind};
use spectral_entropy::spectra::{
    max_multiset_deviation, product_spectrum, DensitySpectrum, ProductAux, Spectrum, DEFAULT_TOL,
};

fn show(a: &Graph, b: &Graph, label: &str, kind: ProductKind) {
    let built = product(a, b, kind).unwrap();
    let numeric = Spectrum::numeric(&built, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
    let ds = DensitySpectrum::new(&numeric, built.edge_count()).unwrap();
    let vn = entropy(&ds, &EntropyParams::von_neumann()).unwrap();

    let sa = Spectrum::numeric(a, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
    let sb = Spectrum::numeric(b, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
    let formula = product_spectrum(&sa, &sb, kind, &ProductAux::from_graphs(a, b));
    let status = match formula {
        Ok(f) => format!("formula dev {:.2e}", max_multiset_deviation(&f, &numeric)),
        Err(e) => format!("formula n/a ({e})"),
    };
    println!(
        "{:<14} {label:<14} n={:<4} m={:<4} vN={vn:.4}  {status}",
        kind.name(),
        built.vertex_count(),
        built.edge_count()
    );
}

fn main() {
    let k2 = generate(&"complete:2".parse().unwrap()).unwrap();
    let k3 = generate(&"complete:3".parse().unwrap()).unwrap();
    let c4 = generate(&"cycle:4".parse().unwrap()).unwrap();
    let p3 = generate(&"path:3".parse().unwrap()).unwrap();
    let k1 = Graph::new(1, &[]).unwrap();

    // K_2 x K_2 is a 4-cycle; K_2 strong K_2 is K_4; the Kronecker square of
    // an edge splits into two disjoint edges
    show(&k2, &k2, "K_2, K_2", ProductKind::Cartesian);
    show(&k2, &k2, "K_2, K_2", ProductKind::Kronecker);
    show(&k2, &k2, "K_2, K_2", ProductKind::Strong);
    show(&k2, &k2, "K_2, K_2", ProductKind::Lexicographic);
    // attaching one pendant to each endpoint of an edge gives a path P_4
    show(&k2, &k1, "K_2, K_1", ProductKind::Corona);
    println!();

    show(&c4, &k3, "C_4, K_3", ProductKind::Cartesian);
    show(&c4, &k3, "C_4, K_3", ProductKind::Kronecker);
    show(&c4, &k3, "C_4, K_3", ProductKind::Strong);
    show(&c4, &p3, "C_4, P_3", ProductKind::Lexicographic);
    show(&k3, &p3, "K_3, P_3", ProductKind::Corona);
    println!();

    // Kronecker and strong formulas need regular factors; the constructed
    // product and its numeric spectrum are still available
    show(&p3, &k2, "P_3, K_2", ProductKind::Kronecker);
}
