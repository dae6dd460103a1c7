//! Cross-validation suite: every closed-form and product-formula spectrum in
//! the crate checked against the Jacobi eigensolver, plus the cospectral
//! pairs and moment-dominance properties. Backs the `verify` CLI command.

use crate::entropy::{entropy, EntropyParams};
use crate::error::Result;
use crate::graph::{generate, Graph, GraphFamily, MatrixKind};
use crate::products::{corona_iterate, product, ProductKind};
use crate::spectra::{
    closed_form_spectrum, corona_graph_spectrum, max_multiset_deviation, product_spectrum,
    DensitySpectrum, ProductAux, Spectrum,
};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        CheckResult { name: name.to_string(), passed, detail }
    }
}

/// Two non-isomorphic 8-vertex graphs with the same Laplacian spectrum
/// {0, 0, 0, 1, 1, 3, 3, 4}: a path P_3 plus a triangle with a pendant plus
/// an isolated vertex, against a 4-star plus a triangle plus an isolated
/// vertex.
pub fn cospectral_laplacian_pair() -> (Graph, Graph) {
    let g1 = Graph::new(8, &[(0, 1), (1, 2), (4, 5), (5, 6), (5, 3), (4, 6)]).unwrap();
    let g2 = Graph::new(8, &[(0, 1), (1, 2), (4, 5), (5, 6), (1, 7), (4, 6)]).unwrap();
    (g1, g2)
}

/// Two non-isomorphic 4-vertex graphs with the same signless-Laplacian
/// spectrum {0, 1, 1, 4}: a triangle plus an isolated vertex, against the
/// star K_{1,3}.
pub fn cospectral_signless_pair() -> (Graph, Graph) {
    let g1 = Graph::new(4, &[(0, 2), (0, 3), (2, 3)]).unwrap();
    let g2 = Graph::new(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
    (g1, g2)
}

/// The five standard product-test factors; Kronecker and strong formulas
/// apply to the regular subset.
pub fn product_test_factors() -> Vec<(String, Graph)> {
    ["complete:2", "complete:3", "cycle:4", "cycle:5", "path:3"]
        .iter()
        .map(|s| (s.to_string(), generate(&s.parse().unwrap()).unwrap()))
        .collect()
}

fn all_four_entropies(ds: &DensitySpectrum, q: f64, r: f64) -> Result<[f64; 4]> {
    Ok([
        entropy(ds, &EntropyParams::sharma_mittal(q, r))?,
        entropy(ds, &EntropyParams::renyi(q))?,
        entropy(ds, &EntropyParams::tsallis(q))?,
        entropy(ds, &EntropyParams::von_neumann())?,
    ])
}

/// Closed-form spectra vs the eigensolver for all families, n = 3..=30.
pub fn check_closed_forms(tol: f64) -> CheckResult {
    let mut worst = 0.0f64;
    let mut cases = 0usize;
    for n in 3..=30usize {
        let mut families = vec![
            GraphFamily::Cycle(n),
            GraphFamily::Path(n),
            GraphFamily::Complete(n),
            GraphFamily::Bipartite(1, n - 1),
            GraphFamily::Bipartite(n / 2, n - n / 2),
        ];
        if n >= 5 {
            families.push(GraphFamily::Bipartite(2, n - 2));
        }
        for fam in families {
            for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
                let cf = match closed_form_spectrum(&fam, kind) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                let g = generate(&fam).unwrap();
                let num = match Spectrum::numeric(&g, kind, tol) {
                    Ok(s) => s,
                    Err(e) => {
                        return CheckResult::new(
                            "closed-form vs eigensolver",
                            false,
                            format!("{fam} {}: {e}", kind.short_name()),
                        )
                    }
                };
                worst = worst.max(max_multiset_deviation(&cf, &num));
                cases += 1;
            }
        }
    }
    CheckResult::new(
        "closed-form vs eigensolver",
        worst < 1e-8,
        format!("{cases} cases, max deviation {worst:.3e}"),
    )
}

/// Product-spectrum formulas vs eigensolving the constructed product, for
/// all five kinds over the standard factor set.
pub fn check_product_formulas(tol: f64) -> CheckResult {
    let factors = product_test_factors();
    let mut worst = 0.0f64;
    let mut cases = 0usize;
    for (name_a, a) in &factors {
        for (name_b, b) in &factors {
            let aux = ProductAux::from_graphs(a, b);
            let sa = Spectrum::numeric(a, MatrixKind::Laplacian, tol).unwrap();
            let sb = Spectrum::numeric(b, MatrixKind::Laplacian, tol).unwrap();
            for kind in ProductKind::ALL {
                let formula = match product_spectrum(&sa, &sb, kind, &aux) {
                    Ok(s) => s,
                    Err(_) => continue, // regularity not met for this pair
                };
                let built = product(a, b, kind).unwrap();
                let num = Spectrum::numeric(&built, MatrixKind::Laplacian, tol).unwrap();
                let dev = max_multiset_deviation(&formula, &num);
                if dev >= 1e-8 {
                    return CheckResult::new(
                        "product formulas vs eigensolver",
                        false,
                        format!("{} {name_a} {name_b}: deviation {dev:.3e}", kind.name()),
                    );
                }
                worst = worst.max(dev);
                cases += 1;
            }
        }
    }
    CheckResult::new(
        "product formulas vs eigensolver",
        worst < 1e-8,
        format!("{cases} cases, max deviation {worst:.3e}"),
    )
}

/// Iterated-corona recursive spectrum vs eigensolving the built graph.
pub fn check_corona_recursion(tol: f64) -> CheckResult {
    let seeds = ["complete:2", "complete:3", "path:3"];
    let mut worst = 0.0f64;
    for spec in seeds {
        let g = generate(&spec.parse().unwrap()).unwrap();
        let seed = Spectrum::numeric(&g, MatrixKind::Laplacian, tol).unwrap();
        for m in 1..=2usize {
            let rec = corona_graph_spectrum(&seed, m, 20_000).unwrap();
            let built = corona_iterate(&g, m, 20_000).unwrap();
            let num = Spectrum::numeric(&built, MatrixKind::Laplacian, tol).unwrap();
            worst = worst.max(max_multiset_deviation(&rec, &num));
        }
    }
    CheckResult::new(
        "corona recursion vs eigensolver",
        worst < 1e-8,
        format!("seeds {seeds:?}, m <= 2, max deviation {worst:.3e}"),
    )
}

/// The two cospectral pairs produce identical entropies for every family
/// over a small (q, r) grid.
pub fn check_cospectral_pairs(tol: f64) -> CheckResult {
    let grid = [0.5, 2.0, 3.0];
    let mut worst = 0.0f64;
    let pairs = [
        (cospectral_laplacian_pair(), MatrixKind::Laplacian),
        (cospectral_signless_pair(), MatrixKind::SignlessLaplacian),
    ];
    for ((g1, g2), kind) in pairs {
        let d1 = DensitySpectrum::new(&Spectrum::numeric(&g1, kind, tol).unwrap(), g1.edge_count()).unwrap();
        let d2 = DensitySpectrum::new(&Spectrum::numeric(&g2, kind, tol).unwrap(), g2.edge_count()).unwrap();
        for &q in &grid {
            for &r in &grid {
                let a = all_four_entropies(&d1, q, r).unwrap();
                let b = all_four_entropies(&d2, q, r).unwrap();
                for (x, y) in a.iter().zip(&b) {
                    worst = worst.max((x - y).abs());
                }
            }
        }
    }
    CheckResult::new(
        "cospectral pair entropies equal",
        worst < 1e-12,
        format!("max gap {worst:.3e}"),
    )
}

/// `sum mu_i^q >= sum lambda_i^q` for every corpus graph, checked at
/// q in {0.25, 0.5, 0.75, 2, 3}.
///
/// The blanket claim for all q > 0 is false: on 1 < q < 2 the inequality
/// reverses for non-bipartite graphs (exact counterexample at q = 3/2:
/// L(K_3) = {0, 3, 3} gives 6 sqrt3 > 10 = 1 + 1 + 8 from Q(K_3) =
/// {1, 1, 4}), so that band is excluded here. At q = 2 the two sides are
/// always equal (both traces are sum d_i^2 + 2m).
pub fn check_moment_dominance(tol: f64) -> CheckResult {
    let mut corpus: Vec<Graph> = Vec::new();
    for n in 3..=10usize {
        corpus.push(generate(&GraphFamily::Cycle(n)).unwrap());
        corpus.push(generate(&GraphFamily::Path(n)).unwrap());
        corpus.push(generate(&GraphFamily::Complete(n)).unwrap());
        corpus.push(generate(&GraphFamily::Bipartite(n / 2, n - n / 2)).unwrap());
    }
    for seed in 0..20u64 {
        let g = generate(&GraphFamily::ErdosRenyi { n: 9, p: 0.4, seed }).unwrap();
        if g.edge_count() > 0 {
            corpus.push(g);
        }
    }
    let mut worst_violation = 0.0f64;
    for g in &corpus {
        let l = Spectrum::numeric(g, MatrixKind::Laplacian, tol).unwrap();
        let qspec = Spectrum::numeric(g, MatrixKind::SignlessLaplacian, tol).unwrap();
        for q in [0.25, 0.5, 0.75, 2.0, 3.0] {
            let sl = l.moment_sum(q).unwrap();
            let sq = qspec.moment_sum(q).unwrap();
            worst_violation = worst_violation.max(sl - sq);
        }
    }
    CheckResult::new(
        "signless moments dominate Laplacian moments",
        worst_violation <= 1e-8,
        format!(
            "{} graphs, q in {{0.25,0.5,0.75,2,3}}, worst S_L - S_Q = {worst_violation:.3e} (relation provably fails on 1 < q < 2)",
            corpus.len()
        ),
    )
}

/// Spectrum sums equal the degree sum 2m for both kinds across the corpus.
pub fn check_trace_identity(tol: f64) -> CheckResult {
    let mut worst = 0.0f64;
    let mut corpus: Vec<Graph> = Vec::new();
    for n in 3..=12usize {
        corpus.push(generate(&GraphFamily::Cycle(n)).unwrap());
        corpus.push(generate(&GraphFamily::Complete(n)).unwrap());
    }
    for seed in 0..10u64 {
        corpus.push(generate(&GraphFamily::ErdosRenyi { n: 11, p: 0.5, seed }).unwrap());
    }
    for g in &corpus {
        for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let s = Spectrum::numeric(g, kind, tol).unwrap();
            worst = worst.max((s.trace() - g.degree_sum() as f64).abs());
        }
    }
    CheckResult::new(
        "spectrum trace equals degree sum",
        worst < 1e-8,
        format!("{} graphs, max |trace - 2m| = {worst:.3e}", corpus.len()),
    )
}

/// Runs the full verification suite.
pub fn run_all_checks(tol: f64) -> Vec<CheckResult> {
    vec![
        check_closed_forms(tol),
        check_product_formulas(tol),
        check_corona_recursion(tol),
        check_cospectral_pairs(tol),
        check_moment_dominance(tol),
        check_trace_identity(tol),
    ]
}
