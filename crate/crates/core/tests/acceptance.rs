//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! Two sub-criteria assert claims that are provably false of the objects
//! they describe; they are implemented literally in their own tests
//! (`a09_renyi_dip_claim`, `a10_moment_dominance_full_grid`), fail with the
//! measured data in the message, and are expected to stay red. The
//! attainable remainder of those criteria passes in the adjacent tests.

use std::f64::consts::LN_2;
use std::time::Instant;

use spectral_entropy::bounds::{
    bound_report, max_adjacent_degree_sum, signless_max_eigenvalue_clique_bound,
    signless_max_eigenvalue_edge_bound, sm_lower_bipartite, sm_upper_laplacian,
    sm_upper_signless_clique, sm_upper_signless_edges, spanning_subgraph_mu1_lower,
    bipartite_moment_lower,
};
use spectral_entropy::cli::{cmd_grow, GraphSource, RunConfig};
use spectral_entropy::entropy::{
    entropy, renyi, sharma_mittal, tsallis, von_neumann, EntropyParams,
};
use spectral_entropy::graph::{generate, Graph, GraphFamily, MatrixKind};
use spectral_entropy::products::{corona_iterate, ProductKind};
use spectral_entropy::spectra::{
    closed_form_spectrum, corona_graph_spectrum, max_multiset_deviation, product_spectrum,
    DensitySpectrum, ProductAux, Spectrum, DEFAULT_TOL,
};
use spectral_entropy::verify::{cospectral_laplacian_pair, cospectral_signless_pair};

fn gen(spec: &str) -> Graph {
    generate(&spec.parse().unwrap()).unwrap()
}

fn density(g: &Graph, kind: MatrixKind) -> DensitySpectrum {
    let s = Spectrum::numeric(g, kind, DEFAULT_TOL).unwrap();
    DensitySpectrum::new(&s, g.edge_count()).unwrap()
}

fn four_entropies(ds: &DensitySpectrum, q: f64, r: f64) -> [f64; 4] {
    [
        entropy(ds, &EntropyParams::sharma_mittal(q, r)).unwrap(),
        renyi(ds, q).unwrap(),
        tsallis(ds, q).unwrap(),
        von_neumann(ds),
    ]
}

/// Criterion 1: the two 8-vertex Laplacian-cospectral graphs reproduce the
/// density spectrum {0,0,0,1/12,1/12,1/4,1/4,1/3} and share all four
/// entropies over the grid q,r in {0.5,2,3}^2.
#[test]
fn a01_cospectral_reproduction() {
    let start = Instant::now();
    let (g1, g2) = cospectral_laplacian_pair();
    let expected = [0.0, 0.0, 0.0, 1.0 / 12.0, 1.0 / 12.0, 0.25, 0.25, 1.0 / 3.0];
    let d1 = density(&g1, MatrixKind::Laplacian);
    let d2 = density(&g2, MatrixKind::Laplacian);
    for ds in [&d1, &d2] {
        for (p, e) in ds.probs().iter().zip(&expected) {
            assert!((p - e).abs() < 1e-10, "{:?}", ds.probs());
        }
    }
    let grid = [0.5, 2.0, 3.0];
    let mut worst = 0.0f64;
    for &q in &grid {
        for &r in &grid {
            let a = four_entropies(&d1, q, r);
            let b = four_entropies(&d2, q, r);
            for (x, y) in a.iter().zip(&b) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    assert!(worst < 1e-12, "entropy gap {worst:.3e}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "{elapsed:?}");
    println!(
        "acceptance 01 cospectral reproduction: PASS (max entropy gap {worst:.2e}, {elapsed:?})"
    );
}

/// Criterion 2: the triangle-plus-isolated-vertex and star graphs share the
/// signless-Laplacian density spectrum {0,1,1,4}/6 and all entropies.
#[test]
fn a02_signless_cospectral_pair() {
    let start = Instant::now();
    let (g1, g2) = cospectral_signless_pair();
    let expected = [0.0, 1.0 / 6.0, 1.0 / 6.0, 4.0 / 6.0];
    let d1 = density(&g1, MatrixKind::SignlessLaplacian);
    let d2 = density(&g2, MatrixKind::SignlessLaplacian);
    for ds in [&d1, &d2] {
        for (p, e) in ds.probs().iter().zip(&expected) {
            assert!((p - e).abs() < 1e-10, "{:?}", ds.probs());
        }
    }
    let grid = [0.5, 2.0, 3.0];
    let mut worst = 0.0f64;
    for &q in &grid {
        for &r in &grid {
            let a = four_entropies(&d1, q, r);
            let b = four_entropies(&d2, q, r);
            for (x, y) in a.iter().zip(&b) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    assert!(worst < 1e-12, "entropy gap {worst:.3e}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "{elapsed:?}");
    println!("acceptance 02 signless cospectral pair: PASS (max entropy gap {worst:.2e}, {elapsed:?})");
}

/// Criterion 3: closed-form spectra match the eigensolver for n = 3..=30,
/// both matrix kinds where defined, within 1e-8.
#[test]
fn a03_closed_forms_vs_oracle() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 3..=30usize {
        let families = [
            GraphFamily::Cycle(n),
            GraphFamily::Path(n),
            GraphFamily::Complete(n),
            GraphFamily::Bipartite(1, n - 1),
            GraphFamily::Bipartite(n / 2, n - n / 2),
        ];
        for fam in families {
            for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
                let cf = match closed_form_spectrum(&fam, kind) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                let g = generate(&fam).unwrap();
                let num = Spectrum::numeric(&g, kind, DEFAULT_TOL).unwrap();
                let dev = max_multiset_deviation(&cf, &num);
                assert!(dev < 1e-8, "{fam} {}: {dev:.3e}", kind.short_name());
                worst = worst.max(dev);
                cases += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "{elapsed:?}");
    println!("acceptance 03 closed forms vs oracle: PASS ({cases} cases, max dev {worst:.2e}, {elapsed:?})");
}

/// Criterion 4, limit routing. The raw Sharma-Mittal power form converges
/// (first order) to the natural-log Renyi / Shannon entropies, which differ
/// from the base-2 values of renyi() and von_neumann() by a factor ln 2;
/// at r = q it coincides with Tsallis exactly. So:
/// - at radius 1e-6 the dispatcher is exercised with a routing tolerance of
///   1e-5, and must return the named limiting family to within 1e-7
///   (routing makes it exact);
/// - at radius 1e-4 the raw formula must lie within 1e-3 of its true limit,
///   compared in consistent units (natural-log targets for the Renyi and
///   von-Neumann branches, the Tsallis value as-is).
#[test]
fn a04_limit_routing() {
    let graphs = [gen("cycle:4"), gen("complete:5"), gen("path:6")];
    let routing_tol = 1e-5;
    for g in &graphs {
        let ds = density(g, MatrixKind::Laplacian);
        for q in [0.5, 2.0] {
            let renyi_bits = renyi(&ds, q).unwrap();
            let tsallis_val = tsallis(&ds, q).unwrap();
            let vn_bits = von_neumann(&ds);
            for sign in [1.0, -1.0] {
                // routed region: the dispatcher returns the limiting family
                let eps = sign * 1e-6;
                let routed = entropy(
                    &ds,
                    &EntropyParams::sharma_mittal(q, 1.0 + eps).with_limit_tol(routing_tol),
                )
                .unwrap();
                assert!((routed - renyi_bits).abs() < 1e-7, "renyi route {g} q={q}");
                let routed = entropy(
                    &ds,
                    &EntropyParams::sharma_mittal(q, q + eps).with_limit_tol(routing_tol),
                )
                .unwrap();
                assert!((routed - tsallis_val).abs() < 1e-7, "tsallis route {g} q={q}");
                let routed = entropy(
                    &ds,
                    &EntropyParams::sharma_mittal(1.0 + eps, 1.0 + eps).with_limit_tol(routing_tol),
                )
                .unwrap();
                assert!((routed - vn_bits).abs() < 1e-7, "vn route {g}");

                // formula region: first-order convergence to the true limits
                let eps = sign * 1e-4;
                let sm = sharma_mittal(&ds, q, 1.0 + eps).unwrap();
                assert!(
                    (sm - LN_2 * renyi_bits).abs() < 1e-3,
                    "renyi limit {g} q={q}: {:.3e}",
                    (sm - LN_2 * renyi_bits).abs()
                );
                let sm = sharma_mittal(&ds, q, q + eps).unwrap();
                assert!(
                    (sm - tsallis_val).abs() < 1e-3,
                    "tsallis limit {g} q={q}: {:.3e}",
                    (sm - tsallis_val).abs()
                );
                let sm = sharma_mittal(&ds, 1.0 + eps, 1.0 + eps).unwrap();
                assert!(
                    (sm - LN_2 * vn_bits).abs() < 1e-3,
                    "shannon limit {g}: {:.3e}",
                    (sm - LN_2 * vn_bits).abs()
                );
            }
        }
    }
    println!("acceptance 04 limit routing: PASS (routing exact at 1e-6 radius; formula within 1e-3 of natural-unit limits at 1e-4 radius)");
}

/// Criterion 5: pinned values. H_vN(C_4) = 1.5 bits, Renyi(K_n) = log2(n-1)
/// for n in {3,5,9} and q in {0.5,2,3}, H_{2,2}(C_4) = 0.625.
#[test]
fn a05_known_values() {
    let c4 = density(&gen("cycle:4"), MatrixKind::Laplacian);
    assert!((von_neumann(&c4) - 1.5).abs() < 1e-12);
    assert!(
        (entropy(&c4, &EntropyParams::sharma_mittal(2.0, 2.0)).unwrap() - 0.625).abs() < 1e-12
    );
    for n in [3usize, 5, 9] {
        let ds = density(&gen(&format!("complete:{n}")), MatrixKind::Laplacian);
        let expect = ((n - 1) as f64).log2();
        for q in [0.5, 2.0, 3.0] {
            let h = renyi(&ds, q).unwrap();
            assert!((h - expect).abs() < 1e-10, "K_{n} q={q}: {h} vs {expect}");
        }
    }
    println!("acceptance 05 known values: PASS (vN(C_4)=1.5, H_2,2(C_4)=0.625, Renyi(K_n)=log2(n-1))");
}

/// Criterion 6: product-spectrum formulas match the eigensolved constructed
/// product for all five kinds over factors {K_2, K_3, C_4, C_5, P_3}.
#[test]
fn a06_product_formula_equivalence() {
    let start = Instant::now();
    let factors = ["complete:2", "complete:3", "cycle:4", "cycle:5", "path:3"];
    let mut worst = 0.0f64;
    let mut cases = 0;
    let mut per_kind = [0usize; 5];
    for a in factors {
        for b in factors {
            let ga = gen(a);
            let gb = gen(b);
            let aux = ProductAux::from_graphs(&ga, &gb);
            let sa = Spectrum::numeric(&ga, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
            let sb = Spectrum::numeric(&gb, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
            for (i, kind) in ProductKind::ALL.into_iter().enumerate() {
                let formula = match product_spectrum(&sa, &sb, kind, &aux) {
                    Ok(s) => s,
                    // Kronecker/strong need regular factors; P_3 pairs skip
                    Err(_) => continue,
                };
                let built = spectral_entropy::products::product(&ga, &gb, kind).unwrap();
                let num = Spectrum::numeric(&built, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
                let dev = max_multiset_deviation(&formula, &num);
                assert!(dev < 1e-8, "{} {a} {b}: {dev:.3e}", kind.name());
                worst = worst.max(dev);
                cases += 1;
                per_kind[i] += 1;
            }
        }
    }
    assert!(per_kind.iter().all(|&c| c > 0), "every kind exercised: {per_kind:?}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "{elapsed:?}");
    println!("acceptance 06 product formula equivalence: PASS ({cases} cases, max dev {worst:.2e}, {elapsed:?})");
}

/// Criterion 7: the bipartite lower bound is tight on C_4 at q = 2: the
/// moment-sum bound equals 24 exactly and the entropy bound equals
/// H_{2,2}(C_4) = 0.625.
#[test]
fn a07_bipartite_equality_case() {
    let c4 = gen("cycle:4");
    let rhs = bipartite_moment_lower(&c4, 2.0).unwrap();
    assert_eq!(rhs, 24.0);
    let s2 = Spectrum::numeric(&c4, MatrixKind::Laplacian, DEFAULT_TOL)
        .unwrap()
        .moment_sum(2.0)
        .unwrap();
    assert!((rhs - s2).abs() < 1e-8);
    let lower = sm_lower_bipartite(&c4, 2.0, 2.0).unwrap();
    assert!((lower - 0.625).abs() < 1e-12);
    let measured = entropy(
        &density(&c4, MatrixKind::Laplacian),
        &EntropyParams::sharma_mittal(2.0, 2.0),
    )
    .unwrap();
    assert!((lower - measured).abs() < 1e-12);
    println!("acceptance 07 bipartite equality case: PASS (moment bound = 24 exactly, entropy bound = 0.625)");
}

fn bound_corpus() -> Vec<Graph> {
    let mut corpus: Vec<Graph> = Vec::new();
    // 200 seeded Erdos-Renyi graphs with n <= 12, m >= 1
    let probs = [0.2, 0.35, 0.5, 0.7];
    let mut seed = 0u64;
    while corpus.len() < 200 {
        let n = 4 + (seed as usize % 9); // 4..=12
        let p = probs[seed as usize % probs.len()];
        let g = generate(&GraphFamily::ErdosRenyi { n, p, seed }).unwrap();
        seed += 1;
        if g.edge_count() >= 1 {
            corpus.push(g);
        }
    }
    // named families up to n = 10
    for n in 3..=10usize {
        corpus.push(generate(&GraphFamily::Cycle(n)).unwrap());
        corpus.push(generate(&GraphFamily::Complete(n)).unwrap());
        corpus.push(generate(&GraphFamily::Path(n)).unwrap());
        corpus.push(generate(&GraphFamily::Bipartite(n / 2, n - n / 2)).unwrap());
    }
    corpus
}

/// Criterion 8: over the bound corpus, every upper bound dominates the
/// measured entropy for 0 < q < 1 grid points (1e-9 slack), the bipartite
/// lower bound stays below it, the eigenvalue-level bounds hold
/// unconditionally, and the mu_1 spanning-subgraph bound's violation on K_2
/// is reported as applicable=false.
#[test]
fn a08_bound_corpus() {
    let start = Instant::now();
    let corpus = bound_corpus();
    let q_grid = [0.25, 0.5, 0.75];
    let r_grid = [0.25, 0.5, 0.75, 2.0];
    let slack = 1e-9;
    let mut checks = 0usize;
    for g in &corpus {
        let sl = Spectrum::numeric(g, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        let sq = Spectrum::numeric(g, MatrixKind::SignlessLaplacian, DEFAULT_TOL).unwrap();
        let dl = DensitySpectrum::new(&sl, g.edge_count()).unwrap();
        let dq = DensitySpectrum::new(&sq, g.edge_count()).unwrap();

        // eigenvalue-level bounds hold regardless of entropy parameters
        assert!(sl.max() <= max_adjacent_degree_sum(g).unwrap() as f64 + slack, "{g}");
        assert!(sq.max() <= signless_max_eigenvalue_edge_bound(g).unwrap() + slack, "{g}");
        assert!(sq.max() <= signless_max_eigenvalue_clique_bound(g).unwrap() + slack, "{g}");

        let bipartite_ok = g.is_connected() && g.is_bipartite() && g.vertex_count() >= 3;
        for &q in &q_grid {
            for &r in &r_grid {
                let params = EntropyParams::sharma_mittal(q, r);
                let h_l = entropy(&dl, &params).unwrap();
                let h_q = entropy(&dq, &params).unwrap();
                assert!(sm_upper_laplacian(g, q, r).unwrap() >= h_l - slack, "{g} q={q} r={r}");
                assert!(sm_upper_signless_edges(g, q, r).unwrap() >= h_q - slack, "{g} q={q} r={r}");
                assert!(sm_upper_signless_clique(g, q, r).unwrap() >= h_q - slack, "{g} q={q} r={r}");
                if bipartite_ok {
                    assert!(sm_lower_bipartite(g, q, r).unwrap() <= h_l + slack, "{g} q={q} r={r}");
                }
                checks += 4;
            }
        }
    }

    // the printed mu_1 lower bound is violated on K_2 and must be reported
    // as inapplicable, not asserted
    let k2 = gen("complete:2");
    assert!((spanning_subgraph_mu1_lower(&k2).unwrap() - 10.0).abs() < 1e-12);
    let report = bound_report(&k2, 0.5, 0.5, MatrixKind::SignlessLaplacian).unwrap();
    let mu1_entry = report
        .entries
        .iter()
        .find(|e| e.name == "mu1_spanning_subgraph_lower")
        .unwrap();
    assert!(!mu1_entry.applicable);
    assert!(mu1_entry.reason.contains("violated"));

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "{elapsed:?}");
    println!(
        "acceptance 08 bound corpus: PASS ({} graphs, {checks} entropy-level checks, K_2 mu_1 violation flagged, {elapsed:?})",
        corpus.len()
    );
}

fn grow_csv(iterations: usize, q: f64, r: f64) -> Vec<Vec<String>> {
    let out = cmd_grow(
        &GraphSource::parse_arg("complete:3"),
        iterations,
        &[(q, r)],
        &RunConfig::default(),
        20_000,
    )
    .unwrap();
    out.stdout
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

/// Criterion 9 (attainable part): grow with seed K_3 emits n = 12, 48, 192
/// for m = 1..3, the von-Neumann column strictly increases, and the
/// recursive corona spectrum matches the constructed-graph eigensolve for
/// m <= 2 within 1e-8.
#[test]
fn a09_corona_growth() {
    let start = Instant::now();
    let rows = grow_csv(3, 2.0, 2.0);
    let ns: Vec<usize> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(ns, vec![12, 48, 192]);
    let vn: Vec<f64> = rows.iter().map(|r| r[8].parse().unwrap()).collect();
    assert!(vn.windows(2).all(|w| w[1] > w[0]), "von-Neumann column not increasing: {vn:?}");

    let k3 = gen("complete:3");
    let seed = Spectrum::numeric(&k3, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
    let mut worst = 0.0f64;
    for m in 1..=2usize {
        let rec = corona_graph_spectrum(&seed, m, 20_000).unwrap();
        let built = corona_iterate(&k3, m, 20_000).unwrap();
        let num = Spectrum::numeric(&built, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        worst = worst.max(max_multiset_deviation(&rec, &num));
    }
    assert!(worst < 1e-8, "recursion vs eigensolve: {worst:.3e}");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "{elapsed:?}");
    println!(
        "acceptance 09 corona growth: PASS (n = 12/48/192, vN strictly increasing {vn:?}, recursion dev {worst:.2e}, {elapsed:?})"
    );
}

/// Criterion 9 (literal dip claim): the Renyi q=2 column over m = 1..4 is
/// required to be non-monotone with a single interior minimum. The column
/// is in fact strictly increasing (for L- and Q-spectra alike, for every
/// order q sampled in 0.25..5, and under the Kronecker-growth reading too),
/// so this test is expected to fail; it exists to keep the claim honest
/// rather than silently dropped.
#[test]
fn a09_renyi_dip_claim() {
    let rows = grow_csv(4, 2.0, 2.0);
    let renyi_col: Vec<f64> = rows.iter().map(|r| r[6].parse().unwrap()).collect();
    assert_eq!(renyi_col.len(), 4);
    let diffs: Vec<f64> = renyi_col.windows(2).map(|w| w[1] - w[0]).collect();
    let sign_changes = diffs.windows(2).filter(|w| (w[0] < 0.0) != (w[1] < 0.0)).count();
    let has_interior_min = diffs.first().is_some_and(|&d| d < 0.0)
        && diffs.last().is_some_and(|&d| d > 0.0)
        && sign_changes == 1;
    if !has_interior_min {
        println!(
            "acceptance 09 renyi dip claim: FAIL (Renyi q=2 column over m=1..4 is {renyi_col:?}: strictly increasing, no interior minimum exists)"
        );
        panic!(
            "Renyi q=2 over corona iterations m=1..4 of K_3 is {renyi_col:?} (strictly increasing); \
             the claimed drop-then-rise shape does not occur for any spectrum kind or order sampled"
        );
    }
    println!("acceptance 09 renyi dip claim: PASS");
}

/// Criterion 10 (attainable part): moment dominance S_Q >= S_L at
/// q in {0.5, 2, 3}, pure-state zero entropy for K_2 in every family, and
/// the trace identity over the corpus.
#[test]
fn a10_property_suite() {
    let corpus = bound_corpus();
    for g in &corpus {
        let sl = Spectrum::numeric(g, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        let sq = Spectrum::numeric(g, MatrixKind::SignlessLaplacian, DEFAULT_TOL).unwrap();
        for q in [0.5, 2.0, 3.0] {
            assert!(
                sq.moment_sum(q).unwrap() >= sl.moment_sum(q).unwrap() - 1e-8,
                "{g} q={q}"
            );
        }
        assert!((sl.trace() - g.degree_sum() as f64).abs() < 1e-8, "{g}");
        assert!((sq.trace() - g.degree_sum() as f64).abs() < 1e-8, "{g}");
    }

    let k2 = density(&gen("complete:2"), MatrixKind::Laplacian);
    assert_eq!(von_neumann(&k2), 0.0);
    for (q, r) in [(0.5, 0.5), (2.0, 3.0), (3.0, 0.25)] {
        assert_eq!(sharma_mittal(&k2, q, r).unwrap(), 0.0);
        assert_eq!(renyi(&k2, q).unwrap(), 0.0);
        assert_eq!(tsallis(&k2, q).unwrap(), 0.0);
    }
    println!(
        "acceptance 10 property suite: PASS ({} graphs: S_Q >= S_L at q in {{0.5,2,3}}, pure state zero, traces equal 2m)",
        corpus.len()
    );
}

/// Criterion 10 (literal q = 1.5 grid point): S_{Q,q} >= S_{L,q} is
/// asserted for q = 1.5 as well, where it is provably false — L(K_3) =
/// {0,3,3} gives S_L = 6 sqrt3 > 10 = S_Q from Q(K_3) = {1,1,4} (exact
/// integers, no numerics involved). Every non-bipartite corpus graph
/// violates it there, so this test is expected to fail; the true theorem
/// holds for 0 < q <= 1 and q >= 2 and is covered by a10_property_suite
/// and the verify suite.
#[test]
fn a10_moment_dominance_full_grid() {
    let corpus = bound_corpus();
    let mut worst: Option<(String, f64)> = None;
    for g in &corpus {
        let sl = Spectrum::numeric(g, MatrixKind::Laplacian, DEFAULT_TOL).unwrap();
        let sq = Spectrum::numeric(g, MatrixKind::SignlessLaplacian, DEFAULT_TOL).unwrap();
        let gap = sl.moment_sum(1.5).unwrap() - sq.moment_sum(1.5).unwrap();
        if gap > 1e-8 && worst.as_ref().is_none_or(|(_, w)| gap > *w) {
            worst = Some((g.to_string(), gap));
        }
    }
    if let Some((name, gap)) = worst {
        println!(
            "acceptance 10 moment dominance at q=1.5: FAIL (S_L exceeds S_Q by up to {gap:.4} on {name}; e.g. K_3 has S_L = 6*sqrt(3) = 10.392 > 10 = S_Q exactly)"
        );
        panic!(
            "S_Q >= S_L fails at q = 1.5: worst violation {gap:.4} on {name}; \
             the relation reverses on 1 < q < 2 for non-bipartite graphs (K_3: 6 sqrt3 > 10, exact)"
        );
    }
    println!("acceptance 10 moment dominance at q=1.5: PASS");
}
