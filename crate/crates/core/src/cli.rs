//! Command implementations behind the `spectral-entropy` binary. Each
//! command returns its stdout as a string (plus warnings destined for
//! stderr) so the binary stays a thin argument-parsing shell and the
//! behavior is testable in-process.
//!
//! Output conventions:
//! - JSON is emitted with a fixed key order and floats printed with 17
//!   significant digits (`{:.16e}`), so identical inputs produce
//!   byte-identical output;
//! - errors never go to stdout;
//! - exit codes: 0 success, 2 source/parse errors, 3 empty graph,
//!   4 parameter errors, 1 anything else (and `verify` failures).

use std::fmt::Write as _;
use std::path::PathBuf;

use crate::bounds::{bound_report, BoundReport};
use crate::entropy::{entropy, renyi, tsallis, von_neumann, EntropyFamily, EntropyParams};
use crate::error::Error;
use crate::graph::{generate, Graph, GraphFamily, MatrixKind};
use crate::products::{product, ProductKind};
use crate::spectra::{
    closed_form_spectrum, corona_graph_spectrum, max_multiset_deviation, product_spectrum,
    DensitySpectrum, ProductAux, Spectrum,
};
use crate::verify::run_all_checks;

/// A graph input: either a generator spec string or an edge-list file.
#[derive(Debug, Clone)]
pub enum GraphSource {
    Spec(GraphFamily),
    File(PathBuf),
}

impl GraphSource {
    /// Interprets a bare argument: anything that parses as a generator spec
    /// is one; everything else is treated as a file path.
    pub fn parse_arg(s: &str) -> GraphSource {
        match s.parse::<GraphFamily>() {
            Ok(fam) => GraphSource::Spec(fam),
            Err(_) => GraphSource::File(PathBuf::from(s)),
        }
    }

    pub fn load(&self) -> Result<Graph, CliError> {
        match self {
            GraphSource::Spec(fam) => generate(fam).map_err(CliError::from_error),
            GraphSource::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError {
                    exit_code: 2,
                    message: format!("cannot read {}: {e}", path.display()),
                })?;
                Graph::from_edge_list(&text).map_err(CliError::from_error)
            }
        }
    }

    /// The generator family, when this source is a spec.
    pub fn family(&self) -> Option<&GraphFamily> {
        match self {
            GraphSource::Spec(f) => Some(f),
            GraphSource::File(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "plain" => Ok(OutputFormat::Plain),
            other => Err(Error::InvalidParameter(format!(
                "unknown output format '{other}' (expected json|csv|plain)"
            ))),
        }
    }
}

/// Shared command configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub matrix: MatrixKind,
    pub family: EntropyFamily,
    pub q: f64,
    pub r: f64,
    pub tol: f64,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            matrix: MatrixKind::Laplacian,
            family: EntropyFamily::SharmaMittal,
            q: 2.0,
            r: 2.0,
            tol: crate::spectra::DEFAULT_TOL,
            output: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    fn params(&self) -> EntropyParams {
        EntropyParams {
            family: self.family,
            q: self.q,
            r: self.r,
            limit_tol: crate::entropy::DEFAULT_LIMIT_TOL,
        }
    }
}

/// Command error: message for stderr plus the process exit code.
#[derive(Debug, Clone)]
pub struct CliError {
    pub exit_code: i32,
    pub message: String,
}

impl CliError {
    pub fn parameter(message: impl Into<String>) -> Self {
        CliError { exit_code: 4, message: message.into() }
    }

    pub fn from_error(e: Error) -> Self {
        let exit_code = match e {
            Error::ParseError(_) | Error::InvalidCount | Error::IndexOutOfRange(..) | Error::SelfLoop(_) => 2,
            Error::EmptyGraph => 3,
            Error::InvalidParameter(_)
            | Error::NonPositiveQ(_)
            | Error::ParameterAtLimit { .. }
            | Error::UnsupportedCombination
            | Error::SizeCapExceeded { .. } => 4,
            _ => 1,
        };
        CliError { exit_code, message: e.to_string() }
    }
}

/// What a command produced: stdout text, stderr warnings, exit code.
#[derive(Debug, Clone)]
pub struct CmdOutput {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput { stdout, warnings: Vec::new(), exit_code: 0 }
    }
}

// ---------------------------------------------------------------------------
// JSON helpers: fixed key order, 17-significant-digit floats
// ---------------------------------------------------------------------------

fn json_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn json_f64_array(xs: &[f64]) -> String {
    let mut out = String::from("[");
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&json_f64(*x));
    }
    out.push(']');
    out
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn graph_json(g: &Graph) -> String {
    format!("{{\"n\":{},\"m\":{}}}", g.vertex_count(), g.edge_count())
}

fn density_of(g: &Graph, spectrum: &Spectrum) -> Result<DensitySpectrum, CliError> {
    DensitySpectrum::new(spectrum, g.edge_count()).map_err(CliError::from_error)
}

// ---------------------------------------------------------------------------
// entropy
// ---------------------------------------------------------------------------

pub fn cmd_entropy(source: &GraphSource, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let g = source.load()?;
    let spectrum = Spectrum::numeric(&g, cfg.matrix, cfg.tol).map_err(CliError::from_error)?;
    let ds = density_of(&g, &spectrum)?;
    let value = entropy(&ds, &cfg.params()).map_err(CliError::from_error)?;

    let stdout = match cfg.output {
        OutputFormat::Json => format!(
            "{{\"graph\":{},\"matrix\":\"{}\",\"family\":\"{}\",\"q\":{},\"r\":{},\"value\":{},\"spectrum\":{}}}\n",
            graph_json(&g),
            cfg.matrix.short_name(),
            cfg.family.name(),
            json_f64(cfg.q),
            json_f64(cfg.r),
            json_f64(value),
            json_f64_array(ds.probs()),
        ),
        OutputFormat::Plain => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: n={} m={}", g.vertex_count(), g.edge_count());
            let _ = writeln!(s, "matrix: {}", cfg.matrix.short_name());
            let _ = writeln!(s, "family: {} q={} r={}", cfg.family.name(), cfg.q, cfg.r);
            let _ = writeln!(s, "value: {value}");
            s
        }
        OutputFormat::Csv => {
            return Err(CliError::parameter("csv output is only available for grow"))
        }
    };
    Ok(CmdOutput::ok(stdout))
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

pub fn cmd_spectrum(
    source: &GraphSource,
    cfg: &RunConfig,
    use_closed_form: bool,
) -> Result<CmdOutput, CliError> {
    let g = source.load()?;
    let spectrum = if use_closed_form {
        let family = source.family().ok_or_else(|| {
            CliError::parameter("--closed-form requires a generator spec source")
        })?;
        closed_form_spectrum(family, cfg.matrix).map_err(CliError::from_error)?
    } else {
        Spectrum::numeric(&g, cfg.matrix, cfg.tol).map_err(CliError::from_error)?
    };
    let ds = density_of(&g, &spectrum)?;

    let stdout = match cfg.output {
        OutputFormat::Json => format!(
            "{{\"graph\":{},\"matrix\":\"{}\",\"source\":\"{}\",\"raw\":{},\"density\":{}}}\n",
            graph_json(&g),
            cfg.matrix.short_name(),
            spectrum.source().name(),
            json_f64_array(spectrum.values()),
            json_f64_array(ds.probs()),
        ),
        OutputFormat::Plain => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: n={} m={}", g.vertex_count(), g.edge_count());
            let _ = writeln!(s, "matrix: {} ({})", cfg.matrix.short_name(), spectrum.source().name());
            let _ = writeln!(s, "raw: {:?}", spectrum.values());
            let _ = writeln!(s, "density: {:?}", ds.probs());
            s
        }
        OutputFormat::Csv => {
            return Err(CliError::parameter("csv output is only available for grow"))
        }
    };
    Ok(CmdOutput::ok(stdout))
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

fn bound_report_json(report: &BoundReport) -> String {
    let p = &report.prerequisites;
    let mut s = String::from("{");
    let _ = write!(
        s,
        "\"graph\":{{\"n\":{},\"m\":{}}},\"matrix\":\"{}\",\"q\":{},\"r\":{},\"measured\":{}",
        report.n,
        report.m,
        report.matrix.short_name(),
        json_f64(report.q),
        json_f64(report.r),
        json_f64(report.measured),
    );
    let _ = write!(
        s,
        ",\"eigenvalue_min\":{},\"eigenvalue_max\":{}",
        json_f64(report.eigenvalue_min),
        json_f64(report.eigenvalue_max),
    );
    let _ = write!(
        s,
        ",\"prerequisites\":{{\"max_degree\":{},\"max_adjacent_degree_sum\":{},\"regularity\":{},\"bipartite\":{},\"connected\":{},\"spanning_trees\":{},\"clique_number\":{}}}",
        p.max_degree,
        p.max_adjacent_degree_sum,
        p.regularity.map_or("null".to_string(), |k| k.to_string()),
        p.bipartite,
        p.connected,
        p.spanning_trees,
        p.clique_number.map_or("null".to_string(), |w| w.to_string()),
    );
    s.push_str(",\"entries\":[");
    for (i, e) in report.entries.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(
            s,
            "{{\"name\":\"{}\",\"side\":\"{}\",\"value\":{},\"applicable\":{},\"regime_valid\":{},\"reason\":\"{}\"}}",
            e.name,
            e.side.name(),
            e.value.map_or("null".to_string(), json_f64),
            e.applicable,
            e.regime_valid,
            json_escape(&e.reason),
        );
    }
    s.push_str("]}\n");
    s
}

pub fn cmd_bounds(source: &GraphSource, cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let g = source.load()?;
    let report = bound_report(&g, cfg.q, cfg.r, cfg.matrix).map_err(CliError::from_error)?;

    let stdout = match cfg.output {
        OutputFormat::Json => bound_report_json(&report),
        OutputFormat::Plain => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "graph: n={} m={} matrix={} q={} r={}",
                report.n,
                report.m,
                report.matrix.short_name(),
                report.q,
                report.r
            );
            let _ = writeln!(s, "measured entropy: {}", report.measured);
            for e in &report.entries {
                let value = e.value.map_or("-".to_string(), |v| v.to_string());
                let _ = writeln!(
                    s,
                    "{:<32} {:<5} value={} applicable={} regime_valid={} {}",
                    e.name,
                    e.side.name(),
                    value,
                    e.applicable,
                    e.regime_valid,
                    e.reason
                );
            }
            s
        }
        OutputFormat::Csv => {
            return Err(CliError::parameter("csv output is only available for grow"))
        }
    };
    Ok(CmdOutput::ok(stdout))
}

// ---------------------------------------------------------------------------
// product
// ---------------------------------------------------------------------------

pub fn cmd_product(
    a: &GraphSource,
    b: &GraphSource,
    kind: ProductKind,
    cfg: &RunConfig,
) -> Result<CmdOutput, CliError> {
    let ga = a.load()?;
    let gb = b.load()?;
    let built = product(&ga, &gb, kind).map_err(CliError::from_error)?;
    let numeric = Spectrum::numeric(&built, cfg.matrix, cfg.tol).map_err(CliError::from_error)?;
    let ds = density_of(&built, &numeric)?;
    let value = entropy(&ds, &cfg.params()).map_err(CliError::from_error)?;

    // the product-spectrum formulas are Laplacian-only and need regular
    // factors for some kinds; a failed precondition is reported, not fatal
    let formula = if cfg.matrix == MatrixKind::Laplacian {
        let sa = Spectrum::numeric(&ga, MatrixKind::Laplacian, cfg.tol).map_err(CliError::from_error)?;
        let sb = Spectrum::numeric(&gb, MatrixKind::Laplacian, cfg.tol).map_err(CliError::from_error)?;
        product_spectrum(&sa, &sb, kind, &ProductAux::from_graphs(&ga, &gb))
    } else {
        Err(Error::LaplacianRequired)
    };

    let stdout = match cfg.output {
        OutputFormat::Json => {
            let (formula_json, deviation_json, error_json) = match &formula {
                Ok(s) => (
                    json_f64_array(s.values()),
                    json_f64(max_multiset_deviation(s, &numeric)),
                    "null".to_string(),
                ),
                Err(e) => (
                    "null".to_string(),
                    "null".to_string(),
                    format!("\"{}\"", json_escape(&e.to_string())),
                ),
            };
            format!(
                "{{\"a\":{},\"b\":{},\"kind\":\"{}\",\"product\":{},\"matrix\":\"{}\",\"family\":\"{}\",\"q\":{},\"r\":{},\"entropy\":{},\"numeric_spectrum\":{},\"formula_spectrum\":{},\"max_abs_deviation\":{},\"formula_error\":{}}}\n",
                graph_json(&ga),
                graph_json(&gb),
                kind.name(),
                graph_json(&built),
                cfg.matrix.short_name(),
                cfg.family.name(),
                json_f64(cfg.q),
                json_f64(cfg.r),
                json_f64(value),
                json_f64_array(numeric.values()),
                formula_json,
                deviation_json,
                error_json,
            )
        }
        OutputFormat::Plain => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "product: {} of n={} m={} and n={} m={} -> n={} m={}",
                kind.name(),
                ga.vertex_count(),
                ga.edge_count(),
                gb.vertex_count(),
                gb.edge_count(),
                built.vertex_count(),
                built.edge_count()
            );
            let _ = writeln!(s, "entropy ({} q={} r={}): {value}", cfg.family.name(), cfg.q, cfg.r);
            match &formula {
                Ok(f) => {
                    let _ = writeln!(
                        s,
                        "formula vs numeric max deviation: {:e}",
                        max_multiset_deviation(f, &numeric)
                    );
                }
                Err(e) => {
                    let _ = writeln!(s, "formula spectrum unavailable: {e}");
                }
            }
            s
        }
        OutputFormat::Csv => {
            return Err(CliError::parameter("csv output is only available for grow"))
        }
    };
    Ok(CmdOutput::ok(stdout))
}

// ---------------------------------------------------------------------------
// grow
// ---------------------------------------------------------------------------

/// Parses a parameter grid `"q1:r1,q2:r2,..."`.
pub fn parse_grid(s: &str) -> Result<Vec<(f64, f64)>, CliError> {
    let mut grid = Vec::new();
    for part in s.split(',') {
        let (q, r) = part
            .split_once(':')
            .ok_or_else(|| CliError::parameter(format!("bad grid entry '{part}' (expected q:r)")))?;
        let q: f64 = q
            .trim()
            .parse()
            .map_err(|_| CliError::parameter(format!("bad grid q in '{part}'")))?;
        let r: f64 = r
            .trim()
            .parse()
            .map_err(|_| CliError::parameter(format!("bad grid r in '{part}'")))?;
        grid.push((q, r));
    }
    Ok(grid)
}

/// Corona growth sweep: one CSV row per (iteration, grid point), iterations
/// 1..=`iterations`, emitted iteration-major in grid order.
///
/// Spectra come from the recursive corona spectrum (oracle-validated
/// elsewhere), so the graphs themselves are never materialized; vertex and
/// edge counts follow the exact recurrences `n' = n (1 + n0)`,
/// `m' = m + n (m0 + n0)`. Laplacian-only.
pub fn cmd_grow(
    source: &GraphSource,
    iterations: usize,
    grid: &[(f64, f64)],
    cfg: &RunConfig,
    cap: usize,
) -> Result<CmdOutput, CliError> {
    if cfg.matrix != MatrixKind::Laplacian {
        return Err(CliError::parameter(
            "grow supports the Laplacian spectrum only (the corona spectrum recursion is L-based)",
        ));
    }
    let grid = if grid.is_empty() { vec![(cfg.q, cfg.r)] } else { grid.to_vec() };
    for &(q, r) in &grid {
        if q <= 0.0 {
            return Err(CliError::parameter(format!("grid q must be positive (got {q})")));
        }
        if (q - 1.0).abs() <= crate::entropy::DEFAULT_LIMIT_TOL {
            return Err(CliError::parameter(
                "grid q = 1 is a removable singularity of the Renyi/Tsallis columns; use the von_neumann column instead",
            ));
        }
        let _ = r;
    }

    let seed = source.load()?;
    let seed_spectrum = Spectrum::numeric(&seed, MatrixKind::Laplacian, cfg.tol)
        .map_err(CliError::from_error)?;
    let n0 = seed.vertex_count();
    let m0 = seed.edge_count();

    let mut stdout = String::from("iteration,n,m,q,r,sharma_mittal,renyi,tsallis,von_neumann\n");
    let mut warnings = Vec::new();
    let mut n_k = n0;
    let mut m_k = m0;
    for k in 1..=iterations {
        m_k += n_k * (m0 + n0);
        n_k *= 1 + n0;
        let spectrum = match corona_graph_spectrum(&seed_spectrum, k, cap) {
            Ok(s) => s,
            Err(Error::SizeCapExceeded { required, cap }) => {
                warnings.push(format!(
                    "warning: iteration {k} needs {required} vertices, over the cap of {cap}; stopping early"
                ));
                break;
            }
            Err(e) => return Err(CliError::from_error(e)),
        };
        let ds = DensitySpectrum::new(&spectrum, m_k).map_err(CliError::from_error)?;
        for &(q, r) in &grid {
            let sm = entropy(&ds, &EntropyParams::sharma_mittal(q, r)).map_err(CliError::from_error)?;
            let re = renyi(&ds, q).map_err(CliError::from_error)?;
            let ts = tsallis(&ds, q).map_err(CliError::from_error)?;
            let vn = von_neumann(&ds);
            let _ = writeln!(
                stdout,
                "{k},{n_k},{m_k},{q},{r},{},{},{},{}",
                json_f64(sm),
                json_f64(re),
                json_f64(ts),
                json_f64(vn)
            );
        }
    }
    Ok(CmdOutput { stdout, warnings, exit_code: 0 })
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

pub fn cmd_verify(cfg: &RunConfig) -> Result<CmdOutput, CliError> {
    let results = run_all_checks(cfg.tol);
    let mut stdout = String::new();
    let mut all_passed = true;
    for r in &results {
        all_passed &= r.passed;
        let _ = writeln!(
            stdout,
            "{} {:<42} {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    let _ = writeln!(
        stdout,
        "{}/{} checks passed",
        results.iter().filter(|r| r.passed).count(),
        results.len()
    );
    Ok(CmdOutput {
        stdout,
        warnings: Vec::new(),
        exit_code: if all_passed { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_has_17_significant_digits() {
        assert_eq!(json_f64(0.625), "6.2500000000000000e-1");
        assert_eq!(json_f64(1.5), "1.5000000000000000e0");
        assert_eq!(json_f64(f64::INFINITY), "null");
    }

    #[test]
    fn escaping() {
        assert_eq!(json_escape("a\"b\\c\nd"), "a\\\"b\\\\c\\nd");
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("2:2,0.5:0.5").unwrap(), vec![(2.0, 2.0), (0.5, 0.5)]);
        assert!(parse_grid("2").is_err());
        assert!(parse_grid("a:b").is_err());
    }

    #[test]
    fn source_arg_parsing() {
        assert!(matches!(GraphSource::parse_arg("cycle:4"), GraphSource::Spec(_)));
        assert!(matches!(GraphSource::parse_arg("graphs/g1.edges"), GraphSource::File(_)));
    }

    #[test]
    fn entropy_command_json_shape() {
        let src = GraphSource::parse_arg("cycle:4");
        let out = cmd_entropy(&src, &RunConfig::default()).unwrap();
        assert!(out.stdout.starts_with("{\"graph\":{\"n\":4,\"m\":4},\"matrix\":\"L\",\"family\":\"sm\""));
        assert!(out.stdout.contains("\"value\":6.2500000000000000e-1"));
        assert_eq!(out.exit_code, 0);
    }

    #[test]
    fn entropy_command_empty_graph_is_exit_3() {
        let src = GraphSource::parse_arg("er:4,0,1");
        let err = cmd_entropy(&src, &RunConfig::default()).unwrap_err();
        assert_eq!(err.exit_code, 3);
    }

    #[test]
    fn spectrum_command_closed_form() {
        let src = GraphSource::parse_arg("complete:4");
        let out = cmd_spectrum(&src, &RunConfig::default(), true).unwrap();
        assert!(out.stdout.contains("\"source\":\"closed-form\""));
        assert!(out.stdout.contains("4.0000000000000000e0"));
    }

    #[test]
    fn product_command_reports_formula_gap() {
        let a = GraphSource::parse_arg("complete:2");
        let out = cmd_product(&a, &a, ProductKind::Cartesian, &RunConfig::default()).unwrap();
        assert!(out.stdout.contains("\"formula_error\":null"));
        assert!(out.stdout.contains("\"max_abs_deviation\":"));

        let p3 = GraphSource::parse_arg("path:3");
        let out = cmd_product(&p3, &a, ProductKind::Kronecker, &RunConfig::default()).unwrap();
        assert!(out.stdout.contains("\"formula_spectrum\":null"));
        assert!(out.stdout.contains("regular factors"));
    }

    #[test]
    fn grow_rejects_signless() {
        let src = GraphSource::parse_arg("complete:3");
        let cfg = RunConfig { matrix: MatrixKind::SignlessLaplacian, ..RunConfig::default() };
        assert_eq!(cmd_grow(&src, 2, &[], &cfg, 20_000).unwrap_err().exit_code, 4);
    }

    #[test]
    fn grow_emits_expected_counts() {
        let src = GraphSource::parse_arg("complete:3");
        let out = cmd_grow(&src, 3, &[(2.0, 2.0)], &RunConfig::default(), 20_000).unwrap();
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines[0], "iteration,n,m,q,r,sharma_mittal,renyi,tsallis,von_neumann");
        assert!(lines[1].starts_with("1,12,21,2,2,"));
        assert!(lines[2].starts_with("2,48,93,2,2,"));
        assert!(lines[3].starts_with("3,192,381,2,2,"));
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn grow_warns_at_cap() {
        let src = GraphSource::parse_arg("complete:3");
        let out = cmd_grow(&src, 4, &[(2.0, 2.0)], &RunConfig::default(), 100).unwrap();
        // rows for iterations 1 and 2 (12 and 48 vertices), then the cap
        assert_eq!(out.stdout.lines().count(), 3);
        assert_eq!(out.warnings.len(), 1);
        assert!(out.warnings[0].contains("cap"));
        assert_eq!(out.exit_code, 0);
    }
}
