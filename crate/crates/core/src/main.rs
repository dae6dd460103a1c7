use clap::{Args, Parser, Subcommand};

use spectral_entropy::cli::{
    cmd_bounds, cmd_entropy, cmd_grow, cmd_product, cmd_spectrum, cmd_verify, parse_grid,
    CliError, CmdOutput, GraphSource, RunConfig,
};
use spectral_entropy::products::DEFAULT_VERTEX_CAP;

/// Generalized graph entropies from Laplacian spectra.
#[derive(Parser)]
#[command(name = "spectral-entropy", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// Edge-list file ('# comments', 'n <N>' header, '<u> <v>' lines)
    #[arg(long)]
    file: Option<String>,
    /// Generator spec: cycle:N | path:N | complete:N | bipartite:P,Q | er:N,P,SEED
    #[arg(long)]
    spec: Option<String>,
}

impl SourceArgs {
    fn resolve(&self) -> Result<GraphSource, CliError> {
        match (&self.file, &self.spec) {
            (Some(path), None) => Ok(GraphSource::File(path.into())),
            (None, Some(spec)) => spec
                .parse()
                .map(GraphSource::Spec)
                .map_err(|e: spectral_entropy::Error| CliError { exit_code: 2, message: e.to_string() }),
            _ => Err(CliError {
                exit_code: 2,
                message: "provide exactly one of --file or --spec".into(),
            }),
        }
    }
}

#[derive(Args)]
struct ConfigArgs {
    /// Matrix kind: L (Laplacian) or Q (signless Laplacian)
    #[arg(long, default_value = "L")]
    matrix: String,
    /// Entropy family: sm | renyi | tsallis | vn
    #[arg(long, default_value = "sm")]
    family: String,
    /// Entropy order q (q > 0)
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    q: f64,
    /// Sharma-Mittal parameter r (any real; r = 1 routes to Renyi)
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    r: f64,
    /// Eigensolver off-diagonal tolerance
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Output format: json | csv | plain
    #[arg(long, default_value = "json")]
    output: String,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<RunConfig, CliError> {
        Ok(RunConfig {
            matrix: self.matrix.parse().map_err(CliError::from_error)?,
            family: self.family.parse().map_err(CliError::from_error)?,
            q: self.q,
            r: self.r,
            tol: self.tol,
            output: self.output.parse().map_err(CliError::from_error)?,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Entropy of a graph's Laplacian (or signless-Laplacian) quantum state
    Entropy {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Raw and density spectra of a graph matrix
    Spectrum {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        cfg: ConfigArgs,
        /// Use the closed-form spectrum for recognized families
        #[arg(long)]
        closed_form: bool,
    },
    /// Entropy bounds from graph parameters, with applicability flags
    Bounds {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Build a graph product; compare formula and numeric spectra
    Product {
        /// First factor: generator spec or edge-list file path
        #[arg(long)]
        a: String,
        /// Second factor: generator spec or edge-list file path
        #[arg(long)]
        b: String,
        /// cartesian | kronecker | strong | lexicographic | corona
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Iterated corona growth sweep, CSV output
    Grow {
        #[command(flatten)]
        source: SourceArgs,
        /// Number of corona iterations
        #[arg(long, default_value_t = 3)]
        iterations: usize,
        /// Parameter grid "q1:r1,q2:r2,..."; defaults to a single (--q, --r)
        #[arg(long)]
        grid: Option<String>,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Cross-validate closed forms and product formulas against the
    /// eigensolver
    Verify {
        #[command(flatten)]
        cfg: ConfigArgs,
    },
}

fn vertex_cap() -> Result<usize, CliError> {
    match std::env::var("SPECTRAL_ENTROPY_VERTEX_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| CliError {
            exit_code: 4,
            message: format!("SPECTRAL_ENTROPY_VERTEX_CAP must be a positive integer (got '{v}')"),
        }),
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
    }
}

fn run(cli: Cli) -> Result<CmdOutput, CliError> {
    match cli.command {
        Command::Entropy { source, cfg } => cmd_entropy(&source.resolve()?, &cfg.resolve()?),
        Command::Spectrum { source, cfg, closed_form } => {
            cmd_spectrum(&source.resolve()?, &cfg.resolve()?, closed_form)
        }
        Command::Bounds { source, cfg } => cmd_bounds(&source.resolve()?, &cfg.resolve()?),
        Command::Product { a, b, kind, cfg } => {
            let kind = kind.parse().map_err(CliError::from_error)?;
            cmd_product(
                &GraphSource::parse_arg(&a),
                &GraphSource::parse_arg(&b),
                kind,
                &cfg.resolve()?,
            )
        }
        Command::Grow { source, iterations, grid, cfg } => {
            // grow is a CSV sweep regardless of --output
            let cfg = cfg.resolve()?;
            let grid = match grid {
                Some(s) => parse_grid(&s)?,
                None => Vec::new(),
            };
            cmd_grow(&source.resolve()?, iterations, &grid, &cfg, vertex_cap()?)
        }
        Command::Verify { cfg } => cmd_verify(&cfg.resolve()?),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            for warning in &out.warnings {
                eprintln!("{warning}");
            }
            std::process::exit(out.exit_code);
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.exit_code);
        }
    }
}
