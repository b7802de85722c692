use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use exactla::bench::{
    canonical_text, cross_validate, generate_matrix, run_benchmark, AnyMatrix, BenchConfig, BenchRing,
    GroupParams, MatrixVisitor,
};
use exactla::charpoly::{charpoly_berkowitz, Algorithm};
use exactla::elimination::det_bareiss;
use exactla::matrix::DenseMatrix;
use exactla::modular::det_modular;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "exactla", version, about = "Exact characteristic polynomials and determinants")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the coefficients of det(A - X·I), highest degree first.
    Charpoly {
        #[arg(long)]
        algo: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print det(A).
    Det {
        #[arg(long = "in")]
        input: PathBuf,
        /// Multi-modular evaluation with CRT reconstruction (integer matrices only).
        #[arg(long)]
        modular: bool,
    },
    /// Run every applicable algorithm on a generated matrix and compare.
    Validate {
        #[arg(long)]
        group: u8,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Group 3 modulus.
        #[arg(long)]
        p: Option<u64>,
        /// Group 2/3 variables, comma separated.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        /// Group 3 ideal generators, separated by ';'.
        #[arg(long, value_delimiter = ';')]
        ideal: Vec<String>,
        /// Group 4: integer value for x.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<i64>,
        /// Also print the matrix.
        #[arg(long)]
        show: bool,
    },
    /// Run a benchmark configuration and write CSV and markdown reports.
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_csv: Option<PathBuf>,
        #[arg(long)]
        out_md: Option<PathBuf>,
    },
}

enum Outcome {
    Ok,
    Disagreement,
}

struct RunOne(Algorithm);

impl MatrixVisitor for RunOne {
    type Output = exactla::Result<(String, exactla::OpStats, f64)>;
    fn visit<R: BenchRing>(self, r: &R, a: &DenseMatrix<R::Elem>) -> Self::Output {
        r.applicable(a.rows(), self.0)?;
        let m = r.run(a, self.0)?;
        Ok((canonical_text(r, &m.charpoly), m.stats, m.ms))
    }
}

struct Det;

impl MatrixVisitor for Det {
    type Output = exactla::Result<String>;
    fn visit<R: BenchRing>(self, r: &R, a: &DenseMatrix<R::Elem>) -> Self::Output {
        let cp = charpoly_berkowitz(r, a, false)?;
        Ok(r.format(&cp.det()))
    }
}

fn read_matrix(path: &PathBuf) -> anyhow::Result<AnyMatrix> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(AnyMatrix::parse(&text)?)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let mut out = std::io::stdout().lock();
    match cli.cmd {
        Cmd::Charpoly { algo, input } => {
            let alg = Algorithm::from_name(&algo).ok_or_else(|| {
                let names: Vec<_> = Algorithm::ALL.iter().map(|a| a.name()).collect();
                anyhow!("unknown algorithm '{algo}' (one of {})", names.join(", "))
            })?;
            let m = read_matrix(&input)?;
            let (text, stats, ms) = m.visit(RunOne(alg))?;
            writeln!(out, "{text}")?;
            eprintln!(
                "{alg} over {}: adds={} subs={} muls={} divs={} exact_divs={} ms={ms:.3}",
                m.ring_description(),
                stats.adds,
                stats.subs,
                stats.muls,
                stats.divs,
                stats.exact_divs
            );
        }
        Cmd::Det { input, modular } => {
            let m = read_matrix(&input)?;
            let det = match (&m, modular) {
                (AnyMatrix::Z(a), true) => det_modular(a)?.to_string(),
                (_, true) => bail!("--modular needs an integer matrix, got {}", m.ring_description()),
                (AnyMatrix::Z(a), false) => det_bareiss(&exactla::ring::Integers, a)?.to_string(),
                _ => m.visit(Det)?,
            };
            writeln!(out, "{det}")?;
        }
        Cmd::Validate { group, n, seed, p, vars, ideal, x, show } => {
            let params = GroupParams { p, vars, ideal, x };
            let m = generate_matrix(group, n, seed, &params)?;
            if show {
                write!(out, "{}", m.to_text())?;
            }
            let rep = m.visit(Validate);
            writeln!(out, "group {group} n {n} seed {seed} over {}", m.ring_description())?;
            write!(out, "{}", rep.render())?;
            if !rep.is_unanimous() {
                return Ok(Outcome::Disagreement);
            }
            writeln!(out, "all {} computed results agree", rep.computed().count())?;
        }
        Cmd::Bench { config, out_csv, out_md } => {
            let cfg = BenchConfig::load(&config)?;
            let rep = run_benchmark(&cfg)?;
            match &out_csv {
                Some(p) => std::fs::write(p, rep.to_csv()).with_context(|| format!("writing {}", p.display()))?,
                None => write!(out, "{}", rep.to_csv())?,
            }
            if let Some(p) = &out_md {
                std::fs::write(p, rep.to_markdown()).with_context(|| format!("writing {}", p.display()))?;
            }
            if !rep.disagreements.is_empty() {
                for d in &rep.disagreements {
                    eprintln!("{d}");
                }
                return Ok(Outcome::Disagreement);
            }
        }
    }
    Ok(Outcome::Ok)
}

struct Validate;

impl MatrixVisitor for Validate {
    type Output = exactla::bench::ValidationReport;
    fn visit<R: BenchRing>(self, r: &R, a: &DenseMatrix<R::Elem>) -> Self::Output {
        cross_validate(r, a, &Algorithm::ALL)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Disagreement) => ExitCode::from(2),
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
