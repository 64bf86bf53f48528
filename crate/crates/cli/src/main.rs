//! `pgc`: analyse finite p-groups given by pc presentations.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pgc_core::analysis::Analysis;
use pgc_core::bilinear::DEFAULT_BUDGET;
use pgc_core::constructions::{self, Params, CATALOG};
use pgc_core::pc::PcGroup;
use pgc_core::report::{self, Input, Options, Report};
use pgc_core::verifier::{self, Outcome, Theorem};
use pgc_core::{pcp, Error};

#[derive(Parser)]
#[command(name = "pgc", version, about = "Commutator sets of finite p-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one group and print its report.
    Analyze(AnalyzeArgs),
    /// Analyse every .pcp file of a directory, one JSON line each.
    Batch(BatchArgs),
    /// List or build catalog presentations.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Classify against a theorem and run the lemma checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::A => Theorem::A,
            TheoremArg::B => Theorem::B,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct ParamArgs {
    #[arg(long)]
    p: Option<u32>,
    /// Number of generators (free class-2 groups).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    /// Non-residue overriding the smallest one.
    #[arg(long)]
    nonresidue: Option<u32>,
}

impl ParamArgs {
    fn params(&self, name: &str) -> Result<Params, Failure> {
        let p = match (self.p, name) {
            (Some(p), _) => p,
            (None, "T2_9") => 2,
            (None, _) => {
                return Err(Failure {
                    code: 1,
                    message: format!("catalog entry `{name}` needs --p"),
                })
            }
        };
        Ok(Params {
            p,
            n: self.n,
            r: self.r,
            s: self.s,
            t: self.t,
            nonresidue: self.nonresidue,
        })
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// A .pcp file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// A catalog entry name.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum)]
    theorem: Option<TheoremArg>,
    /// List every non-commutator instead of a preview.
    #[arg(long)]
    witnesses: bool,
    /// Include the lemma checks.
    #[arg(long)]
    lemmas: bool,
    /// Cap on |GL(V)| for the pseudo-isometry search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    report: Format,
    /// Append per-phase timings to the report.
    #[arg(long)]
    timings: bool,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BatchArgs {
    directory: PathBuf,
    #[arg(long, value_enum)]
    theorem: Option<TheoremArg>,
    #[arg(long)]
    witnesses: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long)]
    timings: bool,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Print the catalog as JSON.
    List,
    /// Write the presentation of an entry in .pcp format.
    Build {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum)]
    theorem: TheoremArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    report: Format,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

/// Failure with its exit status: 1 for usage and input errors, 2 for
/// hypothesis or consistency failures.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) | Error::Hypothesis(_) | Error::BudgetExceeded { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure {
            code: 1,
            message: format!("cannot write {}: {e}", p.display()),
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure {
                    code: 1,
                    message: format!("cannot write output: {e}"),
                })
        }
    }
}

fn load(source: &Source, params: &ParamArgs) -> Result<(PcGroup, Input), Failure> {
    if let Some(path) = &source.file {
        let text = fs::read_to_string(path).map_err(|e| Failure {
            code: 1,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let g = PcGroup::new_consistent(pcp::parse(&text)?)?;
        return Ok((g, Input::file(path, &text)));
    }
    let name = source.catalog.as_deref().expect("clap requires a source");
    let params = params.params(name)?;
    let g = constructions::group(name, &params)?;
    Ok((
        g,
        Input::Catalog {
            name: name.to_string(),
            params,
        },
    ))
}

fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Json => r.to_json() + "\n",
        Format::Text => r.to_text(),
    }
}

fn analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let (g, input) = load(&args.source, &args.params)?;
    let opts = Options {
        theorem: args.theorem.map(Into::into),
        all_witnesses: args.witnesses,
        lemmas: args.lemmas,
        budget: args.budget,
        timings: args.timings,
    };
    let r = report::analyze(&g, input, &opts);
    write_out(args.output.as_deref(), &render(&r, args.report))?;
    match &r.classification_error {
        Some(e) => Err(Failure {
            code: 2,
            message: e.clone(),
        }),
        None => Ok(()),
    }
}

fn batch(args: &BatchArgs) -> Result<(), Failure> {
    let opts = Options {
        theorem: args.theorem.map(Into::into),
        all_witnesses: args.witnesses,
        lemmas: false,
        budget: args.budget,
        timings: args.timings,
    };
    let (entries, summary) =
        report::run_batch_with_progress(&args.directory, &opts, |done, total, path| {
            eprintln!("[{done}/{total}] {}", path.display())
        })?;
    let mut text = String::new();
    for e in &entries {
        text.push_str(&e.to_json_line());
        text.push('\n');
    }
    text.push_str(&report::summary_line(&summary));
    text.push('\n');
    eprintln!(
        "{} files: {} equal, {} unequal, {} failed",
        summary.files, summary.equal, summary.unequal, summary.failed
    );
    write_out(args.output.as_deref(), &text)
}

fn catalog(cmd: &CatalogCommand) -> Result<(), Failure> {
    match cmd {
        CatalogCommand::List => {
            let doc = serde_json::json!({
                "format_version": report::REPORT_VERSION,
                "entries": CATALOG,
            });
            write_out(
                None,
                &(serde_json::to_string_pretty(&doc).expect("catalog serializes") + "\n"),
            )
        }
        CatalogCommand::Build {
            name,
            params,
            output,
        } => {
            let pres = constructions::build(name, &params.params(name)?)?;
            write_out(output.as_deref(), &pcp::serialize(&pres))
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let (g, input) = load(&args.source, &args.params)?;
    let a = Analysis::new(&g);
    let classification = verifier::classify(&a, args.theorem.into(), args.budget)?;
    let lemmas = verifier::lemma_suite(&a);
    let doc = serde_json::json!({
        "format_version": report::REPORT_VERSION,
        "input": input,
        "classification": classification,
        "lemmas": lemmas,
    });
    let text = match args.report {
        Format::Json => serde_json::to_string_pretty(&doc).expect("verdict serializes") + "\n",
        Format::Text => report::render_text(&doc),
    };
    write_out(args.output.as_deref(), &text)?;
    let failed: Vec<&str> = lemmas
        .iter()
        .filter(|l| l.outcome == Outcome::Fail)
        .map(|l| l.id)
        .collect();
    if classification.agree == Some(false) || !failed.is_empty() {
        return Err(Failure {
            code: 2,
            message: format!(
                "prediction agrees: {:?}; failed checks: {:?}",
                classification.agree, failed
            ),
        });
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Batch(b) => batch(b),
        Command::Catalog(c) => catalog(c),
        Command::Verify(v) => verify(v),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
