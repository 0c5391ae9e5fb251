//! The `sigmab` command line: braid normal forms, configuration keys and
//! stacking, evaluation into a chosen category, the ΣB checks, and SVG
//! pictures.
//!
//! [`run`] never touches the process: it returns the exit code and both
//! output streams, so tests drive it directly.

pub mod render;

use std::ffi::OsString;
use std::fmt;
use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sigmab::bmc::{eval_braid, BicharBmc, Bmc, CategoryChoice, FreeBmc, PermBmc};
use sigmab::braid::{BraidWord, LabelledBraid};
use sigmab::config::{Configuration, CrossingConvention};
use sigmab::equiv;
use sigmab::laws::{self, LawReport, Sample};
use sigmab::sigma::SigmaB;
use sigmab::words::{parse_word, Word};

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "sigmab",
    version,
    about = "Braids, slide cliques and the ΣB construction"
)]
pub struct Cli {
    /// Base category: free, perm or bichar:<n>.
    #[arg(long, global = true, default_value = "free")]
    pub category: CategoryChoice,

    /// Seed for the law suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Cases per law.
    #[arg(long, global = true, default_value_t = 100)]
    pub cases: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Braid words.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Configurations given as JSON files.
    #[command(subcommand)]
    Config(ConfigCmd),
    /// Evaluation of labelled braids into the base category.
    #[command(subcommand)]
    Fo(FoCmd),
    /// Checks on the ΣB construction over the base category.
    #[command(subcommand)]
    Sigma(SigmaCmd),
    /// SVG pictures on stdout.
    #[command(subcommand)]
    Render(RenderCmd),
}

#[derive(Subcommand, Debug)]
pub enum BraidCmd {
    /// Prints the normal form and the word it rebuilds.
    Normalize { word: String },
    /// Exits 0 if the braids are equal and 1 otherwise.
    Eq { left: String, right: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// The first configuration on top.
    Vertical,
    /// The first configuration on the left.
    Horizontal,
}

#[derive(Subcommand, Debug)]
pub enum ConfigCmd {
    /// Prints the slide key and canonical word.
    Canon { file: String },
    /// Exits 0 if the configurations are slide-equivalent and 1 otherwise.
    Eq { left: String, right: String },
    /// Prints the stacked configuration as JSON.
    Stack {
        #[arg(value_enum)]
        direction: Direction,
        first: String,
        second: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum FoCmd {
    /// Evaluates a braid between two parenthesised words.
    Eval {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        braid: String,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ConventionArg {
    /// Sign rule for order-change crossings.
    #[arg(long, value_enum, default_value_t = Convention::Positive)]
    pub convention: Convention,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Positive,
    Mirrored,
}

impl From<Convention> for CrossingConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Positive => CrossingConvention::Positive,
            Convention::Mirrored => CrossingConvention::Mirrored,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Bmc,
    Underlying,
    TwoMonoidal,
    Equivalence,
}

#[derive(Subcommand, Debug)]
pub enum SigmaCmd {
    /// The Eckmann-Hilton composite on two singletons; exits 1 unless it
    /// agrees with the image of the braiding.
    Eh {
        /// Two base objects, comma separated.
        #[arg(long)]
        labels: String,
        #[command(flatten)]
        convention: ConventionArg,
    },
    /// Samples the interchange law.
    Interchange {
        #[command(flatten)]
        convention: ConventionArg,
    },
    /// Runs the law suites; exits 1 on any failure.
    Laws {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Only the named law.
        #[arg(long)]
        law: Option<String>,
        /// Replays one case of `--law` instead of sampling.
        #[arg(long, requires = "law")]
        case: Option<usize>,
        #[command(flatten)]
        convention: ConventionArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum RenderCmd {
    Braid { word: String },
    Config { file: String },
    Linearisation { file: String },
}

/// Failures that map to exit code 2.
#[derive(Debug)]
pub enum CliError {
    Core(sigmab::Error),
    Read { path: String, reason: String },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Read { path, reason } => write!(f, "cannot read `{path}`: {reason}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<sigmab::Error> for CliError {
    fn from(e: sigmab::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// A successful command: exit 0 or 1 and its stdout.
struct Done {
    ok: bool,
    out: String,
}

impl Done {
    fn ok(out: String) -> Self {
        Done { ok: true, out }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(done) => Outcome {
            code: if done.ok { 0 } else { 1 },
            stdout: done.out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> CliResult<Done> {
    match &cli.command {
        Command::Braid(cmd) => braid_cmd(cli, cmd),
        Command::Config(cmd) => config_cmd(cli, cmd),
        Command::Render(cmd) => render_cmd(cmd),
        Command::Fo(FoCmd::Eval {
            source,
            target,
            braid,
        }) => {
            let braid: BraidWord = braid.parse()?;
            match cli.category {
                CategoryChoice::Free => fo_eval(cli, &FreeBmc::standard(), source, target, &braid),
                CategoryChoice::Perm => fo_eval(cli, &PermBmc, source, target, &braid),
                CategoryChoice::Bichar(n) => {
                    fo_eval(cli, &BicharBmc::new(n), source, target, &braid)
                }
            }
        }
        Command::Sigma(cmd) => {
            let convention = match cmd {
                SigmaCmd::Eh { convention, .. }
                | SigmaCmd::Interchange { convention }
                | SigmaCmd::Laws { convention, .. } => convention.convention.into(),
            };
            match cli.category {
                CategoryChoice::Free => sigma_cmd(
                    cli,
                    cmd,
                    SigmaB::with_convention(FreeBmc::standard(), convention),
                ),
                CategoryChoice::Perm => {
                    sigma_cmd(cli, cmd, SigmaB::with_convention(PermBmc, convention))
                }
                CategoryChoice::Bichar(n) => sigma_cmd(
                    cli,
                    cmd,
                    SigmaB::with_convention(BicharBmc::new(n), convention),
                ),
            }
        }
    }
}

fn json_line(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

fn read(path: &str) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Read {
        path: path.to_string(),
        reason: e.to_string(),
    })
}

fn load_config(path: &str) -> CliResult<Configuration<String>> {
    Ok(Configuration::from_json(&read(path)?)?)
}

fn braid_cmd(cli: &Cli, cmd: &BraidCmd) -> CliResult<Done> {
    match cmd {
        BraidCmd::Normalize { word } => {
            let word: BraidWord = word.parse()?;
            let nf = word.normal_form();
            let rebuilt = nf.to_word();
            Ok(Done::ok(match cli.format {
                Format::Text => format!("normal form: {nf}\nword: {rebuilt}\n"),
                Format::Json => json_line(json!({
                    "normal_form": nf.to_string(),
                    "delta_power": nf.delta_power(),
                    "word": rebuilt.to_string(),
                })),
            }))
        }
        BraidCmd::Eq { left, right } => {
            let u: BraidWord = left.parse()?;
            let v: BraidWord = right.parse()?;
            let equal = u.braid_eq(&v)?;
            Ok(Done {
                ok: equal,
                out: match cli.format {
                    Format::Text => format!("{}\n", if equal { "equal" } else { "not equal" }),
                    Format::Json => json_line(json!({ "equal": equal })),
                },
            })
        }
    }
}

fn config_cmd(cli: &Cli, cmd: &ConfigCmd) -> CliResult<Done> {
    match cmd {
        ConfigCmd::Canon { file } => {
            let x = load_config(file)?;
            let rep = x.canonical_rep();
            Ok(Done::ok(match cli.format {
                Format::Text => format!("key: {}\nword: {}\n", x.slide_key(), rep.word),
                Format::Json => json_line(json!({
                    "key": x.slide_key().to_string(),
                    "word": rep.word.to_string(),
                    "configuration": x.to_json(),
                })),
            }))
        }
        ConfigCmd::Eq { left, right } => {
            let equal = load_config(left)?.slide_equal(&load_config(right)?);
            Ok(Done {
                ok: equal,
                out: match cli.format {
                    Format::Text => format!(
                        "{}\n",
                        if equal {
                            "slide-equivalent"
                        } else {
                            "not slide-equivalent"
                        }
                    ),
                    Format::Json => json_line(json!({ "slide_equivalent": equal })),
                },
            })
        }
        ConfigCmd::Stack {
            direction,
            first,
            second,
        } => {
            let (x, y) = (load_config(first)?, load_config(second)?);
            let stacked = match direction {
                Direction::Vertical => x.vstack(&y),
                Direction::Horizontal => x.hstack(&y),
            };
            // the JSON form is itself a configuration file in both formats
            Ok(Done::ok(json_line(stacked.to_json())))
        }
    }
}

fn render_cmd(cmd: &RenderCmd) -> CliResult<Done> {
    Ok(Done::ok(match cmd {
        RenderCmd::Braid { word } => render::render_braid(&word.parse()?),
        RenderCmd::Config { file } => render::render_config(&load_config(file)?),
        RenderCmd::Linearisation { file } => render::render_linearisation(&load_config(file)?),
    }))
}

/// A word whose leaves are objects of `cat`.
fn parse_obj_word<B: Bmc>(cat: &B, text: &str) -> CliResult<Word<B::Obj>> {
    Ok(parse_word(text)?.try_map(&mut |l: &String| cat.parse_obj(l))?)
}

fn fo_eval<B: Bmc>(
    cli: &Cli,
    cat: &B,
    source: &str,
    target: &str,
    braid: &BraidWord,
) -> CliResult<Done> {
    let source = parse_obj_word(cat, source)?;
    let target = parse_obj_word(cat, target)?;
    let labelled = LabelledBraid::new(braid.clone(), source.flatten())?;
    let f = eval_braid(cat, &source, &target, &labelled)?;
    Ok(Done::ok(match cli.format {
        Format::Text => format!("{}\n", cat.show_mor(&f)),
        Format::Json => json_line(cat.mor_json(&f)),
    }))
}

fn sigma_cmd<B: Sample>(cli: &Cli, cmd: &SigmaCmd, s: SigmaB<B>) -> CliResult<Done> {
    match cmd {
        SigmaCmd::Eh { labels, .. } => {
            let parts: Vec<&str> = labels.split(',').map(str::trim).collect();
            let [a, b] = parts.as_slice() else {
                return Err(CliError::Usage(format!(
                    "--labels needs exactly two comma-separated objects, got `{labels}`"
                )));
            };
            let (a, b) = (s.base().parse_obj(a)?, s.base().parse_obj(b)?);
            let (wa, wb) = (equiv::w_obj::<B>(&a), equiv::w_obj::<B>(&b));
            let eh = s.eh_braiding(&wa, &wb);
            let image = equiv::braiding_image(&s, &a, &b)?;
            let agrees = s.sigma_equal(&eh, &image);
            Ok(Done {
                ok: agrees,
                out: match cli.format {
                    Format::Text => format!(
                        "{}\n{}\n",
                        s.show(&eh),
                        if agrees {
                            "agrees with W(braiding)"
                        } else {
                            "differs from W(braiding)"
                        }
                    ),
                    Format::Json => json_line(json!({
                        "instance": s.name(),
                        "eh": s.mor_json(&eh),
                        "agrees": agrees,
                    })),
                },
            })
        }
        SigmaCmd::Interchange { .. } => {
            let reports = suite_reports(&s, Suite::TwoMonoidal, Some("interchange"), cli)?;
            Ok(report_done(cli, &reports))
        }
        SigmaCmd::Laws {
            suite, law, case, ..
        } => match case {
            Some(case) => replay_case(&s, *suite, law.as_deref().unwrap_or_default(), *case, cli),
            None => {
                let reports = suite_reports(&s, *suite, law.as_deref(), cli)?;
                Ok(report_done(cli, &reports))
            }
        },
    }
}

fn report_done(cli: &Cli, reports: &[LawReport]) -> Done {
    let ok = reports.iter().all(LawReport::passed);
    let out = match cli.format {
        Format::Text => {
            let mut text = laws::reports_text(reports);
            text.push('\n');
            text
        }
        Format::Json => json_line(laws::reports_json(reports)),
    };
    Done { ok, out }
}

/// Suite members as (instance, laws), in a fixed order.
fn suite_laws<'a, B: Sample>(
    s: &'a SigmaB<B>,
    suite: Suite,
) -> Vec<(String, Vec<(&'static str, laws::Check<'a>)>)> {
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Bmc) {
        out.push((s.base().name(), laws::bmc_laws(s.base())));
    }
    if matches!(suite, Suite::All | Suite::Underlying) {
        out.push((s.name(), laws::bmc_laws(s)));
    }
    if matches!(suite, Suite::All | Suite::TwoMonoidal) {
        out.push((s.name(), laws::two_monoidal_laws(s)));
    }
    if matches!(suite, Suite::All | Suite::Equivalence) {
        out.push((s.name(), laws::equivalence_laws(s)));
    }
    out
}

fn suite_reports<B: Sample>(
    s: &SigmaB<B>,
    suite: Suite,
    only: Option<&str>,
    cli: &Cli,
) -> CliResult<Vec<LawReport>> {
    let mut reports = Vec::new();
    for (instance, checks) in suite_laws(s, suite) {
        for (name, check) in &checks {
            if only.is_none_or(|l| l == *name) {
                reports.push(laws::run_law(name, &instance, cli.seed, cli.cases, check));
            }
        }
    }
    match only {
        Some(law) if reports.is_empty() => Err(CliError::Usage(format!(
            "no law named `{law}` in the selected suite"
        ))),
        _ => Ok(reports),
    }
}

fn replay_case<B: Sample>(
    s: &SigmaB<B>,
    suite: Suite,
    law: &str,
    case: usize,
    cli: &Cli,
) -> CliResult<Done> {
    let members = suite_laws(s, suite);
    let (instance, check) = members
        .iter()
        .flat_map(|(inst, checks)| checks.iter().map(move |(n, c)| (inst, n, c)))
        .find(|(_, name, _)| **name == law)
        .map(|(inst, _, c)| (inst.clone(), c))
        .ok_or_else(|| CliError::Usage(format!("no law named `{law}` in the selected suite")))?;
    let verdict = laws::replay(check, cli.seed, law, case)?;
    let ok = verdict.is_none();
    let out = match cli.format {
        Format::Text => match &verdict {
            None => format!("PASS {law} [{instance}] case {case} (seed {})\n", cli.seed),
            Some(c) => format!(
                "FAIL {law} [{instance}] case {case} (seed {}): {c}\n",
                cli.seed
            ),
        },
        Format::Json => json_line(json!({
            "law": law,
            "instance": instance,
            "seed": cli.seed,
            "case": case,
            "counterexample": verdict,
        })),
    };
    Ok(Done { ok, out })
}
