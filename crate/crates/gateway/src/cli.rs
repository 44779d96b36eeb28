use std::ffi::OsString;
use std::io::Write;
use std::net::IpAddr;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use swabhasha::evaluator::{evaluate, parse_gold, report};
use swabhasha::expander::validate_rules;
use swabhasha::lexicon::validate_lexicon;
use swabhasha::matcher::{DEFAULT_THRESHOLD, DEFAULT_TOP_K};
use swabhasha::pipeline::Options;
use swabhasha::{bundled, CodeTable};

use crate::config::{DataPaths, ServiceConfig, DEFAULT_PORT};
use crate::wire::{suggest, SuggestResponse};

/// Accuracy floors `eval` checks by default.
pub const MIN_WORD_LEVEL: f64 = 0.84;
pub const MIN_SUGGESTION_LEVEL: f64 = 0.92;

#[derive(Debug, Parser)]
#[command(name = "swabhasha", version, about = "Singlish to Sinhala transliteration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct DataArgs {
    /// Lexicon file (defaults to the bundled lexicon)
    #[arg(long, env = "SWABHASHA_LEXICON")]
    lexicon: Option<PathBuf>,
    /// Rule file (defaults to the bundled rules)
    #[arg(long, env = "SWABHASHA_RULES")]
    rules: Option<PathBuf>,
    /// Letter code table override
    #[arg(long)]
    code_table: Option<PathBuf>,
}

impl From<DataArgs> for DataPaths {
    fn from(a: DataArgs) -> Self {
        DataPaths { lexicon: a.lexicon, rules: a.rules, code_table: a.code_table }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print ranked Sinhala suggestions for each word
    Suggest {
        word: String,
        #[arg(long, default_value_t = DEFAULT_TOP_K, value_parser = parse_top)]
        top: usize,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD, value_parser = clap::value_parser!(u8).range(0..=100))]
        threshold: u8,
        /// Emit the JSON wire format
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Measure top-1 and top-k accuracy on a gold file
    Eval {
        /// Gold file (defaults to the bundled gold set)
        #[arg(long)]
        gold: Option<PathBuf>,
        #[arg(long, default_value_t = 5, value_parser = parse_top)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD, value_parser = clap::value_parser!(u8).range(0..=100))]
        threshold: u8,
        #[arg(long, default_value_t = MIN_WORD_LEVEL)]
        min_word_level: f64,
        #[arg(long, default_value_t = MIN_SUGGESTION_LEVEL)]
        min_suggestion_level: f64,
        /// Write the report here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Run the HTTP suggestion service
    Serve {
        #[arg(long, env = "SWABHASHA_PORT", default_value_t = DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        bind: IpAddr,
        #[arg(long, default_value_t = DEFAULT_TOP_K, value_parser = parse_top)]
        top: usize,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD, value_parser = clap::value_parser!(u8).range(0..=100))]
        threshold: u8,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Check lexicon, rule, code table and gold files
    Validate {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long)]
        gold: Option<PathBuf>,
    },
}

/// Runs the CLI and returns the process exit code: 0 success, 1 domain
/// error, 2 usage error.
pub fn main<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match run(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Suggest { word, top, threshold, json, data } => {
            let engine = DataPaths::from(data).engine()?;
            let opts = Options { top_k: top, threshold };
            let mut tokens: Vec<&str> = word.split_whitespace().collect();
            if tokens.is_empty() {
                tokens.push(&word);
            }
            let responses = tokens
                .iter()
                .map(|t| suggest(&engine, t, opts).with_context(|| format!("cannot transliterate {t:?}")))
                .collect::<Result<Vec<SuggestResponse>>>()?;
            if json {
                let text = match &responses[..] {
                    [one] => serde_json::to_string(one)?,
                    many => serde_json::to_string(many)?,
                };
                writeln!(out, "{text}")?;
            } else {
                for r in &responses {
                    if responses.len() > 1 {
                        writeln!(out, "# {}", r.query)?;
                    }
                    for s in &r.suggestions {
                        writeln!(out, "{}\t{}", s.sinhala, s.score)?;
                    }
                    if r.suggestions.is_empty() {
                        writeln!(err, "no suggestions for {:?}", r.query)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Eval { gold, k, threshold, min_word_level, min_suggestion_level, output, data } => {
            let engine = DataPaths::from(data).engine()?;
            let text = match &gold {
                Some(p) => std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?,
                None => bundled::GOLD.to_string(),
            };
            let cases = parse_gold(&text)?;
            let metrics = evaluate(&cases, &engine, k, threshold)?;
            let rendered = report(&metrics);
            match output {
                Some(p) => std::fs::write(&p, &rendered).with_context(|| format!("cannot write {}", p.display()))?,
                None => write!(out, "{rendered}")?,
            }
            let met = metrics.word_level_acc >= min_word_level
                && metrics.suggestion_level_acc >= min_suggestion_level;
            if !met {
                writeln!(
                    err,
                    "accuracy below target: word_level {:.3} (min {min_word_level}), suggestion_level {:.3} (min {min_suggestion_level})",
                    metrics.word_level_acc, metrics.suggestion_level_acc
                )?;
            }
            Ok(if met { 0 } else { 1 })
        }
        Command::Serve { port, bind, top, threshold, data } => {
            let config = ServiceConfig {
                data: data.into(),
                bind,
                port,
                top_k_default: top,
                threshold_default: threshold,
            };
            let runtime = tokio::runtime::Runtime::new()?;
            runtime.block_on(async {
                let handle = crate::http::serve(&config).await?;
                writeln!(err, "listening on http://{}", handle.local_addr())?;
                tokio::signal::ctrl_c().await?;
                handle.shutdown().await
            })?;
            Ok(0)
        }
        Command::Validate { data, gold } => validate(data.into(), gold, out),
    }
}

fn validate(data: DataPaths, gold: Option<PathBuf>, out: &mut dyn Write) -> Result<i32> {
    let mut problems = 0;
    let read = |p: &PathBuf| std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()));

    if let Some(p) = &data.code_table {
        match CodeTable::parse(&read(p)?) {
            Ok(_) => writeln!(out, "{}: ok", p.display())?,
            Err(e) => {
                writeln!(out, "{}: {e}", p.display())?;
                problems += 1;
            }
        }
    }

    if let Some(p) = &data.lexicon {
        let errors = validate_lexicon(&read(p)?);
        for e in &errors {
            writeln!(out, "{}: {e}", p.display())?;
        }
        if errors.is_empty() {
            writeln!(out, "{}: ok", p.display())?;
        }
        problems += errors.len();
    }
    if let Some(p) = &data.rules {
        let errors = validate_rules(&read(p)?);
        for e in &errors {
            writeln!(out, "{}: {e}", p.display())?;
        }
        if errors.is_empty() {
            writeln!(out, "{}: ok", p.display())?;
        }
        problems += errors.len();
    }
    if let Some(p) = &gold {
        match parse_gold(&read(p)?) {
            Ok(cases) => writeln!(out, "{}: ok ({} cases)", p.display(), cases.len())?,
            Err(e) => {
                writeln!(out, "{}: {e}", p.display())?;
                problems += 1;
            }
        }
    }
    if data.lexicon.is_none() && data.rules.is_none() && data.code_table.is_none() && gold.is_none() {
        data.engine()?;
        writeln!(out, "bundled data: ok")?;
    }
    if problems > 0 {
        bail!("{problems} problem(s) found");
    }
    Ok(0)
}

fn parse_top(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("{s:?} is not a positive integer")),
    }
}
