use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use synfix::server::{self, FixRequest, ServeConfig};
use synfix::{lex, workflow};
use synfix_core::corpusgen::{self, CorruptionSpec, Dataset, GeneratedPair};
use synfix_core::diagnostics;
use synfix_repair::eval::{self, ReportFormat};
use synfix_repair::pipeline::LinePredictor;
use synfix_repair::{Budget, Models, Repairer};

#[derive(Parser)]
#[command(name = "synfix", version, about = "Java syntax-error repair workbench")]
struct Cli {
    /// Directory holding bpe.txt, fixes.txt, linefix.bin and mlm.bin.
    #[arg(long, global = true, env = "SYNFIX_MODEL_DIR", default_value = "models", visible_alias = "model")]
    model_dir: PathBuf,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Split {
    Train,
    Val,
    Test,
}

#[derive(Subcommand)]
enum Command {
    /// Print every token as `line<TAB>col<TAB>category<TAB>text`.
    Lex { file: PathBuf },
    /// Learn a subtoken vocabulary from the .java files under a directory.
    TrainBpe {
        #[arg(long, default_value_t = synfix_core::bpe::DEFAULT_VOCAB_SIZE)]
        size: usize,
        #[arg(long)]
        out: PathBuf,
        corpus: PathBuf,
    },
    /// Generate corrupted/fixed pairs split into train, val and test.
    Corrupt {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        /// Only single-edit pairs instead of the 70/20/10 mixture.
        #[arg(long)]
        single_edit: bool,
    },
    /// Pretrain the masked LM on a corpus; writes bpe.txt (if absent) and mlm.bin.
    Pretrain {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 1500)]
        steps: usize,
        #[arg(long, default_value_t = 1024)]
        vocab_size: usize,
    },
    /// Fine-tune LineFix on a dataset; writes fixes.txt and linefix.bin.
    Finetune {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long, default_value_t = 3)]
        epochs: usize,
        #[arg(long, default_value_t = 3e-3)]
        lr: f64,
        /// Train without the compiler message in the input.
        #[arg(long)]
        no_message: bool,
    },
    /// Repair one file, printing the result to stdout.
    Fix {
        file: PathBuf,
        /// Print the full outcome as JSON instead of the source.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = server::DEFAULT_TIMEOUT_MS)]
        timeout_ms: u64,
    },
    /// Evaluate the pipeline on a dataset split and write a report.
    Eval {
        /// A dataset directory or a single JSONL file.
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long, value_enum, default_value_t = Split::Test)]
        split: Split,
        /// Report path; the extension (json, tsv, md) selects the format.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = server::DEFAULT_CONCURRENCY)]
        concurrency: usize,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Lex { file } => {
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            std::io::stdout().write_all(lex::lex_tsv(&text).as_bytes())?;
        }
        Command::TrainBpe { size, out, corpus } => {
            let files = corpusgen::load_corpus_dir(&corpus)?;
            let texts: Vec<&str> = files.iter().map(|f| f.text.as_str()).collect();
            let vocab = workflow::train_vocab(&texts, size, cli.seed)?;
            vocab.save(&out)?;
            log::info!("{} ids learned from {} files", vocab.size(), files.len());
        }
        Command::Corrupt { corpus, n, out, single_edit } => {
            let files = corpusgen::load_corpus_dir(&corpus)?;
            let spec =
                if single_edit { CorruptionSpec::single_edit(cli.seed) } else { CorruptionSpec { seed: cli.seed, ..CorruptionSpec::default() } };
            let compiler = diagnostics::default_compiler();
            let ds = corpusgen::generate_dataset(&files, &spec, n, compiler.as_ref())?;
            ds.write_dir(&out)?;
            log::info!("{} train, {} val, {} test pairs", ds.train.len(), ds.val.len(), ds.test.len());
        }
        Command::Pretrain { corpus, steps, vocab_size } => {
            let files = corpusgen::load_corpus_dir(&corpus)?;
            let texts: Vec<&str> = files.iter().map(|f| f.text.as_str()).collect();
            // every tenth file is held out for perplexity
            let (held, train): (Vec<(usize, &str)>, Vec<(usize, &str)>) = texts.iter().copied().enumerate().partition(|(i, _)| i % 10 == 9);
            let train: Vec<&str> = train.into_iter().map(|(_, t)| t).collect();
            let held: Vec<&str> = held.into_iter().map(|(_, t)| t).collect();
            let vocab_path = cli.model_dir.join(synfix_repair::bundle::VOCAB_FILE);
            let vocab = if vocab_path.exists() {
                synfix_core::bpe::SubtokenVocab::load(&vocab_path)?
            } else {
                workflow::train_vocab(&train, vocab_size, cli.seed)?
            };
            let mut cfg = workflow::DeskConfig::new(cli.seed);
            cfg.pretrain.steps = steps;
            let every = (steps / 20).max(1);
            let (mlm, report) = workflow::pretrain_mlm(&vocab, &train, &held, &cfg, |s, l| {
                if s % every == 0 {
                    log::info!("step {s}: loss {l:.4}");
                }
            })?;
            let mut models = Models::load(&cli.model_dir).unwrap_or(Models { vocab: vocab.clone(), linefix: None, mlm: None });
            models.vocab = vocab;
            models.mlm = Some(mlm);
            models.save(&cli.model_dir)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Finetune { dataset, epochs, lr, no_message } => {
            let ds = Dataset::read_dir(&dataset)?;
            let mut models = Models::load(&cli.model_dir)
                .with_context(|| format!("loading {} (run train-bpe or pretrain first)", cli.model_dir.display()))?;
            let mut cfg = workflow::DeskConfig::new(cli.seed);
            cfg.finetune.epochs = epochs;
            cfg.finetune.adam.lr = lr;
            cfg.with_message = !no_message;
            if let Some(m) = &models.mlm {
                cfg.encoder = m.config.encoder.clone();
            }
            let train = workflow::pairs(&ds.train);
            let held = workflow::pairs(&ds.val);
            let (lf, report, baseline) = workflow::finetune_linefix(&models.vocab, models.mlm.as_ref(), &train, &held, &cfg, |e, l| {
                log::info!("epoch {e}: loss {l:.4}")
            })?;
            models.linefix = Some(lf);
            models.save(&cli.model_dir)?;
            println!("{}", serde_json::to_string_pretty(&serde_json::json!({ "report": report, "majority_baseline": baseline }))?);
        }
        Command::Fix { file, json, timeout_ms } => {
            let source = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let state = server::AppState::new(diagnostics::default_compiler(), 1);
            state.load_dir(&cli.model_dir)?;
            let resp = state.fix(&FixRequest { source, timeout_ms: Some(timeout_ms), want_diff: true }, Instant::now());
            if json {
                println!("{}", serde_json::to_string_pretty(&resp)?);
            } else {
                eprintln!("status: {}, stage: {}, compiles: {}", resp.status, resp.stage, resp.compile_ok);
                if let Some(s) = resp.fixed_source {
                    print!("{s}");
                }
            }
        }
        Command::Eval { dataset, split, out, limit } => {
            let format = out
                .extension()
                .and_then(|e| e.to_str())
                .and_then(ReportFormat::from_extension)
                .context("--out must end in .json, .tsv or .md")?;
            let mut pairs = load_split(&dataset, split)?;
            if let Some(n) = limit {
                pairs.truncate(n);
            }
            let models = Models::load(&cli.model_dir)?;
            let compiler = diagnostics::default_compiler();
            let line = models.line_predictor();
            let unk = models.token_recoverer();
            let repairer = Repairer {
                compiler: compiler.as_ref(),
                line: line.as_ref().map(|l| l as &dyn LinePredictor),
                unk: &unk,
                budget: Budget::default(),
                deadline: None,
            };
            let report = eval::evaluate(&repairer, &pairs)?;
            std::fs::write(&out, eval::render_report(&report, format))?;
            log::info!("{} pairs, exact {:.2}%", report.totals.n, report.exact_accuracy);
        }
        Command::Serve { port, host, concurrency } => {
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(async {
                let listener = tokio::net::TcpListener::bind((host.as_str(), port)).await?;
                log::info!("listening on {}", listener.local_addr()?);
                server::serve(listener, ServeConfig { model_dir: cli.model_dir.clone(), concurrency }).await
            })?;
        }
    }
    Ok(())
}

fn load_split(path: &Path, split: Split) -> Result<Vec<GeneratedPair>> {
    if path.is_file() {
        return Ok(corpusgen::read_jsonl(path)?);
    }
    let name = match split {
        Split::Train => "train.jsonl",
        Split::Val => "val.jsonl",
        Split::Test => "test.jsonl",
    };
    let file = path.join(name);
    if !file.exists() {
        bail!("{} not found", file.display());
    }
    Ok(corpusgen::read_jsonl(&file)?)
}
