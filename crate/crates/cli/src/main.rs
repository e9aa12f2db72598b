mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use modloc_core::harness::{lookup, registry, theorem_ids, Shape};
use modloc_core::report::{self, Document, SearchSummary, VerifyReport};
use modloc_core::{
    necessity_search, necessity_search_instances, sweep, sweep_instances, Corpus, CorpusConfig, Instance, InstanceFile,
    LoadedInstance, PropositionCheck, MODULE_SIZE_CAP,
};

use render::Notation;

#[derive(Parser)]
#[command(name = "modloc", version, about = "Finite rings, modules and their localizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Submodule lattice, per-submodule properties and module verdicts.
    Explore(InstanceArgs),
    /// Fraction classes, canonical maps and the transported lattice.
    Localize(InstanceArgs),
    /// Sweep propositions; exits 1 when any theorem is violated.
    Verify(HarnessArgs),
    /// Look for instances where a hypothesis fails along with its conclusion.
    Search(HarnessArgs),
}

#[derive(Args)]
struct Output {
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for sweeps.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long, value_name = "PATH")]
    instance: PathBuf,
    #[arg(long, value_name = "N", default_value_t = MODULE_SIZE_CAP, value_parser = positive)]
    max_module_size: usize,
    /// Print elements by their labels, e.g. `(1,0)` or `[2]`, instead of indices.
    #[arg(long)]
    labels: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct HarnessArgs {
    /// Proposition id, or `all`.
    #[arg(long, value_name = "ID")]
    prop: String,
    /// `standard`, `z6`, or a corpus file.
    #[arg(long, value_name = "NAME|PATH", conflicts_with = "instance")]
    corpus: Option<String>,
    /// Check a single instance file instead of a corpus.
    #[arg(long, value_name = "PATH")]
    instance: Option<PathBuf>,
    #[arg(long, value_name = "N", value_parser = positive)]
    max_module_size: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn load_instance(path: &Path) -> Result<LoadedInstance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = InstanceFile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    file.load().with_context(|| format!("loading {}", path.display()))
}

fn load_corpus(selector: &str, max_module_size: Option<usize>) -> Result<Corpus> {
    let mut config = match CorpusConfig::named(selector) {
        Some(config) => config,
        None => {
            let path = Path::new(selector);
            if !path.is_file() {
                bail!("unknown corpus `{selector}` (expected standard, z6 or a corpus file)");
            }
            let text = fs::read_to_string(path).with_context(|| format!("reading {selector}"))?;
            CorpusConfig::parse(&text).with_context(|| format!("parsing {selector}"))?
        }
    };
    if let Some(cap) = max_module_size {
        config.max_module_size = cap;
        config.max_lattice_scan_size = config.max_lattice_scan_size.min(cap);
    }
    Ok(Corpus::build(config)?)
}

fn emit(output: &Output, text: String) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn notation(args: &InstanceArgs) -> Notation {
    if args.labels {
        Notation::Labels
    } else {
        Notation::Indices
    }
}

fn explore(args: &InstanceArgs) -> Result<ExitCode> {
    let loaded = load_instance(&args.instance)?;
    let report = report::explore(&loaded, args.max_module_size)?;
    let text = match args.output.format {
        Format::Structured => Document::new("explore", report).to_json() + "\n",
        Format::Text => render::explore(&report, &loaded, notation(args)),
    };
    emit(&args.output, text)?;
    Ok(ExitCode::SUCCESS)
}

fn localize(args: &InstanceArgs) -> Result<ExitCode> {
    let loaded = load_instance(&args.instance)?;
    let report = report::localize(&loaded, args.max_module_size)?;
    let text = match args.output.format {
        Format::Structured => Document::new("localize", report).to_json() + "\n",
        Format::Text => render::localize(&report, &loaded, notation(args)),
    };
    emit(&args.output, text)?;
    Ok(ExitCode::SUCCESS)
}

/// Where a harness command draws its instances from.
enum Target {
    Corpus(Corpus),
    Instance { label: String, instance: Instance },
}

impl Target {
    fn from_args(args: &HarnessArgs) -> Result<Self> {
        match &args.instance {
            Some(path) => {
                let loaded = load_instance(path)?;
                let cap = args.max_module_size.unwrap_or(MODULE_SIZE_CAP);
                if loaded.module.size() > cap {
                    bail!("module size {} exceeds the configured cap {cap}", loaded.module.size());
                }
                Ok(Target::Instance { label: path.display().to_string(), instance: Instance::from_loaded(&loaded)? })
            }
            None => {
                let selector = args.corpus.as_deref().unwrap_or("standard");
                Ok(Target::Corpus(load_corpus(selector, args.max_module_size)?))
            }
        }
    }

    fn label(&self) -> String {
        match self {
            Target::Corpus(c) => c.name().to_string(),
            Target::Instance { label, .. } => label.clone(),
        }
    }

    /// Whether `prop` can be evaluated at all on this target.
    fn applies(&self, prop: &PropositionCheck) -> bool {
        match self {
            Target::Corpus(_) => true,
            Target::Instance { instance, .. } => {
                (!prop.localized || instance.mulset().is_some())
                    && (prop.shape != Shape::RingSubset || instance.ring_subset().is_some())
            }
        }
    }

    fn expand(&self, prop: &PropositionCheck) -> Result<Vec<Instance>> {
        match self {
            Target::Corpus(_) => unreachable!("corpora expand themselves"),
            Target::Instance { instance, .. } => {
                if prop.localized && instance.mulset().is_none() {
                    bail!("{} needs an instance with a multiplicative set", prop.id);
                }
                if prop.shape == Shape::RingSubset && instance.ring_subset().is_none() {
                    bail!("{} needs an instance with a ring subset", prop.id);
                }
                Ok(instance.expand(prop.shape)?)
            }
        }
    }
}

/// The ids named by `--prop`. `all` skips checks the target cannot evaluate.
fn selected(prop: &str, all: Vec<&'static str>, target: &Target) -> Result<Vec<&'static PropositionCheck>> {
    if prop == "all" {
        Ok(all.into_iter().map(|id| lookup(id).expect("registered")).filter(|p| target.applies(p)).collect())
    } else {
        Ok(vec![lookup(prop)?])
    }
}

fn verify(args: &HarnessArgs) -> Result<ExitCode> {
    let target = Target::from_args(args)?;
    let mut results = Vec::new();
    for prop in selected(&args.prop, theorem_ids(), &target)? {
        results.push(match &target {
            Target::Corpus(corpus) => sweep(prop.id, corpus)?,
            Target::Instance { label, .. } => sweep_instances(prop.id, label, &target.expand(prop)?)?,
        });
    }
    let report = VerifyReport::new(target.label(), results);
    let clean = report.total_violations == 0;
    let text = match args.output.format {
        Format::Structured => Document::new("verify", report).to_json() + "\n",
        Format::Text => render::verify(&report),
    };
    emit(&args.output, text)?;
    Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn search(args: &HarnessArgs) -> Result<ExitCode> {
    let target = Target::from_args(args)?;
    let all = registry().iter().map(|p| p.id).collect();
    let mut results = Vec::new();
    for prop in selected(&args.prop, all, &target)? {
        results.push(match &target {
            Target::Corpus(corpus) => necessity_search(prop.id, corpus)?,
            Target::Instance { label, .. } => necessity_search_instances(prop.id, label, &target.expand(prop)?)?,
        });
    }
    let report = SearchSummary { corpus: target.label(), results };
    let text = match args.output.format {
        Format::Structured => Document::new("search", report).to_json() + "\n",
        Format::Text => render::search(&report),
    };
    emit(&args.output, text)?;
    Ok(ExitCode::SUCCESS)
}

fn configure_pool(output: &Output) -> Result<()> {
    if let Some(jobs) = output.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs.into()).build_global()?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Explore(args) => {
            configure_pool(&args.output)?;
            explore(args)
        }
        Command::Localize(args) => {
            configure_pool(&args.output)?;
            localize(args)
        }
        Command::Verify(args) => {
            configure_pool(&args.output)?;
            verify(args)
        }
        Command::Search(args) => {
            configure_pool(&args.output)?;
            search(args)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
