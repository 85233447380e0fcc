//! Command-line front end: stage commands, `learn`, `classify`, `eval`
//! and `all`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dlmodel::Ontology;
use crate::evaluate::{characterization_metrics, evaluate, judge, CharacterizationMetrics, EvalReport};
use crate::lexicon::Lexicon;
use crate::pipeline::{
    analyze_all, parse_corpus, parse_trace, trace_json, translate_all, Analysis, CorpusLine, Rejection, Stage, TraceEntry,
};
use crate::reason::{ConsistencyReport, Reasoner, TaxonomyGraph};
use crate::serialize::owl::to_owl_functional_in;
use crate::serialize::{parse_by_extension, parse_dl_blocks, to_dl_text, DEFAULT_NAMESPACE};
use crate::tagger::render_pretagged;

#[derive(Debug, Parser)]
#[command(name = "isaonto", version, about = "Compile IS-A sentences into a description-logic ontology")]
pub struct Cli {
    /// TOML file with `lexicon` and `namespace` keys; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for sentence analysis; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tag each corpus sentence.
    Tag(StageArgs),
    /// Split each sentence into simple IS-A sentences.
    Simplify(StageArgs),
    /// Fit each simple sentence into the characterization template.
    Characterize(StageArgs),
    /// Translate a corpus into an ontology.
    Learn(LearnArgs),
    /// Classify an ontology and optionally check its consistency.
    Classify(ClassifyArgs),
    /// Compare a learned ontology with a gold one.
    Eval(EvalArgs),
    /// Learn, classify, check and (with a gold ontology) evaluate.
    All(AllArgs),
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Sentences, one per line; `#` starts a comment line.
    #[arg(long)]
    pub corpus: PathBuf,
    /// Directory of lexicon TSV files (and optional WordNet data files).
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
    /// Corpus lines are `word_TAG` tokens.
    #[arg(long)]
    pub pretagged: bool,
    /// Exit with status 2 if any sentence is not an IS-A sentence.
    #[arg(long)]
    pub strict_isa: bool,
}

#[derive(Debug, Args)]
pub struct StageArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// JSON output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LearnArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// OWL functional syntax output.
    #[arg(long)]
    pub out: PathBuf,
    /// Per-sentence trace JSON output.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// DL text output.
    #[arg(long)]
    pub dlt: Option<PathBuf>,
    /// Ontology IRI prefix.
    #[arg(long)]
    pub namespace: Option<String>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// `.ofn` or `.dlt` ontology.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Taxonomy output, `child<TAB>parent` lines.
    #[arg(long)]
    pub taxonomy: PathBuf,
    /// Graphviz rendering of the taxonomy.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Run the consistency check and print its report.
    #[arg(long)]
    pub check: bool,
    /// With `--check`, exit with status 3 when the ontology is inconsistent.
    #[arg(long, requires = "check")]
    pub strict: bool,
    /// Consistency report JSON output.
    #[arg(long, requires = "check")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Learned ontology, `.ofn` or `.dlt`.
    #[arg(long)]
    pub learned: PathBuf,
    /// Gold ontology, `.ofn` or `.dlt`.
    #[arg(long)]
    pub gold: PathBuf,
    /// Metrics JSON output; a table is always printed.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Learn trace; with `--golden`, adds characterization precision and recall.
    #[arg(long, requires = "golden")]
    pub trace: Option<PathBuf>,
    /// Per-sentence golden axioms in DL text blocks.
    #[arg(long, requires = "trace")]
    pub golden: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AllArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Directory for every output file.
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Ontology IRI prefix.
    #[arg(long)]
    pub namespace: Option<String>,
    /// Gold ontology; adds lexical and taxonomic metrics to report.json.
    #[arg(long)]
    pub gold: Option<PathBuf>,
    /// Per-sentence golden axioms; adds characterization metrics to report.json.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    /// Exit with status 3 when the ontology is inconsistent.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Inconsistent(_) => 3,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    lexicon: Option<PathBuf>,
    namespace: Option<String>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
    s.push('\n');
    s
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

struct Session {
    config: Config,
    jobs: usize,
}

impl Session {
    fn lexicon(&self, flag: Option<&Path>) -> Result<Lexicon, CliError> {
        match flag.or(self.config.lexicon.as_deref()) {
            Some(dir) if !dir.is_dir() => Err(CliError::Input(format!("{}: not a lexicon directory", dir.display()))),
            Some(dir) => Lexicon::load(dir).map_err(|e| CliError::Input(e.to_string())),
            None => Ok(Lexicon::bundled()),
        }
    }

    fn namespace(&self, flag: Option<&str>) -> String {
        flag.or(self.config.namespace.as_deref()).unwrap_or(DEFAULT_NAMESPACE).to_string()
    }

    fn analyze(&self, args: &CorpusArgs) -> Result<(Lexicon, Vec<CorpusLine>, Vec<Analysis>), CliError> {
        let lex = self.lexicon(args.lexicon.as_deref())?;
        let lines = parse_corpus(&read(&args.corpus)?);
        let analyses = analyze_all(&lines, &lex, args.pretagged, self.jobs.max(1));
        Ok((lex, lines, analyses))
    }
}

/// Logs every rejected line and enforces `--strict-isa`.
fn log_rejections<'a>(rows: impl Iterator<Item = (usize, &'a str, &'a Rejection)>, strict_isa: bool) -> Result<(), CliError> {
    let mut not_isa = 0;
    for (index, text, r) in rows {
        eprintln!("rejected [{index}] {:?}: {} ({text})", r.stage, r.reason);
        not_isa += usize::from(r.not_isa);
    }
    if strict_isa && not_isa > 0 {
        return Err(CliError::Input(format!("{not_isa} sentence(s) are not IS-A sentences")));
    }
    Ok(())
}

#[derive(Serialize)]
struct StageRow<'a, T: Serialize> {
    source_index: usize,
    text: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rejection: Option<&'a Rejection>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum StageOutput {
    Tagged(String),
    Simplified(Vec<String>),
    Characterized(Vec<CharRow>),
}

#[derive(Serialize)]
struct CharRow {
    text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn stage(session: &Session, args: &StageArgs, which: Stage) -> Result<(), CliError> {
    let (_, _, analyses) = session.analyze(&args.corpus)?;
    let rows: Vec<StageRow<StageOutput>> = analyses
        .iter()
        .map(|a| {
            let rejected = a.rejection.as_ref().filter(|r| r.stage <= which);
            let output = match which {
                _ if rejected.is_some() && which != Stage::Characterize => None,
                Stage::Tag => Some(StageOutput::Tagged(render_pretagged(&a.tokens))),
                Stage::Simplify => Some(StageOutput::Simplified(a.simple.iter().map(|s| s.text()).collect())),
                _ => Some(StageOutput::Characterized(
                    a.simple
                        .iter()
                        .zip(&a.characterized)
                        .map(|(s, c)| CharRow {
                            text: s.text(),
                            signature: c.as_ref().ok().map(|c| c.signature()),
                            error: c.as_ref().err().map(|e| e.to_string()),
                        })
                        .collect(),
                )),
            };
            StageRow {
                source_index: a.line.source_index,
                text: &a.line.text,
                output,
                rejection: rejected,
            }
        })
        .collect();
    emit(args.out.as_deref(), &to_json(&rows))?;
    let rejected = analyses
        .iter()
        .filter_map(|a| a.rejection.as_ref().filter(|r| r.stage <= which).map(|r| (a.line.source_index, a.line.text.as_str(), r)));
    log_rejections(rejected, args.corpus.strict_isa)
}

struct Learned {
    ontology: Ontology,
    trace: Vec<TraceEntry>,
}

fn learn_corpus(session: &Session, args: &CorpusArgs) -> Result<Learned, CliError> {
    let (lex, _, analyses) = session.analyze(args)?;
    let mut ontology = Ontology::new();
    let trace = translate_all(&analyses, &lex, &mut ontology);
    let rejected = trace.iter().filter_map(|e| e.rejection.as_ref().map(|r| (e.source_index, e.text.as_str(), r)));
    log_rejections(rejected, args.strict_isa)?;
    Ok(Learned { ontology, trace })
}

fn learn(session: &Session, args: &LearnArgs) -> Result<(), CliError> {
    let out = learn_corpus(session, &args.corpus)?;
    write(&args.out, &to_owl_functional_in(&out.ontology, &session.namespace(args.namespace.as_deref())))?;
    if let Some(p) = &args.dlt {
        write(p, &to_dl_text(&out.ontology))?;
    }
    if let Some(p) = &args.trace {
        write(p, &trace_json(&out.trace))?;
    }
    let rejected = out.trace.iter().filter(|e| e.rejection.is_some()).count();
    eprintln!("{} sentences, {} rejected, {} axioms", out.trace.len(), rejected, out.ontology.len());
    Ok(())
}

fn load_ontology(path: &Path) -> Result<Ontology, CliError> {
    parse_by_extension(path, &read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn reasoner(onto: &Ontology) -> Result<Reasoner, CliError> {
    Reasoner::new(onto).map_err(|e| CliError::Input(e.to_string()))
}

fn check(r: &Reasoner, strict: bool, report: Option<&Path>) -> Result<ConsistencyReport, CliError> {
    let c = r.check_consistency();
    match report {
        Some(p) => write(p, &to_json(&c))?,
        None => eprint!("{}", to_json(&c)),
    }
    for f in &c.flagged {
        eprintln!("flagged: {f}");
    }
    if strict && !c.is_consistent() {
        return Err(CliError::Inconsistent(format!(
            "inconsistent: {} unsatisfiable, {} violations, {} A-Box clashes",
            c.unsatisfiable.len(),
            c.violations.len(),
            c.abox_clashes.len()
        )));
    }
    Ok(c)
}

fn write_taxonomy(t: &TaxonomyGraph, tsv: &Path, dot: Option<&Path>) -> Result<(), CliError> {
    write(tsv, &t.to_tsv())?;
    if let Some(p) = dot {
        write(p, &t.to_dot())?;
    }
    Ok(())
}

fn classify(args: &ClassifyArgs) -> Result<(), CliError> {
    let onto = load_ontology(&args.input)?;
    let r = reasoner(&onto)?;
    write_taxonomy(&r.classify(), &args.taxonomy, args.dot.as_deref())?;
    if args.check {
        check(&r, args.strict, args.report.as_deref())?;
    }
    Ok(())
}

fn sentence_metrics(trace: &[TraceEntry], golden: &Path) -> Result<CharacterizationMetrics, CliError> {
    let blocks = parse_dl_blocks(&read(golden)?).map_err(|e| CliError::Input(format!("{}: {e}", golden.display())))?;
    Ok(characterization_metrics(&judge(trace, &blocks)))
}

fn eval_pair(learned: &Ontology, gold: &Ontology, sentences: Option<CharacterizationMetrics>) -> Result<EvalReport, CliError> {
    let lt = reasoner(learned)?.classify();
    let gt = reasoner(gold)?.classify();
    evaluate((learned, &lt), (gold, &gt), sentences).map_err(|e| CliError::Input(e.to_string()))
}

fn eval(args: &EvalArgs) -> Result<(), CliError> {
    let learned = load_ontology(&args.learned)?;
    let gold = load_ontology(&args.gold)?;
    let sentences = match (&args.trace, &args.golden) {
        (Some(t), Some(g)) => {
            let trace = parse_trace(&read(t)?).map_err(|e| CliError::Input(format!("{}: {e}", t.display())))?;
            Some(sentence_metrics(&trace, g)?)
        }
        _ => None,
    };
    let report = eval_pair(&learned, &gold, sentences)?;
    if let Some(p) = &args.report {
        write(p, &report.to_json())?;
    }
    print!("{}", report.to_table());
    Ok(())
}

fn all(session: &Session, args: &AllArgs) -> Result<(), CliError> {
    let out = learn_corpus(session, &args.corpus)?;
    let dir = &args.out_dir;
    write(&dir.join("ontology.ofn"), &to_owl_functional_in(&out.ontology, &session.namespace(args.namespace.as_deref())))?;
    write(&dir.join("ontology.dlt"), &to_dl_text(&out.ontology))?;
    write(&dir.join("trace.json"), &trace_json(&out.trace))?;
    let r = reasoner(&out.ontology)?;
    write_taxonomy(&r.classify(), &dir.join("taxonomy.tsv"), Some(&dir.join("taxonomy.dot")))?;
    let consistency = check(&r, false, Some(&dir.join("consistency.json")))?;
    let sentences = args.golden.as_deref().map(|g| sentence_metrics(&out.trace, g)).transpose()?;
    if let Some(gold) = &args.gold {
        let report = eval_pair(&out.ontology, &load_ontology(gold)?, sentences)?;
        write(&dir.join("report.json"), &report.to_json())?;
        print!("{}", report.to_table());
    } else if let Some(m) = sentences {
        write(&dir.join("report.json"), &to_json(&m))?;
        println!("CP {:.4}  CR {:.4}", m.cp, m.cr);
    }
    if args.strict && !consistency.is_consistent() {
        return Err(CliError::Inconsistent("inconsistent ontology".into()));
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(p) => toml::from_str(&read(p)?).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?,
        None => Config::default(),
    };
    if cli.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let session = Session { config, jobs: cli.jobs };
    match &cli.command {
        Command::Tag(a) => stage(&session, a, Stage::Tag),
        Command::Simplify(a) => stage(&session, a, Stage::Simplify),
        Command::Characterize(a) => stage(&session, a, Stage::Characterize),
        Command::Learn(a) => learn(&session, a),
        Command::Classify(a) => classify(a),
        Command::Eval(a) => eval(a),
        Command::All(a) => all(&session, a),
    }
}

/// Parses `args`, runs the command and maps failures to exit codes:
/// 1 usage, 2 input, 3 inconsistency under `--strict`.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(main_with(["isaonto", "frobnicate"]), ExitCode::from(1));
        assert_eq!(main_with(["isaonto", "learn"]), ExitCode::from(1));
        assert_eq!(main_with(["isaonto", "classify", "--in", "x.ofn", "--taxonomy", "t.tsv", "--strict"]), ExitCode::from(1));
    }

    #[test]
    fn config_keys() {
        let c: Config = toml::from_str("lexicon = \"lex\"\nnamespace = \"https://x.test/o#\"\n").unwrap();
        assert_eq!(c.lexicon.as_deref(), Some(Path::new("lex")));
        assert!(toml::from_str::<Config>("colour = 1\n").is_err());
        let s = Session { config: c, jobs: 1 };
        assert_eq!(s.namespace(None), "https://x.test/o#");
        assert_eq!(s.namespace(Some("https://y.test/#")), "https://y.test/#");
    }
}
