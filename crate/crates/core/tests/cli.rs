use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_isaonto");

fn resource(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("resources").join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn learn_and_classify(dir: &Path, jobs: &str) {
    let corpus = resource("corpus/corpus.txt");
    let (ofn, trace, tsv) = (dir.join("o.ofn"), dir.join("trace.json"), dir.join("tax.tsv"));
    assert_eq!(code(&["learn", "--corpus", s(&corpus), "--out", s(&ofn), "--trace", s(&trace), "--jobs", jobs]), 0);
    assert_eq!(code(&["classify", "--in", s(&ofn), "--taxonomy", s(&tsv), "--dot", s(&dir.join("tax.dot"))]), 0);
}

#[test]
fn learn_and_classify_are_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let runs: Vec<PathBuf> = ["a", "b", "c"].iter().map(|d| tmp.path().join(d)).collect();
    learn_and_classify(&runs[0], "1");
    learn_and_classify(&runs[1], "1");
    learn_and_classify(&runs[2], "4");
    for f in ["o.ofn", "trace.json", "tax.tsv", "tax.dot"] {
        let first = fs::read(runs[0].join(f)).unwrap();
        assert!(!first.is_empty());
        for other in &runs[1..] {
            assert_eq!(first, fs::read(other.join(f)).unwrap(), "{f}");
        }
    }
}

#[test]
fn learn_output_matches_golden() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("t.ofn");
    assert_eq!(code(&["learn", "--corpus", s(&resource("corpus/trivial.txt")), "--out", s(&out)]), 0);
    assert_eq!(fs::read_to_string(out).unwrap(), fs::read_to_string(resource("golden/trivial.ofn")).unwrap());
}

#[test]
fn eval_against_itself_is_perfect() {
    let tmp = tempfile::tempdir().unwrap();
    let (ofn, trace, report) = (tmp.path().join("o.ofn"), tmp.path().join("t.json"), tmp.path().join("r.json"));
    assert_eq!(code(&["learn", "--corpus", s(&resource("corpus/nontrivial.txt")), "--out", s(&ofn), "--trace", s(&trace)]), 0);
    let golden = resource("golden/nontrivial.dlt");
    let out = run(&["eval", "--learned", s(&ofn), "--gold", s(&ofn), "--report", s(&report), "--trace", s(&trace), "--golden", s(&golden)]);
    assert!(out.status.success());
    let r: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    for k in ["cp", "cr", "lp", "lr", "lf", "tp", "tr", "tf", "tf_prime"] {
        assert_eq!(r[k], 1.0, "{k}");
    }
    assert_eq!((r["oi"].as_f64(), r["ol"].as_f64()), (Some(0.0), Some(0.0)));
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.lines().any(|l| l.starts_with("TF'")));
}

#[test]
fn stage_commands_emit_one_row_per_line() {
    let corpus = resource("corpus/trivial.txt");
    for cmd in ["tag", "simplify", "characterize"] {
        let out = run(&[cmd, "--corpus", s(&corpus)]);
        assert!(out.status.success(), "{cmd}");
        let rows: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(rows.len(), 26, "{cmd}");
        assert_eq!(rows[0]["source_index"], 1);
    }
}

#[test]
fn all_writes_every_artifact() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("out");
    let (corpus, golden) = (resource("corpus/trivial.txt"), resource("golden/trivial.dlt"));
    let args = ["all", "--corpus", s(&corpus), "--out-dir", s(&dir), "--golden", s(&golden)];
    assert_eq!(code(&args), 0);
    for f in ["ontology.ofn", "ontology.dlt", "trace.json", "taxonomy.tsv", "taxonomy.dot", "consistency.json", "report.json"] {
        assert!(dir.join(f).exists(), "{f}");
    }
    assert_eq!(fs::read_to_string(dir.join("taxonomy.tsv")).unwrap(), fs::read_to_string(resource("golden/trivial_taxonomy.tsv")).unwrap());
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let p = |name: &str| tmp.path().join(name);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["learn", "--corpus"]), 1);
    assert_eq!(code(&["--help"]), 0);

    fs::write(p("mixed.txt"), "Cat is an animal\nJohn runs fast\n").unwrap();
    assert_eq!(code(&["learn", "--corpus", s(&p("mixed.txt")), "--out", s(&p("m.ofn"))]), 0);
    let out = run(&["learn", "--corpus", s(&p("mixed.txt")), "--out", s(&p("m.ofn")), "--strict-isa"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rejected [2]"));

    fs::write(p("bad.dlt"), "Cat <= (Animal\n").unwrap();
    assert_eq!(code(&["classify", "--in", s(&p("bad.dlt")), "--taxonomy", s(&p("t.tsv"))]), 2);
    assert_eq!(code(&["classify", "--in", s(&p("missing.dlt")), "--taxonomy", s(&p("t.tsv"))]), 2);

    fs::write(p("clash.dlt"), "C <= D\nC <= not D\n").unwrap();
    let (clash, tsv) = (p("clash.dlt"), p("t.tsv"));
    let classify = ["classify", "--in", s(&clash), "--taxonomy", s(&tsv), "--check"];
    assert_eq!(code(&classify), 0);
    assert_eq!(code(&[&classify[..], &["--strict"]].concat()), 3);
    assert_eq!(fs::read_to_string(p("t.tsv")).unwrap(), "C\towl:Nothing\nD\towl:Thing\n");
}

#[test]
fn config_sets_namespace_and_flags_override() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = tmp.path().join("isaonto.toml");
    fs::write(&cfg, "namespace = \"https://cfg.test/onto#\"\n").unwrap();
    fs::write(tmp.path().join("c.txt"), "Cat is an animal\n").unwrap();
    let (corpus, out) = (tmp.path().join("c.txt"), tmp.path().join("o.ofn"));
    assert_eq!(code(&["--config", s(&cfg), "learn", "--corpus", s(&corpus), "--out", s(&out)]), 0);
    assert!(fs::read_to_string(&out).unwrap().starts_with("Prefix(:=<https://cfg.test/onto#>)"));
    let args = ["--config", s(&cfg), "learn", "--corpus", s(&corpus), "--out", s(&out), "--namespace", "https://flag.test/o#"];
    assert_eq!(code(&args), 0);
    assert!(fs::read_to_string(&out).unwrap().starts_with("Prefix(:=<https://flag.test/o#>)"));
    fs::write(&cfg, "colour = \"blue\"\n").unwrap();
    assert_eq!(code(&["--config", s(&cfg), "learn", "--corpus", s(&corpus), "--out", s(&out)]), 1);
}

#[test]
fn lexicon_directory_is_loaded() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = resource("corpus/trivial.txt");
    let out = tmp.path().join("o.ofn");
    assert_eq!(code(&["learn", "--corpus", s(&corpus), "--lexicon", s(&resource("lexicon")), "--out", s(&out)]), 0);
    assert_eq!(fs::read_to_string(&out).unwrap(), fs::read_to_string(resource("golden/trivial.ofn")).unwrap());
    assert_eq!(code(&["learn", "--corpus", s(&corpus), "--lexicon", s(&tmp.path().join("none")), "--out", s(&out)]), 2);
}
