use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_swabhasha"));
    c.env_remove("SWABHASHA_LEXICON").env_remove("SWABHASHA_RULES").env_remove("SWABHASHA_PORT");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("swabhasha-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn suggest_prints_best_first() {
    let o = run(&["suggest", "khmd"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first, "කොහොමද\t100");
}

#[test]
fn suggest_several_words() {
    let o = run(&["suggest", "amma khmd"]);
    let text = stdout(&o);
    assert!(text.contains("# amma\nඅම්මා"));
    assert!(text.contains("# khmd\nකොහොමද"));
}

#[test]
fn empty_word_is_a_domain_error() {
    let o = run(&["suggest", ""]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("empty"), "{}", stderr(&o));
}

#[test]
fn non_letters_are_rejected() {
    let o = run(&["suggest", "kmd!"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_output() {
    let o = run(&["suggest", "kynna", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["query"], "kynna");
    assert_eq!(v["scenario"], "with_vowel");
    let all: Vec<&str> = v["suggestions"].as_array().unwrap().iter().map(|s| s["sinhala"].as_str().unwrap()).collect();
    assert!(all.contains(&"කියන්න"), "{all:?}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["suggest"]).status.code(), Some(2));
    assert_eq!(run(&["suggest", "amma", "--top", "0"]).status.code(), Some(2));
    assert_eq!(run(&["suggest", "amma", "--threshold", "101"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn eval_on_bundled_data_meets_floors() {
    let o = run(&["eval"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("word_level="));
    assert!(text.contains("no_vowel.cases="));
}

#[test]
fn eval_below_floor_exits_1() {
    let o = run(&["eval", "--min-word-level", "1.01"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("below target"));
}

#[test]
fn eval_writes_report_file() {
    let out = std::env::temp_dir().join(format!("swabhasha-report-{}.txt", std::process::id()));
    let o = run(&["eval", "--k", "3", "--output", out.to_str().unwrap(), "--min-suggestion-level", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("k=3"));
    std::fs::remove_file(out).ok();
}

#[test]
fn validate_bundled_and_broken_files() {
    let o = run(&["validate"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ok"));

    let lex = scratch("bad.tsv", "අම්මා\tamma\t1\nබල්ල\tb4lla\t2\nonly-one-field\n");
    let o = run(&["validate", "--lexicon", lex.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("line 2"), "{text}");
    assert!(text.contains("line 3"), "{text}");

    let rules = scratch("bad-rules.txt", "2|0|a\n2|1,1|aa\n");
    let o = run(&["validate", "--rules", rules.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("line 2"), "{}", stdout(&o));
}

#[test]
fn env_var_selects_lexicon() {
    let lex = scratch("tiny.tsv", "# tiny\nබල්ලා\tballa\t1\n");
    let o = bin().env("SWABHASHA_LEXICON", &lex).args(["suggest", "bll"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next(), Some("බල්ලා\t100"));

    let o = bin().env("SWABHASHA_LEXICON", "/nonexistent.tsv").args(["suggest", "amma"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("/nonexistent.tsv"));
}
