//! The `verify` subcommand: calibration corpus, exhaustive forward sweep,
//! and the randomized periodic-congruence suite, with an optional on-disk
//! polynomial cache.

use std::path::PathBuf;

use serde_json::json;

use lensknot::braid::{BraidWord, DeltaCache};
use lensknot::obstruction::{lemma4_random_suite_with_cache, theorem1_forward_sweep};
use lensknot::poly::LaurentPoly;

use crate::Failure;

/// Braid word -> expected polynomial pairs shipped with the binary; the same
/// file lives at `crates/cli/corpus/calibration.txt`.
const CALIBRATION_CORPUS: &str = include_str!("../corpus/calibration.txt");

struct CorpusCase {
    word: BraidWord,
    expected: LaurentPoly,
}

fn parse_corpus(text: &str) -> Result<Vec<CorpusCase>, Failure> {
    let mut cases = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (word_text, poly_text) = line
            .split_once(';')
            .ok_or_else(|| Failure::Invalid(format!("corpus line {}: missing ';'", lineno + 1)))?;
        let word = BraidWord::parse_line(word_text)
            .map_err(|e| Failure::Invalid(format!("corpus line {}: {e}", lineno + 1)))?;
        let expected = poly_text
            .trim()
            .parse()
            .map_err(|e| Failure::Invalid(format!("corpus line {}: {e}", lineno + 1)))?;
        cases.push(CorpusCase { word, expected });
    }
    Ok(cases)
}

fn cache_path(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os("LENSKNOT_CACHE").map(PathBuf::from))
}

fn load_cache(path: &PathBuf, cache: &mut DeltaCache) -> Result<(), Failure> {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(()),
        Err(e) => {
            return Err(Failure::Invalid(format!(
                "cannot read cache {}: {e}",
                path.display()
            )))
        }
    };
    let value: serde_json::Value = serde_json::from_str(&content).map_err(|e| {
        Failure::Invalid(format!("cache {} is not valid JSON: {e}", path.display()))
    })?;
    let entries = value
        .get("entries")
        .and_then(|v| v.as_object())
        .ok_or_else(|| Failure::Invalid(format!("cache {} has no entries map", path.display())))?;
    for (key, poly_text) in entries {
        let text = poly_text.as_str().ok_or_else(|| {
            Failure::Invalid(format!(
                "cache {}: entry '{key}' is not a string",
                path.display()
            ))
        })?;
        let poly: LaurentPoly = text.parse().map_err(|e| {
            Failure::Invalid(format!("cache {}: entry '{key}': {e}", path.display()))
        })?;
        cache.insert(key.clone(), poly);
    }
    Ok(())
}

fn save_cache(path: &PathBuf, cache: &DeltaCache) {
    let mut entries = serde_json::Map::new();
    for (key, poly) in cache.sorted_entries() {
        entries.insert(key, serde_json::Value::String(poly));
    }
    let doc = json!({ "version": 1, "entries": entries });
    let text = serde_json::to_string_pretty(&doc).expect("serializable");
    if let Err(e) = std::fs::write(path, text) {
        eprintln!("warning: cannot write cache {}: {e}", path.display());
    }
}

pub fn cmd_verify(
    pmax: i64,
    seed: u64,
    count: usize,
    cache_flag: Option<PathBuf>,
    json: bool,
) -> Result<(), Failure> {
    let cache_file = cache_path(cache_flag);
    let mut cache = DeltaCache::new();
    if let Some(path) = &cache_file {
        load_cache(path, &mut cache)?;
    }

    // calibration corpus
    let cases = parse_corpus(CALIBRATION_CORPUS)?;
    let mut corpus_failures: Vec<String> = Vec::new();
    for case in &cases {
        let got = cache.get_or_compute(&case.word);
        if got != case.expected {
            corpus_failures.push(format!(
                "{}: expected {}, got {}",
                case.word.canonical_text(),
                case.expected,
                got
            ));
        }
    }

    // exhaustive forward sweep
    let sweep = theorem1_forward_sweep(pmax);

    // randomized periodic-congruence suite, both twist conventions
    let suite = lemma4_random_suite_with_cache(seed, count, &mut cache);

    if let Some(path) = &cache_file {
        save_cache(path, &cache);
    }

    let pass = corpus_failures.is_empty() && sweep.passed() && suite.passed();

    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "calibration": {
                    "total": cases.len(),
                    "ok": cases.len() - corpus_failures.len(),
                    "failures": corpus_failures,
                },
                "theorem1": {
                    "pmax": sweep.pmax,
                    "triples": sweep.triples,
                    "checks": sweep.checks,
                    "congruences_held": sweep.congruences_held,
                    "violations": sweep.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "witness_ok": sweep.witness_ok,
                },
                "lemma4": {
                    "seed": suite.seed,
                    "specs": suite.specs,
                    "checks": suite.checks,
                    "failures": suite.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                },
                "pass": pass,
            }))
            .expect("serializable")
        );
    } else {
        println!(
            "calibration corpus: {}/{} ok",
            cases.len() - corpus_failures.len(),
            cases.len()
        );
        for f in &corpus_failures {
            println!("  corpus failure: {f}");
        }
        println!(
            "theorem-1 forward sweep (p <= {}): {} triples, {} checks, {} congruences held, {} violations",
            sweep.pmax,
            sweep.triples,
            sweep.checks,
            sweep.congruences_held,
            sweep.violations.len()
        );
        for v in &sweep.violations {
            println!("  violation: {v}");
        }
        match sweep.witness_ok {
            Some(true) => {
                println!("converse witness (8,1,3): congruence false, n^2 = 1 (mod 8) holds: ok")
            }
            Some(false) => println!("converse witness (8,1,3): FAILED"),
            None => println!("converse witness (8,1,3): skipped (pmax < 8)"),
        }
        println!(
            "lemma-4 randomized suite (seed {}, {} specs, both conventions): {} checks, {} failures",
            suite.seed,
            suite.specs,
            suite.checks,
            suite.failures.len()
        );
        for f in &suite.failures {
            println!("  failure: {f}");
        }
        println!("verify: {}", if pass { "PASS" } else { "FAIL" });
    }

    if pass {
        Ok(())
    } else {
        Err(Failure::CrossCheck(
            "verification found violations".to_string(),
        ))
    }
}
