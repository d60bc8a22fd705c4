//! Command-line front end: braid-closure polynomials, torus knots, lens-space
//! comparisons, congruence obstruction reports, and reproducibility sweeps.
//!
//! Exit codes: 0 success, 1 invalid input, 2 internal cross-check failure.

mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lensknot::braid::{alexander_of_closure, BraidWord, DeltaCache, PeriodicSpec, TwistConvention};
use lensknot::lens::LensSpace;
use lensknot::obstruction::{lemma4_report, obstruction_report, Branch, GlobalConclusion};
use lensknot::poly::{LaurentPoly, ModulusSpec};
use lensknot::torus::{lift_generator, torus_alexander_closed, torus_braid, TorusParams};

#[derive(Parser)]
#[command(
    name = "lensknot",
    version,
    about = "Exact Alexander polynomials of braid closures and lens-space classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander and Conway polynomials of a braid closure
    Alexander {
        /// Braid word, e.g. "1 1 1" or "n=3 1 -2" (letter i is the i-th
        /// generator, negative for its inverse)
        #[arg(long, allow_hyphen_values = true)]
        braid: Option<String>,
        /// Strand count (default: max|letter| + 1)
        #[arg(long)]
        strands: Option<usize>,
        /// Batch file, one braid word per line
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form torus-knot polynomial, cross-checked against the braid
    /// pipeline
    #[command(allow_negative_numbers = true)]
    Torus {
        a: i64,
        b: i64,
        #[arg(long)]
        json: bool,
    },
    /// Torus-knot lift of the class-n generator knot of L(p,q)
    #[command(allow_negative_numbers = true)]
    Lift {
        p: i64,
        q: i64,
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// Lens-space comparisons
    Lens {
        #[command(subcommand)]
        command: LensCommand,
    },
    /// Self-linking value n^2 q / p of the class-n generator of L(p,q)
    #[command(allow_negative_numbers = true)]
    Linking {
        p: i64,
        q: i64,
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// Per-prime-power congruence report for the class-n generator of L(p,q)
    #[command(allow_negative_numbers = true)]
    Obstruct {
        p: i64,
        q: i64,
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// One periodic-link congruence verification
    Lemma4 {
        /// Braid pattern, e.g. "1" or "n=3 1 -2"
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        /// Strand count for the pattern
        #[arg(long)]
        strands: Option<usize>,
        /// Prime r of the period r^s
        #[arg(short = 'r', long)]
        prime: i64,
        /// Exponent s of the period r^s
        #[arg(short = 's', long, default_value_t = 1)]
        power: u32,
        /// Axis surgery coefficient
        #[arg(short = 'q', long, allow_hyphen_values = true, default_value_t = 0)]
        q: i64,
        /// Pattern position whose crossing orbit is changed
        #[arg(long)]
        pos: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Neg)]
        convention: ConventionArg,
        #[arg(long)]
        json: bool,
    },
    /// Calibration corpus, exhaustive forward sweep, and randomized
    /// periodic-congruence suite
    Verify {
        #[arg(long, default_value_t = 30)]
        pmax: i64,
        /// Seed for the randomized suite
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random periodic specs
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Polynomial cache file (also via LENSKNOT_CACHE)
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum LensCommand {
    /// Homeomorphism/homotopy comparison of L(p,q) and L(p2,q2)
    Compare {
        p: i64,
        q: i64,
        p2: i64,
        q2: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    /// Append -q full twists
    Neg,
    /// Append +q full twists
    Pos,
}

impl From<ConventionArg> for TwistConvention {
    fn from(value: ConventionArg) -> Self {
        match value {
            ConventionArg::Neg => TwistConvention::NegativeQ,
            ConventionArg::Pos => TwistConvention::PositiveQ,
        }
    }
}

/// Failures carrying the process exit code.
enum Failure {
    /// Exit 1: arguments or input files the tool cannot accept.
    Invalid(String),
    /// Exit 2: two internal computation routes disagree.
    CrossCheck(String),
}

impl Failure {
    fn invalid(e: impl ToString) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's rendered message keeps --help/--version on stdout
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::CrossCheck(msg)) => {
            eprintln!("cross-check failure: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Alexander {
            braid,
            strands,
            input,
            json,
        } => cmd_alexander(braid, strands, input, json),
        Command::Torus { a, b, json } => cmd_torus(a, b, json),
        Command::Lift { p, q, n, json } => cmd_lift(p, q, n, json),
        Command::Lens {
            command: LensCommand::Compare { p, q, p2, q2, json },
        } => cmd_lens_compare(p, q, p2, q2, json),
        Command::Linking { p, q, n, json } => cmd_linking(p, q, n, json),
        Command::Obstruct { p, q, n, json } => cmd_obstruct(p, q, n, json),
        Command::Lemma4 {
            pattern,
            strands,
            prime,
            power,
            q,
            pos,
            convention,
            json,
        } => cmd_lemma4(
            pattern,
            strands,
            prime,
            power,
            q,
            pos,
            convention.into(),
            json,
        ),
        Command::Verify {
            pmax,
            seed,
            count,
            cache,
            json,
        } => verify::cmd_verify(pmax, seed, count, cache, json),
    }
}

fn parse_word(text: &str, strands: Option<usize>) -> Result<BraidWord, Failure> {
    let text = text.trim();
    match strands {
        None => BraidWord::parse_line(text).map_err(Failure::invalid),
        Some(n) => {
            if text.starts_with("n=") {
                return Err(Failure::Invalid(
                    "strand count given both with --strands and an n= prefix".to_string(),
                ));
            }
            BraidWord::parse_line(&format!("n={n} {text}")).map_err(Failure::invalid)
        }
    }
}

/// The Conway polynomial of a braid-closure Alexander polynomial; failure
/// here means the two are out of step, which is an internal error.
fn conway_of(delta: &LaurentPoly, word: &BraidWord) -> Result<LaurentPoly, Failure> {
    delta.conway_from_alexander().map_err(|_| {
        Failure::CrossCheck(format!("delta of {word} is not a Conway-polynomial image"))
    })
}

fn cmd_alexander(
    braid: Option<String>,
    strands: Option<usize>,
    input: Option<PathBuf>,
    json: bool,
) -> Result<(), Failure> {
    let words = match (braid, input) {
        (Some(_), Some(_)) => {
            return Err(Failure::Invalid(
                "give either --braid or --input, not both".to_string(),
            ))
        }
        (None, None) => {
            return Err(Failure::Invalid(
                "give a braid word with --braid or --input".to_string(),
            ))
        }
        (Some(text), None) => vec![parse_word(&text, strands)?],
        (None, Some(path)) => {
            let content = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let mut words = Vec::new();
            for line in content.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                words.push(parse_word(line, strands)?);
            }
            words
        }
    };

    let mut records = Vec::new();
    for word in &words {
        let delta = alexander_of_closure(word);
        let nabla = conway_of(&delta, word)?;
        records.push((word, delta, nabla));
    }

    if json {
        let items: Vec<_> = records
            .iter()
            .map(|(word, delta, nabla)| {
                json!({
                    "word": word.canonical_text(),
                    "components": word.closure_components(),
                    "delta": delta.to_exponent_map(),
                    "delta_text": delta.to_string(),
                    "nabla_text": nabla.to_z_string(),
                })
            })
            .collect();
        if items.len() == 1 {
            println!(
                "{}",
                serde_json::to_string_pretty(&items[0]).expect("serializable")
            );
        } else {
            println!(
                "{}",
                serde_json::to_string_pretty(&items).expect("serializable")
            );
        }
    } else {
        for (i, (word, delta, nabla)) in records.iter().enumerate() {
            if i > 0 {
                println!();
            }
            println!(
                "word: {} (components: {})",
                word.canonical_text(),
                word.closure_components()
            );
            println!("Δ = {delta}");
            println!("∇ = {}", nabla.to_z_string());
        }
    }
    Ok(())
}

fn cmd_torus(a: i64, b: i64, json: bool) -> Result<(), Failure> {
    let params = TorusParams::new(a, b).map_err(Failure::invalid)?;
    let closed = torus_alexander_closed(params);
    let braid = torus_braid(params).map_err(Failure::invalid)?;
    let piped = alexander_of_closure(&braid);
    if closed != piped {
        return Err(Failure::CrossCheck(format!(
            "closed form {closed} disagrees with braid pipeline {piped} for T({a},{b})"
        )));
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "a": a,
                "b": b,
                "braid": braid.canonical_text(),
                "delta": closed.to_exponent_map(),
                "delta_text": closed.to_string(),
                "cross_check": "ok",
            }))
            .expect("serializable")
        );
    } else {
        println!("T({a},{b}) braid: {}", braid.canonical_text());
        println!("Δ = {closed}");
        println!("cross-check (braid pipeline): ok");
    }
    Ok(())
}

fn cmd_lift(p: i64, q: i64, n: i64, json: bool) -> Result<(), Failure> {
    let lift = lift_generator(p, q, n).map_err(Failure::invalid)?;
    let delta = torus_alexander_closed(lift);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "p": p,
                "q": q,
                "n": n,
                "torus": [lift.a(), lift.b()],
                "delta": delta.to_exponent_map(),
                "delta_text": delta.to_string(),
            }))
            .expect("serializable")
        );
    } else {
        println!(
            "lift of the class-{n} generator knot of L({p},{q}): ({}, {}) torus knot",
            lift.a(),
            lift.b()
        );
        println!("Δ = {delta}");
    }
    Ok(())
}

fn format_invariant_set(l: &LensSpace) -> String {
    let mut out = String::from("{");
    for (i, v) in l.invariant_set().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{v}");
    }
    out.push('}');
    out
}

fn cmd_lens_compare(p: i64, q: i64, p2: i64, q2: i64, json: bool) -> Result<(), Failure> {
    let a = LensSpace::new(p, q).map_err(Failure::invalid)?;
    let b = LensSpace::new(p2, q2).map_err(Failure::invalid)?;
    let homeo = a.homeomorphic(&b);
    let homotopy = a.homotopy_equivalent(&b);
    if json {
        let set = |l: &LensSpace| -> Vec<String> {
            l.invariant_set().iter().map(|v| v.to_string()).collect()
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "a": { "p": a.p(), "q": a.q(), "qbar": a.qbar() },
                "b": { "p": b.p(), "q": b.q(), "qbar": b.qbar() },
                "homeomorphic": homeo,
                "homotopy_equivalent": homotopy,
                "invariant_set_a": set(&a),
                "invariant_set_b": set(&b),
                "normal_form_a": a.normal_form().to_string(),
                "normal_form_b": b.normal_form().to_string(),
            }))
            .expect("serializable")
        );
    } else {
        let yesno = |v: bool| if v { "yes" } else { "no" };
        println!("{a} vs {b}");
        println!("homeomorphic: {}", yesno(homeo));
        println!("homotopy-equivalent: {}", yesno(homotopy));
        println!("invariant set {a}: {}", format_invariant_set(&a));
        println!("invariant set {b}: {}", format_invariant_set(&b));
        println!("normal form {a}: {}", a.normal_form());
        println!("normal form {b}: {}", b.normal_form());
    }
    Ok(())
}

fn cmd_linking(p: i64, q: i64, n: i64, json: bool) -> Result<(), Failure> {
    let l = LensSpace::new(p, q).map_err(Failure::invalid)?;
    let value = l.linking_form(n, n);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "p": p,
                "q": q,
                "n": n,
                "linking": value.to_string(),
            }))
            .expect("serializable")
        );
    } else {
        println!("lk_{l}([{n}·l], [{n}·l]) = {value}");
    }
    Ok(())
}

fn branch_str(b: Branch) -> &'static str {
    match b {
        Branch::Unit => "UNIT",
        Branch::Qbar => "QBAR",
        Branch::Both => "BOTH",
        Branch::Neither => "NEITHER",
    }
}

fn global_str(g: GlobalConclusion) -> &'static str {
    match g {
        GlobalConclusion::NSquaredIsOne => "n^2 = 1 (mod p)",
        GlobalConclusion::NSquaredIsQbarSquared => "n^2 = qbar^2 (mod p)",
        GlobalConclusion::Mixed => "MIXED",
        GlobalConclusion::Excluded => "EXCLUDED",
    }
}

fn cmd_obstruct(p: i64, q: i64, n: i64, json: bool) -> Result<(), Failure> {
    let report = obstruction_report(p, q, n).map_err(Failure::invalid)?;
    if json {
        let factors: Vec<_> = report
            .per_factor
            .iter()
            .map(|f| {
                json!({
                    "prime": f.modulus.prime(),
                    "exponent": f.modulus.exponent(),
                    "power": f.modulus.power(),
                    "congruence_holds": f.congruence_holds,
                    "branch": branch_str(f.branch),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "p": report.p,
                "q": report.q,
                "n": report.n,
                "qbar": report.qbar,
                "factors": factors,
                "global": global_str(report.global_conclusion),
                "linking": report.linking_value.to_string(),
            }))
            .expect("serializable")
        );
    } else {
        println!(
            "obstruction report for the class-{} generator knot of L({},{})   (qbar = {})",
            report.n, report.p, report.q, report.qbar
        );
        println!("  factor   congruence   branch");
        for f in &report.per_factor {
            println!(
                "  {:<8} {:<12} {}",
                format!("{}^{}", f.modulus.prime(), f.modulus.exponent()),
                f.congruence_holds,
                branch_str(f.branch)
            );
        }
        match report.global_conclusion {
            GlobalConclusion::Excluded => println!(
                "global: EXCLUDED — no knot in class {} of L({},{}) has trivial lift polynomial",
                report.n, report.p, report.q
            ),
            g => println!("global: {}", global_str(g)),
        }
        println!("lk = {}", report.linking_value);
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_lemma4(
    pattern: String,
    strands: Option<usize>,
    prime: i64,
    power: u32,
    q: i64,
    pos: usize,
    convention: TwistConvention,
    json: bool,
) -> Result<(), Failure> {
    let pattern = parse_word(&pattern, strands)?;
    let modulus = ModulusSpec::new(prime, power).map_err(Failure::invalid)?;
    let spec = PeriodicSpec::new(pattern, modulus.clone(), q).map_err(Failure::invalid)?;
    let mut cache = DeltaCache::new();
    let report = lemma4_report(&spec, pos, convention, &mut cache).map_err(Failure::invalid)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "pattern": spec.pattern().canonical_text(),
                "modulus": { "prime": prime, "exponent": power, "power": modulus.power() },
                "q": q,
                "pos": pos,
                "convention": report.convention.to_string(),
                "base_word": report.base_word.canonical_text(),
                "changed_word": report.changed_word.canonical_text(),
                "base_delta": report.base_delta.to_string(),
                "changed_delta": report.changed_delta.to_string(),
                "base_residue": report.base_residue.to_string(),
                "changed_residue": report.changed_residue.to_string(),
                "holds": report.holds(),
            }))
            .expect("serializable")
        );
    } else {
        println!(
            "pattern: {}   modulus: {}   q: {}   orbit position: {}   convention: {}",
            spec.pattern().canonical_text(),
            modulus,
            q,
            pos,
            report.convention
        );
        println!("L(q)  = {}", report.base_word.canonical_text());
        println!("L'(q) = {}", report.changed_word.canonical_text());
        println!("Δ(L(q))  = {}", report.base_delta);
        println!("Δ(L'(q)) = {}", report.changed_delta);
        println!("residue(L(q))  = {}", report.base_residue);
        println!("residue(L'(q)) = {}", report.changed_residue);
        println!(
            "congruence holds: {}",
            if report.holds() { "yes" } else { "no" }
        );
    }
    if !report.holds() {
        return Err(Failure::CrossCheck(
            "periodic congruence failed; this indicates an implementation bug".to_string(),
        ));
    }
    Ok(())
}
