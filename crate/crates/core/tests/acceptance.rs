//! Acceptance suite over the default signature. Prints one PASS/FAIL line
//! per criterion and exits non-zero if any fails.

mod common;

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ccc_core::gen::TermGen;
use ccc_core::lambda::arrows_equal;
use ccc_core::laws::{law_suite, GenConfig, Report};
use ccc_core::model::{interpret_finite, FiniteModel};
use ccc_core::rewrite::{oracle_equal, random_walk, Verdict};
use ccc_core::surface::{parse_arrow, print_arrow};
use ccc_core::{Arrow, Error, Signature};
use common::{default_sig, generator, sig_with_point};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;
const CASES: usize = 200;
const DEPTH: usize = 4;

struct Outcome {
    passed: bool,
    detail: String,
}

fn check_laws(report: &Report, names: &[&str], min_cases: usize) -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for name in names {
        match report.law(name) {
            Some(law) if law.passed() && law.cases >= min_cases => total += law.cases,
            Some(law) => bad.push(format!(
                "{name}: {} cases, {} failures {:?}",
                law.cases, law.failures, law.counterexamples
            )),
            None => bad.push(format!("{name}: missing")),
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} laws, {total} cases, 0 failures", names.len())
        } else {
            bad.join("; ")
        },
    }
}

fn suite(sig: &Signature) -> (Report, Duration) {
    let start = Instant::now();
    let config = GenConfig {
        max_depth: DEPTH,
        case_count: CASES,
        seed: SEED,
    };
    let report = law_suite(sig, config).expect("suite runs");
    (report, start.elapsed())
}

fn small_term(g: &mut TermGen<'_, ChaCha8Rng>, limit: usize) -> (Arrow, ccc_core::ArrowType) {
    loop {
        let depth = g.rng().gen_range(0..=3);
        let poly = g.rng().gen_bool(0.5);
        g.set_indeterminate(poly);
        let (f, ty) = g.any_arrow(depth);
        if f.size() <= limit {
            return (f, ty);
        }
    }
}

/// Pairs of at most 12 constructors: half rewrite-related, half drawn
/// independently at a shared type.
fn concordance() -> Outcome {
    const PAIRS: usize = 500;
    const MODELS: usize = 20;
    const LIMIT: usize = 12;
    let s = default_sig();
    let mut g = generator(&s, SEED, true);
    let mut model_rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let (mut proved, mut equal, mut separated) = (0, 0, 0);
    let mut problems = Vec::new();
    let mut pairs = 0;
    while pairs < PAIRS {
        let (f, ty) = small_term(&mut g, LIMIT);
        let other = if pairs % 2 == 0 {
            let steps = g.rng().gen_range(1..=3);
            random_walk(&f, &s, steps, LIMIT, g.rng())
        } else {
            let depth = g.rng().gen_range(0..=3);
            match g.arrow(&ty.source, &ty.target, depth) {
                Some(h) if h.size() <= LIMIT => h,
                _ => continue,
            }
        };
        pairs += 1;
        let eq = arrows_equal(&f, &other, &s).unwrap();
        if oracle_equal(&f, &other, &s, 4).unwrap() == Verdict::Proved {
            proved += 1;
            if !eq {
                problems.push(format!(
                    "oracle proved but normal forms differ: {f} vs {other}"
                ));
            }
        }
        if !eq {
            separated += 1;
            continue;
        }
        equal += 1;
        let mut agreed = 0;
        for _ in 0..10 * MODELS {
            if agreed == MODELS {
                break;
            }
            let m = FiniteModel::random(&s, 3, &mut model_rng).unwrap();
            match (
                interpret_finite(&f, &s, &m),
                interpret_finite(&other, &s, &m),
            ) {
                (Ok(a), Ok(b)) if a == b => agreed += 1,
                (Ok(_), Ok(_)) => {
                    problems.push(format!("equal arrows disagree in a model: {f} vs {other}"));
                    break;
                }
                (Err(Error::ModelTooLarge(_)), _) | (_, Err(Error::ModelTooLarge(_))) => {}
                (a, b) => panic!("interpretation failed: {a:?} {b:?}"),
            }
        }
        if agreed < MODELS && problems.is_empty() {
            problems.push(format!("only {agreed} evaluable models for {f} vs {other}"));
        }
    }
    Outcome {
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "{pairs} pairs: {proved} proved by rewriting, {equal} equal by normal form \
                 (each agreeing in {MODELS} models), {separated} distinct"
            )
        } else {
            problems.into_iter().take(3).collect::<Vec<_>>().join("; ")
        },
    }
}

fn round_trip_and_cli() -> Outcome {
    const TERMS: usize = 1000;
    let s = default_sig();
    let mut g = generator(&s, SEED + 2, true);
    let mut bad = Vec::new();
    for i in 0..TERMS {
        g.set_indeterminate(i % 2 == 0);
        let (f, ty) = g.any_arrow(i % 6);
        match parse_arrow(&print_arrow(&f), &s) {
            Ok(p) if p.term == f && p.ty == ty => {}
            other => bad.push(format!("{f}: {other:?}")),
        }
    }
    let script = Path::new(env!("CARGO_MANIFEST_DIR")).join("scripts/cli_e2e.sh");
    let cli = Command::new("bash")
        .arg(&script)
        .env("CCC", env!("CARGO_BIN_EXE_ccc"))
        .output()
        .expect("bash is available");
    if !cli.status.success() {
        bad.push(String::from_utf8_lossy(&cli.stdout).into_owned());
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{TERMS} terms round-trip; CLI exit codes as specified")
        } else {
            bad.into_iter().take(3).collect::<Vec<_>>().join("; ")
        },
    }
}

fn main() -> ExitCode {
    let (report, elapsed) = suite(&default_sig());
    let (point_report, _) = suite(&sig_with_point());

    let mut equality = check_laws(
        &report,
        &[
            "left-identity",
            "right-identity",
            "associativity",
            "terminal-eta",
            "product-beta",
            "product-eta",
            "exponential-beta",
            "exponential-eta",
        ],
        CASES,
    );
    if elapsed > Duration::from_secs(60) {
        equality.passed = false;
    }
    equality.detail = format!(
        "{}; full suite {:.1} s",
        equality.detail,
        elapsed.as_secs_f64()
    );

    let outcomes = [
        ("equality theory", equality),
        (
            "abstraction bijection",
            check_laws(
                &report,
                &[
                    "abstraction-respects-equality",
                    "apply-after-abstract",
                    "abstract-after-apply",
                ],
                CASES,
            ),
        ),
        (
            "adjunction equations",
            check_laws(
                &report,
                &[
                    "left-composition",
                    "left-unit",
                    "right-beta",
                    "right-eta",
                    "right-composition-gamma",
                    "right-composition-phi",
                    "right-unit",
                ],
                CASES,
            ),
        ),
        (
            "composite adjunction and naturality",
            check_laws(
                &report,
                &[
                    "composite-left",
                    "composite-right",
                    "curry-bijection-beta",
                    "curry-bijection-eta",
                    "curry-natural-in-a",
                    "curry-natural-in-b",
                    "left-naturality",
                    "right-naturality",
                    "left-functor-identity",
                    "left-functor-composition",
                    "right-functor-identity",
                    "right-functor-composition",
                ],
                100,
            ),
        ),
        ("oracle concordance", concordance()),
        (
            "universal property",
            check_laws(
                &point_report,
                &[
                    "instantiate-point",
                    "instantiate-heritage",
                    "instantiate-respects-equality",
                    "instantiate-functor",
                    "heritage-functor",
                ],
                CASES,
            ),
        ),
        ("surface", round_trip_and_cli()),
    ];

    let mut all = true;
    for (i, (name, outcome)) in outcomes.iter().enumerate() {
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{status} {}. {name}: {}", i + 1, outcome.detail);
        all &= outcome.passed;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
