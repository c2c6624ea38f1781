//! Acceptance gate: one pass/fail line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use gmdn::verify::{
    chain_exhaustive, classes, counting, descent, essential, generic, params_suite, refinement,
    sdorbit, VerifyReport, DEFAULT_SEED,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: Vec<gmdn::Result<VerifyReport>>) -> Outcome {
    let mut checks = 0;
    let mut failures = Vec::new();
    for r in reports {
        match r {
            Ok(r) => {
                checks += r.checks.len();
                failures.extend(r.failures().map(|c| format!("{}: {}", c.name, c.detail)));
            }
            Err(e) => failures.push(format!("error: {e}")),
        }
    }
    Outcome {
        passed: failures.is_empty() && checks > 0,
        detail: if failures.is_empty() {
            format!("{checks} checks")
        } else {
            format!(
                "{} of {checks} checks failed; first: {}",
                failures.len(),
                failures[0]
            )
        },
    }
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_gmdn");
    let commands: &[&[&str]] = &[
        &["enumerate", "-m", "3", "-n", "3"],
        &["residue", "(3,1|2|)", "--shift", "0,-2,5"],
        &[
            "params",
            "-m",
            "4",
            "-d",
            "2",
            "-n",
            "3",
            "--params",
            r#"{"k":"-1","c":{"2":"1/3"}}"#,
        ],
        &[
            "cm",
            "-m",
            "2",
            "-d",
            "1",
            "-n",
            "2",
            "--params",
            r#"{"k":"-1","c":{"1":"1"}}"#,
        ],
        &[
            "cm",
            "-m",
            "4",
            "-d",
            "2",
            "-n",
            "3",
            "--generic",
            "--format",
            "tsv",
        ],
        &[
            "cm",
            "-m",
            "6",
            "-d",
            "2",
            "-n",
            "2",
            "--params",
            r#"{"k":"-1","H":["-1/2","1/2","0","-1/2","1/2","0"]}"#,
            "--scaled",
        ],
        &[
            "rouquier",
            "-m",
            "4",
            "-d",
            "2",
            "-n",
            "2",
            "--generic",
            "--compare",
            "cm",
        ],
        &[
            "compare",
            "-m",
            "2",
            "-d",
            "2",
            "-n",
            "4",
            "--params",
            r#"{"k":"-1"}"#,
        ],
        &[
            "verify", "sdorbit", "-m", "4", "-d", "2", "-n", "3", "--json",
        ],
        &["oracle", "-m", "4", "-d", "2", "-n", "2"],
    ];
    for args in commands {
        let run = || Command::new(exe).args(*args).output().expect("binary runs");
        let (a, b) = (run(), run());
        if !a.status.success() {
            return Outcome {
                passed: false,
                detail: format!(
                    "`{}` failed: {}",
                    args.join(" "),
                    String::from_utf8_lossy(&a.stderr)
                ),
            };
        }
        if a.stdout != b.stdout || a.stdout.is_empty() {
            return Outcome {
                passed: false,
                detail: format!("`{}` output differs between runs", args.join(" ")),
            };
        }
    }
    Outcome {
        passed: true,
        detail: format!("{} commands byte-identical across two runs", commands.len()),
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("1 counting", Duration::from_secs(5), || {
            from_reports(vec![counting(None)])
        }),
        ("2 reflection classes", Duration::from_secs(30), || {
            from_reports(vec![classes(None)])
        }),
        ("3 parameters", Duration::from_secs(60), || {
            from_reports(vec![params_suite(DEFAULT_SEED, 100, 6)])
        }),
        ("4 CM descent", Duration::from_secs(60), || {
            from_reports(vec![descent(None), sdorbit(None, DEFAULT_SEED, 1000)])
        }),
        ("5 genericity", Duration::from_secs(60), || {
            from_reports(vec![generic(None)])
        }),
        ("6 Rouquier", Duration::from_secs(300), || {
            from_reports(vec![
                essential(12),
                chain_exhaustive(3, 4),
                refinement(None),
            ])
        }),
        ("7 determinism", Duration::from_secs(120), determinism),
    ];
    let mut all = true;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let passed = outcome.passed && elapsed <= limit;
        all &= passed;
        println!(
            "{} criterion {name}: {} ({:.2}s, limit {}s)",
            if passed { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
