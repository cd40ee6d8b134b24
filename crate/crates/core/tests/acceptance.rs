//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the lines are always printed.

use std::process::Command;
use std::time::{Duration, Instant};

use nilhom::verify::{self, SuiteReport};

struct Criterion {
    number: usize,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> SuiteReport,
}

fn golden_via_cli() -> SuiteReport {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_nilhom"))
        .args([
            "homology", "sp", "--n", "2", "--k", "2", "--format", "paper",
        ])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let mut ours: Vec<&str> = stdout.lines().collect();
    let mut published: Vec<&str> = verify::SP_2_2_TABLE.lines().collect();
    ours.sort_unstable();
    published.sort_unstable();
    let mut failures = Vec::new();
    if !out.status.success() {
        failures.push(format!("exit status {}", out.status));
    }
    if published.len() != 24 {
        failures.push(format!("fixture has {} rows", published.len()));
    }
    if ours != published {
        failures.push("row multisets differ".into());
    }
    if stdout != verify::SP_2_2_TABLE {
        failures.push("canonical order differs".into());
    }
    SuiteReport {
        suite: "golden".into(),
        passed: failures.is_empty(),
        checked: 4,
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn main() {
    let criteria = [
        Criterion {
            number: 1,
            name: "golden n=k=2 symplectic table",
            budget: secs(1),
            run: golden_via_cli,
        },
        Criterion {
            number: 2,
            name: "row counts 2^k C(n+k,k), 1 <= n,k <= 4",
            budget: secs(5),
            run: || verify::counts(1..=4, 1..=4),
        },
        Criterion {
            number: 3,
            name: "border and Weyl modification rules agree, n,k <= 3",
            budget: secs(30),
            run: || verify::defs_agree(0..=3, 1..=3),
        },
        Criterion {
            number: 4,
            name: "Kostant tables equal the modification-rule sum, n,k <= 3",
            budget: secs(60),
            run: || verify::kostant_vs_rule(0..=3, 1..=3),
        },
        Criterion {
            number: 5,
            name: "Chevalley-Eilenberg oracle equals Kostant tables",
            budget: secs(600),
            run: || verify::oracle(&verify::default_oracle_families()),
        },
        Criterion {
            number: 6,
            name: "Heisenberg Betti numbers, n <= 5",
            budget: secs(5),
            run: || verify::heisenberg(0..=5),
        },
        Criterion {
            number: 7,
            name: "free 2-step homology over self-dual partitions, dim E <= 3",
            budget: secs(60),
            run: || verify::free_two_step(1..=3),
        },
        Criterion {
            number: 8,
            name: "statistic lengths equal BFS word lengths, rank <= 3",
            budget: secs(60),
            run: || verify::lengths(3),
        },
        Criterion {
            number: 9,
            name: "strip column counts strictly decrease",
            budget: None,
            run: || verify::lemma_strip_columns(500, 2024),
        },
        Criterion {
            number: 10,
            name: "Euler characteristic of chains equals that of homology",
            budget: None,
            run: || verify::euler(&verify::default_oracle_families()),
        },
        Criterion {
            number: 11,
            name: "stable range degrees i <= n, n <= 4, k <= 3",
            budget: None,
            run: || verify::stable_range(0..=4, 1..=3),
        },
    ];

    let mut all_passed = true;
    for c in &criteria {
        let start = Instant::now();
        let report = (c.run)();
        let elapsed = start.elapsed();
        let in_budget = c.budget.is_none_or(|b| elapsed <= b);
        let passed = report.passed && in_budget;
        all_passed &= passed;
        let budget = c
            .budget
            .map(|b| format!(" (budget {}s)", b.as_secs()))
            .unwrap_or_default();
        println!(
            "criterion {:>2}: {} - {} [{} checks, {:.3}s{}]",
            c.number,
            if passed { "PASS" } else { "FAIL" },
            c.name,
            report.checked,
            elapsed.as_secs_f64(),
            budget
        );
        for f in &report.failures {
            println!("    {f}");
        }
        if !in_budget {
            println!("    over time budget");
        }
    }
    if !all_passed {
        std::process::exit(1);
    }
}
