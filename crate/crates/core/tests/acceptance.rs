//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails. Run with `cargo test -p regraph --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use regraph::experiments::{self, ExperimentReport, Verdict};
use regraph::enumerate::simple_graphs;
use regraph::factors::perfect_2_matching;
use regraph::hcoloring::DEFAULT_NODE_CAP;
use regraph::Multigraph;

const SEED: u64 = 2024;
const MINUTE: Duration = Duration::from_secs(60);

/// Perfect 2-matching existence by search over edge weights in {0, 1, 2}
/// with every vertex weight 2.
fn brute_force_2_matching(g: &Multigraph) -> bool {
    fn rec(g: &Multigraph, need: &mut [usize]) -> bool {
        let Some(v) = need.iter().position(|&d| d > 0) else { return true };
        for w in g.neighbors(v) {
            for k in 1..=need[v].min(need[w]) {
                need[v] -= k;
                need[w] -= k;
                if rec(g, need) {
                    return true;
                }
                need[v] += k;
                need[w] += k;
            }
        }
        false
    }
    rec(g, &mut vec![2; g.n()])
}

struct Line {
    id: &'static str,
    passed: bool,
    elapsed: Duration,
    budget: Duration,
    detail: String,
}

fn criterion(id: &'static str, budget: Duration, run: impl FnOnce() -> (bool, String)) -> Line {
    let started = Instant::now();
    let (ok, detail) = run();
    let elapsed = started.elapsed();
    Line { id, passed: ok && elapsed <= budget, elapsed, budget, detail }
}

fn summary(rep: &ExperimentReport) -> String {
    let failed: Vec<&str> = rep.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let mut s = format!("{} instances, {} failed", rep.instances.len(), rep.failures().len());
    if !failed.is_empty() {
        s.push_str(&format!(", failed checks {failed:?}"));
    }
    for n in &rep.notes {
        s.push_str(&format!("; {n}"));
    }
    s
}

fn report(rep: regraph::Result<ExperimentReport>) -> (bool, String) {
    match rep {
        Ok(rep) => (rep.verdict == Verdict::Pass, summary(&rep)),
        Err(e) => (false, e.to_string()),
    }
}

fn main() -> ExitCode {
    let lines = vec![
        criterion("A1", 5 * MINUTE, || report(experiments::one_factor_sweep())),
        criterion("A2", MINUTE, || report(experiments::pm_action_check())),
        criterion("A3", 10 * MINUTE, || {
            let expected = [1, 1, 2, 3, 5, 7];
            let mut counts = Vec::new();
            let mut ok = true;
            for r in 3..=9 {
                match experiments::petersen_powers(r) {
                    Ok(rep) => {
                        ok &= rep.verdict == Verdict::Pass;
                        counts.push(rep.instances.len());
                        if r == 9 {
                            let comps = rep.checks.iter().find(|c| c.name == "compositions");
                            ok &= comps.is_some_and(|c| c.detail == 462);
                        }
                    }
                    Err(_) => ok = false,
                }
            }
            ok &= counts.len() == 7 && counts[..6] == expected && counts[6] >= 12;
            (ok, format!("class counts for r = 3..9: {counts:?}"))
        }),
        criterion("A4", MINUTE, || report(experiments::same_partition_pair_check())),
        criterion("A5", 30 * MINUTE, || report(experiments::petersen_rigidity(10, DEFAULT_NODE_CAP))),
        criterion("A6", 5 * MINUTE, || report(experiments::lifting(SEED, 200))),
        criterion("A7", 5 * MINUTE, || report(experiments::transport(SEED, 50))),
        criterion("A8", 2 * MINUTE, || report(experiments::pm_avoiding(SEED, 500))),
        criterion("A9", 10 * MINUTE, || {
            let (ok, detail) = report(experiments::regularizable(8));
            let mut checked = 0;
            let mut agree = true;
            for n in 1..=9 {
                for g in simple_graphs(n).expect("n <= 9") {
                    let fast = perfect_2_matching(&g);
                    agree &= fast.as_ref().is_none_or(|f| f.is_valid_for(&g));
                    agree &= fast.is_some() == brute_force_2_matching(&g);
                    checked += 1;
                }
            }
            (ok && agree, format!("{detail}; 2-matching oracle agrees on {checked} graphs: {agree}"))
        }),
        criterion("A10", 15 * MINUTE, || report(experiments::replacement(SEED, 20))),
        criterion("A11", 10 * MINUTE, || report(experiments::meredith(SEED, 30, DEFAULT_NODE_CAP / 100))),
        criterion("A12", 5 * MINUTE, || report(experiments::odd_cut_crosscheck(SEED, 300))),
    ];
    let mut failed = 0;
    for l in &lines {
        let verdict = if l.passed { "PASS" } else { "FAIL" };
        println!(
            "{} {verdict} ({:.1}s of {}s budget) {}",
            l.id,
            l.elapsed.as_secs_f64(),
            l.budget.as_secs(),
            l.detail
        );
        failed += usize::from(!l.passed);
    }
    println!("acceptance: {} of {} criteria passed", lines.len() - failed, lines.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
