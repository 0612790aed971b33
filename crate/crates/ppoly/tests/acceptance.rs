//! Acceptance run: one line per criterion, exit status 1 if any fails.

use std::process::ExitCode;
use std::time::Instant;

use ppoly::verify::{default_range, run, Check, Options};

struct Criterion {
    id: usize,
    title: &'static str,
    suites: &'static [&'static str],
}

const CRITERIA: [Criterion; 13] = [
    Criterion { id: 1, title: "edge census is n^2 + n for n = 3..8", suites: &["census"] },
    Criterion { id: 2, title: "enumerated triangulations equal the maximal cliques, n = 3..6", suites: &["enumeration"] },
    Criterion { id: 3, title: "exchange graph connected and n-regular, flip an involution, n <= 6", suites: &["exchange"] },
    Criterion { id: 4, title: "every potential term has theta weight 2n (n <= 6 exhaustive, 7 and 8 sampled)", suites: &["potential"] },
    Criterion { id: 5, title: "shortest theta paths agree across flips, n <= 5", suites: &["min-path"] },
    Criterion { id: 6, title: "graded Hom matches the module oracle, n = 3..5, t = 6, both primes", suites: &["hom-oracle"] },
    Criterion { id: 7, title: "stable Hom and Ext^1 match the module oracle, n = 3, 4", suites: &["stable-oracle"] },
    Criterion { id: 8, title: "Ext^1 from AR sequences equals the table and the crossing number, n <= 8", suites: &["crossing"] },
    Criterion { id: 9, title: "Ext^1 is symmetric, n <= 8", suites: &["calabi-yau"] },
    Criterion { id: 10, title: "tau = Omega nu, tau^(2n) = id, tau^n tag behaviour, Ext^1(tau^-1 a, a) = 1", suites: &["translation"] },
    Criterion { id: 11, title: "maximal rigid sets are the triangulations and endomorphism degrees agree, n <= 6", suites: &["cluster"] },
    Criterion { id: 12, title: "S^[n] certificate, n = 3..8", suites: &["s-bracket"] },
    Criterion { id: 13, title: "graded Omega, Hom window, tilting lift and D_(n+1) AR window", suites: &["graded"] },
];

fn main() -> ExitCode {
    let opts = Options::default();
    let start = Instant::now();
    let all: Vec<&str> = CRITERIA.iter().flat_map(|c| c.suites.iter().copied()).collect();
    let report = match run(&all, None, &opts) {
        Ok(r) => r,
        Err(e) => {
            println!("acceptance run aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut failed = 0;
    for c in &CRITERIA {
        let checks: Vec<&Check> = report.checks.iter().filter(|k| c.suites.contains(&k.suite.as_str())).collect();
        let expected: usize = c.suites.iter().map(|s| default_range(s).len()).sum();
        let pass = checks.len() == expected && checks.iter().all(|k| k.pass);
        let ns: Vec<String> = checks.iter().map(|k| k.n.to_string()).collect();
        println!("criterion {:>2}: {} ({}; n = {})", c.id, if pass { "PASS" } else { "FAIL" }, c.title, ns.join(","));
        if !pass {
            failed += 1;
            for k in checks.iter().filter(|k| !k.pass) {
                println!("    n = {}: {}", k.n, k.detail);
            }
        }
    }
    println!("{} of 13 criteria passed in {:.1?}", 13 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
