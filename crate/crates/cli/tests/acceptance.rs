//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails. Runs without the libtest harness so
//! the lines are never captured.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use qstirling::identities::{entry, GridConfig, IdentityReport, Verifier};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Run) -> Outcome);

struct Run<'a> {
    v: &'a Verifier,
}

impl Run<'_> {
    fn reports(&self, ids: &[&str], max_n: usize, r_set: Option<Vec<u32>>) -> Result<Vec<IdentityReport>, String> {
        let config = GridConfig {
            max_n: Some(max_n),
            r_set,
            ..GridConfig::default()
        };
        self.v.run(ids, &config).map_err(|e| e.to_string())
    }

    /// Every report equal, and every id reached `max_n`.
    fn all_equal(&self, ids: &[&str], max_n: usize, r_set: Option<Vec<u32>>) -> Outcome {
        let reports = self.reports(ids, max_n, r_set)?;
        check_equal(&reports)?;
        for id in ids {
            let top = reports.iter().filter(|r| r.id == *id).filter_map(|r| r.params.n).max();
            if top != Some(max_n) {
                return Err(format!("{id} stopped at n={top:?}, wanted {max_n}"));
            }
        }
        Ok(format!("{} checks", reports.len()))
    }
}

fn check_equal(reports: &[IdentityReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.equal) {
        Some(r) => Err(format!("{} {} differs at {:?}", r.id, r.params, r.witness)),
        None => Ok(()),
    }
}

fn within(limit: Duration, start: Instant, out: Outcome) -> Outcome {
    let took = start.elapsed();
    let detail = out?;
    if took > limit {
        return Err(format!("{detail}, took {took:.1?} (limit {limit:?})"));
    }
    Ok(detail)
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qstirling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn main_b(run: &Run) -> Outcome {
    let t = Instant::now();
    within(
        Duration::from_secs(30),
        t,
        run.all_equal(&["thm-main-B", "thm-main-B-transformed"], 7, None),
    )
}

fn type_a(run: &Run) -> Outcome {
    let t = Instant::now();
    within(
        Duration::from_secs(10),
        t,
        run.all_equal(&["a-q", "a-q-shifted"], 8, None),
    )
}

fn colored_main(run: &Run) -> Outcome {
    let t = Instant::now();
    let small = run.all_equal(&["thm-main-r"], 6, Some(vec![1, 2, 3]));
    let r4 = small.and_then(|a| Ok(format!("{a} + {}", run.all_equal(&["thm-main-r"], 5, Some(vec![4]))?)));
    within(Duration::from_secs(120), t, r4)
}

fn b_symmetries(run: &Run) -> Outcome {
    run.all_equal(
        &[
            "b-symmetry",
            "des-complement",
            "psi-involution",
            "fmaj-psi",
            "index-sums",
        ],
        7,
        None,
    )
}

fn starred(run: &Run) -> Outcome {
    let a = run.all_equal(&["bfmaj-rec", "so-closed-form"], 7, None)?;
    let b = run.all_equal(&["bfmaj-euler", "starred-product"], 6, None)?;
    Ok(format!("{a} + {b}"))
}

fn insertion_maps(run: &Run) -> Outcome {
    let out = run.all_equal(&["fmaj-deltas", "phi-images"], 6, None)?;
    let cases: BTreeSet<_> = run
        .reports(&["fmaj-deltas"], 6, None)?
        .into_iter()
        .filter_map(|r| r.params.variant)
        .collect();
    if cases.len() != 6 {
        return Err(format!("expected six delta cases, saw {cases:?}"));
    }
    Ok(out)
}

fn partitions(run: &Run) -> Outcome {
    let a = run.all_equal(&["pssp-weight", "d-count", "d-weight", "btilde", "btilde-rec"], 6, None)?;
    let b = run.all_equal(&["b-from-a-q", "b-from-d-q"], 20, None)?;
    let c = run.all_equal(&["a-classical", "b-classical", "b-from-a", "b-from-d"], 10, None)?;
    Ok(format!("{a} + {b} + {c}"))
}

fn bases(run: &Run) -> Outcome {
    run.all_equal(
        &[
            "basis-A",
            "basis-B",
            "basis-D",
            "basis-A-q",
            "basis-B-q",
            "basis-D-q",
            "basis-bd-bridge",
            "basis-r-q",
        ],
        12,
        Some(vec![1, 2, 3]),
    )
}

fn series(run: &Run) -> Outcome {
    let a = run.all_equal(
        &[
            "q-binom-theorem",
            "q-binom-negative",
            "genfun-r",
            "carlitz-r",
            "frobenius-r",
            "frobenius-A",
            "q-extension",
        ],
        6,
        Some(vec![1, 2, 3]),
    )?;
    let b = run.all_equal(&["chu-vandermonde"], 8, None)?;
    Ok(format!("{a} + {b}"))
}

fn specializations(run: &Run) -> Outcome {
    let a = run.all_equal(&["cg-relation"], 8, None)?;
    let reports = run.reports(&["specialize-r1", "specialize-r2"], 8, None)?;
    check_equal(&reports)?;
    for id in ["specialize-r1", "specialize-r2"] {
        for variant in ["stirling", "eulerian"] {
            let top = reports
                .iter()
                .filter(|r| r.id == id && r.params.variant.as_deref() == Some(variant))
                .filter_map(|r| r.params.n)
                .max();
            if top != Some(8) {
                return Err(format!("{id} {variant} stopped at {top:?}"));
            }
        }
    }
    Ok(format!("{a} + {} checks", reports.len()))
}

fn controls(run: &Run) -> Outcome {
    let ids = ["thm-main-B-corrupted", "b-symmetry-corrupted"];
    for id in ids {
        if !entry(id).is_some_and(|e| e.control) {
            return Err(format!("{id} is not registered as a control"));
        }
    }
    let reports = run.reports(&ids, 4, None)?;
    if let Some(r) = reports.iter().find(|r| r.equal || r.witness.is_none()) {
        return Err(format!("{} {} passed or has no witness", r.id, r.params));
    }
    let codes = [
        (cli(&["verify", "thm-main-B", "--max-n", "3"]).status.code(), Some(0)),
        (
            cli(&["verify", "thm-main-B-corrupted", "--max-n", "3"]).status.code(),
            Some(1),
        ),
        (cli(&["verify", "no-such-id"]).status.code(), Some(2)),
    ];
    if codes.iter().any(|(got, want)| got != want) {
        return Err(format!("exit codes {codes:?}"));
    }
    Ok(format!("{} failing control checks, exit codes 0/1/2", reports.len()))
}

fn full_suite(_: &Run) -> Outcome {
    let t = Instant::now();
    let first = cli(&["verify", "all"]);
    let took = t.elapsed();
    let second = cli(&["verify", "all"]);
    if first.status.code() != Some(0) {
        return Err(format!("exit {:?}", first.status.code()));
    }
    if first.stdout != second.stdout {
        return Err("outputs differ between runs".into());
    }
    let summary = String::from_utf8_lossy(&first.stdout)
        .lines()
        .last()
        .unwrap_or("")
        .to_string();
    within(
        Duration::from_secs(300),
        t,
        Ok(format!("{summary} in {took:.1?}, byte-identical rerun")),
    )
    .map_err(|e| format!("{e} (first run {took:.1?})"))
}

fn main() {
    let v = Verifier::default();
    let run = Run { v: &v };
    let criteria: [Criterion; 12] = [
        ("type B main identity, n <= 7", main_b),
        ("type A q-identity, n <= 8", type_a),
        ("colored main identity, r <= 3 n <= 6 and r = 4 n <= 5", colored_main),
        ("q-symmetry, des complement, psi involution, n <= 7", b_symmetries),
        (
            "starred permutations: recurrence, closed form, Euler form, product",
            starred,
        ),
        (
            "insertion maps: six delta cases and exact tiling, n <= 6",
            insertion_maps,
        ),
        ("signed partitions and type D relations", partitions),
        ("falling-factorial bases, n <= 12", bases),
        ("series identities at order 8", series),
        (
            "specializations r = 1, 2 and the Chow-Gessel relation, n <= 8",
            specializations,
        ),
        ("negative controls and exit codes", controls),
        ("verify all: time and determinism", full_suite),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check(&run);
        let took = t.elapsed();
        match &outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({detail}; {took:.2?})", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why} ({took:.2?})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
