//! One PASS/FAIL line per acceptance criterion, each with a pinned time
//! budget. Criteria listed in `KNOWN_UNMET` fail because a claim they cover
//! does not hold for some parameters; they are reported but do not fail the
//! run.

use std::process::Command;
use std::time::{Duration, Instant};

use chain_semiring::check_semiring_axioms;
use chain_semiring::strings::{StringType2, StringTypeM, SubfamilyKind};
use chain_semiring::verifier::{verify_claim, ClaimId, Params, Status, VerificationResult};
use chain_semiring::Chain;

const KNOWN_UNMET: &[usize] = &[8, 10];

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn results(ids: &[ClaimId], ns: impl Iterator<Item = usize> + Clone) -> Vec<VerificationResult> {
    ids.iter()
        .flat_map(|&id| {
            ns.clone()
                .map(move |n| verify_claim(id, &Params::n(n)).expect("legal params"))
        })
        .collect()
}

fn all_status(rs: &[VerificationResult], want: Status) -> Result<String, String> {
    match rs.iter().find(|r| r.status != want) {
        None => Ok(format!("{} runs {want}", rs.len())),
        Some(r) => Err(format!(
            "{} at n={} is {}: {}{}",
            r.claim,
            r.params.n,
            r.status,
            r.detail,
            r.witness
                .as_ref()
                .map(|w| format!(" [{w}]"))
                .unwrap_or_default()
        )),
    }
}

fn c1() -> Result<String, String> {
    all_status(&results(&[ClaimId::ProductBands], 2..=10), Status::Pass)
}

fn c2() -> Result<String, String> {
    all_status(&results(&[ClaimId::TypeMProductBands], 2..=8), Status::Pass)
}

fn c3() -> Result<String, String> {
    all_status(
        &results(
            &[
                ClaimId::DeltaDerivation,
                ClaimId::DeltaCommute,
                ClaimId::ShiftDerivation,
            ],
            2..=10,
        ),
        Status::Pass,
    )
}

fn c4() -> Result<String, String> {
    all_status(&results(&[ClaimId::ShiftMaximal], 2..=10), Status::Pass)
}

fn c5() -> Result<String, String> {
    let mut rs = results(&[ClaimId::TopAnchorsTable], 3..=8);
    rs.extend(results(&[ClaimId::DeltaSemilattice], 2..=8));
    all_status(&rs, Status::Pass)
}

fn c6() -> Result<String, String> {
    let mut found = Vec::new();
    for (id, needed) in [
        (
            ClaimId::TypeMDeltaFails,
            [
                ("x*y", "<2,2,2,2>"),
                ("lhs", "<2,2,2,2>"),
                ("rhs", "<3,3,3,3>"),
            ],
        ),
        (
            ClaimId::MixedSetDeltaFails,
            [
                ("x*y", "<2,2,2,2>"),
                ("delta(x)*y", "<3,3,3,3>"),
                ("rhs", "<3,3,3,3>"),
            ],
        ),
    ] {
        let r = verify_claim(id, &Params::n(4)).map_err(|e| e.to_string())?;
        if r.status != Status::Pass {
            return Err(format!("{id}: {}", r.detail));
        }
        let w = r.witness.ok_or(format!("{id}: no witness"))?;
        for (role, value) in needed {
            let got = w
                .entries
                .iter()
                .find(|e| e.role == role)
                .map(|e| e.value.to_string());
            if got.as_deref() != Some(value) {
                return Err(format!("{id}: {role} is {got:?}, expected {value}"));
            }
        }
        found.push(id.as_str());
    }
    Ok(format!("{} reproduced bit-exactly", found.join(" and ")))
}

fn c7() -> Result<String, String> {
    all_status(
        &results(&[ClaimId::TopDeltaDerivation], 3..=8),
        Status::Pass,
    )
}

fn c8() -> Result<String, String> {
    let others = all_status(
        &results(
            &[
                ClaimId::ShiftClosure,
                ClaimId::ClosureSubsemiring,
                ClaimId::TopDeltaClosure,
            ],
            2..=8,
        ),
        Status::Pass,
    )?;
    all_status(&results(&[ClaimId::DeltaClosures], 2..=8), Status::Pass)
        .map(|t| format!("4.4, 4.5, 7.8: {others}; 5.6: {t}"))
        .map_err(|e| format!("4.4, 4.5, 7.8: {others}; {e}"))
}

fn c9() -> Result<String, String> {
    let mut carriers = 0;
    for n in 2..=6 {
        let chain = Chain::new(n).unwrap();
        let mut check = |c: &chain_semiring::Carrier, what: String| -> Result<(), String> {
            carriers += 1;
            match check_semiring_axioms(c).first_failure() {
                None => Ok(()),
                Some((law, _)) => Err(format!("{what}: {law} fails")),
            }
        };
        for b in 1..n {
            for a in 0..b {
                let s = StringType2::new(chain, a, b).unwrap();
                check(s.carrier(), format!("STR{{{a},{b}}}, n={n}"))?;
                let mut kinds = vec![
                    SubfamilyKind::ANilpotents,
                    SubfamilyKind::BNilpotents,
                    SubfamilyKind::Idempotents,
                    SubfamilyKind::S,
                    SubfamilyKind::T,
                    SubfamilyKind::DS,
                    SubfamilyKind::Constants,
                ];
                kinds.extend((0..n - b).map(SubfamilyKind::DifferentialIdeal));
                for kind in kinds {
                    check(
                        &s.subfamily(kind).unwrap().carrier,
                        format!("{kind} of STR{{{a},{b}}}, n={n}"),
                    )?;
                }
            }
        }
        for mask in 0u32..1 << n {
            if mask.count_ones() >= 2 {
                let anchors: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let s = StringTypeM::new(chain, &anchors).unwrap();
                check(s.carrier(), format!("STR{anchors:?}, n={n}"))?;
            }
        }
    }
    let r = verify_claim(ClaimId::SquaringClasses, &Params::n(3)).map_err(|e| e.to_string())?;
    let note = r
        .notes
        .iter()
        .find(|n| n.topic == "all idempotents")
        .ok_or("no idempotent note at n=3")?;
    let w = note
        .witness
        .as_ref()
        .ok_or("idempotent note has no witness")?;
    Ok(format!(
        "{carriers} carriers satisfy every law; idempotents of C_3 not closed: {w}"
    ))
}

fn c10() -> Result<String, String> {
    let run = || {
        let t = Instant::now();
        let o = Command::new(env!("CARGO_BIN_EXE_chain-semiring"))
            .args(["verify", "--claims", "all", "--n", "2..6"])
            .env_remove("CHAIN_SEMIRING_MAX_N")
            .output()
            .expect("binary runs");
        (o, t.elapsed())
    };
    let (first, t1) = run();
    let (second, _) = run();
    if first.stdout != second.stdout {
        return Err("output differs between runs".into());
    }
    let text = String::from_utf8_lossy(&first.stdout);
    let summary = text.lines().last().unwrap_or("").to_string();
    match first.status.code() {
        Some(0) => Ok(format!(
            "exit 0 in {:.1}s, identical output twice; {summary}",
            t1.as_secs_f64()
        )),
        code => {
            let failing: Vec<&str> = text
                .lines()
                .filter(|l| l.split_whitespace().nth(2) == Some("fail"))
                .filter_map(|l| l.split_whitespace().next())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            Err(format!(
                "exit {code:?} (deterministic, {:.1}s); failing claims {}; {summary}",
                t1.as_secs_f64(),
                failing.join(", ")
            ))
        }
    }
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "product bands equal composition, n <= 10",
            budget: secs(5),
            run: c1,
        },
        Criterion {
            id: 2,
            name: "type-m products equal composition, n <= 8",
            budget: secs(30),
            run: c2,
        },
        Criterion {
            id: 3,
            name: "deltas are commuting derivations, D on DS, n <= 10",
            budget: secs(60),
            run: c3,
        },
        Criterion {
            id: 4,
            name: "DS is maximal for D, n <= 10",
            budget: secs(60),
            run: c4,
        },
        Criterion {
            id: 5,
            name: "delta composition tables, n <= 8",
            budget: secs(60),
            run: c5,
        },
        Criterion {
            id: 6,
            name: "C_4 counterexamples reproduce",
            budget: secs(5),
            run: c6,
        },
        Criterion {
            id: 7,
            name: "top-piece deltas are derivations, n in 3..8",
            budget: secs(60),
            run: c7,
        },
        Criterion {
            id: 8,
            name: "closure statements, n <= 8",
            budget: secs(60),
            run: c8,
        },
        Criterion {
            id: 9,
            name: "semiring laws on every constructed carrier, n <= 6",
            budget: secs(60),
            run: c9,
        },
        Criterion {
            id: 10,
            name: "verify --claims all --n 2..6 exits 0, deterministic",
            budget: secs(60),
            run: c10,
        },
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, text) = match outcome {
            Ok(t) if elapsed <= c.budget => (true, t),
            Ok(t) => (false, format!("{t}; over budget")),
            Err(t) => (false, t),
        };
        let tag = if ok { "PASS" } else { "FAIL" };
        let known = if !ok && KNOWN_UNMET.contains(&c.id) {
            " (known)"
        } else {
            ""
        };
        println!(
            "criterion {:>2}: {tag}{known} [{:.2}s / {}s] {}: {text}",
            c.id,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            c.name
        );
        if !ok && !KNOWN_UNMET.contains(&c.id) {
            unexpected.push(c.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
