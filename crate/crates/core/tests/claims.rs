use chain_semiring::verifier::{run_suite, verify_claim, ClaimId, Params, Status};

/// Claims that fail for some parameters at the given size.
fn known_false(id: ClaimId, n: usize) -> bool {
    matches!(id, ClaimId::DeltaClosures | ClaimId::SubStrings) && n >= 3
}

#[test]
fn suite_statuses_for_small_n() {
    let results = run_suite(ClaimId::ALL, 2..=6).unwrap();
    assert_eq!(results.len(), ClaimId::ALL.len() * 5);
    for r in &results {
        let n = r.params.n;
        let expected = if known_false(r.claim, n) {
            Status::Fail
        } else if matches!(
            r.claim,
            ClaimId::TypeMDeltaFails | ClaimId::MixedSetDeltaFails
        ) && n != 4
        {
            Status::Info
        } else {
            Status::Pass
        };
        assert_eq!(r.status, expected, "{} at n={n}: {}", r.claim, r.detail);
        if r.status == Status::Fail {
            assert!(r.witness.is_some());
        }
    }
}

#[test]
fn suite_is_deterministic_and_ordered() {
    let a = run_suite(ClaimId::ALL, 2..=5).unwrap();
    let b = run_suite(ClaimId::ALL, 2..=5).unwrap();
    assert!(a.iter().zip(&b).all(|(x, y)| x.same_outcome(y)));
    let keys: Vec<_> = a.iter().map(|r| (r.claim, r.params.n)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn closures_fail_only_above_zero_anchor() {
    for b in 1..5 {
        let r = verify_claim(ClaimId::DeltaClosures, &Params::with_anchors(5, 0, b)).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.detail);
    }
    let r = verify_claim(ClaimId::DeltaClosures, &Params::with_anchors(5, 1, 3)).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.detail.contains("{a_0} + N_b"));
}

#[test]
fn consecutive_sub_strings_pass() {
    let p = Params {
        n: 5,
        anchors: Some(vec![1, 2]),
        ..Params::default()
    };
    assert_eq!(
        verify_claim(ClaimId::SubStrings, &p).unwrap().status,
        Status::Pass
    );
}

#[test]
fn golden_examples_at_four() {
    for id in [ClaimId::TypeMDeltaFails, ClaimId::MixedSetDeltaFails] {
        let r = verify_claim(id, &Params::n(4)).unwrap();
        assert_eq!(r.status, Status::Pass);
        let w = r.witness.unwrap();
        let get = |role: &str| {
            w.entries
                .iter()
                .find(|e| e.role == role)
                .unwrap()
                .value
                .to_string()
        };
        match id {
            ClaimId::TypeMDeltaFails => {
                assert_eq!(get("x*y"), "<2,2,2,2>");
                assert_eq!(get("lhs"), "<2,2,2,2>");
                assert_eq!(get("rhs"), "<3,3,3,3>");
            }
            _ => {
                assert_eq!(get("x*y"), "<2,2,2,2>");
                assert_eq!(get("delta(x)*y"), "<3,3,3,3>");
                assert_eq!(get("lhs"), "<2,2,2,2>");
                assert_eq!(get("rhs"), "<3,3,3,3>");
            }
        }
    }
}

#[test]
fn json_shape() {
    let r = verify_claim(ClaimId::ProductBands, &Params::with_anchors(4, 1, 2)).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["claim"], "3.2");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["params"]["a"], 1);
    assert!(v["params"].get("s").is_none());
    assert!(v["elapsed_ms"].is_f64());
}
