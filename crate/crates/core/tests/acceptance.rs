//! One line per acceptance criterion. Every check is an exact comparison;
//! the only numeric threshold is the one-second budget of the symbolic suite.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use realruled::batch::{
    class_count_failures, move_trials, realization_cases, round_trip_failures, Execution, MoveConfig,
};
use realruled::bundle::{BundleClass, Sign};
use realruled::classify::{rational_classes, RationalRealPart};
use realruled::curve::{
    canonical_partitions, component_of_partition, jac_real_component_count, CurveType, JacComponent, Partition,
    Triviality,
};
use realruled::elliptic::{
    double_cover_genus, is_principal, jac_class, jac_component_of_class, real_points, ClassComponent, CorspinData,
    FixedLocus,
};
use realruled::surface::{classify_real_structures, real_part, ClassStatus, RealStructureTag};
use realruled::symbolic::fixture::run_all;

const SYMBOLIC_BUDGET: Duration = Duration::from_secs(1);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn ct(g: i64, mu: i64, eps: i64) -> CurveType {
    CurveType::new(g, mu, eps).unwrap()
}

fn jacobian_counts() -> Outcome {
    let mut bad = Vec::new();
    for mu in 1..=10i64 {
        let got = jac_real_component_count(&ct(mu, mu, 0)).unwrap();
        if got != 1 << (mu - 1) {
            bad.push(format!("mu={mu}: {got}"));
        }
    }
    for g in 1..=10i64 {
        let want = if g % 2 == 0 { 1 } else { 2 };
        let got = jac_real_component_count(&ct(g, 0, 0)).unwrap();
        if got != want {
            bad.push(format!("g={g}, mu=0: {got}"));
        }
    }
    outcome(bad.is_empty(), format!("mu in 1..=10 and mu=0, g in 1..=10; mismatches {bad:?}"))
}

fn partition_bijection() -> Outcome {
    let mut bad = Vec::new();
    for mu in 1..=10u32 {
        let curve = ct(mu.into(), mu.into(), 0);
        let parts = canonical_partitions(mu).unwrap();
        let images: BTreeSet<JacComponent> = parts
            .iter()
            .map(|p| component_of_partition(&curve, p).unwrap())
            .collect();
        let count = jac_real_component_count(&curve).unwrap() as usize;
        if parts.len() != count || images.len() != parts.len() {
            bad.push(mu);
        }
    }
    outcome(bad.is_empty(), format!("mu in 1..=10; failing mu {bad:?}"))
}

fn real_part_formula() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for mu in 1..=8u32 {
        let curve = ct(mu.into(), mu.into(), 0);
        for p in canonical_partitions(mu).unwrap() {
            let b = BundleClass::anti_real(JacComponent::Partition(p.clone()));
            let plus = real_part(&b, RealStructureTag::CPlus, &curve).unwrap();
            let minus = real_part(&b, RealStructureTag::CMinus, &curve).unwrap();
            cases += 1;
            if plus.tori != p.side_len() || plus.tori + minus.tori != mu || plus.klein + minus.klein != 0 {
                bad.push(format!("mu={mu} side={:?}", p.side()));
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} partitions; mismatches {bad:?}"))
}

type Shape = Vec<(Vec<RealStructureTag>, ClassStatus)>;

fn conjugacy_table() -> Outcome {
    use ClassStatus::{Proved, Unknown};
    use RealStructureTag::{CMinus, CPlus, DirectSum};
    let empty_even = ct(1, 0, 0);
    let odd = ct(1, 1, 0);
    let even = ct(1, 2, 1);
    let nontrivial = JacComponent::EmptyRealPart(Triviality::Nontrivial);
    let full1 = JacComponent::Partition(Partition::full(1).unwrap());
    let half2 = JacComponent::Partition(Partition::canonical(2, vec![1]).unwrap());
    let case1 = || vec![(vec![DirectSum], Proved)];
    let split = || vec![(vec![CPlus], Proved), (vec![CMinus], Proved)];
    let open = || vec![(vec![CPlus, CMinus], Unknown)];
    let with_sum = |mut rest: Shape| {
        rest.insert(0, (vec![DirectSum], Proved));
        rest
    };
    let matrix: Vec<(&str, BundleClass, CurveType, Shape)> = vec![
        ("real, lift, mu=0", BundleClass::real(2, Some(Sign::Plus)), empty_even, case1()),
        ("real, no lift, mu=0", BundleClass::real(2, Some(Sign::Minus)), empty_even, vec![]),
        ("both, lift, mu=0", BundleClass::both(nontrivial.clone(), Some(Sign::Plus)), empty_even, with_sum(open())),
        ("both, no lift, mu=0", BundleClass::both(nontrivial.clone(), Some(Sign::Minus)), empty_even, open()),
        ("antireal, mu=0", BundleClass::anti_real(nontrivial), empty_even, open()),
        ("trivial, mu=0", BundleClass::trivial(&empty_even), empty_even, split()),
        ("real, mu=1", BundleClass::real(3, None), odd, case1()),
        ("both, mu=1", BundleClass::both(full1.clone(), None), odd, with_sum(split())),
        ("antireal, mu=1", BundleClass::anti_real(full1), odd, split()),
        ("trivial, mu=1", BundleClass::trivial(&odd), odd, split()),
        ("unrelated, mu=1", BundleClass::unrelated(1), odd, vec![]),
        ("antireal, mu=2", BundleClass::anti_real(half2), even, open()),
    ];
    let mut bad = Vec::new();
    for (name, b, curve, want) in &matrix {
        let got: Shape = classify_real_structures(b, curve)
            .unwrap()
            .classes
            .into_iter()
            .map(|c| (c.class, c.status))
            .collect();
        if &got != want {
            bad.push(format!("{name}: {got:?}"));
        }
    }
    outcome(bad.is_empty(), format!("{} cases; mismatches {bad:?}", matrix.len()))
}

fn symbolic_identities() -> Outcome {
    let start = Instant::now();
    let checks = run_all();
    let elapsed = start.elapsed();
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    outcome(
        checks.len() == 10 && failed.is_empty() && elapsed < SYMBOLIC_BUDGET,
        format!("{} checks in {elapsed:?}; failed {failed:?}", checks.len()),
    )
}

fn elliptic_suite() -> Outcome {
    let data = CorspinData::bundled().unwrap();
    let d = data.divisor().unwrap();
    let (c_b, phi) = (&data.c_b, &data.phi);
    let mut bad = Vec::new();
    let mut expect = |name: &str, ok: bool| {
        if !ok {
            bad.push(name.to_string());
        }
    };
    expect("real points empty", real_points(c_b) == FixedLocus::Empty);
    expect("D + c_B(D) principal", is_principal(&d.add(&d.map(c_b))));
    expect("phi(D) - D principal", is_principal(&d.map(phi).sub(&d)));
    expect("2D principal", is_principal(&d.scale(2)));
    expect("D not principal", !is_principal(&d));
    expect(
        "class of D nontrivial",
        jac_component_of_class(&jac_class(&d).unwrap()) == ClassComponent::Nontrivial,
    );
    for k in 0..=10 {
        expect(&format!("genus k={k}"), double_cover_genus(1, 4 * k).ok() == Some(2 * k + 1));
    }
    outcome(bad.is_empty(), format!("17 exact checks; failed {bad:?}"))
}

fn realization() -> Outcome {
    let cases = realization_cases(6).len();
    let trips = round_trip_failures(6, Execution::default());
    let counts = class_count_failures(6, Execution::default());
    outcome(
        trips.is_empty() && counts.is_empty(),
        format!("{cases} realizations with g <= 6; round-trip failures {trips:?}; count failures {counts:?}"),
    )
}

fn move_invariance() -> Outcome {
    let cfg = MoveConfig::default();
    let r = move_trials(&cfg, Execution::default());
    outcome(
        r.trials >= 1000 && cfg.max_moves <= 20 && r.failures.is_empty(),
        format!(
            "{} trials, {} moves ({} parity flips), {} cancellation and {} neutrality checks; failures {:?}",
            r.trials, r.moves, r.flips, r.cancellation_checks, r.neutrality_checks, r.failures
        ),
    )
}

fn rational_table() -> Outcome {
    let t = rational_classes();
    let non_fibered: Vec<_> = t.iter().filter(|c| !c.fibered).collect();
    let empties: Vec<_> = t.iter().filter(|c| c.real_part == RationalRealPart::Empty).collect();
    let ok = t.len() == 4
        && non_fibered.len() == 1
        && non_fibered[0].real_part == RationalRealPart::Sphere
        && empties.len() == 2
        && empties[0].fibered == empties[1].fibered
        && empties[0].quotient_spin.is_some()
        && empties[1].quotient_spin.is_some()
        && empties[0].quotient_spin != empties[1].quotient_spin;
    outcome(ok, format!("{} entries", t.len()))
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("jacobian component counts", jacobian_counts),
        ("partition bijection", partition_bijection),
        ("real-part formula", real_part_formula),
        ("conjugacy table", conjugacy_table),
        ("symbolic identities", symbolic_identities),
        ("elliptic suite", elliptic_suite),
        ("existence and realization", realization),
        ("deformation-move invariance", move_invariance),
        ("rational table", rational_table),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("{} {} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, i + 1, o.detail);
        if !o.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}
