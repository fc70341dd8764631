use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use realruled::symbolic::verify::c_f;
use realruled::symbolic::{
    projectively_equal, verify_involution, Atom, ChartMap, Expr, Hypothesis, Poly, RuleSet, Signature, Word,
};

const NAMES: [&str; 3] = ["f", "g", "h"];

fn sig() -> Signature {
    Signature::new(["lambda"])
}

fn atom() -> impl Strategy<Value = Atom> {
    (0..NAMES.len(), 0..4usize, any::<bool>()).prop_map(|(n, w, conj)| {
        let a = Atom::function(NAMES[n], Word::ALL[w]);
        if conj {
            a.conjugate()
        } else {
            a
        }
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    (
        prop::collection::vec((atom(), -3i64..=3), 0..5),
        -2i64..=2,
        any::<bool>(),
    )
        .prop_map(|(factors, lambda, negative)| {
            let mut e = Expr::constant("lambda").pow(lambda);
            for (a, n) in factors {
                e = e.mul(&Expr::atom(a).pow(n));
            }
            if negative {
                e.neg()
            } else {
                e
            }
        })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((expr(), -2i64..=2), 1..3).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (e, c)| {
            let p = Poly::from(e);
            (0..c.abs()).fold(acc, |acc, _| if c < 0 { acc.sub(&p) } else { acc.add(&p) })
        })
    })
}

fn chart() -> impl Strategy<Value = ChartMap> {
    (0..4usize, any::<bool>(), [poly(), poly(), poly(), poly()]).prop_filter_map(
        "degenerate",
        |(w, anti, [a, b, c, d])| ChartMap::new(Word::ALL[w], anti, [[a, b], [c, d]]).ok(),
    )
}

fn hyps(texts: &[&str]) -> Vec<Hypothesis> {
    texts.iter().map(|t| Hypothesis::parse(t, &sig()).unwrap()).collect()
}

proptest! {
    #[test]
    fn expr_text_round_trips(e in expr()) {
        prop_assert_eq!(Expr::parse(&e.to_string(), &sig()).unwrap(), e);
    }

    #[test]
    fn poly_text_round_trips(p in poly()) {
        prop_assert_eq!(Poly::parse(&p.to_string(), &sig()).unwrap(), p);
    }

    #[test]
    fn conjugation_and_precomposition_are_involutive(e in expr(), w in 0..4usize) {
        prop_assert_eq!(e.conjugate().conjugate(), e.clone());
        prop_assert_eq!(e.precompose(Word::ALL[w]).precompose(Word::ALL[w]), e);
    }

    #[test]
    fn composition_is_associative(a in chart(), b in chart(), c in chart()) {
        let left = a.compose(&b).and_then(|ab| ab.compose(&c));
        let right = b.compose(&c).and_then(|bc| a.compose(&bc));
        if let (Ok(l), Ok(r)) = (left, right) {
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn inverse_is_a_projective_inverse(a in chart()) {
        let id = ChartMap::identity();
        let back = a.inverse().compose(&a).unwrap();
        prop_assert!(projectively_equal(&back, &id, &RuleSet::empty()).unwrap());
    }

    #[test]
    fn reduction_is_confluent(e in expr(), seed in any::<u64>()) {
        let rules = RuleSet::new(&hyps(&[
            "f = ~f.c",
            "f.p * g.p * ~g.cp = -f",
            "h.p * ~h.cp = -f * f.p",
        ]))
        .unwrap();
        let canonical = rules.reduce(&e).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..4 {
            let shuffled = rules.reduce_with(&e, |n| rng.gen_range(0..n)).unwrap();
            prop_assert_eq!(&shuffled, &canonical);
        }
    }

    #[test]
    fn involutions_stay_involutions_under_conjugation(
        g in -2i64..=2,
        h in -2i64..=2,
        w in prop::sample::select(vec![Word::ID, Word::PHI]),
    ) {
        let sig = Signature::default();
        let entry = |name: &str, n: i64| Poly::parse(&format!("{name}^{n}"), &sig).unwrap();
        let psi = ChartMap::new(
            w,
            false,
            [[entry("g", g), Poly::zero()], [Poly::zero(), entry("h", h)]],
        )
        .unwrap();
        let c = c_f(false);
        let h = hyps(&["f = ~f.c", "f.p = f"]);
        prop_assert!(verify_involution(&c, &h).unwrap());
        prop_assert!(verify_involution(&c.conjugate_by(&psi).unwrap(), &h).unwrap());
    }
}

#[test]
fn confluence_over_a_hundred_shuffles() {
    let rules = RuleSet::new(&hyps(&["f = ~f.c", "g * ~g.c = -1", "h.p = lambda * ~h"])).unwrap();
    let e = Expr::parse("~f.cp^3 * g.c^-2 * ~h.c^2 * ~g^4 * h.cp", &sig()).unwrap();
    let canonical = rules.reduce(&e).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        assert_eq!(rules.reduce_with(&e, |n| rng.gen_range(0..n)).unwrap(), canonical);
    }
}

/// Charts `U_i` with transition `diag(x_i^-n_i, 1)` to `U_0`, `c_B(U_i) = U_j`
/// and `conj(x_j o c_B) = x_i`. The real structure in the chart `U_i`
/// carries `conj(x_i)^(-n_i - n_j)`.
#[test]
fn chart_exponents_of_the_real_structure() {
    let sig = Signature::default();
    let rules = RuleSet::new(&[Hypothesis::parse("~xj.c = xi", &sig).unwrap()]).unwrap();
    let cplus = c_f(false);
    let p = |s: &str| Poly::parse(s, &sig).unwrap();
    let c_i = |e: i64| {
        ChartMap::new(
            Word::CB,
            true,
            [[Poly::zero(), Poly::one()], [p(&format!("f.c * ~xi^{e}")), Poly::zero()]],
        )
        .unwrap()
    };
    for ni in -3i64..=3 {
        for nj in -3i64..=3 {
            let psi_i = ChartMap::diagonal(p(&format!("xi^{}", -ni)), Poly::one()).unwrap();
            let psi_j = ChartMap::diagonal(p(&format!("xj^{}", -nj)), Poly::one()).unwrap();
            let lhs = cplus.compose(&psi_i).unwrap();
            let holds = |e| projectively_equal(&lhs, &psi_j.compose(&c_i(e)).unwrap(), &rules).unwrap();
            assert!(holds(-ni - nj), "n_i={ni} n_j={nj}");
            assert_eq!(holds(-ni), nj == 0, "n_i={ni} n_j={nj}");
            assert!(!holds(-ni - nj + 1));

            // the same bookkeeping on the line bundle: f.c conj(x_i)^-n_i
            // against (x_j o c_B)^-n_j f.c conj(x_i)^(n_j - n_i)
            let direct = Expr::parse(&format!("f.c * ~xi^{}", -ni), &sig).unwrap();
            let through = Expr::parse(&format!("xj.c^{} * f.c * ~xi^{}", -nj, nj - ni), &sig).unwrap();
            assert!(rules.equal(&direct, &through).unwrap());
        }
    }
}
