//! Randomised checks of structural invariants on small finite instances.

use depcat::cat::{is_pullback, Category, FinSetCat, FnArrow};
use depcat::dep::{DepStructure, FinSetDep, GlobalSectionsDep};
use depcat::fam::{FamStructure, FinFamily, FinSetFam};
use depcat::instances::{build, deserialize, generate, run_suites, serialize, FamChoice, InstanceSpec, Model, Suite};
use depcat::sigma::{FinSetSigma, SigmaStructure};
use proptest::prelude::*;

const CAP: usize = 2;

/// Needs `cod > 0` unless `dom = 0`.
fn arrow(dom: usize, cod: usize) -> impl Strategy<Value = FnArrow> {
    prop::collection::vec(0..cod.max(1), dom).prop_map(move |map| FnArrow::new(cod, map))
}

/// `(g, f)` with `g: b → a`, `f: c → b`.
fn composable_into(a: usize) -> impl Strategy<Value = (FnArrow, FnArrow)> {
    (1..=3usize, 0..=3usize).prop_flat_map(move |(b, c)| (arrow(b, a), arrow(c, b)))
}

/// `(h, g, f)` with `f: a → b`, `g: b → c`, `h: c → d`, all sizes at most 3.
fn composable_triple() -> impl Strategy<Value = (FnArrow, FnArrow, FnArrow)> {
    (0..=3usize, 1..=3usize, 1..=3usize, 1..=3usize)
        .prop_flat_map(|(a, b, c, d)| (arrow(c, d), arrow(b, c), arrow(a, b)))
}

fn family(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = FinFamily> {
    prop::collection::vec(0..=CAP, len).prop_map(FinFamily::new)
}

/// A family over `a` and an arrow `f: b → a`.
fn family_and_arrow() -> impl Strategy<Value = (FinFamily, FnArrow)> {
    (family(1..=3), 0..=3usize).prop_flat_map(|(lam, b)| {
        let a = lam.fibers.len();
        (Just(lam), arrow(b, a))
    })
}

fn sigma() -> FinSetSigma {
    FinSetSigma::new(FinSetFam::new(FinSetCat::new(3), CAP))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finset_composition_is_associative_and_unital((h, g, f) in composable_triple()) {
        let cat = FinSetCat::new(3);
        let left = cat.compose(&cat.compose(&h, &g).unwrap(), &f).unwrap();
        let right = cat.compose(&h, &cat.compose(&g, &f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(cat.compose(&cat.identity(&g.cod), &g).unwrap(), g.clone());
        prop_assert_eq!(cat.compose(&g, &cat.identity(&g.dom())).unwrap(), g);
    }

    #[test]
    fn restriction_is_functorial((lam, (g, f)) in family(1..=3).prop_flat_map(|lam| {
        let a = lam.fibers.len();
        (Just(lam), composable_into(a))
    })) {
        let fam = FinSetFam::new(FinSetCat::new(3), CAP);
        let cat = fam.base();
        let once = fam.restrict(&lam, &cat.compose(&g, &f).unwrap()).unwrap();
        let twice = fam.restrict(&fam.restrict(&lam, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn sigma_squares_are_pullbacks((lam, f) in family_and_arrow()) {
        let s = sigma();
        let sq = s.square(&lam, &f).unwrap();
        prop_assert!(is_pullback(s.base(), &sq).unwrap().holds());
        prop_assert_eq!(s.sigma_obj(&lam).unwrap(), lam.fibers.iter().sum::<usize>());
    }

    #[test]
    fn sigma_encoding_round_trips(lam in family(0..=4)) {
        let total = lam.total();
        for p in 0..total {
            let (i, x) = FinSetSigma::decode(&lam, p);
            prop_assert!(x < lam.fibers[i]);
            prop_assert_eq!(FinSetSigma::index(&lam, i, x), p);
        }
    }

    #[test]
    fn sections_apply_functorially((lam, (g, f)) in family(1..=3).prop_flat_map(|lam| {
        let a = lam.fibers.len();
        (Just(lam), composable_into(a))
    })) {
        let dep = GlobalSectionsDep::new(sigma());
        let cat = *dep.sigma.base();
        let gf = cat.compose(&g, &f).unwrap();
        let sections = dep.dep_arrows(&lam).unwrap();
        prop_assert_eq!(sections.len(), lam.fibers.iter().product::<usize>());
        for phi in sections {
            let direct = dep.apply(&phi, &gf).unwrap();
            let stepwise = dep.apply(&dep.apply(&phi, &g).unwrap(), &f).unwrap();
            prop_assert_eq!(&direct, &stepwise);
            prop_assert!(dep.is_dep_arrow(&direct).unwrap());
        }
    }

    #[test]
    fn choices_and_sections_agree_in_number(lam in family(0..=3)) {
        let choices = FinSetDep::new(FinSetFam::new(FinSetCat::new(3), CAP));
        let sections = GlobalSectionsDep::new(sigma());
        prop_assert_eq!(choices.dep_arrows(&lam).unwrap().len(), sections.dep_arrows(&lam).unwrap().len());
    }
}

fn relation() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=4usize).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..=4)))
}

/// Orients every pair upward so the closure stays antisymmetric.
fn upward(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_posets_pass_and_round_trip((n, pairs) in relation(), fam in prop_oneof![
        Just(FamChoice::None), Just(FamChoice::Coslice), Just(FamChoice::Constant)
    ]) {
        let spec = InstanceSpec::Poset { objects: n, relation: upward(&pairs), fam };
        let doc = generate(&spec, 2).unwrap();
        let text = serialize(&doc);
        let back = deserialize(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize(&back), text);
        let model = Model::from_document(&back).unwrap();
        let report = run_suites(&model, None, 2).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn ring_documents_round_trip(m in 1..=6usize) {
        let doc = generate(&InstanceSpec::ring(m).unwrap(), 2).unwrap();
        let text = serialize(&doc);
        prop_assert_eq!(serialize(&deserialize(text.as_bytes()).unwrap()), text);
    }

    #[test]
    fn cyclic_monoids_pass(n in 1..=5usize) {
        let table: Vec<Vec<usize>> = (0..n).map(|g| (0..n).map(|f| (g + f) % n).collect()).collect();
        let model = build(&InstanceSpec::Monoid { table, fam: FamChoice::Coslice }).unwrap();
        let report = run_suites(&model, None, 2).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let model = build(&InstanceSpec::finset(2, 2)).unwrap();
    let suites = Suite::ALL;
    let first = run_suites(&model, Some(&suites), 2).unwrap();
    let second = run_suites(&model, Some(&suites), 2).unwrap();
    assert_eq!(first.to_json(), second.to_json());
    assert_eq!(first.to_string(), second.to_string());
}
