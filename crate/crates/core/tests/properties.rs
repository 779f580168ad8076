use proptest::prelude::*;

use chevalley_core::constants::{compute_all_positive, Filler, QuartetFormula};
use chevalley_core::export::{self, Format};
use chevalley_core::pairs::{ExtraspecialAssignment, SumDictionary};
use chevalley_core::rational::{self, Rational};
use chevalley_core::{n_any, Error, Kind, RootSystem, SignedRoot};

fn diagram() -> impl Strategy<Value = (Kind, usize)> {
    prop_oneof![
        (1usize..=6).prop_map(|n| (Kind::A, n)),
        (2usize..=6).prop_map(|n| (Kind::B, n)),
        (2usize..=6).prop_map(|n| (Kind::C, n)),
        (4usize..=6).prop_map(|n| (Kind::D, n)),
        Just((Kind::E, 6)),
        Just((Kind::F, 4)),
        Just((Kind::G, 2)),
    ]
}

fn system_and_order() -> impl Strategy<Value = (RootSystem, Vec<(usize, usize)>)> {
    diagram().prop_flat_map(|(k, n)| {
        let s = RootSystem::new(k, n).unwrap();
        let len = s.len();
        let pairs: Vec<(usize, usize)> = (0..len)
            .flat_map(|i| (0..len).map(move |j| (i, j)))
            .collect();
        (Just(s), Just(pairs).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn regular_order_is_sound((k, n) in diagram()) {
        let s = RootSystem::new(k, n).unwrap();
        for w in s.roots().windows(2) {
            prop_assert!(w[0].height() <= w[1].height());
            if w[0].height() == w[1].height() {
                prop_assert!(w[0].coords() > w[1].coords());
            }
        }
        // every non-simple root is a sum of two earlier roots
        for g in s.rank()..s.len() {
            let found = (0..g).any(|i| (i + 1..g).any(|j| s.index_of_sum(i, j) == Some(g)));
            prop_assert!(found, "root {} has no earlier decomposition", s.root(g));
        }
    }

    #[test]
    fn fill_is_independent_of_query_order((s, order) in system_and_order()) {
        let dict = SumDictionary::build(&s);
        let seeds = ExtraspecialAssignment::build(&s, &dict).unwrap();
        let mut filler = Filler::new(&s, &seeds, QuartetFormula::specialized_for(s.kind()));
        for (i, j) in order {
            filler.n_positive(i, j).unwrap();
        }
        prop_assert!(filler.matrix().is_complete());
        prop_assert_eq!(filler.into_matrix(), compute_all_positive(&s).unwrap());
    }

    #[test]
    fn signed_extension_relations((k, n) in diagram(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), sa: bool, sb: bool) {
        let s = RootSystem::new(k, n).unwrap();
        let m = compute_all_positive(&s).unwrap();
        let x = SignedRoot { index: a.index(s.len()), negative: sa };
        let y = SignedRoot { index: b.index(s.len()), negative: sb };
        match n_any(&s, &m, x, y) {
            Err(Error::CartanBracket(i)) => prop_assert_eq!(x.opposite(), y, "{}", i),
            Err(e) => prop_assert!(false, "{e}"),
            Ok(v) => {
                prop_assert_eq!(n_any(&s, &m, y, x).unwrap(), -v);
                prop_assert_eq!(n_any(&s, &m, x.opposite(), y.opposite()).unwrap(), -v);
                let summable = s.is_root(&x.coords(&s).add(&y.coords(&s)));
                prop_assert_eq!(v != 0, summable);
            }
        }
    }

    #[test]
    fn matrix_export_round_trips((k, n) in diagram(), json: bool) {
        let s = RootSystem::new(k, n).unwrap();
        let m = compute_all_positive(&s).unwrap();
        let f = if json { Format::Json } else { Format::Csv };
        let text = export::matrix(&s, &m, f).unwrap();
        prop_assert_eq!(export::import_matrix(&s, &text, f).unwrap(), m);
    }

    #[test]
    fn rational_text_round_trips(p in -1000i64..1000, q in 1i64..1000) {
        let r = Rational::new(p, q);
        prop_assert_eq!(rational::parse(&rational::render(&r)), Some(r));
    }
}

#[test]
fn two_computations_agree() {
    for (k, n) in [
        (Kind::B, 7),
        (Kind::C, 7),
        (Kind::F, 4),
        (Kind::E, 7),
        (Kind::G, 2),
    ] {
        let s = RootSystem::new(k, n).unwrap();
        let t = RootSystem::new(k, n).unwrap();
        assert_eq!(
            compute_all_positive(&s).unwrap(),
            compute_all_positive(&t).unwrap()
        );
        let a = export::matrix(&s, &compute_all_positive(&s).unwrap(), Format::Json).unwrap();
        let b = export::matrix(&t, &compute_all_positive(&t).unwrap(), Format::Json).unwrap();
        assert_eq!(a, b);
    }
}
