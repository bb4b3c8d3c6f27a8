use proptest::prelude::*;
use tlink::linkdiag::canonical_code;
use tlink::skein::{homfly_pn, jones_via_bracket, resolve_crossing};
use tlink::{BraidWord, LaurentPoly, LinkDiagram};

fn braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|k| {
        let letter = (1..k as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        prop::collection::vec(letter, 0..=7).prop_map(move |w| BraidWord::new(k, w).unwrap())
    })
}

fn skein_residual(t: &tlink::skein::SkeinTriple, n: u32) -> LaurentPoly {
    let plus = homfly_pn(&t.plus, n).unwrap().shift(n as i32);
    let minus = homfly_pn(&t.minus, n).unwrap().shift(-(n as i32));
    let zero = &homfly_pn(&t.zero, n).unwrap() * &LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    &(&plus - &minus) - &zero
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_changes_nothing(b in braid(), n in 1u32..=3) {
        let d = b.closure();
        let r = d.relabel(|l| 3 * l + 7);
        prop_assert_eq!(canonical_code(&r), canonical_code(&d));
        prop_assert_eq!(homfly_pn(&r, n).unwrap(), homfly_pn(&d, n).unwrap());
    }

    #[test]
    fn mirror_is_an_involution_and_bars(b in braid(), n in 1u32..=3) {
        let d = b.closure();
        prop_assert_eq!(d.mirror().mirror(), d.clone());
        prop_assert_eq!(d.mirror().writhe(), -d.writhe());
        prop_assert_eq!(homfly_pn(&d.mirror(), n).unwrap(), homfly_pn(&d, n).unwrap().bar());
    }

    #[test]
    fn split_union_multiplies(a in braid(), b in braid(), n in 1u32..=3) {
        let (x, y) = (a.closure(), b.closure());
        let u = x.split_union(&y);
        prop_assert_eq!(u.components(), x.components() + y.components());
        prop_assert_eq!(homfly_pn(&u, n).unwrap(), &homfly_pn(&x, n).unwrap() * &homfly_pn(&y, n).unwrap());
    }

    #[test]
    fn skein_relation_holds(b in braid(), site in 0usize..8, n in 1u32..=3) {
        let d = b.closure();
        prop_assume!(d.num_crossings() > 0);
        let t = resolve_crossing(&d, site % d.num_crossings()).unwrap();
        prop_assert!(skein_residual(&t, n).is_zero());
    }

    #[test]
    fn level_two_is_jones_and_level_one_trivial(b in braid()) {
        let d = b.closure();
        prop_assert_eq!(homfly_pn(&d, 2).unwrap(), jones_via_bracket(&d).unwrap());
        prop_assert!(homfly_pn(&d, 1).unwrap().is_one());
    }

    #[test]
    fn gauss_and_json_round_trip(b in braid()) {
        let d = b.closure();
        let back = LinkDiagram::from_gauss(&d.to_gauss()).unwrap();
        prop_assert_eq!(canonical_code(&back), canonical_code(&d));
        let json: LinkDiagram = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        prop_assert_eq!(json, d);
    }

    #[test]
    fn components_at_one(b in braid(), n in 1u32..=3) {
        // P_n(L) at q = 1 is n^components
        let d = b.closure();
        prop_assert_eq!(homfly_pn(&d, n).unwrap().eval_at_one(), (n as i64).pow(d.components() as u32));
    }
}
