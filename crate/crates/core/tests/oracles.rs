//! Values computed independently (Kauffman bracket state sums and by hand)
//! and frozen here.

use tlink::skein::{homfly_pn, jones_via_bracket};
use tlink::{BraidWord, LaurentPoly, LinkDiagram};

fn cl(k: usize, w: &[i32]) -> LinkDiagram {
    BraidWord::new(k, w.to_vec()).unwrap().closure()
}

fn p(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

#[test]
fn jones_values() {
    let cases = [
        (cl(2, &[1, 1]), p(&[(0, 1), (-2, 1), (-4, 1), (-6, 1)])),
        (cl(2, &[1, 1, 1]), p(&[(-1, 1), (-3, 1), (-5, 1), (-9, -1)])),
        (cl(3, &[1, -2, 1, -2]), p(&[(5, 1), (-5, 1)])),
        (cl(2, &[1; 5]), p(&[(-3, 1), (-5, 1), (-7, 1), (-15, -1)])),
    ];
    for (d, want) in cases {
        assert_eq!(jones_via_bracket(&d).unwrap(), want);
        assert_eq!(homfly_pn(&d, 2).unwrap(), want);
    }
}

#[test]
fn level_three_values() {
    assert_eq!(
        homfly_pn(&cl(2, &[1, 1, 1]), 3).unwrap(),
        p(&[(-2, 1), (-4, 1), (-6, 2), (-8, 1), (-12, -1), (-14, -1)])
    );
    assert_eq!(
        homfly_pn(&cl(2, &[1, 1]), 3).unwrap(),
        p(&[(0, 1), (-2, 1), (-4, 2), (-6, 2), (-8, 2), (-10, 1)])
    );
    assert_eq!(homfly_pn(&cl(3, &[1, -2, 1, -2]), 3).unwrap(), p(&[(8, 1), (6, 1), (0, -1), (-6, 1), (-8, 1)]));
}

#[test]
fn pd_of_braid_closures() {
    let t: LinkDiagram = serde_json::from_str(r#"{"crossings":[[1,2,3,4,1],[2,5,6,3,1],[5,1,4,6,1]]}"#).unwrap();
    assert_eq!(t, cl(2, &[1, 1, 1]));
    let f: LinkDiagram =
        serde_json::from_str(r#"{"crossings":[[1,2,3,4,1],[2,5,6,7,-1],[7,8,4,3,1],[8,6,5,1,-1]]}"#).unwrap();
    assert_eq!(f, cl(3, &[1, -2, 1, -2]));
}
