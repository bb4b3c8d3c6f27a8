//! Shared inputs for the benchmarks.

use tlink::{BraidWord, LinkDiagram};

pub fn closure(strands: usize, letters: &[i32]) -> LinkDiagram {
    BraidWord::new(strands, letters.to_vec()).expect("valid word").closure()
}

/// Braid closures of growing size: torus knots and antiprism closures.
pub fn ladder() -> Vec<(String, LinkDiagram)> {
    let mut out = Vec::new();
    for k in [3, 5, 7, 9] {
        out.push((format!("torus-{}", k), closure(2, &vec![1; k])));
    }
    for n in [2, 3, 4, 5] {
        out.push((format!("antiprism-{}", n), closure(3, &[1, -2].repeat(n))));
    }
    out
}
