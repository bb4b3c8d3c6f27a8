use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linkdiag::LinkDiagram;
use crate::qlaurent::LaurentPoly;

pub const BRACKET_BUDGET: usize = 24;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Kauffman bracket state sum with `⟨∅⟩ = 1` and loop value
/// `δ = −A² − A⁻²`, normalized by `(−A³)^{−w}` and rewritten through
/// `A² ↦ −v`. The result obeys the `n = 2` skein relation and sends the
/// unknot to `[2]`.
pub fn jones_via_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    jones_via_bracket_with_budget(d, BRACKET_BUDGET)
}

pub fn jones_via_bracket_with_budget(d: &LinkDiagram, budget: usize) -> Result<LaurentPoly> {
    let c = d.num_crossings();
    if c > budget {
        return Err(Error::BudgetExceeded {
            what: "crossing count",
            size: c,
            limit: budget,
        });
    }
    let mut index: HashMap<usize, usize> = HashMap::new();
    let arcs: Vec<[usize; 4]> = d
        .crossings()
        .iter()
        .map(|x| {
            x.arcs.map(|l| {
                let n = index.len();
                *index.entry(l).or_insert(n)
            })
        })
        .collect();
    let num_arcs = index.len();

    // (A-exponent, loops) -> number of states
    let mut tally: HashMap<(i32, usize), i64> = HashMap::new();
    let mut parent = vec![0usize; num_arcs];
    for state in 0u64..(1u64 << c) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut a_exp = 0i32;
        for (k, [a, b, cc, dd]) in arcs.iter().copied().enumerate() {
            let (x, y, z, w) = if state >> k & 1 == 0 {
                a_exp += 1;
                (a, b, cc, dd)
            } else {
                a_exp -= 1;
                (a, dd, b, cc)
            };
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx] = ry;
            let (rz, rw) = (find(&mut parent, z), find(&mut parent, w));
            parent[rz] = rw;
        }
        let loops = (0..num_arcs).filter(|&i| find(&mut parent, i) == i).count() + d.unknots();
        *tally.entry((a_exp, loops)).or_insert(0) += 1;
    }

    // polynomial in A, then A^{2j} -> (-v)^j
    let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut bracket = LaurentPoly::zero();
    let mut keys: Vec<_> = tally.keys().copied().collect();
    keys.sort_unstable();
    for key @ (a_exp, loops) in keys {
        bracket += &LaurentPoly::monomial(a_exp, tally[&key]) * &delta.pow(loops as u32);
    }
    let w = d.writhe() as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = &bracket * &LaurentPoly::monomial(-3 * w, sign);
    Ok(LaurentPoly::from_terms(normalized.terms().iter().map(|&(e, coef)| {
        debug_assert!(e % 2 == 0, "odd A-power after normalization");
        let j = e / 2;
        (j, if j % 2 == 0 { coef } else { -coef })
    })))
}
