use std::collections::{HashMap, VecDeque};

use super::diagram::{ArcEnds, Crossing, LinkDiagram, Sign};

/// A diagram relabeled into canonical form together with its code.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub code: String,
    /// Arcs numbered from 1 piece by piece; crossings sorted.
    pub diagram: LinkDiagram,
}

type Tuple = ([usize; 4], Sign);

/// Relabel the arcs reachable from `root` by a breadth-first sweep: arcs are
/// taken in new-label order, and each visit labels the head crossing's arcs
/// counterclockwise from the entry slot, then the tail crossing's arcs from
/// the exit slot.
fn sweep(d: &LinkDiagram, ends: &HashMap<usize, ArcEnds>, root: usize) -> (Vec<Tuple>, HashMap<usize, usize>) {
    let mut new: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    new.insert(root, 1);
    queue.push_back(root);
    let mut touched = Vec::new();
    let mut seen_crossing = vec![false; d.num_crossings()];
    while let Some(a) = queue.pop_front() {
        let e = ends[&a];
        for (k, start) in [e.head, e.tail] {
            if !seen_crossing[k] {
                seen_crossing[k] = true;
                touched.push(k);
            }
            let c = &d.crossings()[k];
            for i in 0..4 {
                let l = c.arcs[(start + i) % 4];
                if !new.contains_key(&l) {
                    let n = new.len() + 1;
                    new.insert(l, n);
                    queue.push_back(l);
                }
            }
        }
    }
    let mut tuples: Vec<Tuple> = touched
        .iter()
        .map(|&k| {
            let c = &d.crossings()[k];
            (c.arcs.map(|l| new[&l]), c.sign)
        })
        .collect();
    tuples.sort_unstable();
    (tuples, new)
}

fn piece_code(tuples: &[Tuple]) -> String {
    tuples
        .iter()
        .map(|(a, s)| {
            format!(
                "{}.{}.{}.{}{}",
                a[0],
                a[1],
                a[2],
                a[3],
                if *s == Sign::Positive { '+' } else { '-' }
            )
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Canonical form: each connected piece of the crossing graph is coded by the
/// least sweep over all root arcs; pieces are ordered by code and followed by
/// the number of free circles.
pub fn canonical_form(d: &LinkDiagram) -> CanonicalForm {
    let ends = d.arc_ends_valid();
    let mut done: HashMap<usize, ()> = HashMap::new();
    let mut pieces: Vec<Vec<Tuple>> = Vec::new();
    for label in d.arcs() {
        if done.contains_key(&label) {
            continue;
        }
        let (_, reach) = sweep(d, &ends, label);
        let mut members: Vec<usize> = reach.keys().copied().collect();
        members.sort_unstable();
        let best = members
            .iter()
            .map(|&r| sweep(d, &ends, r).0)
            .min()
            .expect("piece has an arc");
        for m in members {
            done.insert(m, ());
        }
        pieces.push(best);
    }
    pieces.sort_by_cached_key(|p| piece_code(p));

    let mut code = pieces.iter().map(|p| format!("[{}]", piece_code(p))).collect::<String>();
    code.push_str(&format!("o{}", d.unknots()));

    let mut crossings = Vec::with_capacity(d.num_crossings());
    let mut offset = 0;
    for p in &pieces {
        let arcs = 2 * p.len();
        crossings.extend(p.iter().map(|(a, s)| Crossing::new(a.map(|l| l + offset), *s)));
        offset += arcs;
    }
    CanonicalForm {
        code,
        diagram: LinkDiagram::new_unchecked(crossings, d.unknots()),
    }
}

pub fn canonical_code(d: &LinkDiagram) -> String {
    canonical_form(d).code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::BraidWord;

    fn cl(strands: usize, letters: &[i32]) -> LinkDiagram {
        BraidWord::new(strands, letters.to_vec()).unwrap().closure()
    }

    #[test]
    fn relabeling_invariance() {
        let d = cl(3, &[1, -2, 1, -2]);
        let shuffled = d.relabel(|l| 100 - 7 * l);
        assert_eq!(canonical_code(&d), canonical_code(&shuffled));
        let rotated = {
            let mut c = d.crossings().to_vec();
            c.rotate_left(1);
            LinkDiagram::new(c, 0).unwrap()
        };
        assert_eq!(canonical_code(&d), canonical_code(&rotated));
    }

    #[test]
    fn signs_are_part_of_the_code() {
        assert_ne!(canonical_code(&cl(2, &[1, 1, 1])), canonical_code(&cl(2, &[-1, -1, -1])));
        assert_eq!(canonical_code(&cl(2, &[1, 1, 1]).mirror()), canonical_code(&cl(2, &[-1, -1, -1])));
    }

    #[test]
    fn canonical_diagram_has_same_code() {
        for w in [&[1, 1, 1][..], &[1, -2, 1, -2], &[1, 1, 2, 2]] {
            let d = cl(3, w);
            let f = canonical_form(&d);
            assert_eq!(canonical_code(&f.diagram), f.code);
            assert_eq!(f.diagram.components(), d.components());
        }
    }

    #[test]
    fn free_circles_counted() {
        assert_eq!(canonical_code(&LinkDiagram::unlink(2)), "o2");
        assert_eq!(canonical_code(&LinkDiagram::empty()), "o0");
    }
}
