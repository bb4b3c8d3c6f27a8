use super::diagram::{Crossing, LinkDiagram, Sign};
use crate::error::{Error, Result};
use crate::planarmap::{
    is_edge_transitive_with_budget, map_automorphisms_with_budget, CombinatorialMap, MapAutomorphism,
    SearchBudget,
};

/// Which opposite dart pair at the seed vertex carries the over-strand:
/// pair 0 contains the vertex's smallest dart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedPair {
    First,
    Second,
}

impl SeedPair {
    fn bit(self) -> bool {
        self == SeedPair::Second
    }
}

struct Setup<'a> {
    m: &'a CombinatorialMap,
    group: Vec<MapAutomorphism>,
    /// smallest dart at each vertex
    root: Vec<usize>,
}

impl Setup<'_> {
    /// Whether `d` lies in pair 0 at its vertex.
    fn in_first_pair(&self, d: usize) -> bool {
        let r = self.root[self.m.vertex_of(d)];
        d == r || d == self.m.sigma()[self.m.sigma()[r]]
    }

    /// Whether `g` sends pair 0 at `v` to pair 1 at the image vertex.
    fn twist(&self, g: &MapAutomorphism, v: usize) -> bool {
        !self.in_first_pair(g.dart_perm[self.root[v]])
    }

    fn image(&self, g: &MapAutomorphism, v: usize) -> usize {
        self.m.vertex_of(g.dart_perm[self.root[v]])
    }
}

/// Close the partial assignment `x` under `gens`; `false` on a conflict.
fn propagate(s: &Setup, gens: &[(usize, bool)], x: &mut [Option<bool>], start: usize) -> bool {
    let mut stack = vec![start];
    let mut visited = vec![false; x.len()];
    visited[start] = true;
    while let Some(v) = stack.pop() {
        let xv = x[v].expect("assigned before visiting");
        for &(gi, swap) in gens {
            let g = &s.group[gi];
            let w = s.image(g, v);
            let want = xv ^ s.twist(g, v) ^ swap;
            match x[w] {
                Some(xw) if xw != want => return false,
                Some(_) => {}
                None => x[w] = Some(want),
            }
            if !visited[w] {
                visited[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

fn search(s: &Setup, seed: usize, gens: &mut Vec<(usize, bool)>, x: Vec<Option<bool>>) -> Option<Vec<bool>> {
    let Some(w) = x.iter().position(Option::is_none) else {
        return Some(x.into_iter().map(Option::unwrap).collect());
    };
    for gi in 0..s.group.len() {
        if s.image(&s.group[gi], seed) != w {
            continue;
        }
        for swap in [false, true] {
            gens.push((gi, swap));
            let mut y = x.clone();
            if propagate(s, gens, &mut y, seed) {
                if let Some(found) = search(s, seed, gens, y) {
                    return Some(found);
                }
            }
            gens.pop();
        }
    }
    None
}

/// Over-pair choice at every vertex (`true` = pair 1 is over) such that the
/// resulting diagram has a crossing-transitive symmetry group, starting from
/// the given seed. Skips the edge-transitivity gate of [`from_map_with_seed`].
///
/// The search runs over vertex-transitive subgroups built one generator at a
/// time, each generator tagged with whether it exchanges the layers.
pub fn symmetric_crossing_assignment(
    m: &CombinatorialMap,
    seed_vertex: usize,
    seed_pair: SeedPair,
    budget: SearchBudget,
) -> Result<Vec<bool>> {
    if m.num_darts() == 0 || !m.is_regular(4) {
        return Err(Error::NotFourRegular);
    }
    m.ensure_spherical()?;
    if seed_vertex >= m.num_vertices() {
        return Err(Error::IndexOutOfRange {
            index: seed_vertex as i64,
            bound: m.num_vertices() as i64,
        });
    }
    let group = map_automorphisms_with_budget(m, budget)?;
    let root = m.vertices().iter().map(|c| *c.iter().min().unwrap()).collect();
    let s = Setup { m, group, root };
    let mut x = vec![None; m.num_vertices()];
    x[seed_vertex] = Some(seed_pair.bit());
    search(&s, seed_vertex, &mut Vec::new(), x).ok_or(Error::InconsistentPropagation)
}

fn is_simple(m: &CombinatorialMap) -> bool {
    let mut seen = std::collections::HashSet::new();
    for d in 0..m.num_darts() {
        let (u, v) = (m.vertex_of(d), m.vertex_of(m.alpha()[d]));
        if u == v || !seen.insert((u, v)) {
            return false;
        }
    }
    true
}

pub fn from_map_with_seed(m: &CombinatorialMap, seed_vertex: usize, seed_pair: SeedPair) -> Result<LinkDiagram> {
    from_map_with_seed_budget(m, seed_vertex, seed_pair, SearchBudget::default())
}

/// Transitive diagram on a 4-regular vertex-transitive map, grown from one
/// crossing. Simple maps whose automorphisms are edge-transitive are
/// rejected; multigraphs (doubled cycles and prisms) are exempt.
pub fn from_map_with_seed_budget(
    m: &CombinatorialMap,
    seed_vertex: usize,
    seed_pair: SeedPair,
    budget: SearchBudget,
) -> Result<LinkDiagram> {
    if m.num_darts() == 0 || !m.is_regular(4) {
        return Err(Error::NotFourRegular);
    }
    if is_simple(m) && is_edge_transitive_with_budget(m, budget)? {
        return Err(Error::EdgeTransitiveInput);
    }
    let x = symmetric_crossing_assignment(m, seed_vertex, seed_pair, budget)?;
    Ok(diagram_from_assignment(m, &x))
}

/// Diagram on a 4-regular spherical map with strands running straight
/// through each vertex; `over_second[v]` picks pair 1 at `v` as the
/// over-strand. Strands are oriented from their smallest unvisited dart and
/// arcs are numbered in traversal order from 1.
pub fn diagram_from_assignment(m: &CombinatorialMap, over_second: &[bool]) -> LinkDiagram {
    let n = m.num_darts();
    let s = m.sigma();
    let opposite = |d: usize| s[s[d]];
    // label of the edge at each dart, and whether the dart is an arc's head
    let mut label = vec![0usize; n];
    let mut incoming = vec![false; n];
    let mut next_label = 1;
    for start in 0..n {
        if label[start] != 0 {
            continue;
        }
        let mut out = start;
        while label[out] == 0 {
            let into = m.alpha()[out];
            label[out] = next_label;
            label[into] = next_label;
            incoming[into] = true;
            next_label += 1;
            out = opposite(into);
        }
    }
    let roots: Vec<usize> = m.vertices().iter().map(|c| *c.iter().min().unwrap()).collect();
    let mut crossings = Vec::with_capacity(m.num_vertices());
    for (v, &r) in roots.iter().enumerate() {
        // an under dart: pair 1 if pair 0 is over, else pair 0
        let under = if over_second[v] { r } else { s[r] };
        let under_in = if incoming[under] { under } else { opposite(under) };
        let slots = [under_in, s[under_in], s[s[under_in]], s[s[s[under_in]]]];
        let sign = if incoming[slots[3]] { Sign::Positive } else { Sign::Negative };
        crossings.push(Crossing::new(slots.map(|d| label[d]), sign));
    }
    LinkDiagram::new(crossings, 0).expect("map is spherical")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::{canonical_code, is_transitive_diagram, BraidWord};
    use crate::planarmap::{
        cycle_map, double_all_edges, double_edge_orbit, double_edges, edge_orbits, platonic, prism_map,
        prism_spokes, truncate,
    };

    #[test]
    fn doubled_triangle_gives_trefoil() {
        let m = double_all_edges(&cycle_map(3).unwrap());
        let d = from_map_with_seed(&m, 0, SeedPair::First).unwrap();
        let t = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure();
        let code = canonical_code(&d);
        assert!(code == canonical_code(&t) || code == canonical_code(&t.mirror()));
        assert!(is_transitive_diagram(&d).unwrap());
    }

    #[test]
    fn octahedron_rejected() {
        let o = platonic("octahedron").unwrap();
        assert!(matches!(from_map_with_seed(&o, 0, SeedPair::First), Err(Error::EdgeTransitiveInput)));
        assert!(matches!(
            from_map_with_seed(&platonic("cube").unwrap(), 0, SeedPair::First),
            Err(Error::NotFourRegular)
        ));
    }

    #[test]
    fn doubled_truncated_tetrahedron() {
        let t = truncate(&platonic("tetrahedron").unwrap());
        let hex = edge_orbits(&t).unwrap().into_iter().find(|o| o.len() == 6).unwrap();
        let m = double_edge_orbit(&t, &hex).unwrap();
        let d = from_map_with_seed(&m, 0, SeedPair::First).unwrap();
        assert_eq!(d.num_crossings(), 12);
        assert!(is_transitive_diagram(&d).unwrap());
    }

    #[test]
    fn doubled_prisms() {
        for k in 3..6 {
            let m = double_edges(&prism_map(k).unwrap(), &prism_spokes(k));
            for pair in [SeedPair::First, SeedPair::Second] {
                let d = from_map_with_seed(&m, 0, pair).unwrap();
                assert_eq!(d.num_crossings(), 2 * k);
                assert!(is_transitive_diagram(&d).unwrap());
            }
        }
    }

    #[test]
    fn assignment_round_trip() {
        let m = double_all_edges(&cycle_map(4).unwrap());
        let d = diagram_from_assignment(&m, &[false; 4]);
        assert_eq!(d.num_crossings(), 4);
        assert_eq!(d.underlying_map().num_faces(), m.num_faces());
    }
}
