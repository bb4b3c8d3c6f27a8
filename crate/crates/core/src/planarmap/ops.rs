use std::collections::BTreeSet;

use super::{edge_orbits_with_budget, CombinatorialMap, SearchBudget};
use crate::error::{Error, Result};

/// Dual map: vertices and faces exchange roles, darts are shared.
pub fn dual(m: &CombinatorialMap) -> CombinatorialMap {
    let sigma: Vec<usize> = (0..m.num_darts())
        .map(|d| m.sigma()[m.alpha()[d]])
        .collect();
    CombinatorialMap::new(m.alpha().to_vec(), sigma).expect("dual of a valid map")
}

/// Vertex truncation: each degree-`d` vertex becomes a `d`-cycle.
///
/// Dart `d` of the input becomes a new vertex carrying darts `3d` (along the
/// old edge), `3d + 1` (towards `sigma(d)`) and `3d + 2` (towards `sigma⁻¹(d)`).
pub fn truncate(m: &CombinatorialMap) -> CombinatorialMap {
    let n = m.num_darts();
    let mut alpha = vec![0; 3 * n];
    let mut sigma = vec![0; 3 * n];
    for d in 0..n {
        alpha[3 * d] = 3 * m.alpha()[d];
        alpha[3 * d + 1] = 3 * m.sigma()[d] + 2;
        alpha[3 * m.sigma()[d] + 2] = 3 * d + 1;
        sigma[3 * d] = 3 * d + 1;
        sigma[3 * d + 1] = 3 * d + 2;
        sigma[3 * d + 2] = 3 * d;
    }
    CombinatorialMap::new(alpha, sigma).expect("truncation of a valid map")
}

/// Medial map: one 4-valent vertex per edge, one edge per corner `(d, sigma(d))`.
///
/// Dart `d` of the input yields `2d` (the corner where `d` comes first) and
/// `2d + 1` (the corner where `d` comes second), both at the vertex of `d`'s edge.
pub fn medial(m: &CombinatorialMap) -> CombinatorialMap {
    let n = m.num_darts();
    let mut alpha = vec![0; 2 * n];
    let mut sigma = vec![0; 2 * n];
    for d in 0..n {
        let s = m.sigma()[d];
        alpha[2 * d] = 2 * s + 1;
        alpha[2 * s + 1] = 2 * d;
        sigma[2 * d] = 2 * d + 1;
        sigma[2 * d + 1] = 2 * m.alpha()[d];
    }
    CombinatorialMap::new(alpha, sigma).expect("medial of a valid map")
}

/// Replace every edge of one perfect-matching edge orbit of a 3-regular map
/// by a pair of parallel edges bounding a new digon face.
///
/// `orbit` lists edges by any of their darts. Original darts keep their
/// indices; the copy of edge `{d, e}` (with `d < e`) gets darts
/// `n + 2k` beside `d` and `n + 2k + 1` beside `e`.
pub fn double_edge_orbit(m: &CombinatorialMap, orbit: &[usize]) -> Result<CombinatorialMap> {
    double_edge_orbit_with_budget(m, orbit, SearchBudget::default())
}

pub fn double_edge_orbit_with_budget(
    m: &CombinatorialMap,
    orbit: &[usize],
    budget: SearchBudget,
) -> Result<CombinatorialMap> {
    if m.num_darts() == 0 || !m.is_regular(3) {
        return Err(Error::NotThreeRegular);
    }
    if orbit.iter().any(|&d| d >= m.num_darts()) {
        return Err(Error::NotPerfectMatchingOrbit);
    }
    let wanted: BTreeSet<usize> = orbit.iter().map(|&d| m.edge_rep(d)).collect();
    let orbits = edge_orbits_with_budget(m, budget)?;
    if !orbits
        .iter()
        .any(|o| o.iter().copied().collect::<BTreeSet<_>>() == wanted)
    {
        return Err(Error::NotPerfectMatchingOrbit);
    }
    let mut hits = vec![0usize; m.num_vertices()];
    for &d in &wanted {
        let (u, v) = (m.vertex_of(d), m.vertex_of(m.alpha()[d]));
        if u == v {
            return Err(Error::NotPerfectMatchingOrbit);
        }
        hits[u] += 1;
        hits[v] += 1;
    }
    if hits.iter().any(|&h| h != 1) {
        return Err(Error::NotPerfectMatchingOrbit);
    }

    Ok(double_edges(m, &wanted.into_iter().collect::<Vec<_>>()))
}

/// Replace each listed edge (named by any dart) by two parallel edges bounding
/// a digon, without any regularity or symmetry checks.
///
/// The copy of edge `{d, e}` (with `d < e`, listed `k`-th after sorting and
/// deduplication) gets darts `n + 2k` just after `d` and `n + 2k + 1` just
/// before `e` in the counterclockwise order.
pub fn double_edges(m: &CombinatorialMap, edges: &[usize]) -> CombinatorialMap {
    let mut reps: Vec<usize> = edges.iter().map(|&d| m.edge_rep(d)).collect();
    reps.sort_unstable();
    reps.dedup();
    let n = m.num_darts();
    let total = n + 2 * reps.len();
    let mut alpha: Vec<usize> = m.alpha().to_vec();
    alpha.resize(total, 0);
    let mut after = vec![usize::MAX; n];
    let mut before = vec![usize::MAX; n];
    for (k, &d) in reps.iter().enumerate() {
        let (dc, ec) = (n + 2 * k, n + 2 * k + 1);
        alpha[dc] = ec;
        alpha[ec] = dc;
        after[d] = dc;
        before[m.alpha()[d]] = ec;
    }
    let mut sigma = vec![0; total];
    for cycle in m.vertices() {
        let mut ring = Vec::with_capacity(2 * cycle.len());
        for &x in &cycle {
            if before[x] != usize::MAX {
                ring.push(before[x]);
            }
            ring.push(x);
            if after[x] != usize::MAX {
                ring.push(after[x]);
            }
        }
        for i in 0..ring.len() {
            sigma[ring[i]] = ring[(i + 1) % ring.len()];
        }
    }
    CombinatorialMap::new(alpha, sigma).expect("doubling keeps a valid map")
}

/// Every edge doubled.
pub fn double_all_edges(m: &CombinatorialMap) -> CombinatorialMap {
    double_edges(m, &m.edges())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarmap::{edge_orbits, platonic, prism_map};

    #[test]
    fn dual_swaps_counts() {
        let cube = platonic("cube").unwrap();
        let oct = dual(&cube);
        assert_eq!((oct.num_vertices(), oct.num_faces()), (6, 8));
        assert!(oct.is_regular(4));
    }

    #[test]
    fn truncations() {
        for (name, v) in [("tetrahedron", 12), ("cube", 24), ("octahedron", 24), ("icosahedron", 60), ("dodecahedron", 60)] {
            let t = truncate(&platonic(name).unwrap());
            assert_eq!(t.num_vertices(), v, "{}", name);
            assert_eq!(t.num_edges(), 3 * v / 2);
            assert!(t.is_regular(3) && t.is_spherical());
        }
        let tt = truncate(&platonic("tetrahedron").unwrap());
        assert_eq!(tt.face_vector(), vec![3, 3, 3, 3, 6, 6, 6, 6]);
    }

    #[test]
    fn medials() {
        let co = medial(&platonic("cube").unwrap());
        assert_eq!(co.num_vertices(), 12);
        assert!(co.is_regular(4) && co.is_spherical());
        assert_eq!(co.face_vector(), [vec![3; 8], vec![4; 6]].concat());
    }

    #[test]
    fn doubling_prism_spokes() {
        let p = prism_map(5).unwrap();
        let orbits = edge_orbits(&p).unwrap();
        let spokes = orbits.iter().find(|o| o.len() == 5).unwrap();
        let d = double_edge_orbit(&p, spokes).unwrap();
        assert_eq!(d.num_vertices(), 10);
        assert!(d.is_regular(4) && d.is_spherical());
        assert_eq!(d.face_vector().iter().filter(|&&f| f == 2).count(), 5);
        let rim = orbits.iter().find(|o| o.len() == 10).unwrap();
        assert!(matches!(double_edge_orbit(&p, rim), Err(Error::NotPerfectMatchingOrbit)));
        assert!(matches!(double_edge_orbit(&p, &spokes[..2]), Err(Error::NotPerfectMatchingOrbit)));
    }

    #[test]
    fn doubled_cycles_are_four_regular() {
        for k in 1..7 {
            let d = double_all_edges(&crate::planarmap::cycle_map(k).unwrap());
            assert_eq!((d.num_vertices(), d.num_edges()), (k, 2 * k));
            assert!(d.is_regular(4) && d.is_spherical(), "k = {}", k);
        }
    }

    #[test]
    fn doubling_needs_cubic_map() {
        let o = platonic("octahedron").unwrap();
        assert!(matches!(double_edge_orbit(&o, &[0]), Err(Error::NotThreeRegular)));
    }
}
