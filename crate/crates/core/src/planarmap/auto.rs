use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::CombinatorialMap;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Chirality {
    /// Conjugates `sigma` to itself.
    Preserving,
    /// Conjugates `sigma` to `sigma⁻¹` (a reflection of the sphere).
    Reversing,
}

impl Chirality {
    pub fn compose(self, other: Chirality) -> Chirality {
        if self == other {
            Chirality::Preserving
        } else {
            Chirality::Reversing
        }
    }
}

/// A dart permutation commuting with `alpha` and conjugating `sigma` to
/// `sigma` or `sigma⁻¹` according to its chirality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MapAutomorphism {
    pub dart_perm: Vec<usize>,
    pub chirality: Chirality,
}

impl MapAutomorphism {
    pub fn identity(num_darts: usize) -> Self {
        Self {
            dart_perm: (0..num_darts).collect(),
            chirality: Chirality::Preserving,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MapAutomorphism) -> MapAutomorphism {
        MapAutomorphism {
            dart_perm: other.dart_perm.iter().map(|&d| self.dart_perm[d]).collect(),
            chirality: self.chirality.compose(other.chirality),
        }
    }

    pub fn inverse(&self) -> MapAutomorphism {
        let mut inv = vec![0; self.dart_perm.len()];
        for (d, &x) in self.dart_perm.iter().enumerate() {
            inv[x] = d;
        }
        MapAutomorphism {
            dart_perm: inv,
            chirality: self.chirality,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.chirality == Chirality::Preserving
            && self.dart_perm.iter().enumerate().all(|(d, &x)| d == x)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut g = self.clone();
        while !g.is_identity() {
            g = self.compose(&g);
            k += 1;
        }
        k
    }

    /// Checks the defining relations against `m`.
    pub fn is_automorphism_of(&self, m: &CombinatorialMap) -> bool {
        let p = &self.dart_perm;
        if p.len() != m.num_darts() {
            return false;
        }
        let target = match self.chirality {
            Chirality::Preserving => m.sigma(),
            Chirality::Reversing => m.sigma_inv(),
        };
        (0..p.len()).all(|d| p[m.alpha()[d]] == m.alpha()[p[d]] && p[m.sigma()[d]] == target[p[d]])
    }
}

/// Upper bound on map size for the brute-force searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_darts: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_darts: 200 }
    }
}

impl SearchBudget {
    pub fn new(max_darts: usize) -> Self {
        Self { max_darts }
    }

    pub(crate) fn check(&self, m: &CombinatorialMap) -> Result<()> {
        if m.num_darts() > self.max_darts {
            return Err(Error::BudgetExceeded {
                what: "dart count",
                size: m.num_darts(),
                limit: self.max_darts,
            });
        }
        Ok(())
    }
}

/// Try to extend `root ↦ image` to an automorphism of a connected map.
fn extend(m: &CombinatorialMap, root: usize, image: usize, chirality: Chirality) -> Option<MapAutomorphism> {
    let n = m.num_darts();
    let target = match chirality {
        Chirality::Preserving => m.sigma(),
        Chirality::Reversing => m.sigma_inv(),
    };
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    perm[root] = image;
    used[image] = true;
    let mut stack = vec![root];
    while let Some(d) = stack.pop() {
        let fd = perm[d];
        for (nd, nf) in [(m.alpha()[d], m.alpha()[fd]), (m.sigma()[d], target[fd])] {
            if perm[nd] == usize::MAX {
                if used[nf] {
                    return None;
                }
                perm[nd] = nf;
                used[nf] = true;
                stack.push(nd);
            } else if perm[nd] != nf {
                return None;
            }
        }
    }
    Some(MapAutomorphism {
        dart_perm: perm,
        chirality,
    })
}

/// All automorphisms of a connected map (both chiralities), identity first.
///
/// Each automorphism is determined by the image of dart 0, so the search
/// tries every `(image, chirality)` pair. When every vertex has degree at
/// most 2, `sigma` is an involution and a dart permutation satisfies both
/// chiralities; it is listed once, as preserving.
pub fn map_automorphisms(m: &CombinatorialMap) -> Result<Vec<MapAutomorphism>> {
    map_automorphisms_with_budget(m, SearchBudget::default())
}

pub fn map_automorphisms_with_budget(m: &CombinatorialMap, budget: SearchBudget) -> Result<Vec<MapAutomorphism>> {
    budget.check(m)?;
    if m.num_darts() == 0 {
        return Ok(vec![MapAutomorphism::identity(0)]);
    }
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for chirality in [Chirality::Preserving, Chirality::Reversing] {
        for image in 0..m.num_darts() {
            if let Some(a) = extend(m, 0, image, chirality) {
                if seen.insert(a.dart_perm.clone()) {
                    out.push(a);
                }
            }
        }
    }
    Ok(out)
}

fn orbits_from(n: usize, group: &[MapAutomorphism], map_item: impl Fn(&MapAutomorphism, usize) -> usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit: Vec<usize> = group.iter().map(|g| map_item(g, start)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            seen[x] = true;
        }
        out.push(orbit);
    }
    out
}

/// Vertex orbits of a group acting on `m`; vertices are indexed as in [`CombinatorialMap::vertex_of`].
pub fn vertex_orbits_under(m: &CombinatorialMap, group: &[MapAutomorphism]) -> Vec<Vec<usize>> {
    let reps: Vec<usize> = m.vertices().iter().map(|c| c[0]).collect();
    orbits_from(m.num_vertices(), group, |g, v| m.vertex_of(g.dart_perm[reps[v]]))
}

/// Edge orbits of a group acting on `m`, edges named by their smaller dart.
pub fn edge_orbits_under(m: &CombinatorialMap, group: &[MapAutomorphism]) -> Vec<Vec<usize>> {
    let edges = m.edges();
    let index_of = |rep: usize| edges.binary_search(&rep).unwrap();
    orbits_from(edges.len(), group, |g, e| index_of(m.edge_rep(g.dart_perm[edges[e]])))
        .into_iter()
        .map(|o| {
            let mut reps: Vec<usize> = o.into_iter().map(|e| edges[e]).collect();
            reps.sort_unstable();
            reps
        })
        .collect()
}

pub fn vertex_orbits(m: &CombinatorialMap) -> Result<Vec<Vec<usize>>> {
    Ok(vertex_orbits_under(m, &map_automorphisms(m)?))
}

pub fn edge_orbits(m: &CombinatorialMap) -> Result<Vec<Vec<usize>>> {
    edge_orbits_with_budget(m, SearchBudget::default())
}

pub fn edge_orbits_with_budget(m: &CombinatorialMap, budget: SearchBudget) -> Result<Vec<Vec<usize>>> {
    Ok(edge_orbits_under(m, &map_automorphisms_with_budget(m, budget)?))
}

pub fn is_vertex_transitive(m: &CombinatorialMap) -> Result<bool> {
    is_vertex_transitive_with_budget(m, SearchBudget::default())
}

pub fn is_vertex_transitive_with_budget(m: &CombinatorialMap, budget: SearchBudget) -> Result<bool> {
    let g = map_automorphisms_with_budget(m, budget)?;
    Ok(vertex_orbits_under(m, &g).len() <= 1)
}

pub fn is_edge_transitive(m: &CombinatorialMap) -> Result<bool> {
    is_edge_transitive_with_budget(m, SearchBudget::default())
}

pub fn is_edge_transitive_with_budget(m: &CombinatorialMap, budget: SearchBudget) -> Result<bool> {
    Ok(edge_orbits_with_budget(m, budget)?.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarmap::{cycle_map, dipole_map, platonic, truncate};

    #[test]
    fn small_group_orders() {
        assert_eq!(map_automorphisms(&platonic("tetrahedron").unwrap()).unwrap().len(), 24);
        assert_eq!(map_automorphisms(&platonic("cube").unwrap()).unwrap().len(), 48);
        assert_eq!(map_automorphisms(&cycle_map(5).unwrap()).unwrap().len(), 10);
    }

    #[test]
    fn identity_comes_first() {
        let g = map_automorphisms(&platonic("octahedron").unwrap()).unwrap();
        assert!(g[0].is_identity());
        assert!(g.iter().all(|a| a.is_automorphism_of(&platonic("octahedron").unwrap())));
    }

    #[test]
    fn octahedron_transitivity() {
        let o = platonic("octahedron").unwrap();
        assert!(is_vertex_transitive(&o).unwrap());
        assert!(is_edge_transitive(&o).unwrap());
    }

    #[test]
    fn truncated_tetrahedron_edge_orbits() {
        let t = truncate(&platonic("tetrahedron").unwrap());
        let mut sizes: Vec<usize> = edge_orbits(&t).unwrap().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![6, 12]);
        assert!(is_vertex_transitive(&t).unwrap());
        assert!(!is_edge_transitive(&t).unwrap());
    }

    #[test]
    fn dipole_is_vertex_transitive() {
        assert!(is_vertex_transitive(&dipole_map(4).unwrap()).unwrap());
    }

    #[test]
    fn budget_enforced() {
        let big = truncate(&platonic("icosahedron").unwrap());
        assert!(matches!(
            map_automorphisms_with_budget(&big, SearchBudget::new(100)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
