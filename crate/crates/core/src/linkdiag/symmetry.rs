use serde::Serialize;

use super::diagram::LinkDiagram;
use crate::error::Result;
use crate::planarmap::{map_automorphisms_with_budget, Chirality, MapAutomorphism, SearchBudget};

/// How a symmetry treats the over/under layers at the crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayerAction {
    /// Over-strands go to over-strands.
    Keep,
    /// Over-strands go to under-strands at every crossing.
    Swap,
}

/// An automorphism of the crossing graph that carries the diagram to itself
/// as a subset of the 3-sphere.
///
/// A sphere-preserving map automorphism that keeps layers is a rotation; one
/// that swaps layers is a rotation composed with the reflection through the
/// projection sphere. Sphere-reversing automorphisms behave dually, so the
/// ambient orientation is preserved exactly when the two flags agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramSymmetry {
    pub map_auto: MapAutomorphism,
    pub layers: LayerAction,
    /// `crossing_action[k]` is the image of crossing `k`.
    pub crossing_action: Vec<usize>,
}

impl DiagramSymmetry {
    pub fn preserves_ambient_orientation(&self) -> bool {
        (self.map_auto.chirality == Chirality::Preserving) == (self.layers == LayerAction::Keep)
    }

    pub fn compose(&self, other: &DiagramSymmetry) -> DiagramSymmetry {
        DiagramSymmetry {
            map_auto: self.map_auto.compose(&other.map_auto),
            layers: if self.layers == other.layers { LayerAction::Keep } else { LayerAction::Swap },
            crossing_action: other.crossing_action.iter().map(|&k| self.crossing_action[k]).collect(),
        }
    }
}

fn layer_action(d: &LinkDiagram, a: &MapAutomorphism) -> Option<LayerAction> {
    let mut action = None;
    for k in 0..d.num_crossings() {
        let over = LinkDiagram::is_over_dart(4 * k + 1);
        let image_over = LinkDiagram::is_over_dart(a.dart_perm[4 * k + 1]);
        let here = if over == image_over { LayerAction::Keep } else { LayerAction::Swap };
        match action {
            None => action = Some(here),
            Some(x) if x != here => return None,
            _ => {}
        }
    }
    Some(action.unwrap_or(LayerAction::Keep))
}

pub fn diagram_symmetries(d: &LinkDiagram) -> Result<Vec<DiagramSymmetry>> {
    diagram_symmetries_with_budget(d, SearchBudget::default())
}

/// All map automorphisms of the crossing graph compatible with the crossing
/// data, identity first. Free circles are ignored.
pub fn diagram_symmetries_with_budget(d: &LinkDiagram, budget: SearchBudget) -> Result<Vec<DiagramSymmetry>> {
    let m = d.underlying_map();
    let group = map_automorphisms_with_budget(&m, budget)?;
    Ok(group
        .into_iter()
        .filter_map(|a| {
            let layers = layer_action(d, &a)?;
            let crossing_action = (0..d.num_crossings()).map(|k| a.dart_perm[4 * k] / 4).collect();
            Some(DiagramSymmetry {
                map_auto: a,
                layers,
                crossing_action,
            })
        })
        .collect())
}

/// Crossing orbits under a set of symmetries, sorted.
pub fn crossing_orbits(num_crossings: usize, group: &[DiagramSymmetry]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; num_crossings];
    let mut out = Vec::new();
    for k in 0..num_crossings {
        if seen[k] {
            continue;
        }
        let mut orbit: Vec<usize> = group.iter().map(|g| g.crossing_action[k]).collect();
        orbit.push(k);
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            seen[x] = true;
        }
        out.push(orbit);
    }
    out
}

pub fn is_transitive_diagram(d: &LinkDiagram) -> Result<bool> {
    is_transitive_diagram_with_budget(d, SearchBudget::default())
}

pub fn is_transitive_diagram_with_budget(d: &LinkDiagram, budget: SearchBudget) -> Result<bool> {
    let g = diagram_symmetries_with_budget(d, budget)?;
    Ok(crossing_orbits(d.num_crossings(), &g).len() <= 1)
}

pub fn is_positive_transitive_diagram(d: &LinkDiagram) -> Result<bool> {
    is_positive_transitive_diagram_with_budget(d, SearchBudget::default())
}

pub fn is_positive_transitive_diagram_with_budget(d: &LinkDiagram, budget: SearchBudget) -> Result<bool> {
    let g: Vec<DiagramSymmetry> = diagram_symmetries_with_budget(d, budget)?
        .into_iter()
        .filter(DiagramSymmetry::preserves_ambient_orientation)
        .collect();
    Ok(crossing_orbits(d.num_crossings(), &g).len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::BraidWord;

    fn cl(strands: usize, letters: &[i32]) -> LinkDiagram {
        BraidWord::new(strands, letters.to_vec()).unwrap().closure()
    }

    fn order(g: &DiagramSymmetry) -> usize {
        g.map_auto.order()
    }

    #[test]
    fn trefoil_has_threefold_rotation() {
        let g = diagram_symmetries(&cl(2, &[1, 1, 1])).unwrap();
        assert!(g.iter().any(|s| order(s) == 3 && s.preserves_ambient_orientation()));
        assert!(is_transitive_diagram(&cl(2, &[1, 1, 1])).unwrap());
        assert!(is_positive_transitive_diagram(&cl(2, &[1, 1, 1])).unwrap());
    }

    #[test]
    fn figure_eight() {
        let f8 = cl(3, &[1, -2, 1, -2]);
        let g = diagram_symmetries(&f8).unwrap();
        assert!(g.iter().any(|s| order(s) == 4 && !s.preserves_ambient_orientation()));
        assert!(is_transitive_diagram(&f8).unwrap());
        assert!(!is_positive_transitive_diagram(&f8).unwrap());
    }

    #[test]
    fn group_is_closed() {
        for d in [cl(3, &[1, -2, 1, -2]), cl(2, &[1, 1, 1, 1]), cl(3, &[1, 1, 2, 2])] {
            let g = diagram_symmetries(&d).unwrap();
            assert!(g[0].map_auto.is_identity());
            for a in &g {
                for b in &g {
                    let c = a.compose(b);
                    assert!(g.iter().any(|x| x.map_auto.dart_perm == c.map_auto.dart_perm && x.layers == c.layers));
                }
            }
        }
    }

    #[test]
    fn hopf_chain() {
        // a half turn about the axis through the chain exchanges the two
        // crossings of each clasp and preserves the ambient orientation
        let chain = cl(3, &[1, 1, 2, 2]);
        assert!(is_positive_transitive_diagram(&chain).unwrap());
        assert!(!is_transitive_diagram(&cl(3, &[1, 1, 1, 2])).unwrap());
    }

    #[test]
    fn crossingless_diagrams() {
        assert!(is_transitive_diagram(&LinkDiagram::unknot()).unwrap());
        assert_eq!(diagram_symmetries(&LinkDiagram::unknot()).unwrap().len(), 1);
    }
}
