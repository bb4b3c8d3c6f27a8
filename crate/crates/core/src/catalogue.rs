//! The catalogue of transitive link diagrams: torus links on two strands,
//! chains from doubled prisms, antiprism closures and the eight Archimedean
//! links, each verified crossing-transitive before it is emitted.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linkdiag::{
    from_map_with_seed_budget, is_transitive_diagram_with_budget, symmetric_crossing_assignment,
    diagram_from_assignment, BraidWord, LinkDiagram, SeedPair,
};
use crate::planarmap::{
    double_edge_orbit_with_budget, double_edges, medial, platonic, prism_map, prism_spokes, truncate,
    CombinatorialMap, SearchBudget,
};
use crate::skein::DEFAULT_CROSSING_BUDGET;

/// Large enough for the 60-crossing maps (240 darts).
pub const CATALOGUE_BUDGET: SearchBudget = SearchBudget { max_darts: 256 };

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    TorusOdd,
    TorusEven,
    Chain,
    AntiprismClosure,
    Archimedean,
    /// The two-component unlink obtained from the dipole by a reflection.
    Degenerate,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogueEntry {
    pub family: Family,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<usize>,
    pub crossings: usize,
    pub components: usize,
    /// Whether `P_n` is within the default skein budget.
    pub evaluable: bool,
    pub mirror: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    pub diagram: LinkDiagram,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Archimedean {
    TruncatedTetrahedron,
    Cuboctahedron,
    TruncatedOctahedron,
    TruncatedCube,
    Rhombicuboctahedron,
    TruncatedIcosahedron,
    TruncatedDodecahedron,
    Rhombicosidodecahedron,
}

impl Archimedean {
    pub const ALL: [Archimedean; 8] = [
        Archimedean::TruncatedTetrahedron,
        Archimedean::Cuboctahedron,
        Archimedean::TruncatedOctahedron,
        Archimedean::TruncatedCube,
        Archimedean::Rhombicuboctahedron,
        Archimedean::TruncatedIcosahedron,
        Archimedean::TruncatedDodecahedron,
        Archimedean::Rhombicosidodecahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Archimedean::TruncatedTetrahedron => "truncated-tetrahedron",
            Archimedean::Cuboctahedron => "cuboctahedron",
            Archimedean::TruncatedOctahedron => "truncated-octahedron",
            Archimedean::TruncatedCube => "truncated-cube",
            Archimedean::Rhombicuboctahedron => "rhombicuboctahedron",
            Archimedean::TruncatedIcosahedron => "truncated-icosahedron",
            Archimedean::TruncatedDodecahedron => "truncated-dodecahedron",
            Archimedean::Rhombicosidodecahedron => "rhombicosidodecahedron",
        }
    }

    pub fn from_name(s: &str) -> Option<Archimedean> {
        Self::ALL.iter().copied().find(|a| a.name() == s)
    }

    pub fn crossings(self) -> usize {
        match self {
            Archimedean::TruncatedTetrahedron | Archimedean::Cuboctahedron => 12,
            Archimedean::TruncatedOctahedron | Archimedean::TruncatedCube | Archimedean::Rhombicuboctahedron => 24,
            _ => 60,
        }
    }

    /// The solid's own graph (3- or 4-regular).
    pub fn solid(self) -> CombinatorialMap {
        let p = |name| platonic(name).expect("known solid");
        match self {
            Archimedean::TruncatedTetrahedron => truncate(&p("tetrahedron")),
            Archimedean::Cuboctahedron => medial(&p("cube")),
            Archimedean::TruncatedOctahedron => truncate(&p("octahedron")),
            Archimedean::TruncatedCube => truncate(&p("cube")),
            Archimedean::Rhombicuboctahedron => medial(&medial(&p("cube"))),
            Archimedean::TruncatedIcosahedron => truncate(&p("icosahedron")),
            Archimedean::TruncatedDodecahedron => truncate(&p("dodecahedron")),
            Archimedean::Rhombicosidodecahedron => medial(&medial(&p("dodecahedron"))),
        }
    }

    /// The 4-regular projection: truncations have the edges of the original
    /// solid doubled (darts `3d` of [`truncate`]).
    pub fn projection(self) -> Result<CombinatorialMap> {
        let solid = self.solid();
        if solid.is_regular(4) {
            return Ok(solid);
        }
        let old_edges: Vec<usize> = (0..solid.num_darts()).step_by(3).collect();
        double_edge_orbit_with_budget(&solid, &old_edges, CATALOGUE_BUDGET)
    }

    pub fn diagram(self) -> Result<LinkDiagram> {
        let m = self.projection()?;
        if self == Archimedean::Cuboctahedron {
            // edge-transitive, so built without the gate
            let x = symmetric_crossing_assignment(&m, 0, SeedPair::First, CATALOGUE_BUDGET)?;
            return Ok(diagram_from_assignment(&m, &x));
        }
        from_map_with_seed_budget(&m, 0, SeedPair::First, CATALOGUE_BUDGET)
    }
}

pub fn torus_diagram(k: usize) -> LinkDiagram {
    BraidWord::new(2, vec![1; k]).expect("valid word").closure()
}

/// `Ch_n`: the prism on `2n` vertices with its spokes doubled.
pub fn chain_diagram(n: usize) -> Result<LinkDiagram> {
    let m = double_edges(&prism_map(n)?, &prism_spokes(n));
    from_map_with_seed_budget(&m, 0, SeedPair::First, CATALOGUE_BUDGET)
}

pub fn antiprism_closure(n: usize) -> LinkDiagram {
    BraidWord::new(3, [1, -2].repeat(n)).expect("valid word").closure()
}

fn entry(family: Family, name: String, parameter: Option<usize>, diagram: LinkDiagram) -> CatalogueEntry {
    CatalogueEntry {
        family,
        name,
        parameter,
        crossings: diagram.num_crossings(),
        components: diagram.components(),
        evaluable: diagram.num_crossings() <= DEFAULT_CROSSING_BUDGET,
        mirror: false,
        note: None,
        diagram,
    }
}

/// All catalogue entries with at most `max_crossings` crossings, ordered by
/// crossing count and then family. Every entry is checked with
/// [`is_transitive_diagram_with_budget`].
pub fn enumerate_catalogue(max_crossings: usize) -> Result<Vec<CatalogueEntry>> {
    enumerate_catalogue_with(max_crossings, false)
}

/// As [`enumerate_catalogue`], optionally followed by each entry's mirror image.
pub fn enumerate_catalogue_with(max_crossings: usize, mirrors: bool) -> Result<Vec<CatalogueEntry>> {
    let mut out = Vec::new();
    for k in 1..=max_crossings {
        let (family, name) = if k % 2 == 1 {
            (Family::TorusOdd, format!("{}_1", k))
        } else {
            (Family::TorusEven, format!("{}_1^2", k))
        };
        let mut e = entry(family, name, Some(k / 2), torus_diagram(k));
        e.note = match k {
            1 => Some("degenerate: bouquet of two circles"),
            2 => Some("degenerate: dipole D4 with a rotation"),
            _ => None,
        };
        out.push(e);
    }
    if max_crossings >= 2 {
        let unlink = BraidWord::new(2, vec![1, -1]).expect("valid word").closure();
        let mut e = entry(Family::Degenerate, "2-unlink".into(), None, unlink);
        e.note = Some("degenerate: dipole D4 with a reflection");
        out.push(e);
    }
    for n in 3..=max_crossings / 2 {
        out.push(entry(Family::Chain, format!("Ch_{}", n), Some(n), chain_diagram(n)?));
    }
    for n in 2..=max_crossings / 2 {
        out.push(entry(
            Family::AntiprismClosure,
            format!("closure((s1 s2^-1)^{})", n),
            Some(n),
            antiprism_closure(n),
        ));
    }
    for a in Archimedean::ALL {
        if a.crossings() <= max_crossings {
            out.push(entry(Family::Archimedean, a.name().into(), None, a.diagram()?));
        }
    }
    for e in &out {
        debug_assert_eq!(e.crossings, e.diagram.underlying_map().num_vertices());
        if !is_transitive_diagram_with_budget(&e.diagram, CATALOGUE_BUDGET)? {
            return Err(Error::InvalidDiagram(format!("catalogue entry {} is not crossing-transitive", e.name)));
        }
    }
    out.sort_by_key(|e| (e.crossings, e.family));
    if mirrors {
        out = out
            .into_iter()
            .flat_map(|e| {
                let mut m = e.clone();
                m.diagram = e.diagram.mirror();
                m.mirror = true;
                [e, m]
            })
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census() {
        let c = enumerate_catalogue(4).unwrap();
        let got: Vec<(usize, Family)> = c.iter().map(|e| (e.crossings, e.family)).collect();
        assert_eq!(
            got,
            vec![
                (1, Family::TorusOdd),
                (2, Family::TorusEven),
                (2, Family::Degenerate),
                (3, Family::TorusOdd),
                (4, Family::TorusEven),
                (4, Family::AntiprismClosure),
            ]
        );
        let comps: Vec<usize> = c.iter().map(|e| e.components).collect();
        assert_eq!(comps, vec![1, 2, 2, 1, 2, 1]);
    }

    #[test]
    fn twelve_crossing_archimedean() {
        for a in [Archimedean::TruncatedTetrahedron, Archimedean::Cuboctahedron] {
            let d = a.diagram().unwrap();
            assert_eq!(d.num_crossings(), 12);
            assert!(is_transitive_diagram_with_budget(&d, CATALOGUE_BUDGET).unwrap());
        }
    }

    #[test]
    fn chains_have_twice_n_crossings() {
        for n in 3..7 {
            assert_eq!(chain_diagram(n).unwrap().num_crossings(), 2 * n);
        }
    }

    #[test]
    fn mirrors_double_the_list() {
        let c = enumerate_catalogue_with(3, true).unwrap();
        assert_eq!(c.len(), 8);
        assert!(c[1].mirror && c[1].diagram.writhe() == -c[0].diagram.writhe());
    }

    #[test]
    fn names_round_trip() {
        for a in Archimedean::ALL {
            assert_eq!(Archimedean::from_name(a.name()), Some(a));
        }
    }
}
