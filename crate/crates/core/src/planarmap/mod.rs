//! Dart-based combinatorial maps of planar multigraphs: constructors for the
//! vertex-transitive families, truncation, medial and edge-orbit doubling,
//! and brute-force automorphism groups with orbit computations.

mod auto;
mod build;
mod map;
mod ops;

pub use auto::{
    edge_orbits, edge_orbits_under, edge_orbits_with_budget, is_edge_transitive,
    is_edge_transitive_with_budget, is_vertex_transitive, is_vertex_transitive_with_budget,
    map_automorphisms, map_automorphisms_with_budget, vertex_orbits, vertex_orbits_under,
    Chirality, MapAutomorphism, SearchBudget,
};
pub use build::{antiprism_map, bouquet_map, cycle_map, dipole_map, platonic, prism_map, prism_spokes};
pub use map::CombinatorialMap;
pub use ops::{
    double_all_edges, double_edge_orbit, double_edge_orbit_with_budget, double_edges, dual, medial,
    truncate,
};
