//! Oriented link diagrams in PD form, braid closures, canonical codes,
//! diagram symmetry groups and transitive diagrams grown from 4-regular maps.

mod braid;
mod canonical;
mod diagram;
mod gauss;
mod seed;
mod symmetry;

pub use braid::{closure, parse_letters, BraidWord};
pub use canonical::{canonical_code, canonical_form, CanonicalForm};
pub use diagram::{Crossing, LinkDiagram, Sign};
pub use gauss::GaussCode;
pub use seed::{
    diagram_from_assignment, from_map_with_seed, from_map_with_seed_budget, symmetric_crossing_assignment,
    SeedPair,
};
pub use symmetry::{
    crossing_orbits, diagram_symmetries, diagram_symmetries_with_budget, is_positive_transitive_diagram,
    is_positive_transitive_diagram_with_budget, is_transitive_diagram, is_transitive_diagram_with_budget,
    DiagramSymmetry, LayerAction,
};
