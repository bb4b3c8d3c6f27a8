//! The specialized HOMFLY polynomials `P_n` computed from the skein axioms,
//! and an independent Kauffman-bracket evaluation of `P_2`.

mod bracket;
mod homfly;

pub use bracket::{jones_via_bracket, jones_via_bracket_with_budget, BRACKET_BUDGET};
pub use homfly::{homfly_pn, resolve_crossing, SkeinEngine, SkeinTriple, Traversal, DEFAULT_CROSSING_BUDGET};
