pub mod catalogue;
pub mod congruence;
pub mod error;
pub mod linkdiag;
pub mod planarmap;
pub mod qlaurent;
pub mod render;
pub mod skein;

pub use error::{Error, Result};
pub use linkdiag::{BraidWord, LinkDiagram};
pub use planarmap::CombinatorialMap;
pub use qlaurent::{IdealSpec, LaurentPoly};
