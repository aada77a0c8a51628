//! Ground-truth engines: isomorph-free enumeration, exact Turán numbers by
//! exhaustive search, chromatic number and decomposition families.

mod chromatic;
mod decomposition;
mod enumerate;
mod extremal;

pub use chromatic::{chromatic_number, CHROMATIC_ORDER_CAP};
pub use decomposition::{decomposition_family, plant_in_host, DecompositionFamily};
pub use enumerate::{enumerate_graphs, EnumerationStream, ENUMERATION_ORDER_CAP};
pub use extremal::{extremal_number, ExtremalResult, ExtremalSearch, PartialExtremal};
