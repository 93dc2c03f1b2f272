//! Exact total domination polynomials: a brute-force enumeration oracle,
//! a vertex-reduction engine, closed forms and recurrences for several
//! cactus-style graph families, and audits comparing the published
//! formulas against enumeration.

pub mod audit;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod reduction;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use poly::Polynomial;
