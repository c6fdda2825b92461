//! Flagged complete homogeneous polynomials, key polynomials and atoms,
//! flagged RSK, Kohnert diagrams, snake tabloids and Pieri chains, all in
//! exact integer arithmetic.

pub mod bases;
pub mod combinat;
pub mod diagram;
pub mod error;
pub mod fillings;
pub mod frsk;
pub mod kohnert;
pub mod poly;
pub mod reference;
pub mod render;
pub mod schubert;
pub mod snakes;
pub mod verify;

pub use combinat::{Partition, Permutation, WeakComposition};
pub use diagram::{Cell, Diagram, KeyDiagram};
pub use error::{Error, Result};
pub use fillings::{Filling, Flavor};
pub use poly::SparsePolynomial;
