//! Robinson–Schensted cells of the symmetric group and the order they inherit
//! from the weak (Duflo) order.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`] — permutations in word form, inversion sets, the weak order;
//! * [`diagram`] — Young diagrams and the dominance order;
//! * [`tableau`] — Young tableaux with insertion, deletion and jeu de taquin;
//! * [`rs`] — the Robinson–Schensted correspondence and cells;
//! * [`engine`] — offspring sets by the row and column recursions, the induced order;
//! * [`oracle`] — brute-force ground truth over the whole symmetric group;
//! * [`suite`] — named property checks shared by the test suite and the CLI.

pub mod diagram;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod rs;
pub mod suite;
pub mod tableau;
pub mod words;

pub use diagram::{Diagram, DiagramChain};
pub use engine::{OffspringSet, TableauPoset};
pub use error::{Error, Result};
pub use rs::{Cell, RsPair};
pub use tableau::{Corner, Tableau};
pub use words::{Root, Word};
