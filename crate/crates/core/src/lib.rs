//! Exact finite MV-topological spaces.
//!
//! Membership degrees live in the finite Łukasiewicz chain Ł_n, encoded as the
//! integers `0..=n`. Every space is materialized extensionally, so all
//! predicates (topology axioms, Hausdorff separation, zero-dimensionality,
//! compactness) are decided by exhaustive scans.
//!
//! The hot loops (subbase closure, cover enumeration, randomized suites) run
//! on rayon when the `parallel` feature is on; see [`Exec`].

pub mod chain;
pub mod covers;
mod error;
pub mod fuzzy;
pub mod gen;
pub mod maps;
pub mod oracle;
pub mod par;
pub mod product;
pub mod term;
pub mod topology;
pub mod verify;

pub use chain::{BinOp, Chain};
pub use covers::{CompactnessMode, CompactnessReport, CoverCertificate};
pub use error::{Error, Result};
pub use fuzzy::{Carrier, FuzzyFamily, FuzzySet, PointMap};
pub use par::Exec;
pub use product::ProductSpace;
pub use term::Term;
pub use topology::{MetricInstance, Settings, Topology};
