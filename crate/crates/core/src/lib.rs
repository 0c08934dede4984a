//! Root-system machinery for locating complex forms of quaternionic
//! symmetric spaces.
//!
//! The pipeline: build a [`RootSystem`](rootsys::RootSystem), grade it by the
//! highest root, take the centralizer of a toral involution, and test the
//! resulting `L/V` against the complex-form criteria. [`classify`] runs that
//! over every inner involution and diffs the result against the bundled
//! [`golden`] tables.

pub mod cases;
pub mod classify;
pub mod complexform;
pub mod error;
pub mod golden;
pub mod involution;
pub mod rootsys;
pub mod subsys;

pub use complexform::{analyze, ComplexFormAnalysis, ReportFormat, Verdict};
pub use error::{Error, Result};
pub use involution::{Basis, ToralElement};
pub use rootsys::{parse_type, Family, GradedDecomposition, Root, RootSystem, SimpleType};
pub use subsys::{CartanType, Subsystem};
