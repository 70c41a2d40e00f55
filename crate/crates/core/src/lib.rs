//! Exact combinatorics of the tensor categories `T_{aleph_t}` of Mackey Lie
//! algebra representations.
//!
//! Everything here reduces to Littlewood-Richardson combinatorics on Young
//! diagrams: socle filtrations of indecomposable injectives, the graded index
//! poset with its defect/rank function, blocks, Hom-space dimensions, and the
//! t=0 Ext dimensions. The [`oracle`] module holds independent brute-force
//! implementations used to cross-check the closed formulas.

pub mod category;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod schur;

pub use error::Error;
pub use partitions::Partition;
pub use schur::SchurPolynomial;
