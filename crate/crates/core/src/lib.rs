//! Exact q-Stirling numbers and q-Eulerian polynomials for the symmetric,
//! hyperoctahedral, type D and colored permutation groups, plus a registry of
//! identities relating them that can be checked on finite grids.
//!
//! ```
//! use qstirling::identities::{verify, Params};
//! use qstirling::stirling::stirling_b;
//!
//! assert_eq!(stirling_b(2, 1).to_string(), "2 + q + q^2");
//! assert!(verify("thm-main-B", &Params::n(4)).unwrap().equal);
//! ```

pub mod groups;
pub mod identities;
pub mod partitions;
pub mod qpoly;
pub mod starred;
pub mod stirling;
