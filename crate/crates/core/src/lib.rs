//! Independence-number lower bounds for uniform linear triangle-free
//! hypergraphs, with a certified greedy extractor, an exact small-instance
//! solver and reproducible instance generators.
//!
//! ```
//! use hyperind::{bounds::theorem1_rhs, algorithms::{greedy_extract, ExtractOptions}, generators::loose_path};
//!
//! let h = loose_path(2, 3).unwrap();
//! let cert = greedy_extract(&h, 3, ExtractOptions::default()).unwrap();
//! assert!(cert.guaranteed);
//! assert!(cert.size() as f64 >= 29.0 / 9.0);
//! assert_eq!(theorem1_rhs(&h, 3).unwrap(), num_rational::BigRational::new(29.into(), 9.into()));
//! ```

pub mod algorithms;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod format;
pub mod generators;
pub mod hypergraph;
pub mod properties;
pub mod quadrature;

pub use error::{Error, Hypothesis, Result};
pub use hypergraph::{Hypergraph, Removal, SlotPartition, Vertex};
