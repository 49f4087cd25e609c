//! Exact interleaving distances between poset-valued persistence modules.
//!
//! Formigrams, dendrograms, rank functions, simplicial filtrations and
//! two-parameter clusterings are decomposed into join-irreducible parts, and
//! every distance between them is reduced to Hausdorff distances between
//! staircase-shaped upper sets of the interval poset (or of the plane).
//! All arithmetic is exact.
//!
//! ```
//! use interleave_core::{Formigram, GroundSet, Rat, SubPartition};
//!
//! let g = GroundSet::new(["x", "y"]).unwrap();
//! let merged = SubPartition::whole(&g);
//! let apart = SubPartition::discrete(&g);
//! let delta = Rat::new(3, 2);
//!
//! let theta = Formigram::constant(merged.clone());
//! let theta_prime = Formigram::new(
//!     &g,
//!     vec![-delta.clone(), delta.clone()],
//!     vec![merged.clone(), merged.clone(), apart, merged.clone(), merged],
//! )
//! .unwrap();
//! assert_eq!(theta.d_f(&theta_prime).unwrap(), delta);
//! ```

pub mod compare;
pub mod error;
pub mod filtration;
pub mod formigram;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod persistence;
pub mod rational;
pub mod staircase;
mod unionfind;

pub use compare::{Correspondence, GridClustering};
pub use error::{Error, ErrorKind, Result};
pub use filtration::{IntFiltration, RFiltration};
pub use formigram::{CosheafCode, CosheafTable, Dendrogram, Formigram, Metric, Ultrametric};
pub use lattice::{GroundSet, SubPartition, Surjection};
pub use persistence::{Bar, Barcode};
pub use rational::{Ext, ExtDist, Rat};
pub use staircase::{Ambient, Generator, Profile, Staircase};
