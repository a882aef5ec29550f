//! Small certificates for large polynomial systems, found by randomized sampling
//! over violator spaces with exact Groebner-basis primitives.
//!
//! Any problem that fits [`violator::ViolatorSpace`] can use the sampler:
//!
//! ```
//! use hellyspace::violator::{clarkson, ClarksonConfig, ViolatorOracle, ViolatorSpace};
//!
//! struct Hull(Vec<i64>);
//!
//! impl ViolatorSpace for Hull {
//!     fn ground_size(&self) -> usize {
//!         self.0.len()
//!     }
//!     fn violates(&self, basis: &[usize], h: usize) -> bool {
//!         let xs = basis.iter().map(|&i| self.0[i]);
//!         match (xs.clone().min(), xs.max()) {
//!             (Some(lo), Some(hi)) => !(lo..=hi).contains(&self.0[h]),
//!             _ => true,
//!         }
//!     }
//!     fn is_monotone(&self) -> bool {
//!         true
//!     }
//! }
//!
//! let oracle = ViolatorOracle::new(Hull(vec![5, -3, 8, 1, 0]));
//! let out = clarkson(&[0, 1, 2, 3, 4], 2, &oracle, &ClarksonConfig::new(0))?;
//! assert_eq!(out.basis, vec![1, 2]);
//! # Ok::<(), hellyspace::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod spaces;
pub mod violator;

pub use error::{Error, Result};
