//! Rédei triple symbols, linked and Borromean prime enumeration, and the
//! density and effective-Chebotarev checks built on them.
//!
//! ```
//! use redei::redei::{admissible_pair, redei_symbol, TernarySolution};
//!
//! let pair = admissible_pair(5, 29).unwrap();
//! assert_eq!(pair.solution(), TernarySolution::new(7, 2, 1));
//! let value = redei_symbol(&pair, 109).unwrap();
//! assert_eq!(value, redei_symbol(&admissible_pair(29, 109).unwrap(), 5).unwrap());
//! ```

pub mod arith;
pub mod chebotarev;
pub mod cli;
pub mod density;
pub mod error;
pub mod redei;
pub mod report;

pub use error::{Error, Result};
