//! Exact decompositions of Foulkes characters `φ^(a^b)` into irreducible
//! characters of `S_ab`, and machine checks of their vanishing rules.
//!
//! ```
//! use foulkes::foulkes::{decompose, multiplicity, FoulkesShape};
//!
//! # fn main() -> foulkes::Result<()> {
//! let s = FoulkesShape::new(2, 3)?;
//! let table = decompose(s, None);
//! let rows: Vec<String> = table.entries().map(|(l, m)| format!("{l}:{m}")).collect();
//! assert_eq!(rows, ["6:1", "4,2:1", "2,2,2:1"]);
//! assert_eq!(multiplicity(s, &"5,1".parse()?)?, 0u32.into());
//! # Ok(())
//! # }
//! ```

pub mod cache;
pub mod characters;
pub mod cli;
pub mod control;
pub mod error;
pub mod foulkes;
pub mod oracle;
pub mod partitions;
pub mod schur;
pub mod symfunc;
pub mod theorems;

pub use error::{Error, Result};
