//! Commuting graphs of Rees matrix semigroups over finite groups.
//!
//! The crate builds finite groups and Rees matrix semigroups as explicit
//! multiplication tables, derives their commuting graphs, computes exact
//! graph invariants, and checks the structural theorems about these graphs
//! on concrete instances.

pub mod algebra;
pub mod commuting;
pub mod error;
pub mod graph;
pub mod limits;
pub mod rees;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
