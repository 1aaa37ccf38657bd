//! Command-line front end for the `metacyclic` crate, plus the plain-text
//! tuple format used for fixtures.

pub mod app;
pub mod fixtures;
