//! Test-only oracles that do not share code paths with the library's
//! fusion computation.
#![allow(dead_code)]

pub mod algebra;
pub mod corpus;
