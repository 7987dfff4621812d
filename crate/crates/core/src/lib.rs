//! Exact reconstruction of the character theory of the Weyl group of type
//! F4 and of the two labelling conventions in use for its irreducible
//! characters.

pub mod arith;
pub mod cli;
pub mod error;
pub mod f4chars;
pub mod hecke;
pub mod labels;
pub mod relative;
pub mod report;
pub mod rootsys;
pub mod weylgrp;

pub use error::{Error, Result};
