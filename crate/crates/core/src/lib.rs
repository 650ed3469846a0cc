#![no_std]
#![allow(clippy::needless_range_loop)]
extern crate alloc;

pub mod error;
pub mod examples;
pub mod graph;
pub mod model;
pub mod problems;
pub mod rules;
pub mod solvers;
pub mod symbolic;

pub use error::{Error, Result};
