#![no_std]

extern crate alloc;

pub mod error;
pub mod field;
pub mod fixtures;
pub mod identities;
pub mod leonard;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod suite;
pub mod units;
