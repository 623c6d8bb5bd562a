pub mod error;
pub mod harness;
pub mod hopf;
pub mod linalg;
pub mod poly;
pub mod repcat;
pub mod scalar;
pub mod blocks;
pub mod catalog;
pub mod cli;
