//! Exact computation of discriminants and b-functions of prehomogeneous
//! determinants and linear free divisors.

pub mod bernstein;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
