//! ridgelab: sampling algorithms, adversarial lower-bound constructions, and
//! entropy-number estimates for ridge function classes g(a·x) on the closed
//! Euclidean unit ball.

pub mod adversary;
pub mod algorithms;
pub mod classes;
pub mod geometry;
pub mod harness;

pub mod index;
mod poly;
mod real;

pub use real::Real;

/// f64 aliases for the most-used generic types.
pub type ClassSpec64 = classes::ClassSpec<f64>;
pub type Profile64 = classes::Profile<f64>;
pub type RidgeFunction64 = classes::RidgeFunction<f64>;
pub type Net64 = geometry::Net<f64>;
pub type NormSpec64 = geometry::NormSpec<f64>;
