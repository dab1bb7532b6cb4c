//! Tangle calculus, surface indices and relative framings for knots built by
//! gluing two Montesinos tangles, with an exhaustive search for integral
//! toroidal surgery slopes on such knots.

pub mod classifier;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod framing;
pub mod slope;
pub mod surface_index;
pub mod tangle;

pub use error::{Error, Result};
pub use slope::{continued_fraction, evaluate_continued_fraction, Slope};
