//! Planar diagrams: tracing, orientation, signs, linking and the bracket/Jones state sum.

mod bracket;
mod oriented;
mod pd;
mod poly;

pub use bracket::{jones, kauffman_bracket, MAX_BRACKET_CROSSINGS};
pub use oriented::OrientedDiagram;
pub use pd::{ArcId, Components, PDCode, Port};
pub use poly::LaurentPolynomial;
