//! Rational tangles, sums, bottom twists and mirrors, compiled to planar diagrams.

mod diagram;
mod endpoint;
mod expr;
mod gluing;
mod net;

pub use diagram::{compile, endpoint_permutation, rational_tangle, TangleDiagram};
pub use endpoint::{EndpointLabel, Pairing};
pub use expr::{bottom_twist, mirror_tangle, montesinos, tangle_sum, TangleExpr};
pub use gluing::{enumerate_gluings, glue, glue_diagram, knot_filter, standard_eta, GluedDiagram, GluingMap};
pub use net::MarkerPass;
