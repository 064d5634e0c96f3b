//! Rational polytopes in V-representation and the geometric steps of the
//! recursion: facets and faces, visibility from the origin, translation into
//! general position, lattice normalization of the affine hull, and
//! normalization of pyramids to a horizontal base.

mod chart;
mod faces;
mod facets;
mod hyperplane;
mod lattice;
mod polytope;
mod position;

pub use faces::{classify_faces, face_lattice, Face, FaceClassification};
pub use facets::{facets, Facet};
pub use hyperplane::{hyperplane_normalize, HyperplaneNormalization};
pub use lattice::{affine_hull_index, i_index, i_indices, lattice_normalize, LatticeNormalization};
pub use polytope::Polytope;
pub use position::general_position_translate;

pub(crate) use chart::AffineChart;
pub(crate) use facets::supporting_hyperplanes;
