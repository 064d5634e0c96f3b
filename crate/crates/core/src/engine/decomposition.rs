use num_bigint::BigInt;

use crate::error::Result;
use crate::geom::{classify_faces, general_position_translate, Polytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermKind {
    /// `conv{0, F}` for a face `F`.
    Pyramid,
    /// A face `F` itself.
    Face,
}

/// One signed summand of the inclusion-exclusion over visible and hidden
/// faces of a polytope in general position.
#[derive(Clone, Debug)]
pub struct DecompositionTerm {
    pub sign: i32,
    pub kind: TermKind,
    pub polytope: Polytope,
    /// Dimension of the face the term came from.
    pub face_dim: usize,
}

/// Writes a full-dimensional `P` (after an integer translation into general
/// position) as
///
/// ```text
/// L_P = Σ_{F hidden} (-1)^{d-1-dim F} L_{conv{0,F}}
///     - Σ_{F visible} (-1)^{d-1-dim F} (L_{conv{0,F}} - L_F)
/// ```
///
/// Returns the translation used and the signed terms, hidden faces first.
pub fn pyramid_decomposition(p: &Polytope) -> Result<(Vec<BigInt>, Vec<DecompositionTerm>)> {
    let (moved, shift) = general_position_translate(p)?;
    let classes = classify_faces(&moved)?;
    let d = moved.ambient_dim();
    let sign_of = |dim: usize| {
        if (d - 1 - dim).is_multiple_of(2) {
            1
        } else {
            -1
        }
    };
    let mut terms = Vec::new();
    for &i in &classes.hidden {
        let face = &classes.faces[i];
        terms.push(DecompositionTerm {
            sign: sign_of(face.dim),
            kind: TermKind::Pyramid,
            polytope: moved.sub_polytope(&face.vertex_indices).cone_with_origin(),
            face_dim: face.dim,
        });
    }
    for &i in &classes.visible {
        let face = &classes.faces[i];
        let f = moved.sub_polytope(&face.vertex_indices);
        let sign = sign_of(face.dim);
        terms.push(DecompositionTerm {
            sign: -sign,
            kind: TermKind::Pyramid,
            polytope: f.cone_with_origin(),
            face_dim: face.dim,
        });
        terms.push(DecompositionTerm {
            sign,
            kind: TermKind::Face,
            polytope: f,
            face_dim: face.dim,
        });
    }
    Ok((shift, terms))
}
