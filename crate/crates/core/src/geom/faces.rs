use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::chart::AffineChart;
use super::facets::{facets, supporting_hyperplanes, Facet};
use super::Polytope;
use crate::error::{Error, Result};

/// A nonempty face, identified by the vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub vertex_indices: Vec<usize>,
    pub dim: usize,
    /// Indices of the facets containing this face (empty for P itself).
    pub containing_facets: Vec<usize>,
}

fn lattice_from_incidence(p: &Polytope, facet_sets: &[Vec<usize>]) -> Vec<Face> {
    let mut seen: BTreeSet<Vec<usize>> = facet_sets.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = facet_sets.to_vec();
    while let Some(x) = frontier.pop() {
        for f in facet_sets {
            let y: Vec<usize> = x
                .iter()
                .copied()
                .filter(|i| f.binary_search(i).is_ok())
                .collect();
            if !y.is_empty() && seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.insert((0..p.vertices().len()).collect());
    let mut faces: Vec<Face> = seen
        .into_iter()
        .map(|vs| {
            let pts: Vec<_> = vs.iter().map(|&i| p.vertices()[i].clone()).collect();
            let dim = AffineChart::of_points(p.ambient_dim(), &pts).dim();
            let containing_facets = facet_sets
                .iter()
                .enumerate()
                .filter(|(_, f)| vs.iter().all(|i| f.binary_search(i).is_ok()))
                .map(|(k, _)| k)
                .collect();
            Face {
                vertex_indices: vs,
                dim,
                containing_facets,
            }
        })
        .collect();
    faces.sort_by(|a, b| (a.dim, &a.vertex_indices).cmp(&(b.dim, &b.vertex_indices)));
    faces
}

/// All nonempty faces of a full-dimensional polytope, P itself included,
/// ordered by dimension and then vertex indices.
pub fn face_lattice(p: &Polytope) -> Result<Vec<Face>> {
    let fs = facets(p)?;
    let sets: Vec<Vec<usize>> = fs.into_iter().map(|f| f.incident_vertices).collect();
    Ok(lattice_from_incidence(p, &sets))
}

/// Faces of `p` of any dimension, computed inside its affine hull.
pub(crate) fn relative_face_lattice(p: &Polytope) -> Vec<Face> {
    let chart = AffineChart::of_points(p.ambient_dim(), p.vertices());
    let projected: Vec<_> = p.vertices().iter().map(|v| chart.project(v)).collect();
    let sets: Vec<Vec<usize>> = supporting_hyperplanes(chart.dim(), &projected)
        .into_iter()
        .map(|h| h.incident)
        .collect();
    lattice_from_incidence(p, &sets)
}

/// Faces of a polytope split by how they are seen from the origin.
#[derive(Clone, Debug)]
pub struct FaceClassification {
    pub facets: Vec<Facet>,
    pub faces: Vec<Face>,
    /// Indices into `faces`.
    pub visible: Vec<usize>,
    /// Indices into `faces`.
    pub hidden: Vec<usize>,
}

/// A facet is visible when the origin strictly violates its inequality and
/// hidden otherwise. A lower-dimensional face is visible (hidden) when every
/// facet containing it is visible (hidden); some faces are neither.
pub fn classify_faces(p: &Polytope) -> Result<FaceClassification> {
    let facets = facets(p)?;
    if let Some(k) = facets.iter().position(|f| f.offset.is_zero()) {
        return Err(Error::OriginOnFacetHyperplane { facet: k });
    }
    let facet_visible: Vec<bool> = facets.iter().map(|f| f.offset.is_negative()).collect();
    let sets: Vec<Vec<usize>> = facets.iter().map(|f| f.incident_vertices.clone()).collect();
    let faces = lattice_from_incidence(p, &sets);
    let d = p.ambient_dim();
    let mut visible = Vec::new();
    let mut hidden = Vec::new();
    for (i, face) in faces.iter().enumerate() {
        if face.dim >= d {
            continue;
        }
        if face.containing_facets.iter().all(|&k| facet_visible[k]) {
            visible.push(i);
        } else if face.containing_facets.iter().all(|&k| !facet_visible[k]) {
            hidden.push(i);
        }
    }
    Ok(FaceClassification {
        facets,
        faces,
        visible,
        hidden,
    })
}
