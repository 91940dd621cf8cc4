//! Cask typing, Equatorial Belt assembly, orbit enumeration and the
//! quasi-Euclidean class assignment.

mod cask;
mod orbits;

use thiserror::Error;

use crate::ni::{BoxMatrix, CantTuple, DifferenceTuple, NiMatrix, PerturbationMatrix, ViMatrix};
use crate::polytope::{descriptors, AlcovedPolytope, Pole, PolytopeError, ShapeDescriptors};

pub use cask::{
    cant_value, north_cask_analysis, north_cask_type, polar_gons, south_cask_from_geometry,
    south_cask_type, CaskAnalysis, CaskType, Chirality, SouthCaskReading,
};
pub use orbits::{
    combinatorial_class, compute_orbits, qe_class, qe_class_of_signs, QeClass, SignTuple,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("difference tuple component d{} is zero: the polyhedron is not maximal", .index + 1)]
    ZeroComponent { index: usize },
    #[error("the 2-minor selecting the cant at facet x{} is zero: the polyhedron is not maximal", .i + 1)]
    ZeroMinor { i: usize },
    #[error("constant sign tuples are impossible for difference tuples (components sum to zero)")]
    ConstantTuple,
    #[error("the polyhedron is not maximal: f = ({}, {}, {})", .f.0, .f.1, .f.2)]
    NotMaximal { f: (usize, usize, usize) },
    #[error("south cask reading failed: {what}")]
    UnrecognizedSouthSequence { what: String },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error("internal inconsistency: {what}")]
    Internal { what: String },
}

/// The maximal-only part of an analysis: cask types, Belt, class.
#[derive(Clone, Debug)]
pub struct MaximalClassification {
    pub north: CaskType,
    pub south: CaskType,
    pub south_reading: SouthCaskReading,
    pub equatorial_belt: [usize; 6],
    pub qe: &'static QeClass,
    pub combinatorial: u8,
}

/// Everything the pipeline derives from one normal idempotent matrix.
///
/// For non-maximal input the classification fields are absent and
/// `not_applicable` carries the reason; all metric and combinatorial data
/// (visualization, decomposition, tuples, f-vector, descriptors) is still
/// populated.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub input_is_visualized: bool,
    pub visualization: ViMatrix,
    pub box_matrix: BoxMatrix,
    pub perturbation: PerturbationMatrix,
    pub cant: CantTuple,
    pub difference: DifferenceTuple,
    pub polytope: AlcovedPolytope,
    pub shape: ShapeDescriptors,
    pub classification: Option<MaximalClassification>,
    pub not_applicable: Option<String>,
}

/// Runs the whole pipeline on a normal idempotent matrix.
///
/// On maximal input, the sign-table cask types are cross-checked against the
/// enumerated polytope (the geometric read-off is the binding oracle); a
/// disagreement is reported as an internal error rather than silently
/// trusting either side.
pub fn analyze(a: &NiMatrix) -> Result<Analysis, ClassifyError> {
    let visualization = a.visualize();
    let (box_matrix, perturbation) = visualization.decompose();
    let cant = perturbation.cant_tuple();
    let difference = cant.difference_tuple();
    let polytope = AlcovedPolytope::of(a)?;
    let shape = descriptors(&polytope)?;

    let (classification, not_applicable) = if polytope.is_maximal() {
        let north = north_cask_type(&difference)?;
        let south = south_cask_type(&difference)?;
        let south_reading = south_cask_from_geometry(&polytope)?;
        check_cask_against_geometry("north", &north, polar_gons(&polytope, Pole::North)?)?;
        check_cask_against_geometry("south", &south, polar_gons(&polytope, Pole::South)?)?;
        if south_reading.cask_type != south {
            return Err(ClassifyError::Internal {
                what: format!(
                    "south cask from signs is {south} but the boundary sequence reads {}",
                    south_reading.cask_type
                ),
            });
        }
        let eb = shape.eb.ok_or(ClassifyError::Internal {
            what: "maximal polyhedron without a complete Equatorial Belt".to_string(),
        })?;
        let qe = qe_class(&difference)?;
        let classification = MaximalClassification {
            north,
            south,
            south_reading,
            equatorial_belt: eb,
            qe,
            combinatorial: qe.combinatorial_class(),
        };
        (Some(classification), None)
    } else {
        let (v, e, f) = shape.f;
        (None, Some(format!("non-maximal (f=({v},{e},{f}))")))
    };

    Ok(Analysis {
        input_is_visualized: a.is_visualized(),
        visualization,
        box_matrix,
        perturbation,
        cant,
        difference,
        polytope,
        shape,
        classification,
        not_applicable,
    })
}

/// The Equatorial Belt of a maximal labeled polyhedron: gon counts of the
/// six non-Cask facets, indexed by the cantable box edge each one replaces.
pub fn belt(p: &AlcovedPolytope) -> Result<[usize; 6], ClassifyError> {
    if !p.is_maximal() {
        return Err(ClassifyError::NotMaximal { f: p.f_vector() });
    }
    let mut eb = [0usize; 6];
    for (k, id) in crate::polytope::BELT_CONSTRAINTS.iter().enumerate() {
        eb[k] = p
            .gon_of_constraint(*id)
            .ok_or(ClassifyError::NotMaximal { f: p.f_vector() })?;
    }
    Ok(eb)
}

fn check_cask_against_geometry(
    which: &str,
    from_signs: &CaskType,
    gons: [u8; 3],
) -> Result<(), ClassifyError> {
    if from_signs.gons != gons {
        return Err(ClassifyError::Internal {
            what: format!(
                "{which} cask type {from_signs} disagrees with facet gon counts ({}.{}.{})",
                gons[0], gons[1], gons[2]
            ),
        });
    }
    Ok(())
}
