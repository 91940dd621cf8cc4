//! Construction of the alcoved polyhedron `P(A)` from its halfspace
//! description: exact vertex enumeration, edges, facets, vertex labels,
//! shape descriptors and mesh export.
//!
//! Enumeration is brute force over all 220 triples of bounding planes with
//! exact rational solves; the order is fixed at 4, so exactness beats
//! asymptotic cleverness, and the scan doubles as the independent oracle for
//! every face count downstream.

mod descriptors;
mod halfspace;
mod labels;
mod linalg;
mod mesh;
mod region;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ni::NiMatrix;
use crate::trop::{trop_distance, Point, Rational};

pub use descriptors::{descriptors, ShapeDescriptors, BELT_CONSTRAINTS};
pub use halfspace::{halfspaces, Constraint, ConstraintId, HalfspaceSystem, CONSTRAINT_IDS};
pub use labels::{label_vertices, Label};
pub use mesh::{export_mesh, DEFAULT_MESH_PRECISION};
pub use region::{in_region, region_of};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("the halfspace system is infeasible; the input cannot be normal idempotent")]
    Infeasible,
    #[error("the coordinatewise {pole} extremum is not a vertex; enumeration is inconsistent")]
    PoleNotVertex { pole: &'static str },
    #[error("geometric invariant violated: {what}")]
    InvariantViolation { what: String },
    #[error("the body is {dim}-dimensional; a 3-dimensional polyhedron is required")]
    Degenerate { dim: usize },
    #[error("labeling failed: the point for label {label} is not a vertex")]
    LabelPointMissing { label: Label },
    #[error("labeling failed: label {label} is ambiguous on a maximal polyhedron")]
    AmbiguousLabel { label: Label },
    #[error("vertex labels are required but have not been assigned")]
    NotLabeled,
}

/// A vertex with its exact coordinates, the bitmask of tight constraints
/// (bit positions follow [`CONSTRAINT_IDS`]) and its combinatorial labels.
#[derive(Clone, Debug)]
pub struct Vertex {
    pub point: Point,
    pub tight: u16,
    pub labels: Vec<Label>,
}

/// An edge between two vertex indices, with its primitive integer direction
/// (sign-normalized) and tropical length.
#[derive(Clone, Debug)]
pub struct Edge {
    pub ends: (usize, usize),
    pub direction: [BigInt; 3],
    pub tropical_length: Rational,
}

/// A facet: the constraints whose plane carries it (one, except for
/// degenerate flat bodies) and its vertex cycle, counterclockwise viewed
/// from outside for 3-dimensional bodies.
#[derive(Clone, Debug)]
pub struct Facet {
    pub ids: Vec<ConstraintId>,
    pub cycle: Vec<usize>,
}

impl Facet {
    pub fn gon(&self) -> usize {
        self.cycle.len()
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Pole {
    North,
    South,
}

/// The polyhedron `P(A)` with explicit face structure. Vertices are sorted
/// lexicographically, so all derived orderings are deterministic.
#[derive(Clone, Debug)]
pub struct AlcovedPolytope {
    system: HalfspaceSystem,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    facets: Vec<Facet>,
    adjacency: Vec<Vec<usize>>,
    dim: usize,
    north: usize,
    south: usize,
    labeled: bool,
}

impl AlcovedPolytope {
    /// Full pipeline: halfspaces, enumeration, labeling.
    pub fn of(a: &NiMatrix) -> Result<AlcovedPolytope, PolytopeError> {
        let mut p = enumerate_vertices(&halfspaces(a))?;
        label_vertices(&mut p, a)?;
        Ok(p)
    }

    pub fn system(&self) -> &HalfspaceSystem {
        &self.system
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_labeled(&self) -> bool {
        self.labeled
    }

    pub fn north(&self) -> usize {
        self.north
    }

    pub fn south(&self) -> usize {
        self.south
    }

    pub fn pole(&self, pole: Pole) -> usize {
        match pole {
            Pole::North => self.north,
            Pole::South => self.south,
        }
    }

    pub fn f_vector(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.facets.len())
    }

    /// A maximal alcoved polyhedron is a simple dodecahedron with f-vector
    /// (20, 30, 12).
    pub fn is_maximal(&self) -> bool {
        self.f_vector() == (20, 30, 12)
    }

    pub fn neighbors(&self, vid: usize) -> &[usize] {
        &self.adjacency[vid]
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<&Edge> {
        let key = (a.min(b), a.max(b));
        self.edges.iter().find(|e| e.ends == key)
    }

    /// Tropical edge lengths keyed by endpoint index pair.
    pub fn edge_lengths(&self) -> BTreeMap<(usize, usize), Rational> {
        self.edges
            .iter()
            .map(|e| (e.ends, e.tropical_length.clone()))
            .collect()
    }

    /// Index of the facet carried by a constraint, if that constraint
    /// supports a facet.
    pub fn facet_of_constraint(&self, id: ConstraintId) -> Option<usize> {
        self.facets.iter().position(|f| f.ids.contains(&id))
    }

    pub fn gon_of_constraint(&self, id: ConstraintId) -> Option<usize> {
        self.facet_of_constraint(id).map(|fi| self.facets[fi].gon())
    }

    pub fn facets_at(&self, vid: usize) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&fi| self.facets[fi].cycle.contains(&vid))
            .collect()
    }

    pub fn vertex_by_point(&self, p: &Point) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.point.cmp(p)).ok()
    }

    pub fn vertex_by_label(&self, label: &Label) -> Option<usize> {
        self.vertices.iter().position(|v| v.labels.contains(label))
    }

    /// The Polar Cask at a pole: the facets containing it, plus the
    /// f-vector of their union.
    pub fn cask(&self, pole: Pole) -> Cask {
        let pv = self.pole(pole);
        let facet_indices = self.facets_at(pv);
        let mut verts: Vec<usize> = facet_indices
            .iter()
            .flat_map(|&fi| self.facets[fi].cycle.iter().copied())
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut edge_count = 0;
        for e in &self.edges {
            let in_some_facet = facet_indices.iter().any(|&fi| {
                let c = &self.facets[fi].cycle;
                c.contains(&e.ends.0) && c.contains(&e.ends.1) && {
                    // consecutive in the facet cycle
                    let pa = c.iter().position(|&v| v == e.ends.0).unwrap();
                    let pb = c.iter().position(|&v| v == e.ends.1).unwrap();
                    let n = c.len();
                    (pa + 1) % n == pb || (pb + 1) % n == pa
                }
            });
            if in_some_facet {
                edge_count += 1;
            }
        }
        let f_vector = (verts.len(), edge_count, facet_indices.len());
        Cask {
            pole,
            facet_indices,
            f_vector,
        }
    }

    /// The cyclic sequence of boundary vertices of a Polar Cask (the cask's
    /// vertices other than the pole), as consecutive neighbors along cask
    /// facet cycles. Deterministic start and direction; callers impose their
    /// own orientation conventions.
    pub fn cask_boundary_cycle(&self, pole: Pole) -> Result<Vec<usize>, PolytopeError> {
        let pv = self.pole(pole);
        let facet_indices = self.facets_at(pv);
        let mut boundary_adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &fi in &facet_indices {
            let c = &self.facets[fi].cycle;
            let n = c.len();
            for k in 0..n {
                let (u, v) = (c[k], c[(k + 1) % n]);
                if u == pv || v == pv {
                    continue;
                }
                boundary_adj.entry(u).or_default().push(v);
                boundary_adj.entry(v).or_default().push(u);
            }
        }
        let mut cycle = Vec::with_capacity(boundary_adj.len());
        let &start =
            boundary_adj
                .keys()
                .next()
                .ok_or_else(|| PolytopeError::InvariantViolation {
                    what: "empty cask boundary".to_string(),
                })?;
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            cycle.push(cur);
            let nbrs = &boundary_adj[&cur];
            if nbrs.len() != 2 {
                return Err(PolytopeError::InvariantViolation {
                    what: format!("cask boundary vertex {cur} has {} neighbors", nbrs.len()),
                });
            }
            let next = if nbrs[0] != prev { nbrs[0] } else { nbrs[1] };
            prev = cur;
            cur = next;
            if cur == start {
                break;
            }
            if cycle.len() > boundary_adj.len() {
                return Err(PolytopeError::InvariantViolation {
                    what: "cask boundary walk does not close".to_string(),
                });
            }
        }
        if cycle.len() != boundary_adj.len() {
            return Err(PolytopeError::InvariantViolation {
                what: "cask boundary is not a single cycle".to_string(),
            });
        }
        Ok(cycle)
    }

    /// OFF-format mesh text; requires a 3-dimensional body.
    pub fn export_off(&self, precision: usize) -> Result<String, PolytopeError> {
        export_mesh(self, precision)
    }
}

/// One Polar Cask.
#[derive(Clone, Debug)]
pub struct Cask {
    pub pole: Pole,
    pub facet_indices: Vec<usize>,
    pub f_vector: (usize, usize, usize),
}

/// Enumerates all vertices of the system exactly, then derives edges,
/// facets and poles. Labels are left empty; see [`label_vertices`].
pub fn enumerate_vertices(h: &HalfspaceSystem) -> Result<AlcovedPolytope, PolytopeError> {
    let cons = h.constraints();
    let m = cons.len();
    let mut points: Vec<Point> = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let rows = [
                    cons[a].coeffs.clone(),
                    cons[b].coeffs.clone(),
                    cons[c].coeffs.clone(),
                ];
                let rhs = [
                    cons[a].rhs.clone(),
                    cons[b].rhs.clone(),
                    cons[c].rhs.clone(),
                ];
                let Some(x) = linalg::solve3(&rows, &rhs) else {
                    continue;
                };
                let p = Point::new(x.to_vec());
                if cons.iter().all(|con| con.satisfies(&p)) {
                    points.push(p);
                }
            }
        }
    }
    points.sort();
    points.dedup();
    if points.is_empty() {
        return Err(PolytopeError::Infeasible);
    }

    let tight_masks: Vec<u16> = points
        .iter()
        .map(|p| {
            let mut mask = 0u16;
            for (bit, con) in cons.iter().enumerate() {
                if con.is_tight(p) {
                    mask |= 1 << bit;
                }
            }
            mask
        })
        .collect();

    let coeff_rows = |mask: u16| -> Vec<[Rational; 3]> {
        (0..m)
            .filter(|bit| mask & (1 << bit) != 0)
            .map(|bit| cons[bit].coeffs.clone())
            .collect()
    };

    // Edge criterion: the constraints tight at both endpoints span a line.
    let nv = points.len();
    let mut edges: Vec<Edge> = Vec::new();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for i in 0..nv {
        for j in i + 1..nv {
            let common = tight_masks[i] & tight_masks[j];
            if linalg::rank3(&coeff_rows(common)) == 2 {
                let direction = primitive_direction(&points[i], &points[j]);
                let tropical_length =
                    trop_distance(&points[i], &points[j]).expect("points share dimension 3");
                edges.push(Edge {
                    ends: (i, j),
                    direction,
                    tropical_length,
                });
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }

    let coords: Vec<[Rational; 3]> = points
        .iter()
        .map(|p| [p.get(0).clone(), p.get(1).clone(), p.get(2).clone()])
        .collect();
    let dim = linalg::affine_rank(&coords);

    // Facets: constraints whose tight set spans a plane; constraints with
    // identical tight sets carry the same geometric facet.
    let mut groups: BTreeMap<Vec<usize>, Vec<ConstraintId>> = BTreeMap::new();
    for (bit, con) in cons.iter().enumerate() {
        let tight_set: Vec<usize> = (0..nv)
            .filter(|&v| tight_masks[v] & (1 << bit) != 0)
            .collect();
        let rows: Vec<[Rational; 3]> = tight_set.iter().map(|&v| coords[v].clone()).collect();
        if linalg::affine_rank(&rows) == 2 {
            groups.entry(tight_set).or_default().push(con.id);
        }
    }
    let mut facets = Vec::with_capacity(groups.len());
    for (tight_set, ids) in groups {
        let mut cycle = facet_cycle(&tight_set, &adjacency)?;
        if dim == 3 {
            if ids.len() != 1 {
                return Err(PolytopeError::InvariantViolation {
                    what: "two planes carry one facet of a 3-dimensional body".to_string(),
                });
            }
            orient_ccw_from_outside(&mut cycle, &coords, &cons[ids[0].index()]);
        }
        facets.push(Facet { ids, cycle });
    }

    let north =
        locate_pole(&points, true).ok_or(PolytopeError::PoleNotVertex { pole: "maximum" })?;
    let south =
        locate_pole(&points, false).ok_or(PolytopeError::PoleNotVertex { pole: "minimum" })?;

    let vertices = points
        .into_iter()
        .zip(tight_masks)
        .map(|(point, tight)| Vertex {
            point,
            tight,
            labels: Vec::new(),
        })
        .collect();

    Ok(AlcovedPolytope {
        system: h.clone(),
        vertices,
        edges,
        facets,
        adjacency,
        dim,
        north,
        south,
        labeled: false,
    })
}

/// Walks the cycle of a facet's vertex set along polytope edges.
fn facet_cycle(tight_set: &[usize], adjacency: &[Vec<usize>]) -> Result<Vec<usize>, PolytopeError> {
    let in_set = |v: usize| tight_set.binary_search(&v).is_ok();
    let nbrs_in_facet = |v: usize| -> Vec<usize> {
        adjacency[v]
            .iter()
            .copied()
            .filter(|&u| in_set(u))
            .collect()
    };
    for &v in tight_set {
        if nbrs_in_facet(v).len() != 2 {
            return Err(PolytopeError::InvariantViolation {
                what: format!(
                    "facet vertex {v} has {} facet neighbors",
                    nbrs_in_facet(v).len()
                ),
            });
        }
    }
    let start = tight_set[0];
    let mut cycle = vec![start];
    let first = nbrs_in_facet(start);
    let mut prev = start;
    let mut cur = first[0].min(first[1]);
    while cur != start {
        cycle.push(cur);
        let nbrs = nbrs_in_facet(cur);
        let next = if nbrs[0] != prev { nbrs[0] } else { nbrs[1] };
        prev = cur;
        cur = next;
        if cycle.len() > tight_set.len() {
            return Err(PolytopeError::InvariantViolation {
                what: "facet cycle does not close".to_string(),
            });
        }
    }
    if cycle.len() != tight_set.len() {
        return Err(PolytopeError::InvariantViolation {
            what: "facet vertices do not form a single cycle".to_string(),
        });
    }
    Ok(cycle)
}

/// Reorders a facet cycle counterclockwise as seen from outside the body.
/// The outward normal of `coeffs . x >= rhs` is `-coeffs`.
fn orient_ccw_from_outside(cycle: &mut [usize], coords: &[[Rational; 3]], con: &Constraint) {
    let outward = [
        -con.coeffs[0].clone(),
        -con.coeffs[1].clone(),
        -con.coeffs[2].clone(),
    ];
    let base = &coords[cycle[0]];
    let mut area = [Rational::zero(), Rational::zero(), Rational::zero()];
    for k in 1..cycle.len() - 1 {
        let u = sub(&coords[cycle[k]], base);
        let v = sub(&coords[cycle[k + 1]], base);
        let c = linalg::cross(&u, &v);
        for t in 0..3 {
            area[t] += &c[t];
        }
    }
    if linalg::dot(&area, &outward) < Rational::zero() {
        cycle.reverse();
    }
    // canonical start: smallest vertex index first
    let min_pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(k, _)| k)
        .unwrap_or(0);
    cycle.rotate_left(min_pos);
}

fn sub(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn locate_pole(points: &[Point], maximum: bool) -> Option<usize> {
    let mut extreme: Vec<Rational> = points[0].coords().to_vec();
    for p in points {
        for k in 0..3 {
            let c = p.get(k);
            let better = if maximum {
                c > &extreme[k]
            } else {
                c < &extreme[k]
            };
            if better {
                extreme[k] = c.clone();
            }
        }
    }
    let target = Point::new(extreme);
    points.iter().position(|p| *p == target)
}

/// Primitive integer direction of the segment `p -> q`, sign-normalized so
/// the first nonzero component is positive.
fn primitive_direction(p: &Point, q: &Point) -> [BigInt; 3] {
    let diffs: Vec<Rational> = (0..3).map(|k| q.get(k) - p.get(k)).collect();
    let mut denom_lcm = BigInt::one();
    for d in &diffs {
        denom_lcm = denom_lcm.lcm(d.denom());
    }
    let mut ints: Vec<BigInt> = diffs
        .iter()
        .map(|d| d.numer() * (&denom_lcm / d.denom()))
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if !g.is_zero() && !g.is_one() {
        for v in &mut ints {
            *v /= &g;
        }
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in &mut ints {
                *v = -v.clone();
            }
        }
    }
    [ints[0].clone(), ints[1].clone(), ints[2].clone()]
}

impl fmt::Display for AlcovedPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (v, e, fc) = self.f_vector();
        write!(f, "alcoved polytope with f = ({v}, {e}, {fc})")
    }
}
