//! Combinatorial vertex labels: generators, principal triples and the
//! non-principal pairs assigned by the shortest-edge-path rule.

use std::collections::VecDeque;
use std::fmt;

use crate::ni::NiMatrix;
use crate::trop::{Point, Rational};

use super::{AlcovedPolytope, PolytopeError};

/// A vertex label. Digits are 0-based matrix indices, displayed 1-based:
/// the generator of column `j` is `j+1`, the principal triple misses one
/// digit, and the ordered pair `ij` marks the vertex closest to generator
/// `i` on the shortest edge path towards generator `j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Generator(usize),
    Pair(usize, usize),
    Triple([usize; 3]),
}

impl Label {
    /// The triple label complementary to generator `j`.
    pub fn triple_complement(j: usize) -> Label {
        let digits: Vec<usize> = (0..4).filter(|&d| d != j).collect();
        Label::Triple([digits[0], digits[1], digits[2]])
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, Label::Pair(_, _))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Generator(j) => write!(f, "{}", j + 1),
            Label::Pair(i, j) => write!(f, "{}{}", i + 1, j + 1),
            Label::Triple(d) => write!(f, "{}{}{}", d[0] + 1, d[1] + 1, d[2] + 1),
        }
    }
}

/// Assigns the labels of `P(A)` to an enumerated polytope.
///
/// Generators are the columns of the geometric matrix; the triple labels sit
/// at the antipodal identification of the columns of the transposed
/// geometric matrix; pair labels follow the shortest-edge-path rule. On a
/// maximal polyhedron all twenty labels land on distinct vertices; label
/// collisions are exactly the non-maximal degenerations, and every colliding
/// label is attached to the merged vertex.
pub fn label_vertices(p: &mut AlcovedPolytope, a: &NiMatrix) -> Result<(), PolytopeError> {
    for v in &mut p.vertices {
        v.labels.clear();
    }

    let geometric = a.geometric();
    let mut generator_vid = [0usize; 4];
    for j in 0..4 {
        let col: Vec<Rational> = (0..3)
            .map(|i| {
                geometric
                    .get(i, j)
                    .finite()
                    .expect("NI matrices are finite")
                    .clone()
            })
            .collect();
        let point = Point::new(col);
        let vid = p
            .vertex_by_point(&point)
            .ok_or(PolytopeError::LabelPointMissing {
                label: Label::Generator(j),
            })?;
        p.vertices[vid].labels.push(Label::Generator(j));
        generator_vid[j] = vid;
    }

    for j in 0..4 {
        // -col((A^T)_0, j): coordinates a_j4 - a_ji.
        let coords: Vec<Rational> = (0..3).map(|i| a.entry(j, 3) - a.entry(j, i)).collect();
        let label = Label::triple_complement(j);
        let point = Point::new(coords);
        let vid = p
            .vertex_by_point(&point)
            .ok_or(PolytopeError::LabelPointMissing { label })?;
        p.vertices[vid].labels.push(label);
    }

    let maximal = p.is_maximal();
    let distances: Vec<Vec<usize>> = (0..4).map(|j| bfs_distances(p, generator_vid[j])).collect();
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let label = Label::Pair(i, j);
            let total = distances[i][generator_vid[j]];
            let vid = if total == 0 {
                generator_vid[i]
            } else {
                let mut candidates: Vec<usize> = (0..p.vertices.len())
                    .filter(|&v| distances[i][v] == 1 && distances[j][v] == total - 1)
                    .collect();
                candidates.sort_by(|&u, &v| p.vertices[u].point.cmp(&p.vertices[v].point));
                match candidates.as_slice() {
                    [single] => *single,
                    [first, ..] if !maximal => *first,
                    _ => return Err(PolytopeError::AmbiguousLabel { label }),
                }
            };
            p.vertices[vid].labels.push(label);
        }
    }

    for v in &mut p.vertices {
        v.labels.sort();
        v.labels.dedup();
    }

    if maximal {
        if p.vertices.iter().any(|v| v.labels.len() != 1) {
            return Err(PolytopeError::InvariantViolation {
                what: "a maximal polyhedron must carry one label per vertex".to_string(),
            });
        }
    } else if p.vertices.len() > 1 && p.vertices.iter().all(|v| v.labels.len() <= 1) {
        return Err(PolytopeError::InvariantViolation {
            what: "a non-maximal polyhedron must merge some labels".to_string(),
        });
    }

    p.labeled = true;
    Ok(())
}

fn bfs_distances(p: &AlcovedPolytope, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; p.vertices.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &u in p.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::AlcovedPolytope;
    use crate::samples;

    #[test]
    fn cornered_cube_north_pole_is_the_full_triple() {
        let p = AlcovedPolytope::of(samples::cornered_cube().as_ni()).unwrap();
        let n = &p.vertices()[p.north()];
        assert_eq!(n.point, Point::from_ints(&[0, 0, 0]));
        assert!(n.labels.contains(&Label::Triple([0, 1, 2])));
    }

    #[test]
    fn maximal_representative_has_twenty_distinct_labels() {
        let p = AlcovedPolytope::of(samples::class_representative(1).as_ni()).unwrap();
        let mut generators = 0;
        let mut pairs = 0;
        let mut triples = 0;
        for v in p.vertices() {
            assert_eq!(v.labels.len(), 1);
            match v.labels[0] {
                Label::Generator(_) => generators += 1,
                Label::Pair(_, _) => pairs += 1,
                Label::Triple(_) => triples += 1,
            }
        }
        assert_eq!((generators, pairs, triples), (4, 12, 4));
    }

    #[test]
    fn box_pair_labels_collapse_onto_principal_vertices() {
        let b = samples::one_cant([-2, -4, -6], 0).unwrap();
        let p = AlcovedPolytope::of(b.as_ni()).unwrap();
        assert_eq!(p.f_vector(), (8, 12, 6));
        for v in p.vertices() {
            if v.labels.iter().any(Label::is_pair) {
                assert!(
                    v.labels.iter().any(|l| !l.is_pair()),
                    "pair labels may only sit on principal vertices, got {:?}",
                    v.labels
                );
            }
        }
        let multi = p.vertices().iter().filter(|v| v.labels.len() > 1).count();
        assert!(multi > 0, "a box is non-maximal, some labels must merge");
    }

    #[test]
    fn south_pole_is_generator_four() {
        for k in 1..=8 {
            let p = AlcovedPolytope::of(samples::class_representative(k).as_ni()).unwrap();
            assert_eq!(
                p.vertices()[p.south()].labels,
                vec![Label::Generator(3)],
                "class {k}"
            );
            assert_eq!(
                p.vertices()[p.north()].labels,
                vec![Label::Triple([0, 1, 2])]
            );
        }
    }
}
