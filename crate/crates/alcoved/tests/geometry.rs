//! Polytope-level invariants: antipodal symmetry, principal vertices,
//! poles, cask structure, angles, edge directions and edge lengths.

mod common;

use std::collections::BTreeSet;

use alcoved::classify::{
    cant_value, north_cask_analysis, north_cask_type, polar_gons, south_cask_from_geometry,
    south_cask_type,
};
use alcoved::ni::NiMatrix;
use alcoved::polytope::{AlcovedPolytope, Label, Pole};
use alcoved::samples;
use alcoved::trop::{rat, Point, Rational};
use num_traits::{One, Signed, Zero};

fn all_sample_matrices() -> Vec<NiMatrix> {
    (1..=8)
        .map(|k| samples::class_representative(k).as_ni().clone())
        .collect()
}

#[test]
fn transposition_negates_the_vertex_set() {
    let mut matrices = all_sample_matrices();
    let mut rng = common::rng(50);
    for _ in 0..12 {
        matrices.push(common::random_ni(&mut rng));
    }
    for a in &matrices {
        let p = AlcovedPolytope::of(a).unwrap();
        let pt = AlcovedPolytope::of(&a.transpose()).unwrap();
        let negated: BTreeSet<Point> = p
            .vertices()
            .iter()
            .map(|v| Point::new(v.point.coords().iter().map(|c| -c).collect()))
            .collect();
        let transposed: BTreeSet<Point> = pt.vertices().iter().map(|v| v.point.clone()).collect();
        assert_eq!(negated, transposed);
    }
}

#[test]
fn principal_points_are_vertices() {
    let mut matrices = all_sample_matrices();
    matrices.push(samples::centered_cube());
    let mut rng = common::rng(51);
    for _ in 0..12 {
        matrices.push(common::random_ni(&mut rng));
    }
    for a in &matrices {
        let p = AlcovedPolytope::of(a).unwrap();
        let a0 = a.geometric();
        for j in 0..4 {
            let generator = Point::new(
                (0..3)
                    .map(|i| a0.get(i, j).finite().unwrap().clone())
                    .collect(),
            );
            assert!(
                p.vertex_by_point(&generator).is_some(),
                "generator {}",
                j + 1
            );
            let triple = Point::new((0..3).map(|i| a.entry(j, 3) - a.entry(j, i)).collect());
            assert!(
                p.vertex_by_point(&triple).is_some(),
                "triple complementary to {}",
                j + 1
            );
        }
    }
}

#[test]
fn poles_are_the_coordinatewise_extrema_and_vi_corners_at_the_origin() {
    let mut rng = common::rng(52);
    for _ in 0..20 {
        let a = common::random_ni(&mut rng);
        let p = AlcovedPolytope::of(&a).unwrap();
        let n = &p.vertices()[p.north()].point;
        let s = &p.vertices()[p.south()].point;
        for v in p.vertices() {
            for k in 0..3 {
                assert!(v.point.get(k) <= n.get(k));
                assert!(v.point.get(k) >= s.get(k));
            }
        }
        let cornered = AlcovedPolytope::of(a.visualize().as_ni()).unwrap();
        assert_eq!(
            cornered.vertices()[cornered.north()].point,
            Point::from_ints(&[0, 0, 0])
        );
    }
}

#[test]
fn euler_relation_for_random_bodies() {
    let mut rng = common::rng(53);
    for _ in 0..20 {
        let a = common::random_ni(&mut rng);
        let p = AlcovedPolytope::of(&a).unwrap();
        if p.dim() == 3 {
            let (v, e, f) = p.f_vector();
            assert_eq!(v + f, e + 2, "matrix:\n{a}");
        }
    }
}

#[test]
fn north_cask_labels_follow_the_fixed_cyclic_sequence() {
    let expected = [
        Label::Generator(0),
        Label::Pair(0, 1),
        Label::Pair(1, 0),
        Label::Generator(1),
        Label::Pair(1, 2),
        Label::Pair(2, 1),
        Label::Generator(2),
        Label::Pair(2, 0),
        Label::Pair(0, 2),
    ];
    for k in 1..=8 {
        let p = AlcovedPolytope::of(samples::class_representative(k).as_ni()).unwrap();
        let cycle = p.cask_boundary_cycle(Pole::North).unwrap();
        let mut labels: Vec<Label> = cycle.iter().map(|&v| p.vertices()[v].labels[0]).collect();
        // normalize: start at generator 1 and orient towards generator 2
        let start = labels
            .iter()
            .position(|l| *l == Label::Generator(0))
            .unwrap();
        labels.rotate_left(start);
        let g2 = labels
            .iter()
            .position(|l| *l == Label::Generator(1))
            .unwrap();
        let g3 = labels
            .iter()
            .position(|l| *l == Label::Generator(2))
            .unwrap();
        if g2 > g3 {
            labels[1..].reverse();
        }
        assert_eq!(labels, expected, "class {k}");
    }
}

#[test]
fn facial_angles_come_from_the_restricted_cosine_set() {
    let allowed: [Rational; 5] = [
        rat(0),
        alcoved::ratio(1, 4),
        alcoved::ratio(1, 2),
        alcoved::ratio(1, 3),
        alcoved::ratio(2, 3),
    ];
    for k in 1..=8 {
        let p = AlcovedPolytope::of(samples::class_representative(k).as_ni()).unwrap();
        for facet in p.facets() {
            let c = &facet.cycle;
            let n = c.len();
            for idx in 0..n {
                let v = &p.vertices()[c[idx]].point;
                let prev = &p.vertices()[c[(idx + n - 1) % n]].point;
                let next = &p.vertices()[c[(idx + 1) % n]].point;
                let a: Vec<Rational> = (0..3).map(|t| prev.get(t) - v.get(t)).collect();
                let b: Vec<Rational> = (0..3).map(|t| next.get(t) - v.get(t)).collect();
                let dot: Rational = (0..3).map(|t| &a[t] * &b[t]).sum();
                let na: Rational = (0..3).map(|t| &a[t] * &a[t]).sum();
                let nb: Rational = (0..3).map(|t| &b[t] * &b[t]).sum();
                let cos_sq = &(&dot * &dot) / &(&na * &nb);
                assert!(
                    allowed.contains(&cos_sq),
                    "class {k}: cos^2 = {cos_sq} outside the angle set"
                );
            }
        }
    }
}

#[test]
fn edge_directions_are_axes_diagonals_or_the_main_diagonal() {
    let mut matrices = all_sample_matrices();
    let mut rng = common::rng(54);
    for _ in 0..10 {
        matrices.push(common::random_ni(&mut rng));
    }
    for a in &matrices {
        let p = AlcovedPolytope::of(a).unwrap();
        for e in p.edges() {
            let pattern: Vec<i8> = e
                .direction
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        0
                    } else if c.abs().is_one() {
                        1
                    } else {
                        2
                    }
                })
                .collect();
            let ok = matches!(
                pattern.as_slice(),
                [1, 0, 0] | [0, 1, 0] | [0, 0, 1] | [1, 1, 0] | [1, 0, 1] | [0, 1, 1] | [1, 1, 1]
            );
            assert!(ok, "direction {:?} is not alcoved", e.direction);
        }
    }
}

#[test]
fn belt_vertical_edges_measure_the_cant_depths() {
    for k in 1..=8 {
        let a = samples::class_representative(k);
        let (_, e) = a.decompose();
        let c = e.cant_tuple();
        let p = AlcovedPolytope::of(a.as_ni()).unwrap();
        for j in 0..6 {
            let this = alcoved::polytope::BELT_CONSTRAINTS[j];
            let next = alcoved::polytope::BELT_CONSTRAINTS[(j + 1) % 6];
            let fi = p.facet_of_constraint(this).unwrap();
            let fj = p.facet_of_constraint(next).unwrap();
            let shared: Vec<&alcoved::polytope::Edge> = p
                .edges()
                .iter()
                .filter(|e| {
                    let ca = &p.facets()[fi].cycle;
                    let cb = &p.facets()[fj].cycle;
                    ca.contains(&e.ends.0)
                        && ca.contains(&e.ends.1)
                        && cb.contains(&e.ends.0)
                        && cb.contains(&e.ends.1)
                })
                .collect();
            assert_eq!(
                shared.len(),
                1,
                "class {k}: belt facets {j} and next share one edge"
            );
            let edge = shared[0];
            assert_eq!(
                edge.direction,
                [1.into(), 1.into(), 1.into()],
                "class {k} belt edge {j}"
            );
            let expected = c.components()[j]
                .abs()
                .min(c.components()[(j + 1) % 6].abs());
            assert_eq!(
                edge.tropical_length,
                expected,
                "class {k}: vertical between belt facets {j},{} measures the shallower cant",
                (j + 1) % 6,
            );
        }
    }
}

#[test]
fn diagonal_edge_lengths_are_the_cask_cant_values() {
    for k in 1..=8 {
        let a = samples::class_representative(k);
        let p = AlcovedPolytope::of(a.as_ni()).unwrap();
        let analysis = north_cask_analysis(&a).unwrap();
        // north cask diagonal edges: edges of the three top facets with
        // two-coordinate directions; their lengths are the rho/lambda values
        let mut expected: Vec<Rational> = Vec::new();
        for v in analysis.rho.iter().chain(analysis.lambda.iter()) {
            if let Some(r) = cant_value(v) {
                expected.push(r.clone());
            }
        }
        expected.sort();
        let north_facets = p.cask(Pole::North).facet_indices;
        let mut found: Vec<Rational> = Vec::new();
        for e in p.edges() {
            let diagonal = e.direction.iter().filter(|c| c.is_one()).count() == 2
                && e.direction.iter().filter(|c| c.is_zero()).count() == 1;
            if !diagonal {
                continue;
            }
            let in_north = north_facets.iter().any(|&fi| {
                let c = &p.facets()[fi].cycle;
                c.contains(&e.ends.0) && c.contains(&e.ends.1)
            });
            if in_north {
                found.push(e.tropical_length.clone());
            }
        }
        found.sort();
        assert_eq!(found, expected, "class {k}");
    }
}

#[test]
fn one_cant_creates_one_diagonal_edge_of_the_cant_depth() {
    let a = samples::one_cant([-8, -8, -8], -3).unwrap();
    let p = AlcovedPolytope::of(a.as_ni()).unwrap();
    let diagonals: Vec<&alcoved::polytope::Edge> = p
        .edges()
        .iter()
        .filter(|e| e.direction.iter().filter(|c| !c.is_zero()).count() == 2)
        .collect();
    assert_eq!(
        diagonals.len(),
        2,
        "the cant cuts one top and one bottom corner chain"
    );
    for e in &diagonals {
        assert_eq!(e.tropical_length, rat(3));
    }
}

#[test]
fn south_reading_agrees_with_the_sign_table_on_random_maximal_bodies() {
    let mut rng = common::rng(55);
    let mut seen = 0;
    let mut attempts = 0;
    while seen < 10 && attempts < 4000 {
        attempts += 1;
        let a = common::random_ni(&mut rng);
        let p = AlcovedPolytope::of(&a).unwrap();
        if !p.is_maximal() {
            continue;
        }
        seen += 1;
        let d = a.difference_tuple();
        let reading = south_cask_from_geometry(&p).unwrap();
        assert_eq!(reading.cask_type, south_cask_type(&d).unwrap());
        assert_eq!(reading.cask_type.gons, polar_gons(&p, Pole::South).unwrap());
        assert_eq!(
            north_cask_type(&d).unwrap().gons,
            polar_gons(&p, Pole::North).unwrap()
        );
    }
    assert!(
        seen >= 3,
        "not enough random maximal bodies ({seen} in {attempts} draws)"
    );
}

#[test]
fn the_matrix_is_recoverable_from_its_polytope() {
    // Every inequality is attained, so a_ij = min over P of (x_i - x_j),
    // reading x_4 = 0. Recovery over the vertex set pins the unique
    // representation: distinct NI matrices cannot share a polytope.
    let mut matrices = vec![samples::class_representative(3).as_ni().clone()];
    matrices.push(samples::centered_cube());
    let mut rng = common::rng(56);
    for _ in 0..15 {
        matrices.push(common::random_ni(&mut rng));
    }
    for a in &matrices {
        let p = AlcovedPolytope::of(a).unwrap();
        let coordinate = |v: &alcoved::polytope::Vertex, k: usize| -> Rational {
            if k == 3 {
                Rational::zero()
            } else {
                v.point.get(k).clone()
            }
        };
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    continue;
                }
                let recovered = p
                    .vertices()
                    .iter()
                    .map(|v| coordinate(v, i) - coordinate(v, j))
                    .min()
                    .unwrap();
                assert_eq!(recovered, *a.entry(i, j), "entry ({i},{j})");
            }
        }
    }
}

#[test]
fn multiple_labels_characterize_non_maximality() {
    for k in 1..=8 {
        let p = AlcovedPolytope::of(samples::class_representative(k).as_ni()).unwrap();
        assert!(p.vertices().iter().all(|v| v.labels.len() == 1));
    }
    for a in [
        samples::centered_cube(),
        samples::one_cant([-8, -8, -8], -3).unwrap().as_ni().clone(),
    ] {
        let p = AlcovedPolytope::of(&a).unwrap();
        assert!(!p.is_maximal());
        assert!(p.vertices().iter().any(|v| v.labels.len() > 1));
    }
}
