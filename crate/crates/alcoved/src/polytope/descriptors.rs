//! Shape descriptors: f-, p-, h- and t-vectors and the Equatorial Belt.

use num_traits::{One, Signed, Zero};

use super::{AlcovedPolytope, ConstraintId, PolytopeError};

/// Combinatorial shape data of an alcoved polyhedron.
///
/// `p` counts 4-, 5- and 6-gon facets (`f.2 = p4 + p5 + p6`); `h` counts the
/// maximal families of pairwise edge-adjacent hexagons; `t` counts edges in
/// the directions `u2+u3`, `u1+u3`, `u1+u2`; `eb` lists the gon counts of
/// the six Equatorial Belt facets indexed by the cantable box edge they
/// replace, and is only defined for maximal polyhedra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeDescriptors {
    pub f: (usize, usize, usize),
    pub p: [usize; 3],
    pub h: [usize; 4],
    pub t: [usize; 3],
    pub eb: Option<[usize; 6]>,
}

/// Belt facet planes in belt order: the facet `F_k` obtained by canting the
/// cantable edge `l_k` lies in the plane of the lower difference bound whose
/// perturbation entry is the cant parameter `c_k`, namely
/// `e_23, e_13, e_12, e_32, e_31, e_21`.
pub const BELT_CONSTRAINTS: [ConstraintId; 6] = [
    ConstraintId { row: 1, col: 2 },
    ConstraintId { row: 0, col: 2 },
    ConstraintId { row: 0, col: 1 },
    ConstraintId { row: 2, col: 1 },
    ConstraintId { row: 2, col: 0 },
    ConstraintId { row: 1, col: 0 },
];

pub fn descriptors(p: &AlcovedPolytope) -> Result<ShapeDescriptors, PolytopeError> {
    let f = p.f_vector();

    let mut gons = [0usize; 3];
    for facet in p.facets() {
        let g = facet.gon();
        if !(4..=6).contains(&g) {
            return Err(PolytopeError::InvariantViolation {
                what: format!("facet with {g} edges; alcoved facets have 4 to 6"),
            });
        }
        gons[g - 4] += 1;
    }

    let t = edge_direction_counts(p);
    let h = hexagon_families(p)?;

    let eb = if p.is_maximal() {
        let mut belt = [0usize; 6];
        let mut complete = true;
        for (k, id) in BELT_CONSTRAINTS.iter().enumerate() {
            match p.gon_of_constraint(*id) {
                Some(g) => belt[k] = g,
                None => complete = false,
            }
        }
        complete.then_some(belt)
    } else {
        None
    };

    Ok(ShapeDescriptors {
        f,
        p: gons,
        h,
        t,
        eb,
    })
}

fn edge_direction_counts(p: &AlcovedPolytope) -> [usize; 3] {
    let mut t = [0usize; 3];
    for e in p.edges() {
        let d: Vec<i8> = e
            .direction
            .iter()
            .map(|c| if c.is_zero() { 0 } else { 1 })
            .collect();
        let unit = e.direction.iter().all(|c| c.is_zero() || c.abs().is_one());
        if !unit {
            continue;
        }
        match (d[0], d[1], d[2]) {
            (0, 1, 1) => t[0] += 1,
            (1, 0, 1) => t[1] += 1,
            (1, 1, 0) => t[2] += 1,
            _ => {}
        }
    }
    t
}

/// Maximal families of mutually adjacent hexagon facets, counted by size:
/// the connected components of the hexagon edge-adjacency graph. Adjacent
/// means sharing an edge, not merely a vertex. (Cliques would be strictly
/// smaller: opposite hexagons of a four-hexagon band lie in parallel planes
/// and never touch, yet the band counts as one family of four.)
fn hexagon_families(p: &AlcovedPolytope) -> Result<[usize; 4], PolytopeError> {
    let hexes: Vec<usize> = (0..p.facets().len())
        .filter(|&fi| p.facets()[fi].gon() == 6)
        .collect();
    let n = hexes.len();
    let share_edge = |fa: usize, fb: usize| -> bool {
        let ca = &p.facets()[fa].cycle;
        let cb = &p.facets()[fb].cycle;
        p.edges().iter().any(|e| {
            let (u, v) = e.ends;
            consecutive(ca, u, v) && consecutive(cb, u, v)
        })
    };
    let mut component = (0..n).collect::<Vec<usize>>();
    for i in 0..n {
        for j in i + 1..n {
            if share_edge(hexes[i], hexes[j]) {
                let (a, b) = (component[i], component[j]);
                for c in &mut component {
                    if *c == b {
                        *c = a;
                    }
                }
            }
        }
    }
    let mut h = [0usize; 4];
    for root in 0..n {
        let size = component.iter().filter(|&&c| c == root).count();
        if size > 4 {
            return Err(PolytopeError::InvariantViolation {
                what: format!("a family of {size} mutually adjacent hexagons"),
            });
        }
        if size > 0 {
            h[size - 1] += 1;
        }
    }
    Ok(h)
}

fn consecutive(cycle: &[usize], u: usize, v: usize) -> bool {
    let n = cycle.len();
    (0..n).any(|k| {
        let (a, b) = (cycle[k], cycle[(k + 1) % n]);
        (a, b) == (u, v) || (a, b) == (v, u)
    })
}
