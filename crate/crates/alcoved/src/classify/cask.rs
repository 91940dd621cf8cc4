//! Polar Cask types from difference-tuple signs and from geometry.

use std::fmt;

use num_traits::Signed;

use crate::ni::{DifferenceTuple, Sign, ViMatrix};
use crate::polytope::{AlcovedPolytope, ConstraintId, Label, Pole};
use crate::trop::{Rational, TropScalar};

use super::ClassifyError;

/// Orientation word of a Polar Cask. Explicit only for `(5.5.5)` casks;
/// otherwise the word is deducible from the gon permutation and stays
/// implied.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Chirality {
    Left,
    Right,
    Implied,
}

/// The type `(p.q.r)` of a Polar Cask: the facet meeting the pole in the
/// plane `x_k = cnst` is a `gons[k]`-gon.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct CaskType {
    pub gons: [u8; 3],
    pub chirality: Chirality,
}

impl CaskType {
    fn new(gons: [u8; 3], chirality: Chirality) -> CaskType {
        debug_assert_eq!(gons.iter().map(|&g| g as u32).sum::<u32>(), 15);
        CaskType { gons, chirality }
    }
}

impl fmt::Display for CaskType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}.{}.{})", self.gons[0], self.gons[1], self.gons[2])?;
        match self.chirality {
            Chirality::Left => write!(f, " left"),
            Chirality::Right => write!(f, " right"),
            Chirality::Implied => Ok(()),
        }
    }
}

/// The edge-length bookkeeping of a North Cask: for each `i`, the sign of
/// the 2-minor `a_{i,4;i-1,i+1}` selects either a right cant `rho_{i+1}` or
/// a left cant `lambda_{i-1}`, with complements `delta` and `epsilon`.
/// Absent entries are the `-inf` sentinel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaskAnalysis {
    pub rho: [TropScalar; 3],
    pub lambda: [TropScalar; 3],
    pub delta: [TropScalar; 3],
    pub epsilon: [TropScalar; 3],
}

impl CaskAnalysis {
    /// Gon count of the North Cask facet `x_{k+1} = cnst`: 4 plus one for
    /// each cant meeting it.
    pub fn gon(&self, k: usize) -> u8 {
        4 + u8::from(!self.rho[k].is_neg_inf()) + u8::from(!self.lambda[k].is_neg_inf())
    }

    pub fn cask_type(&self) -> CaskType {
        let gons = [self.gon(0), self.gon(1), self.gon(2)];
        let rights = self.rho.iter().filter(|r| !r.is_neg_inf()).count();
        let lefts = self.lambda.iter().filter(|l| !l.is_neg_inf()).count();
        let chirality = match (rights, lefts) {
            (3, 0) => Chirality::Right,
            (0, 3) => Chirality::Left,
            _ => Chirality::Implied,
        };
        CaskType::new(gons, chirality)
    }
}

/// North Cask analysis of a visualized matrix: populates `rho`, `lambda`,
/// `delta`, `epsilon` from the case split on the three 2-minors
/// `a_{i,4;i-1,i+1}`, `i` in `{1,2,3}` with indices cycled inside `{1,2,3}`.
pub fn north_cask_analysis(a: &ViMatrix) -> Result<CaskAnalysis, ClassifyError> {
    let ni = a.as_ni();
    let mut rho = [TropScalar::NegInf, TropScalar::NegInf, TropScalar::NegInf];
    let mut lambda = rho.clone();
    let mut delta = rho.clone();
    let mut epsilon = rho.clone();
    for i in 0..3 {
        let prev = (i + 2) % 3;
        let next = (i + 1) % 3;
        let minor = ni.two_minor(i, 3, prev, next);
        match Sign::of(&minor) {
            None => return Err(ClassifyError::ZeroMinor { i }),
            Some(Sign::Plus) => {
                rho[next] = TropScalar::Finite(minor);
                delta[next] = TropScalar::Finite(ni.two_minor(i, prev, next, prev));
            }
            Some(Sign::Minus) => {
                lambda[prev] = TropScalar::Finite(-minor);
                epsilon[prev] = TropScalar::Finite(ni.two_minor(i, next, prev, next));
            }
        }
    }
    Ok(CaskAnalysis {
        rho,
        lambda,
        delta,
        epsilon,
    })
}

fn even_signs(d: &DifferenceTuple) -> Result<[Sign; 3], ClassifyError> {
    signs_at(d, [1, 3, 5])
}

fn odd_signs_for_south(d: &DifferenceTuple) -> Result<[Sign; 3], ClassifyError> {
    let s = signs_at(d, [4, 2, 0])?;
    Ok([-s[0], -s[1], -s[2]])
}

fn signs_at(d: &DifferenceTuple, idx: [usize; 3]) -> Result<[Sign; 3], ClassifyError> {
    let mut out = [Sign::Plus; 3];
    for (slot, &k) in idx.iter().enumerate() {
        out[slot] = Sign::of(d.get(k)).ok_or(ClassifyError::ZeroComponent { index: k })?;
    }
    Ok(out)
}

/// North Cask type from `sign(d_2, d_4, d_6)`: `d_2 > 0` contributes the
/// right cant `rho_2` and otherwise the left cant `lambda_3`; `d_4` selects
/// `rho_1` or `lambda_2`; `d_6` selects `rho_3` or `lambda_1`. Each facet
/// `x_k` is a 4-, 5- or 6-gon according to how many of `rho_k, lambda_k`
/// are present.
pub fn north_cask_type(d: &DifferenceTuple) -> Result<CaskType, ClassifyError> {
    Ok(north_type_from_even_signs(even_signs(d)?))
}

fn north_type_from_even_signs(s: [Sign; 3]) -> CaskType {
    let mut rho = [false; 3];
    let mut lambda = [false; 3];
    // (d_2, d_4, d_6) correspond to the minors with i = 1, 3, 2.
    for (k, (r, l)) in [(1usize, 2usize), (0, 1), (2, 0)].iter().enumerate() {
        match s[k] {
            Sign::Plus => rho[*r] = true,
            Sign::Minus => lambda[*l] = true,
        }
    }
    let gons = [0, 1, 2].map(|k| 4 + u8::from(rho[k]) + u8::from(lambda[k]));
    let chirality = if rho.iter().all(|&b| b) {
        Chirality::Right
    } else if lambda.iter().all(|&b| b) {
        Chirality::Left
    } else {
        Chirality::Implied
    };
    CaskType::new(gons, chirality)
}

/// South Cask type from `-sign(d_5, d_3, d_1)`, the even signs of the Polar
/// Exchange `+(23)` of the matrix. The exchange maps the rotated North
/// facets `x_1, x_2, x_3` onto the South facets `x_1, x_3, x_2` and turns
/// left pentagons into right ones, so the rotated type comes back with its
/// last two gon slots swapped and its chirality word flipped. The enumerated
/// polytope is the binding oracle for this convention.
pub fn south_cask_type(d: &DifferenceTuple) -> Result<CaskType, ClassifyError> {
    let rotated = north_type_from_even_signs(odd_signs_for_south(d)?);
    let gons = [rotated.gons[0], rotated.gons[2], rotated.gons[1]];
    let chirality = match rotated.chirality {
        Chirality::Left => Chirality::Right,
        Chirality::Right => Chirality::Left,
        Chirality::Implied => Chirality::Implied,
    };
    Ok(CaskType::new(gons, chirality))
}

/// The South Cask read off from the polytope: the cyclic sequence of
/// pair-labeled vertices around the South Pole (shortened by dropping the
/// three-digit vertices), its row in the eight-sequence table, and the
/// inversion count.
#[derive(Clone, Debug)]
pub struct SouthCaskReading {
    pub cask_type: CaskType,
    pub x_sequence: [Label; 6],
    pub inversions: u8,
}

/// Reads the South Cask type from the geometry. The boundary cycle of the
/// South Cask visits the pair blocks `{14,41}`, `{24,42}`, `{34,43}` in this
/// cyclic order for exactly one traversal direction, which fixes the
/// direction convention of the sequence table.
pub fn south_cask_from_geometry(p: &AlcovedPolytope) -> Result<SouthCaskReading, ClassifyError> {
    if !p.is_maximal() {
        return Err(ClassifyError::NotMaximal { f: p.f_vector() });
    }
    if !p.is_labeled() {
        return Err(ClassifyError::Polytope(
            crate::polytope::PolytopeError::NotLabeled,
        ));
    }
    let cycle = p.cask_boundary_cycle(Pole::South)?;
    let mut pairs: Vec<(usize, usize)> = Vec::new(); // (vid, partner digit)
    for &vid in &cycle {
        match p.vertices()[vid].labels.as_slice() {
            [Label::Pair(i, j)] => {
                let digit = if *i == 3 { *j } else { *i };
                if (*i == 3) != (*j == 3) {
                    pairs.push((vid, digit));
                } else {
                    return Err(ClassifyError::UnrecognizedSouthSequence {
                        what: format!("pair label {}{} off the polar axis blocks", i + 1, j + 1),
                    });
                }
            }
            [Label::Triple(_)] => {}
            other => {
                return Err(ClassifyError::UnrecognizedSouthSequence {
                    what: format!("unexpected labels {other:?} on the south boundary"),
                })
            }
        }
    }
    if pairs.len() != 6 {
        return Err(ClassifyError::UnrecognizedSouthSequence {
            what: format!("{} pair vertices around the South Pole", pairs.len()),
        });
    }
    // The six pairs appear as three consecutive blocks; orient so the block
    // digits run 1, 2, 3 and rotate to start at the 1-block.
    let digits: Vec<usize> = pairs.iter().map(|&(_, d)| d).collect();
    let order: Vec<usize> = {
        let mut seen = Vec::new();
        for &d in &digits {
            if !seen.contains(&d) {
                seen.push(d);
            }
        }
        seen
    };
    if order.len() != 3 {
        return Err(ClassifyError::UnrecognizedSouthSequence {
            what: format!("pair blocks {order:?} are interleaved"),
        });
    }
    let mut seq = pairs;
    let rot = |v: &[usize]| -> Vec<usize> {
        let p0 = v.iter().position(|&d| d == 0).unwrap();
        v.iter().cycle().skip(p0).take(3).copied().collect()
    };
    if rot(&order) != [0, 1, 2] {
        seq.reverse();
    }
    let start = seq
        .iter()
        .position(|&(_, d)| d == 0)
        .expect("digit 1 block exists");
    seq.rotate_left(start);
    // A block may straddle the rotation point; re-rotate by one if needed.
    if seq[5].1 == 0 {
        seq.rotate_right(1);
    }
    let labels: Vec<Label> = seq
        .iter()
        .map(|&(vid, _)| p.vertices()[vid].labels[0])
        .collect();
    let block_digits = [seq[0].1, seq[2].1, seq[4].1];
    if block_digits != [0, 1, 2] || seq[1].1 != 0 || seq[3].1 != 1 || seq[5].1 != 2 {
        return Err(ClassifyError::UnrecognizedSouthSequence {
            what: format!("blocks out of order: {labels:?}"),
        });
    }
    // Inversion bit: the block starts with 4i instead of i4.
    let mut bits = [false; 3];
    for b in 0..3 {
        bits[b] = match labels[2 * b] {
            Label::Pair(3, _) => true,
            Label::Pair(_, 3) => false,
            _ => unreachable!("blocks contain polar pairs only"),
        };
    }
    // Gon rows follow the eight-sequence table and are pinned by the facet
    // gon counts of the enumerated polytope. The two all-pentagon rows carry
    // the chirality words that make the alternating-tuple example read
    // `(5.5.5) left`; together with the zero-sum argument this puts `left`
    // on the fully inverted sequence.
    let cask_type = match bits {
        [false, false, false] => CaskType::new([5, 5, 5], Chirality::Right),
        [false, false, true] => CaskType::new([4, 6, 5], Chirality::Implied),
        [false, true, false] => CaskType::new([6, 5, 4], Chirality::Implied),
        [true, false, false] => CaskType::new([5, 4, 6], Chirality::Implied),
        [false, true, true] => CaskType::new([5, 6, 4], Chirality::Implied),
        [true, false, true] => CaskType::new([4, 5, 6], Chirality::Implied),
        [true, true, false] => CaskType::new([6, 4, 5], Chirality::Implied),
        [true, true, true] => CaskType::new([5, 5, 5], Chirality::Left),
    };
    let inversions = bits.iter().filter(|&&b| b).count() as u8;
    let x_sequence: [Label; 6] = labels.try_into().expect("six pair labels");
    Ok(SouthCaskReading {
        cask_type,
        x_sequence,
        inversions,
    })
}

/// Gon counts of the three facets through a pole, indexed by coordinate
/// slot; errors unless all three axis facets exist.
pub fn polar_gons(p: &AlcovedPolytope, pole: Pole) -> Result<[u8; 3], ClassifyError> {
    let mut gons = [0u8; 3];
    for k in 0..3 {
        let id = match pole {
            Pole::North => ConstraintId { row: 3, col: k },
            Pole::South => ConstraintId { row: k, col: 3 },
        };
        let g = p
            .gon_of_constraint(id)
            .ok_or(ClassifyError::NotMaximal { f: p.f_vector() })?;
        gons[k] = g as u8;
    }
    Ok(gons)
}

/// The positive value of a possibly absent cant length.
pub fn cant_value(s: &TropScalar) -> Option<&Rational> {
    s.finite().filter(|r| r.is_positive())
}
