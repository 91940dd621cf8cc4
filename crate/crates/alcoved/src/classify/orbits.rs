//! The eight orbits of sign 6-tuples under the induced group action, and
//! the quasi-Euclidean class lookup.

use std::fmt;
use std::sync::LazyLock;

use crate::ni::{DifferenceTuple, GroupElement, Sign};

use super::ClassifyError;

/// A tuple of six signs; the sign pattern of a difference tuple.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignTuple(pub [Sign; 6]);

impl SignTuple {
    pub fn of(d: &DifferenceTuple) -> Result<SignTuple, ClassifyError> {
        let mut s = [Sign::Plus; 6];
        for k in 0..6 {
            s[k] = Sign::of(d.get(k)).ok_or(ClassifyError::ZeroComponent { index: k })?;
        }
        Ok(SignTuple(s))
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&s| s == self.0[0])
    }

    /// All 62 non-constant sign tuples, in lexicographic order.
    pub fn all_non_constant() -> Vec<SignTuple> {
        let mut out = Vec::with_capacity(62);
        for bits in 0..64u32 {
            let tuple = SignTuple(std::array::from_fn(|k| {
                if bits & (1 << (5 - k)) != 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }));
            if !tuple.is_constant() {
                out.push(tuple);
            }
        }
        out
    }

    pub fn acted_by(&self, g: &GroupElement) -> SignTuple {
        SignTuple(g.act_on_tuple(&self.0))
    }

    /// Lexicographically smallest element of the orbit, with `-` below `+`.
    pub fn canonical(&self) -> SignTuple {
        GroupElement::all()
            .iter()
            .map(|g| self.acted_by(g))
            .min()
            .expect("twelve group elements")
    }
}

impl fmt::Display for SignTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One quasi-Euclidean class: an orbit of sign tuples under the group
/// action, indexed 1 through 8.
#[derive(Clone, Debug)]
pub struct QeClass {
    index: u8,
    representative: SignTuple,
    orbit: Vec<SignTuple>,
}

impl QeClass {
    pub fn index(&self) -> u8 {
        self.index
    }

    /// The canonical (lexicographically smallest) member of the orbit.
    pub fn representative(&self) -> SignTuple {
        self.representative
    }

    pub fn orbit(&self) -> &[SignTuple] {
        &self.orbit
    }

    pub fn size(&self) -> usize {
        self.orbit.len()
    }

    /// The class of the coarser combinatorial classification this class
    /// refines into.
    pub fn combinatorial_class(&self) -> u8 {
        combinatorial_class(self.index)
    }
}

impl fmt::Display for QeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QE{}", self.index)
    }
}

/// Combinatorial class of a quasi-Euclidean class index.
pub fn combinatorial_class(qe_index: u8) -> u8 {
    match qe_index {
        1 => 6,
        2 => 2,
        3 => 1,
        4 => 4,
        5 => 5,
        6 => 1,
        7 => 3,
        8 => 2,
        other => panic!("quasi-Euclidean class index {other} out of range"),
    }
}

/// Sign patterns of the difference tuples of the eight shipped class
/// representatives; they name the orbits.
const CLASS_SIGNS: [[bool; 6]; 8] = [
    // true = plus
    [false, false, true, false, false, true],  // QE1
    [false, false, false, false, true, true],  // QE2
    [true, false, false, false, true, true],   // QE3
    [false, false, true, false, true, true],   // QE4
    [true, false, false, true, true, false],   // QE5
    [false, true, false, true, false, true],   // QE6
    [false, false, false, false, false, true], // QE7
    [false, false, false, true, false, true],  // QE8
];

fn class_sign_tuple(k: usize) -> SignTuple {
    SignTuple(CLASS_SIGNS[k].map(|plus| if plus { Sign::Plus } else { Sign::Minus }))
}

/// The eight orbits, computed once: the 62 non-constant sign tuples are
/// partitioned by the twelve-element action and named after the shipped
/// representatives. Orbit membership, sizes and the partition property are
/// asserted during initialization.
pub fn compute_orbits() -> &'static [QeClass; 8] {
    &ORBITS
}

static ORBITS: LazyLock<[QeClass; 8]> = LazyLock::new(|| {
    let all = SignTuple::all_non_constant();
    let mut classes: Vec<QeClass> = Vec::new();
    for k in 0..8 {
        let seed = class_sign_tuple(k);
        let mut orbit: Vec<SignTuple> = GroupElement::all()
            .iter()
            .map(|g| seed.acted_by(g))
            .collect();
        orbit.sort();
        orbit.dedup();
        classes.push(QeClass {
            index: (k + 1) as u8,
            representative: orbit[0],
            orbit,
        });
    }
    let total: usize = classes.iter().map(QeClass::size).sum();
    assert_eq!(
        total, 62,
        "orbits must cover the 62 non-constant sign tuples"
    );
    for t in &all {
        let hits = classes.iter().filter(|c| c.orbit.contains(t)).count();
        assert_eq!(hits, 1, "{t} must lie in exactly one orbit");
    }
    let mut sizes: Vec<usize> = classes.iter().map(QeClass::size).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 6, 6, 6, 6, 12, 12, 12]);
    classes.try_into().expect("eight classes")
});

/// The quasi-Euclidean class of a sign tuple.
pub fn qe_class_of_signs(s: &SignTuple) -> Result<&'static QeClass, ClassifyError> {
    if s.is_constant() {
        return Err(ClassifyError::ConstantTuple);
    }
    Ok(compute_orbits()
        .iter()
        .find(|c| c.orbit.contains(s))
        .expect("non-constant tuples are covered by the eight orbits"))
}

/// The quasi-Euclidean class of a difference tuple. Zero components signal a
/// non-maximal polyhedron and are rejected; constant sign patterns cannot
/// arise because the components sum to zero.
pub fn qe_class(d: &DifferenceTuple) -> Result<&'static QeClass, ClassifyError> {
    qe_class_of_signs(&SignTuple::of(d)?)
}
