//! The order-12 group of cube symmetries fixing the polar diagonal,
//! isomorphic to Z_2 x Sigma_3, with its action on normal idempotent
//! matrices and, through the homomorphism `theta`, on 6-tuples.

use std::fmt;
use std::ops::{Mul, Neg};
use std::sync::LazyLock;

use crate::trop::Rational;

use super::{check_ni, NiMatrix};

/// A sign, ordered `Minus < Plus` so that lexicographic minima over sign
/// tuples treat `-` as the smaller symbol.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn of(r: &Rational) -> Option<Sign> {
        match r.cmp(&Rational::from_integer(0.into())) {
            std::cmp::Ordering::Less => Some(Sign::Minus),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(Sign::Plus),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A permutation of `{0, 1, 2}` stored as its image list.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm3 {
    img: [u8; 3],
}

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3 { img: [0, 1, 2] };

    pub fn new(img: [u8; 3]) -> Option<Perm3> {
        let mut sorted = img;
        sorted.sort_unstable();
        (sorted == [0, 1, 2]).then_some(Perm3 { img })
    }

    pub fn transposition(i: usize, j: usize) -> Perm3 {
        let mut img = [0u8, 1, 2];
        img.swap(i, j);
        Perm3 { img }
    }

    pub fn all() -> [Perm3; 6] {
        [
            Perm3 { img: [0, 1, 2] },
            Perm3 { img: [0, 2, 1] },
            Perm3 { img: [1, 0, 2] },
            Perm3 { img: [1, 2, 0] },
            Perm3 { img: [2, 0, 1] },
            Perm3 { img: [2, 1, 0] },
        ]
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// Functional composition: `(a.compose(b))(i) = a(b(i))`.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3 {
            img: [0, 1, 2].map(|i| self.img[other.img[i] as usize]),
        }
    }

    pub fn inverse(&self) -> Perm3 {
        let mut img = [0u8; 3];
        for i in 0..3 {
            img[self.img[i] as usize] = i as u8;
        }
        Perm3 { img }
    }

    pub fn parity(&self) -> Sign {
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if self.img[i] > self.img[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn cycle_notation(&self) -> String {
        if *self == Perm3::IDENTITY {
            return "id".to_string();
        }
        let mut seen = [false; 3];
        let mut out = String::new();
        for start in 0..3 {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push('(');
            for v in cycle {
                out.push_str(&(v + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

/// An element `+tau` or `-tau` of the group `Z_2 x Sigma_3`.
///
/// On a normal idempotent matrix, `-id` acts by transposition, `-(ij)` by
/// conjugation with the permutation matrix of `(ij)`, and the Polar Exchange
/// `+(ij)` by conjugating the transpose.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    pub sign: Sign,
    pub perm: Perm3,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        sign: Sign::Plus,
        perm: Perm3::IDENTITY,
    };

    pub fn new(sign: Sign, perm: Perm3) -> GroupElement {
        GroupElement { sign, perm }
    }

    pub fn transposition(sign: Sign, i: usize, j: usize) -> GroupElement {
        GroupElement {
            sign,
            perm: Perm3::transposition(i, j),
        }
    }

    /// All twelve elements, in a fixed deterministic order.
    pub fn all() -> [GroupElement; 12] {
        let mut out = [GroupElement::IDENTITY; 12];
        let mut idx = 0;
        for sign in [Sign::Plus, Sign::Minus] {
            for perm in Perm3::all() {
                out[idx] = GroupElement { sign, perm };
                idx += 1;
            }
        }
        out
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            sign: self.sign * other.sign,
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            sign: self.sign,
            perm: self.perm.inverse(),
        }
    }

    /// The action on order-4 normal idempotent matrices. Transposes whenever
    /// `sign * parity(perm)` is negative, then relabels indices by the
    /// inverse permutation (index 3 stays fixed); this reproduces the three
    /// generator rules and extends them to a group action.
    pub fn act_on_matrix(&self, a: &NiMatrix) -> NiMatrix {
        let chi = self.sign * self.perm.parity();
        let base = match chi {
            Sign::Minus => a.as_matrix().transpose(),
            Sign::Plus => a.as_matrix().clone(),
        };
        let inv = self.perm.inverse();
        let sigma = [inv.apply(0), inv.apply(1), inv.apply(2), 3];
        let m = base.permute_conjugate(&sigma).expect("permutation of 0..4");
        check_ni(m).expect("the group action preserves normal idempotency")
    }

    /// Image under the homomorphism into signed permutations of six
    /// positions. Generator images: `-id` maps to the three-position shift
    /// `+(14)(25)(36)`, `+(12)` to `-(26)(35)`, `+(13)` to `-(15)(24)` and
    /// `+(23)` to `-(13)(46)`.
    pub fn theta(&self) -> &'static SignedPerm6 {
        let pos = Self::all()
            .iter()
            .position(|g| g == self)
            .expect("element of the group");
        &THETA_TABLE[pos]
    }

    /// Applies `theta` to a 6-tuple: permute positions, then negate every
    /// entry if the sign is `-`.
    pub fn act_on_tuple<T>(&self, v: &[T; 6]) -> [T; 6]
    where
        T: Clone + Neg<Output = T>,
    {
        self.theta().act(v)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign, self.perm.cycle_notation())
    }
}

/// A signed permutation of six positions, acting on 6-tuples by
/// `(s, pi) . v = s * (v_{pi(1)}, ..., v_{pi(6)})`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm6 {
    sign: Sign,
    img: [u8; 6],
}

impl SignedPerm6 {
    pub const IDENTITY: SignedPerm6 = SignedPerm6 {
        sign: Sign::Plus,
        img: [0, 1, 2, 3, 4, 5],
    };

    pub fn new(sign: Sign, img: [u8; 6]) -> Option<SignedPerm6> {
        let mut sorted = img;
        sorted.sort_unstable();
        (sorted == [0, 1, 2, 3, 4, 5]).then_some(SignedPerm6 { sign, img })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn act<T>(&self, v: &[T; 6]) -> [T; 6]
    where
        T: Clone + Neg<Output = T>,
    {
        let permuted = self.img.map(|p| v[p as usize].clone());
        match self.sign {
            Sign::Plus => permuted,
            Sign::Minus => permuted.map(|x| -x),
        }
    }

    /// Composition compatible with the tuple action:
    /// `a.compose(b).act(v) = a.act(&b.act(v))`.
    pub fn compose(&self, other: &SignedPerm6) -> SignedPerm6 {
        SignedPerm6 {
            sign: self.sign * other.sign,
            img: self.img.map(|i| other.img[i as usize]),
        }
    }

    fn cycle_notation(&self) -> String {
        if self.img == SignedPerm6::IDENTITY.img {
            return "id".to_string();
        }
        let mut seen = [false; 6];
        let mut out = String::new();
        for start in 0..6 {
            if seen[start] || self.img[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.img[start] as usize;
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.img[cur] as usize;
            }
            out.push('(');
            for v in cycle {
                out.push_str(&(v + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for SignedPerm6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign, self.cycle_notation())
    }
}

/// Lookup table for `theta`, indexed as in [`GroupElement::all`]. Built once
/// by composing the four generator images; the homomorphism law is asserted
/// over all 144 pairs during initialization.
static THETA_TABLE: LazyLock<[SignedPerm6; 12]> = LazyLock::new(|| {
    let minus_id = SignedPerm6::new(Sign::Plus, [3, 4, 5, 0, 1, 2]).unwrap();
    let plus_01 = SignedPerm6::new(Sign::Minus, [0, 5, 4, 3, 2, 1]).unwrap();
    let plus_02 = SignedPerm6::new(Sign::Minus, [4, 3, 2, 1, 0, 5]).unwrap();
    let plus_12 = SignedPerm6::new(Sign::Minus, [2, 1, 0, 5, 4, 3]).unwrap();

    let generator_image = |i: usize, j: usize| match (i, j) {
        (0, 1) => plus_01,
        (0, 2) => plus_02,
        (1, 2) => plus_12,
        _ => unreachable!(),
    };

    // Decompose each permutation into transpositions and push the images
    // through, composing in group order.
    let image_of = |g: &GroupElement| -> SignedPerm6 {
        let mut word: Vec<SignedPerm6> = Vec::new();
        if g.sign == Sign::Minus {
            word.push(minus_id);
        }
        let mut remaining = g.perm;
        while remaining != Perm3::IDENTITY {
            // peel off one transposition from the left
            let mut found = None;
            'outer: for i in 0..3 {
                for j in i + 1..3 {
                    let t = Perm3::transposition(i, j);
                    let shorter = t.compose(&remaining);
                    if count_moved(&shorter) < count_moved(&remaining) {
                        found = Some((i, j, shorter));
                        break 'outer;
                    }
                }
            }
            let (i, j, shorter) = found.expect("every non-identity permutation moves something");
            word.push(generator_image(i, j));
            remaining = shorter;
        }
        word.iter()
            .fold(SignedPerm6::IDENTITY, |acc, img| acc.compose(img))
    };

    let elements = GroupElement::all();
    let table: Vec<SignedPerm6> = elements.iter().map(image_of).collect();
    let table: [SignedPerm6; 12] = table.try_into().unwrap();

    // Homomorphism and injectivity checks.
    for (gi, g) in elements.iter().enumerate() {
        for (hi, h) in elements.iter().enumerate() {
            let gh = g.compose(h);
            let pos = elements.iter().position(|e| *e == gh).unwrap();
            assert_eq!(
                table[pos],
                table[gi].compose(&table[hi]),
                "theta must be a homomorphism at {g} * {h}"
            );
        }
    }
    for i in 0..12 {
        for j in i + 1..12 {
            assert_ne!(table[i], table[j], "theta must be injective");
        }
    }
    table
});

fn count_moved(p: &Perm3) -> usize {
    (0..3).filter(|&i| p.apply(i) != i).count()
}
