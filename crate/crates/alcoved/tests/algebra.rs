//! Semiring, 2-minor and distance properties of the exact tropical layer.

mod common;

use alcoved::trop::{rat, ratio, trop_distance, Point, Rational, TropMatrix, TropScalar};
use num_traits::Zero;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = TropScalar> {
    prop_oneof![
        1 => Just(TropScalar::NegInf),
        9 => (-200i64..=200, 1i64..=6).prop_map(|(n, d)| TropScalar::Finite(ratio(n, d))),
    ]
}

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn point(dim: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(rational(), dim).prop_map(Point::new)
}

fn finite_matrix() -> impl Strategy<Value = TropMatrix> {
    prop::collection::vec(rational(), 16).prop_map(|v| {
        let rows = v
            .chunks(4)
            .map(|c| c.iter().cloned().map(TropScalar::Finite).collect())
            .collect();
        TropMatrix::from_rows(rows).unwrap()
    })
}

proptest! {
    #[test]
    fn trop_add_is_associative_commutative_idempotent(a in scalar(), b in scalar(), c in scalar()) {
        let ab_c = a.trop_add(&b).trop_add(&c);
        let a_bc = a.trop_add(&b.trop_add(&c));
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(a.trop_add(&b), b.trop_add(&a));
        prop_assert_eq!(a.trop_add(&a), a);
    }

    #[test]
    fn trop_mul_distributes_over_trop_add(a in scalar(), b in scalar(), c in scalar()) {
        let lhs = a.trop_mul(&b.trop_add(&c));
        let rhs = a.trop_mul(&b).trop_add(&a.trop_mul(&c));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.trop_mul(&b), b.trop_mul(&a));
        prop_assert_eq!(a.trop_mul(&TropScalar::NegInf), TropScalar::NegInf);
    }

    #[test]
    fn matrix_product_is_associative(a in finite_matrix(), b in finite_matrix(), c in finite_matrix()) {
        let lhs = a.trop_mul(&b).unwrap().trop_mul(&c).unwrap();
        let rhs = a.trop_mul(&b.trop_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn two_minor_antisymmetry_and_cocycles(m in finite_matrix()) {
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let v = m.two_minor(i, j, k, l).unwrap();
                        prop_assert_eq!(&v, &(-m.two_minor(j, i, k, l).unwrap()));
                        prop_assert_eq!(&v, &(-m.two_minor(i, j, l, k).unwrap()));
                        if i == j || k == l {
                            prop_assert!(v.is_zero());
                        }
                    }
                }
            }
        }
        // cocycle in the row pair and in the column pair, through index 3
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let whole = m.two_minor(i, j, k, l).unwrap();
                        let row_split =
                            m.two_minor(i, 3, k, l).unwrap() + m.two_minor(3, j, k, l).unwrap();
                        let col_split =
                            m.two_minor(i, j, k, 3).unwrap() + m.two_minor(i, j, 3, l).unwrap();
                        prop_assert_eq!(&whole, &row_split);
                        prop_assert_eq!(&whole, &col_split);
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_preserves_idempotency(seed in 0u64..500, b in prop::collection::vec(rational(), 4)) {
        let a = common::random_ni(&mut common::rng(seed));
        let conjugated = a.as_matrix().conjugate(&b).unwrap();
        prop_assert!(conjugated.is_idempotent());
    }

    #[test]
    fn tropical_distance_is_a_metric(p in point(3), q in point(3), r in point(3)) {
        let dpq = trop_distance(&p, &q).unwrap();
        prop_assert!(dpq >= Rational::zero());
        prop_assert_eq!(dpq.is_zero(), p == q);
        prop_assert_eq!(&dpq, &trop_distance(&q, &p).unwrap());
        let dpr = trop_distance(&p, &r).unwrap();
        let drq = trop_distance(&r, &q).unwrap();
        prop_assert!(dpq <= dpr + drq);
    }

    #[test]
    fn tropical_distance_on_lattice_points_is_an_integer(
        a in prop::collection::vec(-50i64..=50, 3),
        b in prop::collection::vec(-50i64..=50, 3),
    ) {
        let d = trop_distance(&Point::from_ints(&a), &Point::from_ints(&b)).unwrap();
        prop_assert!(d.is_integer());
    }
}

#[test]
fn worked_distance_values() {
    assert_eq!(
        trop_distance(&Point::from_ints(&[1, 1]), &Point::from_ints(&[0, 0])).unwrap(),
        rat(1)
    );
    assert_eq!(
        trop_distance(&Point::from_ints(&[-5, -2]), &Point::from_ints(&[-2, -5])).unwrap(),
        rat(6)
    );
}

#[test]
fn idempotent_matrices_square_to_themselves() {
    let mut rng = common::rng(7);
    for _ in 0..50 {
        let a = common::random_ni(&mut rng);
        assert!(a.as_matrix().is_idempotent());
        let sq = a.as_matrix().trop_mul(a.as_matrix()).unwrap();
        assert_eq!(&sq, a.as_matrix());
    }
}
