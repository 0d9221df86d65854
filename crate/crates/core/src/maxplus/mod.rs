//! Exact max-plus arithmetic: `a ⊕ b = max(a, b)`, `a ⊗ b = a + b`, with
//! `-inf` as the tropical zero and `0` as the unit.

mod matrix;
mod scalar;
mod vector;

pub use matrix::Matrix;
pub use scalar::{tadd, tmul, Scalar};
pub use vector::{argmax_set, row_product, Vector};

#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn scalar() -> impl Strategy<Value = Scalar> {
        prop_oneof![
            1 => Just(Scalar::Bottom),
            6 => (-20i64..20, 1i64..4).prop_map(|(n, d)| Scalar::from_ratio(n, d)),
        ]
    }

    fn vector(len: usize) -> impl Strategy<Value = Vector> {
        proptest::collection::vec(scalar(), len).prop_map(Vector::new)
    }

    fn nonzero_vector(len: usize) -> impl Strategy<Value = Vector> {
        vector(len).prop_filter("nonzero", |v| !v.is_zero())
    }

    proptest! {
        #[test]
        fn semiring_laws(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(tadd(&a, &b), tadd(&b, &a));
            prop_assert_eq!(tadd(&tadd(&a, &b), &c), tadd(&a, &tadd(&b, &c)));
            prop_assert_eq!(tadd(&a, &a), a.clone());
            prop_assert_eq!(tadd(&a, &Scalar::Bottom), a.clone());
            prop_assert_eq!(tmul(&a, &b), tmul(&b, &a));
            prop_assert_eq!(tmul(&tmul(&a, &b), &c), tmul(&a, &tmul(&b, &c)));
            prop_assert_eq!(tmul(&a, &Scalar::unit()), a.clone());
            prop_assert_eq!(tmul(&a, &Scalar::Bottom), Scalar::Bottom);
            prop_assert_eq!(tmul(&a, &tadd(&b, &c)), tadd(&tmul(&a, &b), &tmul(&a, &c)));
        }

        #[test]
        fn mat_vec_is_linear(
            rows in proptest::collection::vec(vector(4), 0..5),
            x in vector(4), y in vector(4), l in scalar(), m in scalar(),
        ) {
            let mat = Matrix::from_rows(4, rows.into_iter().map(Vector::into_entries).collect()).unwrap();
            let lhs = mat.mat_vec(&x.scale(&l).oplus(&y.scale(&m))).unwrap();
            let rhs = mat.mat_vec(&x).unwrap().scale(&l).oplus(&mat.mat_vec(&y).unwrap().scale(&m));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn normalize_properties(x in nonzero_vector(5), y in nonzero_vector(5), z in nonzero_vector(5), l in -30i64..30) {
            let n = x.normalize().unwrap();
            prop_assert!(n.is_normalized());
            prop_assert_eq!(n.normalize().unwrap(), n.clone());
            prop_assert_eq!(x.scale(&Scalar::from_int(l)).normalize().unwrap(), n);
            // proportional is an equivalence relation
            prop_assert!(x.proportional(&x));
            prop_assert_eq!(x.proportional(&y), y.proportional(&x));
            if x.proportional(&y) && y.proportional(&z) {
                prop_assert!(x.proportional(&z));
            }
            prop_assert!(x.proportional(&x.scale(&Scalar::from_int(l))));
        }
    }
}
