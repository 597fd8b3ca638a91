//! Exact scalars, matrices and subspaces over `F_p` or the rationals, plus
//! the q-analogue counting functions.

mod field;
mod gauss;
mod mat;
mod subspace;

pub use field::{FieldKind, FieldSpec, Scalar};
pub(crate) use gauss::all_subspaces;
pub use gauss::{
    enumerate_subspaces, gaussian_binomial, pivot_patterns, s_number, subspaces_with_pivots,
    SubspaceIter,
};
pub use mat::{apply, image, kernel, rref, Mat};
pub use subspace::{contains, intersect, leq, sum, Subspace};

#[cfg(test)]
mod proptests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn field() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![Just(2u64), Just(3), Just(5)].prop_map(|p| FieldSpec::prime(p).unwrap())
    }

    fn mat_in(f: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(-4i64..5, rows * cols)
            .prop_map(move |v| Mat::from_ints(f, rows, cols, &v).unwrap())
    }

    fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
        (field(), 0usize..=5, 0usize..=5, 0usize..=5).prop_flat_map(|(f, n, ra, rb)| {
            (mat_in(f, ra, n), mat_in(f, rb, n))
                .prop_map(|(a, b)| (Subspace::from_mat(a), Subspace::from_mat(b)))
        })
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_row_space_preserving(
            m in (field(), 0usize..5, 0usize..5).prop_flat_map(|(f, r, c)| mat_in(f, r, c))
        ) {
            let (r, rank) = m.rref();
            prop_assert_eq!(r.rref(), (r.clone(), rank));
            prop_assert_eq!(Subspace::from_mat(m.clone()), Subspace::from_mat(r));
            prop_assert_eq!(m.kernel().dim() + rank, m.cols());
        }

        #[test]
        fn modular_law((a, b) in subspace_pair()) {
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert!(i.leq(&a).unwrap() && i.leq(&b).unwrap());
            prop_assert!(a.leq(&s).unwrap() && b.leq(&s).unwrap());
        }

        #[test]
        fn gaussian_symmetry(t in 0u32..8, q in 1u64..6, l in 0u32..8) {
            prop_assume!(l <= t);
            prop_assert_eq!(
                gaussian_binomial(t, l, q).unwrap(),
                gaussian_binomial(t, t - l, q).unwrap()
            );
        }

        #[test]
        fn gaussian_at_one_is_binomial(t in 0u32..20, l in 0u32..20) {
            prop_assume!(l <= t);
            let mut b = BigInt::from(1);
            for i in 0..l {
                b = b * (t - i) / (i + 1);
            }
            prop_assert_eq!(gaussian_binomial(t, l, 1).unwrap(), b);
        }
    }
}
