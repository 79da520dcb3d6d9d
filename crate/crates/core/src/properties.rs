//! Property tests for the algebraic invariants the rest of the crate relies on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use crate::abgroup::{cokernel, smith_normal_form, FgAbGroup, IntMatrix, Order};
use crate::functors::{ext, hom, tensor, tor};
use crate::moorecalc::{smash_decompose, MooreAtom, StemTable};
use crate::opsclassify::{basic_range_check, count_special_ops, ext_ops_enumerate, OperationType};

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-12i64..=12, r * c).prop_map(move |v| {
            IntMatrix::from_entries(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn group() -> impl Strategy<Value = FgAbGroup> {
    (0usize..=1, prop::collection::vec(2u64..=12, 0..=3)).prop_map(|(free, orders)| {
        FgAbGroup::from_parts(free, orders.into_iter().map(BigInt::from)).unwrap()
    })
}

fn finite_group() -> impl Strategy<Value = FgAbGroup> {
    prop::collection::vec(2u64..=12, 0..=3)
        .prop_map(|orders| FgAbGroup::from_cyclic_orders(orders.into_iter().map(BigInt::from)))
}

/// A random elementary operation applied to rows (`true`) or columns.
#[derive(Clone, Debug)]
enum Move {
    Swap(bool, usize, usize),
    Add(bool, usize, usize, i64),
    Negate(usize),
}

fn moves() -> impl Strategy<Value = Vec<Move>> {
    let m = prop_oneof![
        (any::<bool>(), 0usize..4, 0usize..4).prop_map(|(r, a, b)| Move::Swap(r, a, b)),
        (any::<bool>(), 0usize..4, 0usize..4, -3i64..=3)
            .prop_map(|(r, a, b, k)| Move::Add(r, a, b, k)),
        (0usize..4).prop_map(Move::Negate),
    ];
    prop::collection::vec(m, 0..12)
}

fn apply(m: &mut IntMatrix, mv: &Move) {
    let (rows, cols) = (m.rows(), m.cols());
    match *mv {
        Move::Swap(true, a, b) => m.swap_rows(a % rows, b % rows),
        Move::Swap(false, a, b) => m.swap_cols(a % cols, b % cols),
        Move::Add(true, a, b, k) if a % rows != b % rows => {
            m.add_row_multiple(a % rows, b % rows, &BigInt::from(k))
        }
        Move::Add(false, a, b, k) if a % cols != b % cols => {
            m.add_col_multiple(a % cols, b % cols, &BigInt::from(k))
        }
        Move::Add(..) => {}
        Move::Negate(i) => m.negate_row(i % rows),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_is_a_divisibility_chain(m in matrix()) {
        let s = smith_normal_form(&m);
        for w in s.invariants.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(s.invariants.iter().all(|d| *d > BigInt::zero()));
    }

    #[test]
    fn snf_invariant_under_unimodular_moves(m in matrix(), ops in moves()) {
        let mut n = m.clone();
        for op in &ops {
            apply(&mut n, op);
        }
        prop_assert_eq!(smith_normal_form(&m).invariants, smith_normal_form(&n).invariants);
        prop_assert_eq!(cokernel(&m), cokernel(&n));
    }

    #[test]
    fn cokernel_invariant_under_permutation(m in matrix(), a in 0usize..4, b in 0usize..4) {
        let mut n = m.clone();
        n.swap_rows(a % m.rows(), b % m.rows());
        n.swap_cols(a % m.cols(), b % m.cols());
        prop_assert_eq!(cokernel(&m), cokernel(&n));
    }

    #[test]
    fn direct_sum_commutative_associative(a in group(), b in group(), c in group()) {
        prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        prop_assert_eq!(a.direct_sum(&FgAbGroup::trivial()), a);
    }

    #[test]
    fn symmetric_functors(a in group(), b in group()) {
        prop_assert_eq!(tensor(&a, &b), tensor(&b, &a));
        prop_assert_eq!(tor(&a, &b), tor(&b, &a));
    }

    #[test]
    fn functors_additive(a in group(), b in group(), c in group()) {
        let bc = b.direct_sum(&c);
        prop_assert_eq!(tensor(&a, &bc), tensor(&a, &b).direct_sum(&tensor(&a, &c)));
        prop_assert_eq!(tor(&a, &bc), tor(&a, &b).direct_sum(&tor(&a, &c)));
        prop_assert_eq!(hom(&a, &bc), hom(&a, &b).direct_sum(&hom(&a, &c)));
        prop_assert_eq!(hom(&bc, &a), hom(&b, &a).direct_sum(&hom(&c, &a)));
        prop_assert_eq!(ext(&a, &bc), ext(&a, &b).direct_sum(&ext(&a, &c)));
        prop_assert_eq!(ext(&bc, &a), ext(&b, &a).direct_sum(&ext(&c, &a)));
    }

    #[test]
    fn finite_hom_ext_same_order(a in finite_group(), b in finite_group()) {
        // Over finite groups Hom(A, B), Ext(A, B), A ⊗ B and Tor(A, B) are all
        // non-canonically isomorphic.
        let h = hom(&a, &b);
        prop_assert_eq!(&ext(&a, &b), &h);
        prop_assert_eq!(&tensor(&a, &b), &h);
        prop_assert_eq!(&tor(&a, &b), &h);
    }

    #[test]
    fn stem_zero_is_identity(g in group(), n in 2u32..10) {
        let table = StemTable::builtin();
        prop_assert_eq!(table.stem(&g, 0, n).unwrap(), g);
    }

    #[test]
    fn smash_decomposition_symmetric(a in group(), b in group(), p in 2u32..7, q in 2u32..7) {
        let (Some(x), Some(y)) = (MooreAtom::new(a, p).unwrap(), MooreAtom::new(b, q).unwrap()) else {
            return Ok(());
        };
        match (smash_decompose(&x, &y), smash_decompose(&y, &x)) {
            (Ok(l), Ok(r)) => prop_assert_eq!(l, r),
            (Err(l), Err(r)) => prop_assert_eq!(l.kind(), r.kind()),
            (l, r) => prop_assert!(false, "asymmetric: {:?} vs {:?}", l, r),
        }
    }

    #[test]
    fn range_monotone_in_q3(g in group(), q1 in 3u32..8, q2 in 3u32..8, q3 in 2u32..20) {
        let at = |q3: u32| {
            let t = OperationType::new(g.clone(), g.clone(), g.clone(), q1, q2, q3).unwrap();
            basic_range_check(&t).verdict.holds()
        };
        if at(q3 + 1) {
            prop_assert!(at(q3));
        }
    }

    #[test]
    fn whitehead_count_one_for_free_coefficients(r1 in 1usize..3, r2 in 1usize..3, q1 in 3u32..7, q2 in 3u32..7) {
        let (g1, g2) = (FgAbGroup::free(r1), FgAbGroup::free(r2));
        let t = OperationType::new(g1.clone(), g2.clone(), tensor(&g1, &g2), q1, q2, q1 + q2 - 1).unwrap();
        let c = count_special_ops(&t, &StemTable::builtin()).unwrap();
        prop_assert_eq!(c.count, Order::Finite(BigInt::one()));
    }

    #[test]
    fn ext_operation_count(k in 2u64..40, q1 in 3u32..9, q2 in 3u32..9) {
        let ops = ext_ops_enumerate(k, q1, q2).unwrap();
        prop_assert_eq!(ops.operations.len() as u64, k);
        prop_assert_eq!(ops.operations.iter().filter(|o| o.is_zero).count(), 1);
    }
}
