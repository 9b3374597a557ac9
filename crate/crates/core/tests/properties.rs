mod common;

use common::*;
use lieho::funcalc::Representation;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn letter_action_on_lie_tensors((r, n) in (1usize..4).prop_flat_map(|r| (Just(r), r..r + 3)), v in any::<bool>(), g in any::<u64>(), h in any::<u64>()) {
        let s = lie_space(r, n, v);
        prop_assert!(letter_action_is_homomorphism(&s, &perm(n, g), &perm(n, h)));
    }

    #[test]
    fn slot_action_on_lie_tensors((r, n) in (1usize..4).prop_flat_map(|r| (Just(r), r..r + 3)), v in any::<bool>(), g in any::<u64>(), p in any::<u64>()) {
        let s = lie_space(r, n, v);
        prop_assert!(slot_action_commutes(&s, &perm(n, g), &perm(r, p)));
    }

    #[test]
    fn letter_action_on_functor_bases(idx in 0usize..6, g in any::<u64>(), h in any::<u64>()) {
        let s = ["L3*T1*T1", "L2*L2", "G3", "G2*L2*T1", "L4*T2", "L1*G2*L1"][idx];
        let b = shape_basis(s);
        let n = b.letter_degree();
        prop_assert!(letter_action_is_homomorphism(&b, &perm(n, g), &perm(n, h)));
        prop_assert!(bookkeeping_holds(&b));
    }

    #[test]
    fn slot_action_on_shape_orbits(idx in 0usize..3, g in any::<u64>(), p in any::<u64>()) {
        let o = orbit(["L3*T1*T1", "L2*L2*T1", "L3*G2"][idx]);
        prop_assert!(slot_action_commutes(&o, &perm(o.letter_degree(), g), &perm(o.slot_degree(), p)));
    }

    #[test]
    fn decompositions_account_for_dimension((r, n) in (0usize..4).prop_flat_map(|r| (Just(r), 0..r + 3))) {
        prop_assert!(h1_bookkeeping_holds(r, n));
        prop_assert!(bookkeeping_holds(&lie_space(r, n, true)));
    }
}

#[test]
fn character_tables_are_orthogonal() {
    for n in 0..=8 {
        assert!(character_table_orthogonal(n), "n = {n}");
    }
}
