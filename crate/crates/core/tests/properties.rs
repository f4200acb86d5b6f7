use gammans::gamma::{gamma_cohomology, schur_dim, schur_weyl_wedge};
use gammans::rep_ring::lr_coefficient;
use gammans::scalar::{binomial, factorial};
use gammans::selfcheck::{count_standard_tableaux, lr_by_characters};
use gammans::{Module, Module64, Partition};
use proptest::prelude::*;

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn module(max_part: usize, max_len: usize) -> impl Strategy<Value = Module64> {
    (partition(max_part, max_len), 1u64..4).prop_map(|(p, c)| Module64::irreducible(p).scale(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_symmetric_and_transpose_invariant(lambda in partition(3, 3), mu in partition(3, 3)) {
        let n = lambda.size() + mu.size();
        for nu in Partition::all(n) {
            let c: u64 = lr_coefficient(&lambda, &mu, &nu);
            prop_assert_eq!(c, lr_coefficient::<u64>(&mu, &lambda, &nu));
            prop_assert_eq!(c, lr_coefficient::<u64>(&lambda.transpose(), &mu.transpose(), &nu.transpose()));
        }
    }

    #[test]
    fn lr_matches_characters(lambda in partition(3, 2), mu in partition(3, 2)) {
        for nu in Partition::all(lambda.size() + mu.size()) {
            let c: u64 = lr_coefficient(&lambda, &mu, &nu);
            prop_assert_eq!(i128::from(c), lr_by_characters(&lambda, &mu, &nu).unwrap());
        }
    }

    #[test]
    fn induction_is_associative(a in module(2, 2), b in module(2, 2), c in module(2, 2)) {
        let left = a.induction_product(&b).induction_product(&c);
        let right = a.induction_product(&b.induction_product(&c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn induction_is_commutative(a in module(3, 2), b in module(3, 2)) {
        prop_assert_eq!(a.induction_product(&b), b.induction_product(&a));
    }

    #[test]
    fn induction_dimension(a in module(3, 2), b in module(3, 2)) {
        let n = a.degree() + b.degree();
        let expected = binomial::<u64>(n, a.degree()) * a.dimension() * b.dimension();
        prop_assert_eq!(a.induction_product(&b).dimension(), expected);
    }

    #[test]
    fn frobenius_reciprocity(nu in partition(4, 3), cut in 0usize..12) {
        let m = cut % (nu.size() + 1);
        let restricted = Module64::irreducible(nu.clone()).restrict(m).unwrap();
        for lambda in Partition::all(m) {
            let expected: u64 = Partition::all(nu.size() - m)
                .iter()
                .map(|mu| lr_coefficient::<u64>(&lambda, mu, &nu) * mu.dim_irreducible::<u64>())
                .sum();
            prop_assert_eq!(restricted.multiplicity(&lambda), expected);
        }
    }

    #[test]
    fn restriction_preserves_dimension(nu in partition(4, 4)) {
        let m = Module64::irreducible(nu.clone());
        if nu.size() > 0 {
            prop_assert_eq!(m.restrict(nu.size() - 1).unwrap().dimension(), m.dimension());
        }
    }

    #[test]
    fn alternating_twist(a in module(3, 3)) {
        prop_assert_eq!(a.tensor_alt().tensor_alt(), a.clone());
        prop_assert_eq!(a.tensor_alt().dimension(), a.dimension());
    }

    #[test]
    fn dimension_is_tableau_count(lambda in partition(5, 5)) {
        prop_assert_eq!(lambda.dim_irreducible::<u128>(), count_standard_tableaux(&lambda));
        prop_assert_eq!(lambda.transpose().transpose(), lambda.clone());
    }

    #[test]
    fn partition_text_round_trip(lambda in partition(6, 8)) {
        let text = lambda.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), lambda);
    }

    #[test]
    fn module_text_round_trip(a in module(3, 3), b in module(3, 3)) {
        let sum = a.induction_product(&b).convert::<gammans::BigNat>();
        let text = sum.to_string();
        prop_assert_eq!(Module::parse(&text, sum.degree()).unwrap(), sum);
    }

    #[test]
    fn exterior_power_schur_weyl(rank in 1usize..4, q in 0usize..7) {
        // dim Λ^q(k^rank ⊗ k^N) summed through Schur-Weyl duality
        let n = 3;
        let total: u64 = schur_weyl_wedge(rank, q)
            .iter()
            .map(|(w, conj)| schur_dim::<u64>(&w.0, rank) * schur_dim::<u64>(conj, n))
            .sum();
        prop_assert_eq!(total, binomial::<u64>(rank * n, q));
    }

    #[test]
    fn rank_two_cohomology_has_expected_shapes(s in 0usize..12, m in 0usize..3) {
        let module: Module64 = gamma_cohomology(2, s, 4 * m).unwrap();
        for lambda in module.support() {
            prop_assert!(lambda.contains(&Partition::rectangle(2, 2 * m)));
            prop_assert!(lambda.length() <= 2 * m + 1);
        }
    }
}

#[test]
fn sum_of_squared_dimensions() {
    for n in 0..=10 {
        let total: u128 = Partition::all(n).iter().map(|l| l.dim_irreducible::<u128>().pow(2)).sum();
        assert_eq!(total, factorial::<u128>(n));
    }
}
