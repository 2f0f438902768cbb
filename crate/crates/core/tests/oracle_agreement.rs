//! Cross-checks between the two exact oracles, the greedy variants and the
//! first-deletion lower bound.

use grdisc_core::constructions::random_uniform;
use grdisc_core::{
    binomial, evaluate_ordering, exact_grdisc_dp, exact_grdisc_enum, first_deletion_bound, order,
    DiscContext, GreedyVariant,
};

fn seeded_instance(n: usize, k: usize, seed: u64) -> grdisc_core::UniformHypergraph {
    let max = binomial(n as i64, k as i64).unwrap() as u64;
    let m = if max == 0 { 0 } else { (seed.wrapping_mul(2654435761) >> 7) % (max + 1) };
    random_uniform(n, k, m as usize, seed).unwrap().hypergraph
}

#[test]
fn dp_equals_enumeration() {
    for seed in 0..80u64 {
        let n = 1 + (seed as usize % 7);
        for k in [2, 3] {
            let h = seeded_instance(n, k, seed);
            let dp = exact_grdisc_dp(&h).unwrap();
            let en = exact_grdisc_enum(&h).unwrap();
            assert_eq!(dp.scaled, en, "n={n} k={k} seed={seed}");
        }
    }
}

#[test]
fn bound_ordering_chain() {
    // first-deletion <= exact <= best greedy <= theorem bound, exactly.
    for seed in 0..40u64 {
        let n = 2 + (seed as usize % 9);
        let h = seeded_instance(n, 2, seed.wrapping_add(1000));
        let ctx = DiscContext::for_hypergraph(&h).unwrap();
        let fdb = first_deletion_bound(&h).unwrap();
        let dp = exact_grdisc_dp(&h).unwrap();
        let best_greedy = [GreedyVariant::ProofRule, GreedyVariant::ExactGreedy]
            .into_iter()
            .map(|v| order(&h, v).unwrap().profile.max_abs_scaled)
            .min()
            .unwrap();
        let bound = ctx.theorem_bound_scaled().unwrap();
        assert!(fdb <= dp.scaled, "seed={seed}");
        assert!(dp.scaled <= best_greedy, "seed={seed}");
        assert!(best_greedy <= bound, "seed={seed}");
    }
}

#[test]
fn dp_witness_reproduces_value() {
    for seed in 0..30u64 {
        let n = 1 + (seed as usize % 10);
        let h = seeded_instance(n, 2, seed.wrapping_add(77));
        let dp = exact_grdisc_dp(&h).unwrap();
        let profile = evaluate_ordering(&h, &dp.ordering).unwrap();
        assert_eq!(profile.max_abs_scaled, dp.scaled, "seed={seed}");
    }
}

#[test]
fn dp_handles_k3_instances() {
    for seed in 0..20u64 {
        let n = 3 + (seed as usize % 6);
        let h = seeded_instance(n, 3, seed.wrapping_add(31));
        let dp = exact_grdisc_dp(&h).unwrap();
        let en = exact_grdisc_enum(&h).unwrap();
        assert_eq!(dp.scaled, en);
        let profile = evaluate_ordering(&h, &dp.ordering).unwrap();
        assert_eq!(profile.max_abs_scaled, dp.scaled);
    }
}
