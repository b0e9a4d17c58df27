//! Cross-checks of the canonical word engine against the naive
//! rescan-reduction oracle, plus property tests of the group axioms.

mod common;

use amalgam_core::{AmalgamContext, ElementOrder, Side};
use common::{canonical_parts, ctx35, oracle_multiply};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn multiply_agrees_with_oracle_on_random_pairs() {
    let ctx = ctx35();
    for t in 0..2_000u64 {
        let mut rng = AmalgamContext::trial_rng(1, 100, t);
        let w1 = ctx.random_word_with(&mut rng, (t % 6) as u32);
        let w2 = ctx.random_word_with(&mut rng, ((t / 6) % 6) as u32);
        assert_eq!(
            canonical_parts(&ctx.multiply(&w1, &w2)),
            oracle_multiply(ctx, &w1, &w2),
            "pair {t}"
        );
    }
}

#[test]
fn embed_products_agree_with_oracle_across_both_factors() {
    let ctx = ctx35();
    for t in 0..500u64 {
        let mut rng = AmalgamContext::trial_rng(2, 101, t);
        let a = rng.gen_range(0..ctx.factor_a.order());
        let b = rng.gen_range(0..ctx.factor_b.order());
        let wa = ctx.embed(Side::A, a);
        let wb = ctx.embed(Side::B, b);
        assert_eq!(
            canonical_parts(&ctx.multiply(&wa, &wb)),
            oracle_multiply(ctx, &wa, &wb)
        );
        assert_eq!(
            canonical_parts(&ctx.multiply(&wb, &wa)),
            oracle_multiply(ctx, &wb, &wa)
        );
    }
}

#[test]
fn torsion_dichotomy_sampled() {
    let ctx = ctx35();
    let lcm_orders = 375 * 1215 / 15; // any finite order divides |A| or |B|
    for t in 0..300u64 {
        let mut rng = AmalgamContext::trial_rng(3, 102, t);
        let w = ctx.random_word_with(&mut rng, (t % 7) as u32);
        let (core, _) = ctx.cyclic_reduce(&w);
        match ctx.element_order(&w) {
            ElementOrder::Finite(n) => {
                assert!(core.len() <= 1);
                assert!(375 % n == 0 || 1215 % n == 0, "order {n} divides a factor");
                assert!(lcm_orders % n == 0);
                assert!(ctx.word_pow(&w, n as i64).is_identity());
            }
            ElementOrder::Infinite => assert!(core.len() >= 2),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn prop_multiply_matches_oracle(l1 in 0u32..=5, l2 in 0u32..=5, s1: u64, s2: u64) {
        let ctx = ctx35();
        let w1 = ctx.random_word(l1, s1);
        let w2 = ctx.random_word(l2, s2);
        prop_assert_eq!(
            canonical_parts(&ctx.multiply(&w1, &w2)),
            oracle_multiply(ctx, &w1, &w2)
        );
    }

    #[test]
    fn prop_associativity(l1 in 0u32..=4, l2 in 0u32..=4, l3 in 0u32..=4, s: u64) {
        let ctx = ctx35();
        let w1 = ctx.random_word(l1, s);
        let w2 = ctx.random_word(l2, s.wrapping_add(1));
        let w3 = ctx.random_word(l3, s.wrapping_add(2));
        prop_assert_eq!(
            ctx.multiply(&ctx.multiply(&w1, &w2), &w3),
            ctx.multiply(&w1, &ctx.multiply(&w2, &w3))
        );
    }

    #[test]
    fn prop_inverse_round_trip(l in 0u32..=6, s: u64) {
        let ctx = ctx35();
        let w = ctx.random_word(l, s);
        prop_assert!(ctx.multiply(&w, &ctx.inverse(&w)).is_identity());
        prop_assert_eq!(ctx.inverse(&ctx.inverse(&w)), w);
    }

    #[test]
    fn prop_length_subadditive(l1 in 0u32..=6, l2 in 0u32..=6, s: u64) {
        let ctx = ctx35();
        let w1 = ctx.random_word(l1, s);
        let w2 = ctx.random_word(l2, s.wrapping_mul(31).wrapping_add(7));
        prop_assert!(ctx.multiply(&w1, &w2).len() <= w1.len() + w2.len());
    }

    #[test]
    fn prop_json_round_trip(l in 0u32..=6, s: u64) {
        let ctx = ctx35();
        let w = ctx.random_word(l, s);
        let js = ctx.word_to_json(&w);
        prop_assert_eq!(ctx.word_from_json(&js).unwrap(), w);
    }

    #[test]
    fn prop_conjugation_preserves_order(code in 0u64..375, l in 0u32..=5, s: u64) {
        let ctx = ctx35();
        let x = ctx.random_word(l, s);
        let g = ctx.embed(Side::A, code);
        let expected = ctx.factor_a.element_order(code);
        prop_assert_eq!(
            ctx.element_order(&ctx.conjugate(&g, &x)),
            ElementOrder::Finite(expected)
        );
    }
}
