//! Mechanical checks of the structural claims about X = A *_C B:
//! exhaustive where the domain is a finite group, seeded sampling over
//! bounded-length words where the claim quantifies over all of X.
//! Reports are pure functions of (parameters, seed, sample counts) and
//! reproduce bit for bit; only the duration field varies between runs.

use crate::context::{AmalgamContext, CElem};
use crate::error::{Error, Result};
use crate::euler;
use crate::local::Side;
use crate::word::{AmalgamWord, ElementOrder};
use rand::Rng;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    #[serde(rename = "EXACT")]
    Exact,
    #[serde(rename = "SAMPLED")]
    Sampled,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Exact => write!(f, "EXACT"),
            Mode::Sampled => write!(f, "SAMPLED"),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ReportParams {
    pub p: u64,
    pub q: u64,
}

/// Outcome of one claim check. `fail` holds up to [`MAX_RECORDED`]
/// serialized counterexamples; `fail_count` counts all of them.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub mode: Mode,
    pub trials: u64,
    pub fail: Vec<String>,
    pub fail_count: u64,
    pub notes: Vec<String>,
    pub seed: u64,
    pub params: ReportParams,
    pub duration_ms: u128,
}

pub const MAX_RECORDED: usize = 10;

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.fail_count == 0
    }
}

struct ReportBuilder {
    report: VerificationReport,
    start: Instant,
}

impl ReportBuilder {
    fn new(ctx: &AmalgamContext, claim: &str, mode: Mode, seed: u64) -> Self {
        ReportBuilder {
            report: VerificationReport {
                claim: claim.to_string(),
                mode,
                trials: 0,
                fail: Vec::new(),
                fail_count: 0,
                notes: Vec::new(),
                seed,
                params: ReportParams {
                    p: ctx.params.p,
                    q: ctx.params.q,
                },
                duration_ms: 0,
            },
            start: Instant::now(),
        }
    }

    fn tally(&mut self, n: u64) {
        self.report.trials += n;
    }

    fn fail(&mut self, witness: String) {
        if self.report.fail.len() < MAX_RECORDED {
            self.report.fail.push(witness);
        }
        self.report.fail_count += 1;
    }

    fn note(&mut self, s: String) {
        self.report.notes.push(s);
    }

    fn finish(mut self) -> VerificationReport {
        self.report.duration_ms = self.start.elapsed().as_millis();
        self.report
    }
}

/// Sampling knobs; the defaults match the documented contract
/// (seed 42, 10⁴ word samples of at most 6 letters, 100 conjugate
/// samples, 10³ centralizer probes).
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: u64,
    pub max_letters: u32,
    pub conjugate_samples: u64,
    pub probe_samples: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            samples: 10_000,
            max_letters: 6,
            conjugate_samples: 100,
            probe_samples: 1_000,
        }
    }
}

// stable stream tags for per-claim RNG derivation
const STREAM_SELF_NORMALIZING: u64 = 1;
const STREAM_INTERSECTION: u64 = 2;
const STREAM_ISOLATED: u64 = 3;
const STREAM_TORSION: u64 = 4;
const STREAM_GENERATION: u64 = 5;
const STREAM_GENERATION_CONJ: u64 = 6;
const STREAM_CENTRALIZER: u64 = 7;

fn describe_factor_element(ctx: &AmalgamContext, side: Side, code: u64) -> String {
    let _ = ctx;
    format!("{side}:{code}")
}

/// C is self-normalizing: exhaustively inside each factor, and by
/// sampling over reduced words; a conjugate of any generator of C landing
/// back in C would force the conjugator into C.
pub fn verify_self_normalizing_c(ctx: &AmalgamContext, cfg: &VerifyConfig) -> VerificationReport {
    let mut rb = ReportBuilder::new(ctx, "self-normalizing", Mode::Sampled, cfg.seed);
    for side in [Side::A, Side::B] {
        match ctx.factor(side).carter_subgroup() {
            Ok(data) => {
                rb.tally(ctx.factor(side).order());
                rb.note(format!(
                    "exact: N_{side}(C) = C over all {} elements ({} in C)",
                    ctx.factor(side).order(),
                    data.elements.len()
                ));
            }
            Err(e) => rb.fail(format!("factor {side}: {e}")),
        }
    }
    let gens: Vec<CElem> = ctx.c_generators().collect();
    for t in 0..cfg.samples {
        let mut rng = AmalgamContext::trial_rng(cfg.seed, STREAM_SELF_NORMALIZING, t);
        let len = rng.gen_range(1..=cfg.max_letters);
        let x = ctx.random_word_with(&mut rng, len);
        let xi = ctx.inverse(&x);
        rb.tally(1);
        for &d in &gens {
            let conj = ctx.multiply(&ctx.multiply(&xi, &ctx.word_from_c(d)), &x);
            if conj.in_c() {
                rb.fail(format!(
                    "d=({},{}) conjugated into C by x={}",
                    d.ep,
                    d.eq,
                    ctx.word_to_json(&x)
                ));
            }
        }
    }
    rb.finish()
}

/// A ∩ A^x contains no element of order divisible by q for x outside A
/// (mirror for B with p). Consequence: the fusion induced on Q inside
/// the whole group is the one induced by A, since fusion by any x
/// outside A would put an order-q element into A ∩ A^{x⁻¹}.
pub fn verify_prime_intersection(ctx: &AmalgamContext, cfg: &VerifyConfig) -> VerificationReport {
    let mut rb = ReportBuilder::new(ctx, "intersection", Mode::Sampled, cfg.seed);
    let targets_a: Vec<u64> = (0..ctx.factor_a.order())
        .filter(|&g| ctx.factor_a.element_order(g) % ctx.params.q == 0)
        .collect();
    let targets_b: Vec<u64> = (0..ctx.factor_b.order())
        .filter(|&g| ctx.factor_b.element_order(g) % ctx.params.p == 0)
        .collect();
    rb.note(format!(
        "targets: {} elements of A with order divisible by q, {} of B divisible by p",
        targets_a.len(),
        targets_b.len()
    ));
    rb.note(
        "fusion corollary: conjugation into A by words outside A never preserves \
         order-q elements, so A controls fusion on Q (and B on P)"
            .into(),
    );

    let check = |rb: &mut ReportBuilder, x: &AmalgamWord, home: Side, targets: &[u64]| {
        let xi = ctx.inverse(x);
        for &a in targets {
            let conj = ctx.multiply(&ctx.multiply(&xi, &ctx.embed(home, a)), x);
            if conj.in_factor(home) {
                rb.fail(format!(
                    "a={} stays in {home} under x={}",
                    describe_factor_element(ctx, home, a),
                    ctx.word_to_json(x)
                ));
            }
        }
    };

    // one-letter layer: every nontrivial coset of the other factor,
    // strided down to a budgeted subset when the target lists are large
    const COSET_LAYER_BUDGET: u64 = 20_000_000;
    for (coset_side, home, targets) in [
        (Side::B, Side::A, &targets_a),
        (Side::A, Side::B, &targets_b),
    ] {
        let cosets = ctx.transversal_len(coset_side) as u64 - 1;
        let budgeted = (COSET_LAYER_BUDGET / (targets.len() as u64).max(1)).max(50);
        let stride = cosets.div_ceil(budgeted).max(1);
        for idx in (1..=cosets).step_by(stride as usize) {
            let x = ctx.embed(coset_side, ctx.rep_code(coset_side, idx as u32));
            check(&mut rb, &x, home, targets);
            rb.tally(1);
        }
        if stride == 1 {
            rb.note(format!(
                "one-letter layer: all {cosets} {coset_side}-cosets against {home}"
            ));
        } else {
            rb.note(format!(
                "one-letter layer: every {stride}th of {cosets} {coset_side}-cosets against {home}"
            ));
        }
    }

    for t in 0..cfg.samples {
        let mut rng = AmalgamContext::trial_rng(cfg.seed, STREAM_INTERSECTION, t);
        let len = rng.gen_range(1..=cfg.max_letters);
        let x = ctx.random_word_with(&mut rng, len);
        rb.tally(1);
        if !x.in_factor(Side::A) {
            check(&mut rb, &x, Side::A, &targets_a);
        }
        if !x.in_factor(Side::B) {
            check(&mut rb, &x, Side::B, &targets_b);
        }
    }
    rb.finish()
}

/// Every nontrivial central element is isolated: a conjugate either is
/// the element itself or fails to commute with it.
pub fn verify_isolated(ctx: &AmalgamContext, cfg: &VerifyConfig) -> VerificationReport {
    let mut rb = ReportBuilder::new(ctx, "isolated", Mode::Sampled, cfg.seed);
    let z_list: Vec<CElem> = (1..ctx.params.q as u32)
        .map(|eq| CElem { ep: 0, eq })
        .collect();
    let w_list: Vec<CElem> = (1..ctx.params.p as u32)
        .map(|ep| CElem { ep, eq: 0 })
        .collect();

    let check = |rb: &mut ReportBuilder, x: &AmalgamWord, centrals: &[CElem]| {
        let xi = ctx.inverse(x);
        for &z in centrals {
            let zw = ctx.word_from_c(z);
            let conj = ctx.multiply(&ctx.multiply(&xi, &zw), x);
            if conj != zw && ctx.commutator(&zw, &conj).is_identity() {
                rb.fail(format!(
                    "z=({},{}) commutes with distinct conjugate under x={}",
                    z.ep,
                    z.eq,
                    ctx.word_to_json(x)
                ));
            }
        }
    };

    // exact one-letter layer: a nontrivial coset of the opposite factor
    // must both move the element and break commutation (its centralizer
    // is exactly the home factor); cosets of the home factor fix it
    for idx in 1..ctx.transversal_len(Side::B) {
        let x = ctx.embed(Side::B, ctx.rep_code(Side::B, idx));
        let xi = ctx.inverse(&x);
        for &z in &z_list {
            let zw = ctx.word_from_c(z);
            let conj = ctx.multiply(&ctx.multiply(&xi, &zw), &x);
            if conj == zw {
                rb.fail(format!("z=(0,{}) centralized by B-coset {idx}", z.eq));
            } else if ctx.commutator(&zw, &conj).is_identity() {
                rb.fail(format!("z=(0,{}) not isolated against B-coset {idx}", z.eq));
            }
        }
        rb.tally(1);
    }
    for idx in 1..ctx.transversal_len(Side::A) {
        let x = ctx.embed(Side::A, ctx.rep_code(Side::A, idx));
        let xi = ctx.inverse(&x);
        for &w in &w_list {
            let ww = ctx.word_from_c(w);
            let conj = ctx.multiply(&ctx.multiply(&xi, &ww), &x);
            if conj == ww {
                rb.fail(format!("w=({},0) centralized by A-coset {idx}", w.ep));
            } else if ctx.commutator(&ww, &conj).is_identity() {
                rb.fail(format!("w=({},0) not isolated against A-coset {idx}", w.ep));
            }
        }
        // Z(Q) is central in A: its elements are fixed
        for &z in &z_list {
            let zw = ctx.word_from_c(z);
            if ctx.multiply(&ctx.multiply(&xi, &zw), &x) != zw {
                rb.fail(format!("z=(0,{}) moved by an element of A", z.eq));
            }
        }
        rb.tally(1);
    }
    rb.note(format!(
        "exact: {} B-cosets x {} central q-elements, {} A-cosets x {} central p-elements",
        ctx.transversal_len(Side::B) - 1,
        z_list.len(),
        ctx.transversal_len(Side::A) - 1,
        w_list.len()
    ));

    for t in 0..cfg.samples {
        let mut rng = AmalgamContext::trial_rng(cfg.seed, STREAM_ISOLATED, t);
        let len = rng.gen_range(1..=cfg.max_letters);
        let x = ctx.random_word_with(&mut rng, len);
        rb.tally(1);
        check(&mut rb, &x, &z_list);
        check(&mut rb, &x, &w_list);
    }
    rb.finish()
}

/// Torsion classification: conjugates of factor elements keep their
/// order, and cyclically reduced words of length ≥ 2 have powers of
/// strictly linearly growing length (hence infinite order).
pub fn verify_torsion_classification(
    ctx: &AmalgamContext,
    cfg: &VerifyConfig,
) -> VerificationReport {
    let mut rb = ReportBuilder::new(ctx, "torsion", Mode::Sampled, cfg.seed);
    let power_cap = 20i64;
    for t in 0..cfg.samples {
        let mut rng = AmalgamContext::trial_rng(cfg.seed, STREAM_TORSION, t);
        rb.tally(1);

        // (a) conjugation preserves finite orders
        let side = if rng.gen::<bool>() { Side::A } else { Side::B };
        let factor = ctx.factor(side);
        let code = rng.gen_range(0..factor.order());
        let len = rng.gen_range(0..=cfg.max_letters);
        let x = ctx.random_word_with(&mut rng, len);
        let expected = factor.element_order(code);
        let got = ctx.element_order(&ctx.conjugate(&ctx.embed(side, code), &x));
        if got != ElementOrder::Finite(expected) {
            rb.fail(format!(
                "order of {} changed from {expected} to {got} under x={}",
                describe_factor_element(ctx, side, code),
                ctx.word_to_json(&x)
            ));
        }

        // (b) hyperbolic words: letter count grows linearly in the power
        let half = (cfg.max_letters / 2).max(1);
        let w_len = 2 * rng.gen_range(1..=half);
        let w = ctx.random_word_with(&mut rng, w_len);
        let base_len = w.len();
        let mut acc = w.clone();
        for k in 2..=power_cap {
            acc = ctx.multiply(&acc, &w);
            if acc.len() != base_len * k as usize {
                rb.fail(format!(
                    "letters(w^{k}) = {} for w={}",
                    acc.len(),
                    ctx.word_to_json(&w)
                ));
                break;
            }
        }
    }
    rb.note(format!(
        "powers checked up to exponent {power_cap}; finite orders all divide |A| or |B|"
    ));
    rb.finish()
}

/// Closure work above this many element operations per side switches the
/// generation check to a documented sampled subset.
const GENERATION_SIDE_BUDGET: u128 = 200_000_000;

/// The two-generator argument, reduced to its finite ingredients: for
/// every non-central v in the extraspecial part, v⁻¹·v^z is again
/// non-central and together with the glued generator it generates a
/// subgroup containing the whole extraspecial part; u·v pairs have
/// infinite order.
pub fn verify_generation(ctx: &AmalgamContext) -> VerificationReport {
    let mut rb = ReportBuilder::new(ctx, "generation", Mode::Exact, ctx.seed);
    rb.note(
        "three-generator variant is subsumed: a set containing u, v and zw generates \
         whatever uv and zw generate"
            .into(),
    );
    for side in [Side::B, Side::A] {
        let factor = ctx.factor(side);
        // the glued C-generator acting on this factor is its acting
        // generator: z ↦ τ in B, w ↦ σ in A
        let acting = factor.acting_generator_code();
        let mut full = vec![false; factor.order() as usize];
        let mut checked = 0u64;
        let mut misses = 0u64;
        // precondition filter: central v gives v⁻¹v^z = 1
        let candidates: Vec<u64> = factor
            .es_codes()
            .filter(|&c| !factor.element(c).h.is_central())
            .collect();
        let cost = candidates.len() as u128 * factor.order() as u128;
        let selected: Vec<u64> = if cost <= GENERATION_SIDE_BUDGET {
            candidates
        } else {
            rb.report.mode = Mode::Sampled;
            let take = 500.min(candidates.len());
            let mut rng = AmalgamContext::trial_rng(ctx.seed, STREAM_GENERATION, side as u64);
            let sampled = (0..take)
                .map(|_| candidates[rng.gen_range(0..candidates.len())])
                .collect();
            rb.note(format!(
                "side {side}: domain of {} exceeds the closure budget, checking a \
                 seeded sample of {take}",
                candidates.len()
            ));
            sampled
        };
        for code in selected {
            let image = factor.conjugate_code(code, acting);
            let twisted = factor.mul_codes(factor.inverse_code(code), image);
            let te = factor.element(twisted);
            if te.s != 0 || te.h.is_central() {
                rb.fail(format!(
                    "v={} gives a degenerate twist {twisted} on side {side}",
                    describe_factor_element(ctx, side, code)
                ));
                continue;
            }
            let closure = match factor.subgroup_closure(&[twisted, acting], factor.order() as usize)
            {
                Ok(c) => c,
                Err(e) => {
                    rb.fail(format!("closure failed on side {side}: {e}"));
                    continue;
                }
            };
            full.iter_mut().for_each(|b| *b = false);
            for &h in &closure {
                full[h as usize] = true;
            }
            if let Some(missing) = factor.es_codes().find(|&h| !full[h as usize]) {
                misses += 1;
                rb.fail(format!(
                    "<v^-1 v^z, z> misses {} of the extraspecial part for v={} on side {side}",
                    describe_factor_element(ctx, side, missing),
                    describe_factor_element(ctx, side, code)
                ));
            }
            checked += 1;
            rb.tally(1);
        }
        rb.note(format!(
            "side {side}: {checked} non-central elements checked, {misses} closure misses"
        ));
    }

    // u·v has infinite order; exhaust when feasible, sample otherwise
    let non_central = |side: Side| -> Vec<u64> {
        ctx.factor(side)
            .es_codes()
            .filter(|&c| !ctx.factor(side).element(c).h.is_central())
            .collect()
    };
    let us = non_central(Side::A);
    let vs = non_central(Side::B);
    let total_pairs = us.len() as u64 * vs.len() as u64;
    if total_pairs <= 50_000 {
        for &u in &us {
            let uw = ctx.embed(Side::A, u);
            for &v in &vs {
                let uv = ctx.multiply(&uw, &ctx.embed(Side::B, v));
                if ctx.element_order(&uv) != ElementOrder::Infinite {
                    rb.fail(format!("u={u} v={v}: uv has finite order"));
                }
                rb.tally(1);
            }
        }
        rb.note(format!("u·v order checked for all {total_pairs} pairs"));
    } else {
        let samples = 1_000u64;
        for t in 0..samples {
            let mut rng = AmalgamContext::trial_rng(ctx.seed, STREAM_GENERATION, t);
            let u = us[rng.gen_range(0..us.len())];
            let v = vs[rng.gen_range(0..vs.len())];
            let uv = ctx.multiply(&ctx.embed(Side::A, u), &ctx.embed(Side::B, v));
            if ctx.element_order(&uv) != ElementOrder::Infinite {
                rb.fail(format!("u={u} v={v}: uv has finite order"));
            }
            rb.tally(1);
        }
        rb.note(format!(
            "u·v order sampled on {samples} of {total_pairs} pairs"
        ));
    }
    rb.finish()
}

/// The conjugate two-generator variant: for sampled b in B, z^b still has
/// order q and, paired with a non-central v, generates a subgroup of B
/// containing the whole extraspecial part (a B-conjugate of the plain
/// variant).
pub fn verify_generation_conjugate(ctx: &AmalgamContext, cfg: &VerifyConfig) -> VerificationReport {
    let mut rb = ReportBuilder::new(ctx, "generation-conjugate", Mode::Sampled, cfg.seed);
    let factor = &ctx.factor_b;
    let z = factor.acting_generator_code();
    let non_central: Vec<u64> = factor
        .es_codes()
        .filter(|&c| !factor.element(c).h.is_central())
        .collect();
    let mut full = vec![false; factor.order() as usize];
    for t in 0..cfg.conjugate_samples {
        let mut rng = AmalgamContext::trial_rng(cfg.seed, STREAM_GENERATION_CONJ, t);
        let b = rng.gen_range(0..factor.order());
        let zb = factor.conjugate_code(z, b);
        rb.tally(1);
        if factor.element_order(zb) != ctx.params.q {
            rb.fail(format!(
                "z^b has order {} for b={b}",
                factor.element_order(zb)
            ));
            continue;
        }
        let v = non_central[rng.gen_range(0..non_central.len())];
        let closure = match factor.subgroup_closure(&[zb, v], factor.order() as usize) {
            Ok(c) => c,
            Err(e) => {
                rb.fail(format!("closure failed for b={b}: {e}"));
                continue;
            }
        };
        full.iter_mut().for_each(|x| *x = false);
        for &h in &closure {
            full[h as usize] = true;
        }
        if let Some(missing) = factor.es_codes().find(|&h| !full[h as usize]) {
            rb.fail(format!(
                "<z^b, v> misses element {missing} for b={b}, v={v}"
            ));
        }
    }
    rb.note("b in C reduces to the plain two-generator check since z^b = z".into());
    rb.finish()
}

/// The whole group is perfect: the abelianization cokernel is trivial.
pub fn verify_perfectness(ctx: &AmalgamContext) -> VerificationReport {
    let mut rb = ReportBuilder::new(ctx, "perfect", Mode::Exact, ctx.seed);
    rb.tally(1);
    match euler::amalgam_abelianization(ctx) {
        Ok(factors) if factors.is_empty() => {
            rb.note("abelianization cokernel is trivial".into());
        }
        Ok(factors) => rb.fail(format!("abelianization has invariant factors {factors:?}")),
        Err(e) => rb.fail(format!("abelianization failed: {e}")),
    }
    rb.finish()
}

/// Centralizer probe for a hyperbolic word: its own powers commute with
/// it; sampled words and conjugates that are not powers must not. A
/// probe, not a proof; the report records counts.
pub fn probe_centralizer(
    ctx: &AmalgamContext,
    w: &AmalgamWord,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let (core, _) = ctx.cyclic_reduce(w);
    if core.len() < 2 {
        return Err(Error::InvalidParameter(
            "centralizer probe needs a word with cyclically reduced length >= 2".into(),
        ));
    }
    let mut rb = ReportBuilder::new(ctx, "centralizer-probe", Mode::Sampled, cfg.seed);
    let mut powers = Vec::new();
    for k in -10i64..=10 {
        powers.push(ctx.word_pow(w, k));
    }
    for wk in &powers {
        rb.tally(1);
        if !ctx.commutes(wk, w) {
            rb.fail("a power of w fails to commute with w".into());
        }
    }
    let mut skipped = 0u64;
    let mut checked_words = 0u64;
    let mut checked_conj = 0u64;
    for t in 0..cfg.probe_samples {
        let mut rng = AmalgamContext::trial_rng(cfg.seed, STREAM_CENTRALIZER, t);
        let len = rng.gen_range(1..=4);
        let u = ctx.random_word_with(&mut rng, len);
        rb.tally(1);
        if powers.contains(&u) {
            skipped += 1;
        } else {
            checked_words += 1;
            if ctx.commutes(&u, w) {
                rb.fail(format!(
                    "non-power u={} commutes with w",
                    ctx.word_to_json(&u)
                ));
            }
        }
        // conjugates by nontrivial words leave the centralizer
        let x_len = rng.gen_range(1..=4);
        let x = ctx.random_word_with(&mut rng, x_len);
        let wx = ctx.conjugate(w, &x);
        rb.tally(1);
        if powers.contains(&wx) {
            skipped += 1;
        } else {
            checked_conj += 1;
            if ctx.commutes(&wx, w) {
                rb.fail(format!(
                    "conjugate of w by x={} commutes with w",
                    ctx.word_to_json(&x)
                ));
            }
        }
    }
    rb.note(format!(
        "probe counts: {checked_words} sampled words, {checked_conj} conjugates, {skipped} skipped as powers"
    ));
    Ok(rb.finish())
}

/// The default probe word u·v: the lex-first non-central extraspecial
/// element on each side, glued into a two-letter hyperbolic word.
pub fn default_probe_word(ctx: &AmalgamContext) -> AmalgamWord {
    let pq = ctx.params.p * ctx.params.q;
    ctx.multiply(&ctx.embed(Side::A, pq), &ctx.embed(Side::B, pq))
}

/// Runs every claim in a fixed order.
pub fn run_all(ctx: &AmalgamContext, cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let mut reports = vec![
        verify_self_normalizing_c(ctx, cfg),
        verify_prime_intersection(ctx, cfg),
        verify_isolated(ctx, cfg),
        verify_torsion_classification(ctx, cfg),
        verify_generation(ctx),
        verify_generation_conjugate(ctx, cfg),
        verify_perfectness(ctx),
    ];
    let w = default_probe_word(ctx);
    reports.push(probe_centralizer(ctx, &w, cfg).expect("default probe word is hyperbolic"));
    reports
}
