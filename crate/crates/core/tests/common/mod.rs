//! Shared test support: a naive rescan-until-fixpoint reduction oracle
//! that canonicalizes products independently of the engine's incremental
//! seam reduction, plus lazily built contexts.

// each test target compiles this module separately and uses a subset
#![allow(dead_code)]

use amalgam_core::{AmalgamContext, AmalgamParams, AmalgamWord, CElem, Side};
use std::sync::OnceLock;

pub fn ctx35() -> &'static AmalgamContext {
    static CTX: OnceLock<AmalgamContext> = OnceLock::new();
    CTX.get_or_init(|| {
        let params = AmalgamParams::new(3, 5).unwrap();
        AmalgamContext::build(&params, 42, None, 1_000_000).unwrap()
    })
}

pub fn ctx37() -> &'static AmalgamContext {
    static CTX: OnceLock<AmalgamContext> = OnceLock::new();
    CTX.get_or_init(|| {
        let params = AmalgamParams::new(3, 7).unwrap();
        AmalgamContext::build(&params, 42, None, 1_000_000).unwrap()
    })
}

/// Raw, unreduced product: a sequence of factor elements by code.
pub type Raw = Vec<(Side, u64)>;

pub fn word_to_raw(ctx: &AmalgamContext, w: &AmalgamWord) -> Raw {
    let first_side = w.letters().first().map(|l| l.side).unwrap_or(Side::A);
    let mut raw = vec![(first_side, ctx.c_code(first_side, w.c_part()))];
    for l in w.letters() {
        raw.push((l.side, ctx.rep_code(l.side, l.idx)));
    }
    raw
}

/// Rescans until no adjacent same-factor pair and no interior C element
/// remains, then decomposes right-to-left against the transversals.
pub fn oracle_reduce(ctx: &AmalgamContext, mut raw: Raw) -> (CElem, Vec<(Side, u32)>) {
    let pq = ctx.params.p * ctx.params.q;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < raw.len() {
            if raw[i].0 == raw[i + 1].0 {
                let side = raw[i].0;
                let merged = ctx.factor(side).mul_codes(raw[i].1, raw[i + 1].1);
                raw[i] = (side, merged);
                raw.remove(i + 1);
                changed = true;
            } else {
                i += 1;
            }
        }
        if raw.len() > 1 {
            if let Some(i) = raw.iter().position(|&(_, code)| code < pq) {
                let (side, code) = raw[i];
                let c = ctx.c_from_code(side, code).unwrap();
                raw.remove(i);
                if i < raw.len() {
                    let (ns, ncode) = raw[i];
                    raw[i] = (ns, ctx.factor(ns).mul_codes(ctx.c_code(ns, c), ncode));
                } else {
                    let (ps, pcode) = raw[i - 1];
                    raw[i - 1] = (ps, ctx.factor(ps).mul_codes(pcode, ctx.c_code(ps, c)));
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if raw.len() == 1 && raw[0].1 < pq {
        return (ctx.c_from_code(raw[0].0, raw[0].1).unwrap(), Vec::new());
    }
    let mut letters = vec![(Side::A, 0u32); raw.len()];
    let mut carry = CElem::IDENTITY;
    for i in (0..raw.len()).rev() {
        let (side, code) = raw[i];
        let shifted = ctx.factor(side).mul_codes(code, ctx.c_code(side, carry));
        let (c, idx) = ctx.coset_decompose(side, shifted);
        assert_ne!(idx, 0, "reduced letters cannot lie in C");
        letters[i] = (side, idx);
        carry = c;
    }
    (carry, letters)
}

pub fn oracle_multiply(
    ctx: &AmalgamContext,
    w1: &AmalgamWord,
    w2: &AmalgamWord,
) -> (CElem, Vec<(Side, u32)>) {
    let mut raw = word_to_raw(ctx, w1);
    raw.extend(word_to_raw(ctx, w2));
    oracle_reduce(ctx, raw)
}

pub fn canonical_parts(w: &AmalgamWord) -> (CElem, Vec<(Side, u32)>) {
    (
        w.c_part(),
        w.letters().iter().map(|l| (l.side, l.idx)).collect(),
    )
}
