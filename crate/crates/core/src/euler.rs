//! Euler characteristic of the amalgam, the rank of free finite-index
//! subgroups, and the abelianization of the glued group as the cokernel
//! of C → A_ab ⊕ B_ab.

use crate::context::{AmalgamContext, CElem};
use crate::error::{Error, Result};
use crate::local::{LocalFactor, Side};
use crate::params::AmalgamParams;
use crate::rational::ExactRational;
use crate::snf;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// χ(X) = 1/|A| + 1/|B| − 1/|C|, exactly. Negative for every valid
/// parameter set.
pub fn euler_characteristic(params: &AmalgamParams) -> ExactRational {
    let a = ExactRational::recip_of(BigInt::from(params.order_a()));
    let b = ExactRational::recip_of(BigInt::from(params.order_b()));
    let c = ExactRational::recip_of(BigInt::from(params.order_c()));
    &(&a + &b) - &c
}

/// Rank of a free subgroup of the given index, from the multiplicativity
/// of χ: a free group of rank r has χ = 1 − r, so r = 1 − χ(X)·index.
#[derive(Debug, Clone)]
pub struct RankResult {
    pub rank: BigUint,
    pub chi: ExactRational,
    /// An alternative closed form of the rank sometimes quoted for this
    /// configuration; its denominator lacks a pq factor, so it disagrees
    /// with the χ-derived value for every positive index. Reported for
    /// comparison, flagged by `variant_matches`.
    pub variant_formula: ExactRational,
    pub variant_matches: bool,
}

pub fn free_rank_of_index(params: &AmalgamParams, index: &BigUint) -> Result<RankResult> {
    let pq_block = params.order_p() * params.order_q();
    if index.is_zero() || !index.mod_floor(&pq_block).is_zero() {
        return Err(Error::InvalidParameter(format!(
            "index {index} is not a positive multiple of |P||Q| = {pq_block}"
        )));
    }
    let chi = euler_characteristic(params);
    let rank = &ExactRational::one() - &(&chi * &ExactRational::from(index));
    let Some(rank_int) = rank.to_integer() else {
        return Err(Error::InvalidParameter(format!(
            "rank 1 − χ·{index} is not an integer"
        )));
    };
    if !rank_int.is_positive() || rank_int == BigInt::one() {
        return Err(Error::InvalidParameter(format!(
            "rank {rank_int} is not greater than 1"
        )));
    }
    let p2n = BigInt::from(params.p).pow(2 * params.n as u32);
    let q2m = BigInt::from(params.q).pow(2 * params.m as u32);
    let block = &p2n * &q2m;
    let variant = &ExactRational::one()
        + &ExactRational::new((&block - &p2n - &q2m) * BigInt::from(index.clone()), block);
    let variant_matches = variant == ExactRational::from_integer(rank_int.clone());
    Ok(RankResult {
        rank: rank_int.to_biguint().expect("rank is positive"),
        chi,
        variant_formula: variant,
        variant_matches,
    })
}

/// Abelianization of one factor as (label of the glued generator's
/// image, multiplication table, order).
fn factor_ab(factor: &LocalFactor, d_code: u64) -> Result<(u32, Vec<Vec<u32>>, usize)> {
    let derived = factor.derived_subgroup(&factor.standard_generators())?;
    let (labels, table, order) = factor.quotient(&derived);
    Ok((labels[d_code as usize], table, order))
}

/// Relation matrix presenting (A_ab ⊕ B_ab) / ⟨image of the glued
/// generator⟩, using one formal generator per abelianization element:
/// table rows e_i + e_j − e_{ij}, identity rows, and (when glued) the
/// pairing row identifying the two images of the Carter generator.
fn presentation_matrix(
    a_ab: (&[Vec<u32>], usize, u32),
    b_ab: (&[Vec<u32>], usize, u32),
    glued: bool,
) -> Vec<Vec<i128>> {
    let (ta, na, da) = a_ab;
    let (tb, nb, db) = b_ab;
    let cols = na + nb;
    let mut rows: Vec<Vec<i128>> = Vec::new();
    let push_block = |table: &[Vec<u32>], size: usize, offset: usize, rows: &mut Vec<Vec<i128>>| {
        let mut row = vec![0i128; cols];
        row[offset] = 1; // identity generator dies
        rows.push(row);
        for i in 0..size {
            for j in i..size {
                let k = table[i][j] as usize;
                let mut row = vec![0i128; cols];
                row[offset + i] += 1;
                row[offset + j] += 1;
                row[offset + k] -= 1;
                rows.push(row);
            }
        }
    };
    push_block(ta, na, 0, &mut rows);
    push_block(tb, nb, na, &mut rows);
    if glued {
        let mut row = vec![0i128; cols];
        row[da as usize] += 1;
        row[na + db as usize] -= 1;
        rows.push(row);
    }
    rows
}

/// Invariant factors of X_ab for X = A *_C B: the cokernel of the map
/// C → A_ab ⊕ B_ab induced by the two inclusions of the glued subgroup.
/// Empty exactly when X is perfect.
pub fn amalgam_abelianization(ctx: &AmalgamContext) -> Result<Vec<u64>> {
    let d = CElem { ep: 1, eq: 1 };
    let (da, ta, na) = factor_ab(&ctx.factor_a, ctx.c_code(Side::A, d))?;
    let (db, tb, nb) = factor_ab(&ctx.factor_b, ctx.c_code(Side::B, d))?;
    let m = presentation_matrix((&ta, na, da), (&tb, nb, db), true);
    Ok(snf::cokernel_invariant_factors(m, na + nb))
}

/// Control: the same computation with the gluing removed, i.e. the
/// abelianization of the plain free product A * B.
pub fn free_product_abelianization(ctx: &AmalgamContext) -> Result<Vec<u64>> {
    let d = CElem { ep: 1, eq: 1 };
    let (da, ta, na) = factor_ab(&ctx.factor_a, ctx.c_code(Side::A, d))?;
    let (db, tb, nb) = factor_ab(&ctx.factor_b, ctx.c_code(Side::B, d))?;
    let m = presentation_matrix((&ta, na, da), (&tb, nb, db), false);
    Ok(snf::cokernel_invariant_factors(m, na + nb))
}
