//! Exact-rational verification of the finite-case counting bound: a
//! finite group carrying both local configurations would account for
//! more than its own order in elements.

use crate::error::{Error, Result};
use crate::euler::euler_characteristic;
use crate::field::is_odd_prime;
use crate::params::AmalgamParams;
use crate::rational::ExactRational;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

/// Hypothetical finite-group data: Sylow orders for the two primes, each
/// at least the cube of its prime (the Sylow subgroups are non-cyclic of
/// extraspecial type).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingInstance {
    pub p: u64,
    pub q: u64,
    pub size_p: BigUint,
    pub size_q: BigUint,
}

fn is_power_of(mut n: BigUint, base: u64) -> bool {
    let b = BigUint::from(base);
    if n < b {
        return false;
    }
    while &n > &BigUint::one() {
        let (div, rem) = num_integer::Integer::div_rem(&n, &b);
        if !num_traits::Zero::is_zero(&rem) {
            return false;
        }
        n = div;
    }
    true
}

impl CountingInstance {
    pub fn new(p: u64, q: u64, size_p: BigUint, size_q: BigUint) -> Result<Self> {
        if !is_odd_prime(p) || !is_odd_prime(q) || p == q {
            return Err(Error::InvalidParameter(format!(
                "({p}, {q}): need distinct odd primes"
            )));
        }
        let inst = Self::unchecked(p, q, size_p, size_q);
        if !is_power_of(inst.size_p.clone(), p) || inst.size_p < BigUint::from(p).pow(3) {
            return Err(Error::InvalidParameter(format!(
                "sizeP = {} must be a power of {p} at least {p}³",
                inst.size_p
            )));
        }
        if !is_power_of(inst.size_q.clone(), q) || inst.size_q < BigUint::from(q).pow(3) {
            return Err(Error::InvalidParameter(format!(
                "sizeQ = {} must be a power of {q} at least {q}³",
                inst.size_q
            )));
        }
        Ok(inst)
    }

    /// Skips validation; lets controls evaluate the formula outside the
    /// invariants (e.g. at an even prime).
    pub fn unchecked(p: u64, q: u64, size_p: BigUint, size_q: BigUint) -> Self {
        CountingInstance {
            p,
            q,
            size_p,
            size_q,
        }
    }

    /// Minimal sizes p³ and q³.
    pub fn minimal(p: u64, q: u64) -> Result<Self> {
        Self::new(p, q, BigUint::from(p).pow(3), BigUint::from(q).pow(3))
    }

    /// Sizes taken from an amalgam parameter set: p^(2n+1) and q^(2m+1).
    pub fn from_params(params: &AmalgamParams) -> Self {
        CountingInstance {
            p: params.p,
            q: params.q,
            size_p: params.order_p(),
            size_q: params.order_q(),
        }
    }
}

/// The accounted fraction of the group order, split into its
/// constituents. Totals 1 + 1/(pq) − 1/(q·|P|) − 1/(p·|Q|).
#[derive(Debug, Clone, Serialize)]
pub struct AccountedFraction {
    /// Non-identity p-elements: 1/q − 1/(q·|P|), from [G:A]·(|P| − 1)
    /// with A = N_G(P) of order q·|P|.
    pub p_elements: ExactRational,
    /// Non-identity q-elements, symmetric: 1/p − 1/(p·|Q|).
    pub q_elements: ExactRational,
    /// Elements of order pq (lower bound): 1 − 1/p − 1/q + 1/(pq).
    pub order_pq_elements: ExactRational,
    /// The sum of the three constituents.
    pub total: ExactRational,
}

pub fn accounted_fraction(inst: &CountingInstance) -> AccountedFraction {
    let p = BigInt::from(inst.p);
    let q = BigInt::from(inst.q);
    let sp = BigInt::from(inst.size_p.clone());
    let sq = BigInt::from(inst.size_q.clone());
    let one = ExactRational::one();

    let p_elements = &ExactRational::recip_of(q.clone()) - &ExactRational::recip_of(&q * &sp);
    let q_elements = &ExactRational::recip_of(p.clone()) - &ExactRational::recip_of(&p * &sq);
    let order_pq_elements = &(&(&one - &ExactRational::recip_of(p.clone()))
        - &ExactRational::recip_of(q.clone()))
        + &ExactRational::recip_of(&p * &q);

    // same bracket, assembled directly
    let total = &(&(&(&one + &ExactRational::recip_of(&p * &q))
        - &ExactRational::recip_of(&q * &sp))
        - &ExactRational::recip_of(&p * &sq));
    let total = total.clone();
    debug_assert_eq!(
        total,
        &(&p_elements + &q_elements) + &order_pq_elements,
        "constituent sum must equal the bracket"
    );

    AccountedFraction {
        p_elements,
        q_elements,
        order_pq_elements,
        total,
    }
}

/// TRUE (with the exact positive excess) when the accounted fraction
/// exceeds 1 — the contradiction ruling out the finite group.
pub fn check_contradiction(inst: &CountingInstance) -> (bool, ExactRational) {
    let excess = &accounted_fraction(inst).total - &ExactRational::one();
    (excess.is_positive(), excess)
}

/// The counting excess agrees exactly with −χ of the amalgam built from
/// the same local data.
pub fn excess_equals_minus_chi(params: &AmalgamParams) -> bool {
    let inst = CountingInstance::from_params(params);
    let (_, excess) = check_contradiction(&inst);
    excess == -&euler_characteristic(params)
}

#[derive(Debug, Clone, Serialize)]
pub struct GridRow {
    pub p: u64,
    pub q: u64,
    pub size_p: String,
    pub size_q: String,
    pub excess: ExactRational,
    pub verdict: bool,
}

/// Sweeps every ordered pair of distinct odd primes up to `max_prime` at
/// the minimal sizes p³, q³.
pub fn grid_sweep(max_prime: u64) -> Vec<GridRow> {
    let primes: Vec<u64> = (3..=max_prime).filter(|&n| is_odd_prime(n)).collect();
    let mut rows = Vec::new();
    for &p in &primes {
        for &q in &primes {
            if p == q {
                continue;
            }
            let inst = CountingInstance::minimal(p, q).expect("valid odd pair");
            let (verdict, excess) = check_contradiction(&inst);
            rows.push(GridRow {
                p,
                q,
                size_p: inst.size_p.to_string(),
                size_q: inst.size_q.to_string(),
                excess,
                verdict,
            });
        }
    }
    rows
}

pub fn grid_csv(rows: &[GridRow]) -> String {
    let mut out = String::from("p,q,sizeP,sizeQ,excess_num,excess_den,verdict\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.p,
            r.q,
            r.size_p,
            r.size_q,
            r.excess.numer(),
            r.excess.denom(),
            if r.verdict { "TRUE" } else { "FALSE" }
        ));
    }
    out
}
