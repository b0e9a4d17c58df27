//! The glued context for X = A *_C B: both local factors, the
//! identification of the common cyclic subgroup C of order pq, and fixed
//! right-coset transversals of C in each factor. Canonical word forms are
//! only canonical relative to a transversal, so the transversal order is
//! pinned (lexicographic on element codes) and hashed into a context
//! fingerprint that serialized words must carry.

use crate::error::{Error, Result};
use crate::field;
use crate::local::{LocalFactor, Side};
use crate::params::AmalgamParams;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// An element of C as a pair of exponents: `ep` on the order-p generator
/// (the acting generator of A, the central generator of P in B) and `eq`
/// on the order-q generator (the central generator of Q in A, the acting
/// generator of B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CElem {
    pub ep: u32,
    pub eq: u32,
}

impl CElem {
    pub const IDENTITY: CElem = CElem { ep: 0, eq: 0 };

    pub fn is_identity(self) -> bool {
        self.ep == 0 && self.eq == 0
    }
}

/// One canonical letter: a nontrivial right coset of C in the tagged
/// factor, named by its transversal index (index 0 is the coset C itself
/// and never appears in a canonical word).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub side: Side,
    pub idx: u32,
}

pub struct AmalgamContext {
    pub params: AmalgamParams,
    pub seed: u64,
    pub factor_a: LocalFactor,
    pub factor_b: LocalFactor,
    trans_a: Vec<u64>,
    trans_b: Vec<u64>,
    /// Per element code: (index of its C-part, transversal index).
    dec_a: Vec<(u32, u32)>,
    dec_b: Vec<(u32, u32)>,
    fingerprint: u64,
}

impl AmalgamContext {
    pub fn build(
        params: &AmalgamParams,
        seed: u64,
        cache_dir: Option<&Path>,
        size_cap: u64,
    ) -> Result<AmalgamContext> {
        let factor_a = LocalFactor::build(params, Side::A, seed, cache_dir, size_cap)?;
        let factor_b = LocalFactor::build(params, Side::B, seed, cache_dir, size_cap)?;
        let p = params.p as u32;
        let q = params.q as u32;
        let pq = (p * q) as u64;

        // the identification must glue cyclic groups of the same order pq
        let d_a = factor_a.mul_codes(factor_a.central_generator_code(), 1);
        let d_b = factor_b.mul_codes(factor_b.central_generator_code(), 1);
        if factor_a.element_order(d_a) != pq || factor_b.element_order(d_b) != pq {
            return Err(Error::InvalidParameter(
                "identified subgroups are not cyclic of order pq".into(),
            ));
        }

        let (trans_a, dec_a) = transversal(&factor_a, p, q);
        let (trans_b, dec_b) = transversal(&factor_b, p, q);
        debug_assert_eq!(trans_a.len() as u64, factor_a.order() / pq);
        debug_assert_eq!(trans_b.len() as u64, factor_b.order() / pq);
        debug_assert_eq!(trans_a[0], 0);
        debug_assert_eq!(trans_b[0], 0);

        let fingerprint = field::fnv1a64(
            [
                params.p,
                params.q,
                seed,
                factor_a.matrix.fingerprint(),
                factor_b.matrix.fingerprint(),
            ]
            .into_iter()
            .chain(trans_a.iter().copied())
            .chain(trans_b.iter().copied()),
        );

        Ok(AmalgamContext {
            params: params.clone(),
            seed,
            factor_a,
            factor_b,
            trans_a,
            trans_b,
            dec_a,
            dec_b,
            fingerprint,
        })
    }

    pub fn factor(&self, side: Side) -> &LocalFactor {
        match side {
            Side::A => &self.factor_a,
            Side::B => &self.factor_b,
        }
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn fingerprint_hex(&self) -> String {
        format!("{:016x}", self.fingerprint)
    }

    pub fn transversal_len(&self, side: Side) -> u32 {
        match side {
            Side::A => self.trans_a.len() as u32,
            Side::B => self.trans_b.len() as u32,
        }
    }

    pub fn rep_code(&self, side: Side, idx: u32) -> u64 {
        match side {
            Side::A => self.trans_a[idx as usize],
            Side::B => self.trans_b[idx as usize],
        }
    }

    /// The code of a C-element inside a factor. In A the element is
    /// z^eq·σ^ep, in B it is w^ep·τ^eq; the lexicographic code layout
    /// makes both a direct mixed-radix formula.
    pub fn c_code(&self, side: Side, c: CElem) -> u64 {
        match side {
            Side::A => c.eq as u64 * self.params.p + c.ep as u64,
            Side::B => c.ep as u64 * self.params.q + c.eq as u64,
        }
    }

    /// Inverse of `c_code`; elements of C occupy exactly the codes below pq.
    pub fn c_from_code(&self, side: Side, code: u64) -> Option<CElem> {
        if code >= self.params.p * self.params.q {
            return None;
        }
        Some(match side {
            Side::A => CElem {
                ep: (code % self.params.p) as u32,
                eq: (code / self.params.p) as u32,
            },
            Side::B => CElem {
                ep: (code / self.params.q) as u32,
                eq: (code % self.params.q) as u32,
            },
        })
    }

    pub fn c_add(&self, x: CElem, y: CElem) -> CElem {
        CElem {
            ep: field::add(x.ep, y.ep, self.params.p as u32),
            eq: field::add(x.eq, y.eq, self.params.q as u32),
        }
    }

    pub fn c_neg(&self, x: CElem) -> CElem {
        CElem {
            ep: field::neg(x.ep, self.params.p as u32),
            eq: field::neg(x.eq, self.params.q as u32),
        }
    }

    /// All pq elements of C.
    pub fn c_elements(&self) -> impl Iterator<Item = CElem> + '_ {
        let p = self.params.p as u32;
        let q = self.params.q as u32;
        (0..p).flat_map(move |ep| (0..q).map(move |eq| CElem { ep, eq }))
    }

    /// The generators of the cyclic group C: both exponents nonzero.
    pub fn c_generators(&self) -> impl Iterator<Item = CElem> + '_ {
        self.c_elements().filter(|c| c.ep != 0 && c.eq != 0)
    }

    /// Multiplicative order of a C-element: a product of p and q factors.
    pub fn c_order(&self, c: CElem) -> u64 {
        let fp = if c.ep != 0 { self.params.p } else { 1 };
        let fq = if c.eq != 0 { self.params.q } else { 1 };
        fp * fq
    }

    /// g = c·rep exactly, with rep the stored representative of C·g.
    pub fn coset_decompose(&self, side: Side, code: u64) -> (CElem, u32) {
        let (c_idx, t_idx) = match side {
            Side::A => self.dec_a[code as usize],
            Side::B => self.dec_b[code as usize],
        };
        let p = self.params.p as u32;
        (
            CElem {
                ep: c_idx % p,
                eq: c_idx / p,
            },
            t_idx,
        )
    }
}

/// Right-coset transversal of C in one factor: scan codes in ascending
/// (lexicographic) order; each unlabelled code is the lex-least member of
/// a fresh coset and becomes its representative.
fn transversal(factor: &LocalFactor, p: u32, q: u32) -> (Vec<u64>, Vec<(u32, u32)>) {
    let total = factor.order() as usize;
    let pq = (p * q) as u64;
    let mut dec = vec![(u32::MAX, u32::MAX); total];
    let mut trans = Vec::with_capacity(total / pq as usize);
    for code in 0..total as u64 {
        if dec[code as usize].1 != u32::MAX {
            continue;
        }
        let t_idx = trans.len() as u32;
        trans.push(code);
        // C occupies codes 0..pq in the lexicographic layout
        for c_code in 0..pq {
            let member = factor.mul_codes(c_code, code);
            debug_assert_eq!(dec[member as usize].1, u32::MAX);
            let c_idx = match factor.side {
                Side::A => {
                    let ep = (c_code % p as u64) as u32;
                    let eq = (c_code / p as u64) as u32;
                    ep + eq * p
                }
                Side::B => {
                    let ep = (c_code / q as u64) as u32;
                    let eq = (c_code % q as u64) as u32;
                    ep + eq * p
                }
            };
            dec[member as usize] = (c_idx, t_idx);
        }
    }
    (trans, dec)
}
