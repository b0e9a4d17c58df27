//! Symplectic matrices over small prime fields: the standard alternating
//! form, the group-order formula, minimal-rank derivation, and the search
//! for fixed-point-free acting elements of prime order.
//!
//! Vectors are rows; a matrix acts on the right, so the symplectic
//! condition reads M·J·Mᵀ = J for the Gram matrix J of the form.

use crate::error::{Error, Result};
use crate::field;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A 2k x 2k matrix over F_r preserving the standard alternating form
/// ω(x, y) = Σ_i (x_i y_{k+i} − x_{k+i} y_i).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticMatrix {
    pub r: u32,
    pub k: usize,
    /// Row-major entries, length (2k)².
    pub entries: Vec<u32>,
}

/// ω on row vectors of length 2k over F_r.
pub fn omega(x: &[u32], y: &[u32], k: usize, r: u32) -> u32 {
    debug_assert_eq!(x.len(), 2 * k);
    debug_assert_eq!(y.len(), 2 * k);
    let mut acc = 0u32;
    for i in 0..k {
        let pos = field::mul(x[i], y[k + i], r);
        let neg = field::mul(x[k + i], y[i], r);
        acc = field::add(acc, field::sub(pos, neg, r), r);
    }
    acc
}

impl SymplecticMatrix {
    pub fn identity(k: usize, r: u32) -> Self {
        let n = 2 * k;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        SymplecticMatrix { r, k, entries }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        2 * self.k
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim() + j]
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim();
        self.entries
            .iter()
            .enumerate()
            .all(|(idx, &v)| v == u32::from(idx / n == idx % n))
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!((self.r, self.k), (other.r, other.k));
        let n = self.dim();
        let r = self.r;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for t in 0..n {
                let a = self.at(i, t);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut entries[i * n + j];
                    *cell = field::add(*cell, field::mul(a, other.at(t, j), r), r);
                }
            }
        }
        SymplecticMatrix {
            r,
            k: self.k,
            entries,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.k, self.r);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Row vector times matrix.
    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        let n = self.dim();
        debug_assert_eq!(x.len(), n);
        let mut out = vec![0u32; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = field::add(*o, field::mul(xi, self.at(i, j), self.r), self.r);
            }
        }
        out
    }

    /// Multiplicative order, erroring past `cap` iterations.
    pub fn order(&self, cap: u64) -> Result<u64> {
        let mut acc = self.clone();
        for t in 1..=cap {
            if acc.is_identity() {
                return Ok(t);
            }
            acc = acc.mul(self);
        }
        Err(Error::InvalidParameter(format!(
            "matrix order exceeds cap {cap}"
        )))
    }

    /// Checks M·J·Mᵀ = J on basis pairs.
    pub fn preserves_form(&self) -> bool {
        let n = self.dim();
        let rows: Vec<&[u32]> = (0..n).map(|i| &self.entries[i * n..(i + 1) * n]).collect();
        for i in 0..n {
            for j in 0..n {
                let mut e_i = vec![0u32; n];
                let mut e_j = vec![0u32; n];
                e_i[i] = 1;
                e_j[j] = 1;
                let expect = omega(&e_i, &e_j, self.k, self.r);
                if omega(rows[i], rows[j], self.k, self.r) != expect {
                    return false;
                }
            }
        }
        true
    }

    /// True when Mv = v forces v = 0, i.e. rank(M − I) = 2k.
    pub fn fixed_space_trivial(&self) -> bool {
        let n = self.dim();
        let r = self.r;
        let mut rows: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| field::sub(self.at(i, j), u32::from(i == j), r))
                    .collect()
            })
            .collect();
        let mut rank = 0usize;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = field::inv(rows[rank][col], r);
            for j in 0..n {
                rows[rank][j] = field::mul(rows[rank][j], inv, r);
            }
            for i in 0..n {
                if i != rank && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for j in 0..n {
                        let t = field::mul(f, rows[rank][j], r);
                        rows[i][j] = field::sub(rows[i][j], t, r);
                    }
                }
            }
            rank += 1;
        }
        rank == n
    }

    /// Symplectic transvection x ↦ x + λ·ω(x, v)·v.
    pub fn transvection(v: &[u32], lambda: u32, k: usize, r: u32) -> Self {
        let n = 2 * k;
        debug_assert_eq!(v.len(), n);
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            let mut e_i = vec![0u32; n];
            e_i[i] = 1;
            let coeff = field::mul(lambda, omega(&e_i, v, k, r), r);
            for j in 0..n {
                let mut val = u32::from(i == j);
                val = field::add(val, field::mul(coeff, v[j], r), r);
                entries[i * n + j] = val;
            }
        }
        SymplecticMatrix { r, k, entries }
    }

    /// Stable 64-bit fingerprint of (r, k, entries).
    pub fn fingerprint(&self) -> u64 {
        field::fnv1a64(
            [self.r as u64, self.k as u64]
                .into_iter()
                .chain(self.entries.iter().map(|&v| v as u64)),
        )
    }
}

/// |Sp(2k, r)| = r^(k²) · Π_{i=1..k} (r^{2i} − 1), exactly.
pub fn sp_order(k: usize, r: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidParameter("rank k must be positive".into()));
    }
    if !field::is_prime(r) {
        return Err(Error::InvalidParameter(format!("{r} is not prime")));
    }
    let rb = BigUint::from(r);
    let mut order = rb.pow((k * k) as u32);
    for i in 1..=k {
        order *= rb.pow(2 * i as u32) - BigUint::one();
    }
    Ok(order)
}

/// Smallest m ≥ 1 with p dividing |Sp(2m, q)|.
pub fn minimal_rank(p: u64, q: u64) -> Result<usize> {
    if !field::is_odd_prime(p) || !field::is_odd_prime(q) {
        return Err(Error::InvalidParameter(format!(
            "({p}, {q}): both primes must be odd"
        )));
    }
    if p == q {
        return Err(Error::InvalidParameter("primes must be distinct".into()));
    }
    let pb = BigUint::from(p);
    // p | q^(2m) − 1 once 2m is a multiple of ord_p(q), so m ≤ p − 1.
    for m in 1..=(p as usize) {
        if sp_order(m, q)?.mod_floor(&pb).is_zero() {
            return Ok(m);
        }
    }
    unreachable!("divisibility must occur by m = p - 1");
}

fn verify_certificates(m: &SymplecticMatrix, a: u32) -> Result<()> {
    if m.is_identity() {
        return Err(Error::InvalidParameter("acting matrix is identity".into()));
    }
    if !m.pow(a as u64).is_identity() {
        return Err(Error::InvalidParameter(format!(
            "acting matrix order does not divide {a}"
        )));
    }
    if !m.preserves_form() {
        return Err(Error::InvalidParameter(
            "acting matrix does not preserve the form".into(),
        ));
    }
    if !m.fixed_space_trivial() {
        return Err(Error::InvalidParameter(
            "acting matrix has a nonzero fixed vector".into(),
        ));
    }
    Ok(())
}

/// Exhaustive lexicographic scan of SL(2, r) for the first order-a
/// fixed-point-free element. Deterministic; ignores the seed.
fn search_sl2(a: u32, r: u32) -> Option<SymplecticMatrix> {
    let solve = |m00: u32, m01: u32, m10: u32| -> Vec<u32> {
        // det = m00·m11 − m01·m10 = 1
        if m00 != 0 {
            let m11 = field::mul(
                field::add(1, field::mul(m01, m10, r), r),
                field::inv(m00, r),
                r,
            );
            vec![m11]
        } else if field::mul(m01, m10, r) == r - 1 {
            (0..r).collect()
        } else {
            vec![]
        }
    };
    for m00 in 0..r {
        for m01 in 0..r {
            for m10 in 0..r {
                for m11 in solve(m00, m01, m10) {
                    let m = SymplecticMatrix {
                        r,
                        k: 1,
                        entries: vec![m00, m01, m10, m11],
                    };
                    if m.is_identity() || !m.pow(a as u64).is_identity() {
                        continue;
                    }
                    if m.fixed_space_trivial() {
                        return Some(m);
                    }
                }
            }
        }
    }
    None
}

/// Seeded random search: products of random transvections, powered down
/// to order a, certified fixed-point-free.
fn search_random(a: u32, r: u32, k: usize, seed: u64, budget: u64) -> Option<SymplecticMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * k;
    for _ in 0..budget {
        let mut g = SymplecticMatrix::identity(k, r);
        for _ in 0..(3 * n + 4) {
            let mut v = vec![0u32; n];
            while v.iter().all(|&x| x == 0) {
                for x in v.iter_mut() {
                    *x = rng.gen_range(0..r);
                }
            }
            let lambda = rng.gen_range(1..r);
            g = g.mul(&SymplecticMatrix::transvection(&v, lambda, k, r));
        }
        let Ok(d) = g.order(100_000) else { continue };
        if d % a as u64 != 0 {
            continue;
        }
        let m = g.pow(d / a as u64);
        if !m.is_identity() && m.fixed_space_trivial() {
            return Some(m);
        }
    }
    None
}

const SEARCH_BUDGET: u64 = 100_000;

/// Finds M ∈ Sp(2k, r) with M^a = I, M ≠ I and no nonzero fixed vector.
/// Exhaustive for k = 1, seeded-random for k ≥ 2; the result is certified
/// before it is returned and optionally cached on disk per (a, r, k).
pub fn find_acting_matrix(
    a: u32,
    r: u32,
    k: usize,
    seed: u64,
    cache_dir: Option<&std::path::Path>,
) -> Result<SymplecticMatrix> {
    if !field::is_prime(a as u64) || !field::is_prime(r as u64) {
        return Err(Error::InvalidParameter(format!(
            "(a={a}, r={r}): both must be prime"
        )));
    }
    let order = sp_order(k, r as u64)?;
    if !order.mod_floor(&BigUint::from(a)).is_zero() {
        return Err(Error::InvalidParameter(format!(
            "{a} does not divide |Sp({}, {r})| = {order}",
            2 * k
        )));
    }
    if let Some(dir) = cache_dir {
        if let Some(m) = crate::cache::load(dir, a, r, k)? {
            if verify_certificates(&m, a).is_ok() {
                return Ok(m);
            }
            // stale or corrupt entry: fall through and recompute
        }
    }
    let found = if k == 1 {
        search_sl2(a, r)
    } else {
        search_random(a, r, k, seed, SEARCH_BUDGET)
    };
    let m = found.ok_or(Error::SearchExhausted {
        a,
        r,
        k,
        attempts: SEARCH_BUDGET,
    })?;
    verify_certificates(&m, a)?;
    if let Some(dir) = cache_dir {
        crate::cache::store(dir, a, &m)?;
    }
    Ok(m)
}
