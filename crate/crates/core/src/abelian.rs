//! Structure of finite abelian groups given by a multiplication table on
//! dense labels 0..n with identity 0. Invariant factors are derived from
//! order statistics (counting solutions of g^(ℓ^j) = 1 per prime ℓ),
//! which is independent of the matrix-based route used for the amalgam
//! abelianization.

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn element_orders(n: usize, table: &[Vec<u32>]) -> Vec<u64> {
    (0..n)
        .map(|g| {
            let mut acc = g as u32;
            let mut t = 1u64;
            while acc != 0 {
                acc = table[acc as usize][g];
                t += 1;
            }
            t
        })
        .collect()
}

/// Invariant factors d₁ | d₂ | … | d_s (ascending), empty for the
/// trivial group.
pub fn invariant_factors(n: usize, table: &[Vec<u32>]) -> Vec<u64> {
    if n <= 1 {
        return Vec::new();
    }
    let orders = element_orders(n, table);
    // one partition per prime: λ₁ ≥ λ₂ ≥ … with Σ min(λ_t, j) determined
    // by counting elements of order dividing ℓ^j
    let mut partitions: Vec<Vec<u32>> = Vec::new();
    for (l, _) in prime_factors(n as u64) {
        let mut col_counts = Vec::new(); // μ_j = #{t : λ_t ≥ j}
        let mut prev_log = 0u32;
        let mut j = 1u32;
        loop {
            let lj = l.pow(j);
            let count = orders.iter().filter(|&&o| lj % o == 0).count() as u64;
            let mut log = 0u32;
            let mut c = count;
            while c > 1 {
                debug_assert_eq!(c % l, 0, "abelian order-count must be a power of {l}");
                c /= l;
                log += 1;
            }
            if log == prev_log {
                break;
            }
            col_counts.push(log - prev_log);
            prev_log = log;
            j += 1;
        }
        // conjugate partition: λ_t = #{j : μ_j ≥ t}
        let max_t = col_counts.first().copied().unwrap_or(0);
        let lambda: Vec<u32> = (1..=max_t)
            .map(|t| col_counts.iter().filter(|&&m| m >= t).count() as u32)
            .collect();
        partitions.push(
            lambda
                .iter()
                .map(|&e| (l, e))
                .map(|(l, e)| l.pow(e) as u32)
                .collect(),
        );
    }
    let s = partitions.iter().map(|p| p.len()).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..s)
        .map(|i| {
            partitions
                .iter()
                .map(|p| p.get(i).copied().unwrap_or(1) as u64)
                .product()
        })
        .collect();
    factors.reverse(); // ascending divisibility chain
    factors
}
