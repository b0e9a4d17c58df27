//! Scalar arithmetic in prime fields F_r for the small odd primes the
//! constructions run over. Values are kept reduced in `0..r`.

/// Trial-division primality test; the primes here never exceed a few hundred.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n % 2 == 1 && is_prime(n)
}

#[inline]
pub fn add(a: u32, b: u32, r: u32) -> u32 {
    let s = a + b;
    if s >= r {
        s - r
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u32, b: u32, r: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + r - b
    }
}

#[inline]
pub fn neg(a: u32, r: u32) -> u32 {
    if a == 0 {
        0
    } else {
        r - a
    }
}

#[inline]
pub fn mul(a: u32, b: u32, r: u32) -> u32 {
    ((a as u64 * b as u64) % r as u64) as u32
}

pub fn pow(mut base: u32, mut exp: u64, r: u32) -> u32 {
    let mut acc = 1u32;
    base %= r;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, r);
        }
        base = mul(base, base, r);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse mod the prime r (Fermat).
pub fn inv(a: u32, r: u32) -> u32 {
    debug_assert!(a % r != 0, "zero has no inverse");
    pow(a, r as u64 - 2, r)
}

/// The inverse of 2 mod an odd prime, i.e. (r + 1) / 2.
#[inline]
pub fn half(r: u32) -> u32 {
    (r + 1) / 2
}

/// FNV-1a over little-endian u64 chunks; used wherever a stable,
/// platform-independent fingerprint is needed (std hashers are not
/// stable across releases).
pub fn fnv1a64(words: impl IntoIterator<Item = u64>) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for w in words {
        for byte in w.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

/// splitmix64; derives per-trial RNG seeds from (seed, trial index) so
/// serial and parallel verification runs agree bit for bit.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(0x9e3779b97f4a7c15)
        .wrapping_add(index.wrapping_mul(0xbf58476d1ce4e5b9));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
