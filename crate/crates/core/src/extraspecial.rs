//! Extraspecial groups of exponent r and order r^(2k+1) for odd primes r,
//! in the alternating-form model: an element is a vector over F_r plus a
//! central coordinate, multiplied by
//! `(x, c)·(x', c') = (x + x', c + c' + 2⁻¹·ω(x, x'))`,
//! which gives exponent r directly and lets symplectic matrices act as
//! automorphisms fixing the center pointwise.

use crate::error::{Error, Result};
use crate::field;
use crate::symplectic::{omega, SymplecticMatrix};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExtraspecialElement {
    pub r: u32,
    /// Vector part, length 2k.
    pub x: Vec<u32>,
    /// Central coordinate.
    pub c: u32,
}

impl ExtraspecialElement {
    pub fn new(r: u32, x: Vec<u32>, c: u32) -> Self {
        debug_assert!(x.len() % 2 == 0);
        debug_assert!(x.iter().all(|&v| v < r) && c < r);
        ExtraspecialElement { r, x, c }
    }

    pub fn identity(r: u32, k: usize) -> Self {
        ExtraspecialElement {
            r,
            x: vec![0; 2 * k],
            c: 0,
        }
    }

    /// Central generator (0, 1).
    pub fn central(r: u32, k: usize, c: u32) -> Self {
        ExtraspecialElement {
            r,
            x: vec![0; 2 * k],
            c: c % r,
        }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.x.len() / 2
    }

    pub fn is_identity(&self) -> bool {
        self.c == 0 && self.x.iter().all(|&v| v == 0)
    }

    pub fn is_central(&self) -> bool {
        self.x.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.x.len() != other.x.len() {
            return Err(Error::OperandMismatch(format!(
                "extraspecial operands over (r={}, 2k={}) vs (r={}, 2k={})",
                self.r,
                self.x.len(),
                other.r,
                other.x.len()
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn mul_unchecked(&self, other: &Self) -> Self {
        let r = self.r;
        let k = self.rank();
        let x: Vec<u32> = self
            .x
            .iter()
            .zip(&other.x)
            .map(|(&a, &b)| field::add(a, b, r))
            .collect();
        let tw = field::mul(field::half(r), omega(&self.x, &other.x, k, r), r);
        let c = field::add(field::add(self.c, other.c, r), tw, r);
        ExtraspecialElement { r, x, c }
    }

    pub fn inverse(&self) -> Self {
        ExtraspecialElement {
            r: self.r,
            x: self.x.iter().map(|&v| field::neg(v, self.r)).collect(),
            c: field::neg(self.c, self.r),
        }
    }

    /// (x, c)^t = (t·x, t·c): ω vanishes on the diagonal.
    pub fn power(&self, t: i64) -> Self {
        let r = self.r;
        let tm = t.rem_euclid(r as i64) as u32;
        ExtraspecialElement {
            r,
            x: self.x.iter().map(|&v| field::mul(v, tm, r)).collect(),
            c: field::mul(self.c, tm, r),
        }
    }

    /// [g, h] = g⁻¹h⁻¹gh = (0, ω(x, x')).
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let k = self.rank();
        Ok(ExtraspecialElement {
            r: self.r,
            x: vec![0; 2 * k],
            c: omega(&self.x, &other.x, k, self.r),
        })
    }

    /// Image under a symplectic matrix: (xM, c).
    pub fn act(&self, m: &SymplecticMatrix) -> Self {
        debug_assert_eq!(m.r, self.r);
        ExtraspecialElement {
            r: self.r,
            x: m.apply(&self.x),
            c: self.c,
        }
    }
}

/// All r^(2k+1) elements, lexicographic in (x, c).
pub fn enumerate(r: u32, k: usize) -> Vec<ExtraspecialElement> {
    let n = 2 * k;
    let total = (r as u64).pow(n as u32 + 1);
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0u32; n + 1];
    loop {
        out.push(ExtraspecialElement {
            r,
            x: digits[..n].to_vec(),
            c: digits[n],
        });
        // increment, last digit fastest
        let mut i = n + 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < r {
                break;
            }
            digits[i] = 0;
        }
    }
}
