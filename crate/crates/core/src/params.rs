//! Derived parameters for an amalgam instance: the two odd primes, the
//! minimal symplectic ranks on each side, and all group orders.

use crate::error::{Error, Result};
use crate::field::is_odd_prime;
use crate::symplectic::minimal_rank;
use num_bigint::BigUint;
use serde::Serialize;

/// The primes (p, q) with the minimal ranks m, n: side A is the
/// extraspecial q-group of order q^(2m+1) extended by an order-p acting
/// element, side B mirrors it with the roles swapped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmalgamParams {
    pub p: u64,
    pub q: u64,
    pub m: usize,
    pub n: usize,
}

impl AmalgamParams {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if !is_odd_prime(p) || !is_odd_prime(q) {
            return Err(Error::InvalidParameter(format!(
                "p = {p}, q = {q}: both must be odd primes"
            )));
        }
        if p == q {
            return Err(Error::InvalidParameter(format!(
                "p and q must be distinct (got {p})"
            )));
        }
        let m = minimal_rank(p, q)?;
        let n = minimal_rank(q, p)?;
        Ok(AmalgamParams { p, q, m, n })
    }

    /// |Q| = q^(2m+1)
    pub fn order_q(&self) -> BigUint {
        BigUint::from(self.q).pow(2 * self.m as u32 + 1)
    }

    /// |P| = p^(2n+1)
    pub fn order_p(&self) -> BigUint {
        BigUint::from(self.p).pow(2 * self.n as u32 + 1)
    }

    /// |A| = p·q^(2m+1)
    pub fn order_a(&self) -> BigUint {
        self.order_q() * BigUint::from(self.p)
    }

    /// |B| = q·p^(2n+1)
    pub fn order_b(&self) -> BigUint {
        self.order_p() * BigUint::from(self.q)
    }

    /// |C| = pq
    pub fn order_c(&self) -> u64 {
        self.p * self.q
    }

    /// The factor order for a side, as u64 when it fits under `cap`.
    pub fn factor_order_checked(&self, side_a: bool, cap: u64) -> Result<u64> {
        let (what, order) = if side_a {
            ("factor A", self.order_a())
        } else {
            ("factor B", self.order_b())
        };
        if order > BigUint::from(cap) {
            return Err(Error::SizeCap {
                what: what.into(),
                order,
                cap,
            });
        }
        Ok(num_traits::ToPrimitive::to_u64(&order).expect("order fits under the cap"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derives_ranks_and_orders() {
        let p35 = AmalgamParams::new(3, 5).unwrap();
        assert_eq!((p35.m, p35.n), (1, 2));
        assert_eq!(p35.order_a(), BigUint::from(375u32));
        assert_eq!(p35.order_b(), BigUint::from(1215u32));
        assert_eq!(p35.order_c(), 15);

        let p37 = AmalgamParams::new(3, 7).unwrap();
        assert_eq!((p37.m, p37.n), (1, 3));
        assert_eq!(p37.order_b(), BigUint::from(15309u32));

        let p53 = AmalgamParams::new(5, 3).unwrap();
        assert_eq!((p53.m, p53.n), (2, 1));
    }

    #[test]
    fn swap_symmetry() {
        for (p, q) in [(3u64, 5u64), (3, 7), (5, 7), (3, 13)] {
            let a = AmalgamParams::new(p, q).unwrap();
            let b = AmalgamParams::new(q, p).unwrap();
            assert_eq!((a.m, a.n), (b.n, b.m));
            assert_eq!(a.order_a(), b.order_b());
            assert_eq!(a.order_b(), b.order_a());
        }
    }

    #[test]
    fn rejections() {
        assert!(AmalgamParams::new(3, 3).is_err());
        assert!(AmalgamParams::new(2, 5).is_err());
        assert!(AmalgamParams::new(3, 9).is_err());
        assert!(AmalgamParams::new(15, 7).is_err());
    }

    #[test]
    fn size_cap() {
        let p = AmalgamParams::new(11, 13).unwrap();
        // 13^(2m+1) blows past 10^6
        let err = p.factor_order_checked(true, 1_000_000).unwrap_err();
        assert!(matches!(err, Error::SizeCap { .. }));
        let ok = AmalgamParams::new(3, 5).unwrap();
        assert_eq!(ok.factor_order_checked(true, 1_000_000).unwrap(), 375);
        assert_eq!(ok.factor_order_checked(false, 1_000_000).unwrap(), 1215);
    }
}
