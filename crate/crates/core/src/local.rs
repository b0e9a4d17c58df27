//! The finite building blocks of the amalgam: a local factor is the
//! semidirect product of an extraspecial group with a cyclic group of
//! acting automorphisms (order p acting on the q-side and vice versa).
//!
//! Elements are indexed by a dense mixed-radix code that agrees with the
//! lexicographic order on (vector part, central coordinate, acting
//! exponent); every deterministic enumeration in the crate derives from
//! that order.

use crate::error::{Error, Result};
use crate::extraspecial::{self, ExtraspecialElement};
use crate::field;
use crate::params::AmalgamParams;
use crate::symplectic::{find_acting_matrix, SymplecticMatrix};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

/// Element (h, s): extraspecial part and acting exponent, multiplied by
/// (h₁, s₁)·(h₂, s₂) = (h₁·σ^{s₁}(h₂), s₁ + s₂).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LocalElement {
    pub h: ExtraspecialElement,
    pub s: u32,
}

impl LocalElement {
    pub fn is_identity(&self) -> bool {
        self.s == 0 && self.h.is_identity()
    }
}

/// One side of the amalgam, fully enumerated.
pub struct LocalFactor {
    pub side: Side,
    /// Extraspecial prime (q on side A, p on side B).
    pub r: u32,
    /// Symplectic rank (m on side A, n on side B).
    pub k: usize,
    /// Order of the acting cyclic group (p on side A, q on side B).
    pub a: u32,
    pub matrix: SymplecticMatrix,
    powers: Vec<SymplecticMatrix>,
    elems: Vec<LocalElement>,
}

/// Exhaustively verified Carter data: a cyclic self-normalizing subgroup
/// of order r·a generated by (central of the extraspecial part)·(acting
/// generator).
pub struct CarterData {
    pub generator: LocalElement,
    pub generator_code: u64,
    /// Sorted element codes of the subgroup.
    pub elements: Vec<u64>,
}

/// Outcome of the bracket generation check [extraspecial, acting] =
/// extraspecial.
pub struct BracketReport {
    pub full: bool,
    pub subgroup_size: usize,
    /// An extraspecial element missed by the bracket subgroup, when not
    /// full.
    pub missing: Option<u64>,
}

impl LocalFactor {
    /// Builds the factor for one side of the parameter set, searching (or
    /// loading) the acting matrix and certifying its action.
    pub fn build(
        params: &AmalgamParams,
        side: Side,
        seed: u64,
        cache_dir: Option<&Path>,
        size_cap: u64,
    ) -> Result<LocalFactor> {
        let order = params.factor_order_checked(side == Side::A, size_cap)?;
        let (r, k, a) = match side {
            Side::A => (params.q as u32, params.m, params.p as u32),
            Side::B => (params.p as u32, params.n, params.q as u32),
        };
        let side_seed = field::mix_seed(seed, side as u64);
        let matrix = find_acting_matrix(a, r, k, side_seed, cache_dir)?;
        let factor = Self::from_matrix(side, r, k, a, matrix);
        debug_assert_eq!(factor.order(), order);
        Ok(factor)
    }

    /// Builds a factor from an explicit acting matrix without the
    /// fixed-point-freeness certificate. Negative-control tests use this
    /// to construct factors with degenerate actions.
    pub fn from_matrix(side: Side, r: u32, k: usize, a: u32, matrix: SymplecticMatrix) -> Self {
        assert_eq!((matrix.r, matrix.k), (r, k));
        assert!(
            matrix.pow(a as u64).is_identity(),
            "matrix order must divide a"
        );
        let mut powers = Vec::with_capacity(a as usize);
        let mut acc = SymplecticMatrix::identity(k, r);
        for _ in 0..a {
            powers.push(acc.clone());
            acc = acc.mul(&matrix);
        }
        let mut elems = Vec::new();
        for h in extraspecial::enumerate(r, k) {
            for s in 0..a {
                elems.push(LocalElement { h: h.clone(), s });
            }
        }
        LocalFactor {
            side,
            r,
            k,
            a,
            matrix,
            powers,
            elems,
        }
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    /// Order of the extraspecial subgroup r^(2k+1).
    #[inline]
    pub fn es_order(&self) -> u64 {
        self.order() / self.a as u64
    }

    #[inline]
    pub fn element(&self, code: u64) -> &LocalElement {
        &self.elems[code as usize]
    }

    pub fn identity_code(&self) -> u64 {
        0
    }

    pub fn encode(&self, e: &LocalElement) -> u64 {
        debug_assert_eq!(e.h.r, self.r);
        let mut v = 0u64;
        for &d in &e.h.x {
            v = v * self.r as u64 + d as u64;
        }
        v = v * self.r as u64 + e.h.c as u64;
        v * self.a as u64 + e.s as u64
    }

    pub fn mul(&self, g1: &LocalElement, g2: &LocalElement) -> LocalElement {
        let twisted = g2.h.act(&self.powers[g1.s as usize]);
        LocalElement {
            h: g1.h.mul_unchecked(&twisted),
            s: (g1.s + g2.s) % self.a,
        }
    }

    pub fn inverse(&self, g: &LocalElement) -> LocalElement {
        let s_inv = (self.a - g.s) % self.a;
        LocalElement {
            h: g.h.inverse().act(&self.powers[s_inv as usize]),
            s: s_inv,
        }
    }

    /// Code-level multiply on stack buffers; the hot path of word
    /// reduction.
    pub fn mul_codes(&self, c1: u64, c2: u64) -> u64 {
        let g1 = &self.elems[c1 as usize];
        let g2 = &self.elems[c2 as usize];
        let r = self.r;
        let n = 2 * self.k;
        let m = &self.powers[g1.s as usize];
        let mut tx = [0u32; 12];
        // σ^{s₁}(x₂), then add x₁
        for (i, &xi) in g2.h.x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..n {
                tx[j] = field::add(tx[j], field::mul(xi, m.at(i, j), r), r);
            }
        }
        let mut om = 0u32;
        for i in 0..self.k {
            let pos = field::mul(g1.h.x[i], tx[self.k + i], r);
            let neg = field::mul(g1.h.x[self.k + i], tx[i], r);
            om = field::add(om, field::sub(pos, neg, r), r);
        }
        let mut code = 0u64;
        for j in 0..n {
            code = code * r as u64 + field::add(g1.h.x[j], tx[j], r) as u64;
        }
        let c = field::add(
            field::add(g1.h.c, g2.h.c, r),
            field::mul(field::half(r), om, r),
            r,
        );
        code = code * r as u64 + c as u64;
        code * self.a as u64 + ((g1.s + g2.s) % self.a) as u64
    }

    pub fn inverse_code(&self, c: u64) -> u64 {
        self.encode(&self.inverse(&self.elems[c as usize]))
    }

    pub fn conjugate_code(&self, g: u64, by: u64) -> u64 {
        self.mul_codes(self.mul_codes(self.inverse_code(by), g), by)
    }

    pub fn element_order(&self, code: u64) -> u64 {
        let mut acc = code;
        for t in 1..=self.order() {
            if acc == 0 {
                return t;
            }
            acc = self.mul_codes(acc, code);
        }
        unreachable!("order must divide the group order");
    }

    /// The acting generator σ = (1, 1).
    pub fn acting_generator_code(&self) -> u64 {
        1
    }

    /// The central generator z = ((0, 1), 0).
    pub fn central_generator_code(&self) -> u64 {
        self.a as u64
    }

    /// Codes of the extraspecial subgroup {(h, 0)}.
    pub fn es_codes(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.es_order()).map(|i| i * self.a as u64)
    }

    /// Subgroup generated by `gens`, as sorted codes; errors past `cap`.
    pub fn subgroup_closure(&self, gens: &[u64], cap: usize) -> Result<Vec<u64>> {
        let mut seen = vec![false; self.elems.len()];
        seen[0] = true;
        let mut out = vec![0u64];
        let mut queue = vec![0u64];
        while let Some(g) = queue.pop() {
            for &h in gens {
                let w = self.mul_codes(g, h);
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    if out.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    out.push(w);
                    queue.push(w);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Elements commuting with every target, by exhaustive scan.
    pub fn centralizer(&self, targets: &[u64]) -> Vec<u64> {
        (0..self.order())
            .filter(|&g| {
                targets
                    .iter()
                    .all(|&t| self.mul_codes(g, t) == self.mul_codes(t, g))
            })
            .collect()
    }

    /// Elements g with g⁻¹·H·g = H, by exhaustive scan.
    pub fn normalizer(&self, subgroup: &[u64]) -> Vec<u64> {
        let mut member = vec![false; self.elems.len()];
        for &h in subgroup {
            member[h as usize] = true;
        }
        (0..self.order())
            .filter(|&g| {
                let gi = self.inverse_code(g);
                subgroup
                    .iter()
                    .all(|&h| member[self.mul_codes(self.mul_codes(gi, h), g) as usize])
            })
            .collect()
    }

    /// The Carter subgroup ⟨z·σ⟩: cyclic of order r·a, exhaustively
    /// checked to be self-normalizing. Fails loudly otherwise, which
    /// would indicate an acting matrix with fixed points.
    pub fn carter_subgroup(&self) -> Result<CarterData> {
        let d = self.mul_codes(self.central_generator_code(), self.acting_generator_code());
        let expected = self.r as u64 * self.a as u64;
        if self.element_order(d) != expected {
            return Err(Error::InvalidParameter(format!(
                "carter generator has order {} on side {}, expected {expected}",
                self.element_order(d),
                self.side
            )));
        }
        let elements = self.subgroup_closure(&[d], expected as usize + 1)?;
        if elements.len() as u64 != expected {
            return Err(Error::InvalidParameter(format!(
                "carter subgroup on side {} has {} elements, expected {expected}",
                self.side,
                elements.len()
            )));
        }
        let normalizer = self.normalizer(&elements);
        if normalizer != elements {
            return Err(Error::InvalidParameter(format!(
                "carter subgroup on side {} is not self-normalizing ({} normalizing elements)",
                self.side,
                normalizer.len()
            )));
        }
        Ok(CarterData {
            generator: self.elems[d as usize].clone(),
            generator_code: d,
            elements,
        })
    }

    /// Closure of {g⁻¹·σ(g) : g in the extraspecial subgroup}; the full
    /// extraspecial subgroup exactly when the action is fixed-point-free
    /// on the central quotient.
    pub fn bracket_subgroup(&self) -> Result<Vec<u64>> {
        let mut gens = Vec::new();
        for code in self.es_codes() {
            let g = &self.elems[code as usize];
            let image = LocalElement {
                h: g.h.act(&self.matrix),
                s: 0,
            };
            let b = self.mul(&self.inverse(g), &image);
            let bc = self.encode(&b);
            if bc != 0 {
                gens.push(bc);
            }
        }
        if gens.is_empty() {
            return Ok(vec![0]);
        }
        self.subgroup_closure(&gens, self.elems.len())
    }

    /// Checks that the bracket subgroup is the whole extraspecial
    /// subgroup; on failure the report carries a missed element as
    /// witness.
    pub fn bracket_check(&self) -> Result<BracketReport> {
        let sub = self.bracket_subgroup()?;
        let full = sub.len() as u64 == self.es_order();
        let missing = if full {
            None
        } else {
            let mut member = vec![false; self.elems.len()];
            for &h in &sub {
                member[h as usize] = true;
            }
            self.es_codes().find(|&c| !member[c as usize])
        };
        Ok(BracketReport {
            full,
            subgroup_size: sub.len(),
            missing,
        })
    }

    /// Codes of the extraspecial basis vectors (e_i, 0); together with
    /// the acting generator they generate the factor.
    pub fn es_basis_codes(&self) -> Vec<u64> {
        let n = 2 * self.k;
        (0..n)
            .map(|i| {
                let mut x = vec![0u32; n];
                x[i] = 1;
                self.encode(&LocalElement {
                    h: ExtraspecialElement::new(self.r, x, 0),
                    s: 0,
                })
            })
            .collect()
    }

    pub fn standard_generators(&self) -> Vec<u64> {
        let mut gens = self.es_basis_codes();
        gens.push(self.acting_generator_code());
        gens
    }

    /// Invariant factors of factor/[factor, factor], ascending.
    pub fn abelianization(&self) -> Result<Vec<u64>> {
        let derived = self.derived_subgroup(&self.standard_generators())?;
        let (_, qmul, order) = self.quotient(&derived);
        Ok(crate::abelian::invariant_factors(order, &qmul))
    }

    /// Invariant factors of the extraspecial subgroup alone modulo its
    /// derived subgroup: elementary abelian of rank 2k.
    pub fn es_abelianization(&self) -> Result<Vec<u64>> {
        let basis = self.es_basis_codes();
        let mut seeds = Vec::new();
        for &g in &basis {
            for &h in &basis {
                let c = self.mul_codes(
                    self.mul_codes(self.inverse_code(g), self.inverse_code(h)),
                    self.mul_codes(g, h),
                );
                if c != 0 {
                    seeds.push(c);
                }
            }
        }
        // commutators of Q are central, so the plain closure is already
        // normal in Q
        let derived = self.subgroup_closure(&seeds, self.elems.len())?;
        let sub: Vec<u64> = self.es_codes().collect();
        let (table, order) = self.subgroup_quotient_table(&sub, &derived);
        Ok(crate::abelian::invariant_factors(order, &table))
    }

    /// Coset labelling of `sub` by a normal subgroup `normal` of it,
    /// returning the quotient multiplication table on coset labels.
    pub fn subgroup_quotient_table(&self, sub: &[u64], normal: &[u64]) -> (Vec<Vec<u32>>, usize) {
        use std::collections::HashMap;
        let mut label: HashMap<u64, u32> = HashMap::with_capacity(sub.len());
        let mut reps: Vec<u64> = Vec::new();
        for &code in sub {
            if label.contains_key(&code) {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(code);
            for &h in normal {
                label.insert(self.mul_codes(h, code), id);
            }
        }
        let order = reps.len();
        let mut table = vec![vec![0u32; order]; order];
        for (i, &gi) in reps.iter().enumerate() {
            for (j, &gj) in reps.iter().enumerate() {
                table[i][j] = label[&self.mul_codes(gi, gj)];
            }
        }
        (table, order)
    }

    /// Derived subgroup as the normal closure of commutators of the
    /// generating set.
    pub fn derived_subgroup(&self, gens: &[u64]) -> Result<Vec<u64>> {
        let mut seeds: Vec<u64> = Vec::new();
        for &g in gens {
            for &h in gens {
                let c = self.mul_codes(
                    self.mul_codes(self.inverse_code(g), self.inverse_code(h)),
                    self.mul_codes(g, h),
                );
                if c != 0 {
                    seeds.push(c);
                }
            }
        }
        loop {
            let closure = self.subgroup_closure(&seeds, self.elems.len())?;
            let mut grew = false;
            let mut member = vec![false; self.elems.len()];
            for &h in &closure {
                member[h as usize] = true;
            }
            'outer: for &h in &closure {
                for &g in gens {
                    let c = self.conjugate_code(h, g);
                    if !member[c as usize] {
                        seeds.push(c);
                        grew = true;
                        break 'outer;
                    }
                }
            }
            if !grew {
                return Ok(closure);
            }
        }
    }

    /// Right-coset labelling by a normal subgroup: returns coset labels
    /// per code, lex-least representatives, and a label-level multiply.
    pub fn quotient(&self, normal: &[u64]) -> (Vec<u32>, Vec<Vec<u32>>, usize) {
        let total = self.elems.len();
        let mut label = vec![u32::MAX; total];
        let mut reps: Vec<u64> = Vec::new();
        for code in 0..total as u64 {
            if label[code as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(code);
            for &h in normal {
                label[self.mul_codes(h, code) as usize] = id;
            }
        }
        let order = reps.len();
        let mut table = vec![vec![0u32; order]; order];
        for (i, &gi) in reps.iter().enumerate() {
            for (j, &gj) in reps.iter().enumerate() {
                table[i][j] = label[self.mul_codes(gi, gj) as usize];
            }
        }
        (label, table, order)
    }
}
