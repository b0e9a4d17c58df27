//! Canonical words of the amalgam: a leading C-part followed by strictly
//! alternating transversal letters. Two words are equal in the group iff
//! their canonical fields coincide, so equality is structural.
//!
//! Reduction works right to left: appending a factor element merges at
//! the seam, re-decomposes against the fixed transversal, and pushes the
//! emerging C-part through the remaining letters (which permutes cosets
//! but never changes sides or length).

use crate::context::{AmalgamContext, CElem, Letter};
use crate::error::{Error, Result};
use crate::field;
use crate::local::Side;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmalgamWord {
    c: CElem,
    letters: Vec<Letter>,
    fingerprint: u64,
}

impl AmalgamWord {
    pub fn c_part(&self) -> CElem {
        self.c
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.c.is_identity() && self.letters.is_empty()
    }

    /// Whether the word lies in C.
    pub fn in_c(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether the word lies in the given factor (a C-element lies in both).
    pub fn in_factor(&self, side: Side) -> bool {
        match self.letters.len() {
            0 => true,
            1 => self.letters[0].side == side,
            _ => false,
        }
    }
}

/// Finite order or a distinguished infinite marker; words with a cyclic
/// core of two or more letters act hyperbolically on the tree and never
/// have finite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    c: [u32; 2],
    letters: Vec<LetterJson>,
    fingerprint: String,
}

#[derive(Serialize, Deserialize)]
struct LetterJson {
    f: String,
    r: u32,
}

impl AmalgamContext {
    pub fn identity_word(&self) -> AmalgamWord {
        AmalgamWord {
            c: CElem::IDENTITY,
            letters: Vec::new(),
            fingerprint: self.fingerprint(),
        }
    }

    pub fn word_from_c(&self, c: CElem) -> AmalgamWord {
        AmalgamWord {
            c,
            letters: Vec::new(),
            fingerprint: self.fingerprint(),
        }
    }

    /// The injective embedding of a factor element, one letter at most.
    pub fn embed(&self, side: Side, code: u64) -> AmalgamWord {
        let (c, idx) = self.coset_decompose(side, code);
        let mut letters = Vec::new();
        if idx != 0 {
            letters.push(Letter { side, idx });
        }
        AmalgamWord {
            c,
            letters,
            fingerprint: self.fingerprint(),
        }
    }

    fn assert_same_context(&self, w: &AmalgamWord) {
        assert!(
            w.fingerprint == self.fingerprint(),
            "word belongs to a different context (fingerprint {:016x}, context {:016x})",
            w.fingerprint,
            self.fingerprint()
        );
    }

    /// Pushes a C-element through the word from the right end to the
    /// front; sides and letter count are invariant.
    fn push_c(&self, w: &mut AmalgamWord, c: CElem) {
        let mut carry = c;
        if carry.is_identity() {
            return;
        }
        for letter in w.letters.iter_mut().rev() {
            let factor = self.factor(letter.side);
            let merged = factor.mul_codes(
                self.rep_code(letter.side, letter.idx),
                self.c_code(letter.side, carry),
            );
            let (c_new, idx_new) = self.coset_decompose(letter.side, merged);
            debug_assert_ne!(idx_new, 0, "rep·c cannot fall into C");
            letter.idx = idx_new;
            carry = c_new;
            if carry.is_identity() {
                break;
            }
        }
        w.c = self.c_add(w.c, carry);
    }

    /// Multiplies the word on the right by one raw factor element,
    /// keeping the canonical form.
    fn append_element(&self, w: &mut AmalgamWord, side: Side, code: u64) {
        if code == 0 {
            return;
        }
        let factor = self.factor(side);
        if let Some(&last) = w.letters.last() {
            if last.side == side {
                let merged = factor.mul_codes(self.rep_code(side, last.idx), code);
                w.letters.pop();
                let (c2, idx2) = self.coset_decompose(side, merged);
                self.push_c(w, c2);
                if idx2 != 0 {
                    w.letters.push(Letter { side, idx: idx2 });
                }
                return;
            }
            let (c2, idx2) = self.coset_decompose(side, code);
            self.push_c(w, c2);
            if idx2 != 0 {
                w.letters.push(Letter { side, idx: idx2 });
            }
            return;
        }
        // no letters: fold the C-part in directly
        let combined = factor.mul_codes(self.c_code(side, w.c), code);
        let (c2, idx2) = self.coset_decompose(side, combined);
        w.c = c2;
        if idx2 != 0 {
            w.letters.push(Letter { side, idx: idx2 });
        }
    }

    pub fn multiply(&self, w1: &AmalgamWord, w2: &AmalgamWord) -> AmalgamWord {
        self.assert_same_context(w1);
        self.assert_same_context(w2);
        let mut acc = w1.clone();
        self.push_c(&mut acc, w2.c);
        for letter in &w2.letters {
            self.append_element(
                &mut acc,
                letter.side,
                self.rep_code(letter.side, letter.idx),
            );
        }
        acc
    }

    pub fn inverse(&self, w: &AmalgamWord) -> AmalgamWord {
        let mut acc = self.identity_word();
        for letter in w.letters.iter().rev() {
            let code = self.rep_code(letter.side, letter.idx);
            self.append_element(
                &mut acc,
                letter.side,
                self.factor(letter.side).inverse_code(code),
            );
        }
        self.push_c(&mut acc, self.c_neg(w.c));
        acc
    }

    /// x⁻¹·g·x.
    pub fn conjugate(&self, g: &AmalgamWord, x: &AmalgamWord) -> AmalgamWord {
        self.multiply(&self.multiply(&self.inverse(x), g), x)
    }

    pub fn commutator(&self, g: &AmalgamWord, h: &AmalgamWord) -> AmalgamWord {
        self.multiply(
            &self.multiply(&self.inverse(g), &self.inverse(h)),
            &self.multiply(g, h),
        )
    }

    pub fn commutes(&self, g: &AmalgamWord, h: &AmalgamWord) -> bool {
        self.multiply(g, h) == self.multiply(h, g)
    }

    /// Cyclic reduction: returns (core, conjugator) with
    /// w = conjugator⁻¹ · core · conjugator and the core either of length
    /// ≤ 1 or with first and last letters in different factors.
    pub fn cyclic_reduce(&self, w: &AmalgamWord) -> (AmalgamWord, AmalgamWord) {
        let mut core = w.clone();
        let mut syllables = self.identity_word();
        while core.letters.len() >= 2
            && core.letters.first().unwrap().side == core.letters.last().unwrap().side
        {
            let u = AmalgamWord {
                c: core.c,
                letters: vec![core.letters[0]],
                fingerprint: core.fingerprint,
            };
            let before = core.letters.len();
            core = self.multiply(&self.multiply(&self.inverse(&u), &core), &u);
            debug_assert!(core.letters.len() < before);
            syllables = self.multiply(&syllables, &u);
        }
        (core, self.inverse(&syllables))
    }

    pub fn element_order(&self, w: &AmalgamWord) -> ElementOrder {
        let (core, _) = self.cyclic_reduce(w);
        match core.letters.len() {
            0 => ElementOrder::Finite(self.c_order(core.c)),
            1 => {
                let side = core.letters[0].side;
                let factor = self.factor(side);
                let code = factor.mul_codes(
                    self.c_code(side, core.c),
                    self.rep_code(side, core.letters[0].idx),
                );
                ElementOrder::Finite(factor.element_order(code))
            }
            _ => ElementOrder::Infinite,
        }
    }

    pub fn word_pow(&self, w: &AmalgamWord, e: i64) -> AmalgamWord {
        let base = if e < 0 { self.inverse(w) } else { w.clone() };
        let mut acc = self.identity_word();
        for _ in 0..e.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    /// A canonical word with exactly `letters` letters: uniform C-part,
    /// uniform starting factor, uniform nontrivial cosets, alternating by
    /// construction. Deterministic per seed.
    pub fn random_word(&self, letters: u32, seed: u64) -> AmalgamWord {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.random_word_with(&mut rng, letters)
    }

    pub fn random_word_with(&self, rng: &mut ChaCha8Rng, letters: u32) -> AmalgamWord {
        let c = CElem {
            ep: rng.gen_range(0..self.params.p as u32),
            eq: rng.gen_range(0..self.params.q as u32),
        };
        let mut side = if rng.gen::<bool>() { Side::A } else { Side::B };
        let mut out = Vec::with_capacity(letters as usize);
        for _ in 0..letters {
            let idx = rng.gen_range(1..self.transversal_len(side));
            out.push(Letter { side, idx });
            side = side.other();
        }
        AmalgamWord {
            c,
            letters: out,
            fingerprint: self.fingerprint(),
        }
    }

    pub fn word_to_json(&self, w: &AmalgamWord) -> String {
        let json = WordJson {
            c: [w.c.ep, w.c.eq],
            letters: w
                .letters
                .iter()
                .map(|l| LetterJson {
                    f: l.side.to_string(),
                    r: l.idx,
                })
                .collect(),
            fingerprint: format!("{:016x}", w.fingerprint),
        };
        serde_json::to_string(&json).expect("word serialization cannot fail")
    }

    /// Parses and canonicalizes a word. The fingerprint must match this
    /// context; letter indices must be in range. Non-alternating or
    /// trivial letters are tolerated and reduced away.
    pub fn word_from_json(&self, raw: &str) -> Result<AmalgamWord> {
        let json: WordJson = serde_json::from_str(raw)?;
        if json.fingerprint != self.fingerprint_hex() {
            return Err(Error::FingerprintMismatch {
                expected: self.fingerprint_hex(),
                found: json.fingerprint,
            });
        }
        if json.c[0] >= self.params.p as u32 || json.c[1] >= self.params.q as u32 {
            return Err(Error::MalformedWord(format!(
                "c-part [{}, {}] out of range",
                json.c[0], json.c[1]
            )));
        }
        let mut acc = self.word_from_c(CElem {
            ep: json.c[0],
            eq: json.c[1],
        });
        for l in &json.letters {
            let side = match l.f.as_str() {
                "A" => Side::A,
                "B" => Side::B,
                other => {
                    return Err(Error::MalformedWord(format!(
                        "unknown factor tag {other:?}"
                    )))
                }
            };
            if l.r >= self.transversal_len(side) {
                return Err(Error::MalformedWord(format!(
                    "transversal index {} out of range for factor {side}",
                    l.r
                )));
            }
            self.append_element(&mut acc, side, self.rep_code(side, l.r));
        }
        Ok(acc)
    }

    /// Per-trial RNG derived from (seed, stream, trial) so parallel and
    /// serial runs of the samplers agree exactly.
    pub fn trial_rng(seed: u64, stream: u64, trial: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(field::mix_seed(field::mix_seed(seed, stream), trial))
    }
}
