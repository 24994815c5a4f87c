//! Additive codes given by generator rows.
//!
//! A code is enumerated lazily by closing its generator list under addition
//! and cached afterwards. Codeword sets are `BTreeSet`s, so iteration is
//! always in canonical (lexicographic) order.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{BinaryWord, MixedWord, Z2, Z4};

pub type Codewords = BTreeSet<MixedWord>;

/// A subgroup of Z2^alpha x Z4^beta, represented by its generators.
#[derive(Debug, Clone)]
pub struct AdditiveCode {
    alpha: usize,
    beta: usize,
    generators: Vec<MixedWord>,
    codewords: OnceLock<Arc<Codewords>>,
}

/// 2^alpha * 4^beta, saturating.
pub fn ambient_size(alpha: usize, beta: usize) -> u128 {
    let bits = alpha as u32 + 2 * beta as u32;
    1u128
        .checked_shl(bits)
        .filter(|_| bits < 128)
        .unwrap_or(u128::MAX)
}

/// Every word of Z2^alpha x Z4^beta in canonical order.
pub fn ambient_words(alpha: usize, beta: usize) -> impl Iterator<Item = MixedWord> {
    let mut next = Some((vec![Z2::ZERO; alpha], vec![Z4::ZERO; beta]));
    std::iter::from_fn(move || {
        let (binary, quaternary) = next.take()?;
        let current = MixedWord::from_parts_unchecked(binary.clone(), quaternary.clone());
        let (mut b, mut q) = (binary, quaternary);
        // odometer, last coordinate fastest
        let mut carried = true;
        for x in q.iter_mut().rev() {
            if x.value() < 3 {
                *x = Z4::new(x.value() + 1);
                carried = false;
                break;
            }
            *x = Z4::ZERO;
        }
        if carried {
            for x in b.iter_mut().rev() {
                if x.is_zero() {
                    *x = Z2::ONE;
                    carried = false;
                    break;
                }
                *x = Z2::ZERO;
            }
        }
        if !carried {
            next = Some((b, q));
        }
        Some(current)
    })
}

/// Extends `span` (a subgroup containing zero) by the new element `g`.
fn extend_span(span: &mut Codewords, g: &MixedWord) {
    let mut multiples = vec![g.clone()];
    let mut m = g.clone();
    loop {
        m = m.add_same_shape(g);
        if m.is_zero() {
            break;
        }
        multiples.push(m.clone());
    }
    let base: Vec<MixedWord> = span.iter().cloned().collect();
    for s in &base {
        for k in &multiples {
            span.insert(s.add_same_shape(k));
        }
    }
}

/// Greedy generating subset: walk `words` in order and keep each word that is
/// not already in the span of those kept so far.
fn greedy_generators<'a>(
    alpha: usize,
    beta: usize,
    words: impl IntoIterator<Item = &'a MixedWord>,
) -> Result<Vec<MixedWord>> {
    let mut span = Codewords::new();
    span.insert(MixedWord::zero(alpha, beta)?);
    let mut gens = Vec::new();
    for w in words {
        if !span.contains(w) {
            extend_span(&mut span, w);
            gens.push(w.clone());
        }
    }
    Ok(gens)
}

impl AdditiveCode {
    /// Code spanned by `generators`. Enumeration is deferred.
    pub fn new(alpha: usize, beta: usize, generators: Vec<MixedWord>) -> Result<Self> {
        if alpha + beta == 0 {
            return Err(Error::EmptyShape);
        }
        for g in &generators {
            g.ensure_shape((alpha, beta))?;
        }
        Ok(AdditiveCode {
            alpha,
            beta,
            generators,
            codewords: OnceLock::new(),
        })
    }

    pub fn zero_code(alpha: usize, beta: usize) -> Result<Self> {
        AdditiveCode::new(alpha, beta, Vec::new())
    }

    /// Code equal to `words` as a set, which the caller guarantees is a
    /// subgroup. Generators are chosen greedily in canonical order.
    pub(crate) fn from_subgroup(alpha: usize, beta: usize, words: Codewords) -> Result<Self> {
        let generators = greedy_generators(alpha, beta, &words)?;
        let code = AdditiveCode::new(alpha, beta, generators)?;
        let _ = code.codewords.set(Arc::new(words));
        Ok(code)
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.alpha, self.beta)
    }

    pub fn generators(&self) -> &[MixedWord] {
        &self.generators
    }

    pub fn ambient_size(&self) -> u128 {
        ambient_size(self.alpha, self.beta)
    }

    pub fn zero_word(&self) -> MixedWord {
        MixedWord::from_parts_unchecked(vec![Z2::ZERO; self.alpha], vec![Z4::ZERO; self.beta])
    }

    /// Upper bound on |C|: product of generator orders, capped by the ambient size.
    pub fn projected_size(&self) -> u128 {
        let mut bound: u128 = 1;
        for g in &self.generators {
            bound = bound.saturating_mul(g.order() as u128);
        }
        bound.min(self.ambient_size())
    }

    /// The smallest additive group containing the generators.
    ///
    /// Computed by breadth-first closure under adding generators; fails with a
    /// size-cap error as soon as more than `limit` codewords appear.
    pub fn enumerate(&self, limit: u128) -> Result<Arc<Codewords>> {
        if let Some(words) = self.codewords.get() {
            if words.len() as u128 > limit {
                return Err(self.size_cap(limit));
            }
            return Ok(Arc::clone(words));
        }
        let zero = self.zero_word();
        let mut words = Codewords::new();
        words.insert(zero.clone());
        let mut frontier = vec![zero];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &self.generators {
                    let s = w.add_same_shape(g);
                    if !words.contains(&s) {
                        words.insert(s.clone());
                        if words.len() as u128 > limit {
                            return Err(self.size_cap(limit));
                        }
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        // concurrent first enumerations compute the same set; either wins
        let _ = self.codewords.set(Arc::new(words));
        Ok(Arc::clone(self.codewords.get().expect("just set")))
    }

    fn size_cap(&self, limit: u128) -> Error {
        Error::SizeCap {
            what: "code enumeration",
            bound: self.projected_size(),
            limit,
        }
    }

    pub fn size(&self, limit: u128) -> Result<usize> {
        Ok(self.enumerate(limit)?.len())
    }

    pub fn is_zero_code(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    pub fn contains(&self, w: &MixedWord, limit: u128) -> Result<bool> {
        w.ensure_shape(self.shape())?;
        Ok(self.enumerate(limit)?.contains(w))
    }

    /// Set equality of the two codes.
    pub fn same_codewords(&self, other: &AdditiveCode, limit: u128) -> Result<bool> {
        if self.shape() != other.shape() {
            return Ok(false);
        }
        Ok(*self.enumerate(limit)? == *other.enumerate(limit)?)
    }

    /// Every ambient word orthogonal to all generators.
    ///
    /// The returned generators are a greedy generating subset of the dual in
    /// canonical order; only set equality is meaningful.
    pub fn dual(&self, limits: &Limits) -> Result<AdditiveCode> {
        let bound = self.ambient_size();
        if bound > limits.ambient {
            return Err(Error::SizeCap {
                what: "dual code (ambient scan)",
                bound,
                limit: limits.ambient,
            });
        }
        let words: Codewords = ambient_words(self.alpha, self.beta)
            .filter(|w| {
                self.generators
                    .iter()
                    .all(|g| w.inner_product_same_shape(g).is_zero())
            })
            .collect();
        AdditiveCode::from_subgroup(self.alpha, self.beta, words)
    }

    /// Pairs this code with the subcode spanned by `generators`.
    pub fn subcode(&self, generators: Vec<MixedWord>, limit: u128) -> Result<SubcodeWitness> {
        let words = self.enumerate(limit)?;
        for g in &generators {
            g.ensure_shape(self.shape())?;
            if !words.contains(g) {
                return Err(Error::NotMember {
                    word: g.to_string(),
                });
            }
        }
        Ok(SubcodeWitness {
            parent: self.clone(),
            sub: AdditiveCode::new(self.alpha, self.beta, generators)?,
        })
    }

    /// Code in Z2^(t alpha) x Z4^(t beta) made of `(x..x | y..y)` for `(x|y)` in C.
    pub fn replicate(&self, t: usize) -> Result<AdditiveCode> {
        if t == 0 {
            return Err(Error::ZeroReplication);
        }
        AdditiveCode::new(
            t * self.alpha,
            t * self.beta,
            self.generators.iter().map(|g| g.replicate(t)).collect(),
        )
    }

    pub fn gray_image(&self, limit: u128) -> Result<BinaryCode> {
        let words = self.enumerate(limit)?;
        Ok(BinaryCode {
            length: self.alpha + 2 * self.beta,
            words: words.iter().map(MixedWord::gray_image).collect(),
        })
    }

    /// True iff the simultaneous cyclic shift maps C into itself.
    pub fn is_cyclic(&self, limit: u128) -> Result<bool> {
        let words = self.enumerate(limit)?;
        // the shift is additive, so checking generators suffices
        Ok(self
            .generators
            .iter()
            .all(|g| words.contains(&g.cyclic_shift())))
    }
}

impl PartialEq for AdditiveCode {
    /// Same shape and same generator list. Use [`AdditiveCode::same_codewords`]
    /// for set equality.
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape() && self.generators == other.generators
    }
}

/// A code together with a subcode spanned by some of its codewords.
#[derive(Debug, Clone)]
pub struct SubcodeWitness {
    pub parent: AdditiveCode,
    pub sub: AdditiveCode,
}

/// A set of binary words of one length, not necessarily linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    pub length: usize,
    pub words: BTreeSet<BinaryWord>,
}

impl BinaryCode {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Contains zero and is closed under XOR.
    pub fn is_linear(&self) -> bool {
        if !self.words.contains(&BinaryWord::zero(self.length)) {
            return false;
        }
        self.words.iter().all(|a| {
            self.words
                .iter()
                .all(|b| a.xor(b).is_ok_and(|s| self.words.contains(&s)))
        })
    }

    /// Distinct pairwise Hamming distances.
    pub fn distances(&self) -> BTreeSet<usize> {
        let words: Vec<&BinaryWord> = self.words.iter().collect();
        let mut out = BTreeSet::new();
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                out.insert(a.hamming_distance(b).expect("uniform length"));
            }
        }
        out
    }
}
