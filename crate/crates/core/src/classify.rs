//! Lee-weight profiles and the one-weight / two-distance / relative
//! two-weight taxonomy.
//!
//! A code `C` is relative two-weight to a proper nonzero subcode `C1` when
//! every nonzero word of `C1` has Lee weight `m1`, every word of `C \ C1` has
//! weight `m`, and `m1 != m`. Whether a two-distance code admits such a
//! subcode is checked by testing each weight class for closure, never
//! assumed.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::code::{AdditiveCode, Codewords, SubcodeWitness};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::MixedWord;

/// Lee weight -> number of codewords of that weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WeightProfile(pub BTreeMap<usize, usize>);

impl WeightProfile {
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a MixedWord>) -> Self {
        let mut counts = BTreeMap::new();
        for w in words {
            *counts.entry(w.lee_weight()).or_insert(0) += 1;
        }
        WeightProfile(counts)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Weights of nonzero codewords. A nonzero word always has positive Lee weight.
    pub fn nonzero_weights(&self) -> BTreeSet<usize> {
        self.0.keys().copied().filter(|&w| w > 0).collect()
    }
}

pub fn weight_profile(code: &AdditiveCode, limit: u128) -> Result<WeightProfile> {
    Ok(WeightProfile::from_words(code.enumerate(limit)?.iter()))
}

fn nonzero_weights(code: &AdditiveCode, limit: u128) -> Result<BTreeSet<usize>> {
    let profile = weight_profile(code, limit)?;
    if profile.total() <= 1 {
        return Err(Error::ZeroCode);
    }
    Ok(profile.nonzero_weights())
}

/// The common nonzero weight, if there is exactly one.
pub fn is_one_weight(code: &AdditiveCode, limit: u128) -> Result<Option<usize>> {
    let weights = nonzero_weights(code, limit)?;
    Ok(match weights.len() {
        1 => weights.first().copied(),
        _ => None,
    })
}

/// Distances realised between distinct codewords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum TwoDistance {
    /// Both distances occur; `low < high`.
    Pair(usize, usize),
    /// Only one distance occurs. Reported only in lax mode.
    Single(usize),
}

/// For an additive code the distance set is the nonzero weight set.
/// `strict` requires both distances to be realised.
pub fn is_two_distance(
    code: &AdditiveCode,
    strict: bool,
    limit: u128,
) -> Result<Option<TwoDistance>> {
    let weights: Vec<usize> = nonzero_weights(code, limit)?.into_iter().collect();
    Ok(match weights.as_slice() {
        [low, high] => Some(TwoDistance::Pair(*low, *high)),
        [only] if !strict => Some(TwoDistance::Single(*only)),
        _ => None,
    })
}

/// Witness that a code is relative two-weight `C(m1, m)`.
#[derive(Debug, Clone)]
pub struct RelativeStructure {
    pub subcode: SubcodeWitness,
    pub m1: usize,
    pub m: usize,
}

/// Checks the relative two-weight condition for the given subcode.
///
/// Errors when the subcode is zero or equal to the whole code.
pub fn verify_relative(witness: &SubcodeWitness, limit: u128) -> Result<Option<RelativeStructure>> {
    let parent = witness.parent.enumerate(limit)?;
    let sub = witness.sub.enumerate(limit)?;
    if sub.len() <= 1 || sub.len() >= parent.len() || !sub.is_subset(&parent) {
        return Err(Error::ImproperSubcode);
    }
    let Some(m1) = common_weight(sub.iter().filter(|w| !w.is_zero())) else {
        return Ok(None);
    };
    let Some(m) = common_weight(parent.difference(&sub)) else {
        return Ok(None);
    };
    if m1 == m {
        return Ok(None);
    }
    Ok(Some(RelativeStructure {
        subcode: witness.clone(),
        m1,
        m,
    }))
}

fn common_weight<'a>(mut words: impl Iterator<Item = &'a MixedWord>) -> Option<usize> {
    let first = words.next()?.lee_weight();
    words.all(|w| w.lee_weight() == first).then_some(first)
}

fn is_closed(words: &Codewords) -> bool {
    words
        .iter()
        .all(|a| words.iter().all(|b| words.contains(&a.add_same_shape(b))))
}

/// Searches for a subcode making `code` relative two-weight.
///
/// Only codes with exactly two nonzero weights qualify. For each weight `w`,
/// the candidate `{0} U {words of weight w}` is tested for closure; smaller
/// candidates are tried first, ties broken by smaller weight.
pub fn find_relative_structure(
    code: &AdditiveCode,
    limit: u128,
) -> Result<Option<RelativeStructure>> {
    let words = code.enumerate(limit)?;
    let weights: Vec<usize> = nonzero_weights(code, limit)?.into_iter().collect();
    if weights.len() != 2 {
        return Ok(None);
    }
    let zero = code.zero_word();
    let mut candidates: Vec<(usize, Codewords)> = weights
        .iter()
        .map(|&w| {
            let mut class: Codewords = words
                .iter()
                .filter(|c| !c.is_zero() && c.lee_weight() == w)
                .cloned()
                .collect();
            class.insert(zero.clone());
            (w, class)
        })
        .collect();
    candidates.sort_by_key(|(w, class)| (class.len(), *w));

    for (_, class) in candidates {
        if !is_closed(&class) {
            continue;
        }
        let sub = AdditiveCode::from_subgroup(code.alpha(), code.beta(), class)?;
        let witness = SubcodeWitness {
            parent: code.clone(),
            sub,
        };
        if let Some(found) = verify_relative(&witness, limit)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Both sides of the even-weight criterion, computed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EvenWeightCheck {
    /// Every codeword has even Lee weight (from the weight profile).
    pub all_even: bool,
    /// `(1..1|2..2)` is orthogonal to every generator.
    pub dual_has_one_two: bool,
}

pub fn even_weight_criterion(code: &AdditiveCode, limit: u128) -> Result<EvenWeightCheck> {
    let profile = weight_profile(code, limit)?;
    let probe = MixedWord::ones_twos(code.alpha(), code.beta())?;
    Ok(EvenWeightCheck {
        all_even: profile.0.keys().all(|w| w % 2 == 0),
        dual_has_one_two: code
            .generators()
            .iter()
            .all(|g| probe.inner_product_same_shape(g).is_zero()),
    })
}

/// Coordinate counts of a single word.
///
/// Structure formulas for one-generator codes name these counts with
/// overlapping letters; the mapping is:
/// weights `m1 = 2k`, `m = l + 2s + k` use `l = units_binary`,
/// `k = units_quaternary`, `s = zero_divisors`; the automorphism order
/// formula uses `l = units_binary`, `k = zero_divisors`, `s = zeros_quaternary`,
/// `q = ones`, `r = threes`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct GeneratorStats {
    pub units_binary: usize,
    pub units_quaternary: usize,
    pub zero_divisors: usize,
    pub zeros_quaternary: usize,
    pub ones: usize,
    pub threes: usize,
}

impl GeneratorStats {
    pub fn of(w: &MixedWord) -> Self {
        let q = w.quaternary();
        let count = |v: u8| q.iter().filter(|x| x.value() == v).count();
        let ones = count(1);
        let threes = count(3);
        GeneratorStats {
            units_binary: w.binary().iter().filter(|b| !b.is_zero()).count(),
            units_quaternary: ones + threes,
            zero_divisors: count(2),
            zeros_quaternary: count(0),
            ones,
            threes,
        }
    }
}

/// `(m1, m) = (2k, l + 2s + k)` for a code spanned by one word.
pub fn predicted_single_gen_weights(stats: &GeneratorStats) -> (usize, usize) {
    (
        2 * stats.units_quaternary,
        stats.units_binary + 2 * stats.zero_divisors + stats.units_quaternary,
    )
}

/// Outcome of the unit-count check for one generator row of `C1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowUnitsEntry {
    pub row: MixedWord,
    pub units: usize,
    pub pass: bool,
}

/// Each generator row of the subcode must have 0 or m1/2 quaternary units.
pub fn check_g1_row_units(structure: &RelativeStructure) -> Vec<RowUnitsEntry> {
    structure
        .subcode
        .sub
        .generators()
        .iter()
        .map(|row| {
            let units = GeneratorStats::of(row).units_quaternary;
            RowUnitsEntry {
                row: row.clone(),
                units,
                pass: units == 0 || 2 * units == structure.m1,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelativeSummary {
    pub m1: usize,
    pub m: usize,
    pub subcode_generators: Vec<MixedWord>,
}

impl From<&RelativeStructure> for RelativeSummary {
    fn from(r: &RelativeStructure) -> Self {
        RelativeSummary {
            m1: r.m1,
            m: r.m,
            subcode_generators: r.subcode.sub.generators().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EvenWeightSummary {
    pub all_even: bool,
    pub dual_member: bool,
}

/// Machine-readable classification of one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub alpha: usize,
    pub beta: usize,
    pub size: usize,
    pub weight_profile: WeightProfile,
    pub one_weight: Option<usize>,
    pub two_distance: Option<TwoDistance>,
    pub relative: Option<RelativeSummary>,
    pub even_weight: EvenWeightSummary,
}

/// Runs every classification. Weight-set questions are left empty for the
/// zero code rather than failing.
pub fn classify(code: &AdditiveCode, limits: &Limits) -> Result<ClassificationReport> {
    let limit = limits.enumerate;
    let words = code.enumerate(limit)?;
    let profile = weight_profile(code, limit)?;
    let nonzero = words.len() > 1;
    let (one_weight, two_distance, relative) = if nonzero {
        (
            is_one_weight(code, limit)?,
            is_two_distance(code, true, limit)?,
            find_relative_structure(code, limit)?
                .as_ref()
                .map(RelativeSummary::from),
        )
    } else {
        (None, None, None)
    };
    let even = even_weight_criterion(code, limit)?;
    Ok(ClassificationReport {
        alpha: code.alpha(),
        beta: code.beta(),
        size: words.len(),
        weight_profile: profile,
        one_weight,
        two_distance,
        relative,
        even_weight: EvenWeightSummary {
            all_even: even.all_even,
            dual_member: even.dual_has_one_two,
        },
    })
}
