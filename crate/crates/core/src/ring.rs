//! Mixed binary/quaternary words.
//!
//! A [`MixedWord`] `(u|v)` lives in Z2^alpha x Z4^beta. Residues are kept
//! canonical (`{0,1}` and `{0,1,2,3}`) and every operation reduces
//! immediately, so equality is plain structural equality.
//!
//! The Gray map sends `0 -> 00`, `1 -> 01`, `2 -> 11`, `3 -> 10` on Z4 and
//! acts as the identity on the binary part. The Lee weight of a word is the
//! Hamming weight of its Gray image.
//!
//! Word literals are written `10|31`: binary digits, a `|`, quaternary
//! digits. Either side may be empty (`|31`, `10|`), but not both.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Residue modulo 2.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z2(u8);

impl Z2 {
    pub const ZERO: Z2 = Z2(0);
    pub const ONE: Z2 = Z2(1);

    pub const fn new(value: u8) -> Self {
        Z2(value & 1)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Embedding {0,1} into Z4.
    pub const fn lift(self) -> Z4 {
        Z4(self.0)
    }
}

impl Add for Z2 {
    type Output = Z2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Z2) -> Z2 {
        Z2(self.0 ^ rhs.0)
    }
}

impl Mul for Z2 {
    type Output = Z2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Z2) -> Z2 {
        Z2(self.0 & rhs.0)
    }
}

/// Residue modulo 4.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    pub const fn new(value: u8) -> Self {
        Z4(value & 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// 1 and 3.
    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    /// 2 is the only zero divisor of Z4.
    pub const fn is_zero_divisor(self) -> bool {
        self.0 == 2
    }

    /// Reduction mod 2, the scalar action of Z4 on Z2.
    pub const fn reduce(self) -> Z2 {
        Z2(self.0 & 1)
    }

    /// Gray image of a single quaternary symbol.
    pub const fn gray(self) -> (Z2, Z2) {
        match self.0 {
            0 => (Z2(0), Z2(0)),
            1 => (Z2(0), Z2(1)),
            2 => (Z2(1), Z2(1)),
            _ => (Z2(1), Z2(0)),
        }
    }

    pub const fn lee_weight(self) -> usize {
        match self.0 {
            0 => 0,
            2 => 2,
            _ => 1,
        }
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

/// A word of Z2^n, the target of the Gray map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    bits: Vec<Z2>,
}

impl BinaryWord {
    pub fn new(bits: Vec<Z2>) -> Self {
        BinaryWord { bits }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        BinaryWord {
            bits: bits.iter().map(|&b| Z2::new(b)).collect(),
        }
    }

    pub fn zero(len: usize) -> Self {
        BinaryWord {
            bits: vec![Z2::ZERO; len],
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[Z2] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| b.is_zero())
    }

    pub fn hamming_weight(&self) -> usize {
        self.bits.iter().filter(|b| !b.is_zero()).count()
    }

    pub fn xor(&self, other: &BinaryWord) -> Result<BinaryWord> {
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch {
                expected: (self.len(), 0),
                found: (other.len(), 0),
            });
        }
        Ok(BinaryWord {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn hamming_distance(&self, other: &BinaryWord) -> Result<usize> {
        Ok(self.xor(other)?.hamming_weight())
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{}", b.value())?;
        }
        Ok(())
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An element `(u|v)` of Z2^alpha x Z4^beta.
///
/// Ordering is lexicographic on coordinates, binary part first, which is the
/// canonical order used for every listing of codewords.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedWord {
    binary: Vec<Z2>,
    quaternary: Vec<Z4>,
}

impl MixedWord {
    pub fn new(binary: Vec<Z2>, quaternary: Vec<Z4>) -> Result<Self> {
        if binary.is_empty() && quaternary.is_empty() {
            return Err(Error::EmptyShape);
        }
        Ok(MixedWord { binary, quaternary })
    }

    /// Builds a word from raw residues, reducing each entry.
    pub fn from_digits(binary: &[u8], quaternary: &[u8]) -> Result<Self> {
        MixedWord::new(
            binary.iter().map(|&b| Z2::new(b)).collect(),
            quaternary.iter().map(|&q| Z4::new(q)).collect(),
        )
    }

    pub fn zero(alpha: usize, beta: usize) -> Result<Self> {
        MixedWord::new(vec![Z2::ZERO; alpha], vec![Z4::ZERO; beta])
    }

    /// `(1...1|2...2)`, the word whose orthogonality detects even weight codes.
    pub fn ones_twos(alpha: usize, beta: usize) -> Result<Self> {
        MixedWord::new(vec![Z2::ONE; alpha], vec![Z4::TWO; beta])
    }

    pub fn alpha(&self) -> usize {
        self.binary.len()
    }

    pub fn beta(&self) -> usize {
        self.quaternary.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.alpha(), self.beta())
    }

    pub fn binary(&self) -> &[Z2] {
        &self.binary
    }

    pub fn quaternary(&self) -> &[Z4] {
        &self.quaternary
    }

    pub fn is_zero(&self) -> bool {
        self.binary.iter().all(|b| b.is_zero()) && self.quaternary.iter().all(|q| q.is_zero())
    }

    pub(crate) fn ensure_shape(&self, shape: (usize, usize)) -> Result<()> {
        if self.shape() != shape {
            return Err(Error::ShapeMismatch {
                expected: shape,
                found: self.shape(),
            });
        }
        Ok(())
    }

    /// Componentwise sum; binary parts mod 2, quaternary parts mod 4.
    pub fn checked_add(&self, other: &MixedWord) -> Result<MixedWord> {
        other.ensure_shape(self.shape())?;
        Ok(self.add_same_shape(other))
    }

    pub fn checked_sub(&self, other: &MixedWord) -> Result<MixedWord> {
        other.ensure_shape(self.shape())?;
        Ok(self.add_same_shape(&other.negate()))
    }

    pub(crate) fn add_same_shape(&self, other: &MixedWord) -> MixedWord {
        debug_assert_eq!(self.shape(), other.shape());
        MixedWord {
            binary: self
                .binary
                .iter()
                .zip(&other.binary)
                .map(|(&a, &b)| a + b)
                .collect(),
            quaternary: self
                .quaternary
                .iter()
                .zip(&other.quaternary)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn negate(&self) -> MixedWord {
        MixedWord {
            binary: self.binary.clone(),
            quaternary: self.quaternary.iter().map(|&q| -q).collect(),
        }
    }

    /// Action of `k` in Z4: the binary part is scaled by `k mod 2`.
    pub fn scale(&self, k: Z4) -> MixedWord {
        let kb = k.reduce();
        MixedWord {
            binary: self.binary.iter().map(|&b| b * kb).collect(),
            quaternary: self.quaternary.iter().map(|&q| q * k).collect(),
        }
    }

    /// Additive order: 1, 2 or 4.
    pub fn order(&self) -> u8 {
        if self.is_zero() {
            1
        } else if self.quaternary.iter().any(|q| q.is_unit()) {
            4
        } else {
            2
        }
    }

    /// Gray image `(u | phi(v_1) ... phi(v_beta))` of length alpha + 2 beta.
    pub fn gray_image(&self) -> BinaryWord {
        let mut bits = Vec::with_capacity(self.alpha() + 2 * self.beta());
        bits.extend_from_slice(&self.binary);
        for q in &self.quaternary {
            let (hi, lo) = q.gray();
            bits.push(hi);
            bits.push(lo);
        }
        BinaryWord { bits }
    }

    pub fn lee_weight(&self) -> usize {
        self.binary.iter().filter(|b| !b.is_zero()).count()
            + self
                .quaternary
                .iter()
                .map(|q| q.lee_weight())
                .sum::<usize>()
    }

    /// Number of nonzero coordinates.
    pub fn hamming_weight(&self) -> usize {
        self.binary.iter().filter(|b| !b.is_zero()).count()
            + self.quaternary.iter().filter(|q| !q.is_zero()).count()
    }

    pub fn lee_distance(&self, other: &MixedWord) -> Result<usize> {
        Ok(self.checked_sub(other)?.lee_weight())
    }

    pub fn hamming_distance(&self, other: &MixedWord) -> Result<usize> {
        Ok(self.checked_sub(other)?.hamming_weight())
    }

    /// `2<u1,u2> + <v1,v2>` computed in Z4, binary entries lifted to {0,1}.
    pub fn inner_product(&self, other: &MixedWord) -> Result<Z4> {
        other.ensure_shape(self.shape())?;
        Ok(self.inner_product_same_shape(other))
    }

    pub(crate) fn inner_product_same_shape(&self, other: &MixedWord) -> Z4 {
        let binary = self
            .binary
            .iter()
            .zip(&other.binary)
            .fold(Z4::ZERO, |acc, (&a, &b)| acc + (a * b).lift());
        let quaternary = self
            .quaternary
            .iter()
            .zip(&other.quaternary)
            .fold(Z4::ZERO, |acc, (&a, &b)| acc + a * b);
        Z4::TWO * binary + quaternary
    }

    /// Simultaneous right rotation of both parts:
    /// `(a0..a_{alpha-1} | b0..b_{beta-1}) -> (a_{alpha-1} a0 .. | b_{beta-1} b0 ..)`.
    pub fn cyclic_shift(&self) -> MixedWord {
        let mut binary = self.binary.clone();
        let mut quaternary = self.quaternary.clone();
        if !binary.is_empty() {
            binary.rotate_right(1);
        }
        if !quaternary.is_empty() {
            quaternary.rotate_right(1);
        }
        MixedWord { binary, quaternary }
    }

    /// Concatenates `t` copies of each part: `(u..u | v..v)`.
    pub fn replicate(&self, t: usize) -> MixedWord {
        MixedWord {
            binary: self.binary.repeat(t),
            quaternary: self.quaternary.repeat(t),
        }
    }

    pub(crate) fn from_parts_unchecked(binary: Vec<Z2>, quaternary: Vec<Z4>) -> MixedWord {
        MixedWord { binary, quaternary }
    }
}

impl fmt::Display for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.binary {
            write!(f, "{}", b.value())?;
        }
        f.write_str("|")?;
        for q in &self.quaternary {
            write!(f, "{}", q.value())?;
        }
        Ok(())
    }
}

impl Serialize for MixedWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for MixedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some(bar) = s.find('|') else {
            return Err(Error::Literal {
                column: s.chars().count() + 1,
                reason: "missing '|' separator".into(),
            });
        };
        let mut binary = Vec::new();
        let mut quaternary = Vec::new();
        for (i, c) in s.chars().enumerate() {
            let column = i + 1;
            if i == bar {
                continue;
            }
            let digit = c.to_digit(10);
            if i < bar {
                match digit {
                    Some(d @ 0..=1) => binary.push(Z2::new(d as u8)),
                    _ => {
                        return Err(Error::Literal {
                            column,
                            reason: format!("'{c}' is not a binary digit"),
                        })
                    }
                }
            } else {
                match digit {
                    Some(d @ 0..=3) => quaternary.push(Z4::new(d as u8)),
                    _ if c == '|' => {
                        return Err(Error::Literal {
                            column,
                            reason: "more than one '|' separator".into(),
                        })
                    }
                    _ => {
                        return Err(Error::Literal {
                            column,
                            reason: format!("'{c}' is not a quaternary digit"),
                        })
                    }
                }
            }
        }
        MixedWord::new(binary, quaternary).map_err(|_| Error::Literal {
            column: 1,
            reason: "word has no coordinates".into(),
        })
    }
}

/// Shorthand for tests and examples; panics on a malformed literal.
pub fn word(literal: &str) -> MixedWord {
    literal
        .parse()
        .unwrap_or_else(|e| panic!("bad word literal {literal:?}: {e}"))
}
