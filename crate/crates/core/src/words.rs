//! Quaternary and binary words.
//!
//! [`Z4Word`] is a word over Z4 = {0,1,2,3} under addition mod 4; [`BinaryWord`]
//! is a word over GF(2). Both are immutable values: arithmetic returns fresh
//! words and never mutates in place. Storage is bit-packed (two bits per
//! quaternary digit, one bit per binary coordinate) but the packing never
//! leaks through the public interface.
//!
//! The binary image of a quaternary word ([`Z4Word::gray`]) has twice its
//! length: digit `i` of the input determines bits `i` and `n + i` of the
//! image, with digits mapping to bit pairs as `0 -> (0,0)`, `1 -> (0,1)`,
//! `2 -> (1,1)`, `3 -> (1,0)`. This map carries Lee distance to Hamming
//! distance; see [`Z4Word::lee_distance`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::packed;

/// Which half of an even/odd coordinate split to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// An immutable word over Z4, indexed from 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4Word {
    len: usize,
    limbs: Vec<u64>,
}

impl Z4Word {
    /// The all-zero word of length `len`.
    pub fn zero(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Z4Word {
            len,
            limbs: vec![0; packed::limbs_for_digits(len)],
        })
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        let mut w = Z4Word::zero(digits.len())?;
        for (i, &d) in digits.iter().enumerate() {
            if d > 3 {
                return Err(Error::InvalidDigit { digit: d });
            }
            packed::digit_set(&mut w.limbs, i, d);
        }
        Ok(w)
    }

    /// The word with every digit equal to `digit`.
    pub fn repeated(len: usize, digit: u8) -> Result<Self> {
        if digit > 3 {
            return Err(Error::InvalidDigit { digit });
        }
        let mut w = Z4Word::zero(len)?;
        for i in 0..len {
            packed::digit_set(&mut w.limbs, i, digit);
        }
        Ok(w)
    }

    /// Whether some digit is odd, i.e. the word has additive order 4.
    pub fn has_odd_digit(&self) -> bool {
        packed::has_odd_digit(&self.limbs)
    }

    /// Whether every digit lies in {0, 2}.
    pub fn all_digits_even(&self) -> bool {
        !self.has_odd_digit()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub fn get(&self, i: usize) -> Result<u8> {
        if i >= self.len {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len,
            });
        }
        Ok(packed::digit_get(&self.limbs, i))
    }

    /// Digit at `i`; panics when out of range.
    pub(crate) fn digit(&self, i: usize) -> u8 {
        assert!(i < self.len);
        packed::digit_get(&self.limbs, i)
    }

    pub(crate) fn set_digit(&mut self, i: usize, d: u8) {
        assert!(i < self.len && d < 4);
        packed::digit_set(&mut self.limbs, i, d);
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(|i| packed::digit_get(&self.limbs, i))
    }

    pub fn to_digits(&self) -> Vec<u8> {
        self.iter().collect()
    }

    pub fn is_zero(&self) -> bool {
        packed::is_zero(&self.limbs)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        packed::add_assign_mod4(&mut out.limbs, &other.limbs);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negated())
    }

    /// In-place addition for enumeration loops; lengths must already match.
    pub(crate) fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        packed::add_assign_mod4(&mut self.limbs, &other.limbs);
    }

    /// Coordinatewise negation mod 4.
    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        let last = out.limbs.len() - 1;
        for (i, l) in out.limbs.iter_mut().enumerate() {
            let tail = if i == last {
                packed::digit_tail_mask(self.len)
            } else {
                !0
            };
            *l = packed::limb_neg_mod4(*l, tail);
        }
        out
    }

    /// Coordinatewise multiplication by a scalar mod 4.
    pub fn scaled(&self, s: u8) -> Result<Self> {
        match s {
            0 => Z4Word::zero(self.len),
            1 => Ok(self.clone()),
            2 => {
                let mut out = self.clone();
                for l in out.limbs.iter_mut() {
                    *l = packed::limb_double_mod4(*l);
                }
                Ok(out)
            }
            3 => Ok(self.negated()),
            _ => Err(Error::InvalidDigit { digit: s }),
        }
    }

    /// Sum of coordinate Lee weights: wt(0)=0, wt(1)=wt(3)=1, wt(2)=2.
    pub fn lee_weight(&self) -> u64 {
        packed::lee_weight(&self.limbs)
    }

    /// Lee distance `wt(other - self)`; equals the Hamming distance of the
    /// binary images.
    pub fn lee_distance(&self, other: &Self) -> Result<u64> {
        Ok(other.sub(self)?.lee_weight())
    }

    /// Dot product mod 4.
    pub fn dot(&self, other: &Self) -> Result<u8> {
        self.check_len(other)?;
        Ok(packed::dot_mod4(&self.limbs, &other.limbs))
    }

    /// The word `2*(self_i * other_i) mod 4` of coordinatewise products,
    /// doubled.
    ///
    /// This is exactly the correction term by which the binary image fails to
    /// be additive: `gray(x + y) = gray(x) ^ gray(y) ^ gray(x.doubled_product(y))`
    /// (see [`gray_sum_defect`]). Only digit parities contribute, so the result
    /// has all digits in {0, 2}.
    pub fn doubled_product(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        for (l, r) in out.limbs.iter_mut().zip(&other.limbs) {
            *l = packed::limb_doubled_product(*l, *r);
        }
        Ok(out)
    }

    /// Binary image of length `2 * len`.
    pub fn gray(&self) -> BinaryWord {
        let mut out = BinaryWord {
            len: 2 * self.len,
            limbs: vec![0; packed::limbs_for_bits(2 * self.len)],
        };
        packed::gray_into(&self.limbs, self.len, &mut out.limbs);
        out
    }

    /// Writes the binary image into an existing word of length `2 * len`,
    /// for enumeration loops that reuse one buffer.
    pub(crate) fn gray_write(&self, out: &mut BinaryWord) {
        debug_assert_eq!(out.len, 2 * self.len);
        packed::gray_into(&self.limbs, self.len, &mut out.limbs);
    }

    /// Splits into the words of even-indexed and odd-indexed digits.
    pub fn split_even_odd(&self) -> Result<(Self, Self)> {
        if self.len % 2 != 0 {
            return Err(Error::OddLength { len: self.len });
        }
        let half = self.len / 2;
        let mut even = Z4Word::zero(half)?;
        let mut odd = Z4Word::zero(half)?;
        for i in 0..half {
            even.set_digit(i, self.digit(2 * i));
            odd.set_digit(i, self.digit(2 * i + 1));
        }
        Ok((even, odd))
    }

    /// Inverse of [`Z4Word::split_even_odd`].
    pub fn interleave(even: &Self, odd: &Self) -> Result<Self> {
        even.check_len(odd)?;
        let mut out = Z4Word::zero(2 * even.len)?;
        for i in 0..even.len {
            out.set_digit(2 * i, even.digit(i));
            out.set_digit(2 * i + 1, odd.digit(i));
        }
        Ok(out)
    }
}

impl fmt::Display for Z4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.iter() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Word({self})")
    }
}

impl FromStr for Z4Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut digits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch.to_digit(4) {
                Some(d) => digits.push(d as u8),
                None => return Err(Error::InvalidChar { ch }),
            }
        }
        Z4Word::from_digits(&digits)
    }
}

/// An immutable word over GF(2), indexed from 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    len: usize,
    limbs: Vec<u64>,
}

impl BinaryWord {
    pub fn zero(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(BinaryWord {
            len,
            limbs: vec![0; packed::limbs_for_bits(len)],
        })
    }

    pub fn all_ones(len: usize) -> Result<Self> {
        let mut w = BinaryWord::zero(len)?;
        let last = w.limbs.len() - 1;
        for (i, l) in w.limbs.iter_mut().enumerate() {
            *l = if i == last {
                packed::bit_tail_mask(len)
            } else {
                !0
            };
        }
        Ok(w)
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut w = BinaryWord::zero(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::InvalidDigit { digit: b });
            }
            packed::bit_set(&mut w.limbs, i, b);
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub(crate) fn limbs_mut(&mut self) -> &mut [u64] {
        &mut self.limbs
    }

    pub fn get(&self, i: usize) -> Result<u8> {
        if i >= self.len {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len,
            });
        }
        Ok(packed::bit_get(&self.limbs, i))
    }

    pub(crate) fn bit(&self, i: usize) -> u8 {
        assert!(i < self.len);
        packed::bit_get(&self.limbs, i)
    }

    pub(crate) fn set_bit(&mut self, i: usize, b: u8) {
        assert!(i < self.len && b < 2);
        packed::bit_set(&mut self.limbs, i, b);
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(|i| packed::bit_get(&self.limbs, i))
    }

    pub fn is_zero(&self) -> bool {
        packed::is_zero(&self.limbs)
    }

    pub fn weight(&self) -> u64 {
        self.limbs.iter().map(|l| u64::from(l.count_ones())).sum()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        packed::xor_assign(&mut out.limbs, &other.limbs);
        Ok(out)
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<u64> {
        Ok(self.xor(other)?.weight())
    }

    pub fn dot(&self, other: &Self) -> Result<u8> {
        self.check_len(other)?;
        let mut acc = 0u64;
        for (a, b) in self.limbs.iter().zip(&other.limbs) {
            acc += u64::from((a & b).count_ones());
        }
        Ok((acc & 1) as u8)
    }

    /// Splits into the first and second half.
    pub fn halves(&self) -> Result<(Self, Self)> {
        if self.len % 2 != 0 {
            return Err(Error::OddLength { len: self.len });
        }
        let half = self.len / 2;
        let mut lo = BinaryWord::zero(half)?;
        let mut hi = BinaryWord::zero(half)?;
        for l in 0..lo.limbs.len() {
            let width = (half - l * packed::BITS_PER_LIMB).min(packed::BITS_PER_LIMB);
            lo.limbs[l] = packed::read_bits_at(&self.limbs, l * packed::BITS_PER_LIMB, width);
            hi.limbs[l] =
                packed::read_bits_at(&self.limbs, half + l * packed::BITS_PER_LIMB, width);
        }
        Ok((lo, hi))
    }

    pub fn concat(first: &Self, second: &Self) -> Self {
        let len = first.len + second.len;
        let mut limbs = vec![0u64; packed::limbs_for_bits(len)];
        for l in 0..first.limbs.len() {
            let width = (first.len - l * packed::BITS_PER_LIMB).min(packed::BITS_PER_LIMB);
            packed::or_bits_at(&mut limbs, l * packed::BITS_PER_LIMB, first.limbs[l], width);
        }
        for l in 0..second.limbs.len() {
            let width = (second.len - l * packed::BITS_PER_LIMB).min(packed::BITS_PER_LIMB);
            packed::or_bits_at(
                &mut limbs,
                first.len + l * packed::BITS_PER_LIMB,
                second.limbs[l],
                width,
            );
        }
        BinaryWord { len, limbs }
    }

    /// True when the first and second half coincide.
    ///
    /// Repetitive words are exactly the binary images of quaternary words with
    /// all digits in {0, 2}.
    pub fn is_repetitive(&self) -> Result<bool> {
        let (lo, hi) = self.halves()?;
        Ok(lo == hi)
    }

    /// Splits into the words of even-indexed and odd-indexed coordinates.
    pub fn split_even_odd(&self) -> Result<(Self, Self)> {
        if self.len % 2 != 0 {
            return Err(Error::OddLength { len: self.len });
        }
        let half = self.len / 2;
        let mut even = BinaryWord::zero(half)?;
        let mut odd = BinaryWord::zero(half)?;
        for i in 0..half {
            even.set_bit(i, self.bit(2 * i));
            odd.set_bit(i, self.bit(2 * i + 1));
        }
        Ok((even, odd))
    }

    pub fn interleave(even: &Self, odd: &Self) -> Result<Self> {
        even.check_len(odd)?;
        let mut out = BinaryWord::zero(2 * even.len)?;
        for i in 0..even.len {
            out.set_bit(2 * i, even.bit(i));
            out.set_bit(2 * i + 1, odd.bit(i));
        }
        Ok(out)
    }

    /// Preimage under the binary image map; the length must be even.
    pub fn gray_inverse(&self) -> Result<Z4Word> {
        if self.len % 2 != 0 {
            return Err(Error::OddLength { len: self.len });
        }
        let n = self.len / 2;
        let mut out = Z4Word::zero(n)?;
        packed::gray_inverse_into(&self.limbs, n, &mut out.limbs);
        Ok(out)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::InvalidChar { ch }),
            }
        }
        BinaryWord::from_bits(&bits)
    }
}

/// The word by which the binary image fails to be additive:
/// `gray(x + y) ^ gray(x) ^ gray(y)`.
///
/// It always equals `gray(x.doubled_product(y))`; the unit tests verify this
/// for every digit pair, and the rank shortcut in [`crate::analysis`] relies
/// on it.
pub fn gray_sum_defect(x: &Z4Word, y: &Z4Word) -> Result<BinaryWord> {
    let sum = x.add(y)?;
    sum.gray().xor(&x.gray())?.xor(&y.gray())
}
