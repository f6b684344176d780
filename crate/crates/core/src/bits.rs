//! Packed little-endian bit storage shared by truth tables, ANF coefficient
//! vectors and carry strings.
//!
//! Bit `i` lives in `words[i / 64]` at shift `i % 64`. Bits at index `len` and
//! above are always zero.

use smallvec::SmallVec;
use std::cmp::Ordering;

pub(crate) type Words = SmallVec<[u64; 1]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits {
    len: usize,
    words: Words,
}

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        let mut words = Words::new();
        words.resize(word_count(len), 0);
        Bits { len, words }
    }

    pub(crate) fn ones(len: usize) -> Self {
        let mut bits = Bits::zeros(len);
        bits.words.iter_mut().for_each(|w| *w = u64::MAX);
        bits.trim();
        bits
    }

    /// Builds from a single word; bits above `len` must already be zero.
    pub(crate) fn from_u64(len: usize, value: u64) -> Self {
        debug_assert!(len <= 64);
        debug_assert!(len == 64 || value >> len == 0);
        let mut words = Words::new();
        words.push(value);
        Bits { len, words }
    }

    pub(crate) fn from_words(len: usize, words: Words) -> Self {
        debug_assert_eq!(words.len(), word_count(len));
        let mut bits = Bits { len, words };
        bits.trim();
        bits
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    /// Clears any bits past `len` in the last word.
    pub(crate) fn trim(&mut self) {
        let rem = self.len & 63;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Value as an integer when it fits in 64 bits.
    pub(crate) fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub(crate) fn to_u128(&self) -> Option<u128> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0] as u128),
            2 => Some(self.words[0] as u128 | (self.words[1] as u128) << 64),
            _ => None,
        }
    }

    pub(crate) fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub(crate) fn zip_with(&self, other: &Bits, op: impl Fn(u64, u64) -> u64) -> Bits {
        debug_assert_eq!(self.len, other.len);
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| op(a, b))
            .collect();
        Bits::from_words(self.len, words)
    }

    pub(crate) fn not(&self) -> Bits {
        let words = self.words.iter().map(|w| !w).collect();
        Bits::from_words(self.len, words)
    }

    /// Returns a copy one bit longer, shifted one place toward the most
    /// significant end with a zero entering at index 0.
    pub(crate) fn shl1_extend(&self) -> Bits {
        let mut out = Bits::zeros(self.len + 1);
        let mut carry = 0u64;
        for (i, &w) in self.words.iter().enumerate() {
            out.words[i] = (w << 1) | carry;
            carry = w >> 63;
        }
        if out.words.len() > self.words.len() {
            *out.words.last_mut().unwrap() = carry;
        }
        out.trim();
        out
    }

    /// Concatenation with `low` occupying indices `0..low.len` and `self`
    /// the indices above. Both operands must have the same length.
    pub(crate) fn concat_above(&self, low: &Bits) -> Bits {
        debug_assert_eq!(self.len, low.len);
        let len = self.len * 2;
        if len <= 64 {
            let lo = low.words.first().copied().unwrap_or(0);
            let hi = self.words.first().copied().unwrap_or(0);
            return Bits::from_u64(len, lo | (hi << self.len));
        }
        // Both halves are whole words once len > 64.
        let mut words = Words::with_capacity(word_count(len));
        words.extend_from_slice(&low.words);
        words.extend_from_slice(&self.words);
        Bits { len, words }
    }

    /// Iterates set-bit indices in ascending order.
    pub(crate) fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    /// Numeric comparison of two equal-length vectors.
    pub(crate) fn cmp_numeric(&self, other: &Bits) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }

    /// MSB-first '0'/'1' rendering.
    pub(crate) fn to_bit_string(&self) -> String {
        (0..self.len)
            .rev()
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    /// MSB-first lowercase hex; `len` must be a multiple of 4.
    pub(crate) fn to_hex_string(&self) -> String {
        debug_assert_eq!(self.len % 4, 0);
        const DIGITS: &[u8; 16] = b"0123456789abcdef";
        (0..self.len / 4)
            .rev()
            .map(|nib| {
                let shift = (nib * 4) & 63;
                let v = (self.words[(nib * 4) >> 6] >> shift) & 0xf;
                DIGITS[v as usize] as char
            })
            .collect()
    }
}
