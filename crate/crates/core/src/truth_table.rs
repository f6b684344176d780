//! Truth tables with Wolfram rule-number semantics.
//!
//! A function of `n` variables is stored as `2^n` bits. Bit index `x`
//! (0-based) holds the output on the input assignment `x`, read as an n-bit
//! integer whose bit `j - 1` is the variable `x_j`. The rule number `R` is the
//! table read as an integer, so position 1 (index 0) is its least significant
//! bit. Textual forms are written most-significant-first.

use crate::anf::AnfPolynomial;
use crate::bits::{Bits, Words};
use crate::config::{check_vars, DECIMAL_VARS_MAX};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Largest n whose rule numbers fit in a `u64`.
pub const RULE_VARS_MAX: u32 = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    bits: Bits,
}

impl TruthTable {
    /// The constant-zero function of `n` variables.
    pub fn zero(n: u32) -> Result<Self> {
        check_vars(n)?;
        Ok(TruthTable {
            n,
            bits: Bits::zeros(1usize << n),
        })
    }

    /// Builds the table whose rule number is `rule`.
    pub fn from_rule(n: u32, rule: u64) -> Result<Self> {
        check_vars(n)?;
        if n > RULE_VARS_MAX {
            return Err(Error::RuleOutOfRange {
                n,
                rule: rule as u128,
            });
        }
        let len = 1usize << n;
        if len < 64 && rule >> len != 0 {
            return Err(Error::RuleOutOfRange {
                n,
                rule: rule as u128,
            });
        }
        Ok(TruthTable {
            n,
            bits: Bits::from_u64(len, rule),
        })
    }

    /// Builds a table by evaluating `f` on every input assignment.
    pub fn from_fn(n: u32, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut t = TruthTable::zero(n)?;
        for x in 0..t.len() as u64 {
            if f(x) {
                t.bits.set(x as usize, true);
            }
        }
        Ok(t)
    }

    pub(crate) fn from_bits(n: u32, bits: Bits) -> Self {
        debug_assert_eq!(bits.len(), 1usize << n);
        TruthTable { n, bits }
    }

    pub(crate) fn from_words(n: u32, words: Words) -> Self {
        TruthTable {
            n,
            bits: Bits::from_words(1usize << n, words),
        }
    }

    pub(crate) fn raw(&self) -> &Bits {
        &self.bits
    }

    /// Number of variables.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Table length, `2^n`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Output on input assignment `x` (0-based).
    #[inline]
    pub fn get(&self, x: u64) -> bool {
        self.bits.get(x as usize)
    }

    /// Bit at 1-based `position`, i.e. the output on input `position - 1`.
    #[inline]
    pub fn bit_at(&self, position: u64) -> bool {
        debug_assert!(position >= 1);
        self.bits.get(position as usize - 1)
    }

    pub fn set(&mut self, x: u64, value: bool) {
        self.bits.set(x as usize, value);
    }

    /// Rule number, available for n <= 6.
    pub fn rule(&self) -> Option<u64> {
        self.bits.to_u64()
    }

    /// Number of true outputs.
    pub fn weight(&self) -> u64 {
        self.bits.count_ones()
    }

    /// Ascending indices of true outputs.
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.ones_iter().map(|i| i as u64)
    }

    /// Even functions output 0 on the all-zero input.
    pub fn is_even(&self) -> bool {
        !self.get(0)
    }

    pub fn complement(&self) -> TruthTable {
        TruthTable {
            n: self.n,
            bits: self.bits.not(),
        }
    }

    fn same_n(&self, other: &TruthTable) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// The (n+1)-variable function with `low` on inputs `x_{n+1} = 0` and
    /// `high` on `x_{n+1} = 1`. As rule numbers, `R(high) * 2^(2^n) + R(low)`.
    pub fn concat_high_low(high: &TruthTable, low: &TruthTable) -> Result<TruthTable> {
        high.same_n(low)?;
        check_vars(high.n + 1)?;
        Ok(TruthTable {
            n: high.n + 1,
            bits: high.bits.concat_above(&low.bits),
        })
    }

    /// `ff`: the function extended with a new top variable it ignores.
    pub fn concat_self(&self) -> Result<TruthTable> {
        TruthTable::concat_high_low(self, self)
    }

    /// `f f̄`: `f` in the low half and its complement in the high half, so
    /// that `g(x, x_new) = f(x) xor x_new`.
    pub fn concat_with_complement(&self) -> Result<TruthTable> {
        TruthTable::concat_high_low(&self.complement(), self)
    }

    pub fn xor(&self, other: &TruthTable) -> Result<TruthTable> {
        self.same_n(other)?;
        Ok(TruthTable {
            n: self.n,
            bits: self.bits.zip_with(&other.bits, |a, b| a ^ b),
        })
    }

    pub fn and(&self, other: &TruthTable) -> Result<TruthTable> {
        self.same_n(other)?;
        Ok(TruthTable {
            n: self.n,
            bits: self.bits.zip_with(&other.bits, |a, b| a & b),
        })
    }

    /// Carry value transform: the bitwise AND shifted one place toward the
    /// most significant end, with a zero appended at position 1.
    pub fn cvt(&self, other: &TruthTable) -> Result<CarryValue> {
        self.same_n(other)?;
        let anded = self.bits.zip_with(&other.bits, |a, b| a & b);
        Ok(CarryValue {
            n: self.n,
            bits: anded.shl1_extend(),
        })
    }

    pub fn hamming_distance(&self, other: &TruthTable) -> Result<u64> {
        self.same_n(other)?;
        Ok(self
            .bits
            .words()
            .iter()
            .zip(other.bits.words())
            .map(|(a, b)| (a ^ b).count_ones() as u64)
            .sum())
    }

    /// Algebraic normal form via the Möbius transform.
    pub fn moebius(&self) -> AnfPolynomial {
        AnfPolynomial::from_truth_table(self)
    }

    /// ANF degree at most one.
    pub fn is_affine(&self) -> bool {
        self.moebius().degree() <= 1
    }

    /// Affine with a zero constant term.
    pub fn is_linear(&self) -> bool {
        let anf = self.moebius();
        anf.degree() <= 1 && !anf.coefficient(0)
    }

    /// MSB-first binary string of length `2^n`.
    pub fn to_bit_string(&self) -> String {
        self.bits.to_bit_string()
    }

    /// MSB-first lowercase hex of length `2^n / 4`; requires n >= 2.
    pub fn to_hex_string(&self) -> Result<String> {
        if self.n < 2 {
            return Err(Error::parse("hex form requires n >= 2"));
        }
        Ok(self.bits.to_hex_string())
    }

    /// Decimal rule number, available for n <= 5.
    pub fn to_decimal_string(&self) -> Result<String> {
        if self.n > DECIMAL_VARS_MAX {
            return Err(Error::DecimalUnsupported {
                n: self.n,
                max: DECIMAL_VARS_MAX,
            });
        }
        Ok(self.rule().expect("n <= 5 fits in u64").to_string())
    }

    /// Parses an MSB-first '0'/'1' string; n is inferred from the length.
    pub fn parse_bits(s: &str) -> Result<TruthTable> {
        let n = length_to_vars(s.len(), 1)
            .ok_or_else(|| Error::parse(format!("bit string length {} is not 2^n", s.len())))?;
        let mut t = TruthTable::zero(n)?;
        for (i, c) in s.bytes().rev().enumerate() {
            match c {
                b'0' => {}
                b'1' => t.bits.set(i, true),
                other => {
                    return Err(Error::parse(format!(
                        "invalid bit character {:?}",
                        other as char
                    )))
                }
            }
        }
        Ok(t)
    }

    /// Parses MSB-first hex (either case, no prefix); n is inferred from the
    /// length as `2^n = 4 * len`.
    pub fn parse_hex(s: &str) -> Result<TruthTable> {
        let n = s
            .len()
            .checked_mul(4)
            .and_then(|bits| length_to_vars(bits, 2))
            .ok_or_else(|| Error::parse(format!("hex length {} is not 2^n / 4", s.len())))?;
        let mut t = TruthTable::zero(n)?;
        for (nib, c) in s.bytes().rev().enumerate() {
            let v = (c as char)
                .to_digit(16)
                .ok_or_else(|| Error::parse(format!("invalid hex digit {:?}", c as char)))?
                as u64;
            let bit = nib * 4;
            t.bits.words_mut()[bit >> 6] |= v << (bit & 63);
        }
        Ok(t)
    }

    /// Parses a decimal rule number for an n-variable function, n <= 5.
    pub fn parse_decimal(n: u32, s: &str) -> Result<TruthTable> {
        check_vars(n)?;
        if n > DECIMAL_VARS_MAX {
            return Err(Error::DecimalUnsupported {
                n,
                max: DECIMAL_VARS_MAX,
            });
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(format!("invalid decimal rule {s:?}")));
        }
        let rule: u64 = s
            .parse()
            .map_err(|_| Error::parse(format!("rule {s:?} too large")))?;
        TruthTable::from_rule(n, rule)
    }
}

/// Returns n with `2^n = len` and `n >= min`, within the allocation ceiling.
fn length_to_vars(len: usize, min: u32) -> Option<u32> {
    if !len.is_power_of_two() {
        return None;
    }
    let n = len.trailing_zeros();
    (n >= min && check_vars(n).is_ok()).then_some(n)
}

impl Ord for TruthTable {
    /// Orders by variable count, then by rule number.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.bits.cmp_numeric(&other.bits))
    }
}

impl PartialOrd for TruthTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rule() {
            Some(r) => write!(f, "TruthTable(n={}, R={})", self.n, r),
            None => write!(f, "TruthTable(n={}, {} bits)", self.n, self.len()),
        }
    }
}

/// Result of the carry value transform: `2^n + 1` bits.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CarryValue {
    n: u32,
    bits: Bits,
}

impl CarryValue {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    /// Integer value, available for n <= 6.
    pub fn value(&self) -> Option<u128> {
        self.bits.to_u128()
    }

    pub fn to_bit_string(&self) -> String {
        self.bits.to_bit_string()
    }
}

/// Coefficients of `k_n x_n xor ... xor k_1 x_1 xor k_0`: bit `j - 1` of
/// `mask` is `k_j` and `constant` is `k_0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineSpec {
    n: u32,
    mask: u64,
    constant: bool,
}

impl AffineSpec {
    pub fn new(n: u32, mask: u64, constant: bool) -> Result<Self> {
        check_vars(n)?;
        if mask >> n != 0 {
            return Err(Error::parse(format!(
                "coefficient mask {mask:#x} exceeds {n} variables"
            )));
        }
        Ok(AffineSpec { n, mask, constant })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn constant(&self) -> bool {
        self.constant
    }

    pub fn is_linear(&self) -> bool {
        !self.constant
    }

    /// Output on input `x`: `parity(mask & x) xor constant`.
    pub fn eval(&self, x: u64) -> bool {
        ((self.mask & x).count_ones() & 1 == 1) ^ self.constant
    }

    pub fn truth_table(&self) -> TruthTable {
        let len = 1usize << self.n;
        // Inputs below 64 share one pattern; higher input bits flip whole words.
        let low_mask = self.mask & 63;
        let mut pattern = 0u64;
        for x in 0..len.min(64) as u64 {
            if (low_mask & x).count_ones() & 1 == 1 {
                pattern |= 1 << x;
            }
        }
        if self.constant {
            pattern = !pattern;
        }
        let high_mask = self.mask >> 6;
        let words: Words = (0..len.div_ceil(64) as u64)
            .map(|w| {
                if (high_mask & w).count_ones() & 1 == 1 {
                    !pattern
                } else {
                    pattern
                }
            })
            .collect();
        TruthTable::from_words(self.n, words)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: u32, r: u64) -> TruthTable {
        TruthTable::from_rule(n, r).unwrap()
    }

    #[test]
    fn from_rule_examples() {
        assert_eq!(t(3, 150).to_bit_string(), "10010110");
        assert_eq!(t(3, 0).to_bit_string(), "00000000");
        assert_eq!(t(2, 10).to_bit_string(), "1010");
    }

    #[test]
    fn from_rule_validation() {
        assert!(matches!(
            TruthTable::from_rule(3, 256),
            Err(Error::RuleOutOfRange { .. })
        ));
        assert!(matches!(
            TruthTable::from_rule(0, 0),
            Err(Error::VariableCount { .. })
        ));
        assert!(TruthTable::from_rule(6, u64::MAX).is_ok());
        assert!(TruthTable::from_rule(7, 0).is_err());
    }

    #[test]
    fn position_one_is_least_significant() {
        let f = t(3, 1);
        assert!(f.bit_at(1));
        assert!(!f.bit_at(8));
        assert_eq!(f.to_bit_string(), "00000001");
    }

    #[test]
    fn complement_examples() {
        assert_eq!(t(3, 0).complement().rule(), Some(255));
        assert_eq!(t(3, 170).complement().rule(), Some(85));
        assert_eq!(t(3, 150).complement().rule(), Some(105));
    }

    #[test]
    fn concat_high_low_examples() {
        let c = TruthTable::concat_high_low(&t(2, 2), &t(2, 0)).unwrap();
        assert_eq!((c.n(), c.rule()), (3, Some(32)));
        assert_eq!(c.to_bit_string(), "00100000");
        let c = TruthTable::concat_high_low(&t(2, 0), &t(2, 2)).unwrap();
        assert_eq!(c.rule(), Some(2));
        let c = TruthTable::concat_high_low(&t(2, 0), &t(2, 0)).unwrap();
        assert_eq!(c.rule(), Some(0));
        assert!(matches!(
            TruthTable::concat_high_low(&t(2, 0), &t(3, 0)),
            Err(Error::VariableCountMismatch { .. })
        ));
    }

    #[test]
    fn concat_self_examples() {
        let ff = t(1, 0).concat_self().unwrap();
        assert_eq!((ff.n(), ff.to_bit_string().as_str()), (2, "0000"));
        assert_eq!(t(1, 2).concat_self().unwrap().rule(), Some(10));
        let big = t(3, 150).concat_self().unwrap();
        assert_eq!(big.rule(), Some(38550));
        assert!(big.is_affine());
    }

    #[test]
    fn concat_with_complement_examples() {
        let g = t(1, 0).concat_with_complement().unwrap();
        // Column read top to bottom (inputs 0..3) is 0,0,1,1.
        assert_eq!(
            (0..4).map(|x| g.get(x) as u8).collect::<Vec<_>>(),
            vec![0, 0, 1, 1]
        );
        assert_eq!(g.rule(), Some(12));
        assert_eq!(t(1, 2).concat_with_complement().unwrap().rule(), Some(6));
        assert_eq!(
            t(3, 255).concat_with_complement().unwrap().rule(),
            Some(255)
        );
    }

    #[test]
    fn xor_examples() {
        assert_eq!(t(3, 44).xor(&t(3, 34)).unwrap().rule(), Some(14));
        assert_eq!(t(3, 12).xor(&t(3, 10)).unwrap().rule(), Some(6));
        assert_eq!(t(3, 77).xor(&t(3, 77)).unwrap().rule(), Some(0));
        assert!(t(3, 1).xor(&t(2, 1)).is_err());
    }

    #[test]
    fn cvt_examples() {
        let c = t(3, 44).cvt(&t(3, 34)).unwrap();
        assert_eq!((c.len(), c.value()), (9, Some(64)));
        assert_eq!(t(3, 46).cvt(&t(3, 46)).unwrap().value(), Some(92));
        assert_eq!(t(3, 0).cvt(&t(3, 201)).unwrap().value(), Some(0));
        assert!(t(3, 1).cvt(&t(4, 1)).is_err());
    }

    #[test]
    fn cvt_keeps_top_carry() {
        let c = t(3, 255).cvt(&t(3, 128)).unwrap();
        assert_eq!(c.value(), Some(256));
        assert_eq!(c.to_bit_string(), "100000000");
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(t(3, 2).hamming_distance(&t(3, 0)).unwrap(), 1);
        assert_eq!(t(3, 46).hamming_distance(&t(3, 0)).unwrap(), 4);
        assert_eq!(t(3, 99).hamming_distance(&t(3, 99)).unwrap(), 0);
        assert!(t(3, 1).hamming_distance(&t(2, 1)).is_err());
    }

    #[test]
    fn affine_examples() {
        assert!(t(3, 60).is_affine() && t(3, 60).is_linear());
        assert!(t(3, 105).is_affine() && !t(3, 105).is_linear());
        assert!(!t(3, 1).is_affine());
        assert!(t(3, 0).is_linear());
    }

    #[test]
    fn affine_truth_table_examples() {
        let a = |m, c| AffineSpec::new(3, m, c).unwrap().truth_table().rule();
        assert_eq!(a(1, false), Some(170));
        assert_eq!(a(0, false), Some(0));
        assert_eq!(a(7, true), Some(105));
        assert!(AffineSpec::new(3, 8, false).is_err());
    }

    #[test]
    fn affine_truth_table_large_matches_eval() {
        let spec = AffineSpec::new(9, 0b1_0100_0101, true).unwrap();
        let tt = spec.truth_table();
        assert!((0..512).all(|x| tt.get(x) == spec.eval(x)));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(TruthTable::parse_bits("10010110").unwrap(), t(3, 150));
        assert_eq!(TruthTable::parse_hex("96").unwrap(), t(3, 150));
        assert_eq!(TruthTable::parse_hex("9A").unwrap(), t(3, 154));
        assert_eq!(TruthTable::parse_decimal(3, "150").unwrap(), t(3, 150));
        assert_eq!(t(3, 150).to_hex_string().unwrap(), "96");
        assert!(TruthTable::parse_bits("101").is_err());
        assert!(TruthTable::parse_bits("1").is_err());
        assert!(TruthTable::parse_bits("10x1").is_err());
        assert!(TruthTable::parse_hex("").is_err());
        assert!(TruthTable::parse_hex("abc").is_err());
        assert!(TruthTable::parse_hex("g0").is_err());
        assert!(TruthTable::parse_decimal(3, "256").is_err());
        assert!(TruthTable::parse_decimal(3, "+1").is_err());
        assert!(TruthTable::parse_decimal(6, "1").is_err());
        assert!(t(1, 2).to_hex_string().is_err());
    }

    #[test]
    fn ordering_is_numeric() {
        let mut v: Vec<_> = [46u64, 2, 170, 0].iter().map(|&r| t(3, r)).collect();
        v.sort();
        assert_eq!(
            v.iter().map(|f| f.rule().unwrap()).collect::<Vec<_>>(),
            vec![0, 2, 46, 170]
        );
    }
}
