//! Signatures, class indices and the affine decode.
//!
//! Classes are numbered by linear coefficient mask: class `m + 1` holds the
//! linear function with mask `m`, and class `m + 1 + 2^n` its complement.

use super::positions::fixed_positions;
use crate::config::check_vars;
use crate::error::{Error, Result};
use crate::truth_table::{AffineSpec, TruthTable, RULE_VARS_MAX};
use serde::Serialize;
use std::fmt;

/// Inputs at the fixed positions, ascending: input `j` has the top `j` bits set.
#[inline]
fn fixed_input(n: u32, j: u32) -> u64 {
    (1u64 << n) - (1u64 << (n - j))
}

/// A function's bits at the fixed positions; bit `j` of `value` is the bit at
/// the `j`-th smallest fixed position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    n: u32,
    value: u64,
}

impl Signature {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Entry `j` (smallest position first).
    pub fn bit(&self, j: u32) -> bool {
        (self.value >> j) & 1 == 1
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..=self.n).map(|j| self.bit(j) as u8).collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..=self.n {
            f.write_str(if self.bit(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// 1-based class number in `1..=2^(n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassIndex {
    n: u32,
    k: u64,
}

impl ClassIndex {
    pub fn new(n: u32, k: u64) -> Result<Self> {
        check_vars(n)?;
        let max = Self::count(n);
        if !(1..=max).contains(&k) {
            return Err(Error::ClassIndex { n, k, max });
        }
        Ok(ClassIndex { n, k })
    }

    /// Number of classes, `2^(n+1)`.
    pub fn count(n: u32) -> u64 {
        1u64 << (n + 1)
    }

    /// All indices for `n`, ascending.
    pub fn all(n: u32) -> Result<impl Iterator<Item = ClassIndex>> {
        check_vars(n)?;
        Ok((1..=Self::count(n)).map(move |k| ClassIndex { n, k }))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self) -> u64 {
        self.k
    }

    /// Classes `1..=2^n` hold even functions only.
    pub fn is_even_class(&self) -> bool {
        self.k <= 1u64 << self.n
    }

    /// The class of the complements: `k + 2^n` or `k - 2^n`.
    pub fn complement_partner(&self) -> ClassIndex {
        let half = 1u64 << self.n;
        let k = if self.k <= half {
            self.k + half
        } else {
            self.k - half
        };
        ClassIndex { n: self.n, k }
    }

    /// The affine function of this class.
    pub fn affine_spec(&self) -> AffineSpec {
        let half = 1u64 << self.n;
        let mask = (self.k - 1) % half;
        AffineSpec::new(self.n, mask, self.k > half).expect("mask below 2^n")
    }

    /// Signature shared by every member.
    pub fn signature(&self) -> Signature {
        let spec = self.affine_spec();
        let value = (0..=self.n)
            .filter(|&j| spec.eval(fixed_input(self.n, j)))
            .fold(0u64, |acc, j| acc | 1 << j);
        Signature { n: self.n, value }
    }

    fn from_decoded(n: u32, mask: u64, constant: bool) -> ClassIndex {
        let k = mask + 1 + if constant { 1u64 << n } else { 0 };
        ClassIndex { n, k }
    }
}

impl fmt::Display for ClassIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.k)
    }
}

/// Reads `f` at the fixed positions.
pub fn signature(f: &TruthTable) -> Signature {
    let n = f.n();
    let value = (0..=n)
        .filter(|&j| f.get(fixed_input(n, j)))
        .fold(0u64, |acc, j| acc | 1 << j);
    Signature { n, value }
}

/// Two functions are equivalent iff their signatures agree.
pub fn equivalent(f: &TruthTable, g: &TruthTable) -> Result<bool> {
    if f.n() != g.n() {
        return Err(Error::VariableCountMismatch {
            left: f.n(),
            right: g.n(),
        });
    }
    Ok(signature(f) == signature(g))
}

/// Recovers the affine coefficients from a signature. Entry 0 is the
/// constant; the step from entry `j - 1` to `j` adds variable `x_{n-j+1}`,
/// so their xor is that coefficient.
fn decode(sig: Signature) -> (u64, bool) {
    let n = sig.n;
    let constant = sig.bit(0);
    let mut mask = 0u64;
    for j in 1..=n {
        if sig.bit(j) != sig.bit(j - 1) {
            mask |= 1 << (n - j);
        }
    }
    (mask, constant)
}

/// Class of `f`, touching only its `n + 1` fixed bits.
pub fn classify(f: &TruthTable) -> ClassIndex {
    let (mask, constant) = decode(signature(f));
    ClassIndex::from_decoded(f.n(), mask, constant)
}

/// Class of the function with rule number `rule` (n <= 6).
pub fn classify_rule(n: u32, rule: u64) -> Result<ClassIndex> {
    check_vars(n)?;
    if n > RULE_VARS_MAX {
        return Err(Error::RuleOutOfRange {
            n,
            rule: rule as u128,
        });
    }
    let value = (0..=n)
        .filter(|&j| (rule >> fixed_input(n, j)) & 1 == 1)
        .fold(0u64, |acc, j| acc | 1 << j);
    let (mask, constant) = decode(Signature { n, value });
    Ok(ClassIndex::from_decoded(n, mask, constant))
}

/// Class of `f` found by matching its signature against the signature of
/// every affine truth table in turn.
pub fn classify_by_search(f: &TruthTable) -> ClassIndex {
    let sig = signature(f);
    ClassIndex::all(f.n())
        .expect("valid n")
        .find(|k| signature(&k.affine_spec().truth_table()) == sig)
        .expect("affine signatures cover every value")
}

/// The affine function of class `k`.
pub fn affine_representative(k: ClassIndex) -> TruthTable {
    k.affine_spec().truth_table()
}

/// The member of class `k` that is zero at every changing position.
pub fn base_point(k: ClassIndex) -> TruthTable {
    let sig = k.signature();
    let mut t = TruthTable::zero(k.n()).expect("valid n");
    for j in 0..=k.n() {
        if sig.bit(j) {
            t.set(fixed_input(k.n(), j), true);
        }
    }
    t
}

/// Bit mask of the fixed inputs of an n-variable rule number (n <= 6).
pub fn fixed_rule_mask(n: u32) -> Result<u64> {
    let fixed = fixed_positions(n)?;
    if n > RULE_VARS_MAX {
        return Err(Error::RuleOutOfRange { n, rule: 0 });
    }
    Ok(fixed.inputs().fold(0u64, |acc, x| acc | 1 << x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: u32, r: u64) -> TruthTable {
        TruthTable::from_rule(n, r).unwrap()
    }

    fn k(n: u32, k: u64) -> ClassIndex {
        ClassIndex::new(n, k).unwrap()
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&t(3, 0)).bits(), vec![0, 0, 0, 0]);
        assert_eq!(signature(&t(3, 170)).bits(), vec![0, 0, 0, 1]);
        assert_eq!(signature(&t(3, 46)).bits(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn equivalent_examples() {
        assert!(equivalent(&t(3, 46), &t(3, 0)).unwrap());
        assert!(!equivalent(&t(3, 46), &t(3, 170)).unwrap());
        assert!(equivalent(&t(3, 77), &t(3, 77)).unwrap());
        assert!(equivalent(&t(3, 1), &t(2, 1)).is_err());
    }

    #[test]
    fn representative_examples() {
        assert_eq!(affine_representative(k(3, 1)).rule(), Some(0));
        assert_eq!(affine_representative(k(3, 8)).rule(), Some(150));
        assert_eq!(affine_representative(k(3, 13)).rule(), Some(15));
        let order: Vec<u64> = ClassIndex::all(3)
            .unwrap()
            .map(|k| affine_representative(k).rule().unwrap())
            .collect();
        assert_eq!(
            order,
            vec![0, 170, 204, 102, 240, 90, 60, 150, 255, 85, 51, 153, 15, 165, 195, 105]
        );
        assert!(ClassIndex::new(3, 0).is_err());
        assert!(ClassIndex::new(3, 17).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&t(3, 46)).get(), 1);
        assert_eq!(classify(&t(3, 150)).get(), 8);
        assert_eq!(classify(&t(3, 41)).get(), 13);
        assert_eq!(classify_rule(3, 41).unwrap().get(), 13);
    }

    #[test]
    fn base_point_examples() {
        assert_eq!(base_point(k(3, 1)).rule(), Some(0));
        assert_eq!(base_point(k(3, 2)).rule(), Some(128));
        assert_eq!(base_point(k(3, 13)).rule(), Some(1));
    }

    #[test]
    fn complement_partner_rule() {
        assert_eq!(k(3, 1).complement_partner().get(), 9);
        assert_eq!(k(3, 13).complement_partner().get(), 5);
        assert!(k(3, 8).is_even_class());
        assert!(!k(3, 9).is_even_class());
    }

    #[test]
    fn fast_and_search_agree_exhaustive_small() {
        for n in 1..=3 {
            for r in 0..(1u64 << (1 << n)) {
                let f = t(n, r);
                let c = classify(&f);
                assert_eq!(c, classify_by_search(&f));
                assert_eq!(c, classify_rule(n, r).unwrap());
            }
        }
    }

    #[test]
    fn fixed_rule_mask_n3() {
        assert_eq!(fixed_rule_mask(3).unwrap(), 0b1101_0001);
    }
}
