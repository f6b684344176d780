//! Class member enumeration and generator patterns.

use super::index::{base_point, fixed_rule_mask, ClassIndex};
use super::positions::{changed_count, fixed_positions};
use crate::bits::Bits;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::truth_table::TruthTable;

/// Class size `2^(2^n - (n + 1))` when it fits in a `u128`.
pub fn class_size(n: u32) -> Option<u128> {
    let m = changed_count(n).ok()?;
    (m < 128).then(|| 1u128 << m)
}

/// Mask of the changing inputs, as a full-length bit vector.
fn changed_mask(n: u32) -> Result<Bits> {
    let fixed = fixed_positions(n)?;
    let mut mask = Bits::ones(1usize << n);
    for x in fixed.inputs() {
        mask.set(x as usize, false);
    }
    Ok(mask)
}

/// Ascending stream of the members of one class.
///
/// Members are `base_point(k) | s` for every subset `s` of the changing
/// positions; subsets are visited in increasing numeric order with the
/// step `s' = ((s | !mask) + 1) & mask`.
#[derive(Debug, Clone)]
pub struct ClassMembers {
    n: u32,
    base: Bits,
    mask: Bits,
    subset: Bits,
    remaining: Option<u128>,
    done: bool,
}

impl ClassMembers {
    fn advance(&mut self) {
        let mut carry = 1u64;
        let mask = self.mask.words();
        let subset = self.subset.words_mut();
        for (s, &m) in subset.iter_mut().zip(mask) {
            if carry == 0 {
                break;
            }
            let (sum, overflow) = (*s | !m).overflowing_add(carry);
            *s = sum & m;
            carry = overflow as u64;
        }
        if carry != 0 {
            self.done = true;
        }
    }
}

impl Iterator for ClassMembers {
    type Item = TruthTable;

    fn next(&mut self) -> Option<TruthTable> {
        if self.done || self.remaining == Some(0) {
            return None;
        }
        let member = self.base.zip_with(&self.subset, |b, s| b | s);
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        self.advance();
        Some(TruthTable::from_bits(self.n, member))
    }
}

/// Streams the members of class `k`, ascending by rule number, stopping after
/// `limit` members if given. No materialization cap applies.
pub fn class_members(k: ClassIndex, limit: Option<u128>) -> Result<ClassMembers> {
    let n = k.n();
    let base = base_point(k);
    Ok(ClassMembers {
        n,
        base: base.raw().clone(),
        mask: changed_mask(n)?,
        subset: Bits::zeros(1usize << n),
        remaining: limit,
        done: false,
    })
}

/// Collects every member of class `k`; n must be within the materialization cap.
pub fn class_members_vec(k: ClassIndex, limits: &Limits) -> Result<Vec<TruthTable>> {
    limits.check_materialize(k.n())?;
    Ok(class_members(k, None)?.collect())
}

/// Rule numbers of the members of class `k`, ascending (n <= 6).
pub fn class_member_rules(k: ClassIndex) -> Result<impl Iterator<Item = u64>> {
    let n = k.n();
    let fixed = fixed_rule_mask(n)?;
    let full = if n == 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    };
    let mask = full & !fixed;
    let base = base_point(k).rule().expect("n <= 6");
    let mut subset = Some(0u64);
    Ok(std::iter::from_fn(move || {
        let s = subset?;
        let (next, overflow) = (s | !mask).overflowing_add(1);
        subset = (!overflow).then_some(next & mask);
        Some(base | s)
    }))
}

/// Fixed bits of class `k` with `-` at the changing positions, MSB-first.
pub fn generator_pattern(k: ClassIndex) -> String {
    let n = k.n();
    let fixed = fixed_positions(n).expect("valid n");
    let sig = k.signature();
    let len = 1u64 << n;
    let mut out = vec![b'-'; len as usize];
    for (j, p) in fixed.positions().iter().enumerate() {
        out[(len - p) as usize] = if sig.bit(j as u32) { b'1' } else { b'0' };
    }
    String::from_utf8(out).expect("ascii")
}

/// Most don't-care symbols a pattern may carry when expanded.
pub const PATTERN_FREE_MAX: u32 = 24;

/// Expands a MSB-first pattern over `{0, 1, -}` into every matching truth
/// table, ascending.
pub fn expand_generator_pattern(pattern: &str) -> Result<Vec<TruthTable>> {
    let len = pattern.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::parse(format!("pattern length {len} is not 2^n")));
    }
    let n = len.trailing_zeros();
    let mut base = TruthTable::zero(n)?;
    let mut free = Vec::new();
    for (i, c) in pattern.bytes().rev().enumerate() {
        match c {
            b'0' => {}
            b'1' => base.set(i as u64, true),
            b'-' => free.push(i as u64),
            other => {
                return Err(Error::parse(format!(
                    "invalid pattern character {:?}",
                    other as char
                )))
            }
        }
    }
    if free.len() as u32 > PATTERN_FREE_MAX {
        return Err(Error::parse(format!(
            "pattern has {} don't-cares (max {PATTERN_FREE_MAX})",
            free.len()
        )));
    }
    Ok((0..1u64 << free.len())
        .map(|counter| {
            let mut t = base.clone();
            for (b, &x) in free.iter().enumerate() {
                if (counter >> b) & 1 == 1 {
                    t.set(x, true);
                }
            }
            t
        })
        .collect())
}
