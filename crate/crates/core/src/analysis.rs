//! Hamming-distance sub-classes and per-class XOR / CVT tables.

use crate::classifier::{
    affine_representative, base_point, changed_count, class_member_rules, class_members_vec,
    fixed_rule_mask, ClassIndex,
};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::truth_table::TruthTable;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Largest n for which a class's M x M operation table is produced
/// (M = 2048 at n = 4; n = 5 would need 2^52 cells).
pub const OP_TABLE_VARS_MAX: u32 = 4;

/// Members of one class grouped by Hamming distance to its affine function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubclassReport {
    pub class: ClassIndex,
    pub affine: TruthTable,
    /// Distance to ascending members at that distance.
    pub rows: BTreeMap<u64, Vec<TruthTable>>,
}

impl SubclassReport {
    pub fn sizes(&self) -> BTreeMap<u64, u64> {
        self.rows
            .iter()
            .map(|(&d, members)| (d, members.len() as u64))
            .collect()
    }
}

pub fn subclass_report(k: ClassIndex, limits: &Limits) -> Result<SubclassReport> {
    let affine = affine_representative(k);
    let mut rows: BTreeMap<u64, Vec<TruthTable>> = BTreeMap::new();
    for member in class_members_vec(k, limits)? {
        let d = member.hamming_distance(&affine)?;
        rows.entry(d).or_default().push(member);
    }
    Ok(SubclassReport {
        class: k,
        affine,
        rows,
    })
}

/// Sub-class sizes `C(m, d)` for `d = 0..=m`, `m = 2^n - (n + 1)`. The same
/// for every class. Fails once a coefficient overflows `u128` (n >= 8).
pub fn subclass_sizes(n: u32) -> Result<Vec<u128>> {
    let m = changed_count(n)? as u128;
    let overflow = || Error::CapExceeded {
        what: "binomial coefficient",
        n,
        cap: 7,
    };
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut c = 1u128;
    out.push(c);
    for d in 0..m {
        // c * (m - d) is divisible by d + 1 after the multiply.
        c = c.checked_mul(m - d).ok_or_else(overflow)? / (d + 1);
        out.push(c);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableOp {
    Xor,
    Cvt,
}

impl TableOp {
    /// Cell value for two rule numbers. CVT cells are one bit wider.
    #[inline]
    pub fn apply(self, a: u64, b: u64) -> u64 {
        match self {
            TableOp::Xor => a ^ b,
            TableOp::Cvt => (a & b) << 1,
        }
    }

    /// Label written in the top-left cell of CSV tables.
    pub fn label(self) -> &'static str {
        match self {
            TableOp::Xor => "XOR",
            TableOp::Cvt => "CVT",
        }
    }
}

impl fmt::Display for TableOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableOp::Xor => "xor",
            TableOp::Cvt => "cvt",
        })
    }
}

impl FromStr for TableOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xor" | "XOR" => Ok(TableOp::Xor),
            "cvt" | "CVT" => Ok(TableOp::Cvt),
            other => Err(Error::parse(format!("unknown table operation {other:?}"))),
        }
    }
}

/// `cells[i][j] = op(axis[i], axis[j])`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    pub class: ClassIndex,
    pub op: TableOp,
    pub axis: Vec<u64>,
    pub cells: Vec<u64>,
}

impl OpTable {
    pub fn size(&self) -> usize {
        self.axis.len()
    }

    pub fn cell(&self, i: usize, j: usize) -> u64 {
        self.cells[i * self.axis.len() + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        let m = self.axis.len();
        &self.cells[i * m..(i + 1) * m]
    }

    /// Recomputes every cell from the axis.
    pub fn is_consistent(&self) -> bool {
        let m = self.axis.len();
        self.cells.len() == m * m
            && self.axis.iter().enumerate().all(|(i, &a)| {
                self.axis
                    .iter()
                    .enumerate()
                    .all(|(j, &b)| self.cell(i, j) == self.op.apply(a, b))
            })
    }

    /// Looks up a cell by its row and column labels.
    pub fn lookup(&self, row: u64, col: u64) -> Option<u64> {
        let i = self.axis.binary_search(&row).ok()?;
        let j = self.axis.binary_search(&col).ok()?;
        Some(self.cell(i, j))
    }
}

fn check_op_table(k: ClassIndex) -> Result<()> {
    if k.n() > OP_TABLE_VARS_MAX {
        return Err(Error::CapExceeded {
            what: "operation table",
            n: k.n(),
            cap: OP_TABLE_VARS_MAX,
        });
    }
    Ok(())
}

/// Row-by-row generation of an operation table, for export without holding
/// the whole matrix.
pub struct OpTableRows {
    op: TableOp,
    axis: Vec<u64>,
    next: usize,
}

impl OpTableRows {
    pub fn axis(&self) -> &[u64] {
        &self.axis
    }

    pub fn op(&self) -> TableOp {
        self.op
    }
}

impl Iterator for OpTableRows {
    /// Row label and cells.
    type Item = (u64, Vec<u64>);

    fn next(&mut self) -> Option<Self::Item> {
        let a = *self.axis.get(self.next)?;
        self.next += 1;
        let row = self.axis.iter().map(|&b| self.op.apply(a, b)).collect();
        Some((a, row))
    }
}

pub fn op_table_rows(k: ClassIndex, op: TableOp) -> Result<OpTableRows> {
    check_op_table(k)?;
    Ok(OpTableRows {
        op,
        axis: class_member_rules(k)?.collect(),
        next: 0,
    })
}

/// Materialized table over the ascending members of class `k`.
pub fn op_table(k: ClassIndex, op: TableOp, limits: &Limits) -> Result<OpTable> {
    limits.check_materialize(k.n())?;
    let rows = op_table_rows(k, op)?;
    let axis = rows.axis().to_vec();
    let cells = rows.flat_map(|(_, row)| row).collect();
    Ok(OpTable {
        class: k,
        op,
        axis,
        cells,
    })
}

/// A rule number is in class 1 iff it is zero at every fixed position.
#[inline]
fn in_class_one(fixed_mask: u64, rule: u64) -> bool {
    rule & fixed_mask == 0
}

/// XOR table of one class against the class-1 table: same cells entrywise,
/// all of them in class 1.
pub fn xor_table_matches_reference(reference: &OpTable, table: &OpTable) -> Result<bool> {
    let fixed = fixed_rule_mask(table.class.n())?;
    Ok(reference.op == TableOp::Xor
        && table.op == TableOp::Xor
        && reference.cells == table.cells
        && table.cells.iter().all(|&c| in_class_one(fixed, c)))
}

/// CVT table of one class against the class-1 table: every cell shifted by
/// `offset`.
pub fn cvt_table_matches_reference(reference: &OpTable, table: &OpTable, offset: u64) -> bool {
    reference.op == TableOp::Cvt
        && table.op == TableOp::Cvt
        && reference.cells.len() == table.cells.len()
        && reference
            .cells
            .iter()
            .zip(&table.cells)
            .all(|(&r, &c)| c == r + offset)
}

/// CVT offset of class `k` relative to class 1: `2 * R(base_point(k))`.
pub fn cvt_offset(k: ClassIndex) -> Result<u64> {
    check_op_table(k)?;
    Ok(2 * base_point(k).rule().expect("n <= 4"))
}

fn reference_axis(n: u32, limits: &Limits) -> Result<Vec<u64>> {
    limits.check_materialize(n)?;
    let one = ClassIndex::new(n, 1)?;
    check_op_table(one)?;
    Ok(class_member_rules(one)?.collect())
}

/// Every class's XOR table equals the class-1 table and lies in class 1.
/// Tables are compared row by row without materializing them.
pub fn xor_invariance_check(n: u32, limits: &Limits) -> Result<bool> {
    let reference = reference_axis(n, limits)?;
    let fixed = fixed_rule_mask(n)?;
    for k in ClassIndex::all(n)? {
        let axis: Vec<u64> = class_member_rules(k)?.collect();
        if axis.len() != reference.len() {
            return Ok(false);
        }
        for (&a, &ra) in axis.iter().zip(&reference) {
            for (&b, &rb) in axis.iter().zip(&reference) {
                let cell = TableOp::Xor.apply(a, b);
                if cell != TableOp::Xor.apply(ra, rb) || !in_class_one(fixed, cell) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Every class's CVT table equals the class-1 table plus `2 * R(base_point(k))`.
pub fn cvt_offset_check(n: u32, limits: &Limits) -> Result<bool> {
    let reference = reference_axis(n, limits)?;
    for k in ClassIndex::all(n)? {
        let offset = cvt_offset(k)?;
        let axis: Vec<u64> = class_member_rules(k)?.collect();
        if axis.len() != reference.len() {
            return Ok(false);
        }
        for (&a, &ra) in axis.iter().zip(&reference) {
            for (&b, &rb) in axis.iter().zip(&reference) {
                if TableOp::Cvt.apply(a, b) != TableOp::Cvt.apply(ra, rb) + offset {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Every class is class 1 translated by its base point: the sorted members of
/// class `k` are those of class 1 each plus `R(base_point(k))`.
pub fn coset_check(n: u32, limits: &Limits) -> Result<bool> {
    let reference = reference_axis(n, limits)?;
    for k in ClassIndex::all(n)? {
        let base = base_point(k).rule().expect("n <= 4");
        let shifted = reference.iter().map(|&r| r + base);
        if !shifted.eq(class_member_rules(k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Class 1 is closed under XOR.
pub fn class_one_closed(n: u32, limits: &Limits) -> Result<bool> {
    let reference = reference_axis(n, limits)?;
    let fixed = fixed_rule_mask(n)?;
    Ok(reference
        .iter()
        .all(|&a| reference.iter().all(|&b| in_class_one(fixed, a ^ b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::classify_rule;

    fn k(n: u32, k: u64) -> ClassIndex {
        ClassIndex::new(n, k).unwrap()
    }

    fn rules(v: &[TruthTable]) -> Vec<u64> {
        v.iter().map(|t| t.rule().unwrap()).collect()
    }

    /// C(m, d) by counting d-subsets of an m-set.
    fn brute_binomial(m: u32, d: u32) -> u128 {
        (0u64..1 << m).filter(|s| s.count_ones() == d).count() as u128
    }

    #[test]
    fn subclass_examples() {
        let limits = Limits::default();
        let r = subclass_report(k(3, 1), &limits).unwrap();
        assert_eq!(
            r.sizes().into_iter().collect::<Vec<_>>(),
            vec![(0, 1), (1, 4), (2, 6), (3, 4), (4, 1)]
        );
        let mut hd1 = rules(&r.rows[&1]);
        hd1.sort_unstable();
        assert_eq!(hd1, vec![2, 4, 8, 32]);

        let r = subclass_report(k(3, 9), &limits).unwrap();
        assert_eq!(rules(&r.rows[&1]), vec![223, 247, 251, 253]);

        let r = subclass_report(k(2, 1), &limits).unwrap();
        assert_eq!(
            r.sizes().into_iter().collect::<Vec<_>>(),
            vec![(0, 1), (1, 1)]
        );
    }

    #[test]
    fn sizes_examples() {
        assert_eq!(subclass_sizes(3).unwrap(), vec![1, 4, 6, 4, 1]);
        assert_eq!(subclass_sizes(1).unwrap(), vec![1]);
        let n4 = subclass_sizes(4).unwrap();
        assert_eq!(n4.len(), 12);
        for (d, &c) in n4.iter().enumerate() {
            assert_eq!(c, brute_binomial(11, d as u32));
        }
        assert_eq!(&n4[..3], &[1, 11, 55]);
        assert!(subclass_sizes(7).is_ok());
        assert!(subclass_sizes(8).is_err());
    }

    #[test]
    fn op_table_examples() {
        let limits = Limits::default();
        let x = op_table(k(3, 1), TableOp::Xor, &limits).unwrap();
        assert_eq!(x.lookup(44, 34), Some(14));
        let c = op_table(k(3, 2), TableOp::Cvt, &limits).unwrap();
        assert_eq!(c.lookup(130, 132), Some(256));
        let c1 = op_table(k(3, 1), TableOp::Cvt, &limits).unwrap();
        assert!(c1.row(0).iter().all(|&v| v == 0));
        assert!(x.is_consistent() && c.is_consistent());
        assert!(op_table(k(5, 1), TableOp::Xor, &Limits::new(24, 5).unwrap()).is_err());
    }

    #[test]
    fn xor_tables_symmetric_zero_diagonal() {
        let t = op_table(k(3, 5), TableOp::Xor, &Limits::default()).unwrap();
        for i in 0..t.size() {
            assert_eq!(t.cell(i, i), 0);
            for j in 0..t.size() {
                assert_eq!(t.cell(i, j), t.cell(j, i));
                assert_eq!(classify_rule(3, t.cell(i, j)).unwrap().get(), 1);
            }
        }
    }

    #[test]
    fn invariance_small() {
        let limits = Limits::default();
        for n in 1..=3 {
            assert!(xor_invariance_check(n, &limits).unwrap());
            assert!(cvt_offset_check(n, &limits).unwrap());
            assert!(coset_check(n, &limits).unwrap());
            assert!(class_one_closed(n, &limits).unwrap());
        }
    }

    #[test]
    fn offsets() {
        assert_eq!(cvt_offset(k(3, 1)).unwrap(), 0);
        assert_eq!(cvt_offset(k(3, 2)).unwrap(), 256);
        assert_eq!(cvt_offset(k(3, 3)).unwrap(), 384);
        let t = op_table(k(3, 3), TableOp::Cvt, &Limits::default()).unwrap();
        assert_eq!(t.lookup(192, 192), Some(384));
    }

    #[test]
    fn mutated_table_detected() {
        let limits = Limits::default();
        let reference = op_table(k(3, 1), TableOp::Xor, &limits).unwrap();
        let mut table = op_table(k(3, 2), TableOp::Xor, &limits).unwrap();
        assert!(xor_table_matches_reference(&reference, &table).unwrap());
        table.cells[17] ^= 2;
        assert!(!xor_table_matches_reference(&reference, &table).unwrap());

        let cref = op_table(k(3, 1), TableOp::Cvt, &limits).unwrap();
        let mut c2 = op_table(k(3, 2), TableOp::Cvt, &limits).unwrap();
        assert!(cvt_table_matches_reference(&cref, &c2, 256));
        assert!(!cvt_table_matches_reference(&cref, &c2, 128));
        c2.cells[5] += 4;
        assert!(!cvt_table_matches_reference(&cref, &c2, 256));
    }

    #[test]
    fn streamed_rows_match_materialized() {
        let t = op_table(k(4, 7), TableOp::Cvt, &Limits::default()).unwrap();
        for (i, (label, row)) in op_table_rows(k(4, 7), TableOp::Cvt).unwrap().enumerate() {
            assert_eq!(label, t.axis[i]);
            assert_eq!(row.as_slice(), t.row(i));
        }
    }
}
