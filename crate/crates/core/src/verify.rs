//! Self-check suites for one n, optionally diffed against the embedded
//! reference data.

use crate::analysis::{
    class_one_closed, coset_check, cvt_offset_check, op_table, subclass_report, subclass_sizes,
    xor_invariance_check, OpTable,
};
use crate::classifier::{
    affine_representative, changed_positions, changed_positions_closed_form, class_member_rules,
    class_size, classify, classify_by_search, expand_generator_pattern, fixed_partition,
    fixed_positions, fixed_positions_closed_form, generator_pattern, partitions_equal,
    recursive_partition, signature, ClassIndex, ClassPartition,
};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::golden;
use crate::truth_table::TruthTable;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Empty on success; otherwise the first differences found.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: u32,
    pub golden: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {}", c.name)?;
            if !c.passed {
                for line in c.detail.lines() {
                    writeln!(f, "    {line}")?;
                }
            }
        }
        let failed = self.failures().count();
        write!(
            f,
            "n={}: {} checks, {} failed",
            self.n,
            self.checks.len(),
            failed
        )
    }
}

/// Collects up to a handful of mismatch descriptions.
#[derive(Default)]
struct Diff {
    lines: Vec<String>,
    total: usize,
}

impl Diff {
    const SHOWN: usize = 8;

    fn push(&mut self, msg: impl Into<String>) {
        self.total += 1;
        if self.lines.len() < Self::SHOWN {
            self.lines.push(msg.into());
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.push(msg());
        }
    }

    fn into_result(self, name: impl Into<String>) -> CheckResult {
        let mut detail = self.lines.join("\n");
        if self.total > self.lines.len() {
            detail.push_str(&format!("\n... {} more", self.total - self.lines.len()));
        }
        CheckResult {
            name: name.into(),
            passed: self.total == 0,
            detail,
        }
    }
}

fn all_functions(n: u32) -> impl Iterator<Item = TruthTable> {
    let count = 1u64 << (1u32 << n);
    (0..count).map(move |r| TruthTable::from_rule(n, r).expect("n <= 4"))
}

fn positions_check(n: u32) -> Result<CheckResult> {
    let mut d = Diff::default();
    let fixed = fixed_positions(n)?;
    let closed = fixed_positions_closed_form(n)?;
    d.check(fixed.positions() == closed.as_slice(), || {
        format!(
            "procedure {:?} != closed form {closed:?}",
            fixed.positions()
        )
    });
    let changed = changed_positions(n)?;
    let changed_closed = changed_positions_closed_form(n)?;
    d.check(changed == changed_closed, || {
        format!("changed {changed:?} != closed form {changed_closed:?}")
    });
    d.check(fixed.len() == n as usize + 1, || {
        format!("{} fixed positions", fixed.len())
    });
    d.check(changed.len() as u64 == (1u64 << n) - (n as u64 + 1), || {
        format!("{} changed positions", changed.len())
    });
    let mut all: Vec<u64> = fixed.positions().iter().copied().chain(changed).collect();
    all.sort_unstable();
    d.check(all == (1..=1u64 << n).collect::<Vec<_>>(), || {
        "fixed and changed positions do not partition the range".into()
    });
    Ok(d.into_result("fixed/changed positions: procedure and closed forms"))
}

fn affine_census_check(n: u32) -> CheckResult {
    let mut affine = 0u64;
    let mut linear = 0u64;
    let mut signatures = HashSet::new();
    for f in all_functions(n) {
        if f.is_affine() {
            affine += 1;
            signatures.insert(signature(&f));
            if f.is_linear() {
                linear += 1;
            }
        }
    }
    let mut d = Diff::default();
    d.check(affine == 1 << (n + 1), || {
        format!("{affine} affine functions")
    });
    d.check(linear == 1 << n, || format!("{linear} linear functions"));
    d.check(signatures.len() as u64 == affine, || {
        format!("{} distinct affine signatures", signatures.len())
    });
    d.into_result("affine census and signature bijection")
}

fn partition_property_check(p: &ClassPartition) -> CheckResult {
    let n = p.n();
    let mut d = Diff::default();
    let expected_size = class_size(n).unwrap() as usize;
    d.check(p.classes().len() as u64 == ClassIndex::count(n), || {
        format!("{} classes", p.classes().len())
    });
    let mut seen = HashSet::new();
    let mut labels = BTreeSet::new();
    for class in p.classes() {
        labels.insert(class.index);
        d.check(class.members.len() == expected_size, || {
            format!("class {} has {} members", class.index, class.members.len())
        });
        let affines: Vec<&TruthTable> = class.members.iter().filter(|f| f.is_affine()).collect();
        d.check(affines.len() == 1, || {
            format!("class {} has {} affine members", class.index, affines.len())
        });
        if let Some(a) = affines.first() {
            d.check(**a == affine_representative(class.index), || {
                format!("class {} affine member {:?}", class.index, a)
            });
        }
        for f in &class.members {
            d.check(seen.insert(f.clone()), || format!("{f:?} in two classes"));
            d.check(classify(f) == class.index, || {
                format!(
                    "{f:?} listed in class {} but classifies to {}",
                    class.index,
                    classify(f)
                )
            });
            d.check(f.is_even() == class.index.is_even_class(), || {
                format!("{f:?} parity disagrees with class {}", class.index)
            });
        }
    }
    d.check(labels.len() as u64 == ClassIndex::count(n), || {
        format!("{} distinct class labels", labels.len())
    });
    d.check(seen.len() as u64 == 1u64 << (1u32 << n), || {
        format!("union covers {} functions", seen.len())
    });
    d.into_result(format!(
        "{} partition: count, size, disjoint, exhaustive, one affine, evenness",
        p.method()
    ))
}

fn classify_check(n: u32) -> CheckResult {
    let mut d = Diff::default();
    for f in all_functions(n) {
        let fast = classify(&f);
        d.check(fast == classify_by_search(&f), || {
            format!("{f:?}: decode {fast} != search {}", classify_by_search(&f))
        });
        let partner = classify(&f.complement());
        d.check(partner == fast.complement_partner(), || {
            format!(
                "{f:?}: complement lands in {partner}, expected {}",
                fast.complement_partner()
            )
        });
        d.check(fast.is_even_class() == f.is_even(), || {
            format!("{f:?}: class {fast} parity")
        });
    }
    d.into_result("classify decode vs signature search, complement pairing, evenness")
}

fn generator_check(n: u32) -> Result<CheckResult> {
    let mut d = Diff::default();
    let mut patterns = HashSet::new();
    for k in ClassIndex::all(n)? {
        let pattern = generator_pattern(k);
        patterns.insert(pattern.clone());
        let expanded: Vec<u64> = expand_generator_pattern(&pattern)?
            .iter()
            .map(|t| t.rule().unwrap())
            .collect();
        let members: Vec<u64> = class_member_rules(k)?.collect();
        d.check(expanded == members, || {
            format!("class {k}: pattern {pattern} does not expand to the class")
        });
    }
    d.check(patterns.len() as u64 == ClassIndex::count(n), || {
        format!("{} distinct generators", patterns.len())
    });
    Ok(d.into_result("generator patterns expand to their classes"))
}

fn subclass_check(n: u32, limits: &Limits) -> Result<CheckResult> {
    let mut d = Diff::default();
    let expected = subclass_sizes(n)?;
    for k in ClassIndex::all(n)? {
        let report = subclass_report(k, limits)?;
        let sizes: Vec<u128> = report.sizes().values().map(|&c| c as u128).collect();
        d.check(sizes == expected, || {
            format!("class {k}: sizes {sizes:?}, expected {expected:?}")
        });
    }
    Ok(d.into_result("sub-class sizes are binomial coefficients"))
}

fn concat_check(n: u32) -> Result<CheckResult> {
    let mut d = Diff::default();
    for f in all_functions(n) {
        let ff = f.concat_self()?;
        let ffc = f.concat_with_complement()?;
        let fcf = TruthTable::concat_high_low(&f, &f.complement())?;
        let fcfc = f.complement().concat_self()?;
        let linear = ff.is_linear() && ffc.is_linear();
        d.check(f.is_linear() == linear, || {
            format!("{f:?}: linear {} but ff/ff' linear {linear}", f.is_linear())
        });
        let affine = ff.is_affine() && ffc.is_affine() && fcf.is_affine() && fcfc.is_affine();
        d.check(f.is_affine() == affine, || {
            format!(
                "{f:?}: affine {} but concatenations affine {affine}",
                f.is_affine()
            )
        });
    }
    Ok(d.into_result("concatenation laws for linear and affine functions"))
}

fn invariance_check(n: u32, limits: &Limits) -> Result<CheckResult> {
    let mut d = Diff::default();
    d.check(xor_invariance_check(n, limits)?, || {
        "xor tables differ".into()
    });
    d.check(cvt_offset_check(n, limits)?, || {
        "cvt offset law fails".into()
    });
    d.check(coset_check(n, limits)?, || {
        "classes are not translates of class 1".into()
    });
    d.check(class_one_closed(n, limits)?, || {
        "class 1 not closed under xor".into()
    });
    Ok(d.into_result("xor invariance, cvt offset law, coset structure"))
}

fn recursive_check(n: u32, limits: &Limits) -> Result<Vec<CheckResult>> {
    let recursive = recursive_partition(n, limits)?;
    let fixed = fixed_partition(n, limits)?;
    let mut d = Diff::default();
    d.check(partitions_equal(&recursive, &fixed)?, || {
        "recursive and fixed-position partitions differ".into()
    });
    let mut out = vec![
        d.into_result("recursive construction equals fixed-position partition"),
        partition_property_check(&recursive),
        partition_property_check(&fixed),
    ];
    if n == 2 {
        let expected: Vec<Vec<TruthTable>> = golden::RECURSIVE_N2
            .iter()
            .map(|c| c.iter().map(|s| TruthTable::parse_bits(s)).collect())
            .collect::<Result<_>>()?;
        out.push(construction_order_check(&recursive, &[(0, &expected[..])]));
    }
    if n == 3 {
        let parse = |list: &[&str]| -> Result<Vec<TruthTable>> {
            list.iter().map(|s| TruthTable::parse_bits(s)).collect()
        };
        let first = [parse(&golden::RECURSIVE_N3_FIRST)?];
        let odd = [parse(&golden::RECURSIVE_N3_FIRST_ODD)?];
        out.push(construction_order_check(
            &recursive,
            &[(0, &first[..]), (8, &odd[..])],
        ));
    }
    Ok(out)
}

/// Compares construction-order classes starting at the given offsets.
fn construction_order_check(
    p: &ClassPartition,
    expected: &[(usize, &[Vec<TruthTable>])],
) -> CheckResult {
    let mut d = Diff::default();
    for &(start, classes) in expected {
        for (i, want) in classes.iter().enumerate() {
            let got = p.classes().get(start + i).map(|c| &c.members);
            d.check(got == Some(want), || {
                format!(
                    "construction class {} = {got:?}, expected {want:?}",
                    start + i + 1
                )
            });
        }
    }
    d.into_result("recursive construction order matches the reference listing")
}

fn golden_class_check(limits: &Limits) -> Result<CheckResult> {
    let mut d = Diff::default();
    let classes = golden::classes_n3()?;
    d.check(classes.len() == 16, || {
        format!("{} reference classes", classes.len())
    });
    for gc in &classes {
        let k = ClassIndex::new(3, gc.class)?;
        let affine = affine_representative(k).rule().unwrap();
        d.check(gc.affine() == Some(affine), || {
            format!(
                "class {k}: reference affine {:?}, computed {affine}",
                gc.affine()
            )
        });
        d.check(
            golden::AFFINE_ORDER_N3[gc.class as usize - 1] == affine,
            || format!("class {k}: affine order"),
        );
        let mut listed: Vec<u64> = gc.members.iter().map(|m| m.rule).collect();
        listed.sort_unstable();
        let computed: Vec<u64> = class_member_rules(k)?.collect();
        d.check(listed == computed, || {
            format!("class {k}: reference members {listed:?}, computed {computed:?}")
        });
        let report = subclass_report(k, limits)?;
        for m in &gc.members {
            let f = TruthTable::from_rule(3, m.rule)?;
            let got = classify(&f);
            d.check(got == k, || {
                format!("{} listed in class {k}, classifies to {got}", m.rule)
            });
            let hd = f.hamming_distance(&affine_representative(k))?;
            d.check(hd == m.hd, || {
                format!(
                    "{} in class {k}: reference hd {}, computed {hd}",
                    m.rule, m.hd
                )
            });
            let in_row = report.rows.get(&m.hd).is_some_and(|row| row.contains(&f));
            d.check(in_row, || {
                format!("{} missing from hd-{} sub-class of class {k}", m.rule, m.hd)
            });
        }
    }
    Ok(d.into_result("reference class listing for n=3 (membership, index, affine, hd)"))
}

fn golden_subclass_check(limits: &Limits) -> Result<CheckResult> {
    let mut d = Diff::default();
    let mut expected: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
    for m in golden::class_one_subclasses()? {
        expected.entry(m.hd).or_default().insert(m.rule);
    }
    let report = subclass_report(ClassIndex::new(3, 1)?, limits)?;
    let got: BTreeMap<u64, BTreeSet<u64>> = report
        .rows
        .iter()
        .map(|(&hd, row)| (hd, row.iter().map(|t| t.rule().unwrap()).collect()))
        .collect();
    d.check(got == expected, || {
        format!("computed {got:?}, reference {expected:?}")
    });
    Ok(d.into_result("reference class 1 sub-classes for n=3 (as sets)"))
}

fn table_diff(d: &mut Diff, name: &str, reference: &OpTable, computed: &OpTable) {
    d.check(reference.axis == computed.axis, || {
        format!(
            "{name}: axis {:?} != computed {:?}",
            reference.axis, computed.axis
        )
    });
    if reference.cells.len() != computed.cells.len() {
        d.push(format!(
            "{name}: {} cells vs {}",
            reference.cells.len(),
            computed.cells.len()
        ));
        return;
    }
    let m = reference.size();
    for (idx, (r, c)) in reference.cells.iter().zip(&computed.cells).enumerate() {
        d.check(r == c, || {
            format!(
                "{name}: cell ({}, {}) reference {r}, computed {c}",
                reference.axis[idx / m],
                reference.axis[idx % m]
            )
        });
    }
}

fn golden_table_check(limits: &Limits) -> Result<CheckResult> {
    let mut d = Diff::default();
    for t in golden::TABLES {
        let reference = t.load()?;
        let computed = op_table(reference.class, t.op, limits)?;
        table_diff(&mut d, t.file, &reference, &computed);
    }
    Ok(d.into_result("reference xor and cvt tables for n=3 (cell-exact)"))
}

fn checksum_check() -> CheckResult {
    let mut d = Diff::default();
    for name in golden::checksum_mismatches() {
        d.push(format!("{name}: checksum mismatch"));
    }
    d.into_result("reference data checksums")
}

/// Runs every suite for `n`; with `golden` and `n = 3`, also diffs against
/// the embedded reference data. n must be within the materialization cap.
/// Largest n the suites run at; they enumerate all 2^(2^n) functions.
pub const VERIFY_VARS_MAX: u32 = 4;

/// Runs every suite for `n`; with `golden` and `n = 3`, also diffs against
/// the embedded reference data.
pub fn run(n: u32, golden: bool, limits: &Limits) -> Result<VerifyReport> {
    limits.check_materialize(n)?;
    if n > VERIFY_VARS_MAX {
        return Err(Error::CapExceeded {
            what: "verification",
            n,
            cap: VERIFY_VARS_MAX,
        });
    }
    let mut checks = vec![positions_check(n)?, affine_census_check(n)];
    checks.extend(recursive_check(n, limits)?);
    checks.push(classify_check(n));
    checks.push(concat_check(n)?);
    checks.push(generator_check(n)?);
    checks.push(subclass_check(n, limits)?);
    checks.push(invariance_check(n, limits)?);
    if golden && n == 3 {
        checks.push(checksum_check());
        checks.push(golden_class_check(limits)?);
        checks.push(golden_subclass_check(limits)?);
        checks.push(golden_table_check(limits)?);
    }
    Ok(VerifyReport { n, golden, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let limits = Limits::default();
        for n in 1..=3 {
            let report = run(n, n == 3, &limits).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn golden_checks_present_for_n3() {
        let report = run(3, true, &Limits::default()).unwrap();
        assert!(report
            .checks
            .iter()
            .any(|c| c.name.contains("reference xor and cvt")));
        let plain = run(3, false, &Limits::default()).unwrap();
        assert!(plain.checks.len() < report.checks.len());
    }

    #[test]
    fn table_diff_reports_cell() {
        let limits = Limits::default();
        let reference = op_table(
            ClassIndex::new(3, 1).unwrap(),
            crate::analysis::TableOp::Xor,
            &limits,
        )
        .unwrap();
        let mut mutated = reference.clone();
        mutated.cells[3] = 99;
        let mut d = Diff::default();
        table_diff(&mut d, "t", &reference, &mutated);
        let r = d.into_result("t");
        assert!(!r.passed);
        assert!(r.detail.contains("cell (0, 6)"), "{}", r.detail);
    }

    #[test]
    fn cap_enforced() {
        assert!(run(5, false, &Limits::default()).is_err());
        assert!(run(5, false, &Limits::new(24, 5).unwrap()).is_err());
    }
}
