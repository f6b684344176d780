//! Whole partitions, built recursively or from fixed positions.

use super::index::{classify_rule, ClassIndex};
use super::members::class_member_rules;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::truth_table::TruthTable;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionMethod {
    Recursive,
    Fixed,
}

impl fmt::Display for PartitionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartitionMethod::Recursive => "recursive",
            PartitionMethod::Fixed => "fixed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionClass {
    pub index: ClassIndex,
    pub members: Vec<TruthTable>,
}

/// A family of disjoint classes covering every n-variable function.
///
/// Recursive partitions keep construction order, both of classes and of
/// members within a class. Fixed-position partitions are in class-index order
/// with ascending members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    n: u32,
    method: PartitionMethod,
    classes: Vec<PartitionClass>,
}

impl ClassPartition {
    pub fn from_classes(n: u32, method: PartitionMethod, classes: Vec<PartitionClass>) -> Self {
        ClassPartition { n, method, classes }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn method(&self) -> PartitionMethod {
        self.method
    }

    pub fn classes(&self) -> &[PartitionClass] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<PartitionClass> {
        self.classes
    }

    /// Classes as sorted rule-number sets, themselves sorted.
    fn normalized(&self) -> Vec<Vec<TruthTable>> {
        let mut sets: Vec<Vec<TruthTable>> = self
            .classes
            .iter()
            .map(|c| {
                let mut m = c.members.clone();
                m.sort();
                m
            })
            .collect();
        sets.sort();
        sets
    }
}

/// Builds the partition by repeated Cartesian products, starting from the
/// 1-variable classes `{00}, {10}, {11}, {01}`. At each step the first half of
/// the classes (the even ones) and the second half (the odd ones) are
/// flattened; every old class `A` yields `{a . b : a in A, b in evens}` and
/// then, in a second pass, `{a . b : a in A, b in odds}`, where `a . b` puts
/// `a` in the high half.
pub fn recursive_partition(n: u32, limits: &Limits) -> Result<ClassPartition> {
    limits.check_materialize(n)?;
    let mut classes: Vec<Vec<u64>> = vec![vec![0b00], vec![0b10], vec![0b11], vec![0b01]];
    for m in 1..n {
        let shift = 1u32 << m;
        let half = classes.len() / 2;
        let evens: Vec<u64> = classes[..half].iter().flatten().copied().collect();
        let odds: Vec<u64> = classes[half..].iter().flatten().copied().collect();
        let mut next = Vec::with_capacity(classes.len() * 2);
        for low_set in [&evens, &odds] {
            for class in &classes {
                let lifted = class
                    .iter()
                    .flat_map(|&a| low_set.iter().map(move |&b| (a << shift) | b))
                    .collect();
                next.push(lifted);
            }
        }
        classes = next;
    }
    let classes = classes
        .into_iter()
        .map(|rules| {
            let index = classify_rule(n, rules[0])?;
            let members = rules
                .into_iter()
                .map(|r| TruthTable::from_rule(n, r))
                .collect::<Result<_>>()?;
            Ok(PartitionClass { index, members })
        })
        .collect::<Result<_>>()?;
    Ok(ClassPartition {
        n,
        method: PartitionMethod::Recursive,
        classes,
    })
}

/// Builds the partition class by class from the fixed positions.
pub fn fixed_partition(n: u32, limits: &Limits) -> Result<ClassPartition> {
    limits.check_materialize(n)?;
    let classes = ClassIndex::all(n)?
        .map(|index| {
            let members = class_member_rules(index)?
                .map(|r| TruthTable::from_rule(n, r))
                .collect::<Result<_>>()?;
            Ok(PartitionClass { index, members })
        })
        .collect::<Result<_>>()?;
    Ok(ClassPartition {
        n,
        method: PartitionMethod::Fixed,
        classes,
    })
}

/// Set-family equality, ignoring class order, member order and labels.
pub fn partitions_equal(p: &ClassPartition, q: &ClassPartition) -> Result<bool> {
    if p.n != q.n {
        return Err(Error::VariableCountMismatch {
            left: p.n,
            right: q.n,
        });
    }
    Ok(p.normalized() == q.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rule_sets(p: &ClassPartition) -> Vec<Vec<u64>> {
        p.classes()
            .iter()
            .map(|c| c.members.iter().map(|t| t.rule().unwrap()).collect())
            .collect()
    }

    #[test]
    fn recursive_n1_and_n2() {
        let limits = Limits::default();
        let p1 = recursive_partition(1, &limits).unwrap();
        assert_eq!(rule_sets(&p1), vec![vec![0], vec![2], vec![3], vec![1]]);
        let p2 = recursive_partition(2, &limits).unwrap();
        assert_eq!(
            rule_sets(&p2),
            vec![
                vec![0, 2],
                vec![8, 10],
                vec![12, 14],
                vec![4, 6],
                vec![3, 1],
                vec![11, 9],
                vec![15, 13],
                vec![7, 5]
            ]
        );
    }

    #[test]
    fn recursive_n3_first_class() {
        let p = recursive_partition(3, &Limits::default()).unwrap();
        let first = &p.classes()[0];
        let mut rules: Vec<u64> = first.members.iter().map(|t| t.rule().unwrap()).collect();
        assert_eq!(&rules[..8], &[0, 2, 8, 10, 12, 14, 4, 6]);
        rules.sort_unstable();
        assert_eq!(
            rules,
            vec![0, 2, 4, 6, 8, 10, 12, 14, 32, 34, 36, 38, 40, 42, 44, 46]
        );
        assert_eq!(first.index.get(), 1);
    }

    #[test]
    fn recursive_equals_fixed_small() {
        let limits = Limits::default();
        for n in 1..=3 {
            let r = recursive_partition(n, &limits).unwrap();
            let f = fixed_partition(n, &limits).unwrap();
            assert!(partitions_equal(&r, &f).unwrap(), "n={n}");
            assert!(partitions_equal(&r, &r).unwrap());
        }
    }

    #[test]
    fn merged_classes_are_not_equal() {
        let limits = Limits::default();
        let p = recursive_partition(2, &limits).unwrap();
        let mut classes = p.clone().into_classes();
        let moved = classes.remove(1);
        classes[0].members.extend(moved.members);
        let merged = ClassPartition::from_classes(2, PartitionMethod::Recursive, classes);
        assert!(!partitions_equal(&p, &merged).unwrap());
    }

    #[test]
    fn mismatched_n_rejected() {
        let limits = Limits::default();
        let a = fixed_partition(2, &limits).unwrap();
        let b = fixed_partition(3, &limits).unwrap();
        assert!(partitions_equal(&a, &b).is_err());
    }

    #[test]
    fn cap_enforced() {
        assert!(recursive_partition(5, &Limits::default()).is_err());
        assert!(fixed_partition(0, &Limits::default()).is_err());
    }
}
