//! Reference data for n = 2 and n = 3, transcribed by hand.
//!
//! The files under `data/` are never generated by this crate. Each one is
//! pinned by a SHA-256 digest so accidental edits are caught.

use crate::analysis::{OpTable, TableOp};
use crate::classifier::ClassIndex;
use crate::error::{Error, Result};
use crate::format::parse_op_table_csv;
use sha2::{Digest, Sha256};

pub struct GoldenFile {
    pub name: &'static str,
    pub contents: &'static str,
    pub sha256: &'static str,
}

macro_rules! golden_file {
    ($name:literal, $sha:literal) => {
        GoldenFile {
            name: $name,
            contents: include_str!(concat!("data/", $name)),
            sha256: $sha,
        }
    };
}

pub const FILES: &[GoldenFile] = &[
    golden_file!(
        "classes_n3.csv",
        "64a9e5b15a9c66fd46698615a96d6ff6e2f07803bbc9f4676971679a75372b16"
    ),
    golden_file!(
        "subclasses_class1_n3.csv",
        "faafbe13a34c160e9ee7540ed18aacc5aeb8fe4900830a3056e868474f47604c"
    ),
    golden_file!(
        "xor_class1_n3.csv",
        "9e13c18f08e2e6a5d97b8b0ee078a36e6c55d969f1cf27805f159d185168d3eb"
    ),
    golden_file!(
        "xor_class2_n3.csv",
        "6a44523decc219b61e0ddbb02b0480d0f3426fcf802460f160b8fa2935d0acd7"
    ),
    golden_file!(
        "xor_class3_n3.csv",
        "464808880d933a158eb93de3fca2d8f69e7e9bb4b4a49d1b6c83e991eafc3cf8"
    ),
    golden_file!(
        "cvt_class1_n3.csv",
        "abc17b6d7b82069799586c01e01d708951649614d8ecb92242517d2273a78f15"
    ),
    golden_file!(
        "cvt_class2_n3.csv",
        "04d43c7ae1ca43667358911e08b5ee9ecd31bd56709279a969e9500aee00107a"
    ),
];

pub fn file(name: &str) -> Option<&'static GoldenFile> {
    FILES.iter().find(|f| f.name == name)
}

pub fn sha256_hex(data: &[u8]) -> String {
    Sha256::digest(data)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Names of files whose digest no longer matches.
pub fn checksum_mismatches() -> Vec<&'static str> {
    FILES
        .iter()
        .filter(|f| sha256_hex(f.contents.as_bytes()) != f.sha256)
        .map(|f| f.name)
        .collect()
}

/// The eight 2-variable classes of the recursive construction, in
/// construction order, members as MSB-first strings.
pub const RECURSIVE_N2: [[&str; 2]; 8] = [
    ["0000", "0010"],
    ["1000", "1010"],
    ["1100", "1110"],
    ["0100", "0110"],
    ["0011", "0001"],
    ["1011", "1001"],
    ["1111", "1101"],
    ["0111", "0101"],
];

/// First class of the 3-variable construction, in construction order. The
/// first entry was printed with a digit missing and is restored here.
pub const RECURSIVE_N3_FIRST: [&str; 16] = [
    "00000000", "00000010", "00001000", "00001010", "00001100", "00001110", "00000100", "00000110",
    "00100000", "00100010", "00101000", "00101010", "00101100", "00101110", "00100100", "00100110",
];

/// First odd class of the 3-variable construction (the ninth class built).
pub const RECURSIVE_N3_FIRST_ODD: [&str; 16] = [
    "00000011", "00000001", "00001011", "00001001", "00001111", "00001101", "00000111", "00000101",
    "00100011", "00100001", "00101011", "00101001", "00101111", "00101101", "00100111", "00100101",
];

/// The 3-variable affine functions in class order.
pub const AFFINE_ORDER_N3: [u64; 16] = [
    0, 170, 204, 102, 240, 90, 60, 150, 255, 85, 51, 153, 15, 165, 195, 105,
];

/// One member with its recorded Hamming distance to the class's affine function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenMember {
    pub rule: u64,
    pub hd: u64,
}

/// One 3-variable class as printed: members in printed order, affine first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenClass {
    pub class: u64,
    pub members: Vec<GoldenMember>,
}

impl GoldenClass {
    /// The distance-0 member.
    pub fn affine(&self) -> Option<u64> {
        self.members.iter().find(|m| m.hd == 0).map(|m| m.rule)
    }
}

fn data_rows(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn num(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad golden value {s:?}")))
}

/// Class 1 sub-classes in printed order.
pub fn class_one_subclasses() -> Result<Vec<GoldenMember>> {
    data_rows(file("subclasses_class1_n3.csv").unwrap().contents)
        .map(|line| {
            let (rule, hd) = line
                .split_once(',')
                .ok_or_else(|| Error::parse(format!("bad row {line:?}")))?;
            Ok(GoldenMember {
                rule: num(rule)?,
                hd: num(hd)?,
            })
        })
        .collect()
}

/// All sixteen 3-variable classes; class 1 comes from the sub-class table.
pub fn classes_n3() -> Result<Vec<GoldenClass>> {
    let mut classes = vec![GoldenClass {
        class: 1,
        members: class_one_subclasses()?,
    }];
    for line in data_rows(file("classes_n3.csv").unwrap().contents) {
        let parts: Vec<&str> = line.split(',').collect();
        let [k, rule, hd] = parts[..] else {
            return Err(Error::parse(format!("bad row {line:?}")));
        };
        let member = GoldenMember {
            rule: num(rule)?,
            hd: num(hd)?,
        };
        let k = num(k)?;
        match classes.last_mut() {
            Some(c) if c.class == k => c.members.push(member),
            _ => classes.push(GoldenClass {
                class: k,
                members: vec![member],
            }),
        }
    }
    Ok(classes)
}

/// A printed 3-variable operation table.
pub struct GoldenTable {
    pub file: &'static str,
    pub class: u64,
    pub op: TableOp,
}

impl GoldenTable {
    pub fn load(&self) -> Result<OpTable> {
        let class = ClassIndex::new(3, self.class)?;
        let table = parse_op_table_csv(file(self.file).unwrap().contents, class)?;
        if table.op != self.op {
            return Err(Error::parse(format!(
                "{} has the wrong op label",
                self.file
            )));
        }
        Ok(table)
    }
}

/// Every printed table. The class 3 CVT table was printed empty and is absent.
pub const TABLES: &[GoldenTable] = &[
    GoldenTable {
        file: "xor_class1_n3.csv",
        class: 1,
        op: TableOp::Xor,
    },
    GoldenTable {
        file: "xor_class2_n3.csv",
        class: 2,
        op: TableOp::Xor,
    },
    GoldenTable {
        file: "xor_class3_n3.csv",
        class: 3,
        op: TableOp::Xor,
    },
    GoldenTable {
        file: "cvt_class1_n3.csv",
        class: 1,
        op: TableOp::Cvt,
    },
    GoldenTable {
        file: "cvt_class2_n3.csv",
        class: 2,
        op: TableOp::Cvt,
    },
];
