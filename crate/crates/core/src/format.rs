//! CSV and JSON exchange formats.
//!
//! Rule numbers are written in decimal for n <= 5 and as MSB-first hex
//! strings for larger n. Operation tables use the layout of a printed
//! table: the op label in the top-left cell, the ascending axis along the
//! first row and first column.

use crate::analysis::{OpTable, OpTableRows, SubclassReport, TableOp};
use crate::classifier::{ClassIndex, ClassPartition, Signature};
use crate::config::DECIMAL_VARS_MAX;
use crate::error::{Error, Result};
use crate::truth_table::TruthTable;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::io::{self, Write};

/// Rule number text: decimal for n <= 5, hex otherwise.
pub fn render_rule(t: &TruthTable) -> String {
    if t.n() <= DECIMAL_VARS_MAX {
        t.rule().expect("n <= 5").to_string()
    } else {
        t.to_hex_string().expect("n >= 6")
    }
}

/// Inverse of [`render_rule`] for an n-variable function.
pub fn parse_rule(n: u32, s: &str) -> Result<TruthTable> {
    let t = if n <= DECIMAL_VARS_MAX {
        TruthTable::parse_decimal(n, s)?
    } else {
        TruthTable::parse_hex(s)?
    };
    if t.n() != n {
        return Err(Error::parse(format!(
            "value {s:?} has {} variables, expected {n}",
            t.n()
        )));
    }
    Ok(t)
}

/// JSON form of a rule number: a number for n <= 5, a hex string otherwise.
pub fn rule_json(t: &TruthTable) -> Value {
    if t.n() <= DECIMAL_VARS_MAX {
        json!(t.rule().expect("n <= 5"))
    } else {
        json!(t.to_hex_string().expect("n >= 6"))
    }
}

fn rule_from_json(n: u32, v: &Value) -> Result<TruthTable> {
    match v {
        Value::Number(num) if n <= DECIMAL_VARS_MAX => {
            let r = num
                .as_u64()
                .ok_or_else(|| Error::parse(format!("invalid rule number {num}")))?;
            TruthTable::from_rule(n, r)
        }
        Value::String(s) if n > DECIMAL_VARS_MAX => parse_rule(n, s),
        other => Err(Error::parse(format!(
            "unexpected rule value {other} for n = {n}"
        ))),
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::parse(format!("json: {e}"))
}

fn parse_u64_cell(s: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(format!("invalid numeric cell {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::parse(format!("numeric cell {s:?} out of range")))
}

/// Lines of a CSV document, skipping a trailing empty line and tolerating CRLF.
fn csv_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .filter(|l| !l.is_empty())
}

// ---------------------------------------------------------------------------
// Operation tables

fn write_csv_row(out: &mut impl Write, label: &str, cells: &[u64]) -> io::Result<()> {
    out.write_all(label.as_bytes())?;
    for c in cells {
        write!(out, ",{c}")?;
    }
    out.write_all(b"\n")
}

pub fn write_op_table_csv(table: &OpTable, out: &mut impl Write) -> io::Result<()> {
    write_csv_row(out, table.op.label(), &table.axis)?;
    for (i, a) in table.axis.iter().enumerate() {
        write_csv_row(out, &a.to_string(), table.row(i))?;
    }
    Ok(())
}

/// Streams a table row by row.
pub fn write_op_table_rows_csv(rows: OpTableRows, out: &mut impl Write) -> io::Result<()> {
    let header = rows.axis().to_vec();
    write_csv_row(out, rows.op().label(), &header)?;
    for (label, row) in rows {
        write_csv_row(out, &label.to_string(), &row)?;
    }
    Ok(())
}

pub fn render_op_table_csv(table: &OpTable) -> String {
    let mut buf = Vec::new();
    write_op_table_csv(table, &mut buf).expect("write to Vec");
    String::from_utf8(buf).expect("ascii")
}

/// Largest axis accepted when parsing a table (class size at n = 4).
pub const PARSE_AXIS_MAX: usize = 2048;

/// Parses a CSV table for `class`. Only the structure is validated: the op
/// label, a square grid and row labels that repeat the header axis.
pub fn parse_op_table_csv(text: &str, class: ClassIndex) -> Result<OpTable> {
    let mut lines = csv_lines(text);
    let header = lines.next().ok_or_else(|| Error::parse("empty table"))?;
    let mut fields = header.split(',');
    let op: TableOp = fields.next().unwrap_or_default().parse()?;
    let axis = fields.map(parse_u64_cell).collect::<Result<Vec<_>>>()?;
    if axis.is_empty() || axis.len() > PARSE_AXIS_MAX {
        return Err(Error::parse(format!("bad axis length {}", axis.len())));
    }
    let m = axis.len();
    let mut cells = Vec::with_capacity(m * m);
    let mut rows = 0usize;
    for line in lines {
        if rows == m {
            return Err(Error::parse("more rows than axis entries"));
        }
        let mut fields = line.split(',');
        let label = parse_u64_cell(fields.next().unwrap_or_default())?;
        if label != axis[rows] {
            return Err(Error::parse(format!(
                "row {} labelled {label}, expected {}",
                rows + 1,
                axis[rows]
            )));
        }
        let before = cells.len();
        for f in fields {
            cells.push(parse_u64_cell(f)?);
        }
        if cells.len() - before != m {
            return Err(Error::parse(format!(
                "row {} has {} cells, expected {m}",
                rows + 1,
                cells.len() - before
            )));
        }
        rows += 1;
    }
    if rows != m {
        return Err(Error::parse(format!("{rows} rows, expected {m}")));
    }
    Ok(OpTable {
        class,
        op,
        axis,
        cells,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpTableJson {
    n: u32,
    class: u64,
    op: TableOp,
    axis: Vec<u64>,
    cells: Vec<Vec<u64>>,
}

pub fn render_op_table_json(table: &OpTable) -> String {
    let doc = OpTableJson {
        n: table.class.n(),
        class: table.class.get(),
        op: table.op,
        axis: table.axis.clone(),
        cells: (0..table.size()).map(|i| table.row(i).to_vec()).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn parse_op_table_json(text: &str) -> Result<OpTable> {
    let doc: OpTableJson = serde_json::from_str(text).map_err(json_err)?;
    let class = ClassIndex::new(doc.n, doc.class)?;
    let m = doc.axis.len();
    if m > PARSE_AXIS_MAX || doc.cells.len() != m || doc.cells.iter().any(|r| r.len() != m) {
        return Err(Error::parse("table is not square over its axis"));
    }
    Ok(OpTable {
        class,
        op: doc.op,
        axis: doc.axis,
        cells: doc.cells.into_iter().flatten().collect(),
    })
}

// ---------------------------------------------------------------------------
// Member lists

/// Members of one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberList {
    pub class: ClassIndex,
    pub members: Vec<TruthTable>,
}

pub fn write_member_list_csv(list: &MemberList, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "class,rule")?;
    write_member_rows_csv(list.class, list.members.iter(), out)
}

/// Writes `class,rule` rows without a header.
pub fn write_member_rows_csv<'a>(
    class: ClassIndex,
    members: impl Iterator<Item = &'a TruthTable>,
    out: &mut impl Write,
) -> io::Result<()> {
    for m in members {
        writeln!(out, "{},{}", class.get(), render_rule(m))?;
    }
    Ok(())
}

pub fn render_member_list_csv(list: &MemberList) -> String {
    let mut buf = Vec::new();
    write_member_list_csv(list, &mut buf).expect("write to Vec");
    String::from_utf8(buf).expect("utf8")
}

/// Parses `class,rule` rows into consecutive per-class groups.
pub fn parse_member_rows_csv(n: u32, text: &str) -> Result<Vec<MemberList>> {
    let mut lines = csv_lines(text);
    if lines.next() != Some("class,rule") {
        return Err(Error::parse("expected header \"class,rule\""));
    }
    let mut groups: Vec<MemberList> = Vec::new();
    for line in lines {
        let (k, rule) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("malformed row {line:?}")))?;
        let class = ClassIndex::new(n, parse_u64_cell(k)?)?;
        let member = parse_rule(n, rule)?;
        match groups.last_mut() {
            Some(g) if g.class == class => g.members.push(member),
            _ => groups.push(MemberList {
                class,
                members: vec![member],
            }),
        }
    }
    Ok(groups)
}

pub fn parse_member_list_csv(n: u32, text: &str) -> Result<MemberList> {
    let mut groups = parse_member_rows_csv(n, text)?;
    match groups.len() {
        1 => Ok(groups.pop().unwrap()),
        g => Err(Error::parse(format!("expected one class, found {g}"))),
    }
}

pub fn member_list_json(list: &MemberList) -> Value {
    json!({
        "n": list.class.n(),
        "class": list.class.get(),
        "members": list.members.iter().map(rule_json).collect::<Vec<_>>(),
    })
}

pub fn render_member_list_json(list: &MemberList) -> String {
    member_list_json(list).to_string()
}

fn member_list_from_value(v: &Value) -> Result<MemberList> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse("member list must be an object"))?;
    let field_u64 = |name: &str| {
        obj.get(name)
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse(format!("missing or invalid field {name:?}")))
    };
    let n = u32::try_from(field_u64("n")?).map_err(|_| Error::parse("n out of range"))?;
    let class = ClassIndex::new(n, field_u64("class")?)?;
    let members = obj
        .get("members")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("missing members array"))?
        .iter()
        .map(|m| rule_from_json(n, m))
        .collect::<Result<_>>()?;
    Ok(MemberList { class, members })
}

pub fn parse_member_list_json(text: &str) -> Result<MemberList> {
    let v: Value = serde_json::from_str(text).map_err(json_err)?;
    member_list_from_value(&v)
}

// ---------------------------------------------------------------------------
// Reports

pub fn partition_json(p: &ClassPartition) -> Value {
    json!({
        "n": p.n(),
        "method": p.method().to_string(),
        "classes": p.classes().iter().map(|c| json!({
            "class": c.index.get(),
            "members": c.members.iter().map(rule_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn subclass_report_json(r: &SubclassReport) -> Value {
    json!({
        "n": r.class.n(),
        "class": r.class.get(),
        "affine": rule_json(&r.affine),
        "rows": r.rows.iter().map(|(d, members)| json!({
            "hd": d,
            "count": members.len(),
            "members": members.iter().map(rule_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// `hd,rule` rows.
pub fn render_subclass_report_csv(r: &SubclassReport) -> String {
    let mut s = String::from("hd,rule\n");
    for (d, members) in &r.rows {
        for m in members {
            s.push_str(&format!("{d},{}\n", render_rule(m)));
        }
    }
    s
}

/// Classification of a single function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyReport {
    pub function: TruthTable,
    pub class: ClassIndex,
    pub signature: Signature,
    pub affine: TruthTable,
    pub hd: u64,
}

impl ClassifyReport {
    pub fn new(f: TruthTable) -> Self {
        let class = crate::classifier::classify(&f);
        let affine = crate::classifier::affine_representative(class);
        let hd = f.hamming_distance(&affine).expect("same n");
        ClassifyReport {
            signature: crate::classifier::signature(&f),
            function: f,
            class,
            affine,
            hd,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.function.n(),
            "rule": rule_json(&self.function),
            "class": self.class.get(),
            "signature": self.signature.bits(),
            "affine": rule_json(&self.affine),
            "hd": self.hd,
        })
    }
}
