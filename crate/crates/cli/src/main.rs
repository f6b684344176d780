//! `boolclass` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 verification mismatch.

use boolclass::analysis::{op_table, op_table_rows, subclass_report, TableOp};
use boolclass::classifier::{
    affine_representative, class_members, fixed_partition, fixed_positions, recursive_partition,
    ClassIndex, PartitionMethod,
};
use boolclass::config::{DEFAULT_MAX_N_MATERIALIZE, DEFAULT_MAX_N_TABLE, MATERIALIZE_ENV};
use boolclass::format::{
    member_list_json, partition_json, render_rule, rule_json, subclass_report_json,
    write_member_rows_csv, write_op_table_rows_csv, ClassifyReport, MemberList,
};
use boolclass::truth_table::RULE_VARS_MAX;
use boolclass::{verify, Error, Limits, OutputFormat, TruthTable};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "boolclass",
    version,
    about = "Classify Boolean functions into classes with one affine function each"
)]
struct Cli {
    /// Output format (each command has its own default).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Cap on n for materializing classes, partitions and tables.
    #[arg(long = "max-n", global = true, env = MATERIALIZE_ENV, default_value_t = DEFAULT_MAX_N_MATERIALIZE)]
    max_n: u32,

    /// Cap on n for whole-truth-table operations.
    #[arg(long = "max-n-table", global = true, default_value_t = DEFAULT_MAX_N_TABLE)]
    max_n_table: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
            Format::Text => OutputFormat::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Xor,
    Cvt,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursive,
    Fixed,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n+1 fixed truth-table positions.
    FixedPositions {
        #[arg(long)]
        n: u32,
    },
    /// Classify one function.
    #[command(group(ArgGroup::new("input").required(true).args(["rule", "hex", "bits"])))]
    Classify {
        #[arg(long)]
        n: u32,
        /// Decimal rule number (n <= 5).
        #[arg(long)]
        rule: Option<String>,
        /// MSB-first hex truth table.
        #[arg(long)]
        hex: Option<String>,
        /// MSB-first binary truth table.
        #[arg(long)]
        bits: Option<String>,
    },
    /// List the members of one class in ascending order.
    Class {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        index: u64,
        /// Stop after this many members.
        #[arg(long)]
        limit: Option<u128>,
        /// Generate members lazily; required above the materialization cap.
        #[arg(long)]
        stream: bool,
    },
    /// Group a class by Hamming distance to its affine function.
    Subclasses {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        index: u64,
    },
    /// XOR or CVT table over the members of a class.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        index: u64,
        #[arg(long, value_enum)]
        op: Op,
    },
    /// The affine functions in class order.
    Affines {
        #[arg(long)]
        n: u32,
    },
    /// Dump the whole partition.
    Partition {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "fixed")]
        method: Method,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long)]
        n: u32,
        /// Also diff against the embedded reference data (n = 3).
        #[arg(long)]
        golden: bool,
    },
}

enum Failure {
    Usage(String),
    Io(io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn join(values: impl IntoIterator<Item = String>) -> String {
    values.into_iter().collect::<Vec<_>>().join(",")
}

fn print_json(out: &mut impl Write, v: &serde_json::Value) -> io::Result<()> {
    writeln!(out, "{v}")
}

fn run(cli: Cli, out: &mut impl Write) -> CmdResult {
    let limits = Limits::new(cli.max_n_table, cli.max_n)?;
    let format = cli.format.map(OutputFormat::from);
    match cli.command {
        Command::FixedPositions { n } => {
            let fixed = fixed_positions(n)?;
            match format.unwrap_or(OutputFormat::Text) {
                OutputFormat::Json => print_json(out, &serde_json::json!(fixed.positions()))?,
                _ => writeln!(
                    out,
                    "{}",
                    join(fixed.positions().iter().map(u64::to_string))
                )?,
            }
        }
        Command::Classify { n, rule, hex, bits } => {
            limits.check_table(n)?;
            let f = match (rule, hex, bits) {
                (Some(r), _, _) => TruthTable::parse_decimal(n, &r)?,
                (_, Some(h), _) => TruthTable::parse_hex(&h)?,
                (_, _, Some(b)) => TruthTable::parse_bits(&b)?,
                _ => unreachable!("clap enforces one input"),
            };
            if f.n() != n {
                return Err(Failure::Usage(format!(
                    "input describes a {}-variable function, expected n = {n}",
                    f.n()
                )));
            }
            let report = ClassifyReport::new(f);
            match format.unwrap_or(OutputFormat::Json) {
                OutputFormat::Json => print_json(out, &report.to_json())?,
                OutputFormat::Csv => {
                    writeln!(out, "n,class,signature,hd")?;
                    writeln!(
                        out,
                        "{n},{},{},{}",
                        report.class, report.signature, report.hd
                    )?;
                }
                OutputFormat::Text => {
                    writeln!(out, "class {}", report.class)?;
                    writeln!(out, "signature {}", report.signature)?;
                    writeln!(out, "hd {}", report.hd)?;
                    if n <= RULE_VARS_MAX {
                        writeln!(out, "affine {}", rule_json(&report.affine))?;
                    }
                }
            }
        }
        Command::Class {
            n,
            index,
            limit,
            stream,
        } => {
            limits.check_table(n)?;
            let k = ClassIndex::new(n, index)?;
            if !stream {
                limits.check_materialize(n).map_err(|e| {
                    Failure::Usage(format!(
                        "{e}; pass --stream (optionally with --limit) to enumerate lazily"
                    ))
                })?;
            }
            let members = class_members(k, limit)?;
            let fmt = format.unwrap_or(OutputFormat::Text);
            if stream {
                if fmt == OutputFormat::Csv {
                    writeln!(out, "class,rule")?;
                }
                for m in members {
                    match fmt {
                        OutputFormat::Csv => write_member_rows_csv(k, std::iter::once(&m), out)?,
                        OutputFormat::Json => writeln!(out, "{}", rule_json(&m))?,
                        OutputFormat::Text => writeln!(out, "{}", render_rule(&m))?,
                    }
                }
            } else {
                let list = MemberList {
                    class: k,
                    members: members.collect(),
                };
                match fmt {
                    OutputFormat::Csv => {
                        boolclass::format::write_member_list_csv(&list, out)?;
                    }
                    OutputFormat::Json => print_json(out, &member_list_json(&list))?,
                    OutputFormat::Text => {
                        for m in &list.members {
                            writeln!(out, "{}", render_rule(m))?;
                        }
                    }
                }
            }
        }
        Command::Subclasses { n, index } => {
            let k = ClassIndex::new(n, index)?;
            let report = subclass_report(k, &limits)?;
            match format.unwrap_or(OutputFormat::Text) {
                OutputFormat::Json => print_json(out, &subclass_report_json(&report))?,
                OutputFormat::Csv => out
                    .write_all(boolclass::format::render_subclass_report_csv(&report).as_bytes())?,
                OutputFormat::Text => {
                    writeln!(out, "class {} affine {}", k, render_rule(&report.affine))?;
                    for (d, members) in &report.rows {
                        writeln!(
                            out,
                            "hd {d} ({}): {}",
                            members.len(),
                            members
                                .iter()
                                .map(render_rule)
                                .collect::<Vec<_>>()
                                .join(" ")
                        )?;
                    }
                }
            }
        }
        Command::Table { n, index, op } => {
            let k = ClassIndex::new(n, index)?;
            limits.check_materialize(n)?;
            let op = match op {
                Op::Xor => TableOp::Xor,
                Op::Cvt => TableOp::Cvt,
            };
            match format.unwrap_or(OutputFormat::Csv) {
                OutputFormat::Json => {
                    let table = op_table(k, op, &limits)?;
                    writeln!(out, "{}", boolclass::format::render_op_table_json(&table))?;
                }
                OutputFormat::Csv => write_op_table_rows_csv(op_table_rows(k, op)?, out)?,
                OutputFormat::Text => {
                    let rows = op_table_rows(k, op)?;
                    let header: Vec<String> = rows.axis().iter().map(u64::to_string).collect();
                    writeln!(out, "{}\t{}", op.label(), header.join("\t"))?;
                    for (label, row) in rows {
                        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                        writeln!(out, "{label}\t{}", cells.join("\t"))?;
                    }
                }
            }
        }
        Command::Affines { n } => {
            limits.check_table(n)?;
            if n > RULE_VARS_MAX {
                return Err(Failure::Usage(format!(
                    "affines prints rule numbers and supports n <= {RULE_VARS_MAX}"
                )));
            }
            let affines: Vec<TruthTable> = ClassIndex::all(n)?.map(affine_representative).collect();
            match format.unwrap_or(OutputFormat::Text) {
                OutputFormat::Json => print_json(
                    out,
                    &serde_json::json!(affines.iter().map(rule_json).collect::<Vec<_>>()),
                )?,
                _ => writeln!(out, "{}", join(affines.iter().map(render_rule)))?,
            }
        }
        Command::Partition { n, method } => {
            let p = match method {
                Method::Recursive => recursive_partition(n, &limits)?,
                Method::Fixed => fixed_partition(n, &limits)?,
            };
            match format.unwrap_or(OutputFormat::Text) {
                OutputFormat::Json => print_json(out, &partition_json(&p))?,
                OutputFormat::Csv => {
                    writeln!(out, "class,rule")?;
                    for c in p.classes() {
                        write_member_rows_csv(c.index, c.members.iter(), out)?;
                    }
                }
                OutputFormat::Text => {
                    let label = match p.method() {
                        PartitionMethod::Recursive => "construction order",
                        PartitionMethod::Fixed => "class order",
                    };
                    writeln!(out, "n={n} method={} ({label})", p.method())?;
                    for c in p.classes() {
                        writeln!(
                            out,
                            "class {}: {}",
                            c.index,
                            c.members
                                .iter()
                                .map(|m| m.to_bit_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        )?;
                    }
                }
            }
        }
        Command::Verify { n, golden } => {
            let report = verify::run(n, golden, &limits)?;
            match format.unwrap_or(OutputFormat::Text) {
                OutputFormat::Json => print_json(
                    out,
                    &serde_json::to_value(&report).map_err(|e| Failure::Usage(e.to_string()))?,
                )?,
                _ => {
                    if golden && n != 3 {
                        writeln!(
                            out,
                            "note: reference data exists only for n=3; running property suites"
                        )?;
                    }
                    writeln!(out, "{report}")?;
                }
            }
            out.flush()?;
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(2),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
