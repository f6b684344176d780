//! Size limits and output settings shared by the library and the CLI.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Smallest supported variable count.
pub const MIN_VARS: u32 = 1;
/// Largest n for which a whole truth table may be allocated (2^30 bits = 128 MiB).
pub const TABLE_VARS_CEILING: u32 = 30;
/// Largest n for which classes, partitions and tables may be materialized.
/// Rule numbers (and carry strings, one bit wider) must fit in 64 bits.
pub const MATERIALIZE_VARS_CEILING: u32 = 5;
/// Largest n for which rule numbers are exchanged in decimal.
pub const DECIMAL_VARS_MAX: u32 = 5;

pub const DEFAULT_MAX_N_TABLE: u32 = 24;
pub const DEFAULT_MAX_N_MATERIALIZE: u32 = 4;

/// Environment variable that overrides the materialization cap.
pub const MATERIALIZE_ENV: &str = "BOOLCLASS_MAX_N_MATERIALIZE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Cap on n for whole-truth-table operations.
    pub max_n_table: u32,
    /// Cap on n for materializing classes, partitions and operation tables.
    pub max_n_materialize: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n_table: DEFAULT_MAX_N_TABLE,
            max_n_materialize: DEFAULT_MAX_N_MATERIALIZE,
        }
    }
}

impl Limits {
    pub fn new(max_n_table: u32, max_n_materialize: u32) -> Result<Self> {
        let limits = Limits {
            max_n_table,
            max_n_materialize,
        };
        limits.validate()?;
        Ok(limits)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n_table < MIN_VARS || self.max_n_table > TABLE_VARS_CEILING {
            return Err(Error::Config(format!(
                "table cap must be in {MIN_VARS}..={TABLE_VARS_CEILING}, got {}",
                self.max_n_table
            )));
        }
        if self.max_n_materialize < MIN_VARS || self.max_n_materialize > MATERIALIZE_VARS_CEILING {
            return Err(Error::Config(format!(
                "materialization cap must be in {MIN_VARS}..={MATERIALIZE_VARS_CEILING}, got {}",
                self.max_n_materialize
            )));
        }
        if self.max_n_materialize > self.max_n_table {
            return Err(Error::Config(
                "materialization cap must not exceed the table cap".into(),
            ));
        }
        Ok(())
    }

    pub fn check_table(&self, n: u32) -> Result<()> {
        check_vars(n)?;
        if n > self.max_n_table {
            return Err(Error::CapExceeded {
                what: "truth-table",
                n,
                cap: self.max_n_table,
            });
        }
        Ok(())
    }

    pub fn check_materialize(&self, n: u32) -> Result<()> {
        check_vars(n)?;
        if n > self.max_n_materialize {
            return Err(Error::CapExceeded {
                what: "materialization",
                n,
                cap: self.max_n_materialize,
            });
        }
        Ok(())
    }
}

/// Validates n against the hard allocation ceiling.
pub(crate) fn check_vars(n: u32) -> Result<()> {
    if !(MIN_VARS..=TABLE_VARS_CEILING).contains(&n) {
        return Err(Error::VariableCount {
            n,
            min: MIN_VARS,
            max: TABLE_VARS_CEILING,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::parse(format!("unknown output format {other:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Text => "text",
        })
    }
}

/// Settings for one CLI run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunConfig {
    pub limits: Limits,
    pub format: Option<OutputFormat>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let l = Limits::default();
        assert_eq!((l.max_n_table, l.max_n_materialize), (24, 4));
        l.validate().unwrap();
    }

    #[test]
    fn rejects_inverted_caps() {
        assert!(Limits::new(3, 4).is_err());
        assert!(Limits::new(24, 0).is_err());
        assert!(Limits::new(24, 6).is_err());
        assert!(Limits::new(31, 4).is_err());
    }

    #[test]
    fn caps_enforced() {
        let l = Limits::default();
        assert!(l.check_materialize(4).is_ok());
        assert!(matches!(
            l.check_materialize(5),
            Err(Error::CapExceeded { cap: 4, .. })
        ));
        assert!(l.check_table(25).is_err());
        assert!(l.check_table(0).is_err());
    }
}
