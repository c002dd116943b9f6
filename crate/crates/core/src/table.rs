//! Tables of `D`, `M`, `ET` and `ED` values in TSV, CSV or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::counting::{
    expected_distinct, expected_total, max_distinct, render_exact, round_half_even,
    total_appearances,
};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
pub enum TableKind {
    /// Maximum number of distinct Lyndon factors.
    #[value(name = "D", alias = "d")]
    #[serde(rename = "D")]
    MaxDistinct,
    /// Total Lyndon factor occurrences over all words.
    #[value(name = "M", alias = "m")]
    #[serde(rename = "M")]
    TotalAppearances,
    /// Expected total number of Lyndon factors.
    #[value(name = "ET", alias = "et")]
    #[serde(rename = "ET")]
    ExpectedTotal,
    /// Expected number of distinct Lyndon factors.
    #[value(name = "ED", alias = "ed")]
    #[serde(rename = "ED")]
    ExpectedDistinct,
}

impl TableKind {
    pub fn symbol(self) -> &'static str {
        match self {
            TableKind::MaxDistinct => "D",
            TableKind::TotalAppearances => "M",
            TableKind::ExpectedTotal => "ET",
            TableKind::ExpectedDistinct => "ED",
        }
    }

    /// Integer-valued kinds render without decimals.
    pub fn is_integral(self) -> bool {
        matches!(self, TableKind::MaxDistinct | TableKind::TotalAppearances)
    }

    pub fn default_sigmas(self) -> Vec<u64> {
        match self {
            TableKind::MaxDistinct => vec![2, 5, 10],
            TableKind::TotalAppearances | TableKind::ExpectedTotal => vec![2, 5],
            TableKind::ExpectedDistinct => vec![2, 5, 10, 20],
        }
    }

    pub fn default_ns(self) -> Vec<u64> {
        match self {
            TableKind::MaxDistinct | TableKind::ExpectedDistinct => {
                (1..=10).chain([15, 20, 25, 30]).collect()
            }
            TableKind::TotalAppearances | TableKind::ExpectedTotal => (1..=10).collect(),
        }
    }

    pub fn value(self, sigma: u64, n: u64) -> Result<BigRational> {
        Ok(match self {
            TableKind::MaxDistinct => BigRational::from_integer(max_distinct(sigma, n)?),
            TableKind::TotalAppearances => BigRational::from_integer(total_appearances(sigma, n)?),
            TableKind::ExpectedTotal => expected_total(sigma, n)?,
            TableKind::ExpectedDistinct => expected_distinct(sigma, n)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputFormat {
    pub format: Format,
    pub decimal_places: u32,
}

impl Default for OutputFormat {
    fn default() -> Self {
        OutputFormat {
            format: Format::Tsv,
            decimal_places: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub kind: TableKind,
    pub sigmas: Vec<u64>,
    pub rows: Vec<(u64, Vec<BigRational>)>,
}

pub fn build_table(kind: TableKind, sigmas: &[u64], ns: &[u64]) -> Result<Table> {
    let rows = ns
        .iter()
        .map(|&n| {
            let cells = sigmas
                .iter()
                .map(|&sigma| kind.value(sigma, n))
                .collect::<Result<Vec<_>>>()?;
            Ok((n, cells))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        kind,
        sigmas: sigmas.to_vec(),
        rows,
    })
}

/// JSON form of a table; exact values are `num/den` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTable {
    pub kind: TableKind,
    pub rows: Vec<JsonRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRow {
    pub n: u64,
    pub cells: Vec<JsonCell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCell {
    pub sigma: u64,
    pub exact: String,
    pub decimal: String,
}

impl Table {
    fn decimal(&self, value: &BigRational, places: u32) -> String {
        if self.kind.is_integral() {
            render_exact(value)
        } else {
            round_half_even(value, places)
        }
    }

    pub fn to_json(&self, places: u32) -> JsonTable {
        JsonTable {
            kind: self.kind,
            rows: self
                .rows
                .iter()
                .map(|(n, cells)| JsonRow {
                    n: *n,
                    cells: self
                        .sigmas
                        .iter()
                        .zip(cells)
                        .map(|(&sigma, v)| JsonCell {
                            sigma,
                            exact: render_exact(v),
                            decimal: self.decimal(v, places),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let sep = match format.format {
            Format::Tsv => "\t",
            Format::Csv => ",",
            Format::Json => {
                let json = self.to_json(format.decimal_places);
                return serde_json::to_string_pretty(&json).expect("table serialises") + "\n";
            }
        };
        let mut out = String::from("n");
        for sigma in &self.sigmas {
            write!(out, "{sep}{}({sigma},n)", self.kind.symbol()).unwrap();
        }
        out.push('\n');
        for (n, cells) in &self.rows {
            write!(out, "{n}").unwrap();
            for v in cells {
                write!(out, "{sep}{}", self.decimal(v, format.decimal_places)).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Parses `1..10,15,20` (also `1-10`) into a list of positive integers.
pub fn parse_int_list(s: &str) -> std::result::Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let range = part.split_once("..").or_else(|| part.split_once('-'));
        match range {
            Some((lo, hi)) => {
                let lo = parse_positive(lo)?;
                let hi = parse_positive(hi.trim_start_matches('='))?;
                if lo > hi {
                    return Err(format!("empty range {part}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(parse_positive(part)?),
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

fn parse_positive(s: &str) -> std::result::Result<u64, String> {
    match u64::from_str(s.trim()) {
        Ok(0) | Err(_) => Err(format!("expected a positive integer, got {s:?}")),
        Ok(v) => Ok(v),
    }
}
