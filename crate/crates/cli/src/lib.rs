//! Table and sequence rendering behind the `ivpoly` binary.

use std::fmt::Write as _;

use clap::ValueEnum;
use ivpoly_core::constants::{c_first, c_table, lambda_lcm_c, lambda_product, q_table};
use ivpoly_core::exact_arith::{primes_up_to, vp_int, Integer};
use ivpoly_core::stirling_fnk::{d_table, f_table, stirling_first};
use ivpoly_core::{PrimeFactorization, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[value(name = "md", alias = "markdown")]
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum TableKind {
    #[value(name = "c")]
    #[serde(rename = "c")]
    C,
    #[value(name = "q")]
    #[serde(rename = "q")]
    Q,
    #[value(name = "d")]
    #[serde(rename = "d")]
    D,
    #[value(name = "F")]
    #[serde(rename = "F")]
    F,
    #[value(name = "stirling")]
    #[serde(rename = "stirling")]
    Stirling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqKind {
    Lambda,
    Cn,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed table json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("table rows do not form a triangle")]
    Shape,
}

/// A triangle with every entry already rendered as an exact decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableData {
    pub kind: TableKind,
    pub max_n: usize,
    pub rows: Vec<Vec<String>>,
}

fn rational_cell(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn build_table(kind: TableKind, max_n: usize) -> TableData {
    let rows: Vec<Vec<String>> = match kind {
        TableKind::F => f_table(max_n)
            .rows()
            .map(|row| row.iter().map(rational_cell).collect())
            .collect(),
        TableKind::Stirling => integer_rows(stirling_first(max_n).rows()),
        TableKind::D => integer_rows(d_table(&f_table(max_n)).entries.rows()),
        TableKind::C => integer_rows(c_table(&d_table(&f_table(max_n))).entries.rows()),
        TableKind::Q => integer_rows(q_table(max_n).entries.rows()),
    };
    TableData { kind, max_n, rows }
}

fn integer_rows<'a>(rows: impl Iterator<Item = &'a [Integer]>) -> Vec<Vec<String>> {
    rows.map(|row| row.iter().map(Integer::to_string).collect()).collect()
}

pub fn render_table(table: &TableData, format: OutputFormat) -> String {
    let width = table.max_n + 1;
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            let header: Vec<String> = (0..width).map(|k| format!("k{k}")).collect();
            writeln!(out, "n,{}", header.join(",")).unwrap();
            for (n, row) in table.rows.iter().enumerate() {
                let mut cells = row.clone();
                cells.resize(width, String::new());
                writeln!(out, "{n},{}", cells.join(",")).unwrap();
            }
        }
        OutputFormat::Markdown => {
            let header: Vec<String> = (0..width).map(|k| format!("k={k}")).collect();
            writeln!(out, "| n | {} |", header.join(" | ")).unwrap();
            writeln!(out, "|---|{}", "---|".repeat(width)).unwrap();
            for (n, row) in table.rows.iter().enumerate() {
                let cells: Vec<String> = (0..width)
                    .map(|k| row.get(k).map_or_else(|| " ".to_string(), |v| format!(" {v} ")))
                    .collect();
                writeln!(out, "| {n} |{}|", cells.join("|")).unwrap();
            }
        }
        OutputFormat::Json => {
            out = serde_json::to_string(table).expect("table serializes");
            out.push('\n');
        }
    }
    out
}

pub fn parse_table_json(text: &str) -> Result<TableData, FormatError> {
    let table: TableData = serde_json::from_str(text)?;
    let is_triangle =
        table.rows.len() == table.max_n + 1 && table.rows.iter().enumerate().all(|(n, r)| r.len() == n + 1);
    if !is_triangle {
        return Err(FormatError::Shape);
    }
    Ok(table)
}

/// Terms `0..=max_n`, either as values or in prime-power form.
pub fn seq_terms(kind: SeqKind, max_n: usize, factored: bool) -> Vec<String> {
    match kind {
        SeqKind::Lambda => {
            if factored {
                (0..=max_n).map(|n| lambda_product(n).to_string()).collect()
            } else {
                let c = c_table(&d_table(&f_table(max_n)));
                (0..=max_n)
                    .map(|n| lambda_lcm_c(n, &c).expect("row in table").to_string())
                    .collect()
            }
        }
        SeqKind::Cn => (0..=max_n)
            .map(|n| {
                let value = c_first(n);
                if factored {
                    factor_over_small_primes(&value, n).to_string()
                } else {
                    value.to_string()
                }
            })
            .collect(),
    }
}

/// Factors a value whose prime divisors are all at most `bound`.
fn factor_over_small_primes(value: &Integer, bound: usize) -> PrimeFactorization {
    let pairs = primes_up_to(bound).into_iter().map(|p| {
        let e = vp_int(value, &Integer::from(p)).expect("positive value, prime p");
        (p, e as u32)
    });
    PrimeFactorization::new(pairs).expect("sieve yields increasing primes")
}

fn seq_label(kind: SeqKind) -> &'static str {
    match kind {
        SeqKind::Lambda => "lambda_n",
        SeqKind::Cn => "c_n",
    }
}

/// `None` prints one bare term per line.
pub fn render_seq(kind: SeqKind, terms: &[String], format: Option<OutputFormat>) -> String {
    let mut out = String::new();
    match format {
        None => {
            for t in terms {
                writeln!(out, "{t}").unwrap();
            }
        }
        Some(OutputFormat::Csv) => {
            writeln!(out, "n,{}", seq_label(kind)).unwrap();
            for (n, t) in terms.iter().enumerate() {
                writeln!(out, "{n},{t}").unwrap();
            }
        }
        Some(OutputFormat::Markdown) => {
            writeln!(out, "| n | {} |", seq_label(kind)).unwrap();
            writeln!(out, "|---|---|").unwrap();
            for (n, t) in terms.iter().enumerate() {
                writeln!(out, "| {n} | {t} |").unwrap();
            }
        }
        Some(OutputFormat::Json) => {
            out = serde_json::to_string(terms).expect("strings serialize");
            out.push('\n');
        }
    }
    out
}
