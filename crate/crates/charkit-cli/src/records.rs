//! Report records and their CSV/JSON renderings.

use charkit::order2::Order2Result;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

/// One verified case. Exact integers travel as decimal strings.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CaseRecord {
    pub family: String,
    pub rank: usize,
    pub lambda: String,
    pub k: usize,
    pub case: String,
    pub magnitude: String,
    pub oracle_value: String,
    pub matched: bool,
    pub oracle_sign: i8,
    pub factors: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub wall_ms: u128,
    pub seed: u64,
    pub families: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub summary: Summary,
    pub records: Vec<CaseRecord>,
}

pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        r.to_string()
    }
}

pub fn sign_of(r: &BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// `gl1:(1)x gl1:(0)` style rendering of the dimension factors.
pub fn render_factors(result: &Order2Result) -> String {
    result
        .factors
        .iter()
        .map(|f| format!("{}:({})", f.group, f.weight))
        .collect::<Vec<_>>()
        .join("x ")
}

fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

pub const TABLE_HEADER: &str = "family,rank,lambda,k,case,magnitude,oracle_value,factors";

/// RFC-4180-style row for the `table` command; lambda and factors are
/// always quoted since lambdas contain commas.
pub fn table_csv_row(r: &CaseRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.family,
        r.rank,
        csv_quote(&r.lambda),
        r.k,
        r.case,
        r.magnitude,
        r.oracle_value,
        csv_quote(&r.factors)
    )
}

pub const VERIFY_HEADER: &str =
    "family,rank,lambda,k,case,magnitude,oracle_value,matched,oracle_sign";

pub fn verify_csv_row(r: &CaseRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        r.family,
        r.rank,
        csv_quote(&r.lambda),
        r.k,
        r.case,
        r.magnitude,
        r.oracle_value,
        r.matched,
        r.oracle_sign
    )
}

/// Split one CSV line into fields, honoring the quoting used above.
pub fn split_csv_row(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted => {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    current.push('"');
                } else {
                    quoted = false;
                }
            }
            '"' => quoted = true,
            ',' if !quoted => {
                fields.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    fields.push(current);
    fields
}
