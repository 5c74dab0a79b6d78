//! Parsers for Human Mortality Database text products.
//!
//! Both supported layouts share the same frame: a free-text title line, a
//! blank line, a whitespace-separated column header, then one row per
//! (year, age). Ages run contiguously from 0 and end in a single open-ended
//! row written as `110+` (any `N+` is accepted). The missing-datum marker
//! `.` is an error in required columns and `None` in carried-but-unused
//! ones.
//!
//! Life tables (`*.lt` products, header `Year Age mx qx ax lx dx Lx Tx ex`)
//! parse into [`LifeTable`]; death rates (`Mx_1x1`, header
//! `Year Age Female Male Total`) parse into [`MortalityRateSeries`].

use std::collections::BTreeMap;
use std::fmt;

use clap::ValueEnum;
use thiserror::Error;

/// Which sex series a file or column describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sex {
    Female,
    Male,
    Total,
}

impl Sex {
    pub fn label(self) -> &'static str {
        match self {
            Sex::Female => "female",
            Sex::Male => "male",
            Sex::Total => "total",
        }
    }
}

impl fmt::Display for Sex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Parse failures, located by 1-based line number or by year group.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HmdError {
    #[error("line {line}: malformed header, expected columns \"{expected}\"")]
    MalformedHeader { line: usize, expected: &'static str },
    #[error("line {line}: malformed row: {reason}")]
    MalformedRow { line: usize, reason: String },
    #[error("line {line}: missing datum \".\" in required column {column}")]
    MissingDatum { line: usize, column: &'static str },
    #[error("year {year}: ages are not contiguous from 0 with one terminal open-ended row")]
    NonContiguousAges { year: i32 },
    #[error("year {year}: lx increases entering age {age}")]
    NonMonotoneLx { year: i32, age: u32 },
}

/// One parsed life-table row.
///
/// `mx`, `qx`, and `lx` feed the index pipeline; the remaining columns are
/// carried for completeness and may be absent (`.`) in the file.
#[derive(Debug, Clone, PartialEq)]
pub struct LifeTableRow {
    pub age_start: u32,
    pub is_open_ended: bool,
    /// Central death rate over the interval.
    pub mx: f64,
    /// Probability of dying within the interval.
    pub qx: f64,
    /// Survivors at exact age `age_start`, from the radix at age 0.
    pub lx: f64,
    /// Mean fraction of the interval lived by those dying in it.
    pub ax: Option<f64>,
    /// Deaths in the interval.
    pub dx: Option<f64>,
    /// Person-years lived in the interval.
    pub person_years: Option<f64>,
    /// Person-years remaining above the interval start.
    pub person_years_remaining: Option<f64>,
    /// Expectation of life at the interval start.
    pub life_expectancy: Option<f64>,
}

/// Period life table for one calendar year of one sex series.
#[derive(Debug, Clone, PartialEq)]
pub struct LifeTable {
    pub year: i32,
    pub sex: Sex,
    /// Rows in age order, ending with the open-ended row.
    pub rows: Vec<LifeTableRow>,
}

impl LifeTable {
    /// Radix: survivors at exact age 0.
    pub fn radix(&self) -> f64 {
        self.rows.first().map_or(0.0, |r| r.lx)
    }

    /// Start age of the open-ended row, i.e. the end of the closed domain.
    pub fn open_age(&self) -> u32 {
        self.rows.last().map_or(0, |r| r.age_start)
    }
}

/// Death rates by single age for one calendar year, all three series.
#[derive(Debug, Clone, PartialEq)]
pub struct MortalityRateSeries {
    pub year: i32,
    pub rows: Vec<MortalityRateRow>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MortalityRateRow {
    pub age_start: u32,
    pub is_open_ended: bool,
    pub female: f64,
    pub male: f64,
    pub total: f64,
}

impl MortalityRateSeries {
    /// The rate column for one sex, in age order.
    pub fn rates_for(&self, sex: Sex) -> Vec<f64> {
        self.rows
            .iter()
            .map(|row| match sex {
                Sex::Female => row.female,
                Sex::Male => row.male,
                Sex::Total => row.total,
            })
            .collect()
    }
}

const LIFE_TABLE_COLUMNS: [&str; 10] = [
    "Year", "Age", "mx", "qx", "ax", "lx", "dx", "Lx", "Tx", "ex",
];
const LIFE_TABLE_HEADER: &str = "Year Age mx qx ax lx dx Lx Tx ex";
const MX_COLUMNS: [&str; 5] = ["Year", "Age", "Female", "Male", "Total"];
const MX_HEADER: &str = "Year Age Female Male Total";

/// Sex series named in the free-text title line; HMD writes e.g.
/// "Australia, Life tables (period 1x1), Total". Defaults to Total when no
/// marker is present.
fn sex_from_title(title: &str) -> Sex {
    let lower = title.to_ascii_lowercase();
    // "female" must win over its substring "male".
    if lower.contains("female") || lower.contains("women") {
        Sex::Female
    } else if lower.contains("male") || lower.contains("men") {
        Sex::Male
    } else {
        Sex::Total
    }
}

struct Frame<'a> {
    title: &'a str,
    /// (1-based line number, raw line) for every data row.
    rows: Vec<(usize, &'a str)>,
}

/// Splits a file into title, validated header, and data rows.
fn read_frame<'a>(
    text: &'a str,
    columns: &[&str],
    expected: &'static str,
) -> Result<Frame<'a>, HmdError> {
    let mut lines = text.lines().enumerate();
    let title = match lines.next() {
        Some((_, line)) if !line.trim().is_empty() => line,
        _ => return Err(HmdError::MalformedHeader { line: 1, expected }),
    };
    let mut header_seen = false;
    let mut rows = Vec::new();
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        if !header_seen {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens != columns {
                return Err(HmdError::MalformedHeader {
                    line: idx + 1,
                    expected,
                });
            }
            header_seen = true;
        } else {
            rows.push((idx + 1, line));
        }
    }
    if !header_seen {
        return Err(HmdError::MalformedHeader {
            line: text.lines().count() + 1,
            expected,
        });
    }
    Ok(Frame { title, rows })
}

fn malformed(line: usize, reason: impl Into<String>) -> HmdError {
    HmdError::MalformedRow {
        line,
        reason: reason.into(),
    }
}

/// Age token: a nonnegative integer, with a trailing `+` for the
/// open-ended row.
fn parse_age(token: &str, line: usize) -> Result<(u32, bool), HmdError> {
    let (digits, open) = match token.strip_suffix('+') {
        Some(rest) => (rest, true),
        None => (token, false),
    };
    digits
        .parse::<u32>()
        .map(|age| (age, open))
        .map_err(|_| malformed(line, format!("unreadable age \"{token}\"")))
}

fn required_f64(token: &str, line: usize, column: &'static str) -> Result<f64, HmdError> {
    if token == "." {
        return Err(HmdError::MissingDatum { line, column });
    }
    let value: f64 = token
        .parse()
        .map_err(|_| malformed(line, format!("unreadable {column} \"{token}\"")))?;
    if !value.is_finite() {
        return Err(malformed(line, format!("non-finite {column} \"{token}\"")));
    }
    Ok(value)
}

fn optional_f64(token: &str, line: usize, column: &'static str) -> Result<Option<f64>, HmdError> {
    if token == "." {
        return Ok(None);
    }
    required_f64(token, line, column).map(Some)
}

/// Ages must run 0, 1, ..., n-1, n+ with the single open row last.
fn check_age_structure(
    year: i32,
    ages: impl ExactSizeIterator<Item = (u32, bool)>,
) -> Result<(), HmdError> {
    let total = ages.len();
    for (position, (age, open)) in ages.enumerate() {
        let last = position + 1 == total;
        if age as usize != position || open != last {
            return Err(HmdError::NonContiguousAges { year });
        }
    }
    Ok(())
}

/// Parses an HMD period life-table (1x1) file: one [`LifeTable`] per year
/// present, in year order.
pub fn parse_hmd_life_table(text: &str) -> Result<Vec<LifeTable>, HmdError> {
    let frame = read_frame(text, &LIFE_TABLE_COLUMNS, LIFE_TABLE_HEADER)?;
    let sex = sex_from_title(frame.title);

    let mut by_year: BTreeMap<i32, Vec<LifeTableRow>> = BTreeMap::new();
    for (line, raw) in frame.rows {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.len() != LIFE_TABLE_COLUMNS.len() {
            return Err(malformed(
                line,
                format!(
                    "expected {} columns, got {}",
                    LIFE_TABLE_COLUMNS.len(),
                    tokens.len()
                ),
            ));
        }
        let year: i32 = tokens[0]
            .parse()
            .map_err(|_| malformed(line, format!("unreadable year \"{}\"", tokens[0])))?;
        let (age_start, is_open_ended) = parse_age(tokens[1], line)?;
        let mx = required_f64(tokens[2], line, "mx")?;
        if mx < 0.0 {
            return Err(malformed(line, format!("negative mx {mx}")));
        }
        let qx = required_f64(tokens[3], line, "qx")?;
        if !(0.0..=1.0).contains(&qx) {
            return Err(malformed(line, format!("qx {qx} outside [0, 1]")));
        }
        let lx = required_f64(tokens[5], line, "lx")?;
        if lx < 0.0 {
            return Err(malformed(line, format!("negative lx {lx}")));
        }
        let row = LifeTableRow {
            age_start,
            is_open_ended,
            mx,
            qx,
            lx,
            ax: optional_f64(tokens[4], line, "ax")?,
            dx: optional_f64(tokens[6], line, "dx")?,
            person_years: optional_f64(tokens[7], line, "Lx")?,
            person_years_remaining: optional_f64(tokens[8], line, "Tx")?,
            life_expectancy: optional_f64(tokens[9], line, "ex")?,
        };
        by_year.entry(year).or_default().push(row);
    }

    let mut tables = Vec::with_capacity(by_year.len());
    for (year, rows) in by_year {
        check_age_structure(year, rows.iter().map(|r| (r.age_start, r.is_open_ended)))?;
        for pair in rows.windows(2) {
            if pair[1].lx > pair[0].lx {
                return Err(HmdError::NonMonotoneLx {
                    year,
                    age: pair[1].age_start,
                });
            }
        }
        tables.push(LifeTable { year, sex, rows });
    }
    Ok(tables)
}

/// Parses an HMD death-rate (Mx 1x1) file: one [`MortalityRateSeries`] per
/// year present, in year order.
pub fn parse_hmd_mx(text: &str) -> Result<Vec<MortalityRateSeries>, HmdError> {
    let frame = read_frame(text, &MX_COLUMNS, MX_HEADER)?;

    let mut by_year: BTreeMap<i32, Vec<MortalityRateRow>> = BTreeMap::new();
    for (line, raw) in frame.rows {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.len() != MX_COLUMNS.len() {
            return Err(malformed(
                line,
                format!(
                    "expected {} columns, got {}",
                    MX_COLUMNS.len(),
                    tokens.len()
                ),
            ));
        }
        let year: i32 = tokens[0]
            .parse()
            .map_err(|_| malformed(line, format!("unreadable year \"{}\"", tokens[0])))?;
        let (age_start, is_open_ended) = parse_age(tokens[1], line)?;
        let mut rates = [0.0; 3];
        for (slot, (token, column)) in rates.iter_mut().zip([
            (tokens[2], "Female"),
            (tokens[3], "Male"),
            (tokens[4], "Total"),
        ]) {
            let value = required_f64(token, line, column)?;
            if value < 0.0 {
                return Err(malformed(
                    line,
                    format!("negative rate {value} in {column}"),
                ));
            }
            *slot = value;
        }
        by_year.entry(year).or_default().push(MortalityRateRow {
            age_start,
            is_open_ended,
            female: rates[0],
            male: rates[1],
            total: rates[2],
        });
    }

    let mut series = Vec::with_capacity(by_year.len());
    for (year, rows) in by_year {
        check_age_structure(year, rows.iter().map(|r| (r.age_start, r.is_open_ended)))?;
        series.push(MortalityRateSeries { year, rows });
    }
    Ok(series)
}
