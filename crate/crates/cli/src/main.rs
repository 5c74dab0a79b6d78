//! `gti`: Gini-type ageing/rejuvenating index from life tables and
//! Weibull lifetime models.
//!
//! Exit codes: 1 for unreadable or unparseable input, 2 for bad flags,
//! 3 for domain errors (e.g. a cutoff beyond the table's last closed age).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gti_cli::hmd::{self, LifeTable, Sex};
use gti_cli::lifetable::HazardSource;
use gti_cli::report::{fmt_sig, ComputeReport, ReportRow};
use gti_core::{classify, gti_with_epsilon, weibull, Classification, CumulativeHazardCurve};

/// Shape parameters of the reference table (the 1/3 row is often printed
/// as "0.3" but only 1/3 pairs with the shape-3 row under the
/// C(b) = -C(1/b) antisymmetry).
const DEFAULT_SHAPES: [f64; 9] = [5.0, 4.0, 3.0, 2.0, 1.0, 0.5, 1.0 / 3.0, 0.25, 0.2];
const DEFAULT_CUTOFFS: [f64; 3] = [25.0, 65.0, 105.0];

#[derive(Parser)]
#[command(
    name = "gti",
    version,
    about = "Gini-type ageing/rejuvenating index from mortality data",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form index table for Weibull shape parameters
    Weibull(WeibullArgs),
    /// Index report for one life-table year (JSON or CSV)
    Compute(ComputeArgs),
    /// Side-by-side index comparison of two life-table years
    Compare(CompareArgs),
    /// Plot-ready CSV data (chord geometry or mortality-rate curves)
    Plot(PlotArgs),
}

#[derive(Args)]
struct WeibullArgs {
    /// Weibull shape parameter (repeatable); default is the reference set
    #[arg(long = "beta", value_name = "SHAPE", allow_negative_numbers = true)]
    betas: Vec<f64>,
    /// Half-width of the "non-ageing" band around zero
    #[arg(long, allow_negative_numbers = true, default_value_t = gti_core::DEFAULT_CLASSIFICATION_EPSILON)]
    epsilon: f64,
}

#[derive(Args)]
struct ComputeArgs {
    /// HMD period life-table (1x1) file
    #[arg(long)]
    file: PathBuf,
    /// Calendar year to analyze
    #[arg(long)]
    year: i32,
    /// Expected sex series; verified against the file's title line
    #[arg(long, value_enum)]
    sex: Option<Sex>,
    /// Cut-off age in years (repeatable); default 25, 65, 105
    #[arg(long = "cutoff", value_name = "YEARS", allow_negative_numbers = true)]
    cutoffs: Vec<f64>,
    /// Rate source: mx column or -ln(1 - qx)
    #[arg(long, value_enum, default_value_t)]
    hazard_source: HazardSource,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// Half-width of the "non-ageing" band around zero
    #[arg(long, allow_negative_numbers = true, default_value_t = gti_core::DEFAULT_CLASSIFICATION_EPSILON)]
    epsilon: f64,
}

#[derive(Args)]
struct CompareArgs {
    /// Life-table file for side a
    #[arg(long)]
    file_a: PathBuf,
    /// Year for side a
    #[arg(long)]
    year_a: i32,
    /// Life-table file for side b
    #[arg(long)]
    file_b: PathBuf,
    /// Year for side b
    #[arg(long)]
    year_b: i32,
    #[arg(long, value_enum)]
    sex: Option<Sex>,
    #[arg(long = "cutoff", value_name = "YEARS", allow_negative_numbers = true)]
    cutoffs: Vec<f64>,
    #[arg(long, value_enum, default_value_t)]
    hazard_source: HazardSource,
    #[arg(long, allow_negative_numbers = true, default_value_t = gti_core::DEFAULT_CLASSIFICATION_EPSILON)]
    epsilon: f64,
}

#[derive(Args)]
struct PlotArgs {
    /// What to emit: chord geometry for one cutoff, or rate curves by age
    #[arg(value_enum)]
    kind: PlotKind,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
    /// Input file: life table for `chord`, Mx death rates for `rates`
    #[arg(long)]
    file: Option<PathBuf>,
    /// Year (repeatable for `rates`)
    #[arg(long = "year")]
    years: Vec<i32>,
    /// Sex column for `rates`; verified against the title for `chord`
    #[arg(long, value_enum)]
    sex: Option<Sex>,
    /// Cut-off age for `chord`
    #[arg(long, value_name = "YEARS", allow_negative_numbers = true)]
    cutoff: Option<f64>,
    /// Weibull shape: plot the chord of a parametric model instead of a file
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Weibull scale for --beta
    #[arg(long, default_value_t = 1.0)]
    eta: f64,
    /// Discretization steps for --beta
    #[arg(long, default_value_t = 10_000)]
    steps: usize,
    #[arg(long, value_enum, default_value_t)]
    hazard_source: HazardSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotKind {
    Chord,
    Rates,
}

/// Failures mapped to the exit-code taxonomy.
enum CliError {
    /// Exit 1: unreadable file, unparseable content, missing year.
    Input(String),
    /// Exit 2: flag values that make no sense.
    Usage(String),
    /// Exit 3: valid request outside the data's domain.
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Weibull(args) => cmd_weibull(&args),
        Command::Compute(args) => cmd_compute(&args),
        Command::Compare(args) => cmd_compare(&args),
        Command::Plot(args) => cmd_plot(&args),
    };
    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("gti: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn check_epsilon(epsilon: f64) -> Result<(), CliError> {
    if !epsilon.is_finite() || epsilon < 0.0 {
        return Err(CliError::Usage(format!(
            "--epsilon must be >= 0, got {epsilon}"
        )));
    }
    Ok(())
}

fn checked_cutoffs(cutoffs: &[f64]) -> Result<Vec<f64>, CliError> {
    let mut out = if cutoffs.is_empty() {
        DEFAULT_CUTOFFS.to_vec()
    } else {
        cutoffs.to_vec()
    };
    for &c in &out {
        if !c.is_finite() || c <= 0.0 {
            return Err(CliError::Usage(format!("--cutoff must be > 0, got {c}")));
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite cutoffs"));
    Ok(out)
}

/// The distribution label used by the Weibull table; the boundary case is
/// named rather than classified.
fn distribution_label(class: Classification) -> &'static str {
    match class {
        Classification::Ageing => "Ageing",
        Classification::Rejuvenating => "Rejuvenating",
        Classification::NonAgeing => "Constant mortality rate",
    }
}

fn cmd_weibull(args: &WeibullArgs) -> Result<String, CliError> {
    check_epsilon(args.epsilon)?;
    let shapes: Vec<f64> = if args.betas.is_empty() {
        DEFAULT_SHAPES.to_vec()
    } else {
        args.betas.clone()
    };
    let mut out = String::from("shape       gti         distribution\n");
    for &shape in &shapes {
        let value =
            weibull::closed_form_gti(shape).map_err(|e| CliError::Usage(format!("--beta: {e}")))?;
        let label = distribution_label(classify(value, args.epsilon));
        let _ = writeln!(
            out,
            "{:<12}{:<12}{}",
            fmt_sig(shape, 6),
            fmt_sig(value, 6),
            label
        );
    }
    Ok(out)
}

fn read_table(path: &Path, year: i32, sex: Option<Sex>) -> Result<LifeTable, CliError> {
    let shown = path.display();
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
    let tables =
        hmd::parse_hmd_life_table(&text).map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
    let file_sex = tables.first().map(|t| t.sex);
    let table = tables
        .into_iter()
        .find(|t| t.year == year)
        .ok_or_else(|| CliError::Input(format!("{shown}: no data for year {year}")))?;
    if let (Some(requested), Some(found)) = (sex, file_sex) {
        if requested != found {
            return Err(CliError::Usage(format!(
                "{shown} holds the \"{found}\" series, not \"{requested}\""
            )));
        }
    }
    Ok(table)
}

fn table_error(err: gti_cli::lifetable::TableError) -> CliError {
    CliError::Domain(err.to_string())
}

fn build_report(
    path: &Path,
    year: i32,
    sex: Option<Sex>,
    cutoffs: &[f64],
    source: HazardSource,
    epsilon: f64,
) -> Result<ComputeReport, CliError> {
    let table = read_table(path, year, sex)?;
    let results = table
        .gti_at(cutoffs, source, epsilon)
        .map_err(table_error)?;
    let median = table.median_age_at_death().map_err(table_error)?;
    Ok(ComputeReport {
        file: path.display().to_string(),
        year,
        sex: table.sex.label().to_string(),
        hazard_source: source.label().to_string(),
        rows: results.iter().map(ReportRow::from).collect(),
        median_age_at_death: median,
    })
}

fn cmd_compute(args: &ComputeArgs) -> Result<String, CliError> {
    check_epsilon(args.epsilon)?;
    let cutoffs = checked_cutoffs(&args.cutoffs)?;
    let report = build_report(
        &args.file,
        args.year,
        args.sex,
        &cutoffs,
        args.hazard_source,
        args.epsilon,
    )?;
    Ok(match args.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    })
}

fn cmd_compare(args: &CompareArgs) -> Result<String, CliError> {
    check_epsilon(args.epsilon)?;
    let cutoffs = checked_cutoffs(&args.cutoffs)?;
    fn tag(side: &str, e: CliError) -> CliError {
        let tagged = format!("input {side}: {}", e.message());
        match e {
            CliError::Input(_) => CliError::Input(tagged),
            CliError::Usage(_) => CliError::Usage(tagged),
            CliError::Domain(_) => CliError::Domain(tagged),
        }
    }
    let a = build_report(
        &args.file_a,
        args.year_a,
        args.sex,
        &cutoffs,
        args.hazard_source,
        args.epsilon,
    )
    .map_err(|e| tag("a", e))?;
    let b = build_report(
        &args.file_b,
        args.year_b,
        args.sex,
        &cutoffs,
        args.hazard_source,
        args.epsilon,
    )
    .map_err(|e| tag("b", e))?;

    let mut out = String::new();
    let _ = writeln!(out, "a: {} year {}", a.file, a.year);
    let _ = writeln!(out, "b: {} year {}", b.file, b.year);
    out.push_str("cutoff    gti_a         survival_a    gti_b         survival_b    delta_gti\n");
    for (ra, rb) in a.rows.iter().zip(&b.rows) {
        let _ = writeln!(
            out,
            "{:<10}{:<14}{:<14}{:<14}{:<14}{}",
            fmt_sig(ra.cutoff, 6),
            fmt_sig(ra.gti, 6),
            fmt_sig(ra.survival, 6),
            fmt_sig(rb.gti, 6),
            fmt_sig(rb.survival, 6),
            fmt_sig(rb.gti - ra.gti, 6)
        );
    }
    let _ = writeln!(
        out,
        "median_age_at_death: a = {}, b = {}, delta = {}",
        fmt_sig(a.median_age_at_death, 6),
        fmt_sig(b.median_age_at_death, 6),
        fmt_sig(b.median_age_at_death - a.median_age_at_death, 6)
    );
    Ok(out)
}

/// Chord CSV rows: every curve knot up to the cutoff, then the cutoff
/// itself, each with H(t) and the chord height h_eff * t.
fn chord_csv(curve: &CumulativeHazardCurve, cutoff: f64) -> Result<String, CliError> {
    let domain_err = |e: gti_core::GtiError| CliError::Domain(e.to_string());
    let h_at_cutoff = curve.value_at(cutoff).map_err(domain_err)?;
    let slope = h_at_cutoff / cutoff;
    let mut out = String::from("t,H,chord\n");
    for (&t, &h) in curve.knots().iter().zip(curve.values()) {
        if t < cutoff {
            let _ = writeln!(out, "{},{},{}", t, h, slope * t);
        }
    }
    let _ = writeln!(out, "{},{},{}", cutoff, h_at_cutoff, h_at_cutoff);
    Ok(out)
}

fn cmd_plot(args: &PlotArgs) -> Result<String, CliError> {
    match args.kind {
        PlotKind::Chord => plot_chord(args),
        PlotKind::Rates => plot_rates(args),
    }
}

fn plot_chord(args: &PlotArgs) -> Result<String, CliError> {
    let cutoff = args
        .cutoff
        .ok_or_else(|| CliError::Usage("plot chord needs --cutoff".to_string()))?;
    if !cutoff.is_finite() || cutoff <= 0.0 {
        return Err(CliError::Usage(format!(
            "--cutoff must be > 0, got {cutoff}"
        )));
    }

    let curve = match (&args.file, args.beta) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "plot chord takes either --file or --beta, not both".to_string(),
            ))
        }
        (None, None) => {
            return Err(CliError::Usage(
                "plot chord needs a source: --file with --year, or --beta".to_string(),
            ))
        }
        (Some(path), None) => {
            let year = match args.years.as_slice() {
                [year] => *year,
                _ => {
                    return Err(CliError::Usage(
                        "plot chord needs exactly one --year with --file".to_string(),
                    ))
                }
            };
            let table = read_table(path, year, args.sex)?;
            table
                .hazard_curve(args.hazard_source)
                .map_err(table_error)?
                .cumulative()
        }
        (None, Some(shape)) => {
            if args.steps == 0 {
                return Err(CliError::Usage("--steps must be >= 1".to_string()));
            }
            let usage = |e: gti_core::GtiError| CliError::Usage(e.to_string());
            let params = weibull::WeibullParams::new(shape, args.eta).map_err(usage)?;
            params
                .discretize(cutoff, args.steps)
                .map_err(usage)?
                .cumulative()
        }
    };

    let domain_err = |e: gti_core::GtiError| CliError::Domain(e.to_string());
    let result = gti_with_epsilon(&curve, cutoff, gti_core::DEFAULT_CLASSIFICATION_EPSILON)
        .map_err(domain_err)?;
    let area_under_h = curve.integral_to(cutoff).map_err(domain_err)?;
    let h_at_cutoff = curve.value_at(cutoff).map_err(domain_err)?;
    let area_under_chord = 0.5 * cutoff * h_at_cutoff;
    let implied = 1.0 - area_under_h / area_under_chord;

    let csv = chord_csv(&curve, cutoff)?;
    write_output(&args.out, &csv)?;

    let mut out = String::new();
    let _ = writeln!(out, "area_under_H = {area_under_h}");
    let _ = writeln!(out, "area_under_chord = {area_under_chord}");
    let _ = writeln!(out, "implied_gti = {implied}");
    let _ = writeln!(out, "gti = {}", result.value);
    let _ = writeln!(out, "classification = {}", result.classification);
    Ok(out)
}

fn plot_rates(args: &PlotArgs) -> Result<String, CliError> {
    let path = args.file.as_ref().ok_or_else(|| {
        CliError::Usage("plot rates needs --file with an Mx 1x1 product".to_string())
    })?;
    if args.years.is_empty() {
        return Err(CliError::Usage(
            "plot rates needs at least one --year".to_string(),
        ));
    }
    let sex = args.sex.unwrap_or(Sex::Total);
    let shown = path.display();
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
    let series = hmd::parse_hmd_mx(&text).map_err(|e| CliError::Input(format!("{shown}: {e}")))?;

    let mut picked = Vec::with_capacity(args.years.len());
    for &year in &args.years {
        let found = series
            .iter()
            .find(|s| s.year == year)
            .ok_or_else(|| CliError::Input(format!("{shown}: no data for year {year}")))?;
        picked.push(found);
    }
    let ages: Vec<u32> = picked[0].rows.iter().map(|r| r.age_start).collect();
    for s in &picked {
        let theirs: Vec<u32> = s.rows.iter().map(|r| r.age_start).collect();
        if theirs != ages {
            return Err(CliError::Input(format!(
                "{shown}: year {} has a different age grid",
                s.year
            )));
        }
    }

    let mut csv = String::from("age");
    for s in &picked {
        let _ = write!(csv, ",mx_{}", s.year);
    }
    csv.push('\n');
    let columns: Vec<Vec<f64>> = picked.iter().map(|s| s.rates_for(sex)).collect();
    for (i, age) in ages.iter().enumerate() {
        let _ = write!(csv, "{age}");
        for column in &columns {
            let _ = write!(csv, ",{}", column[i]);
        }
        csv.push('\n');
    }
    write_output(&args.out, &csv)?;
    Ok(String::new())
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
