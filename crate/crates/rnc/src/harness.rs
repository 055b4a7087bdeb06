use crate::constructions::{
    aux_ideal_j, hankel_ideal, rnc_points_ideal, stated_syzygy_complex, witness_poly,
    witness_poly_f0_variant, PointFamilyParams,
};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, regularity, scheme_degree, verify_complex};
use crate::ideal::Ideal;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Conic,
    Tcc,
    Resolutions,
    Sdefect,
    Conjecture,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conic" => Ok(Suite::Conic),
            "tcc" => Ok(Suite::Tcc),
            "resolutions" => Ok(Suite::Resolutions),
            "sdefect" => Ok(Suite::Sdefect),
            "conjecture" => Ok(Suite::Conjecture),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidParameter(format!(
                "unknown suite '{other}' (expected conic, tcc, resolutions, sdefect, conjecture, all)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Conic => "conic",
            Suite::Tcc => "tcc",
            Suite::Resolutions => "resolutions",
            Suite::Sdefect => "sdefect",
            Suite::Conjecture => "conjecture",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

/// Parameter ranges for a suite run. Defaults match the documented
/// feasibility caps; larger grids need `allow_large`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub d_max: u32,
    pub r_max: u32,
    pub m_max: u32,
    pub allow_large: bool,
}

pub const DEFAULT_D_MAX: u32 = 4;
pub const DEFAULT_R_MAX: u32 = 3;
pub const DEFAULT_M_MAX: u32 = 4;

impl Default for Grid {
    fn default() -> Self {
        Grid {
            d_max: DEFAULT_D_MAX,
            r_max: DEFAULT_R_MAX,
            m_max: DEFAULT_M_MAX,
            allow_large: false,
        }
    }
}

impl Grid {
    fn check_feasible(&self) -> Result<()> {
        if self.d_max < 2 || self.r_max < 1 || self.m_max < 1 {
            return Err(Error::InvalidParameter(
                "grid needs d_max >= 2, r_max >= 1, m_max >= 1".into(),
            ));
        }
        if self.allow_large {
            return Ok(());
        }
        if self.d_max > DEFAULT_D_MAX || self.r_max > DEFAULT_R_MAX || self.m_max > DEFAULT_M_MAX {
            let estimate = (self.d_max as u64 - 1) * 3 * self.r_max as u64 * 5
                + 3 * self.m_max as u64 * self.m_max as u64;
            return Err(Error::InvalidParameter(format!(
                "grid exceeds the default caps (d <= {DEFAULT_D_MAX}, r <= {DEFAULT_R_MAX}, m <= {DEFAULT_M_MAX}); \
                 roughly {estimate} cases would run, pass allow_large to proceed"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    Pass,
    Fail,
    ReportOnly,
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::ReportOnly => "report-only",
        };
        f.write_str(s)
    }
}

impl FromStr for CaseStatus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pass" => Ok(CaseStatus::Pass),
            "fail" => Ok(CaseStatus::Fail),
            "report-only" => Ok(CaseStatus::ReportOnly),
            other => Err(Error::InvalidParameter(format!("unknown status '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub case_id: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<PointFamilyParams>,
    pub quantity: String,
    pub expected: Value,
    pub actual: Value,
    pub status: CaseStatus,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub seed: u64,
    pub cases: Vec<CaseRecord>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.status == CaseStatus::Fail)
            .count()
    }

    /// Copy with elapsed times zeroed, for byte-identity comparisons.
    pub fn normalized(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.cases {
            c.elapsed_ms = 0;
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(Error::InvalidParameter(format!(
                "unknown format '{other}' (expected json, csv, md)"
            ))),
        }
    }
}

struct Collector {
    cases: Vec<CaseRecord>,
}

impl Collector {
    fn new() -> Self {
        Collector { cases: Vec::new() }
    }

    fn check(
        &mut self,
        case_id: impl Into<String>,
        params: Option<PointFamilyParams>,
        quantity: impl Into<String>,
        expected: Value,
        actual: Value,
        elapsed_ms: u64,
    ) {
        let status = if expected == actual {
            CaseStatus::Pass
        } else {
            CaseStatus::Fail
        };
        self.cases.push(CaseRecord {
            case_id: case_id.into(),
            params,
            quantity: quantity.into(),
            expected,
            actual,
            status,
            elapsed_ms,
        });
    }

    #[allow(clippy::too_many_arguments)]
    fn judged(
        &mut self,
        case_id: impl Into<String>,
        params: Option<PointFamilyParams>,
        quantity: impl Into<String>,
        expected: Value,
        actual: Value,
        ok: bool,
        elapsed_ms: u64,
    ) {
        self.cases.push(CaseRecord {
            case_id: case_id.into(),
            params,
            quantity: quantity.into(),
            expected,
            actual,
            status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            elapsed_ms,
        });
    }

    fn report_only(
        &mut self,
        case_id: impl Into<String>,
        params: Option<PointFamilyParams>,
        quantity: impl Into<String>,
        actual: Value,
        elapsed_ms: u64,
    ) {
        self.cases.push(CaseRecord {
            case_id: case_id.into(),
            params,
            quantity: quantity.into(),
            expected: Value::String("exploratory".into()),
            actual,
            status: CaseStatus::ReportOnly,
            elapsed_ms,
        });
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u64)> {
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed().as_millis() as u64))
}

fn hf_string(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn ratio_string(num: u32, den: u32) -> String {
    BigRational::new(BigInt::from(num), BigInt::from(den)).to_string()
}

/// Run one of the named verification suites over the grid. The report
/// is deterministic for a fixed seed and sorted by case id.
pub fn run_suite(suite: Suite, grid: &Grid, seed: u64) -> Result<VerificationReport> {
    grid.check_feasible()?;
    let mut col = Collector::new();
    match suite {
        Suite::Conic => conic_suite(grid, seed, &mut col)?,
        Suite::Tcc => tcc_suite(grid, seed, &mut col)?,
        Suite::Resolutions => resolutions_suite(grid, &mut col)?,
        Suite::Sdefect => sdefect_suite(grid, &mut col)?,
        Suite::Conjecture => conjecture_suite(grid, &mut col)?,
        Suite::All => {
            conic_suite(grid, seed, &mut col)?;
            tcc_suite(grid, seed, &mut col)?;
            resolutions_suite(grid, &mut col)?;
            sdefect_suite(grid, &mut col)?;
            conjecture_suite(grid, &mut col)?;
        }
    }
    let mut cases = col.cases;
    cases.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        seed,
        cases,
    })
}

fn point_cases(
    col: &mut Collector,
    prefix: &str,
    params: PointFamilyParams,
    ideal: &Ideal,
) -> Result<()> {
    let (n, d, j) = (params.n, params.d, params.j);
    let tag = format!("n{n}-d{d}-j{j}");
    let (deg, el) = timed(|| scheme_degree(ideal))?;
    col.check(
        format!("{prefix}/degree/{tag}"),
        Some(params),
        "scheme degree",
        Value::from(params.num_points() as u64),
        Value::from(deg),
        el,
    );
    let (fixpoint, el) = timed(|| {
        let sat = ideal.saturation(&Ideal::irrelevant(ideal.signature()))?;
        sat.ideal_eq(ideal)
    })?;
    col.check(
        format!("{prefix}/saturated/{tag}"),
        Some(params),
        "saturation fixpoint",
        Value::Bool(true),
        Value::Bool(fixpoint),
        el,
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn power_cases(
    col: &mut Collector,
    prefix: &str,
    params: PointFamilyParams,
    ideal: &Ideal,
    reg_base: u32,
    r: u32,
    expected_reg: u32,
    seed: u64,
    areg_trend: bool,
) -> Result<()> {
    let (n, d, j) = (params.n, params.d, params.j);
    let tag = format!("n{n}-d{d}-j{j}-r{r}");
    let mut p = params;
    p.r = Some(r);
    let power = ideal.power(r)?;
    let (reg, el) = timed(|| regularity(&power, seed))?;
    col.check(
        format!("{prefix}/reg/{tag}"),
        Some(p),
        "reg of the r-th power",
        Value::from(expected_reg as u64),
        Value::from(reg as u64),
        el,
    );
    let (beta, el) = timed(|| Ok(power.minimal_generators()?.beta))?;
    col.check(
        format!("{prefix}/beta/{tag}"),
        Some(p),
        "max generator degree of the r-th power",
        Value::from((r * d) as u64),
        Value::from(beta as u64),
        el,
    );
    let lower = r * d;
    let upper = reg_base + (r - 1) * d;
    col.check(
        format!("{prefix}/reg-bounds/{tag}"),
        Some(p),
        "rd <= reg <= reg(I) + (r-1)d",
        Value::Bool(true),
        Value::Bool(lower <= reg && reg <= upper),
        0,
    );
    if areg_trend {
        let diff_ok = reg == r * d || reg == r * d + 1;
        let actual = if reg >= r * d {
            ratio_string(reg - r * d, r)
        } else {
            "-".to_string() + &ratio_string(r * d - reg, r)
        };
        col.judged(
            format!("{prefix}/areg-trend/{tag}"),
            Some(p),
            "reg/r - d in {0, 1/r}",
            Value::String("0 or ".to_string() + &ratio_string(1, r)),
            Value::String(actual),
            diff_ok,
            0,
        );
    }
    Ok(())
}

fn rnc_hf_case(col: &mut Collector, prefix: &str, n: usize) -> Result<()> {
    let curve = hankel_ideal(n)?;
    let (hf, el) = timed(|| hilbert_function(&curve, 8))?;
    let expected: Vec<u64> = (0..=8u64).map(|t| n as u64 * (t + 1) - (n as u64 - 1)).collect();
    col.check(
        format!("{prefix}/hf-rnc/n{n}"),
        None,
        "HF of the coordinate ring of the curve, t <= 8",
        Value::String(hf_string(&expected)),
        Value::String(hf_string(&hf.values)),
        el,
    );
    Ok(())
}

fn conic_suite(grid: &Grid, seed: u64, col: &mut Collector) -> Result<()> {
    rnc_hf_case(col, "conic", 2)?;
    for d in 2..=grid.d_max {
        for j in 0..=1usize {
            let params = PointFamilyParams::new(2, d, j)?;
            let ideal = rnc_points_ideal(&params)?;
            point_cases(col, "conic", params, &ideal)?;
            let reg_base = regularity(&ideal, seed)?;
            for r in 1..=grid.r_max {
                let expected = if j == 0 { r * d + 1 } else { r * d };
                power_cases(col, "conic", params, &ideal, reg_base, r, expected, seed, false)?;
            }
        }
    }
    Ok(())
}

fn tcc_suite(grid: &Grid, seed: u64, col: &mut Collector) -> Result<()> {
    for n in 3..=5usize {
        rnc_hf_case(col, "tcc", n)?;
    }
    for d in 2..=grid.d_max.min(3) {
        for j in 0..=2usize {
            let params = PointFamilyParams::new(3, d, j)?;
            let ideal = rnc_points_ideal(&params)?;
            point_cases(col, "tcc", params, &ideal)?;
            let reg_base = regularity(&ideal, seed)?;
            let r_top = if d == 2 { grid.r_max } else { grid.r_max.min(2) };
            for r in 1..=r_top {
                let expected = match (j, r) {
                    (0, _) => r * d + 1,
                    (1, 1) => d + 1,
                    _ => r * d,
                };
                power_cases(col, "tcc", params, &ideal, reg_base, r, expected, seed, true)?;
            }
        }
    }
    if grid.d_max >= 2 {
        for j in 0..=3usize {
            let params = PointFamilyParams::new(4, 2, j)?;
            let ideal = rnc_points_ideal(&params)?;
            point_cases(col, "tcc", params, &ideal)?;
        }
        // the auxiliary ideal (Q1, Q2, Q3, G^2) at d = 2
        let aux = aux_ideal_j(2, 2)?;
        let (hf, el) = timed(|| hilbert_function(&aux, 5))?;
        col.check(
            "tcc/hf-aux/d2-r2",
            None,
            "HF of the auxiliary ideal, t <= 5",
            Value::String("1 4 7 10 12 12".into()),
            Value::String(hf_string(&hf.values)),
            el,
        );
        let (reg, el) = timed(|| regularity(&aux, seed))?;
        col.check(
            "tcc/reg-aux/d2-r2",
            None,
            "reg of the auxiliary ideal (rd + 1)",
            Value::from(5u64),
            Value::from(reg as u64),
            el,
        );
    }
    Ok(())
}

fn resolutions_suite(grid: &Grid, col: &mut Collector) -> Result<()> {
    for (n, j) in [(2usize, 0usize), (2, 1), (3, 0), (3, 1), (3, 2)] {
        for d in 2..=grid.d_max {
            let params = PointFamilyParams::new(n, d, j)?;
            let ideal = rnc_points_ideal(&params)?;
            let complex = stated_syzygy_complex(n, d, j)?;
            let (ok, el) = timed(|| verify_complex(&complex, &ideal, 2 * d + 6))?;
            col.check(
                format!("resolutions/complex/n{n}-d{d}-j{j}"),
                Some(params),
                "stated resolution verifies as a complex",
                Value::Bool(true),
                Value::Bool(ok),
                el,
            );
        }
    }
    Ok(())
}

fn sdefect_suite(grid: &Grid, col: &mut Collector) -> Result<()> {
    for d in 2..=grid.d_max.min(3) {
        let p0 = PointFamilyParams::new(3, d, 0)?;
        let p1 = PointFamilyParams::new(3, d, 1)?;
        let p2 = PointFamilyParams::new(3, d, 2)?;
        let i0 = rnc_points_ideal(&p0)?;
        let i1 = rnc_points_ideal(&p1)?;
        let i2 = rnc_points_ideal(&p2)?;
        let f0 = witness_poly(0, d)?;
        let f0v = witness_poly_f0_variant(d)?;
        let f1 = witness_poly(1, d)?;
        let f2 = witness_poly(2, d)?;

        let (in_sym, el) = timed(|| i1.symbolic_power(3)?.member(&f1))?;
        col.check(
            format!("sdefect/f1-in-symbolic3/d{d}"),
            Some(p1),
            "f1 lies in the 3rd symbolic power",
            Value::Bool(true),
            Value::Bool(in_sym),
            el,
        );
        let (in_pow, el) = timed(|| i1.power(3)?.member(&f1))?;
        col.check(
            format!("sdefect/f1-in-power3/d{d}"),
            Some(p1),
            "f1 lies in the 3rd ordinary power",
            Value::Bool(false),
            Value::Bool(in_pow),
            el,
        );
        let (in_sym, el) = timed(|| i2.symbolic_power(2)?.member(&f2))?;
        col.check(
            format!("sdefect/f2-in-symbolic2/d{d}"),
            Some(p2),
            "f2 lies in the 2nd symbolic power",
            Value::Bool(true),
            Value::Bool(in_sym),
            el,
        );
        let (in_pow, el) = timed(|| i2.power(2)?.member(&f2))?;
        col.check(
            format!("sdefect/f2-in-power2/d{d}"),
            Some(p2),
            "f2 lies in the 2nd ordinary power",
            Value::Bool(false),
            Value::Bool(in_pow),
            el,
        );
        for (label, f) in [("verbatim", &f0), ("variant", &f0v)] {
            let (witnesses, el) = timed(|| {
                Ok(i0.symbolic_power(2)?.member(f)? && !i0.power(2)?.member(f)?)
            })?;
            col.report_only(
                format!("sdefect/f0-{label}-witnesses/d{d}"),
                Some(p0),
                format!("f0 ({label} factor) lies in the 2nd symbolic power but not the 2nd ordinary power"),
                Value::Bool(witnesses),
                el,
            );
        }
        let (s13, el) = timed(|| i1.sdefect(3))?;
        col.check(
            format!("sdefect/positive-j1-m3/d{d}"),
            Some(p1),
            "sdefect(I, 3) > 0",
            Value::Bool(true),
            Value::Bool(s13 > 0),
            el,
        );
        let (s22, el) = timed(|| i2.sdefect(2))?;
        col.check(
            format!("sdefect/positive-j2-m2/d{d}"),
            Some(p2),
            "sdefect(I, 2) > 0",
            Value::Bool(true),
            Value::Bool(s22 > 0),
            el,
        );
        let (s12, el) = timed(|| i1.sdefect(2))?;
        col.report_only(
            format!("sdefect/open-j1-m2/d{d}"),
            Some(p1),
            "sdefect(I, 2), expected 0 but open",
            Value::from(s12 as u64),
            el,
        );
    }
    Ok(())
}

fn conjecture_suite(grid: &Grid, col: &mut Collector) -> Result<()> {
    let top = grid.m_max;
    for j in 0..=2usize {
        let params = PointFamilyParams::new(3, 2, j)?;
        let ideal = rnc_points_ideal(&params)?;
        let symbolic: Vec<Ideal> = (1..=top)
            .map(|m| ideal.symbolic_power(m))
            .collect::<Result<_>>()?;
        let powers: Vec<Ideal> = (1..=top)
            .map(|r| ideal.power(r))
            .collect::<Result<_>>()?;
        for m in 1..=top {
            for r in 1..=top {
                let mut p = params;
                p.m = Some(m);
                p.r = Some(r);
                let (contained, el) = timed(|| {
                    powers[r as usize - 1].contains(&symbolic[m as usize - 1])
                })?;
                col.report_only(
                    format!("conjecture/containment/j{j}-m{m}-r{r}"),
                    Some(p),
                    format!(
                        "symbolic power in ordinary power; conjectured {}",
                        m >= r + 1
                    ),
                    Value::Bool(contained),
                    el,
                );
            }
        }
    }
    Ok(())
}

fn value_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Serialize a report. JSON is the schema of record; CSV carries the
/// same fields with the documented column order; markdown is a table
/// for human diffing (Hilbert-function rows read like "1 4 7 10 12 12").
pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_string_pretty(report)
                .map_err(|e| Error::Internal(format!("json serialization: {e}")))?;
            out.push('\n');
            Ok(out)
        }
        ReportFormat::Csv => emit_csv(report),
        ReportFormat::Markdown => Ok(emit_markdown(report)),
    }
}

pub const CSV_COLUMNS: [&str; 13] = [
    "schema_version",
    "seed",
    "case_id",
    "n",
    "d",
    "j",
    "r",
    "m",
    "quantity",
    "expected",
    "actual",
    "status",
    "elapsed_ms",
];

fn emit_csv(report: &VerificationReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Error::Internal(format!("csv serialization: {e}"));
    w.write_record(CSV_COLUMNS).map_err(io_err)?;
    for c in &report.cases {
        let opt = |v: Option<String>| v.unwrap_or_default();
        let record = [
            report.schema_version.to_string(),
            report.seed.to_string(),
            c.case_id.clone(),
            opt(c.params.map(|p| p.n.to_string())),
            opt(c.params.map(|p| p.d.to_string())),
            opt(c.params.map(|p| p.j.to_string())),
            opt(c.params.and_then(|p| p.r).map(|r| r.to_string())),
            opt(c.params.and_then(|p| p.m).map(|m| m.to_string())),
            c.quantity.clone(),
            c.expected.to_string(),
            c.actual.to_string(),
            c.status.to_string(),
            c.elapsed_ms.to_string(),
        ];
        w.write_record(&record).map_err(io_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Internal(format!("csv flush: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(format!("csv utf8: {e}")))
}

/// Parse a report back from the CSV emitted by `emit_report`.
pub fn report_from_csv(text: &str) -> Result<VerificationReport> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let parse_err = |msg: String| Error::InvalidParameter(format!("csv report: {msg}"));
    let mut report = VerificationReport {
        schema_version: SCHEMA_VERSION,
        seed: 0,
        cases: Vec::new(),
    };
    for (idx, row) in rdr.records().enumerate() {
        let row = row.map_err(|e| parse_err(e.to_string()))?;
        if row.len() != CSV_COLUMNS.len() {
            return Err(parse_err(format!(
                "row {idx} has {} fields, expected {}",
                row.len(),
                CSV_COLUMNS.len()
            )));
        }
        let field = |i: usize| row.get(i).unwrap();
        report.schema_version = field(0)
            .parse()
            .map_err(|_| parse_err("bad schema_version".into()))?;
        report.seed = field(1).parse().map_err(|_| parse_err("bad seed".into()))?;
        let params = if field(3).is_empty() {
            None
        } else {
            Some(PointFamilyParams {
                n: field(3).parse().map_err(|_| parse_err("bad n".into()))?,
                d: field(4).parse().map_err(|_| parse_err("bad d".into()))?,
                j: field(5).parse().map_err(|_| parse_err("bad j".into()))?,
                r: if field(6).is_empty() {
                    None
                } else {
                    Some(field(6).parse().map_err(|_| parse_err("bad r".into()))?)
                },
                m: if field(7).is_empty() {
                    None
                } else {
                    Some(field(7).parse().map_err(|_| parse_err("bad m".into()))?)
                },
            })
        };
        report.cases.push(CaseRecord {
            case_id: field(2).to_string(),
            params,
            quantity: field(8).to_string(),
            expected: serde_json::from_str(field(9))
                .map_err(|_| parse_err("bad expected value".into()))?,
            actual: serde_json::from_str(field(10))
                .map_err(|_| parse_err("bad actual value".into()))?,
            status: field(11).parse()?,
            elapsed_ms: field(12)
                .parse()
                .map_err(|_| parse_err("bad elapsed_ms".into()))?,
        });
    }
    Ok(report)
}

fn emit_markdown(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str("# Verification report\n\n");
    out.push_str(&format!(
        "schema_version: {}, seed: {}, cases: {}, failures: {}\n\n",
        report.schema_version,
        report.seed,
        report.cases.len(),
        report.failures()
    ));
    out.push_str("| case | quantity | expected | actual | status |\n");
    out.push_str("|---|---|---|---|---|\n");
    for c in &report.cases {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            c.case_id,
            c.quantity,
            value_cell(&c.expected),
            value_cell(&c.actual),
            c.status
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> VerificationReport {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            seed: 7,
            cases: vec![
                CaseRecord {
                    case_id: "x/first".into(),
                    params: Some(PointFamilyParams {
                        n: 3,
                        d: 2,
                        j: 1,
                        r: Some(2),
                        m: None,
                    }),
                    quantity: "reg".into(),
                    expected: Value::from(4u64),
                    actual: Value::from(4u64),
                    status: CaseStatus::Pass,
                    elapsed_ms: 12,
                },
                CaseRecord {
                    case_id: "x/second".into(),
                    params: None,
                    quantity: "HF".into(),
                    expected: Value::String("exploratory".into()),
                    actual: Value::String("1 4 7 10 12 12".into()),
                    status: CaseStatus::ReportOnly,
                    elapsed_ms: 3,
                },
            ],
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("conic".parse::<Suite>().unwrap(), Suite::Conic);
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn infeasible_grid_rejected() {
        let grid = Grid {
            d_max: 9,
            ..Grid::default()
        };
        let e = run_suite(Suite::Conic, &grid, 0).unwrap_err();
        assert!(e.to_string().contains("allow_large"), "{e}");
    }

    #[test]
    fn empty_report_serializes() {
        let empty = VerificationReport {
            schema_version: SCHEMA_VERSION,
            seed: 0,
            cases: vec![],
        };
        let json = emit_report(&empty, ReportFormat::Json).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, empty);
        let csv = emit_report(&empty, ReportFormat::Csv).unwrap();
        assert!(csv.starts_with("schema_version,seed,case_id"));
        let md = emit_report(&empty, ReportFormat::Markdown).unwrap();
        assert!(md.contains("| case |"));
    }

    #[test]
    fn json_csv_json_round_trip() {
        let report = sample_report();
        let json = emit_report(&report, ReportFormat::Json).unwrap();
        let from_json: VerificationReport = serde_json::from_str(&json).unwrap();
        let csv = emit_report(&from_json, ReportFormat::Csv).unwrap();
        let from_csv = report_from_csv(&csv).unwrap();
        assert_eq!(from_csv, report);
    }

    #[test]
    fn markdown_renders_values_bare() {
        let md = emit_report(&sample_report(), ReportFormat::Markdown).unwrap();
        assert!(md.contains("| 1 4 7 10 12 12 |"), "{md}");
        assert!(md.contains("report-only"));
    }

    #[test]
    fn conjecture_suite_is_report_only_and_deterministic() {
        let grid = Grid {
            m_max: 2,
            ..Grid::default()
        };
        let a = run_suite(Suite::Conjecture, &grid, 0).unwrap();
        assert!(!a.cases.is_empty());
        assert!(a.cases.iter().all(|c| c.status == CaseStatus::ReportOnly));
        let b = run_suite(Suite::Conjecture, &grid, 0).unwrap();
        assert_eq!(a.normalized(), b.normalized());
        let ids: Vec<&str> = a.cases.iter().map(|c| c.case_id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }
}
