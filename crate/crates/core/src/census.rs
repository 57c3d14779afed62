//! The census of FKM foliations of `S^31` and their projections to `CP^15`
//! and `HP^7`.
//!
//! Each numeric cell records where it came from: the closed-form rules for
//! inhomogeneous FKM foliations, the weights pipeline for the two `(8,7)`
//! rows, or the embedded data on homogeneous foliations. The result is diffed
//! cell by cell against the embedded expected table.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clifford::{build_system, delta, CliffordError, ModuleProfile};
use crate::munzner::multiplicities;
use crate::weights::{structures_report, WeightsError};
use crate::Rational;

pub const EXPECTED_FILE: &str = "expected_table1.json";
pub const HOMOGENEOUS_FILE: &str = "table3_homogeneous.json";
/// Environment variable naming a directory that replaces the embedded data.
pub const DATA_ENV: &str = "FKM_LAB_DATA";

const EMBEDDED_EXPECTED: &str = include_str!("../data/expected_table1.json");
const EMBEDDED_HOMOGENEOUS: &str = include_str!("../data/table3_homogeneous.json");

/// Sphere `S^{2l−1}` of the census: `2kδ(m) = 32`.
pub const CENSUS_DIM: usize = 32;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("data file {0} not found")]
    Missing(PathBuf),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed data file {file}: {message}")]
    Parse { file: String, message: String },
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Weights(#[from] WeightsError),
    #[error("csv output failed: {0}")]
    Csv(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub name: String,
    pub m: usize,
    pub k: Vec<usize>,
    pub homogeneous: Option<String>,
    #[serde(rename = "N_C")]
    pub n_c: usize,
    #[serde(rename = "N_C_h")]
    pub n_c_h: usize,
    #[serde(rename = "N_H")]
    pub n_h: usize,
    #[serde(rename = "N_H_h")]
    pub n_h_h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedTable {
    pub version: u32,
    pub description: String,
    pub source: String,
    pub rows: Vec<ExpectedRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetricFamily {
    /// `SO(k+2)/SO(2)×SO(k)`, FKM with `m = 1`.
    So,
    /// `SU(k+2)/S(U(2)×U(k))`, FKM with `m = 2`.
    Su,
    /// `Sp(k+2)/Sp(2)×Sp(k)`, FKM with `m = 4`, `0 ∈ {k±}`.
    Sp,
    /// `E6/Spin(10)·U(1)`, FKM with `m = 9`, `k = 1`.
    E6,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DataCell {
    pub value: usize,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousRow {
    pub symmetric_space: String,
    pub family: SymmetricFamily,
    pub k: usize,
    #[serde(rename = "N_C")]
    pub n_c: DataCell,
    #[serde(rename = "N_C_h")]
    pub n_c_h: DataCell,
    #[serde(rename = "N_H")]
    pub n_h: DataCell,
    #[serde(rename = "N_H_h")]
    pub n_h_h: DataCell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousData {
    pub version: u32,
    pub description: String,
    pub sources: BTreeMap<String, String>,
    pub rows: BTreeMap<String, HomogeneousRow>,
}

impl HomogeneousData {
    pub fn citation(&self, key: &str) -> String {
        self.sources.get(key).cloned().unwrap_or_else(|| key.to_string())
    }
}

/// Where the census data comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DataSource {
    Embedded,
    Directory(PathBuf),
}

impl DataSource {
    /// `FKM_LAB_DATA` if set, else the embedded copies.
    pub fn from_env() -> Self {
        match std::env::var_os(DATA_ENV) {
            Some(dir) if !dir.is_empty() => Self::Directory(dir.into()),
            _ => Self::Embedded,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Self::Embedded => "embedded".into(),
            Self::Directory(p) => p.display().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusData {
    pub expected: ExpectedTable,
    pub homogeneous: HomogeneousData,
}

fn read_file(dir: &Path, name: &str) -> Result<String, CensusError> {
    let path = dir.join(name);
    if !path.is_file() {
        return Err(CensusError::Missing(path));
    }
    std::fs::read_to_string(&path).map_err(|source| CensusError::Io { path, source })
}

fn parse<T: for<'de> Deserialize<'de>>(file: &str, text: &str) -> Result<T, CensusError> {
    serde_json::from_str(text).map_err(|e| CensusError::Parse {
        file: file.to_string(),
        message: e.to_string(),
    })
}

impl CensusData {
    pub fn load(source: &DataSource) -> Result<Self, CensusError> {
        let (expected, homogeneous) = match source {
            DataSource::Embedded => (EMBEDDED_EXPECTED.to_string(), EMBEDDED_HOMOGENEOUS.to_string()),
            DataSource::Directory(dir) => (read_file(dir, EXPECTED_FILE)?, read_file(dir, HOMOGENEOUS_FILE)?),
        };
        Ok(Self {
            expected: parse(EXPECTED_FILE, &expected)?,
            homogeneous: parse(HOMOGENEOUS_FILE, &homogeneous)?,
        })
    }

    pub fn embedded() -> Self {
        Self::load(&DataSource::Embedded).expect("embedded data parses")
    }
}

/// `(N_C, N_H)` for an inhomogeneous FKM foliation, by `m mod 8`.
///
/// Only valid for inhomogeneous foliations; homogeneous ones must use
/// [`table3_rule`] or the embedded data.
pub fn table2_rule(profile: ModuleProfile) -> (usize, usize) {
    let (kp, km, k) = (profile.k_plus, profile.k_minus, profile.k());
    match profile.m % 8 {
        0 => (
            if kp % 2 == 0 && km % 2 == 0 { 2 } else { 1 },
            if kp % 4 == 0 && km % 4 == 0 { 2 } else { 1 },
        ),
        1 | 7 => (if k % 2 == 0 { 2 } else { 1 }, if k % 4 == 0 { 2 } else { 1 }),
        2 | 6 => (2 + k / 2, if k % 2 == 0 { 2 } else { 1 }),
        _ => (2, 2),
    }
}

/// Cells of the homogeneous table; `None` where no projection exists for
/// dimension reasons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomogeneousCounts {
    pub n_c: usize,
    pub n_c_h: usize,
    pub n_h: Option<usize>,
    pub n_h_h: Option<usize>,
}

/// Closed-form values for the homogeneous FKM families, with `k` the
/// symmetric-space parameter.
pub fn table3_rule(family: SymmetricFamily, k: usize) -> HomogeneousCounts {
    match family {
        SymmetricFamily::So => HomogeneousCounts {
            n_c: if k % 2 == 1 { 1 } else { 2 },
            n_c_h: 1,
            n_h: k.is_multiple_of(2).then_some(if k.is_multiple_of(4) { 1 } else { 0 }),
            n_h_h: k.is_multiple_of(2).then_some(0),
        },
        SymmetricFamily::Su => HomogeneousCounts {
            n_c: if k == 2 { 2 } else { 2 + k / 2 },
            n_c_h: 1,
            n_h: Some(if k != 2 && k.is_multiple_of(2) { 2 } else { 1 }),
            n_h_h: Some(1),
        },
        SymmetricFamily::Sp => HomogeneousCounts {
            n_c: if k >= 3 { 2 } else { 1 },
            n_c_h: 0,
            n_h: Some(if k >= 3 { 2 } else { 1 }),
            n_h_h: Some(0),
        },
        SymmetricFamily::E6 => HomogeneousCounts {
            n_c: 2,
            n_c_h: 1,
            n_h: Some(1),
            n_h_h: Some(0),
        },
    }
}

/// FKM profiles on `S^31` with `m₂ ≥ 1`, one per congruence class
/// (`k₊ ≤ k₋`), ordered by `m` then `k₊`.
pub fn sphere31_profiles() -> Vec<ModuleProfile> {
    let half = CENSUS_DIM / 2;
    let mut out = Vec::new();
    for m in 1..half {
        let d = delta(m).expect("m > 0");
        if !half.is_multiple_of(d) {
            continue;
        }
        let k = half / d;
        let candidates: Vec<ModuleProfile> = if m % 4 == 0 {
            (0..=k / 2)
                .map(|kp| ModuleProfile::new(m, kp, k - kp).expect("valid split"))
                .collect()
        } else {
            vec![ModuleProfile::single(m, k).expect("valid")]
        };
        out.extend(candidates.into_iter().filter(|p| p.m2().is_ok_and(|v| v >= 1)));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Rule,
    Pipeline,
    EmbeddedData,
}

impl Provenance {
    fn tag(self) -> &'static str {
        match self {
            Self::Rule => "R",
            Self::Pipeline => "P",
            Self::EmbeddedData => "D",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub value: usize,
    pub provenance: Provenance,
    pub source: String,
}

impl Cell {
    fn new(value: usize, provenance: Provenance, source: impl Into<String>) -> Self {
        Self {
            value,
            provenance,
            source: source.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub name: String,
    pub m: usize,
    /// `[k]`, or `[k₊, k₋]` when `m ≡ 0 mod 4`.
    pub k: Vec<usize>,
    pub m1: usize,
    pub m2: usize,
    /// The symmetric space `G/K` when the foliation is homogeneous.
    pub homogeneous: Option<String>,
    #[serde(rename = "N_C")]
    pub n_c: Cell,
    #[serde(rename = "N_C_h")]
    pub n_c_h: Cell,
    #[serde(rename = "N_H")]
    pub n_h: Cell,
    #[serde(rename = "N_H_h")]
    pub n_h_h: Cell,
}

impl CensusRow {
    pub fn cells(&self) -> [(&'static str, &Cell); 4] {
        [
            ("N_C", &self.n_c),
            ("N_C_h", &self.n_c_h),
            ("N_H", &self.n_h),
            ("N_H_h", &self.n_h_h),
        ]
    }

    pub fn k_display(&self) -> String {
        self.k.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Two independent computations of the same cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyCheck {
    pub row: String,
    pub left: &'static str,
    pub right: &'static str,
    pub left_values: Vec<Option<usize>>,
    pub right_values: Vec<Option<usize>>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    pub consistency: Vec<ConsistencyCheck>,
}

fn k_list(p: ModuleProfile) -> Vec<usize> {
    if p.has_two_classes() {
        vec![p.k_plus, p.k_minus]
    } else {
        vec![p.k()]
    }
}

const INHOMOGENEOUS_H: &str = "pullback of a homogeneous foliation is homogeneous";

pub fn sphere31_census(data: &CensusData) -> Result<Census, CensusError> {
    let mut rows = Vec::new();
    let mut consistency = Vec::new();
    for profile in sphere31_profiles() {
        let desc = multiplicities(profile)?;
        let name = desc.name.clone();
        let (homogeneous, cells) = if let Some(h) = data.homogeneous.rows.get(&name) {
            let cell =
                |c: &DataCell| Cell::new(c.value, Provenance::EmbeddedData, data.homogeneous.citation(&c.source));
            let rule = table3_rule(h.family, h.k);
            consistency.push(ConsistencyCheck {
                row: name.clone(),
                left: "embedded_data",
                right: "table3_rule",
                left_values: [&h.n_c, &h.n_c_h, &h.n_h, &h.n_h_h]
                    .iter()
                    .map(|c| Some(c.value))
                    .collect(),
                right_values: vec![Some(rule.n_c), Some(rule.n_c_h), rule.n_h, rule.n_h_h],
                agree: (
                    Some(h.n_c.value),
                    Some(h.n_c_h.value),
                    Some(h.n_h.value),
                    Some(h.n_h_h.value),
                ) == (Some(rule.n_c), Some(rule.n_c_h), rule.n_h, rule.n_h_h),
            });
            (
                Some(h.symmetric_space.clone()),
                [cell(&h.n_c), cell(&h.n_c_h), cell(&h.n_h), cell(&h.n_h_h)],
            )
        } else {
            let rule = table2_rule(profile);
            let zero = || Cell::new(0, Provenance::Rule, INHOMOGENEOUS_H);
            let (n_c, n_h) = if profile.m == 8 && profile.dim()? == CENSUS_DIM {
                let report = structures_report(&build_system::<Rational>(profile)?)?;
                consistency.push(ConsistencyCheck {
                    row: name.clone(),
                    left: "weights_pipeline",
                    right: "table2_rule",
                    left_values: vec![Some(report.n_c), Some(report.n_h)],
                    right_values: vec![Some(rule.0), Some(rule.1)],
                    agree: (report.n_c, report.n_h) == rule,
                });
                let src = format!("weights pipeline ({:?} case)", report.case);
                (
                    Cell::new(report.n_c, Provenance::Pipeline, src.clone()),
                    Cell::new(report.n_h, Provenance::Pipeline, src),
                )
            } else {
                let src = format!("inhomogeneous FKM rule, m = {} mod 8", profile.m % 8);
                (
                    Cell::new(rule.0, Provenance::Rule, src.clone()),
                    Cell::new(rule.1, Provenance::Rule, src),
                )
            };
            (None, [n_c, zero(), n_h, zero()])
        };
        let [n_c, n_c_h, n_h, n_h_h] = cells;
        rows.push(CensusRow {
            name,
            m: profile.m,
            k: k_list(profile),
            m1: desc.m1,
            m2: desc.m2,
            homogeneous,
            n_c,
            n_c_h,
            n_h,
            n_h_h,
        });
    }
    Ok(Census { rows, consistency })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub row: String,
    pub column: String,
    pub expected: String,
    pub found: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub mismatches: Vec<Mismatch>,
    pub missing_rows: Vec<String>,
    pub unexpected_rows: Vec<String>,
}

impl DiffReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.missing_rows.is_empty() && self.unexpected_rows.is_empty()
    }
}

pub fn diff_against_expected(rows: &[CensusRow], expected: &ExpectedTable) -> DiffReport {
    let mut mismatches = Vec::new();
    let mut missing_rows = Vec::new();
    for exp in &expected.rows {
        let Some(row) = rows.iter().find(|r| r.name == exp.name) else {
            missing_rows.push(exp.name.clone());
            continue;
        };
        let mut check = |column: &str, e: String, f: String, provenance: Option<Provenance>| {
            if e != f {
                mismatches.push(Mismatch {
                    row: exp.name.clone(),
                    column: column.to_string(),
                    expected: e,
                    found: f,
                    provenance,
                });
            }
        };
        check("m", exp.m.to_string(), row.m.to_string(), None);
        check("k", format!("{:?}", exp.k), format!("{:?}", row.k), None);
        check(
            "homogeneous",
            format!("{:?}", exp.homogeneous),
            format!("{:?}", row.homogeneous),
            None,
        );
        let expected_cells = [exp.n_c, exp.n_c_h, exp.n_h, exp.n_h_h];
        for ((column, cell), e) in row.cells().into_iter().zip(expected_cells) {
            check(column, e.to_string(), cell.value.to_string(), Some(cell.provenance));
        }
    }
    let unexpected_rows = rows
        .iter()
        .filter(|r| !expected.rows.iter().any(|e| e.name == r.name))
        .map(|r| r.name.clone())
        .collect();
    DiffReport {
        mismatches,
        missing_rows,
        unexpected_rows,
    }
}

/// Census rows, independent-path checks and the diff, as emitted in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub data_source: String,
    pub rows: Vec<CensusRow>,
    pub consistency: Vec<ConsistencyCheck>,
    pub diff: DiffReport,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.diff.is_clean() && self.consistency.iter().all(|c| c.agree)
    }
}

pub fn census_report(source: &DataSource) -> Result<CensusReport, CensusError> {
    let data = CensusData::load(source)?;
    let census = sphere31_census(&data)?;
    let diff = diff_against_expected(&census.rows, &data.expected);
    Ok(CensusReport {
        data_source: source.describe(),
        rows: census.rows,
        consistency: census.consistency,
        diff,
    })
}

/// Markdown table in the layout of the expected data, each cell tagged with
/// its provenance.
pub fn to_markdown(rows: &[CensusRow]) -> String {
    let mut out = String::new();
    out.push_str("| F | m | k or k± | G/K if F homogeneous | N_C | N_C^h | N_H | N_H^h |\n");
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    for r in rows {
        let cells: Vec<String> = r
            .cells()
            .iter()
            .map(|(_, c)| format!("{} [{}]", c.value, c.provenance.tag()))
            .collect();
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            r.name,
            r.m,
            r.k_display(),
            r.homogeneous.as_deref().unwrap_or("Inhomogeneous"),
            cells.join(" | ")
        );
    }
    out.push_str("\nProvenance: [R] closed-form rule, [P] weights pipeline, [D] embedded data.\n");
    out
}

pub fn to_csv(rows: &[CensusRow]) -> Result<String, CensusError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CensusError::Csv(e.to_string());
    w.write_record([
        "name",
        "m",
        "k",
        "m1",
        "m2",
        "homogeneous",
        "N_C",
        "N_C_h",
        "N_H",
        "N_H_h",
        "N_C_provenance",
        "N_C_h_provenance",
        "N_H_provenance",
        "N_H_h_provenance",
    ])
    .map_err(err)?;
    for r in rows {
        let mut rec = vec![
            r.name.clone(),
            r.m.to_string(),
            r.k_display(),
            r.m1.to_string(),
            r.m2.to_string(),
            r.homogeneous.clone().unwrap_or_default(),
        ];
        rec.extend(r.cells().iter().map(|(_, c)| c.value.to_string()));
        rec.extend(r.cells().iter().map(|(_, c)| format!("{:?}", c.provenance)));
        w.write_record(&rec).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CensusError::Csv(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census() -> Census {
        sphere31_census(&CensusData::embedded()).unwrap()
    }

    #[test]
    fn table2_examples() {
        assert_eq!(table2_rule(ModuleProfile::single(6, 2).unwrap()), (3, 2));
        assert_eq!(table2_rule(ModuleProfile::new(8, 1, 1).unwrap()), (1, 1));
        assert_eq!(table2_rule(ModuleProfile::new(8, 0, 2).unwrap()), (2, 1));
        for k in 1..6 {
            assert_eq!(table2_rule(ModuleProfile::single(3, k).unwrap()), (2, 2));
        }
        assert_eq!(table2_rule(ModuleProfile::single(7, 2).unwrap()), (2, 1));
        assert_eq!(table2_rule(ModuleProfile::single(2, 5).unwrap()), (4, 1));
    }

    #[test]
    fn table3_examples() {
        assert_eq!(
            table3_rule(SymmetricFamily::So, 16),
            HomogeneousCounts {
                n_c: 2,
                n_c_h: 1,
                n_h: Some(1),
                n_h_h: Some(0)
            }
        );
        assert_eq!(table3_rule(SymmetricFamily::So, 5).n_h, None);
        assert_eq!(table3_rule(SymmetricFamily::Su, 8).n_c, 6);
        assert_eq!(table3_rule(SymmetricFamily::Su, 2).n_c, 2);
        assert_eq!(table3_rule(SymmetricFamily::Sp, 2).n_c, 1);
        assert_eq!(table3_rule(SymmetricFamily::Sp, 4).n_h, Some(2));
    }

    #[test]
    fn twelve_profiles() {
        let ps = sphere31_profiles();
        assert_eq!(ps.len(), 12);
        for p in &ps {
            let d = multiplicities(*p).unwrap();
            assert_eq!(d.m1 + d.m2, 15);
            assert_eq!(d.sphere_dim, 31);
        }
    }

    #[test]
    fn census_matches_expected() {
        let data = CensusData::embedded();
        let c = sphere31_census(&data).unwrap();
        assert_eq!(c.rows.len(), 12);
        let diff = diff_against_expected(&c.rows, &data.expected);
        assert!(diff.is_clean(), "{diff:?}");
        assert!(c.consistency.iter().all(|x| x.agree), "{:?}", c.consistency);
        assert_eq!(c.consistency.iter().filter(|x| x.left == "weights_pipeline").count(), 2);
        let r = c.rows.iter().find(|r| r.name == "F_(2,13)").unwrap();
        assert_eq!((r.n_c.value, r.n_c_h.value, r.n_h.value, r.n_h_h.value), (6, 1, 2, 1));
        let u = c.rows.iter().find(|r| r.name == "F_u(8,7)").unwrap();
        assert_eq!((u.n_c.value, u.n_c_h.value, u.n_h.value, u.n_h_h.value), (1, 0, 1, 0));
        assert_eq!(u.n_c.provenance, Provenance::Pipeline);
        for r in &c.rows {
            assert!(r.n_c_h.value <= r.n_c.value && r.n_h_h.value <= r.n_h.value);
        }
    }

    #[test]
    fn corrupted_cell_is_reported_once() {
        let data = CensusData::embedded();
        let mut rows = census().rows;
        rows[6].n_c.value += 1;
        let diff = diff_against_expected(&rows, &data.expected);
        assert_eq!(diff.mismatches.len(), 1);
        assert_eq!(diff.mismatches[0].column, "N_C");
        assert_eq!(diff.mismatches[0].provenance, Some(Provenance::Rule));
    }

    #[test]
    fn empty_rows_are_all_missing() {
        let diff = diff_against_expected(&[], &CensusData::embedded().expected);
        assert_eq!(diff.missing_rows.len(), 12);
        assert!(!diff.is_clean());
    }

    #[test]
    fn missing_directory_is_reported() {
        let err = CensusData::load(&DataSource::Directory("/nonexistent/fkm".into())).unwrap_err();
        assert!(matches!(err, CensusError::Missing(_)));
    }

    #[test]
    fn output_formats() {
        let rows = census().rows;
        let md = to_markdown(&rows);
        assert_eq!(md.lines().filter(|l| l.starts_with("| F_")).count(), 12);
        assert!(md.contains("| F_(6,9) | 6 | 2 | Inhomogeneous | 3 [R] | 0 [R] | 2 [R] | 0 [R] |"));
        let csv = to_csv(&rows).unwrap();
        assert_eq!(csv.lines().count(), 13);
        assert!(csv.contains("\"F_u(4,11)\",4,\"1,3\",4,11,,2,0,2,0,Rule,Rule,Rule,Rule"));
    }
}
