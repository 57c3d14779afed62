use std::fmt::{self, Write as _};
use std::fs;
use std::io::{self, Write as _};
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use fkm_core::census::{self, CensusError, DataSource};
use fkm_core::clifford::{build_system, CliffordError, ModuleProfile, Violation};
use fkm_core::munzner::{multiplicities, system_tag, verify_munzner_identities, MunznerReport};
use fkm_core::symmetry::{
    cohomogeneity, isotropy_basis, preserves_foliation, so_basis, spin_basis, standard_quaternionic, SymmetryError,
};
use fkm_core::weights::{structures_report, WeightCase};
use fkm_core::{Rational, RationalCliffordSystem, RationalForm, RationalMatrix};

use crate::selector::parse_selector;
use crate::{Cli, Command, Format, GlobalOpts, Group, StructureKind};

pub const DEFAULT_VERIFY_TRIALS: usize = 100;
pub const DEFAULT_COHOMOGENEITY_TRIALS: usize = 8;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Env(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Domain(_) => 3,
            Self::Env(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "usage error: {m}"),
            Self::Domain(m) => write!(f, "{m}"),
            Self::Env(m) => write!(f, "environment error: {m}"),
        }
    }
}

impl From<CliffordError> for CliError {
    fn from(e: CliffordError) -> Self {
        match e {
            CliffordError::NoFoliation { .. } | CliffordError::TooLarge { .. } => Self::Domain(e.to_string()),
            CliffordError::ZeroM | CliffordError::EmptyProfile | CliffordError::SingleEquivalenceClass(_) => {
                Self::Usage(e.to_string())
            }
            other => Self::Domain(other.to_string()),
        }
    }
}

impl From<SymmetryError> for CliError {
    fn from(e: SymmetryError) -> Self {
        Self::Domain(e.to_string())
    }
}

/// Rendered output and whether every check in it passed.
struct Outcome {
    text: String,
    passed: bool,
}

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    let outcome = match &cli.command {
        Command::Build { selector } => build(g, selector)?,
        Command::Verify { selector, from_file } => verify(g, selector.as_deref(), from_file.as_deref())?,
        Command::Structures {
            foliation,
            foliation_flag,
            emit,
        } => {
            let name = foliation
                .as_deref()
                .or(foliation_flag.as_deref())
                .ok_or_else(|| CliError::Usage("structures needs a foliation (f87 or f87u)".into()))?;
            let format = match (emit, g.format) {
                (Some(a), Some(b)) if *a != b => {
                    return Err(CliError::Usage("--emit and --format disagree".into()));
                }
                (e, f) => e.or(f),
            };
            structures(format, name)?
        }
        Command::Census => census_cmd(g)?,
        Command::Cohomogeneity { group } => cohomogeneity_cmd(g, *group)?,
        Command::Preserve { system, structure } => preserve(g, system, *structure)?,
    };
    emit(g.out.as_deref(), &outcome.text)?;
    Ok(if outcome.passed { 0 } else { 1 })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Env(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Env(format!("cannot write stdout: {e}"))),
    }
}

fn choose(format: Option<Format>, default: Format, allowed: &[Format], command: &str) -> Result<Format, CliError> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(
            format!("{command} does not support --format {f:?}").to_lowercase(),
        ))
    }
}

fn to_json<S: Serialize>(value: &S) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Domain(format!("serialization failed: {e}")))
}

fn profile_of(selector: &str) -> Result<ModuleProfile, CliError> {
    parse_selector(selector).map_err(CliError::Usage)
}

fn system_of(selector: &str) -> Result<RationalCliffordSystem, CliError> {
    Ok(build_system::<Rational>(profile_of(selector)?)?)
}

fn build(g: &GlobalOpts, selector: &str) -> Result<Outcome, CliError> {
    choose(g.format, Format::Json, &[Format::Json], "build")?;
    let sys = system_of(selector)?;
    Ok(Outcome {
        text: sys.to_json()?,
        passed: true,
    })
}

#[derive(Serialize)]
struct VerifyReport {
    system: String,
    source: String,
    m: usize,
    dim: usize,
    clifford_valid: bool,
    violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    munzner: Option<MunznerReport>,
    passed: bool,
}

fn verify(g: &GlobalOpts, selector: Option<&str>, from_file: Option<&Path>) -> Result<Outcome, CliError> {
    let format = choose(g.format, Format::Text, &[Format::Json, Format::Text], "verify")?;
    let trials = g.trials.unwrap_or(DEFAULT_VERIFY_TRIALS);
    if trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    let (sys, source) = match (selector, from_file) {
        (Some(s), None) => (system_of(s)?, s.to_string()),
        (None, Some(path)) => {
            let text =
                fs::read_to_string(path).map_err(|e| CliError::Env(format!("cannot read {}: {e}", path.display())))?;
            match RationalCliffordSystem::from_json(&text) {
                Ok(sys) => (sys, path.display().to_string()),
                Err(e) => {
                    let report = json!({
                        "source": path.display().to_string(),
                        "clifford_valid": false,
                        "error": e.to_string(),
                        "passed": false,
                    });
                    let text = match format {
                        Format::Json => to_json(&report)?,
                        _ => format!("{}: FAIL\n  unreadable system document: {e}", path.display()),
                    };
                    return Ok(Outcome { text, passed: false });
                }
            }
        }
        _ => return Err(CliError::Usage("verify needs a selector or --from-file".into())),
    };
    let violations = sys.violations();
    let clifford_valid = violations.is_empty();
    let munzner = clifford_valid.then(|| verify_munzner_identities(&RationalForm::new(&sys), trials, g.seed));
    let passed = clifford_valid && munzner.as_ref().is_some_and(MunznerReport::passed);
    let report = VerifyReport {
        system: system_tag(sys.profile()),
        source,
        m: sys.m(),
        dim: sys.dim(),
        clifford_valid,
        violations,
        munzner,
        passed,
    };
    let text = match format {
        Format::Json => to_json(&report)?,
        _ => verify_text(&report),
    };
    Ok(Outcome { text, passed })
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(s, "{} (dim {}, m = {}): {}", r.system, r.dim, r.m, verdict(r.passed));
    let _ = writeln!(s, "  clifford relations: {}", verdict(r.clifford_valid));
    if let Some(v) = r.violations.first() {
        let _ = writeln!(s, "  first violation: {v:?} ({} total)", r.violations.len());
    }
    match &r.munzner {
        Some(m) => {
            let _ = writeln!(
                s,
                "  |grad F|^2 = 16|x|^6 on {} points (seed {:#x}): {}",
                m.trials,
                m.seed,
                verdict(m.identity1.passed())
            );
            let _ = writeln!(
                s,
                "  lap F = {}|x|^2: {}",
                m.laplacian_ratio,
                verdict(m.identity2.passed())
            );
            if let Some(c) = &m.counterexample {
                let _ = writeln!(
                    s,
                    "  counterexample: {:?} at trial {}, x = {:?}",
                    c.identity, c.trial, c.point
                );
            }
        }
        None => s.push_str("  muenzner identities: skipped\n"),
    }
    s
}

fn structures(format: Option<Format>, name: &str) -> Result<Outcome, CliError> {
    let format = choose(format, Format::Json, &[Format::Json, Format::Text], "structures")?;
    let profile = profile_of(name)?;
    if profile.m != 8 || WeightCase::for_profile(profile).is_err() {
        return Err(CliError::Usage(format!(
            "structures only supports f87 and f87u, not {}",
            system_tag(profile)
        )));
    }
    let sys = system_of(name)?;
    let report = structures_report(&sys).map_err(|e| CliError::Domain(e.to_string()))?;
    let passed = report.weights_match_system;
    let text = match format {
        Format::Json => to_json(&report)?,
        _ => {
            let mut s = String::new();
            let labels =
                |v: &[fkm_core::RationalTorusElement]| v.iter().map(|t| t.label()).collect::<Vec<_>>().join(", ");
            let _ = writeln!(s, "{} ({:?} weight system)", report.foliation, report.case);
            let _ = writeln!(s, "  weights match system: {}", report.weights_match_system);
            let _ = writeln!(s, "  |J| = {}", report.j_total);
            let _ = writeln!(s, "  J in closed chamber: {{{}}}", labels(&report.j_chamber));
            for c in &report.classes {
                let _ = writeln!(
                    s,
                    "  class [{}] = {{{}}}, su(2): {:?}",
                    c.representative.label(),
                    labels(&c.members),
                    c.su2
                );
            }
            let _ = writeln!(s, "  N_C = {}", report.n_c);
            let _ = writeln!(s, "  N_H = {}", report.n_h);
            let _ = writeln!(
                s,
                "  diagram: {} nodes, {} edges, {} automorphism(s)",
                report.diagram.nodes.len(),
                report.diagram.edges.len(),
                report.diagram.automorphism_order
            );
            for m in &report.diagram.induced_maps {
                let _ = writeln!(s, "  induced map: ({})", m.join(", "));
            }
            s
        }
    };
    Ok(Outcome { text, passed })
}

fn census_cmd(g: &GlobalOpts) -> Result<Outcome, CliError> {
    let format = choose(
        g.format,
        Format::Markdown,
        &[Format::Json, Format::Csv, Format::Markdown, Format::Text],
        "census",
    )?;
    let source = DataSource::from_env();
    let report = census::census_report(&source).map_err(|e| match e {
        CensusError::Missing(_) | CensusError::Io { .. } => CliError::Env(e.to_string()),
        other => CliError::Domain(other.to_string()),
    })?;
    let passed = report.passed();
    let text = match format {
        Format::Json => to_json(&report)?,
        Format::Csv => census::to_csv(&report.rows).map_err(|e| CliError::Domain(e.to_string()))?,
        Format::Markdown | Format::Text => {
            let mut s = census::to_markdown(&report.rows);
            let _ = writeln!(s, "\nData: {}", report.data_source);
            for c in &report.consistency {
                let _ = writeln!(
                    s,
                    "Consistency {}: {}",
                    c.row,
                    if c.agree { "agree" } else { "DISAGREE" }
                );
            }
            if report.diff.is_clean() {
                s.push_str("Diff: 0 mismatches\n");
            } else {
                let d = &report.diff;
                let _ = writeln!(s, "Diff: {} mismatches", d.mismatches.len());
                for m in &d.mismatches {
                    let _ = writeln!(
                        s,
                        "  {} {}: expected {}, found {}",
                        m.row, m.column, m.expected, m.found
                    );
                }
                for r in &d.missing_rows {
                    let _ = writeln!(s, "  missing row {r}");
                }
                for r in &d.unexpected_rows {
                    let _ = writeln!(s, "  unexpected row {r}");
                }
            }
            s
        }
    };
    Ok(Outcome { text, passed })
}

/// Basis of the Lie algebra acting on R^32 for each `--group` value.
pub fn group_basis(group: Group) -> Result<Vec<RationalMatrix>, CliError> {
    Ok(match group {
        Group::Spin9 => spin_basis(&build_system::<Rational>(ModuleProfile::new(8, 1, 1)?)?),
        Group::Spin9so2 => isotropy_basis(&build_system::<Rational>(ModuleProfile::new(8, 0, 2)?)?).all(),
        Group::So32 => so_basis(32),
    })
}

fn cohomogeneity_cmd(g: &GlobalOpts, group: Group) -> Result<Outcome, CliError> {
    let format = choose(g.format, Format::Text, &[Format::Json, Format::Text], "cohomogeneity")?;
    let trials = g.trials.unwrap_or(DEFAULT_COHOMOGENEITY_TRIALS);
    if trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    let basis = group_basis(group)?;
    let report = cohomogeneity(&basis, 32, trials, g.seed)?;
    let name = format!("{group:?}").to_lowercase();
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).map_err(|e| CliError::Domain(e.to_string()))?;
            v["group"] = json!(name);
            to_json(&v)?
        }
        _ => format!(
            "{name}: cohomogeneity {} (algebra dim {}, max orbit dim {}, {} trials, seed {:#x})",
            report.cohomogeneity, report.algebra_dim, report.orbit_dim, report.trials, report.seed
        ),
    };
    Ok(Outcome { text, passed: true })
}

#[derive(Serialize)]
struct PreserveReport {
    system: String,
    structure: &'static str,
    validated: bool,
    preserved: Vec<bool>,
    passed: bool,
}

fn preserve(g: &GlobalOpts, selector: &str, kind: StructureKind) -> Result<Outcome, CliError> {
    let format = choose(g.format, Format::Text, &[Format::Json, Format::Text], "preserve")?;
    let sys = system_of(selector)?;
    let name = multiplicities(sys.profile())?.name;
    let (structure, matrices): (&'static str, Vec<RationalMatrix>) = match kind {
        StructureKind::P0p1 => {
            let gens = sys.generators();
            ("p0p1", vec![&gens[0] * &gens[1]])
        }
        StructureKind::Quaternionic => {
            let q = standard_quaternionic(&sys)?;
            ("quaternionic", q.matrices().into_iter().cloned().collect())
        }
    };
    let preserved = matrices
        .iter()
        .map(|j| preserves_foliation(&sys, j))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = preserved.iter().all(|&b| b);
    let report = PreserveReport {
        system: name,
        structure,
        validated: true,
        preserved,
        passed,
    };
    let text = match format {
        Format::Json => to_json(&report)?,
        _ => format!(
            "{} {}: {}",
            report.system,
            report.structure,
            if passed {
                "preserves the foliation"
            } else {
                "does NOT preserve the foliation"
            }
        ),
    };
    Ok(Outcome { text, passed })
}
