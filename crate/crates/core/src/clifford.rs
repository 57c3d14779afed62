//! Symmetric Clifford systems `P_0, …, P_m` and their module decompositions.
//!
//! Irreducible systems are assembled from tensor products of the three real
//! 2×2 blocks `Z = diag(1,−1)`, `X = antidiag(1,1)` and `E = antidiag(1,−1)`.
//! A tensor word is symmetric iff it contains an even number of `E` factors,
//! squares to the identity in that case, and two words anticommute iff they
//! disagree (both non-identity, different letters) in an odd number of slots.
//! A depth-first search over words in a fixed order therefore yields, without
//! any matrix arithmetic, `m + 1` symmetric anticommuting involutions with
//! entries in `{−1, 0, 1}`; the matrices are only materialised at the end.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmat::{MatError, Matrix};
use crate::scalar::Scalar;
use crate::Rational;

/// Largest ambient dimension this crate constructs.
pub const MAX_DIM: usize = 64;

const DELTA_BASE: [usize; 8] = [1, 2, 4, 4, 8, 8, 8, 8];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("m must be at least 1 (m = 0 gives no foliation)")]
    ZeroM,
    #[error("m = {0} is not divisible by 4: there is a single equivalence class of irreducible modules")]
    SingleEquivalenceClass(usize),
    #[error("no foliation: m2 = k*delta(m) - m - 1 = {m2} < 1 for m = {m}, k = {k}")]
    NoFoliation { m: usize, k: usize, m2: i64 },
    #[error("module profile must contain at least one irreducible summand")]
    EmptyProfile,
    #[error("m = {m} needs ambient dimension {dim} > {MAX_DIM}")]
    TooLarge { m: usize, dim: usize },
    #[error("no tensor-word Clifford system with {generators} generators in dimension {dim}")]
    ConstructionFailed { generators: usize, dim: usize },
    #[error("internal consistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error("system document: {0}")]
    Document(String),
}

/// `δ(m)`: half the dimension of an irreducible module. Period 8 up to a
/// factor 16.
pub fn delta(m: usize) -> Result<usize, CliffordError> {
    if m == 0 {
        return Err(CliffordError::ZeroM);
    }
    let (periods, rest) = ((m - 1) / 8, (m - 1) % 8);
    let factor = 16usize
        .checked_pow(periods as u32)
        .ok_or(CliffordError::TooLarge { m, dim: usize::MAX })?;
    Ok(DELTA_BASE[rest] * factor)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleClass {
    Plus,
    Minus,
}

/// Multiplicities of the irreducible summands. `k_minus` is only meaningful
/// when `m ≡ 0 mod 4`; otherwise it is zero and `k = k_plus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleProfile {
    pub m: usize,
    pub k_plus: usize,
    pub k_minus: usize,
}

impl ModuleProfile {
    pub fn new(m: usize, k_plus: usize, k_minus: usize) -> Result<Self, CliffordError> {
        if m == 0 {
            return Err(CliffordError::ZeroM);
        }
        if k_plus + k_minus == 0 {
            return Err(CliffordError::EmptyProfile);
        }
        if k_minus > 0 && !m.is_multiple_of(4) {
            return Err(CliffordError::SingleEquivalenceClass(m));
        }
        Ok(Self { m, k_plus, k_minus })
    }

    /// Profile with `k` copies of the (unique, or Plus) irreducible module.
    pub fn single(m: usize, k: usize) -> Result<Self, CliffordError> {
        Self::new(m, k, 0)
    }

    pub fn k(&self) -> usize {
        self.k_plus + self.k_minus
    }

    pub fn has_two_classes(&self) -> bool {
        self.m.is_multiple_of(4)
    }

    /// Congruence-class invariant `min{k₊, k₋}` (zero when `m ≢ 0 mod 4`).
    pub fn underlines(&self) -> usize {
        if self.has_two_classes() {
            self.k_plus.min(self.k_minus)
        } else {
            0
        }
    }

    /// `m₂ = kδ(m) − m − 1`, possibly nonpositive.
    pub fn m2(&self) -> Result<i64, CliffordError> {
        Ok((self.k() * delta(self.m)?) as i64 - self.m as i64 - 1)
    }

    pub fn dim(&self) -> Result<usize, CliffordError> {
        Ok(2 * self.k() * delta(self.m)?)
    }
}

/// `m + 1` symmetric matrices with `P_i P_j + P_j P_i = 2δ_ij Id`.
#[derive(Clone, PartialEq)]
pub struct CliffordSystem<T = Rational> {
    profile: ModuleProfile,
    generators: Vec<Matrix<T>>,
}

impl<T: Scalar> std::fmt::Debug for CliffordSystem<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CliffordSystem")
            .field("profile", &self.profile)
            .field("dim", &self.dim())
            .finish_non_exhaustive()
    }
}

/// One failed invariant of a [`CliffordSystem`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    WrongShape { index: usize, rows: usize, cols: usize },
    WrongCount { expected: usize, found: usize },
    EntryOutOfRange { index: usize, row: usize, col: usize },
    NotSymmetric { index: usize },
    TraceNonzero { index: usize },
    Relation { i: usize, j: usize },
    DimensionMismatch { expected: usize, found: usize },
}

impl<T: Scalar> CliffordSystem<T> {
    /// Wraps raw generators without checking anything; see [`Self::violations`].
    pub fn from_parts_unchecked(profile: ModuleProfile, generators: Vec<Matrix<T>>) -> Self {
        Self { profile, generators }
    }

    pub fn from_parts(profile: ModuleProfile, generators: Vec<Matrix<T>>) -> Result<Self, CliffordError> {
        let sys = Self::from_parts_unchecked(profile, generators);
        match sys.violations().first() {
            None => Ok(sys),
            Some(v) => Err(CliffordError::Inconsistent(format!("{v:?}"))),
        }
    }

    pub fn m(&self) -> usize {
        self.profile.m
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, Matrix::rows)
    }

    pub fn profile(&self) -> ModuleProfile {
        self.profile
    }

    pub fn generators(&self) -> &[Matrix<T>] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Matrix<T> {
        &self.generators[i]
    }

    /// `P_0 · P_1 · … · P_m`.
    pub fn volume_element(&self) -> Matrix<T> {
        self.generators
            .iter()
            .fold(Matrix::identity(self.dim()), |acc, p| &acc * p)
    }

    /// Every failed invariant, in a deterministic order. Empty means valid.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.dim();
        if self.generators.len() != self.m() + 1 {
            out.push(Violation::WrongCount {
                expected: self.m() + 1,
                found: self.generators.len(),
            });
        }
        if let Ok(expected) = self.profile.dim() {
            if expected != n {
                out.push(Violation::DimensionMismatch { expected, found: n });
            }
        }
        for (i, p) in self.generators.iter().enumerate() {
            if p.shape() != (n, n) {
                out.push(Violation::WrongShape {
                    index: i,
                    rows: p.rows(),
                    cols: p.cols(),
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (i, p) in self.generators.iter().enumerate() {
            let bad = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).find(|&(r, c)| {
                let v = p.get(r, c);
                !(v.is_zero() || v.is_one() || (-v.clone()).is_one())
            });
            if let Some((row, col)) = bad {
                out.push(Violation::EntryOutOfRange { index: i, row, col });
            }
            if !p.is_symmetric() {
                out.push(Violation::NotSymmetric { index: i });
            }
            if !p.trace().is_zero() {
                out.push(Violation::TraceNonzero { index: i });
            }
        }
        let two = T::from_i64(2);
        for i in 0..self.generators.len() {
            for j in i..self.generators.len() {
                let ac = self.generators[i]
                    .anticommutator(&self.generators[j])
                    .expect("shapes checked above");
                let ok = if i == j {
                    ac == Matrix::identity(n).scale(&two)
                } else {
                    ac.is_zero()
                };
                if !ok {
                    out.push(Violation::Relation { i, j });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// Direct sum of systems sharing the same `m`.
    pub fn direct_sum(profile: ModuleProfile, parts: &[Self]) -> Self {
        let count = parts.first().map_or(0, |p| p.generators.len());
        let generators = (0..count)
            .map(|i| {
                let blocks: Vec<Matrix<T>> = parts.iter().map(|p| p.generators[i].clone()).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        Self { profile, generators }
    }

    pub fn to_document(&self) -> Result<SystemDocument, CliffordError> {
        let generators = self
            .generators
            .iter()
            .map(|g| {
                g.to_i64_rows()
                    .ok_or_else(|| CliffordError::Document("non-integer generator entry".into()))
            })
            .collect::<Result<_, _>>()?;
        Ok(SystemDocument {
            m: self.m(),
            dim: self.dim(),
            k_plus: self.profile.k_plus,
            k_minus: self.profile.k_minus,
            generators,
        })
    }

    /// Rebuilds the system without validating it.
    pub fn from_document(doc: &SystemDocument) -> Result<Self, CliffordError> {
        let generators = doc
            .generators
            .iter()
            .map(|g| Matrix::from_i64_rows(g))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(g) = generators.iter().find(|g| g.shape() != (doc.dim, doc.dim)) {
            return Err(CliffordError::Document(format!(
                "generator shape {:?} does not match dim {}",
                g.shape(),
                doc.dim
            )));
        }
        let profile = ModuleProfile {
            m: doc.m,
            k_plus: doc.k_plus,
            k_minus: doc.k_minus,
        };
        Ok(Self::from_parts_unchecked(profile, generators))
    }

    pub fn to_json(&self) -> Result<String, CliffordError> {
        serde_json::to_string(&self.to_document()?).map_err(|e| CliffordError::Document(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self, CliffordError> {
        let doc: SystemDocument = serde_json::from_str(s).map_err(|e| CliffordError::Document(e.to_string()))?;
        Self::from_document(&doc)
    }
}

/// Serialized form: generators as integer row-major nested arrays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    pub m: usize,
    pub dim: usize,
    pub k_plus: usize,
    pub k_minus: usize,
    pub generators: Vec<Vec<Vec<i64>>>,
}

// Tensor words: one letter per 2×2 factor, first letter most significant.
const I: u8 = 0;
const Z: u8 = 1;
const X: u8 = 2;
const E: u8 = 3;

type Word = Vec<u8>;

fn is_symmetric_word(w: &[u8]) -> bool {
    w.iter().filter(|&&l| l == E).count() % 2 == 0
}

fn words_anticommute(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).filter(|(&x, &y)| x != I && y != I && x != y).count() % 2 == 1
}

fn candidate_words(len: usize) -> Vec<Word> {
    let total = 4usize.pow(len as u32);
    (1..total)
        .map(|mut code| {
            let mut w = vec![I; len];
            for slot in (0..len).rev() {
                w[slot] = (code % 4) as u8;
                code /= 4;
            }
            w
        })
        .filter(|w| is_symmetric_word(w))
        .collect()
}

/// First (in candidate order) set of `count` pairwise anticommuting symmetric
/// words of length `len`, or `None` when the exhaustive search fails.
fn find_words(len: usize, count: usize) -> Option<Vec<Word>> {
    fn dfs(cands: &[Word], start: usize, chosen: &mut Vec<usize>, count: usize) -> bool {
        if chosen.len() == count {
            return true;
        }
        for i in start..cands.len() {
            if cands.len() - i < count - chosen.len() {
                return false;
            }
            if chosen.iter().all(|&j| words_anticommute(&cands[i], &cands[j])) {
                chosen.push(i);
                if dfs(cands, i + 1, chosen, count) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let cands = candidate_words(len);
    let mut chosen = Vec::with_capacity(count);
    dfs(&cands, 0, &mut chosen, count).then(|| chosen.into_iter().map(|i| cands[i].clone()).collect())
}

fn letter<T: Scalar>(l: u8) -> Matrix<T> {
    let rows: [[i64; 2]; 2] = match l {
        I => [[1, 0], [0, 1]],
        Z => [[1, 0], [0, -1]],
        X => [[0, 1], [1, 0]],
        _ => [[0, 1], [-1, 0]],
    };
    Matrix::from_i64_rows(&rows).expect("2x2 block")
}

fn word_matrix<T: Scalar>(w: &[u8]) -> Matrix<T> {
    w.iter()
        .fold(Matrix::identity(1), |acc: Matrix<T>, &l| acc.kron(&letter(l)))
}

fn log2_exact(n: usize) -> Option<usize> {
    n.is_power_of_two().then(|| n.trailing_zeros() as usize)
}

/// Checks the hard-coded `δ(m)`, `m = 1..=8`, against the word search: a
/// system exists in dimension `2δ(m)` and the exhaustive search finds none in
/// dimension `δ(m)`. Computed once per process.
pub fn delta_table_consistent() -> bool {
    static CHECK: OnceLock<bool> = OnceLock::new();
    *CHECK.get_or_init(|| {
        (1..=8).all(|m| {
            let d = DELTA_BASE[m - 1];
            let Some(len) = log2_exact(2 * d) else { return false };
            find_words(len, m + 1).is_some() && find_words(len - 1, m + 1).is_none()
        })
    })
}

/// Irreducible system of dimension `2δ(m)`. For `m ≡ 0 mod 4` the volume
/// element is `+Id` for [`ModuleClass::Plus`] and `−Id` for `Minus`; the
/// Minus system is the Plus system with `P_m` negated.
pub fn build_irreducible<T: Scalar>(m: usize, class: ModuleClass) -> Result<CliffordSystem<T>, CliffordError> {
    if m == 0 {
        return Err(CliffordError::ZeroM);
    }
    if class == ModuleClass::Minus && !m.is_multiple_of(4) {
        return Err(CliffordError::SingleEquivalenceClass(m));
    }
    let dim = 2 * delta(m)?;
    if dim > MAX_DIM {
        return Err(CliffordError::TooLarge { m, dim });
    }
    if !delta_table_consistent() {
        return Err(CliffordError::Inconsistent(
            "delta(m) base table disagrees with construction".into(),
        ));
    }
    let len = log2_exact(dim).expect("delta(m) is a power of two");
    let words = find_words(len, m + 1).ok_or(CliffordError::ConstructionFailed { generators: m + 1, dim })?;
    let mut generators: Vec<Matrix<T>> = words.iter().map(|w| word_matrix(w)).collect();
    let profile = match class {
        ModuleClass::Plus => ModuleProfile::new(m, 1, 0)?,
        ModuleClass::Minus => ModuleProfile::new(m, 0, 1)?,
    };
    if m.is_multiple_of(4) {
        let omega = generators
            .iter()
            .fold(Matrix::identity(dim), |acc: Matrix<T>, p| &acc * p);
        let plus = if omega.is_identity() {
            true
        } else if (-&omega).is_identity() {
            false
        } else {
            return Err(CliffordError::Inconsistent(format!(
                "volume element of the irreducible m = {m} system is not ±Id"
            )));
        };
        let want_plus = class == ModuleClass::Plus;
        if plus != want_plus {
            generators[m] = -&generators[m];
        }
    }
    Ok(CliffordSystem { profile, generators })
}

/// Block-diagonal sum of `k₊` Plus and `k₋` Minus irreducibles (Plus first).
pub fn build_system<T: Scalar>(profile: ModuleProfile) -> Result<CliffordSystem<T>, CliffordError> {
    let profile = ModuleProfile::new(profile.m, profile.k_plus, profile.k_minus)?;
    let m2 = profile.m2()?;
    if m2 < 1 {
        return Err(CliffordError::NoFoliation {
            m: profile.m,
            k: profile.k(),
            m2,
        });
    }
    let dim = profile.dim()?;
    if dim > MAX_DIM {
        return Err(CliffordError::TooLarge { m: profile.m, dim });
    }
    let mut parts = Vec::with_capacity(profile.k());
    if profile.k_plus > 0 {
        let plus = build_irreducible::<T>(profile.m, ModuleClass::Plus)?;
        parts.extend(std::iter::repeat_n(plus, profile.k_plus));
    }
    if profile.k_minus > 0 {
        let minus = build_irreducible::<T>(profile.m, ModuleClass::Minus)?;
        parts.extend(std::iter::repeat_n(minus, profile.k_minus));
    }
    Ok(CliffordSystem::direct_sum(profile, &parts))
}

/// Recovers `(k₊, k₋)` from the trace of the volume element when
/// `m ≡ 0 mod 4`, and `k = dim / 2δ(m)` otherwise.
pub fn module_class_counts<T: Scalar>(sys: &CliffordSystem<T>) -> Result<ModuleProfile, CliffordError> {
    let m = sys.m();
    let irr = 2 * delta(m)?;
    let dim = sys.dim();
    if !dim.is_multiple_of(irr) {
        return Err(CliffordError::Inconsistent(format!(
            "dimension {dim} is not a multiple of 2*delta({m}) = {irr}"
        )));
    }
    let k = dim / irr;
    if !m.is_multiple_of(4) {
        return ModuleProfile::new(m, k, 0);
    }
    let tr = sys
        .volume_element()
        .trace()
        .to_i64_exact()
        .ok_or_else(|| CliffordError::Inconsistent("non-integer volume trace".into()))?;
    if tr % irr as i64 != 0 {
        return Err(CliffordError::Inconsistent(format!(
            "trace of volume element {tr} not divisible by {irr}"
        )));
    }
    let diff = tr / irr as i64;
    let (k, diff) = (k as i64, diff);
    if (k + diff) % 2 != 0 || diff.abs() > k {
        return Err(CliffordError::Inconsistent(format!(
            "k = {k} and k+ - k- = {diff} are incompatible"
        )));
    }
    ModuleProfile::new(m, ((k + diff) / 2) as usize, ((k - diff) / 2) as usize)
}
