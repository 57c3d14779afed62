//! Complex and quaternionic structures, the isotropy algebra
//! `ρ*(𝔨) = span{P_iP_j} ⊕ 𝔲⁺(𝒫)`, exact foliation preservation and sampled
//! cohomogeneity.
//!
//! A skew `J` preserves the foliation iff `⟨∇F(x), Jx⟩` vanishes identically.
//! With `S_i` the symmetric part of `P_i` and `⟨x, Jx⟩ = 0` this quartic is
//! `−8 Σ ⟨S_i x,x⟩⟨S_i J x,x⟩`, expanded here monomial by monomial.

use serde::Serialize;
use thiserror::Error;

use crate::clifford::CliffordSystem;
use crate::exactmat::{rank_exact, Echelon, Matrix, SparseRow};
use crate::quartic::{QuadraticForm, QuarticForm};
use crate::sampling::PointSampler;
use crate::scalar::Field;
use crate::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("matrix is {found:?}, expected {expected}x{expected}")]
    DimensionMismatch { expected: usize, found: (usize, usize) },
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("J^2 is not -Id")]
    NotComplex,
    #[error("J{0}J{1} != J{2}")]
    QuaternionRelation(usize, usize, usize),
    #[error("J{0} and J{1} do not anticommute")]
    NotAnticommuting(usize, usize),
    #[error("quaternionic structure needs at least three generators, system has m = {0}")]
    TooFewGenerators(usize),
    #[error("basis element {0} is not skew-symmetric of the ambient dimension")]
    BadBasisElement(usize),
}

fn square_of(j: &Matrix<impl Field>, n: usize) -> Result<(), SymmetryError> {
    if j.shape() != (n, n) {
        return Err(SymmetryError::DimensionMismatch {
            expected: n,
            found: j.shape(),
        });
    }
    Ok(())
}

fn is_minus_identity<T: Field>(m: &Matrix<T>) -> bool {
    (-m).is_identity()
}

/// Skew `J` with `J² = −Id`.
#[derive(Clone, PartialEq)]
pub struct ComplexStructure<T = crate::Rational> {
    j: Matrix<T>,
}

impl<T: Field> ComplexStructure<T> {
    pub fn new(j: Matrix<T>) -> Result<Self, SymmetryError> {
        square_of(&j, j.rows())?;
        if !j.is_skew() {
            return Err(SymmetryError::NotSkew);
        }
        if !is_minus_identity(&(&j * &j)) {
            return Err(SymmetryError::NotComplex);
        }
        Ok(Self { j })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.j
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.j
    }
}

impl<T: Field> std::fmt::Debug for ComplexStructure<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ComplexStructure({:?})", self.j)
    }
}

/// `J_1, J_2, J_3` complex structures with `J_i J_{i+1} = J_{i+2}`.
#[derive(Clone, PartialEq)]
pub struct QuaternionicStructure<T = crate::Rational> {
    js: [ComplexStructure<T>; 3],
}

impl<T: Field> QuaternionicStructure<T> {
    pub fn new(j1: Matrix<T>, j2: Matrix<T>, j3: Matrix<T>) -> Result<Self, SymmetryError> {
        let n = j1.rows();
        for j in [&j2, &j3] {
            square_of(j, n)?;
        }
        let js = [
            ComplexStructure::new(j1)?,
            ComplexStructure::new(j2)?,
            ComplexStructure::new(j3)?,
        ];
        for i in 0..3 {
            let (a, b, c) = (i, (i + 1) % 3, (i + 2) % 3);
            let ab = js[a].matrix() * js[b].matrix();
            if ab != *js[c].matrix() {
                return Err(SymmetryError::QuaternionRelation(a + 1, b + 1, c + 1));
            }
            let ba = js[b].matrix() * js[a].matrix();
            if !(&ab + &ba).is_zero() {
                return Err(SymmetryError::NotAnticommuting(a + 1, b + 1));
            }
        }
        Ok(Self { js })
    }

    pub fn structures(&self) -> &[ComplexStructure<T>; 3] {
        &self.js
    }

    pub fn matrices(&self) -> [&Matrix<T>; 3] {
        [self.js[0].matrix(), self.js[1].matrix(), self.js[2].matrix()]
    }
}

impl<T: Field> std::fmt::Debug for QuaternionicStructure<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.js.iter()).finish()
    }
}

/// Basis of `ρ*(𝔨)`: the `so(m+1)` spanned by `P_iP_j` and the skew centralizer.
#[derive(Clone)]
pub struct IsotropyBasis<T = crate::Rational> {
    pub spin_part: Vec<Matrix<T>>,
    pub centralizer_part: Vec<Matrix<T>>,
}

impl<T: Field> IsotropyBasis<T> {
    pub fn dim(&self) -> usize {
        self.spin_part.len() + self.centralizer_part.len()
    }

    pub fn all(&self) -> Vec<Matrix<T>> {
        self.spin_part.iter().chain(&self.centralizer_part).cloned().collect()
    }

    /// Whether `[A, B]` lies in the span of `spin_part` for all pairs.
    pub fn spin_part_closed(&self) -> bool {
        let Some(first) = self.spin_part.first() else {
            return true;
        };
        let mut span = Echelon::new(first.rows() * first.cols());
        for a in &self.spin_part {
            span.insert(SparseRow::from_dense(a.as_slice()));
        }
        self.spin_part.iter().enumerate().all(|(i, a)| {
            self.spin_part[i + 1..].iter().all(|b| {
                let c = a.commutator(b).expect("same shape");
                span.contains(SparseRow::from_dense(c.as_slice()))
            })
        })
    }
}

impl<T: Field> std::fmt::Debug for IsotropyBasis<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IsotropyBasis")
            .field("spin_part", &self.spin_part.len())
            .field("centralizer_part", &self.centralizer_part.len())
            .finish()
    }
}

/// Skew matrices commuting with every generator, as one exact kernel over the
/// `n²` matrix entries.
pub fn centralizer_basis<T: Field>(sys: &CliffordSystem<T>) -> Vec<Matrix<T>> {
    let n = sys.dim();
    let var = |r: usize, c: usize| r * n + c;
    let mut ech = Echelon::new(n * n);
    for r in 0..n {
        ech.insert(SparseRow::from_entries(vec![(var(r, r), T::one())]));
        for c in r + 1..n {
            ech.insert(SparseRow::from_entries(vec![
                (var(r, c), T::one()),
                (var(c, r), T::one()),
            ]));
        }
    }
    for p in sys.generators() {
        let cols: Vec<Vec<(usize, T)>> = (0..n)
            .map(|c| {
                (0..n)
                    .filter(|&k| !p.get(k, c).is_zero())
                    .map(|k| (k, p.get(k, c).clone()))
                    .collect()
            })
            .collect();
        for r in 0..n {
            let prow: Vec<(usize, T)> = p.row_entries(r).map(|(k, v)| (k, v.clone())).collect();
            for (c, col) in cols.iter().enumerate() {
                // (AP − PA)_{rc} = Σ_k a_{rk} P_{kc} − Σ_k P_{rk} a_{kc}
                let mut entries: Vec<(usize, T)> = col.iter().map(|(k, v)| (var(r, *k), v.clone())).collect();
                entries.extend(prow.iter().map(|(k, v)| (var(*k, c), -v.clone())));
                ech.insert(SparseRow::from_entries(entries));
            }
        }
    }
    ech.kernel()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |r, c| v[var(r, c)].clone()))
        .collect()
}

/// `{P_iP_j : i < j}` in lexicographic order.
pub fn spin_basis<T: Field>(sys: &CliffordSystem<T>) -> Vec<Matrix<T>> {
    let g = sys.generators();
    let mut out = Vec::new();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            out.push(&g[i] * &g[j]);
        }
    }
    out
}

pub fn isotropy_basis<T: Field>(sys: &CliffordSystem<T>) -> IsotropyBasis<T> {
    IsotropyBasis {
        spin_part: spin_basis(sys),
        centralizer_part: centralizer_basis(sys),
    }
}

/// The quartic `⟨∇F(x), Jx⟩` of a skew `J`.
pub fn preservation_quartic<T: Field>(sys: &CliffordSystem<T>, j: &Matrix<T>) -> Result<QuarticForm<T>, SymmetryError> {
    square_of(j, sys.dim())?;
    if !j.is_skew() {
        return Err(SymmetryError::NotSkew);
    }
    let minus_eight = T::from_i64(-8);
    let mut out = QuarticForm::zero();
    for p in sys.generators() {
        out.add_product(
            &minus_eight,
            &QuadraticForm::from_matrix(p),
            &QuadraticForm::from_matrix(&(p * j)),
        );
    }
    Ok(out)
}

pub fn preserves_foliation<T: Field>(sys: &CliffordSystem<T>, j: &Matrix<T>) -> Result<bool, SymmetryError> {
    Ok(preservation_quartic(sys, j)?.is_zero())
}

/// `(P₀P₁, P₁P₂, P₀P₂)`.
pub fn standard_quaternionic<T: Field>(sys: &CliffordSystem<T>) -> Result<QuaternionicStructure<T>, SymmetryError> {
    if sys.m() < 2 {
        return Err(SymmetryError::TooFewGenerators(sys.m()));
    }
    let g = sys.generators();
    QuaternionicStructure::new(&g[0] * &g[1], &g[1] * &g[2], &g[0] * &g[2])
}

/// Skew basis `E_rc − E_cr` of `so(n)`, `r < c`.
pub fn so_basis<T: Field>(n: usize) -> Vec<Matrix<T>> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for r in 0..n {
        for c in r + 1..n {
            let mut m = Matrix::zeros(n, n);
            m.set(r, c, T::one());
            m.set(c, r, -T::one());
            out.push(m);
        }
    }
    out
}

fn integer_orbit_rank(basis: &[Vec<(usize, usize, i64)>], x: &[i64], n: usize) -> usize {
    let images: Vec<Vec<i64>> = basis
        .iter()
        .map(|a| {
            let mut v = vec![0i64; n];
            for &(r, c, e) in a {
                v[r] += e * x[c];
            }
            v
        })
        .collect();
    let m = Matrix::from_fn(n, basis.len(), |r, c| Integer::from(images[c][r]));
    rank_exact(&m)
}

fn rational_orbit_rank<T: Field>(basis: &[Matrix<T>], p: &[i64], n: usize) -> usize {
    let x: Vec<T> = p.iter().map(|&v| T::from_i64(v)).collect();
    let mut span = Echelon::new(n);
    for a in basis {
        span.insert(SparseRow::from_dense(&a.mul_vec(&x).expect("checked shape")));
        if span.rank() + 1 == n {
            break;
        }
    }
    span.rank()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomogeneityReport {
    pub cohomogeneity: usize,
    pub ambient_dim: usize,
    pub algebra_dim: usize,
    /// Largest orbit dimension seen.
    pub orbit_dim: usize,
    pub trials: usize,
    pub seed: u64,
    /// A sample point attaining `orbit_dim`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximizing_point: Option<Vec<i64>>,
}

/// `ambient_dim − max_x rank{A x : A ∈ basis}` over seeded integer points;
/// an upper bound on the cohomogeneity that is attained at generic points.
pub fn cohomogeneity<T: Field>(
    basis: &[Matrix<T>],
    ambient_dim: usize,
    trials: usize,
    seed: u64,
) -> Result<CohomogeneityReport, SymmetryError> {
    for (i, a) in basis.iter().enumerate() {
        if a.shape() != (ambient_dim, ambient_dim) || !a.is_skew() {
            return Err(SymmetryError::BadBasisElement(i));
        }
    }
    let integral: Option<Vec<Vec<(usize, usize, i64)>>> = basis
        .iter()
        .map(|a| {
            let mut out = Vec::new();
            for r in 0..ambient_dim {
                for (c, v) in a.row_entries(r) {
                    out.push((r, c, v.to_i64_exact()?));
                }
            }
            Some(out)
        })
        .collect();
    let mut best = 0;
    let mut best_point = None;
    if !basis.is_empty() {
        let mut sampler = PointSampler::new(ambient_dim, seed);
        for _ in 0..trials {
            let p = sampler.next_nonzero_point();
            let rank = match &integral {
                Some(sparse) => integer_orbit_rank(sparse, &p, ambient_dim),
                None => rational_orbit_rank(basis, &p, ambient_dim),
            };
            if best_point.is_none() || rank > best {
                best = rank;
                best_point = Some(p);
            }
            // `Ax ⊥ x` for skew `A`, so the orbit dimension is at most n − 1
            if best + 1 == ambient_dim {
                break;
            }
        }
    }
    Ok(CohomogeneityReport {
        cohomogeneity: ambient_dim - best,
        ambient_dim,
        algebra_dim: basis.len(),
        orbit_dim: best,
        trials,
        seed,
        maximizing_point: best_point,
    })
}
