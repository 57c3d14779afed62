//! Weight-lattice engine for the two `(8,7)` foliations on `S^31`.
//!
//! The isotropy algebra is `so(9) ⊕ 𝔥` with `𝔥 = so(2)` (tensor case,
//! `(k₊,k₋) = (0,2)`) or `𝔥 = 0` (double-sum case, `(1,1)`). Coordinates on
//! the torus use `e₁ˢ…e₄ˢ, e`; weights use the dual basis `ω₁ˢ…ω₄ˢ, ω`,
//! declared orthonormal. Everything below is exact.

mod classes;
mod diagram;
mod oracle;
mod solve;

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::clifford::ModuleProfile;
use crate::scalar::Field;
use crate::Rational;

pub use classes::{
    congruence_classes, count_quaternionic, structures_report, su2_admissible, ClassSummary, CongruenceClass,
    StructuresReport, Su2Verdict,
};
pub use diagram::{
    build_diagram, diagram_automorphisms, induced_torus_maps, lowest_weights, DiagramEdge, DiagramNode,
    LowestWeightDiagram, NodeColor, RootSystemB4,
};
pub use oracle::joint_eigenspace_dims;
pub use solve::{chamber_reduce, in_chamber, solve_complex_structures};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightsError {
    #[error("weights span only a rank {rank} subspace of the rank {dim} torus")]
    NotSpanning { rank: usize, dim: usize },
    #[error("edge label 2<{root},{node}>/<{root},{root}> = {value} is not an integer")]
    NonIntegralLabel { root: String, node: String, value: String },
    #[error("diagram automorphism {0:?} is not induced by a linear map of the torus")]
    NotRealizable(Vec<usize>),
    #[error("su(2)-admissibility of class {0} is undetermined; resolve manually")]
    Undetermined(String),
    #[error("no weight system is tabulated for profile m={m}, kp={kp}, km={km}")]
    Unsupported { m: usize, kp: usize, km: usize },
    #[error("operators do not form a commuting family of complex structures")]
    NotCommutingComplex,
}

/// How `ρ*^C` decomposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightCase {
    /// `Δ ⊗ C²` under `so(9) ⊕ so(2)`: 32 weights of multiplicity one.
    Tensor,
    /// `Δ ⊕ Δ` under `so(9)`: 16 weights of multiplicity two.
    DoubleSum,
}

impl WeightCase {
    /// The case attached to a Clifford profile, when tabulated.
    pub fn for_profile(profile: ModuleProfile) -> Result<Self, WeightsError> {
        let unsupported = WeightsError::Unsupported {
            m: profile.m,
            kp: profile.k_plus,
            km: profile.k_minus,
        };
        if profile.m != 8 {
            return Err(unsupported);
        }
        match (profile.k_plus, profile.k_minus) {
            (0, 2) | (2, 0) => Ok(Self::Tensor),
            (1, 1) => Ok(Self::DoubleSum),
            _ => Err(unsupported),
        }
    }

    pub fn has_center(self) -> bool {
        self == Self::Tensor
    }

    pub fn torus_rank(self) -> usize {
        4 + usize::from(self.has_center())
    }
}

const SPIN_NAMES: [&str; 4] = ["1", "2", "3", "4"];

/// `Σ c_i b_i` written with the given basis symbol, e.g. `2e1 - e`.
pub(crate) fn linear_label<T: Field>(coords: &[T], letter: &str) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = match SPIN_NAMES.get(i) {
            Some(s) => format!("{letter}{s}"),
            None => letter.to_string(),
        };
        let neg = c.is_negative();
        let abs = c.abs();
        let coef = if abs.is_one() { String::new() } else { format!("{abs}") };
        match (out.is_empty(), neg) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&coef);
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn inner<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn lex_cmp<T: Field>(a: &[T], b: &[T]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// `T = Σ xᵢˢ eᵢˢ + x e`; `center` is `None` when `𝔥 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusElement<T = Rational> {
    pub spin: [T; 4],
    pub center: Option<T>,
}

impl<T: Field> TorusElement<T> {
    pub fn new(spin: [T; 4], center: Option<T>) -> Self {
        Self { spin, center }
    }

    pub fn from_i64(spin: [i64; 4], center: Option<i64>) -> Self {
        Self {
            spin: spin.map(T::from_i64),
            center: center.map(T::from_i64),
        }
    }

    /// Coordinates `(x₁ˢ,…,x₄ˢ[, x])`.
    pub fn coords(&self) -> Vec<T> {
        self.spin.iter().cloned().chain(self.center.clone()).collect()
    }

    pub fn from_coords(c: &[T]) -> Self {
        Self {
            spin: [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()],
            center: c.get(4).cloned(),
        }
    }

    pub fn rank(&self) -> usize {
        4 + usize::from(self.center.is_some())
    }

    pub fn neg(&self) -> Self {
        Self::from_coords(&self.coords().into_iter().map(|v| -v).collect::<Vec<_>>())
    }

    pub fn center_is_zero(&self) -> bool {
        self.center.as_ref().is_none_or(|c| c.is_zero())
    }

    pub fn label(&self) -> String {
        linear_label(&self.coords(), "e")
    }

    /// Lexicographic order on coordinates; used to pick class representatives.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        lex_cmp(&self.coords(), &other.coords())
    }
}

impl<T: Field> fmt::Display for TorusElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl<T: Field> Serialize for TorusElement<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TorusElement", 3)?;
        st.serialize_field("label", &self.label())?;
        st.serialize_field("spin", &self.spin.iter().map(ToString::to_string).collect::<Vec<_>>())?;
        st.serialize_field("center", &self.center.as_ref().map(ToString::to_string))?;
        st.end()
    }
}

/// A weight in the `ω`-basis with its multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight<T = Rational> {
    pub coords: Vec<T>,
    pub multiplicity: usize,
}

impl<T: Field> Weight<T> {
    /// `λ(T)`.
    pub fn eval(&self, t: &TorusElement<T>) -> T {
        inner(&self.coords, &t.coords())
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|v| -v.clone()).collect(),
            multiplicity: self.multiplicity,
        }
    }

    pub fn label(&self) -> String {
        linear_label(&self.coords, "w")
    }
}

impl<T: Field> Serialize for Weight<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Weight", 3)?;
        st.serialize_field("label", &self.label())?;
        st.serialize_field(
            "coords",
            &self.coords.iter().map(ToString::to_string).collect::<Vec<_>>(),
        )?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// Weights of `ρ*^C` on `C^32`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSystem<T = Rational> {
    pub case: WeightCase,
    pub weights: Vec<Weight<T>>,
}

impl<T: Field> WeightSystem<T> {
    /// `½(±ω₁ˢ±ω₂ˢ±ω₃ˢ±ω₄ˢ)[±ω]`.
    pub fn new(case: WeightCase) -> Self {
        let half = T::one() / T::from_i64(2);
        let sign = |bit: bool| if bit { -T::one() } else { T::one() };
        let mut weights = Vec::new();
        for pattern in 0u32..16 {
            let spin: Vec<T> = (0..4)
                .map(|i| sign(pattern >> (3 - i) & 1 == 1) * half.clone())
                .collect();
            match case {
                WeightCase::Tensor => {
                    for c in [T::one(), -T::one()] {
                        let mut coords = spin.clone();
                        coords.push(c);
                        weights.push(Weight {
                            coords,
                            multiplicity: 1,
                        });
                    }
                }
                WeightCase::DoubleSum => weights.push(Weight {
                    coords: spin,
                    multiplicity: 2,
                }),
            }
        }
        Self { case, weights }
    }

    pub fn has_center(&self) -> bool {
        self.case.has_center()
    }

    pub fn rank(&self) -> usize {
        self.case.torus_rank()
    }

    /// `Σ multiplicities`.
    pub fn dimension(&self) -> usize {
        self.weights.iter().map(|w| w.multiplicity).sum()
    }

    pub fn contains(&self, coords: &[T]) -> bool {
        self.weights.iter().any(|w| w.coords == coords)
    }

    pub fn multiplicity_of(&self, coords: &[T]) -> usize {
        self.weights
            .iter()
            .filter(|w| w.coords == coords)
            .map(|w| w.multiplicity)
            .sum()
    }

    pub fn closed_under_negation(&self) -> bool {
        self.weights.iter().all(|w| {
            let n = w.neg();
            self.multiplicity_of(&n.coords) == self.multiplicity_of(&w.coords)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_system_shapes() {
        let t = WeightSystem::<Rational>::new(WeightCase::Tensor);
        assert_eq!(t.weights.len(), 32);
        assert!(t.weights.iter().all(|w| w.multiplicity == 1));
        assert!(t.has_center());
        assert_eq!(t.dimension(), 32);
        let d = WeightSystem::<Rational>::new(WeightCase::DoubleSum);
        assert_eq!(d.weights.len(), 16);
        assert!(d.weights.iter().all(|w| w.multiplicity == 2));
        assert!(!d.has_center());
        assert_eq!(d.dimension(), 32);
        assert!(t.closed_under_negation() && d.closed_under_negation());
    }

    #[test]
    fn case_lookup() {
        let p = |kp, km| ModuleProfile::new(8, kp, km).unwrap();
        assert_eq!(WeightCase::for_profile(p(0, 2)), Ok(WeightCase::Tensor));
        assert_eq!(WeightCase::for_profile(p(2, 0)), Ok(WeightCase::Tensor));
        assert_eq!(WeightCase::for_profile(p(1, 1)), Ok(WeightCase::DoubleSum));
        assert!(WeightCase::for_profile(ModuleProfile::single(4, 4).unwrap()).is_err());
    }

    #[test]
    fn labels() {
        let t = TorusElement::<Rational>::from_i64([2, 0, 0, 0], Some(0));
        assert_eq!(t.label(), "2e1");
        assert_eq!(TorusElement::<Rational>::from_i64([0; 4], Some(-1)).label(), "-e");
        assert_eq!(
            TorusElement::<Rational>::from_i64([1, -1, 0, 0], None).label(),
            "e1 - e2"
        );
        assert_eq!(TorusElement::<Rational>::from_i64([0; 4], None).label(), "0");
        let w = &WeightSystem::<Rational>::new(WeightCase::Tensor).weights[0];
        assert_eq!(w.label(), "1/2w1 + 1/2w2 + 1/2w3 + 1/2w4 + w");
    }
}
