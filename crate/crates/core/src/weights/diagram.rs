//! `B₄` roots, lowest weights, lowest weight diagrams and their automorphisms.

use serde::Serialize;

use super::{inner, linear_label, TorusElement, Weight, WeightSystem, WeightsError};
use crate::exactmat::{solve, MatError, Matrix};
use crate::scalar::Field;

/// Simple roots `αᵢˢ = ωᵢˢ − ωᵢ₊₁ˢ` (`i ≤ 3`) and `α₄ˢ = ω₄ˢ`, padded with a
/// zero center coordinate when the torus has one.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystemB4<T> {
    pub simple: [Vec<T>; 4],
}

impl<T: Field> RootSystemB4<T> {
    pub fn new(torus_rank: usize) -> Self {
        let unit = |i: usize| -> Vec<T> {
            (0..torus_rank)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        };
        let diff = |i: usize| -> Vec<T> { unit(i).into_iter().zip(unit(i + 1)).map(|(a, b)| a - b).collect() };
        Self {
            simple: [diff(0), diff(1), diff(2), unit(3)],
        }
    }

    pub fn rank(&self) -> usize {
        self.simple[0].len()
    }

    /// Positive roots `ωᵢˢ` (short) and `ωᵢˢ ± ωⱼˢ`, `i < j` (long).
    pub fn positive_roots(&self) -> Vec<Vec<T>> {
        let d = self.rank();
        let unit = |i: usize| -> Vec<T> { (0..d).map(|j| if i == j { T::one() } else { T::zero() }).collect() };
        let mut out: Vec<Vec<T>> = (0..4).map(unit).collect();
        for i in 0..4 {
            for j in i + 1..4 {
                for s in [T::one(), -T::one()] {
                    out.push(
                        unit(i)
                            .into_iter()
                            .zip(unit(j))
                            .map(|(a, b)| a + s.clone() * b)
                            .collect(),
                    );
                }
            }
        }
        out
    }

    /// `H_α = 2α/⟨α,α⟩` read in the `e`-basis.
    pub fn coroot(alpha: &[T]) -> Vec<T> {
        let k = T::from_i64(2) / inner(alpha, alpha);
        alpha.iter().map(|v| v.clone() * k.clone()).collect()
    }

    /// Coefficients `n` with `Σ nᵢ αᵢ = v`, if `v` is in the root span.
    pub fn simple_coefficients(&self, v: &[T]) -> Option<Vec<T>> {
        let a = Matrix::from_fn(self.rank(), 4, |r, c| self.simple[c][r].clone());
        let b = Matrix::column(v.to_vec());
        match solve(&a, &b) {
            Ok(x) => Some(x.into_vec()),
            Err(MatError::Inconsistent) => None,
            Err(e) => unreachable!("simple roots are independent: {e}"),
        }
    }
}

/// Weights `λ` with `λ − Σ nᵢαᵢ ∉ Δ_V` for every nonzero `n ∈ ℕ⁴`, checked
/// directly against every other weight.
pub fn lowest_weights<T: Field>(ws: &WeightSystem<T>, roots: &RootSystemB4<T>) -> Vec<Weight<T>> {
    ws.weights
        .iter()
        .filter(|lam| {
            !ws.weights.iter().any(|mu| {
                if mu.coords == lam.coords {
                    return false;
                }
                let diff: Vec<T> = lam
                    .coords
                    .iter()
                    .zip(&mu.coords)
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect();
                roots
                    .simple_coefficients(&diff)
                    .is_some_and(|n| n.iter().all(|c| c.is_integral() && !c.is_negative()))
            })
        })
        .cloned()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeColor {
    White,
    Black,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagramNode<T> {
    pub color: NodeColor,
    pub label: String,
    pub multiplicity: usize,
    pub vector: Vec<T>,
}

impl<T: Field> Serialize for DiagramNode<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("DiagramNode", 3)?;
        st.serialize_field("color", &self.color)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// Directed edge carrying `2⟨from, to⟩ / ⟨to, to⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub label: i64,
}

/// White nodes are the simple roots (indices `0..4`), black nodes the lowest
/// weights. Edges between white nodes carry both Cartan integers, so the
/// `B₄` part has no symmetry of its own.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Field"))]
pub struct LowestWeightDiagram<T> {
    pub nodes: Vec<DiagramNode<T>>,
    pub edges: Vec<DiagramEdge>,
}

impl<T: Field> LowestWeightDiagram<T> {
    pub fn black_nodes(&self) -> impl Iterator<Item = (usize, &DiagramNode<T>)> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.color == NodeColor::Black)
    }

    /// Torus element attached to a node: the coroot of a white node, the
    /// coweight `H_λ` of a black one.
    pub fn node_coweight(&self, i: usize) -> Vec<T> {
        let n = &self.nodes[i];
        match n.color {
            NodeColor::White => RootSystemB4::coroot(&n.vector),
            NodeColor::Black => n.vector.clone(),
        }
    }
}

fn integral_label<T: Field>(a: &DiagramNode<T>, b: &DiagramNode<T>) -> Result<Option<i64>, WeightsError> {
    let ab = inner(&a.vector, &b.vector);
    if ab.is_zero() {
        return Ok(None);
    }
    let v = T::from_i64(2) * ab / inner(&b.vector, &b.vector);
    v.to_i64_exact()
        .map(Some)
        .ok_or_else(|| WeightsError::NonIntegralLabel {
            root: b.label.clone(),
            node: a.label.clone(),
            value: v.to_string(),
        })
}

pub fn build_diagram<T: Field>(
    roots: &RootSystemB4<T>,
    lows: &[Weight<T>],
) -> Result<LowestWeightDiagram<T>, WeightsError> {
    let mut nodes: Vec<DiagramNode<T>> = roots
        .simple
        .iter()
        .enumerate()
        .map(|(i, a)| DiagramNode {
            color: NodeColor::White,
            label: format!("a{}", i + 1),
            multiplicity: 1,
            vector: a.clone(),
        })
        .collect();
    nodes.extend(lows.iter().map(|w| DiagramNode {
        color: NodeColor::Black,
        label: linear_label(&w.coords, "w"),
        multiplicity: w.multiplicity,
        vector: w.coords.clone(),
    }));
    let mut edges = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate().take(4) {
            if i == j {
                continue;
            }
            if let Some(label) = integral_label(a, b)? {
                edges.push(DiagramEdge { from: i, to: j, label });
            }
        }
    }
    edges.sort();
    Ok(LowestWeightDiagram { nodes, edges })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Node permutations preserving color, multiplicity and labeled edges; the
/// identity comes first.
pub fn diagram_automorphisms<T: Field>(d: &LowestWeightDiagram<T>) -> Vec<Vec<usize>> {
    let n = d.nodes.len();
    let mut out: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| {
            d.nodes.iter().enumerate().all(|(i, node)| {
                let img = &d.nodes[p[i]];
                img.color == node.color && img.multiplicity == node.multiplicity
            })
        })
        .filter(|p| {
            let mut mapped: Vec<DiagramEdge> = d
                .edges
                .iter()
                .map(|e| DiagramEdge {
                    from: p[e.from],
                    to: p[e.to],
                    label: e.label,
                })
                .collect();
            mapped.sort();
            mapped == d.edges
        })
        .collect();
    out.sort();
    out
}

/// For each automorphism, the linear map `φ` of the torus (as a matrix on
/// coordinate columns) sending each node's coweight to that of its image.
pub fn induced_torus_maps<T: Field>(
    d: &LowestWeightDiagram<T>,
    autos: &[Vec<usize>],
) -> Result<Vec<Matrix<T>>, WeightsError> {
    let n = d.nodes.len();
    let rank = d.nodes[0].vector.len();
    let sources: Vec<Vec<T>> = (0..n).map(|i| d.node_coweight(i)).collect();
    let s = Matrix::from_fn(n, rank, |r, c| sources[r][c].clone());
    autos
        .iter()
        .map(|p| {
            let t = Matrix::from_fn(n, rank, |r, c| sources[p[r]][c].clone());
            // rows: sᵀ X = tᵀ, so φ = Xᵀ
            solve(&s, &t)
                .map(|x| x.transpose())
                .map_err(|_| WeightsError::NotRealizable(p.clone()))
        })
        .collect()
}

pub(crate) fn apply_map<T: Field>(phi: &Matrix<T>, t: &TorusElement<T>) -> TorusElement<T> {
    TorusElement::from_coords(&phi.mul_vec(&t.coords()).expect("map has torus rank"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::weights::WeightCase;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_i64(n) / Rational::from_i64(d)
    }

    fn setup(
        case: WeightCase,
    ) -> (
        RootSystemB4<Rational>,
        Vec<Weight<Rational>>,
        LowestWeightDiagram<Rational>,
    ) {
        let ws = WeightSystem::new(case);
        let roots = RootSystemB4::new(ws.rank());
        let lows = lowest_weights(&ws, &roots);
        let d = build_diagram(&roots, &lows).unwrap();
        (roots, lows, d)
    }

    #[test]
    fn tensor_lowest_weights() {
        let (_, lows, _) = setup(WeightCase::Tensor);
        let h = q(-1, 2);
        let expect: Vec<Vec<Rational>> = [q(1, 1), q(-1, 1)]
            .into_iter()
            .map(|c| vec![h.clone(), h.clone(), h.clone(), h.clone(), c])
            .collect();
        assert_eq!(lows.iter().map(|w| w.coords.clone()).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn double_sum_lowest_weight() {
        let (_, lows, _) = setup(WeightCase::DoubleSum);
        assert_eq!(lows.len(), 1);
        assert_eq!(lows[0].multiplicity, 2);
        assert_eq!(lows[0].coords, vec![q(-1, 2); 4]);
    }

    #[test]
    fn black_edges_go_to_short_root_with_label_minus_one() {
        for case in [WeightCase::Tensor, WeightCase::DoubleSum] {
            let (_, lows, d) = setup(case);
            let black: Vec<&DiagramEdge> = d.edges.iter().filter(|e| e.from >= 4).collect();
            assert_eq!(black.len(), lows.len());
            assert!(black.iter().all(|e| e.to == 3 && e.label == -1));
        }
    }

    #[test]
    fn label_arithmetic() {
        let roots = RootSystemB4::<Rational>::new(5);
        let lam = vec![q(-1, 2), q(-1, 2), q(-1, 2), q(-1, 2), q(1, 1)];
        assert_eq!(inner(&roots.simple[3], &lam), q(-1, 2));
        assert_eq!(inner(&roots.simple[3], &roots.simple[3]), q(1, 1));
    }

    #[test]
    fn b4_part_is_rigid() {
        let (_, _, d) = setup(WeightCase::DoubleSum);
        let white: Vec<&DiagramEdge> = d.edges.iter().filter(|e| e.from < 4).collect();
        assert!(white.contains(&&DiagramEdge {
            from: 2,
            to: 3,
            label: -2
        }));
        assert!(white.contains(&&DiagramEdge {
            from: 3,
            to: 2,
            label: -1
        }));
        assert_eq!(white.len(), 6);
    }

    #[test]
    fn automorphism_groups() {
        let (_, _, t) = setup(WeightCase::Tensor);
        let autos = diagram_automorphisms(&t);
        assert_eq!(autos, vec![vec![0, 1, 2, 3, 4, 5], vec![0, 1, 2, 3, 5, 4]]);
        let (_, _, d) = setup(WeightCase::DoubleSum);
        assert_eq!(diagram_automorphisms(&d), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn swap_negates_center() {
        let (_, _, t) = setup(WeightCase::Tensor);
        let autos = diagram_automorphisms(&t);
        let maps = induced_torus_maps(&t, &autos).unwrap();
        assert!(maps[0].is_identity());
        let mut expect = Matrix::<Rational>::identity(5);
        expect.set(4, 4, q(-1, 1));
        assert_eq!(maps[1], expect);
        // functoriality: swap ∘ swap = id
        assert!((&maps[1] * &maps[1]).is_identity());
    }

    #[test]
    fn unrealizable_permutation_is_an_error() {
        let (_, _, t) = setup(WeightCase::Tensor);
        // swapping two white nodes is not an automorphism; its linear solve fails
        let bad = vec![1, 0, 2, 3, 4, 5];
        assert_eq!(
            induced_torus_maps(&t, std::slice::from_ref(&bad)),
            Err(WeightsError::NotRealizable(bad))
        );
    }

    #[test]
    fn coroots() {
        let roots = RootSystemB4::<Rational>::new(4);
        let pos = roots.positive_roots();
        assert_eq!(pos.len(), 16);
        assert_eq!(RootSystemB4::coroot(&pos[0]), vec![q(2, 1), q(0, 1), q(0, 1), q(0, 1)]);
        assert_eq!(RootSystemB4::coroot(&pos[4]), pos[4]);
    }
}
