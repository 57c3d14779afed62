//! Congruence classes of preserving complex structures and the quaternionic
//! count.

use serde::Serialize;

use super::diagram::apply_map;
use super::{
    build_diagram, chamber_reduce, diagram_automorphisms, in_chamber, induced_torus_maps, joint_eigenspace_dims,
    linear_label, lowest_weights, solve_complex_structures, DiagramEdge, DiagramNode, RootSystemB4, TorusElement,
    Weight, WeightCase, WeightSystem, WeightsError,
};
use crate::clifford::CliffordSystem;
use crate::exactmat::Matrix;
use crate::munzner::system_tag;
use crate::scalar::Field;
use crate::symmetry::centralizer_basis;

/// An orbit of `Out±` acting on `𝒥 ∩ C̄`; the representative is the
/// lexicographically largest member.
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceClass<T> {
    pub representative: TorusElement<T>,
    pub members: Vec<TorusElement<T>>,
}

/// Orbits under the group generated by `chamber_reduce ∘ φ` for each map and,
/// if requested, `chamber_reduce ∘ (−id)`. Classes are sorted by
/// representative, largest first.
pub fn congruence_classes<T: Field>(
    candidates: &[TorusElement<T>],
    maps: &[Matrix<T>],
    use_minus_id: bool,
) -> Vec<CongruenceClass<T>> {
    let step = |t: &TorusElement<T>| -> Vec<TorusElement<T>> {
        let mut out: Vec<TorusElement<T>> = maps.iter().map(|m| chamber_reduce(&apply_map(m, t))).collect();
        if use_minus_id {
            out.push(chamber_reduce(&t.neg()));
        }
        out
    };
    let mut seen: Vec<TorusElement<T>> = Vec::new();
    let mut classes = Vec::new();
    for c in candidates {
        if seen.contains(c) {
            continue;
        }
        let mut orbit = vec![c.clone()];
        let mut frontier = vec![c.clone()];
        while let Some(t) = frontier.pop() {
            for u in step(&t) {
                if !orbit.contains(&u) {
                    orbit.push(u.clone());
                    frontier.push(u);
                }
            }
        }
        orbit.sort_by(|a, b| b.lex_cmp(a));
        seen.extend(orbit.iter().cloned());
        classes.push(CongruenceClass {
            representative: orbit[0].clone(),
            members: orbit,
        });
    }
    classes.sort_by(|a, b| b.representative.lex_cmp(&a.representative));
    classes
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Su2Verdict {
    /// The element is the coroot of `root`, so it lies in that root's `su(2)`.
    Yes {
        root: String,
    },
    No {
        reason: String,
    },
    Undetermined,
}

/// Decides whether a chamber element lies in an `su(2)` subalgebra, using only
/// the two sufficient tests: a central component rules it out, equality with
/// a `B₄` coroot rules it in.
pub fn su2_admissible<T: Field>(t: &TorusElement<T>, roots: &RootSystemB4<T>) -> Su2Verdict {
    if !t.center_is_zero() {
        return Su2Verdict::No {
            reason: "central component".into(),
        };
    }
    for alpha in roots.positive_roots() {
        let h = RootSystemB4::coroot(&alpha);
        if h[..4] == t.spin[..] {
            return Su2Verdict::Yes {
                root: linear_label(&alpha, "w"),
            };
        }
    }
    Su2Verdict::Undetermined
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct ClassSummary<T: Field> {
    pub representative: TorusElement<T>,
    pub members: Vec<TorusElement<T>>,
    pub su2: Su2Verdict,
}

/// Number of classes whose representative is `su(2)`-admissible.
pub fn count_quaternionic<T: Field>(classes: &[ClassSummary<T>]) -> Result<usize, WeightsError> {
    let mut n = 0;
    for c in classes {
        match c.su2 {
            Su2Verdict::Yes { .. } => n += 1,
            Su2Verdict::No { .. } => {}
            Su2Verdict::Undetermined => return Err(WeightsError::Undetermined(c.representative.label())),
        }
    }
    Ok(n)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct DiagramSummary<T: Field> {
    pub nodes: Vec<DiagramNode<T>>,
    pub edges: Vec<DiagramEdge>,
    pub automorphism_order: usize,
    /// Images of `e1, …, e4[, e]` under each induced torus map.
    pub induced_maps: Vec<Vec<String>>,
}

/// Everything the structures pipeline derives for one `(8,7)` system.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct StructuresReport<T: Field> {
    pub foliation: String,
    pub case: WeightCase,
    /// Weights agree with the joint eigenspaces of the actual system.
    pub weights_match_system: bool,
    pub lowest_weights: Vec<Weight<T>>,
    /// `|𝒥|` before chamber reduction.
    pub j_total: usize,
    #[serde(rename = "J_chamber")]
    pub j_chamber: Vec<TorusElement<T>>,
    #[serde(rename = "N_C")]
    pub n_c: usize,
    pub classes: Vec<ClassSummary<T>>,
    #[serde(rename = "N_H")]
    pub n_h: usize,
    pub diagram: DiagramSummary<T>,
}

fn weights_from_system<T: Field>(sys: &CliffordSystem<T>) -> Result<WeightSystem<T>, WeightsError> {
    let case = WeightCase::for_profile(sys.profile())?;
    let g = sys.generators();
    let mut ops: Vec<Matrix<T>> = (0..4).map(|k| &g[2 * k] * &g[2 * k + 1]).collect();
    ops.extend(centralizer_basis(sys));
    if ops.len() != case.torus_rank() {
        return Err(WeightsError::NotCommutingComplex);
    }
    let half = T::one() / T::from_i64(2);
    let weights = joint_eigenspace_dims(&ops)?
        .into_iter()
        .map(|(signs, dim)| Weight {
            coords: signs
                .iter()
                .enumerate()
                .map(|(k, &s)| {
                    let v = T::from_i64(i64::from(s));
                    if k < 4 {
                        v * half.clone()
                    } else {
                        v
                    }
                })
                .collect(),
            multiplicity: dim,
        })
        .collect();
    Ok(WeightSystem { case, weights })
}

fn same_multiset<T: Field>(a: &WeightSystem<T>, b: &WeightSystem<T>) -> bool {
    a.dimension() == b.dimension()
        && a.weights
            .iter()
            .all(|w| b.multiplicity_of(&w.coords) == a.multiplicity_of(&w.coords))
        && b.weights.iter().all(|w| a.contains(&w.coords))
}

/// Runs the full pipeline on an `(8,7)` Clifford system.
pub fn structures_report<T: Field>(sys: &CliffordSystem<T>) -> Result<StructuresReport<T>, WeightsError> {
    let case = WeightCase::for_profile(sys.profile())?;
    let ws = WeightSystem::new(case);
    let observed = weights_from_system(sys)?;
    let all = solve_complex_structures(&ws)?;
    let mut j_chamber: Vec<TorusElement<T>> = all.iter().filter(|t| in_chamber(t)).cloned().collect();
    j_chamber.sort_by(|a, b| b.lex_cmp(a));

    let roots = RootSystemB4::new(ws.rank());
    let lows = lowest_weights(&ws, &roots);
    let diagram = build_diagram(&roots, &lows)?;
    let autos = diagram_automorphisms(&diagram);
    let maps = induced_torus_maps(&diagram, &autos)?;

    let classes: Vec<ClassSummary<T>> = congruence_classes(&j_chamber, &maps, true)
        .into_iter()
        .map(|c| ClassSummary {
            su2: su2_admissible(&c.representative, &roots),
            representative: c.representative,
            members: c.members,
        })
        .collect();
    let n_h = count_quaternionic(&classes)?;

    let rank = ws.rank();
    let induced_maps = maps
        .iter()
        .map(|m| {
            (0..rank)
                .map(|c| linear_label(&(0..rank).map(|r| m.get(r, c).clone()).collect::<Vec<_>>(), "e"))
                .collect()
        })
        .collect();
    Ok(StructuresReport {
        foliation: system_tag(sys.profile()),
        case,
        weights_match_system: same_multiset(&ws, &observed),
        lowest_weights: lows,
        j_total: all.len(),
        j_chamber,
        n_c: classes.len(),
        classes,
        n_h,
        diagram: DiagramSummary {
            nodes: diagram.nodes,
            edges: diagram.edges,
            automorphism_order: autos.len(),
            induced_maps,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_system, ModuleProfile};
    use crate::Rational;

    type Te = TorusElement<Rational>;

    fn report(kp: usize, km: usize) -> StructuresReport<Rational> {
        let sys = build_system::<Rational>(ModuleProfile::new(8, kp, km).unwrap()).unwrap();
        structures_report(&sys).unwrap()
    }

    #[test]
    fn tensor_pipeline() {
        let r = report(0, 2);
        assert!(r.weights_match_system);
        assert_eq!(r.foliation, "F_(8,7)");
        assert_eq!(r.n_c, 2);
        assert_eq!(r.n_h, 1);
        let reps: Vec<String> = r.classes.iter().map(|c| c.representative.label()).collect();
        assert_eq!(reps, ["2e1", "e"]);
        assert_eq!(r.classes[1].members.len(), 2);
        assert!(matches!(r.classes[0].su2, Su2Verdict::Yes { ref root } if root == "w1"));
        assert!(matches!(r.classes[1].su2, Su2Verdict::No { .. }));
        assert_eq!(r.diagram.automorphism_order, 2);
        assert_eq!(r.diagram.induced_maps[1], ["e1", "e2", "e3", "e4", "-e"]);
    }

    #[test]
    fn double_sum_pipeline() {
        let r = report(1, 1);
        assert!(r.weights_match_system);
        assert_eq!(r.foliation, "F_u(8,7)");
        assert_eq!((r.n_c, r.n_h), (1, 1));
        assert_eq!(r.diagram.automorphism_order, 1);
        assert_eq!(r.j_chamber, vec![Te::from_i64([2, 0, 0, 0], None)]);
    }

    #[test]
    fn json_keys() {
        let v = serde_json::to_value(report(0, 2)).unwrap();
        for key in ["J_chamber", "N_C", "classes", "N_H", "diagram"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["diagram"]["automorphism_order"], 2);
        assert_eq!(v["J_chamber"][0]["label"], "2e1");
    }

    #[test]
    fn identity_only_gives_singletons() {
        let cands = vec![
            Te::from_i64([2, 0, 0, 0], Some(0)),
            Te::from_i64([0; 4], Some(1)),
            Te::from_i64([0; 4], Some(-1)),
        ];
        let classes = congruence_classes(&cands, &[Matrix::identity(5)], false);
        assert_eq!(classes.len(), 3);
        let mut shuffled = cands.clone();
        shuffled.reverse();
        let a = congruence_classes(&cands, &[Matrix::identity(5)], true);
        let b = congruence_classes(&shuffled, &[Matrix::identity(5)], true);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn su2_examples() {
        let roots = RootSystemB4::<Rational>::new(5);
        assert!(matches!(
            su2_admissible(&Te::from_i64([0; 4], Some(1)), &roots),
            Su2Verdict::No { .. }
        ));
        assert_eq!(
            su2_admissible(&Te::from_i64([2, 0, 0, 0], Some(0)), &roots),
            Su2Verdict::Yes { root: "w1".into() }
        );
        assert_eq!(
            su2_admissible(&Te::from_i64([1, 1, 0, 0], Some(0)), &roots),
            Su2Verdict::Yes { root: "w1 + w2".into() }
        );
        assert_eq!(
            su2_admissible(&Te::from_i64([3, 0, 0, 0], Some(0)), &roots),
            Su2Verdict::Undetermined
        );
    }

    #[test]
    fn quaternionic_count_edge_cases() {
        assert_eq!(count_quaternionic::<Rational>(&[]), Ok(0));
        let undetermined = ClassSummary {
            representative: Te::from_i64([3, 0, 0, 0], None),
            members: vec![],
            su2: Su2Verdict::Undetermined,
        };
        assert_eq!(
            count_quaternionic(&[undetermined]),
            Err(WeightsError::Undetermined("3e1".into()))
        );
    }
}
