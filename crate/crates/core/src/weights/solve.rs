//! Enumerating `𝒥 = {T : λ(T) ∈ {±1} for every weight λ}` and reducing to the
//! closed Weyl chamber of `B₄`.

use std::cmp::Ordering;

use super::{TorusElement, WeightSystem, WeightsError};
use crate::exactmat::{solve, Echelon, Matrix};
use crate::scalar::Field;

/// The full finite set `𝒥`.
///
/// Fixes signs on a spanning subset of `r` weights (`r` = torus rank), solves
/// each of the `2^r` square systems exactly and keeps the solutions that also
/// satisfy every other weight.
pub fn solve_complex_structures<T: Field>(ws: &WeightSystem<T>) -> Result<Vec<TorusElement<T>>, WeightsError> {
    let r = ws.rank();
    let mut span = Echelon::new(r);
    let mut chosen = Vec::with_capacity(r);
    for w in &ws.weights {
        if span.insert_dense(&w.coords) {
            chosen.push(w);
            if chosen.len() == r {
                break;
            }
        }
    }
    if chosen.len() < r {
        return Err(WeightsError::NotSpanning {
            rank: chosen.len(),
            dim: r,
        });
    }
    let a = Matrix::from_fn(r, r, |i, j| chosen[i].coords[j].clone());
    let one = T::one();
    let mut out: Vec<TorusElement<T>> = Vec::new();
    for pattern in 0u32..(1 << r) {
        let b = Matrix::from_fn(r, 1, |i, _| {
            if pattern >> i & 1 == 1 {
                -one.clone()
            } else {
                one.clone()
            }
        });
        let x = solve(&a, &b).expect("spanning subset gives an invertible system");
        let t = TorusElement::from_coords(x.as_slice());
        let ok = ws.weights.iter().all(|w| {
            let v = w.eval(&t);
            v == one || v == -one.clone()
        });
        if ok && !out.contains(&t) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Representative in `C̄`: spin coordinates made nonnegative and sorted
/// descending (the Weyl group of `B₄` is all signed permutations); the
/// center coordinate is untouched.
pub fn chamber_reduce<T: Field>(t: &TorusElement<T>) -> TorusElement<T> {
    let mut spin = t.spin.clone().map(|v| v.abs());
    spin.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
    TorusElement {
        spin,
        center: t.center.clone(),
    }
}

/// `x₁ˢ ≥ x₂ˢ ≥ x₃ˢ ≥ x₄ˢ ≥ 0`.
pub fn in_chamber<T: Field>(t: &TorusElement<T>) -> bool {
    t.spin.windows(2).all(|w| w[0] >= w[1]) && !t.spin[3].is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::weights::WeightCase;
    use crate::Rational;
    use num_traits::Signed;
    use proptest::prelude::*;

    type Te = TorusElement<Rational>;

    fn chamber_set(case: WeightCase) -> (Vec<Te>, Vec<Te>) {
        let all = solve_complex_structures(&WeightSystem::new(case)).unwrap();
        let filtered: Vec<Te> = all.iter().filter(|t| in_chamber(t)).cloned().collect();
        (all, filtered)
    }

    #[test]
    fn tensor_chamber_set() {
        let (all, filtered) = chamber_set(WeightCase::Tensor);
        let mut labels: Vec<String> = filtered.iter().map(Te::label).collect();
        labels.sort();
        assert_eq!(labels, ["-e", "2e1", "e"]);
        // 8 elements ±2eᵢ plus ±e
        assert_eq!(all.len(), 10);
        for t in &all {
            assert!(all.contains(&t.neg()));
        }
        let mut reduced: Vec<Te> = Vec::new();
        for t in all.iter().map(chamber_reduce) {
            if !reduced.contains(&t) {
                reduced.push(t);
            }
        }
        assert_eq!(reduced.len(), 3);
        assert!(reduced.iter().all(|t| filtered.contains(t)));
    }

    #[test]
    fn double_sum_chamber_set() {
        let (all, filtered) = chamber_set(WeightCase::DoubleSum);
        assert_eq!(filtered, vec![Te::from_i64([2, 0, 0, 0], None)]);
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn every_solution_satisfies_all_weights() {
        for case in [WeightCase::Tensor, WeightCase::DoubleSum] {
            let ws = WeightSystem::<Rational>::new(case);
            for t in solve_complex_structures(&ws).unwrap() {
                for w in &ws.weights {
                    assert_eq!(w.eval(&t).abs(), Rational::from_i64(1));
                }
            }
        }
    }

    #[test]
    fn degenerate_element_rejected() {
        let ws = WeightSystem::new(WeightCase::Tensor);
        let t = Te::from_i64([1, 1, 0, 0], Some(0));
        assert!(ws.weights.iter().any(|w| w.eval(&t) == Rational::from_i64(0)));
        assert!(!solve_complex_structures(&ws).unwrap().contains(&t));
    }

    #[test]
    fn chamber_examples() {
        assert_eq!(
            chamber_reduce(&Te::from_i64([0, -2, 0, 0], Some(3))),
            Te::from_i64([2, 0, 0, 0], Some(3))
        );
        let fixed = Te::from_i64([1, 1, 1, 1], Some(0));
        assert_eq!(chamber_reduce(&fixed), fixed);
    }

    fn signed_permutation(t: &Te, perm: &[usize], signs: u8) -> Te {
        let mut spin = t.spin.clone();
        for (i, &p) in perm.iter().enumerate() {
            spin[i] = if signs >> i & 1 == 1 {
                -t.spin[p].clone()
            } else {
                t.spin[p].clone()
            };
        }
        Te::new(spin, t.center.clone())
    }

    proptest! {
        #[test]
        fn chamber_is_weyl_invariant(
            v in proptest::array::uniform4(-20i64..20),
            c in -5i64..5,
            perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
            signs in 0u8..16,
        ) {
            let t = Te::from_i64(v, Some(c));
            let r = chamber_reduce(&t);
            prop_assert!(in_chamber(&r));
            prop_assert_eq!(chamber_reduce(&r), r.clone());
            prop_assert_eq!(chamber_reduce(&signed_permutation(&t, &perm, signs)), r);
        }
    }
}
