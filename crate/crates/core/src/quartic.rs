//! Sparse quadratic and quartic forms with exact coefficients.
//!
//! A form is stored by its symmetrized coefficients: one entry per monomial
//! (a sorted index tuple), so two forms are equal as polynomials iff their
//! maps agree. This turns "the quartic vanishes identically" into a finite
//! exact check instead of a sampling argument.

use std::collections::BTreeMap;

use crate::exactmat::Matrix;
use crate::scalar::Scalar;

/// `Σ c_ab x_a x_b` over `a ≤ b`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm<T> {
    terms: BTreeMap<(usize, usize), T>,
}

impl<T: Scalar> QuadraticForm<T> {
    /// `x ↦ xᵀ M x`; `M` need not be symmetric.
    pub fn from_matrix(m: &Matrix<T>) -> Self {
        let mut terms: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for r in 0..m.rows() {
            for (c, v) in m.row_entries(r) {
                let key = (r.min(c), r.max(c));
                let e = terms.entry(key).or_insert_with(T::zero);
                *e = e.clone() + v.clone();
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &T)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, (&(a, b), c)| {
            acc + c.clone() * x[a].clone() * x[b].clone()
        })
    }
}

pub type Monomial4 = [u16; 4];

/// Homogeneous quartic keyed by sorted index quadruples.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticForm<T> {
    terms: BTreeMap<Monomial4, T>,
}

impl<T: Scalar> Default for QuarticForm<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> QuarticForm<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// `self += coef · p · q`.
    pub fn add_product(&mut self, coef: &T, p: &QuadraticForm<T>, q: &QuadraticForm<T>) {
        for (&(a, b), cp) in &p.terms {
            let scaled = coef.clone() * cp.clone();
            for (&(c, d), cq) in &q.terms {
                let mut key = [a as u16, b as u16, c as u16, d as u16];
                key.sort_unstable();
                let e = self.terms.entry(key).or_insert_with(T::zero);
                *e = e.clone() + scaled.clone() * cq.clone();
            }
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn first_nonzero(&self) -> Option<(Monomial4, &T)> {
        self.terms.iter().next().map(|(k, v)| (*k, v))
    }

    pub fn eval(&self, x: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, (k, c)| {
            acc + k.iter().fold(c.clone(), |p, &i| p * x[i as usize].clone())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn quadratic_symmetrizes() {
        let m = Matrix::<Rational>::from_i64_rows(&[[1, 2], [0, 3]]).unwrap();
        let f = QuadraticForm::from_matrix(&m);
        assert_eq!(f.term_count(), 3);
        assert_eq!(f.eval(&[q(1), q(1)]), q(6));
        let skew = Matrix::<Rational>::from_i64_rows(&[[0, -1], [1, 0]]).unwrap();
        assert!(QuadraticForm::from_matrix(&skew).is_zero());
    }

    #[test]
    fn quartic_product_matches_evaluation() {
        let a = Matrix::<Rational>::from_i64_rows(&[[1, 1, 0], [1, 0, 2], [0, 2, -1]]).unwrap();
        let b = Matrix::<Rational>::from_i64_rows(&[[0, 1, 1], [1, 2, 0], [1, 0, 0]]).unwrap();
        let (fa, fb) = (QuadraticForm::from_matrix(&a), QuadraticForm::from_matrix(&b));
        let mut quartic = QuarticForm::zero();
        quartic.add_product(&q(3), &fa, &fb);
        for x in [[1, 2, 3], [-1, 0, 4], [2, -3, 1]] {
            let x: Vec<Rational> = x.iter().map(|&v| q(v)).collect();
            assert_eq!(quartic.eval(&x), q(3) * fa.eval(&x) * fb.eval(&x));
        }
    }

    #[test]
    fn cancellation_gives_zero() {
        let a = Matrix::<Rational>::from_i64_rows(&[[1, 0], [0, -1]]).unwrap();
        let f = QuadraticForm::from_matrix(&a);
        let mut quartic = QuarticForm::zero();
        quartic.add_product(&q(1), &f, &f);
        quartic.add_product(&q(-1), &f, &f);
        assert!(quartic.is_zero());
    }
}
