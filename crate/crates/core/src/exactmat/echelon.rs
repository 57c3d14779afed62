//! Sparse row-echelon engine for kernels, membership tests and exact solves.
//!
//! Rows are inserted one at a time and reduced against the pivots seen so far,
//! so a stacked system never has to be materialised densely. The systems met
//! in this crate (commutator equations against signed-permutation generators)
//! have two nonzeros per row and stay that sparse under reduction.

use num_integer::Integer;

use super::{MatError, Matrix};
use crate::scalar::Field;

/// Sorted `(column, value)` pairs with no stored zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseRow<T> {
    entries: Vec<(usize, T)>,
}

impl<T: Field> SparseRow<T> {
    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn from_dense(values: &[T]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    /// Accepts unsorted entries with repeated columns; repeats are summed.
    pub fn from_entries(mut raw: Vec<(usize, T)>) -> Self {
        raw.sort_by_key(|(c, _)| *c);
        let mut entries: Vec<(usize, T)> = Vec::with_capacity(raw.len());
        for (c, v) in raw {
            match entries.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
                _ => entries.push((c, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        Self { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lead(&self) -> Option<(usize, &T)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn entries(&self) -> &[(usize, T)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn scaled(&self, s: &T) -> Self {
        Self {
            entries: self.entries.iter().map(|(c, v)| (*c, v.clone() * s.clone())).collect(),
        }
    }

    /// `self − coef·other`.
    fn minus_scaled(&self, coef: &T, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let left = self.entries.get(i);
            let right = other.entries.get(j);
            match (left, right) {
                (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                    let v = va.clone() - coef.clone() * vb.clone();
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((ca, va)), Some((cb, _))) if ca < cb => {
                    out.push((*ca, va.clone()));
                    i += 1;
                }
                (Some((ca, va)), None) => {
                    out.push((*ca, va.clone()));
                    i += 1;
                }
                (_, Some((cb, vb))) => {
                    out.push((*cb, -(coef.clone() * vb.clone())));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Self { entries: out }
    }
}

/// Incrementally built row-echelon basis of a row space.
#[derive(Debug, Clone)]
pub struct Echelon<T> {
    cols: usize,
    pivot_of: Vec<Option<usize>>,
    rows: Vec<SparseRow<T>>,
}

impl<T: Field> Echelon<T> {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            pivot_of: vec![None; cols],
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` until its leading column carries no pivot.
    pub fn reduce(&self, mut row: SparseRow<T>) -> SparseRow<T> {
        while let Some((c, v)) = row.lead() {
            let Some(p) = self.pivot_of[c] else { break };
            let coef = v.clone();
            row = row.minus_scaled(&coef, &self.rows[p]);
        }
        row
    }

    /// Adds a row; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow<T>) -> bool {
        debug_assert!(row.entries.iter().all(|(c, _)| *c < self.cols));
        let reduced = self.reduce(row);
        let Some((c, v)) = reduced.lead() else {
            return false;
        };
        let inv = T::one() / v.clone();
        let normalized = reduced.scaled(&inv);
        self.pivot_of[c] = Some(self.rows.len());
        self.rows.push(normalized);
        true
    }

    pub fn insert_dense(&mut self, row: &[T]) -> bool {
        self.insert(SparseRow::from_dense(row))
    }

    pub fn contains(&self, row: SparseRow<T>) -> bool {
        self.reduce(row).is_zero()
    }

    pub fn contains_dense(&self, row: &[T]) -> bool {
        self.contains(SparseRow::from_dense(row))
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cols).filter(|&c| self.pivot_of[c].is_some())
    }

    pub fn free_columns(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cols).filter(|&c| self.pivot_of[c].is_none())
    }

    /// The unique vector in the null space with the given values on the free
    /// columns (unlisted free columns are zero).
    fn back_substitute(&self, fixed: &[(usize, T)]) -> Vec<T> {
        let mut v = vec![T::zero(); self.cols];
        for (c, val) in fixed {
            v[*c] = val.clone();
        }
        for c in (0..self.cols).rev() {
            let Some(p) = self.pivot_of[c] else { continue };
            let row = &self.rows[p];
            let s = row.entries[1..]
                .iter()
                .filter(|(j, _)| !v[*j].is_zero())
                .fold(T::zero(), |acc, (j, a)| acc + a.clone() * v[*j].clone());
            v[c] = -s;
        }
        v
    }

    /// Basis of the null space of the inserted rows, one vector per free
    /// column, scaled to primitive integers where denominators allow.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        self.free_columns()
            .collect::<Vec<_>>()
            .into_iter()
            .map(|f| primitive(self.back_substitute(&[(f, T::one())])))
            .collect()
    }
}

/// Clears denominators and common factors when everything fits in `i64`.
fn primitive<T: Field>(v: Vec<T>) -> Vec<T> {
    let mut lcm: i64 = 1;
    for x in &v {
        let Some(d) = x.denominator_i64() else { return v };
        let next = lcm / lcm.gcd(&d);
        match next.checked_mul(d) {
            Some(l) => lcm = l,
            None => return v,
        }
    }
    let scale = T::from_i64(lcm);
    let scaled: Vec<T> = v.iter().map(|x| x.clone() * scale.clone()).collect();
    let mut g: i64 = 0;
    for x in &scaled {
        match x.to_i64_exact() {
            Some(n) => g = g.gcd(&n),
            None => return scaled,
        }
    }
    if g <= 1 {
        return scaled;
    }
    let gs = T::from_i64(g);
    scaled.into_iter().map(|x| x / gs.clone()).collect()
}

/// Null-space basis of `a` as column vectors; each `v` satisfies `a·v = 0`.
pub fn kernel_basis<T: Field>(a: &Matrix<T>) -> Vec<Matrix<T>> {
    let mut ech = Echelon::new(a.cols());
    for r in 0..a.rows() {
        ech.insert_dense(a.row(r));
    }
    ech.kernel().into_iter().map(Matrix::column).collect()
}

/// The unique `x` with `a·x = b`.
pub fn solve<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>, MatError> {
    if a.rows() != b.rows() {
        return Err(MatError::DimensionMismatch {
            op: "solve",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let n = a.cols();
    let mut columns = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        let mut ech = Echelon::new(n + 1);
        for r in 0..a.rows() {
            let mut row = a.row(r).to_vec();
            row.push(b.get(r, j).clone());
            ech.insert_dense(&row);
        }
        if ech.pivot_of[n].is_some() {
            return Err(MatError::Inconsistent);
        }
        let free = ech.free_columns().count() - 1;
        if free > 0 {
            return Err(MatError::NotUnique(free));
        }
        let mut x = ech.back_substitute(&[(n, -T::one())]);
        x.truncate(n);
        columns.push(x);
    }
    Ok(Matrix::from_fn(n, b.cols(), |r, c| columns[c][r].clone()))
}
