//! Dense exact linear algebra over ℚ: matrices, reduced row echelon form,
//! nullspaces and canonical subspace bases.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

pub type Vector = Vec<Rational>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(target: &mut [Rational], coeff: &Rational, source: &[Rational]) {
    if coeff.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t += coeff * s;
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: zero_vector(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn scalar(value: Rational) -> Self {
        Matrix {
            rows: 1,
            cols: 1,
            data: vec![value],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * s).collect(),
            ..*self
        }
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                let start = i * self.cols;
                add_scaled(&mut self.data[start + c..start + self.cols], &-factor, &pivot_row[c..]);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// One solution of `self·x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of `{v : self·v = 0}`.
    pub fn nullspace(&self) -> SubspaceBasis {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut gens = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = unit_vector(self.cols, free);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(row, free)].clone();
            }
            gens.push(v);
        }
        SubspaceBasis::span(self.cols, gens).expect("nullspace vectors have ambient length")
    }

    /// Column space as a canonical subspace basis.
    pub fn column_space(&self) -> SubspaceBasis {
        SubspaceBasis::span(self.rows, (0..self.cols).map(|j| self.column(j)).collect())
            .expect("columns have ambient length")
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "cannot invert {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of ℚ^d stored as the nonzero rows of its reduced row echelon
/// form. Two bases compare equal exactly when they span the same subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(
            ambient_dim,
            (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
        )
        .expect("unit vectors have ambient length")
    }

    /// Canonical basis of the span of `generators`.
    pub fn span(ambient_dim: usize, generators: Vec<Vector>) -> Result<Self> {
        if generators.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let m = Matrix::from_rows(generators, ambient_dim)?;
        let (reduced, pivots) = m.rref();
        let vectors = (0..pivots.len()).map(|i| reduced.row(i).to_vec()).collect();
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
            pivots,
        })
    }

    /// Span of the coordinate vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        Self::span(
            ambient_dim,
            indices.iter().map(|&i| unit_vector(ambient_dim, i)).collect(),
        )
        .expect("unit vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating every pivot coordinate. Zero
    /// exactly when `v` lies in the subspace; equal for vectors that differ
    /// by an element of the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        for (basis, &p) in self.vectors.iter().zip(&self.pivots) {
            let coeff = out[p].clone();
            if !coeff.is_zero() {
                add_scaled(&mut out, &-coeff, basis);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && is_zero_vector(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.ambient_dim == other.ambient_dim && self.vectors.iter().all(|v| other.contains(v))
    }

    /// Coordinates of `v` with respect to this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Shape(format!(
                "subspaces of dimension {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let gens = self.vectors.iter().chain(&other.vectors).cloned().collect();
        SubspaceBasis::span(self.ambient_dim, gens)
    }

    pub fn extend(&self, more: Vec<Vector>) -> Result<SubspaceBasis> {
        let mut gens = self.vectors.clone();
        gens.extend(more);
        SubspaceBasis::span(self.ambient_dim, gens)
    }

    pub fn intersection(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Shape(format!(
                "subspaces of dimension {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        // Solve Σ aᵢuᵢ = Σ bⱼwⱼ; the a-part of each solution gives a vector.
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Ok(SubspaceBasis::zero(self.ambient_dim));
        }
        let mut columns = self.vectors.clone();
        columns.extend(other.vectors.iter().map(|w| w.iter().map(|x| -x).collect()));
        let system = Matrix::from_columns(&columns, self.ambient_dim)?;
        let gens = system
            .nullspace()
            .vectors()
            .iter()
            .map(|sol| {
                let mut v = zero_vector(self.ambient_dim);
                for (a, u) in sol[..p].iter().zip(&self.vectors) {
                    add_scaled(&mut v, a, u);
                }
                v
            })
            .collect();
        SubspaceBasis::span(self.ambient_dim, gens)
    }

    /// Coordinate indices not used as pivots, i.e. the standard complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|i| !self.pivots.contains(i))
            .collect()
    }
}

impl fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubspaceBasis(ambient {}, [", self.ambient_dim)?;
        for (i, v) in self.vectors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = v.iter().map(format_rational).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
            cols,
        )
        .unwrap()
    }

    #[test]
    fn rref_of_small_matrix() {
        let (r, p) = m(&[&[2, 4, 6], &[1, 2, 4]]).rref();
        assert_eq!(p, vec![0, 2]);
        assert_eq!(r, m(&[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn nullspace_and_rank() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.vectors()[0], vec![int(1), int(-1), int(0)]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn intersection_of_planes() {
        let a = SubspaceBasis::coordinate(3, &[0, 1]);
        let b = SubspaceBasis::span(3, vec![vec![int(1), int(1), int(1)], vec![int(0), int(1), int(0)]])
            .unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, SubspaceBasis::coordinate(3, &[1]));
    }

    #[test]
    fn reduce_is_class_invariant() {
        let s = SubspaceBasis::span(3, vec![vec![int(1), frac(1, 2), int(0)]]).unwrap();
        let v = vec![int(3), int(1), int(7)];
        let w = vec![int(5), int(2), int(7)];
        assert_eq!(s.reduce(&v), s.reduce(&w));
        assert!(s.coordinates(&[int(2), int(1), int(0)]).is_some());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |xs| {
                Matrix::from_rows(
                    xs.chunks(c).map(|ch| ch.iter().map(|&x| int(x)).collect()).collect(),
                    c,
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(a in small_matrix()) {
            prop_assert_eq!(a.rank() + a.nullspace().dim(), a.cols());
            for v in a.nullspace().vectors() {
                prop_assert!(is_zero_vector(&a.apply(v).unwrap()));
            }
        }

        #[test]
        fn span_is_order_independent(a in small_matrix()) {
            let rows = a.row_vectors();
            let mut reversed = rows.clone();
            reversed.reverse();
            let doubled: Vec<Vector> = rows.iter().map(|r| r.iter().map(|x| x * int(2)).collect()).collect();
            let s1 = SubspaceBasis::span(a.cols(), rows).unwrap();
            prop_assert_eq!(&s1, &SubspaceBasis::span(a.cols(), reversed).unwrap());
            prop_assert_eq!(&s1, &SubspaceBasis::span(a.cols(), doubled).unwrap());
        }
    }
}
