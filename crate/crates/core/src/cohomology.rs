//! Representation pairs `(l, r)` of an algebra on a vector space `h`, and
//! the spaces of 2-cocycles, 2-coboundaries and their quotient.

use num_traits::Zero;

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, zero_vector, Matrix, SubspaceBasis, Vector};
use crate::rational::Rational;

/// Left and right actions of `g` on an `m`-dimensional space, one `m×m`
/// matrix per basis vector of `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationPair {
    g: AlgebraTable,
    h_dim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl RepresentationPair {
    pub fn new(g: AlgebraTable, h_dim: usize, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        let n = g.dim();
        if l.len() != n || r.len() != n {
            return Err(Error::Shape(format!(
                "need {n} left and right matrices, got {} and {}",
                l.len(),
                r.len()
            )));
        }
        for m in l.iter().chain(&r) {
            if m.rows() != h_dim || m.cols() != h_dim {
                return Err(Error::Shape(format!(
                    "action matrix is {}x{}, expected {h_dim}x{h_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(RepresentationPair { g, h_dim, l, r })
    }

    pub fn zero(g: AlgebraTable, h_dim: usize) -> Self {
        let n = g.dim();
        let zeros = vec![Matrix::zeros(h_dim, h_dim); n];
        RepresentationPair {
            g,
            h_dim,
            l: zeros.clone(),
            r: zeros,
        }
    }

    /// One-dimensional `h` where basis vector `i` acts by the scalars
    /// `left[i]` and `right[i]`.
    pub fn scalar(g: AlgebraTable, left: &[Rational], right: &[Rational]) -> Result<Self> {
        let l = left.iter().cloned().map(Matrix::scalar).collect();
        let r = right.iter().cloned().map(Matrix::scalar).collect();
        Self::new(g, 1, l, r)
    }

    pub fn g(&self) -> &AlgebraTable {
        &self.g
    }

    pub fn g_dim(&self) -> usize {
        self.g.dim()
    }

    pub fn h_dim(&self) -> usize {
        self.h_dim
    }

    pub fn left(&self, i: usize) -> &Matrix {
        &self.l[i]
    }

    pub fn right(&self, i: usize) -> &Matrix {
        &self.r[i]
    }

    pub fn left_matrices(&self) -> &[Matrix] {
        &self.l
    }

    pub fn right_matrices(&self) -> &[Matrix] {
        &self.r
    }

    /// `l_v` for an arbitrary `v ∈ g`.
    pub fn left_of(&self, v: &[Rational]) -> Matrix {
        combine(&self.l, v, self.h_dim)
    }

    /// `r_v` for an arbitrary `v ∈ g`.
    pub fn right_of(&self, v: &[Rational]) -> Matrix {
        combine(&self.r, v, self.h_dim)
    }

    /// Checks `r_[x,y] = r_y r_x − r_x r_y`, `l_[x,y] = r_y l_x − l_x r_y`
    /// and `l_x l_y = −l_x r_y` on all basis pairs.
    pub fn rep_check(&self) -> RepReport {
        let n = self.g_dim();
        let mut violations = Vec::new();
        let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("square actions");
        for x in 0..n {
            for y in 0..n {
                let xy = self.g.basis_bracket(x, y);
                let (rx, ry, lx, ly) = (&self.r[x], &self.r[y], &self.l[x], &self.l[y]);
                let right = mul(ry, rx).sub(&mul(rx, ry)).expect("same shape");
                if self.right_of(xy) != right {
                    violations.push(RepViolation { identity: RepIdentity::RightBracket, x, y });
                }
                let left = mul(ry, lx).sub(&mul(lx, ry)).expect("same shape");
                if self.left_of(xy) != left {
                    violations.push(RepViolation { identity: RepIdentity::LeftBracket, x, y });
                }
                if !mul(lx, ly).add(&mul(lx, ry)).expect("same shape").is_zero() {
                    violations.push(RepViolation { identity: RepIdentity::LeftComposition, x, y });
                }
            }
        }
        RepReport { violations }
    }

    /// Whether every vector of `s` acts by zero on both sides.
    pub fn vanishes_on(&self, s: &SubspaceBasis) -> bool {
        s.vectors().iter().all(|v| self.left_of(v).is_zero() && self.right_of(v).is_zero())
    }

    /// Whether `l_{φ(x)} = l_x` and `r_{φ(x)} = r_x` for all basis `x`.
    pub fn is_preserved_by(&self, phi: &Matrix) -> bool {
        (0..self.g_dim()).all(|i| {
            let col = phi.column(i);
            self.left_of(&col) == self.l[i] && self.right_of(&col) == self.r[i]
        })
    }
}

fn combine(mats: &[Matrix], v: &[Rational], m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (coeff, mat) in v.iter().zip(mats) {
        if !coeff.is_zero() {
            out = out.add(&mat.scale(coeff)).expect("same shape");
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepIdentity {
    /// `r_[x,y] = r_y r_x − r_x r_y`
    RightBracket,
    /// `l_[x,y] = r_y l_x − l_x r_y`
    LeftBracket,
    /// `l_x l_y = −l_x r_y`
    LeftComposition,
}

impl RepIdentity {
    pub fn name(self) -> &'static str {
        match self {
            RepIdentity::RightBracket => "r[x,y] = r_y r_x - r_x r_y",
            RepIdentity::LeftBracket => "l[x,y] = r_y l_x - l_x r_y",
            RepIdentity::LeftComposition => "l_x l_y = -l_x r_y",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepViolation {
    pub identity: RepIdentity,
    pub x: usize,
    pub y: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepReport {
    pub violations: Vec<RepViolation>,
}

impl RepReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A bilinear map `ω: g ⊗ g → h`, stored as `n·n·m` coordinates with
/// `ω(eᵢ,eⱼ)` at `(i*n + j)*m ..`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    g_dim: usize,
    h_dim: usize,
    coords: Vec<Rational>,
}

impl BilinearMap {
    pub fn zero(g_dim: usize, h_dim: usize) -> Self {
        BilinearMap {
            g_dim,
            h_dim,
            coords: zero_vector(g_dim * g_dim * h_dim),
        }
    }

    pub fn from_vector(g_dim: usize, h_dim: usize, coords: Vector) -> Result<Self> {
        if coords.len() != g_dim * g_dim * h_dim {
            return Err(Error::Shape(format!(
                "bilinear map needs {} coordinates, got {}",
                g_dim * g_dim * h_dim,
                coords.len()
            )));
        }
        Ok(BilinearMap { g_dim, h_dim, coords })
    }

    /// Builds a map with `h = ℚ` from `(i, j, value)` entries.
    pub fn scalar_entries(g_dim: usize, entries: &[(usize, usize, Rational)]) -> Self {
        let mut w = Self::zero(g_dim, 1);
        for (i, j, v) in entries {
            w.coords[i * g_dim + j] += v;
        }
        w
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn h_dim(&self) -> usize {
        self.h_dim
    }

    pub fn as_vector(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_vector(self) -> Vector {
        self.coords
    }

    pub fn get(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.g_dim + j) * self.h_dim;
        &self.coords[start..start + self.h_dim]
    }

    pub fn set(&mut self, i: usize, j: usize, value: &[Rational]) {
        let start = (i * self.g_dim + j) * self.h_dim;
        self.coords[start..start + self.h_dim].clone_from_slice(value);
    }

    /// `ω(u, v)` for arbitrary vectors.
    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.h_dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    add_scaled(&mut out, &(a * b), self.get(i, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        BilinearMap { coords, ..*self }
    }

    pub fn sub(&self, other: &BilinearMap) -> BilinearMap {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        BilinearMap { coords, ..*self }
    }

    pub fn scale(&self, s: &Rational) -> BilinearMap {
        BilinearMap {
            coords: self.coords.iter().map(|a| a * s).collect(),
            ..*self
        }
    }

    /// Nonzero entries as `(i, j, ω(eᵢ,eⱼ))`.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.g_dim {
            for j in 0..self.g_dim {
                let v = self.get(i, j);
                if !is_zero_vector(v) {
                    out.push((i, j, v.to_vec()));
                }
            }
        }
        out
    }

    /// Evaluates the cocycle identity
    /// `ω([x,y],z) − ω(x,[y,z]) − ω([x,z],y) − l_x ω(y,z) − r_y ω(x,z) + r_z ω(x,y)`
    /// on every basis triple and lists the triples where it is nonzero.
    pub fn cocycle_check(&self, rep: &RepresentationPair) -> CocycleReport {
        let n = rep.g_dim();
        let g = rep.g();
        let mut violations = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let ex = crate::linalg::unit_vector(n, x);
                    let ey = crate::linalg::unit_vector(n, y);
                    let ez = crate::linalg::unit_vector(n, z);
                    let mut total = self.eval(g.basis_bracket(x, y), &ez);
                    let minus = |t: &mut Vector, v: &[Rational]| {
                        add_scaled(t, &Rational::from_integer((-1).into()), v)
                    };
                    minus(&mut total, &self.eval(&ex, g.basis_bracket(y, z)));
                    minus(&mut total, &self.eval(g.basis_bracket(x, z), &ey));
                    minus(&mut total, &rep.left(x).apply(self.get(y, z)).expect("h_dim"));
                    minus(&mut total, &rep.right(y).apply(self.get(x, z)).expect("h_dim"));
                    add_scaled(
                        &mut total,
                        &Rational::from_integer(1.into()),
                        &rep.right(z).apply(self.get(x, y)).expect("h_dim"),
                    );
                    if !is_zero_vector(&total) {
                        violations.push((x, y, z));
                    }
                }
            }
        }
        CocycleReport { violations }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleReport {
    pub violations: Vec<(usize, usize, usize)>,
}

impl CocycleReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A linear map `f: g → h` as an `m×n` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearHom {
    pub matrix: Matrix,
}

impl LinearHom {
    /// `df(x,y) = f([x,y]) − l_{φ(x)} f(y) − r_{φ(y)} f(x)` with `φ` the
    /// identity.
    pub fn coboundary(&self, rep: &RepresentationPair) -> BilinearMap {
        let n = rep.g_dim();
        self.coboundary_with(rep, &Matrix::identity(n))
    }

    pub fn coboundary_with(&self, rep: &RepresentationPair, phi: &Matrix) -> BilinearMap {
        let n = rep.g_dim();
        let g = rep.g();
        let f_col = |i: usize| self.matrix.column(i);
        let mut w = BilinearMap::zero(n, rep.h_dim());
        for x in 0..n {
            let lx = rep.left_of(&phi.column(x));
            for y in 0..n {
                let ry = rep.right_of(&phi.column(y));
                let mut v = self.matrix.apply(g.basis_bracket(x, y)).expect("f is m×n");
                let minus_one = Rational::from_integer((-1).into());
                add_scaled(&mut v, &minus_one, &lx.apply(&f_col(y)).expect("h_dim"));
                add_scaled(&mut v, &minus_one, &ry.apply(&f_col(x)).expect("h_dim"));
                w.set(x, y, &v);
            }
        }
        w
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CocycleKind {
    Z2,
    B2,
}

/// A subspace of bilinear maps, either the cocycles or the coboundaries of
/// a representation pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleSpace {
    pub kind: CocycleKind,
    pub basis: SubspaceBasis,
}

impl CocycleSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn contains(&self, w: &BilinearMap) -> bool {
        self.basis.contains(w.as_vector())
    }
}

/// The linear system whose nullspace is `Z²`: one row per basis triple
/// `(x,y,z)` (lexicographic) and `h`-coordinate, one column per coordinate
/// of `ω`.
pub fn cocycle_system(rep: &RepresentationPair) -> Matrix {
    let n = rep.g_dim();
    let m = rep.h_dim();
    let g = rep.g();
    let idx = |i: usize, j: usize, a: usize| (i * n + j) * m + a;
    let mut rows = Vec::with_capacity(n * n * n * m);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for a in 0..m {
                    let mut row = zero_vector(n * n * m);
                    for k in 0..n {
                        row[idx(k, z, a)] += g.structure(x, y, k);
                        row[idx(x, k, a)] -= g.structure(y, z, k);
                        row[idx(k, y, a)] -= g.structure(x, z, k);
                    }
                    for b in 0..m {
                        row[idx(y, z, b)] -= &rep.left(x)[(a, b)];
                        row[idx(x, z, b)] -= &rep.right(y)[(a, b)];
                        row[idx(x, y, b)] += &rep.right(z)[(a, b)];
                    }
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(rows, n * n * m).expect("rows of length n²m")
}

pub fn compute_z2(rep: &RepresentationPair) -> CocycleSpace {
    CocycleSpace {
        kind: CocycleKind::Z2,
        basis: cocycle_system(rep).nullspace(),
    }
}

pub fn compute_b2(rep: &RepresentationPair) -> CocycleSpace {
    compute_b2_with(rep, &Matrix::identity(rep.g_dim()))
}

/// Matrix of `f ↦ df`, with `f` flattened as `a·n + t` for `f(e_t) = h_a`.
fn coboundary_matrix(rep: &RepresentationPair, phi: &Matrix) -> Vec<Vector> {
    let n = rep.g_dim();
    let m = rep.h_dim();
    let mut images = Vec::with_capacity(n * m);
    for a in 0..m {
        for t in 0..n {
            let mut f = Matrix::zeros(m, n);
            f[(a, t)] = Rational::from_integer(1.into());
            images.push(LinearHom { matrix: f }.coboundary_with(rep, phi).into_vector());
        }
    }
    images
}

/// Some `f` with `df = ω`, or `None` if `ω` is not a coboundary.
pub fn coboundary_preimage(rep: &RepresentationPair, w: &BilinearMap) -> Option<LinearHom> {
    let n = rep.g_dim();
    let m = rep.h_dim();
    let columns = coboundary_matrix(rep, &Matrix::identity(n));
    let a = Matrix::from_columns(&columns, n * n * m).expect("images of length n²m");
    let x = a.solve(w.as_vector()).ok()??;
    let mut f = Matrix::zeros(m, n);
    for (k, v) in x.into_iter().enumerate() {
        f[(k / n, k % n)] = v;
    }
    Some(LinearHom { matrix: f })
}

/// `B²` computed with the coboundary twisted by `φ`.
pub fn compute_b2_with(rep: &RepresentationPair, phi: &Matrix) -> CocycleSpace {
    let n = rep.g_dim();
    let m = rep.h_dim();
    let images = coboundary_matrix(rep, phi);
    CocycleSpace {
        kind: CocycleKind::B2,
        basis: SubspaceBasis::span(n * n * m, images).expect("images of length n²m"),
    }
}

/// `Z²`, `B²` and a canonical basis of `Z²/B²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondCohomology {
    pub z2: CocycleSpace,
    pub b2: CocycleSpace,
    /// Canonical basis of the `Z²` vectors reduced modulo `B²`.
    quotient: SubspaceBasis,
    g_dim: usize,
    h_dim: usize,
}

impl SecondCohomology {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn representatives(&self) -> Vec<BilinearMap> {
        self.quotient
            .vectors()
            .iter()
            .map(|v| BilinearMap::from_vector(self.g_dim, self.h_dim, v.clone()).expect("shape"))
            .collect()
    }

    /// Reduction of `ω` modulo `B²`; equal for cohomologous cocycles.
    pub fn reduce(&self, w: &BilinearMap) -> Vector {
        self.b2.basis.reduce(w.as_vector())
    }

    pub fn is_coboundary(&self, w: &BilinearMap) -> bool {
        self.b2.contains(w)
    }

    /// Coordinates of the class of `ω` in terms of [`Self::representatives`],
    /// or `None` if `ω` is not a cocycle.
    pub fn class_coordinates(&self, w: &BilinearMap) -> Option<Vector> {
        if !self.z2.contains(w) {
            return None;
        }
        self.quotient.coordinates(&self.reduce(w))
    }

    /// The cocycle `Σ cᵢ repᵢ`.
    pub fn class_from_coordinates(&self, coords: &[Rational]) -> BilinearMap {
        let mut v = zero_vector(self.g_dim * self.g_dim * self.h_dim);
        for (c, rep) in coords.iter().zip(self.quotient.vectors()) {
            add_scaled(&mut v, c, rep);
        }
        BilinearMap::from_vector(self.g_dim, self.h_dim, v).expect("shape")
    }
}

pub fn compute_h2(rep: &RepresentationPair) -> SecondCohomology {
    let z2 = compute_z2(rep);
    let b2 = compute_b2(rep);
    let reduced = z2.basis.vectors().iter().map(|v| b2.basis.reduce(v)).collect();
    let quotient = SubspaceBasis::span(z2.basis.ambient_dim(), reduced).expect("shape");
    SecondCohomology {
        z2,
        b2,
        quotient,
        g_dim: rep.g_dim(),
        h_dim: rep.h_dim(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbered_labels;
    use crate::rational::int;

    fn abelian(n: usize) -> AlgebraTable {
        AlgebraTable::abelian("A", numbered_labels("e", n)).unwrap()
    }

    #[test]
    fn zero_rep_on_abelian() {
        let rep = RepresentationPair::zero(abelian(2), 1);
        assert!(rep.rep_check().holds());
        let h2 = compute_h2(&rep);
        assert_eq!(h2.z2.dim(), 4);
        assert_eq!(h2.b2.dim(), 0);
        assert_eq!(h2.dim(), 4);
    }

    #[test]
    fn zero_cocycle_always_passes() {
        let rep = RepresentationPair::zero(abelian(3), 2);
        assert!(BilinearMap::zero(3, 2).cocycle_check(&rep).holds());
    }

    #[test]
    fn scalar_rep_on_line_requires_composition_identity() {
        // one-dimensional abelian g: l_x l_x = -l_x r_x forces l(l + r) = 0
        let g = abelian(1);
        assert!(RepresentationPair::scalar(g.clone(), &[int(2)], &[int(-2)]).unwrap().rep_check().holds());
        let bad = RepresentationPair::scalar(g, &[int(1)], &[int(1)]).unwrap().rep_check();
        assert_eq!(bad.violations[0].identity, RepIdentity::LeftComposition);
    }

    #[test]
    fn class_coordinates_are_coboundary_invariant() {
        let g = abelian(1);
        let rep = RepresentationPair::scalar(g, &[int(0)], &[int(0)]).unwrap();
        let h2 = compute_h2(&rep);
        let w = BilinearMap::scalar_entries(1, &[(0, 0, int(3))]);
        assert_eq!(h2.class_coordinates(&w), Some(vec![int(3)]));
        assert_eq!(h2.class_from_coordinates(&[int(3)]), w);
    }
}
