//! Finite-dimensional algebras given by structure constants, together with
//! the identity checks, series and invariants used throughout the crate.

use std::collections::HashSet;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, SubspaceBasis, Vector};
use crate::rational::{random_rational, Rational};

/// Default number of random probes per complement direction in
/// [`AlgebraTable::verify_nilradical`].
pub const DEFAULT_NILRADICAL_TRIALS: usize = 16;

/// `(i, j, [(k, c_ijk), ..])`.
pub type SparseProduct = (usize, usize, Vec<(usize, Rational)>);

/// An algebra on ℚⁿ with bracket `[eᵢ,eⱼ] = Σₖ c[i][j][k] eₖ`.
///
/// No symmetry is assumed: `[eᵢ,eⱼ]` and `[eⱼ,eᵢ]` are stored separately.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraTable {
    name: String,
    labels: Vec<String>,
    c: Vec<Rational>,
}

impl AlgebraTable {
    /// Builds a table from a flat constant vector indexed `(i*n + j)*n + k`.
    pub fn new(name: impl Into<String>, labels: Vec<String>, constants: Vec<Rational>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Shape("an algebra needs at least one basis vector".into()));
        }
        if constants.len() != n * n * n {
            return Err(Error::Shape(format!(
                "expected {} structure constants, got {}",
                n * n * n,
                constants.len()
            )));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if label.is_empty() {
                return Err(Error::Shape("empty basis label".into()));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(AlgebraTable {
            name: name.into(),
            labels,
            c: constants,
        })
    }

    /// The zero bracket on the given labels.
    pub fn abelian(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        Self::new(name, labels, zero_vector(n * n * n))
    }

    /// Builds a table from sparse products `(i, j, [(k, c_ijk), ..])`.
    pub fn from_products(name: impl Into<String>, labels: Vec<String>, products: &[SparseProduct]) -> Result<Self> {
        let mut table = Self::abelian(name, labels)?;
        let n = table.dim();
        for (i, j, value) in products {
            for (k, coeff) in value {
                if *i >= n || *j >= n || *k >= n {
                    return Err(Error::Shape(format!("product index ({i},{j},{k}) out of range")));
                }
                table.c[(i * n + j) * n + k] += coeff;
            }
        }
        Ok(table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn constants(&self) -> &[Rational] {
        &self.c
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    /// `[eᵢ,eⱼ]` in coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim();
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(a * b), self.basis_bracket(i, j));
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        is_zero_vector(&self.c)
    }

    /// Matrix of `y ↦ [eᵢ, y]`.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.structure(i, j, k).clone();
            }
        }
        m
    }

    /// Matrix of `y ↦ [y, eᵢ]`.
    pub fn right_multiplication(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.structure(j, i, k).clone();
            }
        }
        m
    }

    /// Checks the right Leibniz identity `[[x,y],z] = [x,[y,z]] + [[x,z],y]`
    /// on every basis triple.
    pub fn leibniz_check(&self) -> LeibnizReport {
        let n = self.dim();
        let e: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let xy = self.basis_bracket(i, j);
                for k in 0..n {
                    let lhs = self.bracket(xy, &e[k]);
                    let yz = self.basis_bracket(j, k);
                    let xz = self.basis_bracket(i, k);
                    let mut diff = lhs;
                    add_scaled(&mut diff, &-Rational::one(), &self.bracket(&e[i], yz));
                    add_scaled(&mut diff, &-Rational::one(), &self.bracket(xz, &e[j]));
                    if !is_zero_vector(&diff) {
                        violations.push((i, j, k));
                    }
                }
            }
        }
        LeibnizReport { violations }
    }

    /// Span of all `[u,v]` with `u ∈ a`, `v ∈ b`.
    pub fn product_space(&self, a: &SubspaceBasis, b: &SubspaceBasis) -> SubspaceBasis {
        let mut gens = Vec::new();
        for u in a.vectors() {
            for v in b.vectors() {
                let w = self.bracket(u, v);
                if !is_zero_vector(&w) {
                    gens.push(w);
                }
            }
        }
        SubspaceBasis::span(self.dim(), gens).expect("brackets have ambient length")
    }

    fn whole(&self) -> SubspaceBasis {
        SubspaceBasis::full(self.dim())
    }

    /// `g¹ = g`, `g^{k+1} = [g^k, g]`, listed up to (not including) the
    /// first repeated term.
    pub fn lower_central_series(&self) -> Vec<SubspaceBasis> {
        let whole = self.whole();
        iterate_series(whole.clone(), self.dim(), |s| self.product_space(s, &whole))
    }

    /// `g^[1] = g`, `g^[s+1] = [g^[s], g^[s]]`, same stopping rule.
    pub fn derived_series(&self) -> Vec<SubspaceBasis> {
        iterate_series(self.whole(), self.dim(), |s| self.product_space(s, s))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(SubspaceBasis::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(SubspaceBasis::is_zero)
    }

    /// `{x : [x,g] = 0 = [g,x]}`.
    pub fn center(&self) -> SubspaceBasis {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            rows.extend(self.right_multiplication(i).row_vectors());
            rows.extend(self.left_multiplication(i).row_vectors());
        }
        Matrix::from_rows(rows, n).expect("square blocks").nullspace()
    }

    /// `{x : [x,g] = 0}`.
    pub fn left_annihilator(&self) -> SubspaceBasis {
        let n = self.dim();
        let rows = (0..n).flat_map(|i| self.right_multiplication(i).row_vectors()).collect();
        Matrix::from_rows(rows, n).expect("square blocks").nullspace()
    }

    /// `{x : [g,x] = 0}`.
    pub fn right_annihilator(&self) -> SubspaceBasis {
        let n = self.dim();
        let rows = (0..n).flat_map(|i| self.left_multiplication(i).row_vectors()).collect();
        Matrix::from_rows(rows, n).expect("square blocks").nullspace()
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_closure(&self, s: &SubspaceBasis) -> SubspaceBasis {
        let whole = self.whole();
        let mut current = s.clone();
        loop {
            let next = current
                .sum(&self.product_space(&current, &whole))
                .and_then(|t| t.sum(&self.product_space(&whole, &current)))
                .expect("same ambient dimension");
            if next == current {
                return current;
            }
            current = next;
        }
    }

    pub fn is_ideal(&self, s: &SubspaceBasis) -> bool {
        let whole = self.whole();
        self.product_space(s, &whole).is_subspace_of(s) && self.product_space(&whole, s).is_subspace_of(s)
    }

    pub fn is_subalgebra(&self, s: &SubspaceBasis) -> bool {
        self.product_space(s, s).is_subspace_of(s)
    }

    /// Nilpotency of `s` as a subalgebra: `S¹ = S`, `S^{k+1} = [S^k, S]`.
    pub fn is_nilpotent_subalgebra(&self, s: &SubspaceBasis) -> bool {
        let series = iterate_series(s.clone(), s.dim(), |t| self.product_space(t, s));
        series.last().is_some_and(SubspaceBasis::is_zero)
    }

    /// Certifies that `claimed` is the nilradical.
    ///
    /// Ideal and nilpotency are decided exactly. Maximality is a heuristic:
    /// for every coordinate direction outside `claimed`, the direction itself
    /// and `trials` random rational perturbations of it are adjoined and the
    /// generated ideal is tested for nilpotency. Finding a nilpotent
    /// enlargement proves non-maximality; finding none is evidence only.
    pub fn verify_nilradical(&self, claimed: &SubspaceBasis, trials: usize, seed: u64) -> NilradicalVerdict {
        if !self.is_ideal(claimed) {
            return NilradicalVerdict::NotIdeal;
        }
        if !self.is_nilpotent_subalgebra(claimed) {
            return NilradicalVerdict::NotNilpotent;
        }
        let n = self.dim();
        let complement = claimed.complement_indices();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for &d in &complement {
            for trial in 0..=trials {
                let mut v = unit_vector(n, d);
                if trial > 0 {
                    for u in claimed.vectors() {
                        add_scaled(&mut v, &random_rational(&mut rng), u);
                    }
                    for &other in complement.iter().filter(|&&o| o != d) {
                        v[other] += random_rational(&mut rng);
                    }
                }
                let enlarged = claimed.extend(vec![v.clone()]).expect("same ambient dimension");
                if self.is_nilpotent_subalgebra(&self.ideal_closure(&enlarged)) {
                    return NilradicalVerdict::Enlargeable { witness: v };
                }
            }
        }
        NilradicalVerdict::Pass {
            probes: complement.len() * (trials + 1),
        }
    }

    /// Dimension of the derivation algebra `{D : D[x,y] = [Dx,y] + [x,Dy]}`.
    pub fn derivation_dim(&self) -> usize {
        let n = self.dim();
        // unknown D[k][t] at index k*n + t, with D(e_t) = Σ_k D[k][t] e_k
        let mut rows = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    let mut row = zero_vector(n * n);
                    for t in 0..n {
                        row[k * n + t] += self.structure(a, b, t);
                        row[t * n + a] -= self.structure(t, b, k);
                        row[t * n + b] -= self.structure(a, t, k);
                    }
                    rows.push(row);
                }
            }
        }
        Matrix::from_rows(rows, n * n).expect("row length n²").nullspace().dim()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let lcs_dims: Vec<usize> = self.lower_central_series().iter().map(SubspaceBasis::dim).collect();
        let derived_dims: Vec<usize> = self.derived_series().iter().map(SubspaceBasis::dim).collect();
        Fingerprint {
            dim: self.dim(),
            nilpotent: lcs_dims.last() == Some(&0),
            solvable: derived_dims.last() == Some(&0),
            lcs_dims,
            derived_dims,
            center_dim: self.center().dim(),
            left_ann_dim: self.left_annihilator().dim(),
            right_ann_dim: self.right_annihilator().dim(),
            derivation_dim: self.derivation_dim(),
        }
    }

    /// Relabels the basis: old vector `i` becomes new vector `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<AlgebraTable> {
        let n = self.dim();
        check_permutation(perm, n)?;
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let mut c = zero_vector(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(perm[i] * n + perm[j]) * n + perm[k]] = self.structure(i, j, k).clone();
                }
            }
        }
        AlgebraTable::new(self.name.clone(), labels, c)
    }

    /// Whether the two tables have identical constants (names and labels
    /// are ignored).
    pub fn same_products(&self, other: &AlgebraTable) -> bool {
        self.c == other.c
    }

    /// Basis pairs `(i,j)` whose products differ.
    pub fn product_differences(&self, other: &AlgebraTable) -> Vec<(usize, usize)> {
        if self.dim() != other.dim() {
            return vec![];
        }
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.basis_bracket(i, j) != other.basis_bracket(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for AlgebraTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}(", self.name)?;
        let n = self.dim();
        let mut first = true;
        for i in 0..n {
            for j in 0..n {
                let v = self.basis_bracket(i, j);
                if is_zero_vector(v) {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "[{},{}]=", self.labels[i], self.labels[j])?;
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(k, a)| format!("{a}{}", self.labels[k]))
                    .collect();
                write!(f, "{}", terms.join("+"))?;
            }
        }
        write!(f, ")")
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Shape(format!("permutation of length {} for dimension {n}", perm.len())));
    }
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Shape(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    Ok(())
}

fn iterate_series(
    start: SubspaceBasis,
    max_steps: usize,
    mut step: impl FnMut(&SubspaceBasis) -> SubspaceBasis,
) -> Vec<SubspaceBasis> {
    let mut series = vec![start];
    // dimensions strictly drop until the series stabilizes
    for _ in 0..=max_steps {
        let next = step(series.last().expect("non-empty"));
        if &next == series.last().expect("non-empty") {
            break;
        }
        series.push(next);
    }
    series
}

/// Outcome of [`AlgebraTable::leibniz_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizReport {
    pub violations: Vec<(usize, usize, usize)>,
}

impl LeibnizReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilradicalVerdict {
    /// Ideal, nilpotent, and no nilpotent enlargement found among `probes`
    /// candidate vectors. Maximality is heuristic, not proven.
    Pass { probes: usize },
    NotIdeal,
    NotNilpotent,
    /// Adjoining `witness` generates a strictly larger nilpotent ideal.
    Enlargeable { witness: Vector },
}

impl NilradicalVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, NilradicalVerdict::Pass { .. })
    }
}

/// Isomorphism invariants of an algebra. Differing fingerprints prove two
/// algebras non-isomorphic; equal fingerprints prove nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub lcs_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub center_dim: usize,
    pub left_ann_dim: usize,
    pub right_ann_dim: usize,
    pub derivation_dim: usize,
    pub nilpotent: bool,
    pub solvable: bool,
}

impl Fingerprint {
    /// Name of the first field where the fingerprints differ.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        let fields: [(&'static str, bool); 9] = [
            ("dim", self.dim == other.dim),
            ("lcs_dims", self.lcs_dims == other.lcs_dims),
            ("derived_dims", self.derived_dims == other.derived_dims),
            ("center_dim", self.center_dim == other.center_dim),
            ("left_ann_dim", self.left_ann_dim == other.left_ann_dim),
            ("right_ann_dim", self.right_ann_dim == other.right_ann_dim),
            ("derivation_dim", self.derivation_dim == other.derivation_dim),
            ("nilpotent", self.nilpotent == other.nilpotent),
            ("solvable", self.solvable == other.solvable),
        ];
        fields.iter().find(|(_, same)| !same).map(|(name, _)| *name)
    }
}

/// Canonical `["e1", .., "en"]` labels.
pub fn numbered_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn nf(n: usize) -> AlgebraTable {
        let products: Vec<_> = (0..n - 1).map(|i| (i, 0, vec![(i + 1, int(1))])).collect();
        AlgebraTable::from_products("NF", numbered_labels("e", n), &products).unwrap()
    }

    #[test]
    fn idempotent_line_is_not_leibniz() {
        let a = AlgebraTable::from_products("bad", labels(&["e1"]), &[(0, 0, vec![(0, int(1))])]).unwrap();
        assert_eq!(a.leibniz_check().violations, vec![(0, 0, 0)]);
    }

    #[test]
    fn null_filiform_series() {
        let a = nf(4);
        assert!(a.leibniz_check().holds());
        let dims: Vec<_> = a.lower_central_series().iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![4, 3, 2, 1, 0]);
        assert_eq!(nf(3).center(), SubspaceBasis::coordinate(3, &[2]));
        assert!(a.verify_nilradical(&SubspaceBasis::full(4), 4, 0).passed());
    }

    #[test]
    fn abelian_invariants() {
        let a = AlgebraTable::abelian("A", numbered_labels("e", 3)).unwrap();
        let dims: Vec<_> = a.lower_central_series().iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![3, 0]);
        assert_eq!(a.center().dim(), 3);
        for n in 1..=5 {
            let a = AlgebraTable::abelian("A", numbered_labels("e", n)).unwrap();
            assert_eq!(a.derivation_dim(), n * n);
        }
        let a2 = AlgebraTable::abelian("A", numbered_labels("e", 2)).unwrap().fingerprint();
        assert_eq!(a2.lcs_dims, vec![2, 0]);
        assert_eq!(a2.derivation_dim, 4);
    }

    #[test]
    fn nf2_derivations() {
        assert_eq!(nf(2).derivation_dim(), 2);
    }

    #[test]
    fn ideal_closure_of_zero_is_zero() {
        let a = nf(3);
        assert_eq!(a.ideal_closure(&SubspaceBasis::zero(3)), SubspaceBasis::zero(3));
        let c = SubspaceBasis::coordinate(3, &[2]);
        assert_eq!(a.ideal_closure(&c), c);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            AlgebraTable::abelian("A", labels(&["a", "a"])),
            Err(Error::DuplicateLabel("a".into()))
        );
    }

    #[test]
    fn permutation_round_trip() {
        let a = nf(4);
        let p = a.permuted(&[2, 0, 3, 1]).unwrap();
        let inverse = [1, 3, 0, 2];
        assert_eq!(p.permuted(&inverse).unwrap(), a);
        assert_eq!(p.fingerprint(), a.fingerprint());
    }
}
