//! The action of `Aut(g) × GL(h)` on pairs (representation, cocycle), orbit
//! normalization against known representatives, and non-isomorphism
//! certificates.

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::cohomology::{compute_b2, BilinearMap, CocycleSpace, LinearHom, RepresentationPair};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{frac, int, Rational};

/// A pair `(φ, ψ)` with `φ ∈ Aut(g)` (columns are images of basis vectors)
/// and `ψ ∈ GL(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    pub phi: Matrix,
    pub psi: Matrix,
}

impl Automorphism {
    pub fn new(phi: Matrix, psi: Matrix) -> Result<Self> {
        if !phi.is_square() || !psi.is_square() {
            return Err(Error::Shape("automorphism matrices must be square".into()));
        }
        if !phi.is_invertible() || !psi.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(Automorphism { phi, psi })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        Automorphism {
            phi: Matrix::identity(n),
            psi: Matrix::identity(m),
        }
    }

    /// `ψ = λ·I_m`.
    pub fn scaled(phi: Matrix, lambda: Rational, m: usize) -> Result<Self> {
        Self::new(phi, Matrix::identity(m).scale(&lambda))
    }

    /// The pair acting as `self` after `other`: `(φ_other ∘ φ_self, ψ_self ψ_other)`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            phi: other.phi.mul(&self.phi).expect("same dimension"),
            psi: self.psi.mul(&other.psi).expect("same dimension"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomorphismFailure {
    NotSquare,
    NotInvertible,
    NotHomomorphism { x: usize, y: usize },
}

/// Checks that `φ` is an invertible map with `φ[x,y] = [φx, φy]` on basis pairs.
pub fn verify_automorphism(g: &AlgebraTable, phi: &Matrix) -> std::result::Result<(), AutomorphismFailure> {
    is_isomorphism(g, g, phi)
}

/// Checks that `f` (columns are images of the basis of `src`) is an
/// isomorphism `src → dst`.
pub fn is_isomorphism(src: &AlgebraTable, dst: &AlgebraTable, f: &Matrix) -> std::result::Result<(), AutomorphismFailure> {
    let n = src.dim();
    if f.rows() != dst.dim() || f.cols() != n || dst.dim() != n {
        return Err(AutomorphismFailure::NotSquare);
    }
    if !f.is_invertible() {
        return Err(AutomorphismFailure::NotInvertible);
    }
    let cols: Vec<_> = (0..n).map(|i| f.column(i)).collect();
    for x in 0..n {
        for y in 0..n {
            let lhs = f.apply(src.basis_bracket(x, y)).expect("shape");
            if lhs != dst.bracket(&cols[x], &cols[y]) {
                return Err(AutomorphismFailure::NotHomomorphism { x, y });
            }
        }
    }
    Ok(())
}

/// A representation pair with a cocycle for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitElement {
    pub rep: RepresentationPair,
    pub omega: BilinearMap,
}

/// `ω'(x,y) = ψ ω(φx, φy)`, `l'_x = ψ l_{φx} ψ⁻¹`, `r'_x = ψ r_{φx} ψ⁻¹`.
///
/// This is a right action: `act(a, act(b, e)) = act(a.then(b), e)`.
pub fn act(aut: &Automorphism, el: &OrbitElement) -> OrbitElement {
    let n = el.rep.g_dim();
    let m = el.rep.h_dim();
    let psi_inv = aut.psi.inverse().expect("psi invertible");
    let conj = |mat: Matrix| aut.psi.mul(&mat).and_then(|t| t.mul(&psi_inv)).expect("shape");
    let cols: Vec<_> = (0..n).map(|i| aut.phi.column(i)).collect();
    let l = cols.iter().map(|c| conj(el.rep.left_of(c))).collect();
    let r = cols.iter().map(|c| conj(el.rep.right_of(c))).collect();
    let rep = RepresentationPair::new(el.rep.g().clone(), m, l, r).expect("shape");
    let mut omega = BilinearMap::zero(n, m);
    for i in 0..n {
        for j in 0..n {
            let v = aut.psi.apply(&el.omega.eval(&cols[i], &cols[j])).expect("shape");
            omega.set(i, j, &v);
        }
    }
    OrbitElement { rep, omega }
}

/// The isomorphism from the extension of `act(aut, el)` onto the extension
/// of `el`: `x + a ↦ φx + ψ⁻¹a`.
pub fn extension_isomorphism(aut: &Automorphism) -> Matrix {
    let n = aut.phi.rows();
    let m = aut.psi.rows();
    let psi_inv = aut.psi.inverse().expect("psi invertible");
    let mut out = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = aut.phi[(i, j)].clone();
        }
    }
    for a in 0..m {
        for b in 0..m {
            out[(n + a, n + b)] = psi_inv[(a, b)].clone();
        }
    }
    out
}

/// The isomorphism `x + a ↦ x + f(x) + a` from the extension by `ω − df`
/// onto the extension by `ω`.
pub fn coboundary_isomorphism(f: &LinearHom) -> Matrix {
    let (m, n) = (f.matrix.rows(), f.matrix.cols());
    let mut out = Matrix::identity(n + m);
    for a in 0..m {
        for t in 0..n {
            out[(n + a, t)] = f.matrix[(a, t)].clone();
        }
    }
    out
}

/// The permutation matrix sending basis vector `i` to `perm[i]`, an
/// isomorphism from a table onto `table.permuted(perm)`.
pub fn permutation_matrix(perm: &[usize]) -> Matrix {
    let n = perm.len();
    let mut out = Matrix::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        out[(p, i)] = int(1);
    }
    out
}

type FamilyFn = dyn Fn(&[Rational]) -> Matrix + Send + Sync;

/// A parametrized family of automorphisms of a fixed algebra.
#[derive(Clone)]
pub struct AutFamily {
    pub name: String,
    pub params: Vec<&'static str>,
    /// Indices of parameters that must be nonzero.
    pub nonzero: Vec<usize>,
    build: Arc<FamilyFn>,
}

impl std::fmt::Debug for AutFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AutFamily").field("name", &self.name).field("params", &self.params).finish()
    }
}

impl AutFamily {
    pub fn new(
        name: impl Into<String>,
        params: Vec<&'static str>,
        nonzero: Vec<usize>,
        build: impl Fn(&[Rational]) -> Matrix + Send + Sync + 'static,
    ) -> Self {
        AutFamily {
            name: name.into(),
            params,
            nonzero,
            build: Arc::new(build),
        }
    }

    pub fn instantiate(&self, values: &[Rational]) -> Result<Matrix> {
        if values.len() != self.params.len() {
            return Err(Error::InvalidParameter {
                name: self.name.clone(),
                reason: format!("expected {} parameters, got {}", self.params.len(), values.len()),
            });
        }
        if let Some(&i) = self.nonzero.iter().find(|&&i| values[i].is_zero()) {
            return Err(Error::InvalidParameter {
                name: self.params[i].to_string(),
                reason: "must be nonzero".into(),
            });
        }
        Ok((self.build)(values))
    }
}

/// Default search grid for normalization.
pub fn default_grid() -> Vec<Rational> {
    vec![int(1), int(-1), int(2), int(-2), frac(1, 2), frac(-1, 2), int(3), int(-3), frac(1, 3), frac(-1, 3)]
}

pub const DEFAULT_SEARCH_CAP: usize = 4000;

/// Where and how an element was matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitMatch {
    pub target: usize,
    /// Family parameters followed by `λ`.
    pub params: Vec<Rational>,
    pub automorphism: Automorphism,
    /// Whether the parameters came from the explicit list rather than the grid.
    pub explicit: bool,
}

/// Searches for `(φ, λ·I)` with `φ` from `family` moving `el` onto one of
/// `targets`: the representations must agree exactly and the cocycles
/// differ by a coboundary of the target representation.
///
/// `explicit` parameter vectors (family parameters then `λ`) are tried
/// first, then the grid, lazily and at most `cap` grid points. Grid
/// parameters that may vanish also take the value `0`.
pub fn normalize_in_orbit(
    el: &OrbitElement,
    family: &AutFamily,
    targets: &[OrbitElement],
    explicit: &[Vec<Rational>],
    grid: &[Rational],
    cap: usize,
) -> Option<OrbitMatch> {
    let m = el.rep.h_dim();
    let b2: Vec<CocycleSpace> = targets.iter().map(|t| compute_b2(&t.rep)).collect();
    let try_params = |params: &[Rational], explicit: bool| -> Option<OrbitMatch> {
        let (fam, lambda) = params.split_at(params.len().checked_sub(1)?);
        let phi = family.instantiate(fam).ok()?;
        let aut = Automorphism::scaled(phi, lambda[0].clone(), m).ok()?;
        let moved = act(&aut, el);
        targets.iter().zip(&b2).position(|(t, b)| moved.rep == t.rep && b.contains(&moved.omega.sub(&t.omega))).map(
            |target| OrbitMatch {
                target,
                params: params.to_vec(),
                automorphism: aut,
                explicit,
            },
        )
    };
    for params in explicit {
        if let Some(found) = try_params(params, true) {
            return Some(found);
        }
    }
    // odometer over the grid; λ is the last coordinate and never zero
    let k = family.params.len() + 1;
    let choices: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut c = vec![];
            if i < family.params.len() && !family.nonzero.contains(&i) {
                c.push(Rational::zero());
            }
            c.extend(grid.iter().cloned());
            c
        })
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return None;
    }
    let mut idx = vec![0usize; k];
    for _ in 0..cap {
        let params: Vec<Rational> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        if let Some(found) = try_params(&params, false) {
            return Some(found);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
    None
}

/// An isomorphism invariant on which two algebras differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub invariant: String,
    pub left: String,
    pub right: String,
}

/// Compares the invariant fingerprints; `None` means the invariants do not
/// separate the two algebras.
pub fn nonisomorphism_certificate(a: &AlgebraTable, b: &AlgebraTable) -> Option<Certificate> {
    let (fa, fb) = (a.fingerprint(), b.fingerprint());
    let field = fa.first_difference(&fb)?;
    let show = |f| serde_json::to_value(f).ok().and_then(|v| v.get(field).map(|x| x.to_string())).unwrap_or_default();
    Some(Certificate {
        invariant: field.to_string(),
        left: show(&fa),
        right: show(&fb),
    })
}

/// Whether `φ` maps the representation onto itself (`l_{φx} = l_x`, `r_{φx} = r_x`).
pub fn preserves_rep(rep: &RepresentationPair, phi: &Matrix) -> bool {
    rep.is_preserved_by(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbered_labels;

    fn nf3() -> AlgebraTable {
        AlgebraTable::from_products(
            "NF3",
            numbered_labels("e", 3),
            &[(0, 0, vec![(1, int(1))]), (1, 0, vec![(2, int(1))])],
        )
        .unwrap()
    }

    #[test]
    fn scaling_is_an_automorphism_of_null_filiform() {
        let g = nf3();
        let mut phi = Matrix::zeros(3, 3);
        for i in 0..3 {
            phi[(i, i)] = int(2).pow(i as i32 + 1);
        }
        assert!(verify_automorphism(&g, &phi).is_ok());
        phi[(2, 2)] = int(5);
        assert!(matches!(
            verify_automorphism(&g, &phi),
            Err(AutomorphismFailure::NotHomomorphism { .. })
        ));
        assert_eq!(verify_automorphism(&g, &Matrix::zeros(3, 3)), Err(AutomorphismFailure::NotInvertible));
    }

    #[test]
    fn cohomologous_cocycles_give_isomorphic_extensions() {
        use crate::cohomology::coboundary_preimage;
        use crate::extension::ExtensionSpec;
        let rep = RepresentationPair::zero(nf3(), 1);
        let w = BilinearMap::scalar_entries(3, &[(0, 1, int(1))]);
        let mut f = Matrix::zeros(1, 3);
        f[(0, 1)] = int(2);
        f[(0, 2)] = frac(-1, 3);
        let df = LinearHom { matrix: f }.coboundary(&rep);
        assert!(!df.is_zero());
        let f = coboundary_preimage(&rep, &df).unwrap();
        let shifted = w.sub(&f.coboundary(&rep));
        let build = |o: BilinearMap| ExtensionSpec::abelian(rep.clone(), o, vec!["h".into()]).unwrap().build();
        assert!(is_isomorphism(&build(shifted), &build(w.clone()), &coboundary_isomorphism(&f)).is_ok());
        assert!(coboundary_preimage(&rep, &w).is_none());
    }

    #[test]
    fn permutation_matrix_maps_onto_permuted_table() {
        let g = nf3();
        let perm = [2, 0, 1];
        assert!(is_isomorphism(&g, &g.permuted(&perm).unwrap(), &permutation_matrix(&perm)).is_ok());
    }

    #[test]
    fn action_composes_on_the_right() {
        let g = nf3();
        let rep = RepresentationPair::zero(g.clone(), 1);
        let omega = BilinearMap::scalar_entries(3, &[(2, 0, int(1)), (0, 1, int(3))]);
        let el = OrbitElement { rep, omega };
        let diag = |a: i64| {
            let mut p = Matrix::zeros(3, 3);
            for i in 0..3 {
                p[(i, i)] = int(a).pow(i as i32 + 1);
            }
            Automorphism::scaled(p, int(a + 1), 1).unwrap()
        };
        let (a, b) = (diag(2), diag(3));
        assert_eq!(act(&a, &act(&b, &el)), act(&a.then(&b), &el));
        assert_eq!(act(&Automorphism::identity(3, 1), &el), el);
    }

    #[test]
    fn moved_extension_is_isomorphic() {
        use crate::extension::ExtensionSpec;
        let g = nf3();
        let rep = RepresentationPair::zero(g, 1);
        let el = OrbitElement {
            rep,
            omega: BilinearMap::scalar_entries(3, &[(2, 0, int(1))]),
        };
        let mut phi = Matrix::identity(3);
        phi[(1, 0)] = int(1);
        phi[(2, 1)] = int(1);
        assert!(verify_automorphism(el.rep.g(), &phi).is_ok());
        let aut = Automorphism::scaled(phi, int(-2), 1).unwrap();
        let moved = act(&aut, &el);
        let build = |e: &OrbitElement| ExtensionSpec::abelian(e.rep.clone(), e.omega.clone(), vec!["h".into()]).unwrap().build();
        assert!(is_isomorphism(&build(&moved), &build(&el), &extension_isomorphism(&aut)).is_ok());
    }
}
