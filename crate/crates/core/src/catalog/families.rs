//! Parametrized automorphism families of the catalog algebras.
//!
//! Matrices act on column coordinates: column `j` is the image of basis
//! vector `j`.

use crate::linalg::Matrix;
use crate::orbit::AutFamily;
use crate::rational::{factorial, int, pow, Rational};

/// Which closed form to use for the image of `x` in the `R` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RVariant {
    /// `φ(x) = x + Σ bⁱ/i! eᵢ`, an automorphism.
    Corrected,
    /// `φ(x) = x + Σ bⁱ/n! eᵢ`, as listed; not an automorphism once `b ≠ 0`.
    Listed,
}

/// `φ(eⱼ) = Σ_{i≥j} aʲ b^{i−j}/(i−j)! eᵢ`, `φ(x)` per [`RVariant`], on
/// `e1..en, x`. Parameters `(a, b)`, `a ≠ 0`.
pub fn r_family(n: usize, variant: RVariant) -> AutFamily {
    let name = match variant {
        RVariant::Corrected => format!("Aut(R{n})"),
        RVariant::Listed => format!("Aut(R{n}) listed"),
    };
    AutFamily::new(name, vec!["a", "b"], vec![0], move |p| r_matrix(n, &p[0], &p[1], variant))
}

pub fn r_matrix(n: usize, a: &Rational, b: &Rational, variant: RVariant) -> Matrix {
    let mut m = Matrix::zeros(n + 1, n + 1);
    for j in 0..n {
        for i in j..n {
            m[(i, j)] = pow(a, j + 1) * pow(b, i - j) / factorial(i - j);
        }
    }
    m[(n, n)] = int(1);
    for i in 0..n {
        let den = match variant {
            RVariant::Corrected => factorial(i + 1),
            RVariant::Listed => factorial(n),
        };
        m[(i, n)] = pow(b, i + 1) / den;
    }
    m
}

const E1: usize = 0;
const E2: usize = 1;
const E3: usize = 2;
const X1: usize = 3;
const X2: usize = 4;

fn set(m: &mut Matrix, image_of: usize, entries: &[(usize, Rational)]) {
    for (i, v) in entries {
        m[(*i, image_of)] = v.clone();
    }
}

/// The first family for `H`, parameters `a1..a5`, `a1 a3 ≠ 0`.
pub fn h_phi1() -> AutFamily {
    AutFamily::new("Aut(H) phi1", vec!["a1", "a2", "a3", "a4", "a5"], vec![0, 2], |p| {
        let [a1, a2, a3, a4, a5] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
        let mut m = Matrix::zeros(5, 5);
        set(&mut m, E1, &[(E1, a1.clone()), (E3, a2.clone())]);
        set(&mut m, E2, &[(E2, a3.clone()), (E3, a4.clone())]);
        set(&mut m, E3, &[(E3, a1 * a3)]);
        set(&mut m, X1, &[(X1, int(1)), (E1, a4 / a3), (E3, a2 * a4 / (a1 * a3) + a5)]);
        set(&mut m, X2, &[(X2, int(1)), (E2, -(a2 / a1)), (E3, a5.clone())]);
        m
    })
}

/// The second family for `H`, swapping the roles of `x1` and `x2`.
pub fn h_phi2() -> AutFamily {
    AutFamily::new("Aut(H) phi2", vec!["a1", "a2", "a3", "a4", "a5"], vec![0, 2], |p| {
        let [a1, a2, a3, a4, a5] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
        let mut m = Matrix::zeros(5, 5);
        set(&mut m, E1, &[(E2, a1.clone()), (E3, a2.clone())]);
        set(&mut m, E2, &[(E1, -a3.clone()), (E3, a4.clone())]);
        set(&mut m, E3, &[(E3, a1 * a3)]);
        set(&mut m, X1, &[(X2, int(1)), (E2, a4 / a3), (E3, a2 * a4 / (a1 * a3) + a5)]);
        set(&mut m, X2, &[(X1, int(1)), (E1, a2 / a1), (E3, a5.clone())]);
        m
    })
}

/// `diag(a1, a2, a1 a2, 1, 1)`.
pub fn l1_family() -> AutFamily {
    AutFamily::new("Aut(L1)", vec!["a1", "a2"], vec![0, 1], |p| {
        let mut m = Matrix::identity(5);
        m[(E1, E1)] = p[0].clone();
        m[(E2, E2)] = p[1].clone();
        m[(E3, E3)] = &p[0] * &p[1];
        m
    })
}

fn l2_like(p: &[Rational], a4: Option<&Rational>) -> Matrix {
    let [a1, a2, a3] = [&p[0], &p[1], &p[2]];
    let mut m = Matrix::zeros(5, 5);
    set(&mut m, E1, &[(E1, a1.clone()), (E3, -(a1 * a3))]);
    set(&mut m, E2, &[(E2, a2.clone())]);
    set(&mut m, E3, &[(E3, a1 * a1)]);
    set(&mut m, X1, &[(X1, int(1)), (E1, a3.clone()), (E3, -(a3 * a3) / int(2))]);
    set(&mut m, X2, &[(X2, int(1))]);
    if let Some(a4) = a4 {
        m[(E2, X2)] = a4.clone();
    }
    m
}

/// Parameters `a1, a2, a3` with `a1 a2 ≠ 0`.
pub fn l2_family() -> AutFamily {
    AutFamily::new("Aut(L2)", vec!["a1", "a2", "a3"], vec![0, 1], |p| l2_like(p, None))
}

/// As for `L2` with an extra `x2 ↦ x2 + a4 e2`.
pub fn l3_family() -> AutFamily {
    AutFamily::new("Aut(L3)", vec!["a1", "a2", "a3", "a4"], vec![0, 1], |p| l2_like(p, Some(&p[3])))
}

/// Every family of the given base algebra.
pub fn families_of(base: &str) -> Vec<AutFamily> {
    match base {
        "H" => vec![h_phi1(), h_phi2()],
        "L1" => vec![l1_family()],
        "L2" => vec![l2_family()],
        "L3" => vec![l3_family()],
        _ => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::tables;
    use crate::orbit::verify_automorphism;
    use crate::rational::frac;

    #[test]
    fn families_are_automorphisms() {
        let p = [int(2), frac(1, 3), int(-3), int(5), frac(-1, 2)];
        for base in ["H", "L1", "L2", "L3"] {
            let g = tables::base(base).unwrap();
            for fam in families_of(base) {
                let phi = fam.instantiate(&p[..fam.params.len()]).unwrap();
                assert!(verify_automorphism(&g, &phi).is_ok(), "{}", fam.name);
            }
        }
    }

    #[test]
    fn r_family_variants() {
        for n in 2..=5 {
            let g = tables::r_algebra(n).unwrap();
            let ok = r_matrix(n, &int(2), &int(1), RVariant::Corrected);
            assert!(verify_automorphism(&g, &ok).is_ok());
            let listed = r_matrix(n, &int(2), &int(1), RVariant::Listed);
            assert!(verify_automorphism(&g, &listed).is_err());
        }
    }
}
