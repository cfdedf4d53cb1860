//! Structure constants of every algebra in the catalog.

use crate::algebra::{numbered_labels, AlgebraTable};
use crate::catalog::notation::parse_products;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Basis of the four five-dimensional solvable algebras.
pub const BASE_LABELS: [&str; 5] = ["e1", "e2", "e3", "x1", "x2"];

/// Basis of their one-dimensional extensions, `e4` spanning the kernel.
pub const HAT_LABELS: [&str; 6] = ["e1", "e2", "e3", "e4", "x1", "x2"];

/// Position in [`HAT_LABELS`] of each vector of the extension basis
/// `e1,e2,e3,x1,x2,e4`.
pub const HAT_RELABELING: [usize; 6] = [0, 1, 2, 4, 5, 3];

pub const H: &str = "[e1,e2]=e3, [e2,e1]=-e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [x1,e3]=-e3, \
                     [e2,x2]=e2, [x2,e2]=-e2, [e3,x2]=e3, [x2,e3]=-e3";

/// The other reading of the ambiguous `[x2,e2]` line; not Leibniz.
pub const H_ALTERNATIVE: &str = "[e1,e2]=e3, [e2,e1]=-e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [x1,e3]=-e3, \
                                 [e2,x2]=e2, [x2,e2]=e2, [e3,x2]=e3, [x2,e3]=-e3";

pub const L1: &str = "[e2,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [e2,x2]=e2, [e3,x2]=e3";

pub const L2: &str = "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [e2,x2]=e2";

pub const L3: &str = "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [e2,x2]=e2, [x2,e2]=-e2";

/// `(name, products, has δ)` for the classified extensions.
pub const HATS: &[(&str, &str, bool)] = &[
    ("H_hat_1", "[e1,e2]=e3, [e2,e1]=-e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [x1,e3]=-e3, [e4,x1]=e4, [x2,e1]=e4, [e2,x2]=e2, [x2,e2]=-e2, [e3,x2]=e3, [x2,e3]=-e3", false),
    ("H_hat_2", "[e1,e1]=e4, [e1,e2]=e3, [e2,e1]=-e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [x1,e3]=-e3, [e4,x1]=2e4, [e2,x2]=e2, [x2,e2]=-e2, [e3,x2]=e3, [x2,e3]=-e3", false),
    ("H_hat_3", "[e1,e2]=e3+e4, [e2,e1]=-e3+e4, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [x1,e3]=-e3-e4, [e4,x1]=e4, [e4,x2]=e4, [e2,x2]=e2, [x2,e2]=-e2, [e3,x2]=e3, [x2,e3]=-e3+e4", false),
    ("H_hat_4", "[e1,e2]=e3, [e2,e1]=-e3, [e1,x1]=e1+e4, [x1,e1]=-e1-e4, [e3,x1]=e3, [x1,e3]=-e3, [e4,x1]=e4, [x1,e4]=-e4, [e2,x2]=e2, [x2,e2]=-e2, [e3,x2]=e3, [x2,e3]=-e3", false),
    ("H_hat_5", "[e1,e2]=e3, [e2,e1]=-e3, [e1,x1]=e1+De4, [x1,e1]=-e1-De4, [e1,x2]=e4, [x2,e1]=-e4, [e3,x1]=e3, [x1,e3]=-e3, [e4,x1]=e4, [x1,e4]=-e4, [e2,x2]=e2, [x2,e2]=-e2, [e3,x2]=e3, [x2,e3]=-e3", true),
    ("H_hat_6", "[e1,e2]=e3, [e2,e1]=-e3, [e1,e3]=e4, [e3,e1]=-e4, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [x1,e3]=-e3, [e4,x1]=2e4, [x1,e4]=-2e4, [e2,x2]=e2, [x2,e2]=-e2, [e3,x2]=e3, [x2,e3]=-e3, [e4,x2]=e4, [x2,e4]=-e4", false),
    ("L1_hat_1", "[e2,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [x2,e1]=e4, [e3,x1]=e3, [e2,x2]=e2, [e3,x2]=e3, [e4,x1]=e4", false),
    ("L1_hat_2", "[e1,e1]=e4, [e2,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [e2,x2]=e2, [e3,x2]=e3, [e4,x1]=2e4", false),
    ("L1_hat_3", "[e2,e1]=e3, [e3,e1]=e4, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [e2,x2]=e2, [e3,x2]=e3, [e4,x1]=2e4, [e4,x2]=e4", false),
    ("L1_hat_4", "[e2,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e2,x1]=e4, [e3,x1]=e3, [e2,x2]=e2, [e3,x2]=e3, [e4,x2]=e4", false),
    ("L1_hat_5", "[e2,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e2,x1]=De4, [e3,x1]=e3, [e2,x2]=e2+e4, [e3,x2]=e3, [e4,x2]=e4", true),
    ("L1_hat_6", "[e2,e1]=e3, [e1,x1]=e1+e4, [x1,e1]=-e1-e4, [e2,x2]=e2, [e3,x1]=e3, [e3,x2]=e3, [e4,x1]=e4, [x1,e4]=-e4", false),
    ("L1_hat_7", "[e2,e1]=e3, [e1,x1]=e1+De4, [e1,x2]=e4, [e2,x2]=e2, [e3,x1]=e3, [e3,x2]=e3, [x1,e1]=-e1-De4, [x2,e1]=-e4, [e4,x1]=e4, [x1,e4]=-e4", true),
    ("L2_hat_1", "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [x2,e1]=e4, [e2,x2]=e2, [e4,x1]=e4", false),
    ("L2_hat_2", "[e1,e1]=e3, [e3,e1]=e4, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [e2,x2]=e2, [e4,x1]=3e4", false),
    ("L2_hat_3", "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e2,x1]=e4, [e3,x1]=2e3, [e2,x2]=e2, [e4,x2]=e4", false),
    ("L2_hat_4", "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e2,x1]=De4, [e3,x1]=2e3, [e2,x2]=e2+e4, [e4,x2]=e4", true),
    ("L2_hat_5", "[e1,e1]=e3, [e2,e1]=e4, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [e2,x2]=e2, [e4,x1]=e4, [e4,x2]=e4", false),
    ("L2_hat_6", "[e1,e1]=e3, [e1,x1]=e1+e4, [x1,e1]=-e1-e4, [e3,x1]=2e3, [e2,x2]=e2, [e4,x1]=e4, [x1,e4]=-e4", false),
    ("L2_hat_7", "[e1,e1]=e3, [e1,x1]=e1+De4, [x1,e1]=-e1-De4, [e3,x1]=2e3, [e1,x2]=e4, [x2,e1]=-e4, [e2,x2]=e2, [e4,x1]=e4, [x1,e4]=-e4", true),
    ("L3_hat_1", "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [x2,e1]=e4, [e3,x1]=2e3, [e2,x2]=e2, [x2,e2]=-e2, [e4,x1]=e4", false),
    ("L3_hat_2", "[e1,e1]=e3, [e3,e1]=e4, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [e2,x2]=e2, [x2,e2]=-e2, [e4,x1]=3e4", false),
    ("L3_hat_3", "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [x1,e2]=e4, [e3,x1]=2e3, [e2,x2]=e2, [x2,e2]=-e2, [e4,x2]=e4", false),
    ("L3_hat_4", "[e1,e1]=e3, [e2,e2]=e4, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [e2,x2]=e2, [x2,e2]=-e2, [e4,x2]=2e4", false),
    ("L3_hat_5", "[e1,e1]=e3, [e1,x1]=e1+e4, [x1,e1]=-e1-e4, [e3,x1]=2e3, [e2,x2]=e2, [x2,e2]=-e2, [e4,x1]=e4, [x1,e4]=-e4", false),
    ("L3_hat_6", "[e1,e1]=e3, [e1,x1]=e1+De4, [x1,e1]=-e1-De4, [e3,x1]=2e3, [e1,x2]=e4, [x2,e1]=-e4, [e2,x2]=e2, [x2,e2]=-e2, [e4,x1]=e4, [x1,e4]=-e4", true),
    ("L3_hat_7", "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [e2,x1]=e4, [x1,e2]=-e4, [e2,x2]=e2, [x2,e2]=-e2, [e4,x2]=e4, [x2,e4]=-e4", false),
    ("L3_hat_8", "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=2e3, [e2,x1]=De4, [x1,e2]=-De4, [e2,x2]=e2+e4, [x2,e2]=-e2-e4, [e4,x2]=e4, [x2,e4]=-e4", true),
];

/// Listed forms of tables that had to be repaired: `(name, listed products)`.
/// Each differs from its [`HATS`] entry in a single product.
pub const LISTED_HAT_VARIANTS: &[(&str, &str)] = &[
    ("H_hat_3", "[e1,e2]=e3+e4, [e2,e1]=-e3+e4, [e1,x1]=e1, [x1,e1]=-e1, [e3,x1]=e3, [x1,e3]=-e3+e4, [e4,x1]=e4, [e4,x2]=e4, [e2,x2]=e2, [x2,e2]=-e2, [e3,x2]=e3, [x2,e3]=-e3+e4"),
    ("L2_hat_4", "[e1,e1]=e3, [e1,x1]=e1, [x1,e1]=-e1, [e2,x1]=De4, [e3,x1]=2e3, [e1,x2]=e4, [e2,x2]=e2+e4, [e4,x2]=e4"),
];

pub fn base(name: &str) -> Result<AlgebraTable> {
    let text = match name {
        "H" => H,
        "L1" => L1,
        "L2" => L2,
        "L3" => L3,
        _ => return Err(Error::UnknownEntry(name.to_string())),
    };
    parse_products(name, &BASE_LABELS, text, None)
}

pub fn hat(name: &str, delta: Option<&Rational>) -> Result<AlgebraTable> {
    let &(_, text, has_delta) = HATS
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    let delta = if has_delta {
        Some(delta.ok_or_else(|| Error::InvalidParameter {
            name: "delta".into(),
            reason: format!("{name} is a one-parameter family"),
        })?)
    } else {
        None
    };
    parse_products(name, &HAT_LABELS, text, delta)
}

pub fn hat_has_delta(name: &str) -> bool {
    HATS.iter().any(|(n, _, d)| *n == name && *d)
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter {
            name: "n".into(),
            reason: format!("must be at least {min}, got {n}"),
        });
    }
    Ok(())
}

/// `NF_n`: `[e_i, e1] = e_{i+1}`.
pub fn null_filiform(n: usize) -> Result<AlgebraTable> {
    check_n(n, 2)?;
    let products: Vec<_> = (0..n - 1).map(|i| (i, 0, vec![(i + 1, int(1))])).collect();
    AlgebraTable::from_products(format!("NF{n}"), numbered_labels("e", n), &products)
}

fn r_labels(top: usize) -> Vec<String> {
    let mut labels = numbered_labels("e", top);
    labels.push("x".into());
    labels
}

/// `R` on `e1..en, x`: `[e_i,e1]=e_{i+1}`, `[e_i,x]=-i e_i`, `[x,e1]=e1`.
pub fn r_algebra(n: usize) -> Result<AlgebraTable> {
    check_n(n, 2)?;
    r_like("R", n)
}

/// The extension of `R` on `e1..e_{n+1}, x`, same rules with `i ≤ n+1`.
pub fn r_hat(n: usize) -> Result<AlgebraTable> {
    check_n(n, 2)?;
    r_like("R_hat", n + 1)
}

fn r_like(name: &str, top: usize) -> Result<AlgebraTable> {
    let x = top;
    let mut products = Vec::new();
    for i in 0..top - 1 {
        products.push((i, 0, vec![(i + 1, int(1))]));
    }
    for i in 0..top {
        products.push((i, x, vec![(i, int(-(i as i64 + 1)))]));
    }
    products.push((x, 0, vec![(0, int(1))]));
    AlgebraTable::from_products(name, r_labels(top), &products)
}

/// Position in the `R_hat` basis of each vector of the extension basis
/// `e1..en, x, e_{n+1}`.
pub fn r_hat_relabeling(n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.push(n + 1);
    perm.push(n);
    perm
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_tables_are_leibniz() {
        for name in ["H", "L1", "L2", "L3"] {
            assert!(base(name).unwrap().leibniz_check().holds(), "{name}");
        }
        let alt = parse_products("H", &BASE_LABELS, H_ALTERNATIVE, None).unwrap();
        assert!(!alt.leibniz_check().holds());
    }

    #[test]
    fn hat_tables_are_leibniz() {
        for (name, _, d) in HATS {
            for delta in [int(0), int(1), int(2), int(-1)] {
                let t = hat(name, Some(&delta)).unwrap();
                assert!(t.leibniz_check().holds(), "{name} at {delta}");
                if !d {
                    break;
                }
            }
        }
    }

    #[test]
    fn listed_variants_fail() {
        for (name, text) in LISTED_HAT_VARIANTS {
            let t = parse_products(name, &HAT_LABELS, text, Some(&int(1))).unwrap();
            assert!(!t.leibniz_check().holds(), "{name}");
        }
    }

    #[test]
    fn r_family() {
        let r = r_algebra(3).unwrap();
        assert_eq!(r.dim(), 4);
        assert!(r.leibniz_check().holds());
        assert!(r_hat(3).unwrap().leibniz_check().holds());
        assert!(r_algebra(1).is_err());
        assert_eq!(null_filiform(4).unwrap().lower_central_series().len(), 5);
    }
}
