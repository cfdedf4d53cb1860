//! The JSON algebra file format.
//!
//! ```json
//! {
//!   "name": "NF3",
//!   "dim": 3,
//!   "basis": ["e1", "e2", "e3"],
//!   "products": [
//!     {"left": "e1", "right": "e1", "value": {"e2": "1"}},
//!     {"left": "e2", "right": "e1", "value": {"e3": "1"}}
//!   ]
//! }
//! ```
//!
//! Coefficients are canonical rational strings (`"p"` or `"p/q"`, reduced,
//! `q > 0`). Omitted products are zero and a `(left, right)` pair may appear
//! at most once.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::linalg::zero_vector;
use crate::rational::{format_rational, parse_rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dim: usize,
    basis: Vec<String>,
    products: Vec<ProductEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductEntry {
    left: String,
    right: String,
    value: BTreeMap<String, String>,
}

pub fn parse_algebra(text: &str) -> Result<AlgebraTable> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.basis.len() != file.dim {
        return Err(Error::Shape(format!(
            "dim is {} but the basis has {} labels",
            file.dim,
            file.basis.len()
        )));
    }
    let n = file.dim;
    let labels = file.basis;
    let index = |l: &str| labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let mut c = zero_vector(n * n * n);
    let mut seen = vec![false; n * n];
    for p in &file.products {
        let (i, j) = (index(&p.left)?, index(&p.right)?);
        if std::mem::replace(&mut seen[i * n + j], true) {
            return Err(Error::DuplicateProduct(p.left.clone(), p.right.clone()));
        }
        for (label, value) in &p.value {
            let k = index(label)?;
            c[(i * n + j) * n + k] = parse_rational(value).map_err(|_| Error::NonRationalCoefficient {
                left: p.left.clone(),
                right: p.right.clone(),
                value: value.clone(),
            })?;
        }
    }
    AlgebraTable::new(file.name, labels, c)
}

/// Pretty-printed JSON; zero products and zero coefficients are omitted.
pub fn serialize_algebra(a: &AlgebraTable) -> String {
    let n = a.dim();
    let labels = a.labels();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let value: BTreeMap<String, String> = a
                .basis_bracket(i, j)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (labels[k].clone(), format_rational(v)))
                .collect();
            if !value.is_empty() {
                products.push(ProductEntry {
                    left: labels[i].clone(),
                    right: labels[j].clone(),
                    value,
                });
            }
        }
    }
    let file = AlgebraFile {
        name: a.name().to_string(),
        dim: n,
        basis: labels.to_vec(),
        products,
    };
    let mut out = serde_json::to_string_pretty(&file).expect("plain data serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbered_labels;
    use crate::catalog::tables;
    use crate::rational::frac;
    use proptest::prelude::*;

    #[test]
    fn round_trip() {
        let h = tables::base("H").unwrap();
        assert_eq!(parse_algebra(&serialize_algebra(&h)).unwrap(), h);
    }

    #[test]
    fn malformed_inputs() {
        let base = |products: &str| {
            format!(r#"{{"name":"T","dim":2,"basis":["a","b"],"products":[{products}]}}"#)
        };
        assert!(matches!(
            parse_algebra(&base(r#"{"left":"a","right":"a","value":{"b":"1/0"}}"#)),
            Err(Error::NonRationalCoefficient { .. })
        ));
        assert!(matches!(
            parse_algebra(&base(r#"{"left":"a","right":"z","value":{}}"#)),
            Err(Error::UnknownLabel(_))
        ));
        let dup = r#"{"left":"a","right":"a","value":{}},{"left":"a","right":"a","value":{"b":"2"}}"#;
        assert!(matches!(parse_algebra(&base(dup)), Err(Error::DuplicateProduct(_, _))));
        match parse_algebra("{\n  \"name\": \"T\",\n  \"dim\": 2 2\n}") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 12)),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    fn random_table() -> impl Strategy<Value = AlgebraTable> {
        (1usize..4).prop_flat_map(|n| {
            proptest::collection::vec((-4i64..=4, 1i64..=3), n * n * n).prop_map(move |cs| {
                let c = cs.into_iter().map(|(p, q)| frac(p, q)).collect();
                AlgebraTable::new("T", numbered_labels("e", n), c).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn serialization_is_a_fixed_point(t in random_table()) {
            let text = serialize_algebra(&t);
            let back = parse_algebra(&text).unwrap();
            prop_assert_eq!(&back, &t);
            prop_assert_eq!(serialize_algebra(&back), text);
        }
    }
}
