//! Fixtures for every algebra, representation case, cocycle basis and
//! expected dimension, plus the algebra file format.

pub mod cases;
pub mod families;
pub mod format;
pub mod notation;
pub mod tables;

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::linalg::SubspaceBasis;
use crate::rational::{format_rational, int, Rational};

/// Parameters of the parametrized entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    pub n: Option<usize>,
    pub delta: Option<Rational>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params { n: Some(n), delta: None }
    }

    pub fn delta(delta: Rational) -> Self {
        Params { n: None, delta: Some(delta) }
    }
}

/// A named algebra with its parameters and nilradical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub parameters: Vec<(String, Rational)>,
    pub table: AlgebraTable,
    pub nilradical: Option<SubspaceBasis>,
    /// For extensions: position in `table` of each vector of the basis
    /// produced by the extension builder (base algebra, then kernel).
    /// The identity otherwise.
    pub relabeling: Vec<usize>,
}

impl CatalogEntry {
    /// `name` followed by its parameters, e.g. `H_hat_5(delta=2)`.
    pub fn label(&self) -> String {
        if self.parameters.is_empty() {
            return self.name.clone();
        }
        let p: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={}", format_rational(v)))
            .collect();
        format!("{}({})", self.name, p.join(", "))
    }
}

/// Every entry name accepted by [`get`].
pub fn names() -> Vec<&'static str> {
    let mut out = vec!["NF", "R", "H", "L1", "L2", "L3", "R_hat"];
    out.extend(tables::HATS.iter().map(|(n, _, _)| *n));
    out
}

fn need_n(name: &str, p: &Params) -> Result<usize> {
    p.n.ok_or_else(|| Error::InvalidParameter {
        name: "n".into(),
        reason: format!("{name} needs n"),
    })
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn get(name: &str, params: &Params) -> Result<CatalogEntry> {
    let entry = |table: AlgebraTable, parameters, nil: Option<Vec<usize>>, relabeling| {
        let d = table.dim();
        CatalogEntry {
            name: name.to_string(),
            parameters,
            nilradical: nil.map(|idx| SubspaceBasis::coordinate(d, &idx)),
            table,
            relabeling,
        }
    };
    match name {
        "NF" => {
            let n = need_n(name, params)?;
            let t = tables::null_filiform(n)?;
            Ok(entry(t, vec![("n".into(), int(n as i64))], Some(identity(n)), identity(n)))
        }
        "R" => {
            let n = need_n(name, params)?;
            let t = tables::r_algebra(n)?;
            Ok(entry(t, vec![("n".into(), int(n as i64))], Some(identity(n)), identity(n + 1)))
        }
        "R_hat" => {
            let n = need_n(name, params)?;
            let t = tables::r_hat(n)?;
            let relabeling = tables::r_hat_relabeling(n);
            Ok(entry(t, vec![("n".into(), int(n as i64))], Some(identity(n + 1)), relabeling))
        }
        "H" | "L1" | "L2" | "L3" => Ok(entry(tables::base(name)?, vec![], Some(identity(3)), identity(5))),
        _ => {
            let has_delta = tables::hat_has_delta(name);
            let t = tables::hat(name, params.delta.as_ref())?;
            let parameters = match (&params.delta, has_delta) {
                (Some(d), true) => vec![("delta".into(), d.clone())],
                _ => vec![],
            };
            Ok(entry(t, parameters, Some(identity(4)), tables::HAT_RELABELING.to_vec()))
        }
    }
}

/// The δ values used for the one-parameter families.
pub fn delta_samples() -> Vec<Rational> {
    vec![int(0), int(1), int(2), int(-1)]
}

/// Every table of the catalog at its sample parameters.
pub fn all_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push(get("NF", &Params::n(n)).expect("n >= 2"));
    }
    for n in 2..=6 {
        out.push(get("R", &Params::n(n)).expect("n >= 2"));
    }
    for name in ["H", "L1", "L2", "L3"] {
        out.push(get(name, &Params::default()).expect("base table"));
    }
    for n in 2..=5 {
        out.push(get("R_hat", &Params::n(n)).expect("n >= 2"));
    }
    for (name, _, has_delta) in tables::HATS {
        if *has_delta {
            for d in delta_samples() {
                out.push(get(name, &Params::delta(d)).expect("hat table"));
            }
        } else {
            out.push(get(name, &Params::default()).expect("hat table"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_are_leibniz_with_valid_nilradicals() {
        let all = all_entries();
        assert_eq!(all.len(), 5 + 5 + 4 + 4 + 21 + 7 * 4);
        for e in &all {
            assert!(e.table.leibniz_check().holds(), "{}", e.label());
            let nil = e.nilradical.as_ref().unwrap();
            assert!(e.table.verify_nilradical(nil, 4, 7).passed(), "{}", e.label());
        }
    }

    #[test]
    fn missing_parameters_are_reported() {
        assert!(matches!(get("R", &Params::default()), Err(Error::InvalidParameter { .. })));
        assert!(matches!(get("H_hat_5", &Params::default()), Err(Error::InvalidParameter { .. })));
        assert!(matches!(get("Q", &Params::default()), Err(Error::UnknownEntry(_))));
        assert_eq!(get("H_hat_5", &Params::delta(int(2))).unwrap().label(), "H_hat_5(delta=2)");
    }
}
