//! Representation cases, their listed cocycle bases and expected
//! dimensions, and the data behind each classified extension.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::AlgebraTable;
use crate::catalog::families::{self, RVariant};
use crate::catalog::notation::{parse_listed_basis, parse_products, ListedBasis, Scalars};
use crate::catalog::tables::{self, BASE_LABELS, HAT_LABELS};
use crate::cohomology::{BilinearMap, RepresentationPair};
use crate::error::{Error, Result};
use crate::extension::ExtensionSpec;
use crate::orbit::{AutFamily, OrbitElement};
use crate::rational::{format_rational, frac, int, one, Rational};

/// Scalar representation of `R`: `l_x = γ1`, `r_x = γ2`, zero on `e_i`.
pub fn r_rep(n: usize, gamma1: &Rational, gamma2: &Rational) -> Result<RepresentationPair> {
    let g = tables::r_algebra(n)?;
    let mut left = vec![Rational::zero(); n + 1];
    let mut right = left.clone();
    left[n] = gamma1.clone();
    right[n] = gamma2.clone();
    RepresentationPair::scalar(g, &left, &right)
}

/// Scalar representation of a five-dimensional base algebra:
/// `l_{x1} = α1`, `r_{x1} = α2`, `l_{x2} = β1`, `r_{x2} = β2`, zero on `e_i`.
pub fn five_rep(base: &str, s: &[Rational; 4]) -> Result<RepresentationPair> {
    let g = tables::base(base)?;
    let z = Rational::zero();
    let left = [z.clone(), z.clone(), z.clone(), s[0].clone(), s[2].clone()];
    let right = [z.clone(), z.clone(), z, s[1].clone(), s[3].clone()];
    RepresentationPair::scalar(g, &left, &right)
}

/// One representation case instantiated at one parameter point.
#[derive(Debug, Clone)]
pub struct RepCase {
    pub algebra: String,
    pub case: String,
    pub params: Vec<(&'static str, Rational)>,
    pub rep: RepresentationPair,
    pub listed: ListedBasis,
    /// A corrected reading of the listed basis and what was changed.
    pub repaired: Option<(&'static str, ListedBasis)>,
    pub expected_z2: usize,
    pub expected_b2: usize,
    /// Tag of the dimension check.
    pub dims_tag: &'static str,
    /// Tag of the basis-span check.
    pub basis_tag: &'static str,
}

impl RepCase {
    pub fn citation(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", format_rational(v)))
            .collect();
        format!("{} case {} ({})", self.algebra, self.case, params.join(", "))
    }
}

/// Expected dimensions for one case at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectationRow {
    pub algebra: String,
    pub case: String,
    pub params: Vec<(String, String)>,
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
    pub citation: String,
    pub tag: String,
}

pub fn expectations() -> Vec<ExpectationRow> {
    rep_cases()
        .iter()
        .map(|c| ExpectationRow {
            algebra: c.algebra.clone(),
            case: c.case.clone(),
            params: c.params.iter().map(|(k, v)| (k.to_string(), format_rational(v))).collect(),
            z2: c.expected_z2,
            b2: c.expected_b2,
            h2: c.expected_z2 - c.expected_b2,
            citation: c.citation(),
            tag: c.dims_tag.to_string(),
        })
        .collect()
}

/// Every representation case of `R` (`n = 2..5`) and of the four
/// five-dimensional algebras, at the sample points.
pub fn rep_cases() -> Vec<RepCase> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.extend(r_cases(n));
    }
    for (base, cases) in [("H", H_CASES), ("L1", L1_CASES), ("L2", L2_CASES), ("L3", L3_CASES)] {
        for spec in cases {
            for point in (spec.points)() {
                out.push(five_case(base, spec, point).expect("fixture is well formed"));
            }
        }
    }
    out
}

fn r_cases(n: usize) -> Vec<RepCase> {
    let ni = n as i64;
    let mut out = Vec::new();
    let mut push = |case: &str, g1: Rational, g2: Rational, z2: usize, b2: usize| {
        let rep = r_rep(n, &g1, &g2).expect("n >= 2");
        let listed = r_listed_basis(n, case, &g1, &g2);
        out.push(RepCase {
            algebra: format!("R{n}"),
            case: case.to_string(),
            params: vec![("gamma1", g1), ("gamma2", g2)],
            rep,
            listed,
            repaired: None,
            expected_z2: z2,
            expected_b2: b2,
            dims_tag: "r-dims",
            basis_tag: "r-basis",
        });
    };
    push("1", int(0), int(-ni - 1), n + 2, n + 1);
    for g2 in [int(0), int(1), int(-ni)] {
        push("2", int(0), g2, n + 1, n + 1);
    }
    for g1 in [int(1), int(-2)] {
        push("3", g1.clone(), -g1, n, n);
    }
    out
}

/// The listed cocycle bases for `R` on `e1..en, x`.
pub fn r_listed_basis(n: usize, case: &str, g1: &Rational, g2: &Rational) -> ListedBasis {
    let x = n;
    let e = |i: usize| i - 1;
    let mut symbols = Vec::new();
    let mut vectors = Vec::new();
    let mut push = |sym: String, entries: Vec<(usize, usize, Rational)>| {
        symbols.push(sym);
        vectors.push(BilinearMap::scalar_entries(n + 1, &entries));
    };
    let top = if case == "1" { n } else { n - 1 };
    for i in 1..=top {
        // ω(e_i, e1) = b_{i,1}; the same parameter reappears in ω(e_{i+1}, x)
        let mut entries = vec![(e(i), e(1), one())];
        if i < n {
            let k = int(i as i64 + 1);
            let c = match case {
                "1" => int(n as i64) + int(1) - &k,
                "2" => -(k + g2),
                _ => g1 - k,
            };
            entries.push((e(i + 1), x, c));
            if case == "3" {
                entries.push((x, e(i + 1), -g1.clone()));
            }
        }
        push(format!("b{i},1"), entries);
    }
    let e1x = match case {
        "1" => int(n as i64),
        "2" => -(g2 + one()),
        _ => int(-1),
    };
    push(format!("b{},1", n + 1), vec![(x, e(1), one()), (e(1), x, e1x)]);
    if case != "3" {
        push(format!("b{0},{0}", n + 1), vec![(x, x, one())]);
    }
    ListedBasis {
        symbols,
        vectors,
        conflicts: vec![],
    }
}

struct FiveCaseSpec {
    case: &'static str,
    /// Sample points `(α1, α2, β1, β2)`.
    points: fn() -> Vec<[Rational; 4]>,
    listed: &'static str,
    /// Corrected reading when the listed basis is not a basis of `Z²`.
    repaired: Option<(&'static str, &'static str)>,
    z2: usize,
    b2: usize,
}

fn fixed(a1: i64, a2: i64, b1: i64, b2: i64) -> Vec<[Rational; 4]> {
    vec![[int(a1), int(a2), int(b1), int(b2)]]
}

/// `α1 = β1 = 0` at two points avoiding the special cases.
fn generic_zero() -> Vec<[Rational; 4]> {
    vec![[int(0), int(3), int(0), int(4)], [int(0), int(-1), int(0), int(5)]]
}

/// `α1 = −α2`, `β1 = −β2` at two points avoiding the special cases.
fn generic_opposite() -> Vec<[Rational; 4]> {
    vec![[int(-3), int(3), int(-4), int(4)], [int(2), int(-2), int(3), int(-3)]]
}

macro_rules! case {
    ($case:literal, $points:expr, $z2:literal, $b2:literal, $listed:literal) => {
        FiveCaseSpec {
            case: $case,
            points: $points,
            listed: $listed,
            repaired: None,
            z2: $z2,
            b2: $b2,
        }
    };
    ($case:literal, $points:expr, $z2:literal, $b2:literal, $listed:literal, $note:literal => $repaired:literal) => {
        FiveCaseSpec {
            case: $case,
            points: $points,
            listed: $listed,
            repaired: Some(($note, $repaired)),
            z2: $z2,
            b2: $b2,
        }
    };
}

const H_CASES: &[FiveCaseSpec] = &[
    case!("I", || fixed(0, 1, 0, 0), 6, 5,
        "e1,e2: b12; e2,e1: -b12; e2,x1: b24; e2,x2: -b24; e3,x2: b12; x1,e1: b41; x1,e3: -b12; x1,x1: b44; x2,e1: b51; x2,e2: b24; x2,e3: -b12; x2,x1: b54"),
    case!("II", || fixed(0, 0, 0, 1), 6, 5,
        "e1,e2: b12; e1,x1: b14; e1,x2: -b14; e2,e1: -b12; e3,x1: b12; x1,e1: -b14; x1,e2: b42; x1,e3: -b12; x1,x2: b45; x2,e2: b52; x2,e3: -b12; x2,x2: b55"),
    case!("III", || fixed(0, 2, 0, 0), 6, 5,
        "e1,e1: b11; e1,e2: b12; e1,x2: b15; e2,e1: -b12; e2,x1: 2b25; e2,x2: b25; e3,x1: -b12; e3,x2: b12; x1,e1: b15; x1,e3: -b12; x1,x1: b44; x2,e2: -b25; x2,e3: -b12; x2,x1: b54",
        "(e1,x2) read as (e1,x1) for b15; 2b25 read as -2b25" =>
        "e1,e1: b11; e1,e2: b12; e1,x1: b15; e2,e1: -b12; e2,x1: -2b25; e2,x2: b25; e3,x1: -b12; e3,x2: b12; x1,e1: b15; x1,e3: -b12; x1,x1: b44; x2,e2: -b25; x2,e3: -b12; x2,x1: b54"),
    case!("IV", || fixed(0, 0, 0, 2), 6, 5,
        "e1,e2: b12; e1,x1: b14; e1,x2: -2b14; e2,e1: -b12; e2,e2: b22; e2,x2: b25; e3,x1: b12; e3,x2: -b12; x1,e1: -b14; x1,e3: -b12; x1,x2: b45; x2,e2: b25; x2,e3: -b12; x2,x2: b55"),
    case!("V", || fixed(0, 1, 0, 1), 6, 5,
        "e1,e2: b12; e1,x2: b15; e2,e1: b21; e2,x1: b24; x1,e1: b15; x1,e3: -b12; x1,x1: b44; x1,x2: b44; x2,e2: b24; x2,e3: b21; x2,x1: b54; x2,x2: b54"),
    case!("VI", generic_zero, 5, 5,
        "e1,e2: b12; e1,x1: (α2-1)b41; e1,x2: β2b41; e2,e1: -b12; e2,x1: α2b52; e2,x2: (β2-1)b52; e3,x1: (1-α2)b12; e3,x2: (1-β2)b12; x1,e1: b41; x1,e3: -b12; x1,x1: α2b44; x1,x2: β2b44; x2,e2: b52; x2,e3: -b12; x2,x1: α2b54; x2,x2: β2b54"),
    case!("VII", || fixed(-1, 1, 0, 0), 5, 3,
        "e1,e2: b12; e1,x1: b14; e1,x2: b15; e2,e1: -b12; e2,x1: b24; e2,x2: -b24; e3,x2: b12; x1,e1: -b14; x1,e2: -b24; x1,x2: b45; x2,e1: -b15; x2,e2: b24; x2,e3: -b12; x2,x1: -b45"),
    case!("VIII", || fixed(0, 0, -1, 1), 5, 3,
        "e1,e2: b12; e1,x1: b14; e1,x2: -b14; e2,e1: -b12; e2,x1: b24; e2,x2: b25; e3,x1: b12; x1,e1: -b14; x1,e2: -b24; x1,e3: -b12; x1,x2: b45; x2,e1: -b15; x2,e2: -b25; x2,x1: -b45",
        "(x2,e1) = -b15 read as b14" =>
        "e1,e2: b12; e1,x1: b14; e1,x2: -b14; e2,e1: -b12; e2,x1: b24; e2,x2: b25; e3,x1: b12; x1,e1: -b14; x1,e2: -b24; x1,e3: -b12; x1,x2: b45; x2,e1: b14; x2,e2: -b25; x2,x1: -b45"),
    case!("IX", || fixed(-1, 1, -2, 2), 5, 4,
        "e1,e2: b12; e1,x2: b15; e2,e1: -b12; e2,e3: b23; e2,x1: b24; e2,x2: b24; e3,e2: -b23; e3,x2: -b12; x1,e2: -b24; x1,x2: b45; x2,e1: -b15; x2,e2: -b24; x2,e3: b12; x2,x1: -b45"),
    case!("X", || fixed(-2, 2, -1, 1), 5, 4,
        "e1,e2: b12; e1,e3: b13; e1,x1: b14; e1,x2: b14; e2,e1: -b12; e2,x1: b24; e3,e1: -b13; e3,x1: -b12; x1,e1: -b14; x1,e2: -b24; x1,e3: b12; x1,x2: b45; x2,e1: -b14; x2,x1: -b45"),
    case!("XI", generic_opposite, 4, 4,
        "e1,e2: b12; e1,x1: (1+α1)b14; e1,x2: β1b14; e2,e1: -b12; e2,x1: α1b24; e2,x2: (1+β1)b24; e3,x1: (1+α1)b12; e3,x2: (1+β1)b12; x1,e1: -(1+α1)b14; x1,e2: -α1b24; x1,e3: -(1+α1)b12; x1,x2: b45; x2,e1: -β1b14; x2,e2: -(1+β1)b24; x2,e3: -(1+β1)b12; x2,x1: -b45"),
];

const L1_CASES: &[FiveCaseSpec] = &[
    case!("I", || fixed(0, 1, 0, 0), 6, 5,
        "e2,e1: b21; e2,x1: b24; e2,x2: -b24; e3,x2: b21; x1,e1: b41; x1,x1: b44; x2,e1: b51; x2,x1: b54"),
    case!("II", || fixed(0, 2, 0, 0), 6, 5,
        "e1,e1: b11; e1,x1: b14; e2,e1: b21; e2,x1: -2b25; e2,x2: b25; e3,x1: -b21; e3,x2: b21; x1,e1: b14; x1,x1: b44; x2,x1: b54"),
    case!("III", || fixed(0, 2, 0, 1), 6, 5,
        "e1,x1: b14; e1,x2: b14; e2,e1: b21; e2,x1: b24; e3,e1: b31; e3,x1: -b21; x1,e1: b14; x1,x1: 2b45; x1,x2: b45; x2,x1: 2b55; x2,x2: b55"),
    case!("IV", || fixed(0, 0, 0, 1), 6, 4,
        "e1,x1: b14; e1,x2: -b14; e2,e1: b21; e2,x1: b24; e2,x2: b25; e3,x1: b21; x1,e1: -b14; x1,x2: b45; x2,x2: b55"),
    case!("V", generic_zero, 5, 5,
        "e1,x1: (α2-1)b41; e1,x2: β2b41; e2,e1: b21; e2,x1: α2b24; e2,x2: (β2-1)b24; e3,x1: (1-α2)b21; e3,x2: (1-β2)b21; x1,e1: b41; x1,x1: α2b45; x1,x2: β2b45; x2,x1: α2b55; x2,x2: β2b55"),
    case!("VI", || fixed(-1, 1, 0, 0), 5, 3,
        "e1,x1: b14; e1,x2: b15; e2,e1: b21; e2,x1: -b25; e2,x2: b25; e3,x2: b21; x1,e1: -b14; x1,e2: b25; x1,e3: b21; x1,x2: b45; x2,e1: -b15; x2,x1: -b45"),
    case!("VII", generic_opposite, 4, 4,
        "e1,x1: (1+α1)b15; e1,x2: β1b15; e2,e1: b21; e2,x1: α1b25; e2,x2: (1+β1)b25; e3,x1: (1+α1)b21; e3,x2: (1+β1)b21; x1,e1: -(1+α1)b15; x1,e2: -α1b25; x1,e3: -α1b21; x1,x2: b45; x2,e1: -β1b15; x2,e2: -β1b25; x2,e3: -β1b21; x2,x1: -b45"),
];

const L2_CASES: &[FiveCaseSpec] = &[
    case!("1", || fixed(0, 1, 0, 0), 6, 5,
        "e1,e1: b11; e2,x1: -b25; e2,x2: b25; e3,x1: b11; x1,e1: b41; x1,x1: b44; x2,e1: b51; x2,x1: b54"),
    case!("2", || fixed(0, 3, 0, 0), 6, 5,
        "e1,e1: b11; e1,x1: 2b41; e2,x1: -3b25; e2,x2: b25; e3,e1: b31; e3,x1: -b11; x1,e1: b41; x1,x1: b44; x2,x1: b54"),
    case!("3", || fixed(0, 0, 0, 1), 6, 4,
        "e1,e1: b11; e1,x1: b14; e1,x2: -b14; e2,x1: b24; e2,x2: b25; e3,x1: 2b11; e3,x2: -b11; x1,e1: -b14; x1,x2: b45; x2,x2: b55"),
    case!("4", || fixed(0, 1, 0, 1), 6, 5,
        "e1,e1: b11; e1,x2: b15; e2,e1: b21; e2,x1: b24; e3,x1: b11; e3,x2: -b11; x1,e1: b15; x1,x1: b44; x1,x2: b44; x2,x1: b55; x2,x2: b55"),
    case!("5", generic_zero, 5, 5,
        "e1,e1: b11; e1,x1: (α2-1)b41; e1,x2: β2b41; e2,x1: α2b24; e2,x2: (β2-1)b24; e3,x1: (2-α2)b11; e3,x2: -β2b11; x1,e1: b41; x1,x1: α2b44; x1,x2: β2b44; x2,x1: α2b54; x2,x1: β2b54",
        "second (x2,x1) entry read as (x2,x2)" =>
        "e1,e1: b11; e1,x1: (α2-1)b41; e1,x2: β2b41; e2,x1: α2b24; e2,x2: (β2-1)b24; e3,x1: (2-α2)b11; e3,x2: -β2b11; x1,e1: b41; x1,x1: α2b44; x1,x2: β2b44; x2,x1: α2b54; x2,x2: β2b54"),
    case!("6", || fixed(-1, 1, 0, 0), 5, 3,
        "e1,e1: b11; e1,x1: b14; e1,x2: b15; e2,x1: b24; e2,x2: -b24; e3,x1: b11; x1,e1: -b14; x1,e2: -b24; x1,e3: b11; x1,x2: b45; x2,e1: -b15; x2,x1: -b45"),
    case!("7", generic_opposite, 4, 4,
        "e1,e1: b11; e1,x1: -(1+α1)b51; e1,x2: -β1b51; e2,x1: -α1b52; e2,x2: -(1+β1)b52; e3,x1: (2+α1)b11; e3,x2: β1b11; x1,e1: (1+α1)b51; x1,e2: α1b52; x1,e3: -α1b11; x1,x2: b45; x2,e1: β1b51; x2,e2: β1b52; x2,e3: -β1b11; x2,x1: -b45"),
];

const L3_CASES: &[FiveCaseSpec] = &[
    case!("1", || fixed(0, 1, 0, 0), 6, 5,
        "e1,e1: b11; e2,x1: b52; e2,x2: -b52; e3,x1: b11; x1,e1: b41; x1,x1: b44; x2,e1: b51; x2,e2: b52; x2,x1: b54"),
    case!("2", || fixed(0, 3, 0, 0), 6, 5,
        "e1,e1: b11; e1,x1: 2b41; e2,x1: 3b52; e2,x2: -b52; e3,e1: b31; e3,x1: -b11; x1,e1: b41; x1,x1: b44; x2,e2: b52; x2,x1: b54"),
    case!("3", || fixed(0, 0, 0, 1), 6, 5,
        "e1,e1: b11; e1,x1: -b41; e1,x2: b41; e3,x1: 2b11; e3,x2: -b11; x1,e1: b41; x1,e2: b42; x1,x2: b45; x2,e2: b52; x2,x2: b55"),
    case!("4", || fixed(0, 0, 0, 2), 6, 5,
        "e1,e1: b11; e1,x1: -b41; e1,x2: 2b41; e2,e2: b22; e2,x2: b52; e3,x1: 2b11; e3,x2: -2b11; x1,e1: b41; x1,x2: b45; x2,e2: b52; x2,x2: b55"),
    case!("5", generic_zero, 5, 5,
        "e1,e1: b11; e1,x1: (α2-1)b41; e1,x2: β2b41; e2,x1: α2b52; e2,x2: (β2-1)b52; e3,x1: (2-α2)b11; e3,x2: -β2b11; x1,e1: b41; x1,x1: α2b45; x1,x2: β2b45; x2,e2: b52; x2,x1: α2b55; x2,x2: β2b55"),
    case!("6", || fixed(-1, 1, 0, 0), 5, 3,
        "e1,e1: b11; e1,x1: -b41; e1,x2: -b51; e2,x1: b52; e2,x2: -b52; e3,x1: b11; x1,e1: b41; x1,e2: -b52; x1,e3: b11; x1,x2: b45; x2,e1: b51; x2,e2: b52; x2,x1: -b45"),
    case!("7", || fixed(0, 0, -1, 1), 5, 3,
        "e1,e1: b11; e1,x1: -b41; e1,x2: b41; e2,x1: -b42; e2,x2: -b52; e3,x1: 2b11; e3,x2: -b11; x1,e1: b41; x1,e2: b42; x1,x2: b45; x2,e1: -b41; x2,e2: b52; x2,e3: b11; x2,x1: -b45"),
    case!("8", generic_opposite, 4, 4,
        "e1,e1: b11; e1,x1: -(1+α1)b51; e1,x2: -β1b51; e2,x1: -α1b52; e2,x2: -(1+β1)b52; e3,x1: (2+α1)b11; e3,x2: β1b11; x1,e1: (1+α1)b51; x1,e2: α1b52; x1,e3: -α1b11; x1,x2: b45; x2,e1: β1b51; x2,e2: (1+β1)b52; x2,e3: -β1b11; x2,x1: -b45"),
];

fn scalars(s: &[Rational; 4]) -> Scalars {
    let mut m = Scalars::new();
    m.insert("α1", s[0].clone());
    m.insert("α2", s[1].clone());
    m.insert("β1", s[2].clone());
    m.insert("β2", s[3].clone());
    m
}

fn five_case(base: &str, spec: &FiveCaseSpec, s: [Rational; 4]) -> Result<RepCase> {
    let (dims_tag, basis_tag) = match base {
        "H" => ("h-dims", "h-basis"),
        "L1" => ("l1-dims", "l1-basis"),
        "L2" => ("l2-dims", "l2-basis"),
        _ => ("l3-dims", "l3-basis"),
    };
    Ok(RepCase {
        algebra: base.to_string(),
        case: spec.case.to_string(),
        listed: parse_listed_basis(&BASE_LABELS, spec.listed, &scalars(&s))?,
        repaired: match spec.repaired {
            Some((note, text)) => Some((note, parse_listed_basis(&BASE_LABELS, text, &scalars(&s))?)),
            None => None,
        },
        rep: five_rep(base, &s)?,
        params: vec![
            ("alpha1", s[0].clone()),
            ("alpha2", s[1].clone()),
            ("beta1", s[2].clone()),
            ("beta2", s[3].clone()),
        ],
        expected_z2: spec.z2,
        expected_b2: spec.b2,
        dims_tag,
        basis_tag,
    })
}

/// The representation and cocycle of a classified extension, given
/// independently of its product table.
#[derive(Debug, Clone)]
pub struct HatSpec {
    pub name: &'static str,
    pub base: &'static str,
    pub scalars: [i64; 4],
    /// `e4`-components of the products of the base algebra.
    pub omega: &'static str,
}

pub const HAT_SPECS: &[HatSpec] = &[
    HatSpec { name: "H_hat_1", base: "H", scalars: [0, 1, 0, 0], omega: "[x2,e1]=e4" },
    HatSpec { name: "H_hat_2", base: "H", scalars: [0, 2, 0, 0], omega: "[e1,e1]=e4" },
    HatSpec { name: "H_hat_3", base: "H", scalars: [0, 1, 0, 1], omega: "[e1,e2]=e4, [e2,e1]=e4, [x1,e3]=-e4, [x2,e3]=e4" },
    HatSpec { name: "H_hat_4", base: "H", scalars: [-1, 1, 0, 0], omega: "[e1,x1]=e4, [x1,e1]=-e4" },
    HatSpec { name: "H_hat_5", base: "H", scalars: [-1, 1, 0, 0], omega: "[e1,x1]=De4, [x1,e1]=-De4, [e1,x2]=e4, [x2,e1]=-e4" },
    HatSpec { name: "H_hat_6", base: "H", scalars: [-2, 2, -1, 1], omega: "[e1,e3]=e4, [e3,e1]=-e4" },
    HatSpec { name: "L1_hat_1", base: "L1", scalars: [0, 1, 0, 0], omega: "[x2,e1]=e4" },
    HatSpec { name: "L1_hat_2", base: "L1", scalars: [0, 2, 0, 0], omega: "[e1,e1]=e4" },
    HatSpec { name: "L1_hat_3", base: "L1", scalars: [0, 2, 0, 1], omega: "[e3,e1]=e4" },
    HatSpec { name: "L1_hat_4", base: "L1", scalars: [0, 0, 0, 1], omega: "[e2,x1]=e4" },
    HatSpec { name: "L1_hat_5", base: "L1", scalars: [0, 0, 0, 1], omega: "[e2,x1]=De4, [e2,x2]=e4" },
    HatSpec { name: "L1_hat_6", base: "L1", scalars: [-1, 1, 0, 0], omega: "[e1,x1]=e4, [x1,e1]=-e4" },
    HatSpec { name: "L1_hat_7", base: "L1", scalars: [-1, 1, 0, 0], omega: "[e1,x1]=De4, [x1,e1]=-De4, [e1,x2]=e4, [x2,e1]=-e4" },
    HatSpec { name: "L2_hat_1", base: "L2", scalars: [0, 1, 0, 0], omega: "[x2,e1]=e4" },
    HatSpec { name: "L2_hat_2", base: "L2", scalars: [0, 3, 0, 0], omega: "[e3,e1]=e4" },
    HatSpec { name: "L2_hat_3", base: "L2", scalars: [0, 0, 0, 1], omega: "[e2,x1]=e4" },
    HatSpec { name: "L2_hat_4", base: "L2", scalars: [0, 0, 0, 1], omega: "[e2,x1]=De4, [e2,x2]=e4" },
    HatSpec { name: "L2_hat_5", base: "L2", scalars: [0, 1, 0, 1], omega: "[e2,e1]=e4" },
    HatSpec { name: "L2_hat_6", base: "L2", scalars: [-1, 1, 0, 0], omega: "[e1,x1]=e4, [x1,e1]=-e4" },
    HatSpec { name: "L2_hat_7", base: "L2", scalars: [-1, 1, 0, 0], omega: "[e1,x1]=De4, [x1,e1]=-De4, [e1,x2]=e4, [x2,e1]=-e4" },
    HatSpec { name: "L3_hat_1", base: "L3", scalars: [0, 1, 0, 0], omega: "[x2,e1]=e4" },
    HatSpec { name: "L3_hat_2", base: "L3", scalars: [0, 3, 0, 0], omega: "[e3,e1]=e4" },
    HatSpec { name: "L3_hat_3", base: "L3", scalars: [0, 0, 0, 1], omega: "[x1,e2]=e4" },
    HatSpec { name: "L3_hat_4", base: "L3", scalars: [0, 0, 0, 2], omega: "[e2,e2]=e4" },
    HatSpec { name: "L3_hat_5", base: "L3", scalars: [-1, 1, 0, 0], omega: "[e1,x1]=e4, [x1,e1]=-e4" },
    HatSpec { name: "L3_hat_6", base: "L3", scalars: [-1, 1, 0, 0], omega: "[e1,x1]=De4, [x1,e1]=-De4, [e1,x2]=e4, [x2,e1]=-e4" },
    HatSpec { name: "L3_hat_7", base: "L3", scalars: [0, 0, -1, 1], omega: "[e2,x1]=e4, [x1,e2]=-e4" },
    HatSpec { name: "L3_hat_8", base: "L3", scalars: [0, 0, -1, 1], omega: "[e2,x1]=De4, [x1,e2]=-De4, [e2,x2]=e4, [x2,e2]=-e4" },
];

pub fn hat_spec(name: &str) -> Result<&'static HatSpec> {
    HAT_SPECS
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// Reads the `e4`-components of base-algebra products written in bracket
/// notation as a cocycle on the base algebra.
fn omega_from_products(text: &str, delta: Option<&Rational>) -> Result<BilinearMap> {
    let t = parse_products("omega", &HAT_LABELS, text, delta)?;
    let e4 = 3;
    let mut w = BilinearMap::zero(5, 1);
    for (i, li) in BASE_LABELS.iter().enumerate() {
        for (j, lj) in BASE_LABELS.iter().enumerate() {
            let (a, b) = (t.label_index(li).expect("label"), t.label_index(lj).expect("label"));
            w.set(i, j, &[t.structure(a, b, e4).clone()]);
        }
    }
    Ok(w)
}

impl HatSpec {
    pub fn scalars(&self) -> [Rational; 4] {
        self.scalars.map(int)
    }

    pub fn element(&self, delta: Option<&Rational>) -> Result<OrbitElement> {
        let delta = if tables::hat_has_delta(self.name) {
            Some(delta.ok_or_else(|| Error::InvalidParameter {
                name: "delta".into(),
                reason: format!("{} is a one-parameter family", self.name),
            })?)
        } else {
            None
        };
        Ok(OrbitElement {
            rep: five_rep(self.base, &self.scalars())?,
            omega: omega_from_products(self.omega, delta)?,
        })
    }

    pub fn extension(&self, delta: Option<&Rational>) -> Result<ExtensionSpec> {
        let el = self.element(delta)?;
        ExtensionSpec::abelian(el.rep, el.omega, vec!["e4".into()])
    }
}

/// The extension of `R` (order `e1..en, x`, kernel `e_{n+1}`) by
/// `ω(e_n, e1) = δ e_{n+1}` with `γ = (0, −n−1)`.
pub fn r_hat_element(n: usize, delta: &Rational) -> Result<OrbitElement> {
    let rep = r_rep(n, &int(0), &int(-(n as i64) - 1))?;
    let omega = BilinearMap::scalar_entries(n + 1, &[(n - 1, 0, delta.clone())]);
    Ok(OrbitElement { rep, omega })
}

pub fn r_hat_extension(n: usize) -> Result<ExtensionSpec> {
    let el = r_hat_element(n, &int(1))?;
    ExtensionSpec::abelian(el.rep, el.omega, vec![format!("e{}", n + 1)])
}

/// A target of orbit normalization: a classified extension, with δ for the
/// one-parameter families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatTarget {
    pub name: &'static str,
    pub delta: Option<Rational>,
}

impl HatTarget {
    pub fn label(&self) -> String {
        match &self.delta {
            Some(d) => format!("{}({})", self.name, format_rational(d)),
            None => self.name.to_string(),
        }
    }
}

/// One classification argument: a case with nonzero `H²`, generators of
/// `H²`, the automorphism family used and the closed-form witness.
#[derive(Clone)]
pub struct Classification {
    pub base: &'static str,
    pub case: &'static str,
    pub scalars: [Rational; 4],
    pub family: AutFamily,
    /// Cocycles whose classes span `H²`.
    pub generators: Vec<BilinearMap>,
    /// Sample coordinates with respect to `generators`.
    pub samples: Vec<Vec<Rational>>,
    /// Family parameters followed by `λ`, as a function of the coordinates.
    pub witness: fn(&[Rational]) -> Vec<Rational>,
    /// Which classified extension the coordinates lead to.
    pub expected: fn(&[Rational]) -> HatTarget,
    /// All targets offered to the search.
    pub candidates: Vec<&'static str>,
}

impl Classification {
    pub fn label(&self) -> String {
        format!("{} case {}", self.base, self.case)
    }

    pub fn rep(&self) -> RepresentationPair {
        five_rep(self.base, &self.scalars).expect("fixture")
    }

    /// `Σ cᵢ generatorᵢ`.
    pub fn element(&self, coords: &[Rational]) -> OrbitElement {
        let mut w = BilinearMap::zero(5, 1);
        for (c, g) in coords.iter().zip(&self.generators) {
            w = w.add(&g.scale(c));
        }
        OrbitElement { rep: self.rep(), omega: w }
    }
}

fn gens(list: &[&str]) -> Vec<BilinearMap> {
    list.iter().map(|t| omega_from_products(t, None).expect("fixture")).collect()
}

fn single() -> Vec<Vec<Rational>> {
    vec![vec![int(3)], vec![frac(-1, 2)]]
}

fn pair() -> Vec<Vec<Rational>> {
    vec![vec![int(2), int(0)], vec![int(3), frac(-1, 2)], vec![int(0), int(5)]]
}

fn inv(q: &Rational) -> Rational {
    one() / q
}

/// `(δ1, δ2) ↦ (scale, target δ)`: scale by `1/δ2` when `δ2 ≠ 0`, else `1/δ1`.
fn pair_scale(d: &[Rational]) -> Rational {
    if d[1].is_zero() {
        inv(&d[0])
    } else {
        inv(&d[1])
    }
}

fn pair_target(a: &'static str, b: &'static str, d: &[Rational]) -> HatTarget {
    if d[1].is_zero() {
        HatTarget { name: a, delta: None }
    } else {
        HatTarget {
            name: b,
            delta: Some(&d[0] / &d[1]),
        }
    }
}

fn h_params(a1: Rational, lambda: Rational) -> Vec<Rational> {
    vec![a1, int(0), int(1), int(0), int(0), lambda]
}

fn fixed_target(name: &'static str) -> HatTarget {
    HatTarget { name, delta: None }
}

/// Every classification argument for the four five-dimensional algebras.
pub fn classifications() -> Vec<Classification> {
    let s = |a: [i64; 4]| a.map(int);
    let phi1 = families::h_phi1;
    let phi2 = families::h_phi2;
    let mut out = vec![
        Classification {
            base: "H", case: "I", scalars: s([0, 1, 0, 0]), family: phi1(),
            generators: gens(&["[x2,e1]=e4"]), samples: single(),
            witness: |d| h_params(inv(&d[0]), int(1)),
            expected: |_| fixed_target("H_hat_1"), candidates: vec!["H_hat_1"],
        },
        Classification {
            base: "H", case: "II", scalars: s([0, 0, 0, 1]), family: phi2(),
            generators: gens(&["[x1,e2]=e4"]), samples: single(),
            witness: |d| h_params(inv(&d[0]), int(1)),
            expected: |_| fixed_target("H_hat_1"), candidates: vec!["H_hat_1"],
        },
        Classification {
            base: "H", case: "III", scalars: s([0, 2, 0, 0]), family: phi1(),
            generators: gens(&["[e1,e1]=e4"]), samples: single(),
            witness: |d| h_params(int(1), inv(&d[0])),
            expected: |_| fixed_target("H_hat_2"), candidates: vec!["H_hat_2"],
        },
        Classification {
            base: "H", case: "IV", scalars: s([0, 0, 0, 2]), family: phi2(),
            generators: gens(&["[e2,e2]=e4"]), samples: single(),
            witness: |d| h_params(int(1), inv(&d[0])),
            expected: |_| fixed_target("H_hat_2"), candidates: vec!["H_hat_2"],
        },
        Classification {
            base: "H", case: "V", scalars: s([0, 1, 0, 1]), family: phi1(),
            generators: gens(&["[e1,e2]=e4, [e2,e1]=e4, [x1,e3]=-e4, [x2,e3]=e4"]), samples: single(),
            witness: |d| h_params(int(1), inv(&d[0])),
            expected: |_| fixed_target("H_hat_3"), candidates: vec!["H_hat_3"],
        },
        Classification {
            base: "H", case: "VII", scalars: s([-1, 1, 0, 0]), family: phi1(),
            generators: gens(&["[e1,x1]=e4, [x1,e1]=-e4", "[e1,x2]=e4, [x2,e1]=-e4"]), samples: pair(),
            witness: |d| h_params(pair_scale(d), int(1)),
            expected: |d| pair_target("H_hat_4", "H_hat_5", d), candidates: vec!["H_hat_4", "H_hat_5"],
        },
        Classification {
            base: "H", case: "VIII", scalars: s([0, 0, -1, 1]), family: phi2(),
            generators: gens(&["[e2,x2]=e4, [x2,e2]=-e4", "[e2,x1]=e4, [x1,e2]=-e4"]), samples: pair(),
            witness: |d| h_params(pair_scale(d), int(1)),
            expected: |d| pair_target("H_hat_4", "H_hat_5", d), candidates: vec!["H_hat_4", "H_hat_5"],
        },
        Classification {
            base: "H", case: "IX", scalars: s([-1, 1, -2, 2]), family: phi2(),
            generators: gens(&["[e2,e3]=e4, [e3,e2]=-e4"]), samples: single(),
            witness: |d| h_params(int(1), inv(&d[0])),
            expected: |_| fixed_target("H_hat_6"), candidates: vec!["H_hat_6"],
        },
        Classification {
            base: "H", case: "X", scalars: s([-2, 2, -1, 1]), family: phi1(),
            generators: gens(&["[e1,e3]=e4, [e3,e1]=-e4"]), samples: single(),
            witness: |d| h_params(int(1), inv(&d[0])),
            expected: |_| fixed_target("H_hat_6"), candidates: vec!["H_hat_6"],
        },
    ];
    let l1 = families::l1_family;
    out.extend([
        Classification {
            base: "L1", case: "I", scalars: s([0, 1, 0, 0]), family: l1(),
            generators: gens(&["[x2,e1]=e4"]), samples: single(),
            witness: |d| vec![inv(&d[0]), int(1), int(1)],
            expected: |_| fixed_target("L1_hat_1"), candidates: vec!["L1_hat_1"],
        },
        Classification {
            base: "L1", case: "II", scalars: s([0, 2, 0, 0]), family: l1(),
            generators: gens(&["[e1,e1]=e4"]), samples: single(),
            witness: |d| vec![int(1), int(1), inv(&d[0])],
            expected: |_| fixed_target("L1_hat_2"), candidates: vec!["L1_hat_2"],
        },
        Classification {
            base: "L1", case: "III", scalars: s([0, 2, 0, 1]), family: l1(),
            generators: gens(&["[e3,e1]=e4"]), samples: single(),
            witness: |d| vec![int(1), int(1), inv(&d[0])],
            expected: |_| fixed_target("L1_hat_3"), candidates: vec!["L1_hat_3"],
        },
        Classification {
            base: "L1", case: "IV", scalars: s([0, 0, 0, 1]), family: l1(),
            generators: gens(&["[e2,x1]=e4", "[e2,x2]=e4"]), samples: pair(),
            witness: |d| vec![int(1), pair_scale(d), int(1)],
            expected: |d| pair_target("L1_hat_4", "L1_hat_5", d), candidates: vec!["L1_hat_4", "L1_hat_5"],
        },
        Classification {
            base: "L1", case: "VI", scalars: s([-1, 1, 0, 0]), family: l1(),
            generators: gens(&["[e1,x1]=e4, [x1,e1]=-e4", "[e1,x2]=e4, [x2,e1]=-e4"]), samples: pair(),
            witness: |d| vec![pair_scale(d), int(1), int(1)],
            expected: |d| pair_target("L1_hat_6", "L1_hat_7", d), candidates: vec!["L1_hat_6", "L1_hat_7"],
        },
    ]);
    let l2 = families::l2_family;
    out.extend([
        Classification {
            base: "L2", case: "1", scalars: s([0, 1, 0, 0]), family: l2(),
            generators: gens(&["[x2,e1]=e4"]), samples: single(),
            witness: |d| vec![inv(&d[0]), int(1), int(0), int(1)],
            expected: |_| fixed_target("L2_hat_1"), candidates: vec!["L2_hat_1"],
        },
        Classification {
            base: "L2", case: "2", scalars: s([0, 3, 0, 0]), family: l2(),
            generators: gens(&["[e3,e1]=e4"]), samples: single(),
            witness: |d| vec![int(1), int(1), int(0), inv(&d[0])],
            expected: |_| fixed_target("L2_hat_2"), candidates: vec!["L2_hat_2"],
        },
        Classification {
            base: "L2", case: "3", scalars: s([0, 0, 0, 1]), family: l2(),
            generators: gens(&["[e2,x1]=e4", "[e2,x2]=e4"]), samples: pair(),
            witness: |d| vec![int(1), pair_scale(d), int(0), int(1)],
            expected: |d| pair_target("L2_hat_3", "L2_hat_4", d), candidates: vec!["L2_hat_3", "L2_hat_4"],
        },
        Classification {
            base: "L2", case: "4", scalars: s([0, 1, 0, 1]), family: l2(),
            generators: gens(&["[e2,e1]=e4"]), samples: single(),
            witness: |d| vec![int(1), int(1), int(0), inv(&d[0])],
            expected: |_| fixed_target("L2_hat_5"), candidates: vec!["L2_hat_5"],
        },
        Classification {
            base: "L2", case: "6", scalars: s([-1, 1, 0, 0]), family: l2(),
            generators: gens(&["[e1,x1]=e4, [x1,e1]=-e4", "[e1,x2]=e4, [x2,e1]=-e4"]), samples: pair(),
            witness: |d| vec![pair_scale(d), int(1), int(0), int(1)],
            expected: |d| pair_target("L2_hat_6", "L2_hat_7", d), candidates: vec!["L2_hat_6", "L2_hat_7"],
        },
    ]);
    let l3 = families::l3_family;
    out.extend([
        Classification {
            base: "L3", case: "1", scalars: s([0, 1, 0, 0]), family: l3(),
            generators: gens(&["[x2,e1]=e4"]), samples: single(),
            witness: |d| vec![inv(&d[0]), int(1), int(0), int(0), int(1)],
            expected: |_| fixed_target("L3_hat_1"), candidates: vec!["L3_hat_1"],
        },
        Classification {
            base: "L3", case: "2", scalars: s([0, 3, 0, 0]), family: l3(),
            generators: gens(&["[e3,e1]=e4"]), samples: single(),
            witness: |d| vec![int(1), int(1), int(0), int(0), inv(&d[0])],
            expected: |_| fixed_target("L3_hat_2"), candidates: vec!["L3_hat_2"],
        },
        Classification {
            base: "L3", case: "3", scalars: s([0, 0, 0, 1]), family: l3(),
            generators: gens(&["[x1,e2]=e4"]), samples: single(),
            witness: |d| vec![int(1), inv(&d[0]), int(0), int(0), int(1)],
            expected: |_| fixed_target("L3_hat_3"), candidates: vec!["L3_hat_3"],
        },
        Classification {
            base: "L3", case: "4", scalars: s([0, 0, 0, 2]), family: l3(),
            generators: gens(&["[e2,e2]=e4"]), samples: single(),
            witness: |d| vec![int(1), int(1), int(0), int(0), inv(&d[0])],
            expected: |_| fixed_target("L3_hat_4"), candidates: vec!["L3_hat_4"],
        },
        Classification {
            base: "L3", case: "6", scalars: s([-1, 1, 0, 0]), family: l3(),
            generators: gens(&["[e1,x1]=e4, [x1,e1]=-e4", "[e1,x2]=e4, [x2,e1]=-e4"]), samples: pair(),
            witness: |d| vec![pair_scale(d), int(1), int(0), int(0), int(1)],
            expected: |d| pair_target("L3_hat_5", "L3_hat_6", d), candidates: vec!["L3_hat_5", "L3_hat_6"],
        },
        Classification {
            base: "L3", case: "7", scalars: s([0, 0, -1, 1]), family: l3(),
            generators: gens(&["[e2,x1]=e4, [x1,e2]=-e4", "[e2,x2]=e4, [x2,e2]=-e4"]), samples: pair(),
            witness: |d| vec![int(1), pair_scale(d), int(0), int(0), int(1)],
            expected: |d| pair_target("L3_hat_7", "L3_hat_8", d), candidates: vec!["L3_hat_7", "L3_hat_8"],
        },
    ]);
    out
}

/// The `R` family with the corrected image of `x`.
pub fn r_family(n: usize) -> AutFamily {
    families::r_family(n, RVariant::Corrected)
}

/// A table as listed next to the repaired form used by the catalog.
#[derive(Debug, Clone)]
pub struct Erratum {
    pub name: String,
    pub description: &'static str,
    pub listed: AlgebraTable,
    pub repaired: AlgebraTable,
}

pub fn errata() -> Vec<Erratum> {
    let mut out = vec![Erratum {
        name: "H".into(),
        description: "[x2,e2] read as +e2 instead of -e2",
        listed: parse_products("H", &BASE_LABELS, tables::H_ALTERNATIVE, None).expect("fixture"),
        repaired: tables::base("H").expect("fixture"),
    }];
    for (name, text) in tables::LISTED_HAT_VARIANTS {
        let description = match *name {
            "H_hat_3" => "[x1,e3] listed with +e4, repaired to -e4",
            _ => "spurious [e1,x2]=e4 removed",
        };
        for delta in [int(0), int(1), int(2), int(-1)] {
            let d = tables::hat_has_delta(name).then_some(&delta);
            out.push(Erratum {
                name: match d {
                    Some(d) => format!("{name}({})", format_rational(d)),
                    None => name.to_string(),
                },
                description,
                listed: parse_products(name, &HAT_LABELS, text, d).expect("fixture"),
                repaired: tables::hat(name, d).expect("fixture"),
            });
            if d.is_none() {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hat_specs_cover_every_hat() {
        assert_eq!(HAT_SPECS.len(), tables::HATS.len());
        for (name, _, _) in tables::HATS {
            assert!(hat_spec(name).is_ok());
        }
    }

    #[test]
    fn expectation_rows() {
        let rows = expectations();
        let find = |alg: &str, case: &str| rows.iter().find(|r| r.algebra == alg && r.case == case).unwrap();
        assert_eq!((find("H", "I").z2, find("H", "I").b2, find("H", "I").h2), (6, 5, 1));
        assert_eq!(find("L1", "IV").h2, 2);
        assert_eq!((find("L3", "7").z2, find("L3", "7").b2), (5, 3));
        assert!(rows.iter().all(|r| r.z2 >= r.b2));
    }
}
