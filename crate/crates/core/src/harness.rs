//! The verification harness: every catalog claim recomputed and compared,
//! one [`Check`] per claim, grouped by tag.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraTable, Fingerprint};
use crate::catalog::cases::{self, Classification, HatTarget, RepCase, HAT_SPECS};
use crate::catalog::families::{self, RVariant};
use crate::catalog::{self, tables};
use crate::cohomology::{
    coboundary_preimage, compute_b2, compute_b2_with, compute_h2, BilinearMap, LinearHom, RepresentationPair,
};
use crate::extension::ExtensionSpec;
use crate::linalg::{Matrix, SubspaceBasis};
use crate::orbit::{
    act, coboundary_isomorphism, default_grid, extension_isomorphism, is_isomorphism, normalize_in_orbit,
    permutation_matrix, verify_automorphism, AutFamily, Automorphism, AutomorphismFailure, OrbitElement, OrbitMatch,
    DEFAULT_SEARCH_CAP,
};
use crate::rational::{format_rational, frac, int, pow, random_nonzero_rational, random_rational, Rational};
use crate::report::{Check, Report, Status};

pub const DEFAULT_SEED: u64 = 20240601;

/// Every tag the harness emits, in report order.
pub const TAGS: &[&str] = &[
    "aut-families",
    "certificates",
    "errata",
    "h-basis",
    "h-classification",
    "h-dims",
    "l1-basis",
    "l1-classification",
    "l1-dims",
    "l2-basis",
    "l2-classification",
    "l2-dims",
    "l3-basis",
    "l3-classification",
    "l3-dims",
    "leibniz",
    "lemma",
    "nilradical",
    "properties",
    "r-basis",
    "r-dims",
    "r-hat",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessConfig {
    pub seed: u64,
    /// Run only tags equal to this or starting with `only-`.
    pub only: Option<String>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            seed: DEFAULT_SEED,
            only: None,
        }
    }
}

impl HarnessConfig {
    pub fn wants(&self, tag: &str) -> bool {
        match &self.only {
            None => true,
            Some(o) => tag == o || tag.starts_with(&format!("{o}-")),
        }
    }

    fn wants_any(&self, tags: &[&str]) -> bool {
        tags.iter().any(|t| self.wants(t))
    }

    /// Each group draws from its own stream so filtering does not change
    /// the random choices of the groups that still run.
    fn rng(&self, group: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ group.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// Collects checks, dropping those whose tag is filtered out.
struct Sink<'a> {
    config: &'a HarnessConfig,
    checks: Vec<Check>,
}

impl Sink<'_> {
    fn push(&mut self, check: Check) {
        if self.config.wants(&check.tag) {
            self.checks.push(check);
        }
    }
}

type Group = fn(&HarnessConfig, &mut Sink);

const GROUPS: &[(&str, &[&str], Group)] = &[
    ("tables", &["leibniz", "nilradical"], tables_group),
    (
        "cohomology",
        &[
            "r-dims", "h-dims", "l1-dims", "l2-dims", "l3-dims", "r-basis", "h-basis", "l1-basis", "l2-basis", "l3-basis",
            "errata",
        ],
        cohomology_group,
    ),
    ("r-hat", &["r-hat"], r_hat_group),
    (
        "classification",
        &["h-classification", "l1-classification", "l2-classification", "l3-classification"],
        classification_group,
    ),
    ("lemma", &["lemma", "errata"], lemma_group),
    ("aut-families", &["aut-families", "errata"], aut_group),
    ("properties", &["properties"], properties_group),
    ("certificates", &["certificates"], certificates_group),
    ("errata", &["errata"], errata_group),
];

pub fn run(config: &HarnessConfig) -> Report {
    let mut report = Report::new("verify", Some(config.seed));
    let mut sink = Sink {
        config,
        checks: Vec::new(),
    };
    for (name, tags, group) in GROUPS {
        if config.wants_any(tags) {
            let start = Instant::now();
            group(config, &mut sink);
            report.timings.push((name.to_string(), start.elapsed()));
        }
    }
    report.checks = sink.checks;
    report.sort();
    report
}

fn fmt_all(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------- tables

fn tables_group(config: &HarnessConfig, sink: &mut Sink) {
    for e in catalog::all_entries() {
        let report = e.table.leibniz_check();
        let n = report.violations.len();
        let detail = match report.violations.first() {
            None => "Leibniz identity holds".to_string(),
            Some(&(i, j, k)) => {
                let l = e.table.labels();
                format!("{n} violating triples, first ({},{},{})", l[i], l[j], l[k])
            }
        };
        sink.push(
            Check::new("leibniz", e.label(), format!("{} table", e.name), Status::from_bool(n == 0))
                .detail(detail)
                .number("violations", n),
        );
        if let Some(nil) = &e.nilradical {
            let verdict = e.table.verify_nilradical(nil, 16, config.seed);
            sink.push(
                Check::new("nilradical", e.label(), format!("{} nilradical", e.name), Status::from_bool(verdict.passed()))
                    .detail(format!("{}-dimensional: {verdict:?}", nil.dim()))
                    .number("dim", nil.dim()),
            );
        }
    }
}

// ------------------------------------------------------------ cohomology

fn case_id(c: &RepCase) -> String {
    let params: Vec<Rational> = c.params.iter().map(|(_, v)| v.clone()).collect();
    format!("{}/{}/{}", c.algebra, c.case, fmt_all(&params))
}

fn span_of(ambient: usize, maps: &[BilinearMap]) -> SubspaceBasis {
    SubspaceBasis::span(ambient, maps.iter().map(|m| m.as_vector().to_vec()).collect()).expect("shape")
}

fn cohomology_group(_: &HarnessConfig, sink: &mut Sink) {
    for c in cases::rep_cases() {
        let h = compute_h2(&c.rep);
        let (z2, b2, h2) = (h.z2.dim(), h.b2.dim(), h.dim());
        let ok = z2 == c.expected_z2 && b2 == c.expected_b2;
        sink.push(
            Check::new(c.dims_tag, case_id(&c), c.citation(), Status::from_bool(ok))
                .detail(format!(
                    "dim Z2 = {z2}, dim B2 = {b2}, dim H2 = {h2}; listed {}, {}",
                    c.expected_z2, c.expected_b2
                ))
                .number("z2", z2)
                .number("b2", b2)
                .number("h2", h2)
                .number("expected_z2", c.expected_z2)
                .number("expected_b2", c.expected_b2),
        );

        let ambient = h.z2.basis.ambient_dim();
        let span = span_of(ambient, &c.listed.vectors);
        let equal = span == h.z2.basis;
        let non_cocycles: Vec<&str> = c
            .listed
            .symbols
            .iter()
            .zip(&c.listed.vectors)
            .filter(|(_, v)| !h.z2.contains(v))
            .map(|(s, _)| s.as_str())
            .collect();
        let mut detail = format!(
            "{} listed vectors span a {}-dimensional space, dim Z2 = {z2}",
            c.listed.vectors.len(),
            span.dim()
        );
        if !non_cocycles.is_empty() {
            detail.push_str(&format!("; not cocycles: {}", non_cocycles.join(" ")));
        }
        for (l, r, s) in &c.listed.conflicts {
            detail.push_str(&format!("; {s} listed twice at ({l},{r})"));
        }
        sink.push(
            Check::new(c.basis_tag, case_id(&c), c.citation(), Status::from_bool(equal && c.listed.conflicts.is_empty()))
                .detail(detail)
                .number("listed", c.listed.vectors.len())
                .number("span", span.dim())
                .number("z2", z2),
        );
        if let Some((note, repaired)) = &c.repaired {
            let ok = !equal && span_of(ambient, &repaired.vectors) == h.z2.basis;
            sink.push(
                Check::new("errata", format!("basis/{}", case_id(&c)), c.citation(), Status::from_bool(ok))
                    .detail(format!("listed basis does not span Z2; with {note} it does")),
            );
        }
    }
}

// ----------------------------------------------------------------- r-hat

fn same_element(a: &OrbitElement, b: &OrbitElement) -> bool {
    a.rep == b.rep && a.omega == b.omega
}

fn random_coboundary<R: Rng>(rng: &mut R, rep: &RepresentationPair) -> BilinearMap {
    let (m, n) = (rep.h_dim(), rep.g_dim());
    let mut f = Matrix::zeros(m, n);
    for a in 0..m {
        for t in 0..n {
            f[(a, t)] = random_rational(rng);
        }
    }
    LinearHom { matrix: f }.coboundary(rep)
}

/// Composes the normalization with the coboundary shift and the relabeling
/// into one map from `table` onto the extension of `el`, and checks it.
fn verify_chain(
    el: &OrbitElement,
    found: &OrbitMatch,
    target: &OrbitElement,
    kernel: &str,
    table: &AlgebraTable,
    relabeling: &[usize],
) -> Result<(), String> {
    let moved = act(&found.automorphism, el);
    let f = coboundary_preimage(&target.rep, &moved.omega.sub(&target.omega))
        .ok_or("cocycles differ by a non-coboundary")?;
    let build = |e: &OrbitElement| {
        ExtensionSpec::abelian(e.rep.clone(), e.omega.clone(), vec![kernel.to_string()])
            .map(|s| s.build())
            .map_err(|e| e.to_string())
    };
    let target_table = build(target)?;
    if !target_table.permuted(relabeling).map_err(|e| e.to_string())?.same_products(table) {
        return Err("target extension differs from the table".into());
    }
    let p_inv = permutation_matrix(relabeling).transpose();
    let total = extension_isomorphism(&found.automorphism)
        .mul(&coboundary_isomorphism(&f))
        .and_then(|m| m.mul(&p_inv))
        .map_err(|e| e.to_string())?;
    is_isomorphism(table, &build(el)?, &total).map_err(|e| format!("composed map is not an isomorphism: {e:?}"))
}

fn r_hat_group(config: &HarnessConfig, sink: &mut Sink) {
    let mut rng = config.rng(3);
    let all_cases = cases::rep_cases();
    for n in 2..=5 {
        let citation = format!("R_hat, n={n}");
        let alg = format!("R{n}");
        let mut nonzero = Vec::new();
        let mut ok = true;
        for c in all_cases.iter().filter(|c| c.algebra == alg) {
            let h2 = compute_h2(&c.rep).dim();
            if h2 != 0 {
                nonzero.push(format!("{}={h2}", case_id(c)));
            }
            ok &= (h2 == 1) == (c.case == "1");
        }
        sink.push(
            Check::new("r-hat", format!("{alg}/h2-support"), citation.clone(), Status::from_bool(ok))
                .detail(format!("dim H2 nonzero at {}", nonzero.join(" ")))
                .number("nonzero_cases", nonzero.len()),
        );

        let spec = cases::r_hat_extension(n).expect("n >= 2");
        let table = tables::r_hat(n).expect("n >= 2");
        let relabeling = tables::r_hat_relabeling(n);
        let built = spec.build().permuted(&relabeling).expect("permutation");
        let valid = spec.validity_check();
        sink.push(
            Check::new("r-hat", format!("{alg}/table"), citation.clone(), Status::from_bool(built.same_products(&table) && valid.holds()))
                .detail(format!(
                    "built extension {} the table; {} validity failures",
                    if built.same_products(&table) { "equals" } else { "differs from" },
                    valid.failed.len()
                )),
        );

        let nf = tables::null_filiform(n + 1).expect("n >= 2");
        let restricted_ok = (0..=n).all(|i| {
            (0..=n).all(|j| (0..=n).all(|k| table.structure(i, j, k) == nf.structure(i, j, k)) && table.structure(i, j, n + 1).is_zero())
        });
        sink.push(
            Check::new("r-hat", format!("{alg}/nilradical"), citation.clone(), Status::from_bool(restricted_ok))
                .detail(format!("span of e1..e{} is NF{}", n + 1, n + 1)),
        );

        // δ' = δ λ a^{n+1}
        let grid_a = [int(2), int(-1), frac(1, 2)];
        let grid_d = [int(1), int(-3), frac(2, 5)];
        let grid_l = [int(1), int(3), frac(-1, 2)];
        let mut bad = 0;
        for a in &grid_a {
            for d in &grid_d {
                for l in &grid_l {
                    let phi = families::r_matrix(n, a, &Rational::zero(), RVariant::Corrected);
                    let aut = Automorphism::scaled(phi, l.clone(), 1).expect("invertible");
                    let moved = act(&aut, &cases::r_hat_element(n, d).expect("n >= 2"));
                    let expected = cases::r_hat_element(n, &(d * l * pow(a, n + 1))).expect("n >= 2");
                    if !same_element(&moved, &expected) {
                        bad += 1;
                    }
                }
            }
        }
        sink.push(
            Check::new("r-hat", format!("{alg}/scaling"), citation.clone(), Status::from_bool(bad == 0))
                .detail(format!("delta' = delta lambda a^{} on 27 grid points, {bad} mismatches", n + 1))
                .number("mismatches", bad),
        );

        let family = cases::r_family(n);
        let target = cases::r_hat_element(n, &int(1)).expect("n >= 2");
        for d in [int(3), frac(-1, 2)] {
            let base = cases::r_hat_element(n, &d).expect("n >= 2");
            let el = OrbitElement {
                omega: base.omega.add(&random_coboundary(&mut rng, &base.rep)),
                rep: base.rep,
            };
            let witness = vec![int(1), int(0), &int(1) / &d];
            let found = normalize_in_orbit(&el, &family, std::slice::from_ref(&target), &[witness], &default_grid(), DEFAULT_SEARCH_CAP);
            let (status, detail) = match &found {
                None => (Status::Fail, "no automorphism found".to_string()),
                Some(m) => match verify_chain(&el, m, &target, &format!("e{}", n + 1), &table, &relabeling) {
                    Ok(()) => (Status::Pass, format!("normalized with (a, b, lambda) = ({})", fmt_all(&m.params))),
                    Err(e) => (Status::Fail, e),
                },
            };
            sink.push(
                Check::new("r-hat", format!("{alg}/normalize/{}", format_rational(&d)), citation.clone(), status).detail(detail),
            );
        }
    }
}

// -------------------------------------------------------- classification

fn class_tag(base: &str) -> &'static str {
    match base {
        "H" => "h-classification",
        "L1" => "l1-classification",
        "L2" => "l2-classification",
        _ => "l3-classification",
    }
}

fn targets_for(c: &Classification, expected: &HatTarget) -> (Vec<OrbitElement>, Vec<HatTarget>) {
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    for name in &c.candidates {
        let spec = cases::hat_spec(name).expect("fixture");
        if tables::hat_has_delta(name) {
            let mut qs = catalog::delta_samples();
            if let Some(q) = &expected.delta {
                if !qs.contains(q) {
                    qs.push(q.clone());
                }
            }
            for q in qs {
                elements.push(spec.element(Some(&q)).expect("fixture"));
                labels.push(HatTarget { name, delta: Some(q) });
            }
        } else {
            elements.push(spec.element(None).expect("fixture"));
            labels.push(HatTarget { name, delta: None });
        }
    }
    (elements, labels)
}

fn classification_group(config: &HarnessConfig, sink: &mut Sink) {
    let mut rng = config.rng(4);
    let all = cases::classifications();
    for c in &all {
        let tag = class_tag(c.base);
        let rep = c.rep();
        let h = compute_h2(&rep);
        let coords: Option<Vec<Vec<Rational>>> = c.generators.iter().map(|g| h.class_coordinates(g)).collect();
        let gens_ok = match &coords {
            Some(rows) => {
                rows.len() == h.dim() && Matrix::from_rows(rows.clone(), h.dim()).map(|m| m.rank() == h.dim()).unwrap_or(false)
            }
            None => false,
        };
        sink.push(
            Check::new(tag, format!("{}/{}/generators", c.base, c.case), c.label(), Status::from_bool(gens_ok))
                .detail(format!("{} generators, dim H2 = {}", c.generators.len(), h.dim()))
                .number("h2", h.dim()),
        );
        for d in &c.samples {
            let base = c.element(d);
            let el = OrbitElement {
                omega: base.omega.add(&random_coboundary(&mut rng, &rep)),
                rep: base.rep,
            };
            let expected = (c.expected)(d);
            let (targets, labels) = targets_for(c, &expected);
            let found = normalize_in_orbit(&el, &c.family, &targets, &[(c.witness)(d)], &default_grid(), DEFAULT_SEARCH_CAP);
            let (status, detail) = match &found {
                None => (Status::Fail, format!("no automorphism found; expected {}", expected.label())),
                Some(m) if labels[m.target] != expected => (
                    Status::Fail,
                    format!("reached {}, expected {}", labels[m.target].label(), expected.label()),
                ),
                Some(m) => {
                    let t = &labels[m.target];
                    let table = tables::hat(t.name, t.delta.as_ref()).expect("fixture");
                    match verify_chain(&el, m, &targets[m.target], "e4", &table, &tables::HAT_RELABELING) {
                        Ok(()) => (
                            Status::Pass,
                            format!(
                                "{} with {} parameters ({}){}",
                                t.label(),
                                c.family.name,
                                fmt_all(&m.params),
                                if m.explicit { "" } else { " found by grid search" }
                            ),
                        ),
                        Err(e) => (Status::Fail, e),
                    }
                }
            };
            sink.push(
                Check::new(tag, format!("{}/{}/{}", c.base, c.case, fmt_all(d)), c.label(), status)
                    .detail(detail)
                    .number("target", expected.label()),
            );
        }
    }

    // cases exchanged by the automorphism swapping x1 and x2
    let swap = Automorphism::scaled(
        families::h_phi2().instantiate(&[int(1), int(0), int(1), int(0), int(0)]).expect("valid parameters"),
        int(1),
        1,
    )
    .expect("invertible");
    let find = |case: &str| all.iter().find(|c| c.base == "H" && c.case == case).expect("fixture");
    for (a, b) in [("I", "II"), ("III", "IV"), ("VII", "VIII"), ("IX", "X")] {
        let (ca, cb) = (find(a), find(b));
        let mut ok = true;
        let hb = compute_h2(&cb.rep());
        let gens_b = span_of(25, &cb.generators).sum(&hb.b2.basis).expect("shape");
        for g in &ca.generators {
            let moved = act(&swap, &OrbitElement { rep: ca.rep(), omega: g.clone() });
            ok &= moved.rep == cb.rep() && gens_b.contains(moved.omega.as_vector()) && !hb.is_coboundary(&moved.omega);
        }
        sink.push(
            Check::new("h-classification", format!("H/swap/{a}-{b}"), format!("H cases {a} and {b}"), Status::from_bool(ok))
                .detail(format!("the x1/x2 swap carries case {a} onto case {b}")),
        );
    }
}

// ----------------------------------------------------------------- lemma

struct Built {
    id: String,
    citation: String,
    spec: ExtensionSpec,
    nilradical: SubspaceBasis,
}

fn built_extensions(config: &HarnessConfig) -> Vec<Built> {
    let mut out = Vec::new();
    let five_n = SubspaceBasis::coordinate(5, &[0, 1, 2]);
    for s in HAT_SPECS {
        let deltas: Vec<Option<Rational>> = if tables::hat_has_delta(s.name) {
            catalog::delta_samples().into_iter().map(Some).collect()
        } else {
            vec![None]
        };
        for d in deltas {
            let label = match &d {
                Some(d) => format!("{}({})", s.name, format_rational(d)),
                None => s.name.to_string(),
            };
            out.push(Built {
                id: label.clone(),
                citation: label,
                spec: s.extension(d.as_ref()).expect("fixture"),
                nilradical: five_n.clone(),
            });
        }
    }
    for n in 2..=5 {
        out.push(Built {
            id: format!("R_hat{n}"),
            citation: format!("R_hat, n={n}"),
            spec: cases::r_hat_extension(n).expect("n >= 2"),
            nilradical: SubspaceBasis::coordinate(n + 1, &(0..n).collect::<Vec<_>>()),
        });
        let g = tables::r_algebra(n).expect("n >= 2");
        out.push(Built {
            id: format!("R{n}/split"),
            citation: format!("R{n} with zero cocycle and action"),
            spec: ExtensionSpec::abelian(RepresentationPair::zero(g, 1), BilinearMap::zero(n + 1, 1), vec!["h".into()])
                .expect("shape"),
            nilradical: SubspaceBasis::coordinate(n + 1, &(0..n).collect::<Vec<_>>()),
        });
    }
    for base in ["H", "L1", "L2", "L3"] {
        let g = tables::base(base).expect("fixture");
        out.push(Built {
            id: format!("{base}/split"),
            citation: format!("{base} with zero cocycle and action"),
            spec: ExtensionSpec::abelian(RepresentationPair::zero(g, 1), BilinearMap::zero(5, 1), vec!["h".into()])
                .expect("shape"),
            nilradical: five_n.clone(),
        });
    }
    let mut rng = config.rng(5);
    for c in cases::classifications() {
        for d in &c.samples {
            let el = c.element(d);
            let omega = el.omega.add(&random_coboundary(&mut rng, &el.rep));
            out.push(Built {
                id: format!("{}/{}/{}", c.base, c.case, fmt_all(d)),
                citation: c.label(),
                spec: ExtensionSpec::abelian(el.rep, omega, vec!["e4".into()]).expect("shape"),
                nilradical: five_n.clone(),
            });
        }
    }
    out
}

fn lemma_group(config: &HarnessConfig, sink: &mut Sink) {
    let mut one_sided_disagreements = Vec::new();
    let mut total = 0;
    for b in built_extensions(config) {
        let r = b.spec.nilradical_lemma_check(&b.nilradical, config.seed);
        total += 1;
        if r.kernel_condition && r.one_sided_criterion != r.center_is_h {
            one_sided_disagreements.push(b.id.clone());
        }
        let detail = format!(
            "N in ker l and ker r: {}; nilradical: {}; Z(N^) = h: {}; criterion G cap Z(N) = 0: {}; dim Z(N^) = {}; solvable: {}",
            r.kernel_condition,
            if r.nilradical.passed() { "confirmed".to_string() } else { format!("{:?}", r.nilradical) },
            r.center_is_h,
            r.criterion,
            r.center_dim,
            r.extension_solvable,
        );
        let status = if r.violation {
            Status::Fail
        } else if !r.kernel_condition || !r.nilradical.passed() {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        sink.push(
            Check::new("lemma", &b.id, b.citation, status)
                .detail(detail)
                .number("center_dim", r.center_dim)
                .number("center_is_h", r.center_is_h)
                .number("criterion", r.criterion)
                .number("one_sided_criterion", r.one_sided_criterion),
        );
    }
    sink.push(
        Check::new(
            "errata",
            "lemma/one-sided",
            "nilradical lemma",
            Status::Pass,
        )
        .detail(format!(
            "with G = {{X in N : w(N,X) = 0}} only, the criterion disagrees with the direct computation on {} of {total} extensions{}; the two-sided set agrees on all",
            one_sided_disagreements.len(),
            if one_sided_disagreements.is_empty() { String::new() } else { format!(" ({})", one_sided_disagreements.join(" ")) }
        ))
        .number("disagreements", one_sided_disagreements.len()),
    );
}

// ---------------------------------------------------------- aut-families

fn random_params<R: Rng>(rng: &mut R, family: &AutFamily) -> Vec<Rational> {
    (0..family.params.len())
        .map(|i| if family.nonzero.contains(&i) { random_nonzero_rational(rng) } else { random_rational(rng) })
        .collect()
}

/// Basis indices `k` with `[e_a, e_b] = c e_k`, `c ≠ 0`, `k ∉ {a, b}`:
/// changing only `φ(e_k)` must break that product.
fn rigid_columns(g: &AlgebraTable) -> Vec<usize> {
    let n = g.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let v = g.basis_bracket(a, b);
            let support: Vec<usize> = (0..n).filter(|&k| !v[k].is_zero()).collect();
            if let [k] = support[..] {
                if k != a && k != b && !out.contains(&k) {
                    out.push(k);
                }
            }
        }
    }
    out
}

fn aut_family_list() -> Vec<(String, AlgebraTable, AutFamily)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push((format!("R{n}"), tables::r_algebra(n).expect("n >= 2"), cases::r_family(n)));
    }
    for base in ["H", "L1", "L2", "L3"] {
        for f in families::families_of(base) {
            out.push((base.to_string(), tables::base(base).expect("fixture"), f));
        }
    }
    out
}

fn aut_group(config: &HarnessConfig, sink: &mut Sink) {
    let mut rng = config.rng(6);
    for (alg, g, family) in aut_family_list() {
        let id = format!("{alg}/{}", family.name.replace(' ', "-"));
        let mut passed = 0;
        for _ in 0..10 {
            let phi = family.instantiate(&random_params(&mut rng, &family)).expect("valid parameters");
            passed += verify_automorphism(&g, &phi).is_ok() as usize;
        }
        sink.push(
            Check::new("aut-families", format!("{id}/random"), format!("{} on {alg}", family.name), Status::from_bool(passed == 10))
                .detail(format!("{passed} of 10 random parameter points are automorphisms"))
                .number("passed", passed),
        );
        let rigid = rigid_columns(&g);
        let mut rejected = 0;
        for _ in 0..10 {
            let mut phi = family.instantiate(&random_params(&mut rng, &family)).expect("valid parameters");
            let k = *rigid.choose(&mut rng).expect("base algebras have rigid columns");
            let row = rng.gen_range(0..g.dim());
            phi[(row, k)] += random_nonzero_rational(&mut rng);
            rejected += matches!(
                verify_automorphism(&g, &phi),
                Err(AutomorphismFailure::NotHomomorphism { .. } | AutomorphismFailure::NotInvertible)
            ) as usize;
        }
        sink.push(
            Check::new("aut-families", format!("{id}/perturbed"), format!("{} on {alg}", family.name), Status::from_bool(rejected == 10))
                .detail(format!("{rejected} of 10 perturbed matrices rejected"))
                .number("rejected", rejected),
        );
    }
    for n in 2..=6 {
        let g = tables::r_algebra(n).expect("n >= 2");
        let listed = families::r_family(n, RVariant::Listed);
        let mut rejected = 0;
        for _ in 0..10 {
            let p = vec![random_nonzero_rational(&mut rng), random_nonzero_rational(&mut rng)];
            rejected += verify_automorphism(&g, &listed.instantiate(&p).expect("valid")).is_err() as usize;
        }
        sink.push(
            Check::new("errata", format!("aut/R{n}"), format!("automorphisms of R{n}"), Status::from_bool(rejected == 10))
                .detail(format!(
                    "image of x listed with b^i/{n}!: rejected at {rejected} of 10 points with b != 0; b^i/i! is accepted"
                ))
                .number("rejected", rejected),
        );
    }
}

// ------------------------------------------------------------ properties

fn random_cocycle<R: Rng>(rng: &mut R, rep: &RepresentationPair) -> BilinearMap {
    let z2 = crate::cohomology::compute_z2(rep);
    let n = rep.g_dim();
    let mut w = BilinearMap::zero(n, rep.h_dim());
    for v in z2.basis.vectors() {
        let b = BilinearMap::from_vector(n, rep.h_dim(), v.clone()).expect("shape");
        w = w.add(&b.scale(&random_rational(rng)));
    }
    w
}

fn random_automorphism<R: Rng>(rng: &mut R, families: &[AutFamily]) -> Automorphism {
    let f = families.choose(rng).expect("nonempty");
    let phi = f.instantiate(&random_params(rng, f)).expect("valid parameters");
    Automorphism::scaled(phi, random_nonzero_rational(rng), 1).expect("invertible")
}

fn families_for(algebra: &str) -> Vec<AutFamily> {
    match algebra.strip_prefix('R') {
        Some(n) => vec![cases::r_family(n.parse().expect("R<n>"))],
        None => families::families_of(algebra),
    }
}

fn properties_group(config: &HarnessConfig, sink: &mut Sink) {
    let mut rng = config.rng(7);
    let rep_cases = cases::rep_cases();
    for c in &rep_cases {
        let h = compute_h2(&c.rep);
        let contained = h.b2.basis.is_subspace_of(&h.z2.basis);
        sink.push(
            Check::new("properties", format!("b2-in-z2/{}", case_id(c)), c.citation(), Status::from_bool(contained))
                .detail("every coboundary is a cocycle"),
        );
        let dims = h.dim() == h.z2.dim() - h.b2.dim();
        sink.push(
            Check::new("properties", format!("h2-dim/{}", case_id(c)), c.citation(), Status::from_bool(dims))
                .detail(format!("dim H2 = {} = {} - {}", h.dim(), h.z2.dim(), h.b2.dim())),
        );

        let families = families_for(&c.algebra);
        let b2 = compute_b2(&c.rep);
        let (mut tried, mut used, mut same) = (0, 0, 0);
        while used < 8 && tried < 200 {
            tried += 1;
            let aut = random_automorphism(&mut rng, &families);
            if !c.rep.is_preserved_by(&aut.phi) {
                continue;
            }
            used += 1;
            same += (compute_b2_with(&c.rep, &aut.phi).basis == b2.basis) as usize;
        }
        let status = if used < 8 { Status::Inconclusive } else { Status::from_bool(same == used) };
        sink.push(
            Check::new("properties", format!("b2-phi/{}", case_id(c)), c.citation(), status)
                .detail(format!("B2 unchanged under {same} of {used} representation-preserving automorphisms"))
                .number("automorphisms", used),
        );
    }

    let pool: Vec<&RepCase> = rep_cases.iter().filter(|c| !c.algebra.starts_with("R5")).collect();
    let mut failures = 0;
    for _ in 0..20 {
        let c = pool.choose(&mut rng).expect("nonempty");
        let families = families_for(&c.algebra);
        let el = OrbitElement {
            rep: c.rep.clone(),
            omega: random_cocycle(&mut rng, &c.rep),
        };
        let (a, b) = (random_automorphism(&mut rng, &families), random_automorphism(&mut rng, &families));
        let lhs = act(&a, &act(&b, &el));
        let rhs = act(&a.then(&b), &el);
        failures += !same_element(&lhs, &rhs) as usize;
        let id = Automorphism::identity(c.rep.g_dim(), 1);
        failures += !same_element(&act(&id, &el), &el) as usize;
    }
    sink.push(
        Check::new("properties", "action", "automorphism action", Status::from_bool(failures == 0))
            .detail(format!("act(a, act(b, e)) = act(a then b, e) and act(1, e) = e on 20 random pairs, {failures} failures"))
            .number("failures", failures),
    );

    for e in catalog::all_entries() {
        let fp = e.table.fingerprint();
        let mut bad = 0;
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..e.table.dim()).collect();
            perm.shuffle(&mut rng);
            bad += (e.table.permuted(&perm).expect("permutation").fingerprint() != fp) as usize;
        }
        sink.push(
            Check::new("properties", format!("fingerprint/{}", e.label()), format!("{} table", e.name), Status::from_bool(bad == 0))
                .detail(format!("fingerprint unchanged under 10 random relabelings, {bad} changes")),
        );
    }
}

// ---------------------------------------------------------- certificates

fn certificates_group(_: &HarnessConfig, sink: &mut Sink) {
    let mut lists: BTreeMap<&str, Vec<(String, &str, Fingerprint)>> = BTreeMap::new();
    for e in catalog::all_entries().into_iter().filter(|e| e.name.contains("_hat_")) {
        let base = e.name.split("_hat_").next().expect("name");
        let base: &str = match base {
            "H" => "H",
            "L1" => "L1",
            "L2" => "L2",
            _ => "L3",
        };
        let name: &str = tables::HATS.iter().find(|(n, _, _)| *n == e.name).expect("hat").0;
        lists.entry(base).or_default().push((e.label(), name, e.table.fingerprint()));
    }
    for (base, entries) in lists {
        for (i, (la, na, fa)) in entries.iter().enumerate() {
            for (lb, nb, fb) in &entries[i + 1..] {
                let cite = format!("extensions of {base}");
                let id = format!("{la}~{lb}");
                let check = match fa.first_difference(fb) {
                    Some(field) => Check::new("certificates", id, cite, Status::Pass)
                        .detail(format!("non-isomorphic: {field} differs"))
                        .number("invariant", field),
                    None if na == nb => Check::new("certificates", id, cite, Status::Inconclusive)
                        .detail("same family, invariants agree; no claim"),
                    None => Check::new("certificates", id, cite, Status::Inconclusive)
                        .detail("invariants agree; not separated"),
                };
                sink.push(check);
            }
        }
    }
}

// ---------------------------------------------------------------- errata

fn errata_group(_: &HarnessConfig, sink: &mut Sink) {
    for e in cases::errata() {
        let listed = e.listed.leibniz_check().violations.len();
        let repaired_ok = e.repaired.leibniz_check().holds();
        sink.push(
            Check::new("errata", format!("table/{}", e.name), format!("{} table", e.name), Status::from_bool(listed > 0 && repaired_ok))
                .detail(format!("listed table has {listed} Leibniz violations; {}", e.description))
                .number("listed_violations", listed),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filtering_by_prefix() {
        let c = HarnessConfig {
            seed: 1,
            only: Some("h".into()),
        };
        assert!(c.wants("h-dims") && c.wants("h-classification"));
        assert!(!c.wants("l1-dims") && !c.wants("leibniz"));
        for (_, tags, _) in GROUPS {
            assert!(tags.iter().all(|t| TAGS.contains(t)));
        }
    }

    #[test]
    fn rigid_columns_of_r() {
        let g = tables::r_algebra(3).unwrap();
        assert_eq!(rigid_columns(&g), vec![1, 2]);
    }
}
