use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use leibext::algebra::AlgebraTable;
use leibext::catalog::cases::expectations;
use leibext::catalog::format::{parse_algebra, serialize_algebra};
use leibext::catalog::notation::{format_cocycle, parse_cocycle};
use leibext::catalog::{self, CatalogEntry, Params};
use leibext::cohomology::{compute_h2, RepresentationPair};
use leibext::extension::ExtensionSpec;
use leibext::harness::{self, HarnessConfig, DEFAULT_SEED};
use leibext::linalg::SubspaceBasis;
use leibext::rational::{format_rational, parse_rational_lenient, Rational};
use leibext::report::{Check, Format, Report, Status};

const SEED_ENV: &str = "LEIBEXT_SEED";

#[derive(Parser)]
#[command(name = "leibext", version, about = "Cohomology and extensions of Leibniz algebras in exact arithmetic")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Human, global = true)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz identity and print invariants.
    Check {
        /// Algebra file; omit when using --catalog.
        file: Option<PathBuf>,
        #[command(flatten)]
        algebra: CatalogArgs,
    },
    /// Dimensions of Z², B², H² and representatives of H².
    Cohomology {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        rep: RepArgs,
    },
    /// Build the extension defined by a representation and a cocycle.
    Extend {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        rep: RepArgs,
        /// Cocycle values, e.g. "x2,e1=1; e1,x1=-1/2".
        #[arg(long, conflicts_with = "omega_file")]
        omega: Option<String>,
        /// File containing the cocycle in the same notation as --omega.
        #[arg(long)]
        omega_file: Option<PathBuf>,
        /// Label of the new basis vector (default: the next unused e<k>).
        #[arg(long)]
        kernel: Option<String>,
        /// Write the extension table here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Recompute every catalog claim and report each check.
    Verify {
        #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run only this tag, or tags starting with "<ONLY>-".
        #[arg(long)]
        only: Option<String>,
        /// Include per-group wall-clock times.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
struct CatalogArgs {
    /// Catalog entry name, e.g. NF, R, H, L2_hat_4.
    #[arg(long)]
    catalog: Option<String>,
    /// Dimension parameter of NF, R and R_hat.
    #[arg(long)]
    n: Option<usize>,
    /// Parameter of the one-parameter families.
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    delta: Option<Rational>,
}

#[derive(Args)]
struct AlgebraArgs {
    #[command(flatten)]
    catalog: CatalogArgs,
    /// Algebra file instead of a catalog entry.
    #[arg(long, conflicts_with = "catalog")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct RepArgs {
    /// Scalars (l_x, r_x) for an algebra with a basis vector x.
    #[arg(long, num_args = 2, value_parser = rational, allow_negative_numbers = true, conflicts_with_all = ["alpha", "beta"])]
    gamma: Option<Vec<Rational>>,
    /// Scalars (l_x1, r_x1).
    #[arg(long, num_args = 2, value_parser = rational, allow_negative_numbers = true)]
    alpha: Option<Vec<Rational>>,
    /// Scalars (l_x2, r_x2).
    #[arg(long, num_args = 2, value_parser = rational, allow_negative_numbers = true)]
    beta: Option<Vec<Rational>>,
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational_lenient(s).map_err(|e| e.to_string())
}

fn catalog_entry(args: &CatalogArgs) -> Result<Option<CatalogEntry>> {
    let Some(name) = &args.catalog else {
        return Ok(None);
    };
    let params = Params {
        n: args.n,
        delta: args.delta.clone(),
    };
    Ok(Some(catalog::get(name, &params)?))
}

fn read_algebra(path: &PathBuf) -> Result<AlgebraTable> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_algebra(&text).with_context(|| format!("parsing {}", path.display()))
}

/// The algebra and, for catalog entries, its nilradical.
fn load(args: &AlgebraArgs) -> Result<(AlgebraTable, Option<SubspaceBasis>)> {
    match (&args.file, catalog_entry(&args.catalog)?) {
        (Some(path), _) => Ok((read_algebra(path)?, None)),
        (None, Some(e)) => Ok((e.table, e.nilradical)),
        (None, None) => bail!("give an algebra with --catalog or --file"),
    }
}

fn require_label(g: &AlgebraTable, label: &str) -> Result<usize> {
    g.label_index(label)
        .with_context(|| format!("{} has no basis vector {label}", g.name()))
}

/// Scalar representation on a one-dimensional kernel from the flags, zero
/// when none is given; fails naming the violated identity.
fn representation(g: &AlgebraTable, args: &RepArgs) -> Result<(RepresentationPair, Vec<(String, Rational)>)> {
    let n = g.dim();
    let zero = || Rational::from_integer(0.into());
    let mut left = vec![zero(); n];
    let mut right = vec![zero(); n];
    let mut params = Vec::new();
    let mut set = |label: &str, pair: &[Rational], names: [&str; 2]| -> Result<()> {
        let i = require_label(g, label)?;
        left[i] = pair[0].clone();
        right[i] = pair[1].clone();
        params.push((names[0].to_string(), pair[0].clone()));
        params.push((names[1].to_string(), pair[1].clone()));
        Ok(())
    };
    if let Some(gamma) = &args.gamma {
        set("x", gamma, ["gamma1", "gamma2"])?;
    }
    if args.alpha.is_some() || args.beta.is_some() {
        let zeros = [zero(), zero()];
        set("x1", args.alpha.as_deref().unwrap_or(&zeros), ["alpha1", "alpha2"])?;
        set("x2", args.beta.as_deref().unwrap_or(&zeros), ["beta1", "beta2"])?;
    }
    let rep = RepresentationPair::scalar(g.clone(), &left, &right)?;
    let report = rep.rep_check();
    if let Some(v) = report.violations.first() {
        let l = g.labels();
        bail!(
            "not a representation: {} fails at ({}, {}) and {} other basis pairs",
            v.identity.name(),
            l[v.x],
            l[v.y],
            report.violations.len() - 1
        );
    }
    Ok((rep, params))
}

fn cmd_check(file: Option<PathBuf>, args: CatalogArgs) -> Result<Report> {
    let (table, nilradical, label) = match (file, catalog_entry(&args)?) {
        (Some(_), Some(_)) => bail!("give either a file or --catalog, not both"),
        (Some(path), None) => {
            let t = read_algebra(&path)?;
            let label = t.name().to_string();
            (t, None, label)
        }
        (None, Some(e)) => (e.table.clone(), e.nilradical.clone(), e.label()),
        (None, None) => bail!("give an algebra file or --catalog"),
    };
    let mut report = Report::new(format!("check {label}"), None);
    report.show_numbers = true;
    let leibniz = table.leibniz_check();
    let fp = table.fingerprint();
    let list = |v: &[usize]| format!("[{}]", v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","));
    let detail = if leibniz.holds() {
        "Leibniz identity holds".to_string()
    } else {
        let l = table.labels();
        let (i, j, k) = leibniz.violations[0];
        format!("{} violating triples, first ({},{},{})", leibniz.violations.len(), l[i], l[j], l[k])
    };
    report.push(
        Check::new("leibniz", &label, "", Status::from_bool(leibniz.holds()))
            .detail(detail)
            .number("violations", leibniz.violations.len())
            .number("dim", fp.dim)
            .number("lcs_dims", list(&fp.lcs_dims))
            .number("derived_dims", list(&fp.derived_dims))
            .number("center_dim", fp.center_dim)
            .number("left_ann_dim", fp.left_ann_dim)
            .number("right_ann_dim", fp.right_ann_dim)
            .number("derivation_dim", fp.derivation_dim)
            .number("nilpotent", fp.nilpotent)
            .number("solvable", fp.solvable),
    );
    if let (Some(nil), true) = (nilradical, leibniz.holds()) {
        let verdict = table.verify_nilradical(&nil, 16, DEFAULT_SEED);
        report.push(
            Check::new("nilradical", &label, "", Status::from_bool(verdict.passed()))
                .detail(format!("{}-dimensional: {verdict:?}", nil.dim()))
                .number("dim", nil.dim()),
        );
    }
    Ok(report)
}

fn cmd_cohomology(algebra: AlgebraArgs, rep_args: RepArgs) -> Result<Report> {
    let (g, _) = load(&algebra)?;
    let (rep, params) = representation(&g, &rep_args)?;
    let h = compute_h2(&rep);
    let shown: Vec<String> = params.iter().map(|(k, v)| format!("{k}={}", format_rational(v))).collect();
    let algebra_name = match (g.name(), algebra.catalog.n) {
        ("R", Some(n)) => format!("R{n}"),
        (name, _) => name.to_string(),
    };
    let label = if shown.is_empty() {
        algebra_name.clone()
    } else {
        format!("{algebra_name} ({})", shown.join(", "))
    };
    let mut report = Report::new(format!("cohomology {label}"), None);
    report.show_numbers = true;

    // compare with the catalog when these are listed parameters
    let values: Vec<String> = params.iter().map(|(_, v)| format_rational(v)).collect();
    let listed = algebra.file.is_none().then(|| {
        expectations().into_iter().find(|row| {
            row.algebra == algebra_name && row.params.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>() == values
        })
    });
    let (status, citation, note) = match listed.flatten() {
        Some(row) => {
            let ok = row.z2 == h.z2.dim() && row.b2 == h.b2.dim();
            (Status::from_bool(ok), row.citation.clone(), format!("; listed {}/{}/{}", row.z2, row.b2, row.h2))
        }
        None => (Status::Pass, String::new(), String::new()),
    };
    let mut check = Check::new("cohomology", &label, citation, status)
        .detail(format!("dim Z2 = {}, dim B2 = {}, dim H2 = {}{note}", h.z2.dim(), h.b2.dim(), h.dim()))
        .number("z2", h.z2.dim())
        .number("b2", h.b2.dim())
        .number("h2", h.dim());
    for (i, w) in h.representatives().iter().enumerate() {
        check = check.number(&format!("h2_rep{}", i + 1), format_cocycle(g.labels(), w));
    }
    report.push(check);
    Ok(report)
}

fn next_label(g: &AlgebraTable) -> String {
    (1..)
        .map(|k| format!("e{k}"))
        .find(|l| g.label_index(l).is_none())
        .expect("finitely many labels")
}

struct ExtendArgs {
    algebra: AlgebraArgs,
    rep: RepArgs,
    omega: Option<String>,
    omega_file: Option<PathBuf>,
    kernel: Option<String>,
    out: Option<PathBuf>,
    seed: u64,
}

fn cmd_extend(a: ExtendArgs, format: Format) -> Result<Report> {
    let (g, nilradical) = load(&a.algebra)?;
    let (rep, _) = representation(&g, &a.rep)?;
    let text = match (&a.omega, &a.omega_file) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        (None, None) => String::new(),
    };
    let omega = parse_cocycle(g.labels(), &text)?;
    let cocycle = omega.cocycle_check(&rep);
    if let Some(&(x, y, z)) = cocycle.violations.first() {
        let l = g.labels();
        bail!(
            "not a cocycle: the cocycle identity fails at ({}, {}, {}) and {} other basis triples",
            l[x],
            l[y],
            l[z],
            cocycle.violations.len() - 1
        );
    }
    let kernel = a.kernel.unwrap_or_else(|| next_label(&g));
    let spec = ExtensionSpec::abelian(rep, omega, vec![kernel])?;
    let mut report = Report::new(format!("extend {}", g.name()), Some(a.seed));
    let validity = spec.validity_check();
    let failed: Vec<&str> = validity.failed.iter().map(|v| v.name()).collect();
    report.push(
        Check::new("validity", g.name(), "", Status::from_bool(validity.holds())).detail(if failed.is_empty() {
            "all extension identities hold".to_string()
        } else {
            format!("failed: {}", failed.join("; "))
        }),
    );
    let table = spec.build();
    report.push(
        Check::new("leibniz", table.name(), "", Status::from_bool(table.leibniz_check().holds()))
            .detail(format!("Leibniz identity of the extension; solvable: {}", table.is_solvable()))
            .number("dim", table.dim())
            .number("solvable", table.is_solvable()),
    );
    if let Some(nil) = nilradical {
        let r = spec.nilradical_lemma_check(&nil, a.seed);
        let status = if r.violation {
            Status::Fail
        } else if !r.kernel_condition || !r.nilradical.passed() {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        report.push(
            Check::new("lemma", table.name(), "", status)
                .detail(format!(
                    "N in ker l and ker r: {}; nilradical: {}; Z(N^) = h: {}; criterion: {}",
                    r.kernel_condition,
                    if r.nilradical.passed() { "confirmed".to_string() } else { format!("{:?}", r.nilradical) },
                    r.center_is_h,
                    r.criterion
                ))
                .number("center_dim", r.center_dim),
        );
    }
    let json = serialize_algebra(&table);
    match &a.out {
        Some(path) => {
            std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
            report.push(Check::new("output", path.display().to_string(), "", Status::Pass).detail("extension table written"));
        }
        None => match format {
            Format::Human => report.trailer = json,
            Format::Machine => report.trailer = format!("table={}\n", json.split_whitespace().collect::<String>()),
        },
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Human => Format::Human,
        FormatArg::Machine => Format::Machine,
    };
    let mut timings = false;
    let result = match cli.command {
        Command::Check { file, algebra } => cmd_check(file, algebra),
        Command::Cohomology { algebra, rep } => cmd_cohomology(algebra, rep),
        Command::Extend {
            algebra,
            rep,
            omega,
            omega_file,
            kernel,
            out,
            seed,
        } => cmd_extend(
            ExtendArgs {
                algebra,
                rep,
                omega,
                omega_file,
                kernel,
                out,
                seed,
            },
            format,
        ),
        Command::Verify { seed, only, timings: t } => {
            timings = t;
            if let Some(o) = &only {
                if !harness::TAGS.iter().any(|tag| tag == o || tag.starts_with(&format!("{o}-"))) {
                    eprintln!("error: no tag matches {o:?}; tags are {}", harness::TAGS.join(", "));
                    return ExitCode::from(2);
                }
            }
            Ok(harness::run(&HarnessConfig { seed, only }))
        }
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(format, timings));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
