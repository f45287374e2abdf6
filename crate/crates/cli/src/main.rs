//! `hess-arr`: exact computations and batch verification for ideal
//! arrangements and Hessenberg cohomology rings.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hessarr_core::arrangement::{chamber_count, terao_check};
use hessarr_core::derivbasis::{ideal_generators_for_ideal, psi_basis_for_ideal, saito_certificate};
use hessarr_core::error::Error;
use hessarr_core::fixedpoints::{
    nilpotent_fixed_points, nilpotent_poincare, semisimple_poincare, subset_generating_function,
    weyl_type_subsets, DEFAULT_WEYL_TYPE_BOUND,
};
use hessarr_core::gkm::{
    build_gkm_graph, expected_gkm_dim, gkm_space_dim, to_dot, DEFAULT_GKM_DEGREE_BOUND,
};
use hessarr_core::gradedring::{hilbert_series, lefschetz_check, pd_pairing_check, GradedQuotient};
use hessarr_core::lowerideal::{
    enumerate_lower_ideals, hessenberg_from_ideal, ideal_from_hessenberg, HessFlavor,
    HessenbergFunction, LowerIdeal, DEFAULT_IDEAL_ENUM_BOUND,
};
use hessarr_core::polyalg::parse_polynomial;
use hessarr_core::rootsystem::{
    enumerate_weyl_group, Family, RootSystem, RootSystemType, WeylGroup, DEFAULT_WEYL_BOUND,
};
use hessarr_core::volume::{annihilator_check, volume_polynomial};

#[derive(Parser)]
#[command(
    name = "hess-arr",
    about = "Exact toolkit for ideal arrangements of root systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exponents of the ideal arrangement (dual partition of heights)
    Exponents(Scope),
    /// Poincare polynomials of both Hessenberg varieties
    Poincare(Scope),
    /// Hilbert series of the graded quotient ring
    Hilbert(Scope),
    /// Generators of the defining ideal with their degrees
    Presentation(Scope),
    /// Saito certificate for the derivation basis
    SaitoCheck(Scope),
    /// Chamber count by Zaslavsky and by sign vectors
    Chambers(Scope),
    /// Weyl-type subsets and their generating function
    WeylType(Scope),
    /// GKM graph in DOT format
    GkmDot(Scope),
    /// GKM solution-space dimensions per degree
    GkmDims(GkmDimsArgs),
    /// Volume polynomial of the ideal
    Volume(Scope),
    /// Annihilator dimension table of the volume polynomial
    AnnCheck(AnnCheckArgs),
    /// Hard Lefschetz / Hodge-Riemann report
    Lefschetz(LefschetzArgs),
    /// JSON dump of the root system data
    RootSystem(SystemScope),
    /// Run every cross-identity for the given scope
    VerifyAll(verify::VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
pub(crate) struct SystemScope {
    /// Root system family: A, B, C, D or G
    #[arg(long)]
    pub(crate) family: String,
    /// Rank (G requires 2, D requires >= 2)
    #[arg(long)]
    pub(crate) rank: usize,
}

#[derive(Args)]
pub(crate) struct Scope {
    #[command(flatten)]
    pub(crate) system: SystemScope,
    /// Hessenberg function, comma separated: e.g. 3,5,4
    #[arg(long)]
    pub(crate) hess: Option<String>,
    /// Explicit root list, e.g. "x1-x2,x2"; empty string for the empty ideal
    #[arg(long)]
    pub(crate) roots: Option<String>,
    /// `all` sweeps every lower ideal
    #[arg(long)]
    pub(crate) ideal: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    pub(crate) format: Format,
    /// Override the Weyl group size bound (env: HESSARR_MAX_WEYL)
    #[arg(long)]
    pub(crate) max_weyl: Option<usize>,
}

#[derive(Args)]
struct GkmDimsArgs {
    #[command(flatten)]
    scope: Scope,
    /// Largest polynomial degree to solve for
    #[arg(long, default_value_t = DEFAULT_GKM_DEGREE_BOUND)]
    max_degree: usize,
}

#[derive(Args)]
struct AnnCheckArgs {
    #[command(flatten)]
    scope: Scope,
    /// Extra polynomials (ambient coordinates, comma separated) to test
    /// for membership in the annihilator
    #[arg(long)]
    probe: Option<String>,
}

#[derive(Args)]
struct LefschetzArgs {
    #[command(flatten)]
    scope: Scope,
    /// Lefschetz element in ambient coordinates; defaults to the half-sum
    /// of the positive roots
    #[arg(long)]
    ell: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            let code = match e {
                Error::ConsistencyFailure(_) => 1,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

pub(crate) struct Context {
    pub(crate) rs: RootSystem,
    pub(crate) wg: WeylGroup,
}

pub(crate) fn build_context(scope: &SystemScope, max_weyl: Option<usize>) -> Result<Context, Error> {
    let family: Family = scope.family.parse()?;
    let rs = RootSystem::build(RootSystemType::new(family, scope.rank))?;
    let bound = max_weyl
        .or_else(|| {
            std::env::var("HESSARR_MAX_WEYL")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_WEYL_BOUND);
    let wg = enumerate_weyl_group(&rs, bound)?;
    Ok(Context { rs, wg })
}

/// Resolves the ideal specifier into labeled ideals.
pub(crate) fn resolve_ideals(ctx: &Context, scope: &Scope) -> Result<Vec<(String, LowerIdeal)>, Error> {
    let rs = &ctx.rs;
    let given: usize = [
        scope.hess.is_some(),
        scope.roots.is_some(),
        scope.ideal.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if given != 1 {
        return Err(Error::Parse(
            "specify exactly one of --hess, --roots, --ideal all".into(),
        ));
    }
    if let Some(hess) = &scope.hess {
        let values: Vec<usize> = hess
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad Hessenberg value `{}`: {}", v, e)))
            })
            .collect::<Result<_, _>>()?;
        let flavor = HessFlavor::of(rs.family()).ok_or_else(|| {
            Error::InvalidHessenberg(format!("{} has no Hessenberg encoding", rs.kind()))
        })?;
        let h = HessenbergFunction::new(values, flavor);
        let ideal = ideal_from_hessenberg(&h, rs)?;
        return Ok(vec![(format!("hess {}", hess), ideal)]);
    }
    if let Some(roots) = &scope.roots {
        let trimmed = roots.trim();
        let indices: Vec<usize> = if trimmed.is_empty() {
            Vec::new()
        } else {
            trimmed
                .split(',')
                .map(|r| {
                    let form = parse_polynomial(r.trim(), rs.ambient_dim())?;
                    rs.root_index_of(&form)
                })
                .collect::<Result<_, _>>()?
        };
        let ideal = LowerIdeal::from_root_indices(rs, &indices)?;
        return Ok(vec![(format!("roots [{}]", trimmed), ideal)]);
    }
    match scope.ideal.as_deref() {
        Some("all") => {
            let ideals = enumerate_lower_ideals(rs, DEFAULT_IDEAL_ENUM_BOUND)?;
            Ok(ideals
                .into_iter()
                .enumerate()
                .map(|(i, ideal)| (format!("ideal #{}", i), ideal))
                .collect())
        }
        Some(other) => Err(Error::Parse(format!(
            "unknown --ideal value `{}` (only `all` is supported)",
            other
        ))),
        None => unreachable!("guarded above"),
    }
}

pub(crate) fn ideal_json(ctx: &Context, label: &str, ideal: &LowerIdeal) -> serde_json::Value {
    json!({
        "label": label,
        "size": ideal.len(),
        "members": ideal
            .root_indices()
            .iter()
            .map(|&i| ctx.rs.roots()[i].form.to_string())
            .collect::<Vec<_>>(),
        "hessenberg": hessenberg_from_ideal(&ctx.rs, ideal).ok().map(|h| h.values),
    })
}

fn emit(format: Format, command: &str, ctx: &Context, items: Vec<(serde_json::Value, String)>) {
    match format {
        Format::Json => {
            let payload = json!({
                "schema": 1,
                "command": command,
                "family": ctx.rs.family().to_string(),
                "rank": ctx.rs.rank(),
                "results": items.iter().map(|(j, _)| j.clone()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
        Format::Text | Format::Dot => {
            for (_, line) in items {
                println!("{}", line);
            }
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::RootSystem(scope) => {
            let ctx = build_context(&scope, None)?;
            println!("{}", serde_json::to_string_pretty(&ctx.rs.to_json()).unwrap());
            Ok(true)
        }
        Command::Exponents(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            let mut items = Vec::new();
            for (label, ideal) in resolve_ideals(&ctx, &scope)? {
                let exps = ideal.exponents(&ctx.rs);
                let line = format!(
                    "{}: exponents ({})",
                    label,
                    exps.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                items.push((
                    json!({"ideal": ideal_json(&ctx, &label, &ideal), "exponents": exps}),
                    line,
                ));
            }
            emit(scope.format, "exponents", &ctx, items);
            Ok(true)
        }
        Command::Poincare(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            let mut items = Vec::new();
            for (label, ideal) in resolve_ideals(&ctx, &scope)? {
                let nilpotent = nilpotent_poincare(&ctx.rs, &ctx.wg, &ideal)?;
                let semisimple = semisimple_poincare(&ctx.wg, &ideal);
                let fixed = nilpotent_fixed_points(&ctx.rs, &ctx.wg, &ideal);
                let line = format!(
                    "{}: nilpotent {:?}, semisimple {:?}, {} fixed points",
                    label,
                    nilpotent,
                    semisimple,
                    fixed.len()
                );
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "nilpotent_poincare": nilpotent,
                        "semisimple_poincare": semisimple,
                        "fixed_points": fixed
                            .iter()
                            .map(|&w| ctx.wg.element(w).word_string())
                            .collect::<Vec<_>>(),
                    }),
                    line,
                ));
            }
            emit(scope.format, "poincare", &ctx, items);
            Ok(true)
        }
        Command::Hilbert(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            let mut items = Vec::new();
            let mut ok = true;
            for (label, ideal) in resolve_ideals(&ctx, &scope)? {
                let gens = ideal_generators_for_ideal(&ctx.rs, &ideal)?;
                let q = hilbert_series(&gens)?;
                let product = GradedQuotient::product_formula(&ideal.exponents(&ctx.rs));
                let matches = q.graded_dims == product && q.is_palindromic();
                ok &= matches;
                let line = format!(
                    "{}: dims {:?}, socle {}, product formula {}",
                    label,
                    q.graded_dims,
                    q.socle,
                    if matches { "matches" } else { "MISMATCH" }
                );
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "graded_dims": q.graded_dims,
                        "socle": q.socle,
                        "product_formula": product,
                        "matches": matches,
                    }),
                    line,
                ));
            }
            emit(scope.format, "hilbert", &ctx, items);
            Ok(ok)
        }
        Command::Presentation(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            let mut items = Vec::new();
            for (label, ideal) in resolve_ideals(&ctx, &scope)? {
                let gens = ideal_generators_for_ideal(&ctx.rs, &ideal)?;
                let mut lines = vec![format!("{}:", label)];
                for (i, (g, d)) in gens.gens.iter().zip(&gens.degrees).enumerate() {
                    lines.push(format!("  f{} (degree {}) = {}", i + 1, d, g));
                }
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "generators": gens.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "degrees": gens.degrees,
                    }),
                    lines.join("\n"),
                ));
            }
            emit(scope.format, "presentation", &ctx, items);
            Ok(true)
        }
        Command::SaitoCheck(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            let mut items = Vec::new();
            let mut ok = true;
            for (label, ideal) in resolve_ideals(&ctx, &scope)? {
                let basis = psi_basis_for_ideal(&ctx.rs, &ideal)?;
                let cert = saito_certificate(&ctx.rs, &basis, &ideal)?;
                ok &= cert.holds();
                let line = format!(
                    "{}: {} (constant {}, degree sum {} of {})",
                    label,
                    if cert.holds() { "PASS" } else { "FAIL" },
                    cert.constant
                        .as_ref()
                        .map(|c| c.to_string())
                        .unwrap_or_else(|| "none".into()),
                    cert.degree_sum,
                    cert.expected_degree_sum,
                );
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "pass": cert.holds(),
                        "constant": cert.constant.as_ref().map(|c| c.to_string()),
                        "degrees": cert.degrees,
                        "degree_sum": cert.degree_sum,
                        "expected_degree_sum": cert.expected_degree_sum,
                    }),
                    line,
                ));
            }
            emit(scope.format, "saito-check", &ctx, items);
            Ok(ok)
        }
        Command::Chambers(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            let mut items = Vec::new();
            let mut ok = true;
            for (label, ideal) in resolve_ideals(&ctx, &scope)? {
                let report = chamber_count(&ctx.rs, &ctx.wg, &ideal)?;
                let terao = terao_check(&report.poincare, &ideal.exponents(&ctx.rs));
                ok &= terao.holds;
                let line = format!(
                    "{}: {} chambers (pi(1) = {}, sign vectors = {}), pi = {:?}, factorization {}",
                    label,
                    report.count,
                    report.zaslavsky,
                    report.sign_vectors,
                    report.poincare.coefficients,
                    if terao.holds { "holds" } else { "FAILS" }
                );
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "count": report.count,
                        "zaslavsky": report.zaslavsky,
                        "sign_vectors": report.sign_vectors,
                        "poincare": report.poincare.coefficients,
                        "path": format!("{:?}", report.poincare.path),
                        "terao_holds": terao.holds,
                        "exponents": ideal.exponents(&ctx.rs),
                    }),
                    line,
                ));
            }
            emit(scope.format, "chambers", &ctx, items);
            Ok(ok)
        }
        Command::WeylType(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            let mut items = Vec::new();
            let mut ok = true;
            for (label, ideal) in resolve_ideals(&ctx, &scope)? {
                let subsets = weyl_type_subsets(&ctx.rs, &ideal, DEFAULT_WEYL_TYPE_BOUND)?;
                let genfn = subset_generating_function(&subsets);
                let product = GradedQuotient::product_formula(&ideal.exponents(&ctx.rs));
                let matches = genfn == product;
                ok &= matches;
                let line = format!(
                    "{}: {} Weyl-type subsets, generating function {:?}, product formula {}",
                    label,
                    subsets.len(),
                    genfn,
                    if matches { "matches" } else { "MISMATCH" }
                );
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "count": subsets.len(),
                        "generating_function": genfn,
                        "matches_product": matches,
                    }),
                    line,
                ));
            }
            emit(scope.format, "weyl-type", &ctx, items);
            Ok(ok)
        }
        Command::GkmDot(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            for (_, ideal) in resolve_ideals(&ctx, &scope)? {
                let graph = build_gkm_graph(&ctx.rs, &ctx.wg, &ideal);
                print!("{}", to_dot(&ctx.wg, &graph));
            }
            Ok(true)
        }
        Command::GkmDims(args) => {
            let ctx = build_context(&args.scope.system, args.scope.max_weyl)?;
            let mut items = Vec::new();
            let mut ok = true;
            for (label, ideal) in resolve_ideals(&ctx, &args.scope)? {
                let graph = build_gkm_graph(&ctx.rs, &ctx.wg, &ideal);
                let betti = semisimple_poincare(&ctx.wg, &ideal);
                let mut dims = Vec::new();
                let mut parts = Vec::new();
                for d in 0..=args.max_degree {
                    let actual = gkm_space_dim(&graph, d, args.max_degree)?;
                    let expected = expected_gkm_dim(&betti, ctx.rs.rank(), d);
                    ok &= actual == expected;
                    parts.push(format!("deg {}: {} (expected {})", 2 * d, actual, expected));
                    dims.push(json!({"degree": 2 * d, "dim": actual, "expected": expected}));
                }
                let line = format!("{}: {}", label, parts.join(", "));
                items.push((
                    json!({"ideal": ideal_json(&ctx, &label, &ideal), "dims": dims}),
                    line,
                ));
            }
            emit(args.scope.format, "gkm-dims", &ctx, items);
            Ok(ok)
        }
        Command::Volume(scope) => {
            let ctx = build_context(&scope.system, scope.max_weyl)?;
            let mut items = Vec::new();
            for (label, ideal) in resolve_ideals(&ctx, &scope)? {
                let v = volume_polynomial(&ctx.rs, &ideal)?;
                let line = format!("{}: P = {}", label, v.polynomial);
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "polynomial": v.polynomial.to_string(),
                        "degree": ideal.len(),
                        "sign_flipped": v.sign_flipped,
                        "rho_pairing": v.rho_pairing.to_string(),
                    }),
                    line,
                ));
            }
            emit(scope.format, "volume", &ctx, items);
            Ok(true)
        }
        Command::AnnCheck(args) => {
            let ctx = build_context(&args.scope.system, args.scope.max_weyl)?;
            let probes: Vec<hessarr_core::Polynomial> = match &args.probe {
                None => Vec::new(),
                Some(text) => text
                    .split(',')
                    .map(|t| parse_polynomial(t.trim(), ctx.rs.ambient_dim()))
                    .collect::<Result<_, _>>()?,
            };
            let mut items = Vec::new();
            let mut ok = true;
            for (label, ideal) in resolve_ideals(&ctx, &args.scope)? {
                let gens = ideal_generators_for_ideal(&ctx.rs, &ideal)?;
                let v = volume_polynomial(&ctx.rs, &ideal)?;
                let report = annihilator_check(&ctx.rs, &ideal, &gens, &v)?;
                ok &= report.holds();
                let probe_results: Vec<serde_json::Value> = probes
                    .iter()
                    .map(|p| {
                        let killed =
                            hessarr_core::polyalg::apply_diff_operator(p, &v.polynomial)
                                .map(|r| r.is_zero())
                                .unwrap_or(false);
                        json!({"poly": p.to_string(), "annihilates": killed})
                    })
                    .collect();
                let mut lines = vec![format!(
                    "{}: generators kill P: {}; dimension table {}",
                    label,
                    report.generators_kill,
                    if report.holds() { "matches" } else { "MISMATCH" }
                )];
                for (d, ann, ideal_dim) in &report.per_degree {
                    lines.push(format!("  degree {}: Ann {} vs ideal {}", d, ann, ideal_dim));
                }
                for p in &probe_results {
                    lines.push(format!(
                        "  probe {}: annihilates = {}",
                        p["poly"].as_str().unwrap(),
                        p["annihilates"]
                    ));
                    ok &= p["annihilates"].as_bool().unwrap();
                }
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "pass": report.holds(),
                        "generators_kill": report.generators_kill,
                        "per_degree": report
                            .per_degree
                            .iter()
                            .map(|&(d, a, b)| json!({"degree": d, "ann": a, "ideal": b}))
                            .collect::<Vec<_>>(),
                        "probes": probe_results,
                    }),
                    lines.join("\n"),
                ));
            }
            emit(args.scope.format, "ann-check", &ctx, items);
            Ok(ok)
        }
        Command::Lefschetz(args) => {
            let ctx = build_context(&args.scope.system, args.scope.max_weyl)?;
            let ell_ambient = match &args.ell {
                Some(text) => parse_polynomial(text, ctx.rs.ambient_dim())?,
                None => ctx.rs.rho(),
            };
            let ell = ctx.rs.reduce(&ell_ambient);
            let mut items = Vec::new();
            let mut ok = true;
            for (label, ideal) in resolve_ideals(&ctx, &args.scope)? {
                let gens = ideal_generators_for_ideal(&ctx.rs, &ideal)?;
                let quotient = hilbert_series(&gens)?;
                let v = volume_polynomial(&ctx.rs, &ideal)?;
                pd_pairing_check(&ctx.rs, &quotient, &v.polynomial)?;
                let report = lefschetz_check(&ctx.rs, &quotient, &ell, &v.polynomial)?;
                ok &= report.holds();
                let line = if report.trivial {
                    format!("{}: trivial (socle degree 0)", label)
                } else {
                    format!(
                        "{}: {} ({})",
                        label,
                        if report.holds() { "PASS" } else { "FAIL" },
                        report
                            .per_degree
                            .iter()
                            .map(|d| format!(
                                "q={}: HL {} HR {} (kernel {})",
                                d.q, d.hl_full_rank, d.hr_positive, d.kernel_dim
                            ))
                            .collect::<Vec<_>>()
                            .join("; ")
                    )
                };
                items.push((
                    json!({
                        "ideal": ideal_json(&ctx, &label, &ideal),
                        "trivial": report.trivial,
                        "pass": report.holds(),
                        "per_degree": report
                            .per_degree
                            .iter()
                            .map(|d| json!({
                                "q": d.q,
                                "hl_full_rank": d.hl_full_rank,
                                "kernel_dim": d.kernel_dim,
                                "hr_positive": d.hr_positive,
                            }))
                            .collect::<Vec<_>>(),
                        "rho_pairing": v.rho_pairing.to_string(),
                    }),
                    line,
                ));
            }
            emit(args.scope.format, "lefschetz", &ctx, items);
            Ok(ok)
        }
        Command::VerifyAll(args) => verify::run(args),
    }
}
