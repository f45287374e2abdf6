//! The `verify-all` subcommand: runs every cross-identity available for
//! the scope over one ideal or a full sweep, in a fixed report order.

use clap::Args;
use rayon::prelude::*;
use serde_json::json;

use hessarr_core::arrangement::{chamber_count, terao_check};
use hessarr_core::derivbasis::{
    ideal_generators_for_ideal, psi_basis_for_ideal, saito_certificate,
};
use hessarr_core::error::Error;
use hessarr_core::fixedpoints::{
    chamber_subset_checks, eta_bijection_check, nilpotent_poincare, semisimple_poincare,
    subset_generating_function, weyl_type_subsets, DEFAULT_WEYL_TYPE_BOUND,
};
use hessarr_core::gkm::{build_gkm_graph, expected_gkm_dim, gkm_space_dim, invariant_cohomology_dims};
use hessarr_core::gradedring::{
    colon_check, hilbert_series, lefschetz_check, pd_pairing_check, GradedQuotient,
};
use hessarr_core::lowerideal::{HessFlavor, LowerIdeal};
use hessarr_core::volume::{annihilator_check, volume_polynomial};

use crate::{build_context, ideal_json, resolve_ideals, Context, Format, Scope};

#[derive(Args)]
pub(crate) struct VerifyArgs {
    #[command(flatten)]
    scope: Scope,
    /// Largest GKM solution degree included in the sweep
    #[arg(long, default_value_t = 2)]
    max_degree: usize,
    /// Cap on colon-ideal steps per ideal; excess steps are sampled
    #[arg(long, default_value_t = 24)]
    max_colon_steps: usize,
    /// Seed for the colon-step sampling
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, result: Result<(bool, String), Error>) -> Check {
    match result {
        Ok((pass, detail)) => Check { name, pass, detail },
        Err(e) => Check {
            name,
            pass: false,
            detail: format!("error: {}", e),
        },
    }
}

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

pub(crate) fn run(args: VerifyArgs) -> Result<bool, Error> {
    let ctx = build_context(&args.scope.system, args.scope.max_weyl)?;
    let ideals = resolve_ideals(&ctx, &args.scope)?;
    let has_basis = HessFlavor::of(ctx.rs.family()).is_some();

    let reports: Vec<(String, Vec<Check>)> = ideals
        .par_iter()
        .map(|(label, ideal)| {
            let checks = verify_ideal(&ctx, ideal, has_basis, &args);
            (label.clone(), checks)
        })
        .collect();

    let mut all_pass = true;
    let mut items = Vec::new();
    for ((label, checks), (_, ideal)) in reports.iter().zip(&ideals) {
        for c in checks {
            all_pass &= c.pass;
        }
        let lines: Vec<String> = checks
            .iter()
            .map(|c| {
                format!(
                    "{} [{}] {}: {}{}",
                    if c.pass { "PASS" } else { "FAIL" },
                    label,
                    c.name,
                    if c.detail.is_empty() { "ok" } else { &c.detail },
                    ""
                )
            })
            .collect();
        items.push((
            json!({
                "ideal": ideal_json(&ctx, label, ideal),
                "checks": checks
                    .iter()
                    .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
                    .collect::<Vec<_>>(),
            }),
            lines.join("\n"),
        ));
    }

    match args.scope.format {
        Format::Json => {
            let payload = json!({
                "schema": 1,
                "command": "verify-all",
                "family": ctx.rs.family().to_string(),
                "rank": ctx.rs.rank(),
                "ideals_verified": ideals.len(),
                "all_pass": all_pass,
                "results": items.iter().map(|(j, _)| j.clone()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
        _ => {
            for (_, line) in &items {
                println!("{}", line);
            }
            println!(
                "verify-all: {} ideals, {}",
                ideals.len(),
                if all_pass { "all checks passed" } else { "FAILURES PRESENT" }
            );
        }
    }
    Ok(all_pass)
}

fn verify_ideal(
    ctx: &Context,
    ideal: &LowerIdeal,
    has_basis: bool,
    args: &VerifyArgs,
) -> Vec<Check> {
    let rs = &ctx.rs;
    let wg = &ctx.wg;
    let exponents = ideal.exponents(rs);
    let product = GradedQuotient::product_formula(&exponents);
    let mut checks = Vec::new();

    // chamber oracles and factorization
    let chambers = chamber_count(rs, wg, ideal);
    checks.push(check(
        "chambers",
        chambers.as_ref().map_err(clone_err).map(|r| {
            let expected: i64 = exponents.iter().map(|&d| d as i64 + 1).product();
            (
                r.count as i64 == expected,
                format!("count {} vs product {}", r.count, expected),
            )
        }),
    ));
    checks.push(check(
        "terao",
        chambers.as_ref().map_err(clone_err).map(|r| {
            let t = terao_check(&r.poincare, &exponents);
            (t.holds, format!("pi {:?}", t.pi))
        }),
    ));

    // Poincare polynomial four ways
    let nilpotent = nilpotent_poincare(rs, wg, ideal);
    checks.push(check(
        "poincare-height-product",
        nilpotent
            .as_ref()
            .map_err(clone_err)
            .map(|p| (true, format!("{:?}", p))),
    ));
    checks.push(check(
        "weyl-type-generating-function",
        nilpotent.as_ref().map_err(clone_err).and_then(|p| {
            let subsets = weyl_type_subsets(rs, ideal, DEFAULT_WEYL_TYPE_BOUND)?;
            let genfn = subset_generating_function(&subsets);
            Ok((genfn == *p && genfn == product, format!("{:?}", genfn)))
        }),
    ));
    checks.push(check(
        "eta-bijection",
        eta_bijection_check(rs, wg, ideal).map(|ok| (ok, String::new())),
    ));
    checks.push(check(
        "chamber-subset-bijection",
        nilpotent.as_ref().map_err(clone_err).and_then(|p| {
            let (matches, separation) = chamber_subset_checks(rs, wg, ideal)?;
            Ok((
                matches && separation == *p,
                format!("separation {:?}", separation),
            ))
        }),
    ));

    // GKM graded dimensions
    checks.push(check("gkm-dims", {
        let graph = build_gkm_graph(rs, wg, ideal);
        let betti = semisimple_poincare(wg, ideal);
        (0..=args.max_degree)
            .map(|d| {
                let actual = gkm_space_dim(&graph, d, args.max_degree)?;
                Ok((d, actual, expected_gkm_dim(&betti, rs.rank(), d)))
            })
            .collect::<Result<Vec<_>, Error>>()
            .map(|dims| {
                (
                    dims.iter().all(|&(_, a, e)| a == e),
                    format!("{:?}", dims),
                )
            })
    }));

    if !has_basis {
        return checks;
    }

    let gens = match ideal_generators_for_ideal(rs, ideal) {
        Ok(g) => g,
        Err(e) => {
            checks.push(Check {
                name: "generators",
                pass: false,
                detail: format!("error: {}", e),
            });
            return checks;
        }
    };

    checks.push(check("saito", {
        psi_basis_for_ideal(rs, ideal)
            .and_then(|basis| saito_certificate(rs, &basis, ideal))
            .map(|cert| {
                (
                    cert.holds(),
                    format!(
                        "constant {}",
                        cert.constant
                            .map(|c| c.to_string())
                            .unwrap_or_else(|| "none".into())
                    ),
                )
            })
    }));

    let quotient = hilbert_series(&gens);
    checks.push(check(
        "hilbert-product",
        quotient.as_ref().map_err(clone_err).map(|q| {
            let matches = q.graded_dims == product
                && q.is_palindromic()
                && q.socle == ideal.len();
            let nil_ok = nilpotent
                .as_ref()
                .map(|p| *p == q.graded_dims)
                .unwrap_or(false);
            (matches && nil_ok, format!("{:?}", q.graded_dims))
        }),
    ));

    let volume = volume_polynomial(rs, ideal);
    checks.push(check(
        "pd-pairing",
        match (&quotient, &volume) {
            (Ok(q), Ok(v)) => pd_pairing_check(rs, q, &v.polynomial).map(|ok| (ok, String::new())),
            (Err(e), _) => Err(clone_err(e)),
            (_, Err(e)) => Err(clone_err(e)),
        },
    ));
    checks.push(check(
        "annihilator",
        volume.as_ref().map_err(clone_err).and_then(|v| {
            let report = annihilator_check(rs, ideal, &gens, v)?;
            Ok((report.holds(), String::new()))
        }),
    ));
    checks.push(check(
        "lefschetz",
        match (&quotient, &volume) {
            (Ok(q), Ok(v)) => {
                let rho = rs.reduce(&rs.rho());
                lefschetz_check(rs, q, &rho, &v.polynomial).map(|r| {
                    (
                        r.holds(),
                        if r.trivial {
                            "trivial".into()
                        } else {
                            format!("{} degrees", r.per_degree.len())
                        },
                    )
                })
            }
            (Err(e), _) => Err(clone_err(e)),
            (_, Err(e)) => Err(clone_err(e)),
        },
    ));

    // colon steps, sampled when there are too many
    let mut steps = ideal.addable_roots(rs);
    if steps.len() > args.max_colon_steps {
        let mut state = args.seed | 1;
        let mut sampled = Vec::new();
        while sampled.len() < args.max_colon_steps {
            let pick = (xorshift(&mut state) % steps.len() as u64) as usize;
            sampled.push(steps.remove(pick));
        }
        steps = sampled;
    }
    for alpha in steps {
        checks.push(check("colon", {
            ideal
                .with_root(rs, alpha)
                .and_then(|bigger| ideal_generators_for_ideal(rs, &bigger))
                .and_then(|bigger_gens| colon_check(rs, ideal, alpha, &gens, &bigger_gens))
                .map(|r| {
                    (
                        r.holds(),
                        format!("alpha = {}", rs.roots()[alpha].form),
                    )
                })
        }));
    }

    // Theorem-style invariant dimension comparison at small rank
    if rs.rank() <= 2 {
        checks.push(check(
            "invariant-dims",
            quotient.as_ref().map_err(clone_err).and_then(|q| {
                let dims = invariant_cohomology_dims(rs, wg, ideal, args.max_degree)?;
                let ok = dims.iter().all(|&(d, actual)| {
                    actual == q.graded_dims.get(d).copied().unwrap_or(0)
                });
                Ok((ok, format!("{:?}", dims)))
            }),
        ));
    }

    checks
}

fn clone_err(e: &Error) -> Error {
    Error::ConsistencyFailure(e.to_string())
}
