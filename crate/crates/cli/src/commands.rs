//! One function per command or suite. Each appends checks and objects to
//! the report and records its wall time.

use std::time::Instant;

use diagcoinv_core::algebra::{rational, LaurentPoly, RationalFunction};
use diagcoinv_core::character::{
    char_l_at_1, char_l_at_1_printed, char_poly_classes, fixed_dimension, graded_char_l,
    perm_char_q_mod, Params,
};
use diagcoinv_core::cherednik::{
    coinvariant_image_check, commutator_yx, commutator_yx_all_roots, contravariant_ranks,
    h_grading_check, sl2_closure_check, trivial_module_check, trivial_module_defect,
    type_b_commutator_display,
};
use diagcoinv_core::coinvariant::{
    compare_dw_rw, diagonal_coinvariant_dims, table_checks, wallach_spot_check, BigradedTable,
    DiagonalLab,
};
use diagcoinv_core::report::Check;
use diagcoinv_core::root_system::{
    build_with_group, coxeter_element, DegreeSource, GroupElement, RootSystemData, TypeLabel,
    WeylGroup,
};
use diagcoinv_core::series::{
    alternating_sum_check, alternating_sum_shape_check, hilbert_l, hilbert_l_checks,
    invariant_series_p, sign_isotypic_standard_series,
};
use diagcoinv_core::type_b::{
    build_koszul_model, fixed_point_cross_check, koszul_checks, ThetaMap, ThetaReading,
};
use diagcoinv_core::Error;
use serde_json::{json, Value};

use crate::config::{CommandKind, RunConfig, SeriesKind, Suite};
use crate::report::{rational_function, triples, Report};
use crate::CliError;

/// Highest total degree for the invariant-generation spot check.
const WALLACH_DEGREE: u32 = 4;

struct Ctx {
    rs: RootSystemData,
    group: Option<WeylGroup>,
}

impl Ctx {
    fn group(&self, cfg: &RunConfig) -> Result<&WeylGroup, CliError> {
        self.group.as_ref().ok_or_else(|| {
            Error::BudgetExceeded {
                budget: "group order",
                requested: self.rs.group_order,
                limit: cfg.budgets.group_order as u128,
            }
            .into()
        })
    }

    fn diagonal_lab<'a>(&'a self, cfg: &RunConfig) -> Result<DiagonalLab<'a>, CliError> {
        if self.rs.rank as u64 > cfg.budgets.diagonal_rank {
            return Err(Error::BudgetExceeded {
                budget: "diagonal rank",
                requested: self.rs.rank as u128,
                limit: cfg.budgets.diagonal_rank as u128,
            }
            .into());
        }
        Ok(
            DiagonalLab::new(&self.rs, self.group(cfg)?)
                .with_cell_budget(cfg.budgets.cell as usize),
        )
    }

    fn trunc(&self, cfg: &RunConfig) -> i64 {
        cfg.trunc
            .map_or(2 * self.rs.coxeter_number as i64, i64::from)
    }

    fn bounds(&self, cfg: &RunConfig) -> (u32, u32) {
        let top = self.rs.rank as u32 * self.rs.coxeter_number;
        cfg.max_bidegree.unwrap_or((top, top))
    }
}

fn timed<T>(report: &mut Report, key: &str, f: impl FnOnce(&mut Report) -> T) -> T {
    let start = Instant::now();
    let out = f(report);
    report
        .timings
        .insert(key.to_string(), start.elapsed().as_millis() as u64);
    out
}

/// Runs the configured command.
pub fn execute(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new(cfg.clone());
    let ctx = timed(&mut report, "setup", |_| {
        build_with_group(cfg.label, cfg.rank, cfg.budgets.group_order)
            .map(|(rs, group)| Ctx { rs, group })
    })?;
    match &cfg.command {
        CommandKind::Info => timed(&mut report, "info", |r| info(&ctx, r))?,
        CommandKind::Verify(suite) => {
            let suites: &[Suite] = match suite {
                Suite::All => &[
                    Suite::Series,
                    Suite::Characters,
                    Suite::Cherednik,
                    Suite::Coinvariants,
                    Suite::TypeB,
                ],
                s => std::slice::from_ref(s),
            };
            for s in suites {
                let key = serde_json::to_value(s)?
                    .as_str()
                    .unwrap_or_default()
                    .to_string();
                timed(&mut report, &key, |r| {
                    verify(cfg, &ctx, *s, *suite == Suite::All, r)
                })?;
            }
        }
        CommandKind::Series(what) => timed(&mut report, "series", |r| series(cfg, &ctx, *what, r))?,
    }
    Ok(report)
}

fn verify(
    cfg: &RunConfig,
    ctx: &Ctx,
    suite: Suite,
    in_all: bool,
    r: &mut Report,
) -> Result<(), CliError> {
    match suite {
        Suite::Series => verify_series(cfg, ctx, r),
        Suite::Characters => verify_characters(cfg, ctx, r),
        Suite::Cherednik => verify_cherednik(cfg, ctx, r),
        Suite::Coinvariants if in_all && ctx.rs.rank as u64 > cfg.budgets.diagonal_rank => {
            r.object(
                "coinvariants",
                json!(format!(
                    "skipped: rank {} exceeds diagonal rank budget {}",
                    ctx.rs.rank, cfg.budgets.diagonal_rank
                )),
            );
            Ok(())
        }
        Suite::Coinvariants => verify_coinvariants(cfg, ctx, r),
        Suite::TypeB if in_all && !matches!(ctx.rs.label, TypeLabel::B | TypeLabel::D) => {
            r.object("typeB", json!("not applicable: needs type B or D"));
            Ok(())
        }
        Suite::TypeB => verify_type_b(ctx, r),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn info(ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let rs = &ctx.rs;
    let n = rs.rank as u32;
    let h = rs.coxeter_number;
    let big_n = rs.num_positive() as u32;
    let order = ctx
        .group
        .as_ref()
        .map_or(rs.group_order, |g| g.order() as u128);
    r.object(
        "root_data",
        json!({
            "rank": n,
            "N": big_n,
            "h": h,
            "exponents": rs.exponents,
            "degrees": rs.degrees,
            "group_order": order,
            "group_enumerated": ctx.group.is_some(),
            "degree_source": match rs.degree_source {
                DegreeSource::Molien => "molien",
                DegreeSource::RootHeights => "root heights",
            },
            "h_plus_1_pow_n": (h as u128 + 1).pow(n),
        }),
    );
    let mut from_exps: Vec<u32> = rs.exponents.iter().map(|e| h + 1 - e).collect();
    from_exps.sort_unstable();
    let mut degs = rs.degrees.clone();
    degs.sort_unstable();
    let prod: u128 = rs.degrees.iter().map(|&d| d as u128).product();
    r.push_checks(
        "info",
        [
            Check::equal("positive roots", "2N = n h", &(n * h), &(2 * big_n)),
            Check::equal(
                "exponent sum",
                "sum of exponents = N",
                &big_n,
                &rs.exponents.iter().sum::<u32>(),
            ),
            Check::equal(
                "degrees",
                "degrees are h + 1 - e_k",
                &format!("{from_exps:?}"),
                &format!("{degs:?}"),
            ),
            Check::equal("group order", "product of degrees = |W|", &order, &prod),
            Check::equal(
                "Coxeter element",
                "the Coxeter element has order h",
                &(h as u64),
                &coxeter_element(rs).order(),
            ),
        ],
    );
    Ok(())
}

fn verify_series(cfg: &RunConfig, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let rs = &ctx.rs;
    let trunc = ctx.trunc(cfg);
    let alt = alternating_sum_check(rs)?;
    r.object(
        "series/alternating_sum",
        rational_function(&alt.series, trunc)?,
    );
    r.push_checks("series", alt.checks);
    let shape = alternating_sum_shape_check(rs, cfg.m, ctx.group.as_ref())?;
    r.object(
        format!("series/alternating_sum_m{}", cfg.m),
        rational_function(&shape.series, trunc)?,
    );
    r.push_checks("series", shape.checks);
    r.object("series/hilbL", triples(&hilbert_l(rs))?);
    r.push_checks("series/hilbL", hilbert_l_checks(rs));
    Ok(())
}

fn verify_characters(cfg: &RunConfig, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let rs = &ctx.rs;
    let g = ctx.group(cfg)?;
    let q = rs.coxeter_number as u64 + 1;
    let mut agree = true;
    let mut coprime = true;
    let mut first_bad = None;
    for (i, w) in g.elements().iter().enumerate() {
        let l = char_l_at_1(rs, w)?;
        let p = perm_char_q_mod(w, q);
        if l != p && first_bad.is_none() {
            first_bad = Some(format!("element {i}: {l} vs {p}"));
        }
        agree &= l == p;
        coprime &= gcd(w.order(), q) == 1;
    }
    let all = format!("all {} elements", g.order());
    r.push_checks(
        "characters",
        [Check::holds(
            "character vs fixed points",
            "ch_L(w) at t=1 equals the number of fixed points of w on Q/(h+1)Q",
            agree,
            all.clone(),
            first_bad.unwrap_or_else(|| all.clone()),
        )],
    );
    if matches!(rs.label, TypeLabel::E | TypeLabel::F | TypeLabel::G) {
        r.push_checks(
            "characters",
            [Check::holds(
                "coprime orders",
                "gcd(order(w), h+1) = 1",
                coprime,
                all.clone(),
                if coprime { all } else { "common factor".into() },
            )],
        );
    }
    let id = GroupElement::identity(rs.rank);
    r.push_checks(
        "characters",
        [Check::equal(
            "identity character",
            "graded character at the identity equals the Hilbert series of L_c(triv)",
            &RationalFunction::from_poly(hilbert_l(rs)),
            &graded_char_l(rs, &id),
        )],
    );
    let mut classes = Vec::new();
    for (coeffs, (count, rep)) in char_poly_classes(g) {
        let w = &g.elements()[rep];
        classes.push(json!({
            "det_coefficients": coeffs,
            "count": count,
            "fixed_dimension": fixed_dimension(w),
            "char_at_1": char_l_at_1(rs, w)?,
            "printed_h_power": char_l_at_1_printed(rs, w),
            "fixed_points": perm_char_q_mod(w, q),
        }));
    }
    r.object("characters/classes", Value::Array(classes));
    Ok(())
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn verify_cherednik(cfg: &RunConfig, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let rs = &ctx.rs;
    let n = rs.rank;
    let h = rs.coxeter_number;
    let inv_h = Params::uniform(rational::rat(1, h as i64));
    let c = cfg.params.clone().unwrap_or(inv_h);
    let shown = format!(
        "c_s={}, c_l={}",
        rational::display(&c.short),
        rational::display(&c.long)
    );
    let ok = trivial_module_check(rs, &c);
    let off = Params::uniform(rational::rat(h as i64 + 1, h as i64));
    r.push_checks(
        "cherednik",
        [
            Check::holds(
                "trivial module",
                "y_i act by zero on a one-dimensional module at the given c",
                ok,
                format!("one-dimensional module at {shown}"),
                if ok {
                    "exists".to_string()
                } else {
                    "does not exist".into()
                },
            ),
            Check::holds(
                "trivial module away from 1/h",
                "no one-dimensional module at c = 1/h + 1",
                !trivial_module_check(rs, &off),
                "does not exist",
                if trivial_module_check(rs, &off) {
                    "exists"
                } else {
                    "does not exist"
                },
            ),
        ],
    );
    let defect: Vec<Vec<String>> = trivial_module_defect(rs, &c)
        .iter()
        .map(|row| row.iter().map(rational::display).collect())
        .collect();
    r.object("cherednik/trivial_module_defect", json!(defect));

    let mut half = true;
    for i in 0..n {
        for j in 0..n {
            half &= commutator_yx(rs, i, j) == commutator_yx_all_roots(rs, i, j);
        }
    }
    r.push_checks(
        "cherednik",
        [Check::holds(
            "half sum over all roots",
            "the commutator sum over R+ equals one half of the sum over R",
            half,
            "equal for all i, j",
            if half {
                "equal for all i, j"
            } else {
                "differs"
            },
        )],
    );

    let sl2 = sl2_closure_check(rs)?;
    let show =
        |p: &Option<diagcoinv_core::character::ParamScalar>| p.as_ref().map(|v| v.to_string());
    r.object(
        "cherednik/sl2",
        json!({"a": show(&sl2.a), "b": show(&sl2.b), "gamma": show(&sl2.gamma)}),
    );
    r.push_checks("cherednik/sl2", sl2.checks);
    r.push_checks("cherednik/sl2", h_grading_check(rs, 2)?);

    let top = n as u32 * h;
    let basis = binomial(top as u64 + n as u64 - 1, n as u64 - 1);
    if basis <= cfg.budgets.form_basis as u128 {
        let ranks = contravariant_ranks(rs, &Params::shifted(1, h), top)?;
        let want = LaurentPoly::geometric(h).pow(n as u32);
        let expect: Vec<String> = (0..=top as i64)
            .map(|e| rational::display(&want.coeff(e)))
            .collect();
        let got: Vec<String> = ranks.iter().map(|x| x.to_string()).collect();
        r.object("cherednik/contravariant_ranks", json!(ranks));
        r.push_checks(
            "cherednik/dunkl",
            [Check::equal(
                "contravariant ranks",
                "rank of the contravariant form at c=(1+h)/h in degree d is the t^d coefficient of (1+...+t^h)^n",
                &expect.join(","),
                &got.join(","),
            )],
        );
        if let Some(g) = &ctx.group {
            let img = coinvariant_image_check(rs, g)?;
            r.object("cherednik/sign_image_ranks", json!(img.ranks));
            r.push_checks("cherednik/dunkl", img.checks);
        }
    } else {
        r.object(
            "cherednik/contravariant_ranks",
            json!(format!(
                "skipped: top-degree basis {basis} exceeds form budget {}",
                cfg.budgets.form_basis
            )),
        );
    }

    if matches!(rs.label, TypeLabel::B | TypeLabel::C) {
        let d = type_b_commutator_display(rs.label, n)?;
        let swap = rs.label == TypeLabel::B;
        r.object("cherednik/commutator_display", json!(d.render()));
        r.push_checks(
            "cherednik",
            [Check::holds(
                "commutator display",
                "the commutators [y_i, x_j] in epsilon coordinates match the classical display",
                d.matches(swap),
                if swap {
                    "display with c_s and c_l exchanged"
                } else {
                    "display as printed"
                },
                if d.matches(swap) {
                    "reproduced"
                } else {
                    "mismatch"
                },
            )],
        );
    }
    Ok(())
}

fn table_object(t: &BigradedTable) -> Value {
    let cells: Vec<Value> = t
        .dims
        .iter()
        .map(|(&(a, b), &d)| json!([a, b, d]))
        .collect();
    json!({
        "bounds": [t.bounds.0, t.bounds.1],
        "certified_degree": t.certified_degree,
        "total": t.total(),
        "cells": cells,
    })
}

fn dw_table(cfg: &RunConfig, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let rs = &ctx.rs;
    let lab = ctx.diagonal_lab(cfg)?;
    let table = diagonal_coinvariant_dims(&lab, ctx.bounds(cfg))?;
    r.object("coinvariants/table", table_object(&table));
    r.push_checks("coinvariants", table_checks(rs, &table));
    let cmp = compare_dw_rw(rs, &table)?;
    r.object("coinvariants/DW", triples(&cmp.dw)?);
    r.object("coinvariants/RW", triples(&cmp.rw)?);
    r.object("coinvariants/strict_degrees", json!(cmp.strict_degrees));
    r.push_checks("coinvariants", cmp.checks);
    if rs.label == TypeLabel::A {
        r.push_checks(
            "coinvariants",
            [Check::equal(
                "type A equality",
                "in type A the Z-graded series of D_W equals that of R_W",
                &cmp.rw,
                &cmp.dw,
            )],
        );
    }
    Ok(())
}

fn verify_coinvariants(cfg: &RunConfig, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    dw_table(cfg, ctx, r)?;
    let lab = ctx.diagonal_lab(cfg)?;
    let w = wallach_spot_check(&lab, WALLACH_DEGREE)?;
    let cells: Vec<Value> = w
        .cells
        .iter()
        .map(|(&(a, b), &(got, inv))| json!([a, b, got, inv]))
        .collect();
    r.object("coinvariants/invariant_generation", json!(cells));
    r.push_checks("coinvariants", w.checks);
    Ok(())
}

fn verify_type_b(ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    let rs = &ctx.rs;
    let model = build_koszul_model(rs.label, rs.rank)?;
    r.object("typeB/modulus", json!(model.modulus));
    r.object("typeB/dimension", json!(model.dim()));
    r.push_checks("typeB", koszul_checks(&model)?);
    let theta = ThetaMap::new(&model, ThetaReading::Tensor);
    let bij = theta.is_bijective();
    r.push_checks(
        "typeB/theta",
        [Check::holds(
            "bijective",
            "theta (tensor reading) maps the monomial basis of the quotient onto a basis of C S",
            bij,
            format!("rank {}", model.dim()),
            format!("rank {}", theta.rank()),
        )],
    );
    let eq = theta.check_equivariance(false);
    r.push_checks(
        "typeB/theta",
        [Check::holds(
            "equivariant",
            "theta intertwines the signed-permutation actions",
            eq.is_ok(),
            "all generators",
            eq.as_ref()
                .map_or_else(|e| e.to_string(), |_| "all generators".into()),
        )],
    );
    let twisted = theta.check_equivariance(true);
    r.object(
        "typeB/theta_sign_twisted",
        json!(twisted.map_or_else(|e| e.to_string(), |_| "equivariant".into())),
    );
    let literal = ThetaMap::new(&model, ThetaReading::LiteralSum);
    r.object("typeB/theta_literal_sum_rank", json!(literal.rank()));
    r.push_checks("typeB", fixed_point_cross_check(&model));
    Ok(())
}

fn series(cfg: &RunConfig, ctx: &Ctx, what: SeriesKind, r: &mut Report) -> Result<(), CliError> {
    let rs = &ctx.rs;
    let trunc = ctx.trunc(cfg);
    match what {
        SeriesKind::P => {
            let p = invariant_series_p(rs);
            r.object("p", rational_function(&p, trunc)?);
            let back = &p
                * &RationalFunction::from_poly(diagcoinv_core::character::degree_product(
                    &rs.degrees,
                ));
            r.push_checks(
                "series/p",
                [Check::equal(
                    "inverse",
                    "p times prod (1 - t^d_k) equals 1",
                    &RationalFunction::one(),
                    &back,
                )],
            );
        }
        SeriesKind::HilbL => {
            r.object("hilbL", triples(&hilbert_l(rs))?);
            r.push_checks("series/hilbL", hilbert_l_checks(rs));
        }
        SeriesKind::EMc => {
            for i in 0..=rs.rank {
                let s = sign_isotypic_standard_series(rs, i, cfg.m)?;
                r.object(format!("eMc/i={i}"), rational_function(&s, trunc)?);
            }
            r.push_checks(
                "series/eMc",
                alternating_sum_shape_check(rs, cfg.m, ctx.group.as_ref())?.checks,
            );
        }
        SeriesKind::Dw => {
            let lab = ctx.diagonal_lab(cfg)?;
            let table = diagonal_coinvariant_dims(&lab, ctx.bounds(cfg))?;
            r.object("DW", table_object(&table));
            if table.certified_degree.is_some() {
                r.object("DW/z_graded", triples(&table.z_graded())?);
            }
            r.push_checks("series/DW", table_checks(rs, &table));
        }
    }
    Ok(())
}
