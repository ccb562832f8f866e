//! Command dispatch: input document in, report out.

use gpatoms_core::atoms::{enumerate_atoms, projection_meet, AtomEnumeration};
use gpatoms_core::clique::{join_factorization_check, CliquePolynomialForm};
use gpatoms_core::graph::Graph;
use gpatoms_core::region::{
    classify_boundary_point, default_precision, in_region, membership, membership_corner_oracle, rho, Rho,
};
use gpatoms_core::scalar::{rational_to_f64, Rational, Scalar};
use gpatoms_core::words::{
    cartier_foata_report, count_all_classes_series, count_reduced_classes, count_reduced_classes_series,
    enumerate_reduced_classes,
};
use gpatoms_core::TruncatedSeries;
use indexmap::IndexMap;
use num_traits::ToPrimitive;

use crate::cli::{Command, Mode, OutputFormat, RunConfig};
use crate::error::CliError;
use crate::input::{algebra_specs, read_input, vertex_values, FromInput, Input, NumberInput};
use crate::report::*;

/// A finished report, plus whether the command's check succeeded
/// (`words verify` reports a failed identity with exit status 1).
pub struct Outcome {
    pub report: Report,
    pub success: bool,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let input = read_input(&cfg.input)?;
    run_on(cfg, &input)
}

/// Run a command on an already parsed document.
pub fn run_on(cfg: &RunConfig, input: &Input) -> Result<Outcome, CliError> {
    let g = input.graph.build()?;
    let report = match (&cfg.command, cfg.mode) {
        (Command::Atoms, Mode::Exact) => atoms::<Rational>(&g, input, (), cfg.caps.selections, false)?,
        (Command::Atoms, Mode::Float { eps }) => atoms::<f64>(&g, input, eps, cfg.caps.selections, true)?,
        (Command::Meet, Mode::Exact) => meet::<Rational>(&g, input, (), false)?,
        (Command::Meet, Mode::Float { eps }) => meet::<f64>(&g, input, eps, true)?,
        (Command::RegionCheck, Mode::Exact) => region_check_exact(&g, input)?,
        (Command::RegionCheck, Mode::Float { eps }) => region_check_float(&g, input, eps)?,
        (Command::RegionRho, Mode::Exact) => region_rho(&g, input)?,
        (Command::RegionClassify, Mode::Exact) => region_classify(&g, input)?,
        (Command::RegionRho | Command::RegionClassify, Mode::Float { .. }) => {
            return Err(CliError::Usage(
                "region rho and region classify need exact arithmetic; drop --mode float".into(),
            ))
        }
        (Command::WordsCount { max_len }, _) => words_count(&g, *max_len, cfg.caps.classes)?,
        (Command::WordsEnumerate { len }, _) => words_enumerate(&g, *len, cfg.caps.classes)?,
        (Command::WordsVerify { max_len }, _) => {
            let report = words_verify(&g, *max_len, cfg.caps.classes)?;
            let success = report.holds;
            return Ok(Outcome {
                report: Report::WordsVerify(report),
                success,
            });
        }
        (Command::Poly, Mode::Exact) => poly::<Rational>(&g, input, false)?,
        (Command::Poly, Mode::Float { .. }) => poly::<f64>(&g, input, true)?,
        (Command::Join, Mode::Exact) => join::<Rational>(&g, input, false)?,
        (Command::Join, Mode::Float { .. }) => join::<f64>(&g, input, true)?,
    };
    Ok(Outcome { report, success: true })
}

/// Render a report in the requested format, ending with a newline.
pub fn render(report: &Report, format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| CliError::Output(e.to_string())),
        OutputFormat::Table => Ok(report.table().render()),
        OutputFormat::Csv => report.table().to_csv().map_err(|e| CliError::Output(e.to_string())),
    }
}

fn require<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T, CliError> {
    field
        .as_ref()
        .ok_or_else(|| CliError::input(name, format!("this command needs `{name}`")))
}

fn emit_all<S: Emit>(v: &[S]) -> Vec<String> {
    v.iter().map(Emit::emit).collect()
}

fn atoms<S: Scalar + FromInput + Emit>(
    g: &Graph,
    input: &Input,
    tol: S::Tol,
    cap: u128,
    approximate: bool,
) -> Result<Report, CliError> {
    let specs = algebra_specs::<S>(g, require(&input.algebras, "algebras")?)?;
    let AtomEnumeration {
        atoms,
        total_mass,
        selections_examined,
    } = enumerate_atoms(g, &specs, tol, cap)?;
    let atoms = atoms
        .into_iter()
        .map(|a| {
            let finite: Vec<String> = names(g, a.finite_part);
            AtomOut {
                selection: by_vertex(g, &a.selection.0),
                support_clique: names(g, a.support_clique),
                infinite_part: names(g, a.infinite_part),
                weight: a.weight.emit(),
                derived_weight: a.derived_weight,
                dimensions: by_vertex(g, &a.dimensions),
                density_eigenvalues: emit_all(&a.density_eigenvalues),
                minimal_projections: a
                    .minimal_projection_weights
                    .iter()
                    .map(|m| MinimalProjectionOut {
                        index: finite.iter().cloned().zip(m.index.iter().copied()).collect(),
                        weight: m.weight.emit(),
                    })
                    .collect(),
            }
        })
        .collect();
    Ok(Report::Atoms(AtomsReport {
        approximate,
        atoms,
        total_mass: total_mass.emit(),
        selections_examined: u64::try_from(selections_examined).unwrap_or(u64::MAX),
    }))
}

fn meet<S: Scalar + FromInput + Emit>(
    g: &Graph,
    input: &Input,
    tol: S::Tol,
    approximate: bool,
) -> Result<Report, CliError> {
    let p = vertex_values::<S>(g, require(&input.projections, "projections")?, "projections")?;
    let m = projection_meet(g, &p, tol)?;
    Ok(Report::Meet(MeetOut {
        approximate,
        nonzero: m.nonzero,
        value: m.value.map(|v| v.emit()),
    }))
}

fn point<S: FromInput>(g: &Graph, input: &Input) -> Result<Vec<S>, CliError> {
    vertex_values(g, require(&input.x, "x")?, "x")
}

fn region_check_exact(g: &Graph, input: &Input) -> Result<Report, CliError> {
    let x = point::<Rational>(g, input)?;
    let form = CliquePolynomialForm::new(g.clone());
    Ok(Report::RegionCheck(RegionCheckReport {
        approximate: false,
        x: by_vertex(g, &emit_all(&x)),
        clique_value: form.evaluate(&x)?.emit(),
        in_region: membership(&form, &x)?,
        corner_oracle: Some(membership_corner_oracle(&form, &x)?),
    }))
}

fn region_check_float(g: &Graph, input: &Input, eps: f64) -> Result<Report, CliError> {
    let x = point::<f64>(g, input)?;
    let form = CliquePolynomialForm::new(g.clone());
    Ok(Report::RegionCheck(RegionCheckReport {
        approximate: true,
        x: by_vertex(g, &emit_all(&x)),
        clique_value: form.evaluate(&x)?.emit(),
        in_region: in_region(&form, &x, eps)?,
        corner_oracle: None,
    }))
}

fn region_rho(g: &Graph, input: &Input) -> Result<Report, CliError> {
    let directions: Vec<(String, &IndexMap<String, NumberInput>)> = match (&input.u, &input.directions) {
        (Some(u), None) => vec![("u".into(), u)],
        (None, Some(ds)) => ds.iter().enumerate().map(|(i, d)| (format!("directions[{i}]"), d)).collect(),
        (Some(_), Some(_)) => return Err(CliError::input("u", "give either `u` or `directions`, not both")),
        (None, None) => return Err(CliError::input("u", "this command needs `u` or `directions`")),
    };
    let form = CliquePolynomialForm::new(g.clone());
    let precision = default_precision();
    let rays = directions
        .into_iter()
        .map(|(field, d)| {
            let u = vertex_values::<Rational>(g, d, &field)?;
            let (kind, lower, upper) = match rho(&form, &u, &precision)? {
                Rho::Root(iv) => ("root", iv.lo, iv.hi),
                Rho::CappedAtBox(c) => ("capped", c.clone(), c),
            };
            let estimate = (&lower + &upper) / Rational::from_integer(2.into());
            Ok(RhoRow {
                direction: by_vertex(g, &emit_all(&u)),
                kind: kind.into(),
                decimal: rational_to_f64(&estimate),
                lower: lower.emit(),
                upper: upper.emit(),
                estimate: estimate.emit(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Report::Rho(RhoReport {
        precision: precision.emit(),
        rays,
    }))
}

fn region_classify(g: &Graph, input: &Input) -> Result<Report, CliError> {
    let x = point::<Rational>(g, input)?;
    let form = CliquePolynomialForm::new(g.clone());
    let c = classify_boundary_point(&form, &x)?;
    Ok(Report::Classify(ClassifyReport {
        clique_value: form.evaluate(&x)?.emit(),
        on_boundary: c.on_boundary,
        gradient: c.gradient.map(|grad| by_vertex(g, &emit_all(&grad))),
        gradient_vanishes: c.gradient_vanishes,
        witness_split: c.witness_split.map(|(a, b)| [names(g, a), names(g, b)]),
    }))
}

fn integer_coefficients(s: &TruncatedSeries, upto: usize) -> Vec<u64> {
    (0..=upto)
        .map(|k| s.coeff(k).to_integer().to_u64().unwrap_or(u64::MAX))
        .collect()
}

/// Refuse a walk over more classes than `cap`.
fn check_class_cap(total: u128, cap: u128) -> Result<(), CliError> {
    if total > cap {
        return Err(gpatoms_core::Error::CapExceeded {
            what: "word classes",
            count: total,
            cap,
        }
        .into());
    }
    Ok(())
}

fn words_count(g: &Graph, max_len: usize, cap: u128) -> Result<Report, CliError> {
    let coefficients = integer_coefficients(&count_reduced_classes_series(g, max_len), max_len);
    check_class_cap(coefficients.iter().map(|&c| c as u128).sum(), cap)?;
    Ok(Report::WordsCount(WordsCountReport {
        max_len,
        enumerated: count_reduced_classes(g, max_len),
        coefficients,
    }))
}

fn words_enumerate(g: &Graph, len: usize, cap: u128) -> Result<Report, CliError> {
    let classes: Vec<Vec<String>> = enumerate_reduced_classes(g, len, cap)?
        .iter()
        .map(|w| w.names(g).into_iter().map(String::from).collect())
        .collect();
    Ok(Report::WordsEnumerate(WordsEnumerateReport {
        len,
        count: classes.len(),
        classes,
    }))
}

fn words_verify(g: &Graph, max_len: usize, cap: u128) -> Result<WordsVerifyReport, CliError> {
    // The unreduced walk dominates the work.
    let all = integer_coefficients(&count_all_classes_series(g, max_len), max_len);
    check_class_cap(all.iter().map(|&c| c as u128).sum(), cap)?;
    let r = cartier_foata_report(g, max_len);
    Ok(WordsVerifyReport {
        max_len,
        holds: r.holds(),
        reduced_counts: r.reduced_counts,
        reduced_series: emit_all(&r.reduced_series),
        all_counts: r.all_counts,
        all_series: emit_all(&r.all_series),
        reduced_product: emit_all(&r.reduced_product),
        all_product: emit_all(&r.all_product),
    })
}

fn poly<S: Scalar + FromInput + Emit>(g: &Graph, input: &Input, approximate: bool) -> Result<Report, CliError> {
    let form = CliquePolynomialForm::new(g.clone());
    let value = match &input.x {
        Some(x) => Some(form.evaluate(&vertex_values::<S>(g, x, "x")?)?.emit()),
        None => None,
    };
    Ok(Report::Poly(PolyReport {
        approximate: approximate && value.is_some(),
        polynomial: form.to_string(),
        terms: form
            .terms()
            .into_iter()
            .map(|(sign, vs)| Term {
                sign,
                vertices: vs.into_iter().map(String::from).collect(),
            })
            .collect(),
        value,
    }))
}

fn join<S: Scalar + FromInput + Emit>(g: &Graph, input: &Input, approximate: bool) -> Result<Report, CliError> {
    let factors: Vec<Vec<String>> = g.join_factor_sets().into_iter().map(|f| names(g, f)).collect();
    let (value, factor_values) = match &input.x {
        Some(x) => {
            let (full, parts) = join_factorization_check(g, &vertex_values::<S>(g, x, "x")?)?;
            (Some(full.emit()), Some(emit_all(&parts)))
        }
        None => (None, None),
    };
    Ok(Report::Join(JoinReport {
        approximate: approximate && value.is_some(),
        irreducible: g.is_join_irreducible(),
        factors,
        value,
        factor_values,
    }))
}
