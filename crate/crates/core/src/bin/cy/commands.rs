//! Implementations of the CLI subcommands.

use crate::input;
use crate::output::Printer;
use cykit::catalog::catalog;
use cykit::cystruct::{
    cy2_check, cy5_check, exterior_power_operator, verify_identities, wronskian_lift,
    yang_pullback,
};
use cykit::diffops::{
    de_to_diff, diff_to_de, holonomic_enumerate, superseeker_signature, QuadraticSignature,
};
use cykit::error::{Error, Result};
use cykit::exact::poly::Poly;
use cykit::exact::rat::Rat;
use cykit::families::{
    binom_lift_third, hadamard_2x2, hypergeometric_quintic, pullback_closed_form,
    HyperQuinticSpec,
};
use cykit::frobenius::{
    equivalence_transformation, equivalent_k, frobenius_basis, instanton_numbers, mirror_map,
    mum_check, power_series_solution, series_annihilator, yukawa_coupling,
};
use cykit::opalg::{weyl_right_divide, ThetaOperator};
use cykit::textio::{
    parse_n_poly, render_diffop, render_diffop_machine, render_machine, render_theta, Style,
};
use std::process::ExitCode;
use std::str::FromStr;

const OK: ExitCode = ExitCode::SUCCESS;

fn rat(text: &str) -> Result<Rat> {
    Rat::from_str(text)
}

fn rat_list(text: &str) -> Result<Vec<Rat>> {
    text.split(',').map(|t| rat(t.trim())).collect()
}

pub fn parse(out: &Printer, spec: &str) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    out.kv("order", l.order());
    out.kv("degree", l.degree());
    out.operator("operator", &l);
    Ok(OK)
}

pub fn render(out: &Printer, spec: &str, style: &str) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    match Style::from_str(style)? {
        Style::Theta => out.line(&render_theta(&l)),
        Style::Machine => print!("{}", render_machine(&l)),
    }
    Ok(OK)
}

pub fn frobenius(out: &Printer, spec: &str, order: Option<usize>) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let order = input::resolve_order(order);
    let basis = frobenius_basis(&l, order)?;
    for (j, y) in basis.solutions.iter().enumerate() {
        for (part, series) in y.parts().iter().enumerate() {
            out.series(&format!("y{}.log{}", j, part), series);
        }
    }
    Ok(OK)
}

pub fn mirror(out: &Printer, spec: &str, order: Option<usize>) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let order = input::resolve_order(order);
    let md = mirror_map(&l, order)?;
    out.series("q", &md.q_series());
    out.series("x_of_q", &md.x_of_q);
    Ok(OK)
}

pub fn yukawa(out: &Printer, spec: &str, order: Option<usize>) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let order = input::resolve_order(order);
    let md = yukawa_coupling(&l, order)?;
    out.kv("K0", 1);
    out.coeff_list("K", 1, &md.k_coeffs);
    Ok(OK)
}

pub fn instantons(out: &Printer, spec: &str, order: Option<usize>) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let order = input::resolve_order(order);
    let md = yukawa_coupling(&l, order)?;
    let (n, c) = instanton_numbers(&md.k_coeffs);
    out.coeff_list("N", 1, &n);
    out.kv("normalizer", c);
    Ok(OK)
}

pub fn check(out: &Printer, kind: &str, spec: &str, order: Option<usize>) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let pass = match kind {
        "mum" => mum_check(&l),
        "cy2" => cy2_check(&l)?,
        "cy5" => cy5_check(&l)?,
        "identities" => {
            let order = input::resolve_order(order);
            let reports = verify_identities(&l, order)?;
            let mut all = true;
            for r in &reports {
                let rv = r
                    .residual_valuation
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "inf".into());
                out.kv(
                    &format!("identity.{}", r.id),
                    format!("{} residual {}", if r.pass { "pass" } else { "fail" }, rv),
                );
                all &= r.pass;
            }
            all
        }
        other => {
            return Err(Error::Domain(format!(
                "unknown check {:?} (expected mum, cy2, cy5, or identities)",
                other
            )))
        }
    };
    out.kv("status", if pass { "pass" } else { "fail" });
    Ok(if pass { OK } else { ExitCode::from(1) })
}

pub fn pullback(out: &Printer, spec: &str) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let p = yang_pullback(&l)?;
    out.kv("order", p.order());
    out.kv("degree", p.degree());
    out.operator("pullback", &p);
    Ok(OK)
}

pub fn lift(out: &Printer, spec: &str) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let lifted = wronskian_lift(&l)?;
    out.kv("order", lifted.order());
    out.kv("degree", lifted.degree());
    out.operator("lift", &lifted);
    Ok(OK)
}

pub fn exterior(out: &Printer, spec: &str, indices: &str) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let parts: Vec<usize> = indices
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Domain(format!("bad index triple {:?}", indices)))?;
    if parts.len() != 3 {
        return Err(Error::Domain("expected three indices i,j,k".into()));
    }
    let e = exterior_power_operator(&l, (parts[0], parts[1], parts[2]))?;
    out.kv("order", e.order());
    out.kv("degree", e.degree());
    out.operator("exterior", &e);
    Ok(OK)
}

pub fn hadamard(out: &Printer, left: &str, right: &str) -> Result<ExitCode> {
    // Second-degree factor (P, c) on the left, hypergeometric Q on the
    // right, in either argument order.
    let resolve = |spec: &str| -> Result<(String, ThetaOperator)> {
        let entry = catalog().get(spec)?;
        Ok((entry.id.clone(), catalog().operator(&entry.id)?))
    };
    let (lid, _) = resolve(left)?;
    let (rid, _) = resolve(right)?;
    let (deg2, hyper) = if lid.starts_with("deg2-") {
        (lid.clone(), rid.clone())
    } else {
        (rid.clone(), lid.clone())
    };
    let d = catalog().get(&deg2)?;
    let h = catalog().get(&hyper)?;
    if !h.id.starts_with("hyper-") || !d.id.starts_with("deg2-") {
        return Err(Error::Domain(
            "expected one second-degree row (deg2-*) and one hypergeometric row (hyper-*)".into(),
        ));
    }
    let p = Poly::from_coeffs(
        cykit::exact::poly::Var::Theta,
        vec![d.param("b")?, d.param("a")?, d.param("a")?],
    );
    let q = Poly::from_coeffs(
        cykit::exact::poly::Var::Theta,
        vec![h.param("q0")?, h.param("q1")?, h.param("q2")?],
    );
    let prod = hadamard_2x2(&p, &d.param("c")?, &q)?;
    out.kv("left", &d.id);
    out.kv("right", &h.id);
    out.operator("product", &prod);
    Ok(OK)
}

pub fn binomlift(out: &Printer, p: &str, c: &str) -> Result<ExitCode> {
    let coeffs = rat_list(p)?;
    if coeffs.len() != 3 {
        return Err(Error::Domain("expected three coefficients p0,p1,p2".into()));
    }
    let poly = Poly::from_coeffs(cykit::exact::poly::Var::Theta, coeffs);
    let l = binom_lift_third(&poly, &rat(c)?)?;
    out.operator("operator", &l);
    Ok(OK)
}

pub fn hyper5(out: &Printer, a2: &str, a4: &str, c: &str) -> Result<ExitCode> {
    let spec = HyperQuinticSpec::new(rat(a2)?, rat(a4)?, rat(c)?)?;
    let l = hypergeometric_quintic(&spec);
    out.kv("alpha", spec.alpha());
    out.kv("beta", spec.beta());
    out.operator("quintic", &l);
    Ok(OK)
}

pub fn closedform(out: &Printer, alpha: &str, beta: &str, c: &str) -> Result<ExitCode> {
    let l = pullback_closed_form(&rat(alpha)?, &rat(beta)?, &rat(c)?);
    out.operator("quartic", &l);
    Ok(OK)
}

pub fn equiv(out: &Printer, a: &str, b: &str, order: Option<usize>) -> Result<ExitCode> {
    let la = input::operator(a)?;
    let lb = input::operator(b)?;
    let order = order.unwrap_or(12);
    let same = equivalent_k(&la, &lb, order)?;
    out.kv("equivalent", same);
    Ok(if same { OK } else { ExitCode::from(1) })
}

pub fn transform(out: &Printer, a: &str, b: &str, order: Option<usize>) -> Result<ExitCode> {
    let la = input::operator(a)?;
    let lb = input::operator(b)?;
    let order = input::resolve_order(order);
    let (f, g) = equivalence_transformation(&la, &lb, order)?;
    out.series("f", &f);
    out.series("g", &g);
    Ok(OK)
}

pub fn de2diff(out: &Printer, spec: &str) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let r = de_to_diff(&l);
    out.kv("order", r.order());
    out.kv("degree", r.degree());
    if out.is_machine() {
        print!("{}", render_diffop_machine(&r));
    } else {
        out.kv("recursion", render_diffop(&r));
    }
    Ok(OK)
}

pub fn diff2de(out: &Printer, spec: &str) -> Result<ExitCode> {
    let r = input::recursion(spec)?;
    let l = diff_to_de(&r);
    out.kv("order", l.order());
    out.kv("degree", l.degree());
    out.operator("operator", &l);
    Ok(OK)
}

pub fn enumerate(
    out: &Printer,
    spec: &str,
    n: usize,
    initial: Option<&str>,
) -> Result<ExitCode> {
    let r = input::recursion(spec)?;
    let init = match initial {
        Some(text) => rat_list(text)?,
        None => {
            let mut v = vec![Rat::one()];
            v.resize(r.order(), Rat::zero());
            v
        }
    };
    let seq = holonomic_enumerate(&r, &init, n)?;
    out.coeff_list("A", 0, &seq);
    Ok(OK)
}

pub fn factor(out: &Printer, spec: &str, kmax: usize, dmax: usize) -> Result<ExitCode> {
    let l = input::operator(spec)?;
    let terms = (kmax + 1) * (dmax + 1) + 12;
    let seq = power_series_solution(&l, terms)?;
    let fitted = series_annihilator(seq.coeffs(), kmax, dmax)?;
    let Some(right) = fitted else {
        out.kv("status", "no factor within bounds");
        return Ok(ExitCode::from(1));
    };
    out.kv("factor.order", right.order());
    out.kv("factor.degree", right.degree());
    out.operator("factor", &right);
    let division = weyl_right_divide(&l, &right)?;
    out.kv("remainder_zero", division.exact);
    if let Some(q) = &division.quotient_theta {
        out.operator("quotient", q);
    }
    Ok(if division.exact { OK } else { ExitCode::from(1) })
}

pub fn superseek(out: &Printer, spec: &str) -> Result<ExitCode> {
    // Accept a quadratic in n, a difference operator, or a differential
    // operator.
    let sig: QuadraticSignature = if let Ok(q) = parse_n_poly(spec) {
        QuadraticSignature::from_quadratic(&q)?
    } else if let Ok(r) = input::recursion(spec) {
        superseeker_signature(&r)?
    } else {
        let l = input::operator(spec)?;
        superseeker_signature(&de_to_diff(&l))?
    };
    out.kv("quadratic", &sig.quadratic);
    out.kv("discriminant", &sig.discriminant);
    let hits = catalog().superseeker_lookup(&sig);
    if hits.is_empty() {
        out.kv("matches", "none");
    } else {
        out.kv("matches", hits.join(" "));
    }
    Ok(OK)
}

pub fn catalog_list(out: &Printer) -> Result<ExitCode> {
    for e in catalog().entries() {
        let mut flags = Vec::new();
        if e.corrected {
            flags.push("corrected");
        }
        if e.excluded {
            flags.push("excluded");
        }
        if e.garbled {
            flags.push("garbled");
        }
        let shape = if e.op_text.is_some() {
            let op = catalog().operator(&e.id)?;
            format!("order {} degree {}", op.order(), op.degree())
        } else if e.has_tag("superseeker") {
            "classifier row".to_string()
        } else if e.construct.is_some() {
            "constructed on demand".to_string()
        } else {
            "metadata only".to_string()
        };
        out.kv(&e.id, format!("{}{}", shape, if flags.is_empty() {
            String::new()
        } else {
            format!(" [{}]", flags.join(","))
        }));
    }
    Ok(OK)
}

pub fn catalog_show(out: &Printer, id: &str) -> Result<ExitCode> {
    let e = catalog().get(id)?;
    out.kv("id", &e.id);
    if !e.aliases.is_empty() {
        out.kv("aliases", e.aliases.join(" "));
    }
    out.kv("source", &e.source);
    if !e.tags.is_empty() {
        out.kv("tags", e.tags.join(" "));
    }
    out.kv("corrected", e.corrected);
    out.kv("excluded", e.excluded);
    for note in &e.notes {
        out.kv("note", note);
    }
    for (k, v) in &e.params {
        out.kv(&format!("param.{}", k), v);
    }
    if let Ok(op) = catalog().operator(&e.id) {
        out.operator("operator", &op);
    }
    if let Some(q0) = &e.q0 {
        out.kv("q0", q0);
    }
    if let (Some(d), Some(a)) = (&e.printed_d, &e.printed_abs_d) {
        out.kv("printed_d", d);
        out.kv("printed_abs_d", a);
    }
    if !e.row_ids.is_empty() {
        out.kv("table_ids", e.row_ids.join(" "));
    }
    for x in &e.xrefs {
        out.kv("xref", x);
    }
    if let Some(r) = &e.recop_text {
        out.kv("recursion", r);
    }
    Ok(OK)
}

pub fn catalog_verify_all(out: &Printer) -> Result<ExitCode> {
    let mut failures = 0usize;
    let mut errata = 0usize;
    for e in catalog().entries() {
        // Classifier rows: recomputed discriminant vs the printed one.
        if e.has_tag("superseeker") {
            if e.garbled {
                out.kv(&e.id, "skipped (garbled row)");
                continue;
            }
            let sig = QuadraticSignature::from_quadratic(e.q0.as_ref().unwrap())?;
            match &e.printed_d {
                Some(printed) if *printed == sig.discriminant => out.kv(&e.id, "ok"),
                Some(printed) => {
                    errata += 1;
                    out.kv(
                        &e.id,
                        format!(
                            "erratum: printed D = {}, computed D = {}",
                            printed, sig.discriminant
                        ),
                    );
                }
                None => out.kv(&e.id, "no printed discriminant"),
            }
            continue;
        }
        let Ok(op) = catalog().operator(&e.id) else {
            out.kv(&e.id, "metadata only");
            continue;
        };
        // Round trip, MUM, and (for suitable quartics) the CY2 condition.
        let round = cykit::textio::parse_operator(&render_theta(&op)).map(|p| p == op);
        if round != Ok(true) {
            failures += 1;
            out.kv(&e.id, "FAIL: print/parse round trip");
            continue;
        }
        if !mum_check(&op) {
            failures += 1;
            out.kv(&e.id, "FAIL: not MUM");
            continue;
        }
        if op.order() == 4 && !e.excluded && !e.has_tag("factorable") && !e.has_tag("recursion") {
            if !cy2_check(&op)? {
                failures += 1;
                out.kv(&e.id, "FAIL: CY2");
                continue;
            }
        }
        out.kv(&e.id, "ok");
    }
    out.kv("failures", failures);
    out.kv("errata", errata);
    if failures > 0 {
        Err(Error::Internal(format!("{} catalog entries failed verification", failures)))
    } else {
        Ok(OK)
    }
}
