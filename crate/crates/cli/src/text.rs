use std::fmt::Write;

use magickit::catalog::{CatalogDump, OrbitTable};
use magickit::{CalibrationConstants, FreudenthalVector, PsiImage, Scalar, VerificationReport};

fn join(xs: &[Scalar]) -> String {
    xs.iter().map(Scalar::to_string).collect::<Vec<_>>().join(" ")
}

pub fn vector(w: &FreudenthalVector) -> String {
    format!(
        "alpha    {}\nr        {}\nsstar    {}\nbetastar {}\n",
        w.alpha,
        join(&w.r.coords()),
        join(&w.sstar.coords()),
        w.betastar
    )
}

pub fn psi(p: &PsiImage) -> String {
    format!(
        "u4     {}\nV*     {}\nu3v    {}\ng0     {}\nV      {}\nscalar {}\n",
        p.u4,
        join(&p.vstar),
        p.u3v,
        join(&p.g0.coeffs),
        join(&p.v),
        p.scalar
    )
}

pub fn calibration(c: &CalibrationConstants) -> String {
    format!(
        "algebra          {}\nlambda_pair      {}\nlambda_C         {}\nlambda_C*        {}\nlambda_Q         {}\ndelta_z_scaling  {}\nhyperdet_scale   {}\nlambda_moment    {}\n",
        c.tag,
        c.lambda_pair,
        c.lambda_c,
        c.lambda_cstar,
        c.lambda_q,
        join(&c.delta_z_scaling),
        c.hyperdet_scale,
        c.lambda_moment
    )
}

pub fn reports(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = match (&r.skipped, r.passed()) {
            (Some(_), _) => "SKIP",
            (None, true) => "PASS",
            (None, false) => "FAIL",
        };
        let _ = write!(out, "{status} {:<13} {:<4} checks={} failures={}", r.suite.name(), r.algebra.name(), r.checks, r.failures);
        if let Some(ms) = r.elapsed_ms {
            let _ = write!(out, " {ms}ms");
        }
        if let Some(why) = &r.skipped {
            let _ = write!(out, " ({why})");
        }
        out.push('\n');
        if let Some(c) = &r.counterexample {
            let _ = writeln!(out, "  first failure: trial {} seed {}: {}", c.trial, c.seed, c.check);
            let _ = writeln!(out, "  inputs: {}", c.inputs);
        }
    }
    out
}

fn orbit_table(out: &mut String, t: &OrbitTable) {
    let _ = writeln!(out, "{}", t.family);
    for o in &t.orbits {
        let label = o.label.map(|l| format!("  [{l}]")).unwrap_or_default();
        let _ = writeln!(out, "  {:<28} {:>7}{label}", o.name, o.dim.to_string());
    }
    if let Some(a) = t.ambient {
        let _ = writeln!(out, "  {:<28} {:>7}", "ambient", a.to_string());
    }
}

pub fn catalog(d: &CatalogDump) -> String {
    let mut out = String::from("F-geometry dimensions\n");
    for r in &d.rows {
        let vals: Vec<_> = r.values.iter().map(|(m, dim, v)| format!("m={m}: {dim} {v}")).collect();
        let _ = writeln!(out, "  row {} {:<10} {:>7}  {}", r.row, r.kind.to_string(), r.form, vals.join(", "));
    }
    out.push('\n');
    orbit_table(&mut out, &d.third_row_orbits);
    out.push('\n');
    orbit_table(&mut out, &d.adjoint_secant_orbits);
    out.push_str("\nclassical orbit closures\n");
    for c in &d.classical_orbits {
        let _ = writeln!(out, "  {:<8} {:<22} {}", c.group, c.adjoint_variety, c.closures.join(" < "));
    }
    out.push_str("\ntangent splits\n");
    for s in &d.tangent.splits {
        let parts: Vec<_> = s.components.iter().map(|(n, k)| format!("{n}={k}")).collect();
        let expected = s.expected.map(|e| format!(" (chart {e})")).unwrap_or_default();
        let _ = writeln!(out, "  {:<26} {} -> {}{expected}", s.space, parts.join(" + "), s.total);
    }
    out.push_str("\nfolding\n");
    for f in &d.tangent.folding {
        let _ = writeln!(out, "  {:<10} -> {:<10} {} ({}) in {} ({})", f.unfolded, f.folded, f.w, f.dim_w, f.v, f.dim_v);
    }
    out.push_str("\nmagic square\n");
    for row in &d.magic_square {
        let cells: Vec<_> = row.iter().map(|c| format!("{:>9} {:<4}", c.name, c.dim)).collect();
        let _ = writeln!(out, "  {}", cells.join(""));
    }
    out.push_str("\nincidence\n");
    for t in &d.incidence {
        let _ = writeln!(out, "  row {}", t.row);
        for (i, from) in t.from.iter().enumerate() {
            let cells: Vec<_> = t.to.iter().zip(&t.cells[i]).map(|(to, c)| format!("{to}: {c}")).collect();
            let _ = writeln!(out, "    {from}: {}", cells.join("; "));
        }
    }
    let failed = d.checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(out, "\nchecks: {} passed, {failed} failed", d.checks.len() - failed);
    out
}
