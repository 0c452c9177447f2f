//! Text and CSV rendering of library results.
//!
//! All output is deterministic: the exact column is the `p/q` form and the
//! decimal column is a fixed 17-significant-digit rendering, so identical
//! configs produce byte-identical files.

use std::io::{self, Write};

use rdeq::analysis::{
    Classification, EquilibriumValue, PeriodReport, RootSet, StabilityReport,
};
use rdeq::closed_form::ComparisonReport;
use rdeq::invariants::SymmetryCertificate;
use rdeq::{decimal, Orbit, OrbitStatus};

const DECIMAL_DIGITS: usize = 17;

/// `n,exact,decimal` rows; a truncated orbit ends with a comment row naming
/// the forbidden index.
pub fn write_orbit_csv<W: Write>(mut w: W, orbit: &Orbit) -> io::Result<()> {
    writeln!(w, "n,exact,decimal")?;
    for (n, term) in orbit.terms().iter().enumerate() {
        writeln!(w, "{n},{term},{}", decimal(term, DECIMAL_DIGITS))?;
    }
    if let OrbitStatus::ForbiddenAt(n) = orbit.status() {
        writeln!(w, "# forbidden at n={n}")?;
    }
    Ok(())
}

/// One line per compared index, then a verdict line.
pub fn write_compare_report<W: Write>(mut w: W, report: &ComparisonReport) -> io::Result<()> {
    let mut mismatch_at = report.mismatches.iter().peekable();
    let compared = report_compared_len(report);
    for index in 0..compared {
        match mismatch_at.peek() {
            Some(m) if m.index == index => {
                let m = mismatch_at.next().unwrap();
                let closed = m
                    .closed_form
                    .as_ref()
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "<error>".to_string());
                writeln!(
                    w,
                    "n={index} evaluator={} MISMATCH closed-form={closed} oracle={}",
                    report.evaluator, m.oracle
                )?;
            }
            _ => writeln!(w, "n={index} evaluator={} ok", report.evaluator)?,
        }
    }
    if let OrbitStatus::ForbiddenAt(n) = report.oracle_status {
        writeln!(w, "# oracle forbidden at n={n}; comparison stopped there")?;
    }
    if report.is_clean() {
        writeln!(w, "agreement: exact at all {compared} compared indices")?;
    } else {
        let first = report.mismatches[0].index;
        writeln!(
            w,
            "DISAGREEMENT: {} mismatches, first at n={first}",
            report.mismatches.len()
        )?;
    }
    Ok(())
}

fn report_compared_len(report: &ComparisonReport) -> usize {
    match report.oracle_status {
        OrbitStatus::Complete => report.horizon + 1,
        OrbitStatus::ForbiddenAt(n) => n,
    }
}

fn equilibrium_text(value: &EquilibriumValue) -> String {
    match value {
        EquilibriumValue::Rational(q) => format!("u = {q}"),
        EquilibriumValue::Root {
            radicand,
            degree,
            negative,
            approx,
        } => {
            let sign = if *negative { "-" } else { "" };
            format!("u = {sign}({radicand})^(1/{degree}) ≈ {approx:.12}")
        }
    }
}

fn roots_text(roots: &RootSet) -> String {
    if roots.is_empty() {
        return "no root data".to_string();
    }
    let mut moduli = roots.moduli.clone();
    moduli.sort_by(f64::total_cmp);
    moduli.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    let rendered: Vec<String> = moduli.iter().map(|m| format!("{m:.12}")).collect();
    format!(
        "{} roots with moduli {{{}}}",
        roots.len(),
        rendered.join(", ")
    )
}

/// Stability section of the analyze report.
pub fn write_stability<W: Write>(mut w: W, report: &StabilityReport) -> io::Result<()> {
    writeln!(w, "equilibria:")?;
    for eq in &report.equilibria {
        let label = match eq.classification {
            Classification::Unclassified => {
                "unclassified (boundary case: every root on the unit circle)".to_string()
            }
            other => other.to_string(),
        };
        writeln!(
            w,
            "  {}: {label}; {}",
            equilibrium_text(&eq.equilibrium.value),
            roots_text(&eq.roots)
        )?;
    }
    if report.equilibria.len() == 1 {
        if let Some(roots) = &report.nonzero_char_roots {
            writeln!(
                w,
                "no real nonzero equilibrium; its characteristic polynomial still has {}",
                roots_text(roots)
            )?;
        }
    }
    Ok(())
}

/// Period section of the analyze report.
pub fn write_period<W: Write>(mut w: W, report: &PeriodReport) -> io::Result<()> {
    match report.predicted {
        Some(p) => writeln!(w, "predicted period: {} ({})", p.period, p.rule)?,
        None => writeln!(w, "predicted period: none")?,
    }
    match report.detected {
        Some(p) => writeln!(w, "detected period: {p} (horizon {})", report.horizon)?,
        None => writeln!(w, "detected period: none (horizon {})", report.horizon)?,
    }
    Ok(())
}

/// Exponent table of a symmetry certificate.
pub fn write_symmetry<W: Write>(mut w: W, cert: &SymmetryCertificate) -> io::Result<()> {
    writeln!(
        w,
        "order parameter k={}: {} generator exponents",
        cert.k,
        cert.exponents.len()
    )?;
    writeln!(w, "exponent,exact,residual")?;
    for check in &cert.checks {
        writeln!(
            w,
            "{},{},{:e}",
            check.exponent,
            if check.exact { "pass" } else { "FAIL" },
            check.residual
        )?;
    }
    Ok(())
}
