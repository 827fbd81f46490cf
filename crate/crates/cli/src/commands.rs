//! One function per subcommand.

use std::fmt::Write as _;

use serde_json::{json, Value};

use skeinlab::arc_products::{product_table, ProductRow};
use skeinlab::chebyshev::{cheb_s, cheb_t, cheb_tbar, change_of_basis, seq_u, Family, NormalizedSequence};
use skeinlab::positivity_audit::{audit_r1_rn, d_closed_form};
use skeinlab::twist_models::annulus::{
    beta_mul_snsm_alpha, beta_mul_snsm_alpha_recurrence, beta_mul_tbar, beta_mul_tbar_recurrence,
    beta_mul_tn_p, beta_mul_tn_p_recurrence,
};
use skeinlab::twist_models::disk::{tbar_mul_z, z_mul_tbar_closed, z_mul_tbar_rewrite};
use skeinlab::twist_models::transparency::transparency_report_with_modulus;

use crate::inputs::{parse_laurent, parse_laurent_list};
use crate::suite::{self, Check};
use crate::{AnnulusOp, ChebKind, Command, Computed, DiskOp, Status, UsageError};

pub(crate) fn dispatch(cmd: &Command, cap: Option<usize>) -> Result<Computed, UsageError> {
    let clamp = |max: usize| cap.map_or(max, |c| max.min(c));
    let within = |flag: &str, value: u64| match cap {
        Some(c) if value > c as u64 => Err(UsageError::new(
            flag,
            format!("{value} exceeds {}={c}", crate::MAX_DEGREE_ENV),
        )),
        _ => Ok(()),
    };
    match *cmd {
        Command::Cheb { kind, n } => {
            within("--n", n.unsigned_abs())?;
            cheb(kind, n)
        }
        Command::Identities { max } => Ok(from_check(suite::identities(clamp(max)))),
        Command::Basis { from, to, max } => Ok(basis(from, to, clamp(max))),
        Command::Dominates { a, b, max } => Ok(dominates(a, b, clamp(max))),
        Command::Products { max, ref csv } => products(clamp(max), csv.as_deref()),
        Command::Annulus { op, n } => {
            within("--n", n as u64)?;
            annulus(op, n)
        }
        Command::Disk { op, n } => {
            within("--n", n as u64)?;
            Ok(disk(op, n))
        }
        Command::Audit { ref a, ref c } => {
            let a = parse_laurent(a).map_err(|e| UsageError::new("--a", e))?;
            let c = parse_laurent_list(c).map_err(|e| UsageError::new("--c", e))?;
            within("--c", (c.len() - 1) as u64)?;
            Ok(audit(a, c))
        }
        Command::Transparency { order, modulus } => {
            if order == 0 {
                return Err(UsageError::new("--order", "must be at least 1"));
            }
            within("--order", order)?;
            if modulus == Some(0) {
                return Err(UsageError::new("--modulus", "must be at least 1"));
            }
            Ok(transparency(order, modulus.unwrap_or(4 * order)))
        }
        Command::VerifyAll { max } => Ok(verify_all(clamp(max))),
    }
}

fn computed(status: Status, payload: Value, human: String) -> Computed {
    Computed {
        status,
        payload,
        human,
        csv_stdout: None,
    }
}

fn from_check(check: Check) -> Computed {
    let human = render_check(&check);
    computed(Status::from_pass(check.passed), check.detail, human)
}

fn render_check(check: &Check) -> String {
    let mut s = format!("[{}] {}", if check.passed { "pass" } else { "FAIL" }, check.name);
    if let Some(cx) = check.counterexample() {
        let _ = write!(s, "\n    counterexample: {cx}");
    }
    s
}

fn cheb(kind: ChebKind, n: i64) -> Result<Computed, UsageError> {
    let nonneg = || {
        usize::try_from(n).map_err(|_| UsageError::new("--n", format!("{n} is negative")))
    };
    let (name, poly) = match kind {
        ChebKind::T => ("T", cheb_t(nonneg()?)),
        ChebKind::S => ("S", cheb_s(n).map_err(|e| UsageError::new("--n", e.to_string()))?),
        ChebKind::Tbar => ("Tbar", cheb_tbar(nonneg()?)),
        ChebKind::U => ("U", seq_u(nonneg()?)),
    };
    let human = format!("{name}_{n}(x) = {poly}");
    Ok(computed(
        Status::Value,
        json!({"kind": name, "n": n, "poly": poly}),
        human,
    ))
}

fn basis(from: Family, to: Family, max: usize) -> Computed {
    let m = change_of_basis(&NormalizedSequence::family(from), &NormalizedSequence::family(to), max)
        .expect("named families are normalized");
    let mut human = String::new();
    for (n, row) in m.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c}")).collect();
        let _ = writeln!(human, "{}_{n} = [{}] in {}", from.name(), cells.join(", "), to.name());
    }
    computed(
        Status::Value,
        json!({"from": from.name(), "to": to.name(), "max": max, "matrix": m.rows()}),
        human,
    )
}

fn dominates(a: Family, b: Family, max: usize) -> Computed {
    let cx = suite::dominance_counterexample(a, b, max);
    let passed = cx.is_none();
    let human = match &cx {
        None => format!("({}) dominates ({}) up to degree {max}", a.name(), b.name()),
        Some(c) => format!("({}) does not dominate ({}): {c}", a.name(), b.name()),
    };
    let mut payload = json!({"a": a.name(), "b": b.name(), "max": max, "dominates": passed});
    if let Some(c) = cx {
        payload["counterexample"] = c;
    }
    computed(Status::from_pass(passed), payload, human)
}

fn csv_text(rows: &[ProductRow]) -> Result<String, UsageError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| UsageError::new("--csv", e.to_string());
    w.write_record(["m", "n", "k", "coefficient"]).map_err(io)?;
    for r in rows {
        let coeff = serde_json::to_string(&r.coefficient).expect("serializable");
        w.write_record([r.m.to_string(), r.n.to_string(), r.k.to_string(), coeff])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| UsageError::new("--csv", e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn products(max: usize, csv_path: Option<&str>) -> Result<Computed, UsageError> {
    let rows = product_table(max).expect("indices in range");
    let constants = suite::structure_constants(max);
    let odd = suite::odd_odd_display(max.saturating_sub(1) / 2);
    let passed = constants.passed && odd.passed;
    let mut payload = json!({
        "max": max,
        "checks": [&constants, &odd],
        "rows": rows,
    });
    if let Some(cx) = [&constants, &odd].iter().find_map(|c| c.counterexample()) {
        payload["counterexample"] = cx.clone();
    }
    let human = format!(
        "{} nonzero structure constants for m, n <= {max}\n{}\n{}",
        rows.len(),
        render_check(&constants),
        render_check(&odd)
    );
    let mut out = computed(Status::from_pass(passed), payload, human);
    match csv_path {
        None => {}
        Some("-") => out.csv_stdout = Some(csv_text(&rows)?),
        Some(path) => {
            std::fs::write(path, csv_text(&rows)?)
                .map_err(|e| UsageError::new("--csv", format!("{path}: {e}")))?;
            out.payload["csv_path"] = path.into();
        }
    }
    Ok(out)
}

fn annulus(op: AnnulusOp, n: usize) -> Result<Computed, UsageError> {
    if n == 0 {
        return Err(UsageError::new("--n", "must be at least 1"));
    }
    let (name, closed, rec) = match op {
        AnnulusOp::Tn => ("Tn", beta_mul_tn_p(n), beta_mul_tn_p_recurrence(n)),
        AnnulusOp::SnSm => ("SnSm", beta_mul_snsm_alpha(n), beta_mul_snsm_alpha_recurrence(n)),
        AnnulusOp::Tbar => ("Tbar", beta_mul_tbar(n), beta_mul_tbar_recurrence(n)),
    };
    let closed = closed.expect("n ≥ 1");
    let rec = rec.expect("n ≥ 1");
    let agrees = closed == rec;
    let mut payload = json!({"op": name, "n": n, "element": closed, "recurrence_agrees": agrees});
    let status = if agrees {
        Status::Value
    } else {
        payload["counterexample"] = json!({"n": n, "lhs": closed, "rhs": rec});
        Status::Fail
    };
    Ok(computed(status, payload, format!("{name}, n = {n}: {closed}")))
}

fn disk(op: DiskOp, n: usize) -> Computed {
    let (name, element) = match op {
        DiskOp::Closed => ("closed", z_mul_tbar_closed(n)),
        DiskOp::Rewrite => ("rewrite", z_mul_tbar_rewrite(n)),
        DiskOp::Right => ("right", tbar_mul_z(n)),
    };
    let human = format!("{name}, n = {n}: {element}");
    let mut payload = json!({"op": name, "n": n, "element": element, "symmetric": element.is_symmetric()});
    let mut status = Status::Value;
    if op == DiskOp::Closed {
        let rewrite = z_mul_tbar_rewrite(n);
        let agrees = rewrite == element;
        payload["matches_rewrite"] = agrees.into();
        if !agrees {
            payload["counterexample"] = json!({"n": n, "lhs": element, "rhs": rewrite});
            status = Status::Fail;
        }
    }
    computed(status, payload, human)
}

fn audit(a: skeinlab::LaurentPoly, c: Vec<skeinlab::LaurentPoly>) -> Computed {
    let report = audit_r1_rn(&a, &c);
    let closed = d_closed_form(&a, &c);
    let mut payload = serde_json::to_value(&report).expect("serializable");
    let mut human = format!("terms: {}\nd = {}", report.terms, report.d);
    let status = if closed == report.d {
        Status::Value
    } else {
        payload["counterexample"] = json!({"lhs": report.d, "rhs": closed});
        let _ = write!(human, "\nclosed form disagrees: {closed}");
        Status::Fail
    };
    computed(status, payload, human)
}

fn transparency(order: u64, modulus: u64) -> Computed {
    let r = transparency_report_with_modulus(order, modulus).expect("validated arguments");
    let mut payload = serde_json::to_value(&r).expect("serializable");
    let human = format!(
        "order {order}, v^{modulus} = 1: z {}, beta' {}\n  [z, Tbar_N] = {}\n  [beta', Tbar_N] = {}",
        if r.z_commutes { "commutes" } else { "does not commute" },
        if r.beta_commutes { "commutes" } else { "does not commute" },
        r.z_commutator,
        r.beta_commutator,
    );
    if !r.passed {
        payload["counterexample"] = suite::transparency_counterexample(order, modulus);
    }
    computed(Status::from_pass(r.passed), payload, human)
}

fn verify_all(max: usize) -> Computed {
    let checks = suite::run_suite(max);
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let human = checks.iter().map(render_check).collect::<Vec<_>>().join("\n");
    let mut payload = json!({
        "max": max,
        "passed": checks.len() - failed.len(),
        "failed": failed.len(),
        "checks": checks,
    });
    if let Some(first) = failed.first() {
        payload["counterexample"] = json!({"check": first.name, "detail": first.counterexample()});
    }
    computed(Status::from_pass(failed.is_empty()), payload, human)
}
