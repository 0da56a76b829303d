//! Report assembly: each solver contributes a block rendered both as a
//! JSON value and as 6-decimal text. Every error figure is recomputed here
//! from the materialized approximant rather than copied out of the solver.

use num_complex::Complex64;
use serde_json::{json, Value};

use hankel1::{
    build_rank1, eig_symmetric, spectral_norm, svd, svd_coincidence_certificate, CadzowTerminal,
    CadzowTrace, DenseMatrix, ExtendedScalar, FrobeniusSolution, Rank1HankelParams, SearchMode,
    SpectralCase, SpectralSolution,
};

/// One solver's contribution, in both output formats.
pub struct Block {
    pub json: Value,
    pub text: String,
}

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

fn fmt_complex(c: Complex64) -> String {
    if c.im.abs() < 5e-7 {
        f6(c.re)
    } else if c.im < 0.0 {
        format!("{}{}i", f6(c.re), f6(c.im))
    } else {
        format!("{}+{}i", f6(c.re), f6(c.im))
    }
}

fn fmt_z(z: ExtendedScalar) -> String {
    match z {
        ExtendedScalar::Infinity => "inf".to_string(),
        ExtendedScalar::Finite(v) => fmt_complex(v),
    }
}

fn json_complex(c: Complex64) -> Value {
    json!({ "re": c.re, "im": c.im })
}

fn json_z(z: ExtendedScalar) -> Value {
    match z {
        ExtendedScalar::Infinity => Value::String("inf".to_string()),
        ExtendedScalar::Finite(v) => json_complex(v),
    }
}

fn json_params(p: &Rank1HankelParams) -> Value {
    json!({ "c": json_complex(p.c), "z": json_z(p.z) })
}

/// Errors of an approximant against the input, recomputed from scratch.
fn recomputed_errors(a: &DenseMatrix, approx: &DenseMatrix) -> (f64, f64) {
    let diff = a.sub(approx);
    (diff.norm_fro(), spectral_norm(&diff))
}

/// Input summary block: dimensions, norms, and top spectral data.
pub fn input_summary(a: &DenseMatrix) -> Block {
    let s = svd(a).ok();
    let sigma: Vec<f64> = s.map(|s| s.sigma).unwrap_or_default();
    let symmetric = a.rows() == a.cols() && a.is_real(0.0) && a.max_asymmetry() <= 1e-12;
    let eigenvalues: Option<Vec<f64>> = if symmetric {
        eig_symmetric(a, 1e-13).ok().map(|e| e.eigenvalues)
    } else {
        None
    };
    let json = json!({
        "rows": a.rows(),
        "cols": a.cols(),
        "norm_frobenius": a.norm_fro(),
        "norm_spectral": sigma.first().copied().unwrap_or(0.0),
        "singular_values": sigma,
        "eigenvalues": eigenvalues,
    });
    let mut text = format!(
        "input: {}x{}, norm_F = {}, norm_2 = {}\n",
        a.rows(),
        a.cols(),
        f6(a.norm_fro()),
        f6(sigma.first().copied().unwrap_or(0.0)),
    );
    if let Some(eigs) = json["eigenvalues"].as_array() {
        let list: Vec<String> = eigs.iter().map(|e| f6(e.as_f64().unwrap())).collect();
        text.push_str(&format!("  eigenvalues: {}\n", list.join(", ")));
    }
    Block { json, text }
}

/// Frobenius solver block (real or complex search).
pub fn frobenius_block(a: &DenseMatrix, sol: &FrobeniusSolution) -> Block {
    let name = match sol.mode {
        SearchMode::RealSearch => "frobenius_real",
        SearchMode::ComplexSearch => "frobenius_complex",
    };
    let h = build_rank1(&sol.params);
    let (err_f, err_2) = recomputed_errors(a, &h);
    let coincident = svd_coincidence_certificate(a, sol, 1e-8);
    let candidates: Vec<Value> = sol.candidates.iter().map(json_params).collect();
    let json = json!({
        "name": name,
        "params": json_params(&sol.params),
        "objective": sol.objective,
        "error_frobenius": err_f,
        "error_spectral": err_2,
        "svd_coincident": coincident,
        "candidates": candidates,
    });
    let mut text = format!(
        "solver {name}:\n  z = {}, c = {}\n  error_F = {}, error_2 = {}\n  svd_coincident = {}\n",
        fmt_z(sol.params.z),
        fmt_complex(sol.params.c),
        f6(err_f),
        f6(err_2),
        coincident,
    );
    if sol.candidates.len() > 1 {
        let list: Vec<String> = sol.candidates.iter().map(|p| fmt_z(p.z)).collect();
        text.push_str(&format!("  tied generators: {}\n", list.join(", ")));
    }
    Block { json, text }
}

fn case_name(case: SpectralCase) -> &'static str {
    match case {
        SpectralCase::AchievedLambda1 => "achieved_lambda1",
        SpectralCase::Bisection => "bisection",
        SpectralCase::DegenerateSameSign => "degenerate_same_sign",
        SpectralCase::DegenerateOppositeSign => "degenerate_opposite_sign",
    }
}

/// Spectral solver block.
pub fn spectral_block(a: &DenseMatrix, sol: &SpectralSolution) -> Block {
    let errors = sol
        .params
        .as_ref()
        .map(|p| recomputed_errors(a, &build_rank1(p)));
    let json = json!({
        "name": "spectral",
        "case": case_name(sol.case),
        "lambda_tilde": sol.lambda_tilde,
        "params": sol.params.as_ref().map(json_params),
        "c_interval": sol.c_interval.map(|(lo, hi)| json!([lo, hi])),
        "bisection_iterations": sol.bisection_iterations,
        "error_frobenius": errors.map(|e| e.0),
        "error_spectral": errors.map(|e| e.1),
    });
    let mut text = format!(
        "solver spectral:\n  case = {}, lambda = {}\n",
        case_name(sol.case),
        f6(sol.lambda_tilde),
    );
    match &sol.params {
        Some(p) => {
            let (err_f, err_2) = errors.unwrap();
            text.push_str(&format!(
                "  z = {}, c = {}\n  error_F = {}, error_2 = {}\n",
                fmt_z(p.z),
                fmt_complex(p.c),
                f6(err_f),
                f6(err_2),
            ));
        }
        None => text.push_str("  no rank-1 Hankel matrix attains the optimal error\n"),
    }
    if let Some((lo, hi)) = sol.c_interval {
        text.push_str(&format!("  admissible c interval: ({}, {}]\n", f6(lo), f6(hi)));
    }
    Block { json, text }
}

fn terminal_name(t: CadzowTerminal) -> &'static str {
    match t {
        CadzowTerminal::ZeroLimit => "zero_limit",
        CadzowTerminal::Rank1HankelFixedPoint => "rank1_hankel_fixed_point",
        CadzowTerminal::MaxIterations => "max_iterations",
    }
}

/// Cadzow baseline block; the full σ trace is attached only on request.
pub fn cadzow_block(a: &DenseMatrix, trace: &CadzowTrace, with_trace: bool) -> Block {
    let (err_f, err_2) = recomputed_errors(a, &trace.final_matrix);
    let json = json!({
        "name": "cadzow",
        "terminal": terminal_name(trace.terminal),
        "iterations": trace.iterations,
        "params": trace.final_params.as_ref().map(json_params),
        "error_frobenius": err_f,
        "error_spectral": err_2,
        "sigma_first": trace.sigmas.first().copied(),
        "sigma_last": trace.sigmas.last().copied(),
        "sigmas": if with_trace { Some(&trace.sigmas) } else { None },
        "iterate_deltas": if with_trace { Some(&trace.iterate_deltas) } else { None },
    });
    let mut text = format!(
        "solver cadzow:\n  terminal = {}, iterations = {}\n  error_F = {}, error_2 = {}\n",
        terminal_name(trace.terminal),
        trace.iterations,
        f6(err_f),
        f6(err_2),
    );
    if let Some(p) = &trace.final_params {
        text.push_str(&format!(
            "  z = {}, c = {}\n",
            fmt_z(p.z),
            fmt_complex(p.c)
        ));
    }
    if with_trace {
        let list: Vec<String> = trace.sigmas.iter().map(|s| f6(*s)).collect();
        text.push_str(&format!("  sigmas: {}\n", list.join(", ")));
    }
    Block { json, text }
}

/// A plain notice block (e.g. a skipped solver).
pub fn notice_block(name: &str, message: &str) -> Block {
    Block {
        json: json!({ "name": name, "notice": message }),
        text: format!("solver {name}: {message}\n"),
    }
}

/// Matrix payload block (`project` output).
pub fn matrix_block(name: &str, m: &DenseMatrix, csv: String) -> Block {
    let rows: Vec<Vec<Value>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| json_complex(m.get(i, j))).collect())
        .collect();
    Block {
        json: json!({ "name": name, "matrix": rows }),
        text: csv,
    }
}

/// Assembles the final report and renders it in the chosen format.
pub fn render(
    input: Option<&DenseMatrix>,
    blocks: &[Block],
    error: Option<(&str, &str)>,
    timing_ms: f64,
    json_output: bool,
) -> String {
    let input_block = input.map(input_summary);
    let solvers: Vec<&Value> = blocks.iter().map(|b| &b.json).collect();
    if json_output {
        let mut top = json!({
            "input": input_block.as_ref().map(|b| b.json.clone()),
            "solvers": solvers,
            "timing_ms": timing_ms,
            "version": env!("CARGO_PKG_VERSION"),
        });
        if let Some((kind, message)) = error {
            top["error"] = json!({ "kind": kind, "message": message });
        }
        format!("{}\n", serde_json::to_string_pretty(&top).unwrap())
    } else {
        let mut out = String::new();
        if let Some(b) = &input_block {
            out.push_str(&b.text);
        }
        for b in blocks {
            out.push_str(&b.text);
        }
        if let Some((kind, message)) = error {
            out.push_str(&format!("error ({kind}): {message}\n"));
        }
        out.push_str(&format!("timing: {timing_ms:.1} ms\n"));
        out
    }
}
