//! Real polynomial root finding by Sturm-sequence bracketing with
//! bisection and Newton polishing.
//!
//! Polynomials are coefficient slices in ascending order:
//! `coeffs[k]` multiplies `x^k`.

use crate::error::{Error, Result};

/// Real roots accepted under an explicit residual criterion.
#[derive(Debug, Clone)]
pub struct RootSet {
    /// Accepted roots in increasing order; multiple roots reported once.
    pub roots: Vec<f64>,
    /// Residual bound used for acceptance: each root `r` satisfies
    /// `|p(r)| ≤ residual_bound · max|coeff| · max(1, |r|)^deg`.
    pub residual_bound: f64,
}

/// Evaluates a polynomial (ascending coefficients) by Horner's rule.
pub(crate) fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Derivative of a polynomial in ascending coefficients.
pub(crate) fn poly_deriv(coeffs: &[f64]) -> Vec<f64> {
    if coeffs.len() <= 1 {
        return vec![0.0];
    }
    coeffs[1..]
        .iter()
        .enumerate()
        .map(|(k, &c)| (k as f64 + 1.0) * c)
        .collect()
}

/// Product of two polynomials in ascending coefficients.
pub(crate) fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Difference `a - b` of two polynomials in ascending coefficients.
pub(crate) fn poly_sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| a.get(k).copied().unwrap_or(0.0) - b.get(k).copied().unwrap_or(0.0))
        .collect()
}

/// Scales a polynomial by a constant.
pub(crate) fn poly_scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|&c| c * s).collect()
}

/// Trims trailing coefficients that are negligible relative to the largest.
fn trim(coeffs: &[f64]) -> Vec<f64> {
    let maxabs = coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max);
    if maxabs == 0.0 {
        return vec![];
    }
    let cut = 1e-13 * maxabs;
    let mut end = coeffs.len();
    while end > 0 && coeffs[end - 1].abs() <= cut {
        end -= 1;
    }
    coeffs[..end].to_vec()
}

/// Builds the Sturm chain of `p`, normalizing each member to unit max
/// coefficient for numerical stability.
fn sturm_chain(p: &[f64]) -> Vec<Vec<f64>> {
    let normalize = |q: Vec<f64>| -> Vec<f64> {
        let m = q.iter().map(|c| c.abs()).fold(0.0, f64::max);
        if m == 0.0 {
            q
        } else {
            q.iter().map(|&c| c / m).collect()
        }
    };
    let mut chain = vec![normalize(p.to_vec())];
    let d = trim(&poly_deriv(p));
    if d.is_empty() {
        return chain;
    }
    chain.push(normalize(d));
    loop {
        let a = chain[chain.len() - 2].clone();
        let b = chain[chain.len() - 1].clone();
        if b.len() <= 1 {
            break;
        }
        let r = poly_rem(&a, &b);
        let r = trim(&r);
        if r.is_empty() {
            break;
        }
        chain.push(normalize(poly_scale(&r, -1.0)));
    }
    chain
}

/// Remainder of polynomial division `a mod b` (ascending coefficients).
fn poly_rem(a: &[f64], b: &[f64]) -> Vec<f64> {
    let db = b.len() - 1;
    let lead = b[db];
    let mut r = a.to_vec();
    while r.len() > db && r.len() > 1 {
        let dr = r.len() - 1;
        let factor = r[dr] / lead;
        for k in 0..=db {
            r[dr - db + k] -= factor * b[k];
        }
        r.pop();
    }
    r
}

/// Number of sign changes in the Sturm chain at `x` (zeros skipped).
fn sign_changes(chain: &[Vec<f64>], x: f64) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for q in chain {
        let v = poly_eval(q, x);
        let s = if v > 0.0 {
            1i8
        } else if v < 0.0 {
            -1i8
        } else {
            0i8
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Finds the distinct real roots of a polynomial, optionally restricted to a
/// closed interval.
///
/// Every accepted root `r` is polished (Sturm bisection followed by Newton
/// steps) until `|p(r)| ≤ 1e-12 · max|coeff| · max(1, |r|)^deg`.
pub fn real_roots(coeffs: &[f64], interval: Option<(f64, f64)>) -> Result<RootSet> {
    let p = trim(coeffs);
    if p.is_empty() {
        return Err(Error::DegenerateZeroPolynomial);
    }
    let residual_bound = 1e-12;
    if p.len() == 1 {
        // Nonzero constant: no roots.
        return Ok(RootSet {
            roots: vec![],
            residual_bound,
        });
    }

    let deg = p.len() - 1;
    let maxabs = p.iter().map(|c| c.abs()).fold(0.0, f64::max);

    // Cauchy bound on root moduli, padded so endpoints are strictly outside.
    let lead = p[deg].abs();
    let cauchy = 1.0 + p[..deg].iter().map(|c| c.abs()).fold(0.0, f64::max) / lead;
    let (mut lo, mut hi) = (-cauchy * (1.0 + 1e-9) - 1e-9, cauchy * (1.0 + 1e-9) + 1e-9);
    if let Some((a, b)) = interval {
        lo = lo.max(a - 1e-12 * (1.0 + a.abs()));
        hi = hi.min(b + 1e-12 * (1.0 + b.abs()));
    }
    if lo >= hi {
        return Ok(RootSet {
            roots: vec![],
            residual_bound,
        });
    }

    let chain = sturm_chain(&p);
    let count = |a: f64, b: f64| -> usize {
        sign_changes(&chain, a).saturating_sub(sign_changes(&chain, b))
    };

    // Isolate intervals containing exactly one distinct root.
    let mut stack = vec![(lo, hi)];
    let mut brackets: Vec<(f64, f64)> = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let c = count(a, b);
        if c == 0 {
            continue;
        }
        let width = b - a;
        if c == 1 || width <= 1e-13 * (1.0 + a.abs().max(b.abs())) {
            brackets.push((a, b));
            continue;
        }
        let mid = 0.5 * (a + b);
        stack.push((a, mid));
        stack.push((mid, b));
    }
    brackets.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

    let dp = poly_deriv(&p);
    let mut roots = Vec::new();
    for (mut a, mut b) in brackets {
        // Sturm-count bisection: robust even without a sign change of p.
        for _ in 0..200 {
            if b - a <= 1e-14 * (1.0 + a.abs().max(b.abs())) {
                break;
            }
            let mid = 0.5 * (a + b);
            if count(a, mid) >= 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        let mut r = 0.5 * (a + b);
        // Newton polish.
        for _ in 0..8 {
            let f = poly_eval(&p, r);
            let d = poly_eval(&dp, r);
            if d == 0.0 {
                break;
            }
            let step = f / d;
            let next = r - step;
            if !next.is_finite() || (next - r).abs() > (b - a).max(1e-8 * (1.0 + r.abs())) {
                break;
            }
            r = next;
            if step.abs() <= 1e-16 * (1.0 + r.abs()) {
                break;
            }
        }
        let tol_res = residual_bound * maxabs * (1.0f64.max(r.abs())).powi(deg as i32);
        if poly_eval(&p, r).abs() <= tol_res {
            roots.push(r);
        }
    }

    // Deduplicate near-identical roots and enforce the requested interval.
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut unique: Vec<f64> = Vec::new();
    for r in roots {
        if let Some(&last) = unique.last() {
            if (r - last).abs() <= 1e-10 * (1.0 + r.abs()) {
                continue;
            }
        }
        unique.push(r);
    }
    if let Some((a, b)) = interval {
        let pad_a = 1e-9 * (1.0 + a.abs());
        let pad_b = 1e-9 * (1.0 + b.abs());
        unique.retain(|&r| r >= a - pad_a && r <= b + pad_b);
    }
    Ok(RootSet {
        roots: unique,
        residual_bound,
    })
}
