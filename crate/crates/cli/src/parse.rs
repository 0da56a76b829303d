//! Matrix CSV ingestion: one row per line, comma-separated entries,
//! `#` comment lines ignored. Entries are complex literals: `a`, `a+bi`,
//! `a-bi`, `bi`, or a bare `i` (meaning `1i`), with optional whitespace.

use num_complex::Complex64;

use hankel1::DenseMatrix;

/// Parses one complex literal.
pub fn parse_complex(raw: &str) -> Result<Complex64, String> {
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty entry".to_string());
    }
    if !s.ends_with('i') && !s.ends_with('I') {
        return s
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| format!("invalid real literal `{raw}`"));
    }

    let body = &s[..s.len() - 1];
    // Split `a±bi` at the last sign that is not an exponent sign and not
    // the leading sign.
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        let c = bytes[k] as char;
        if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
            split = Some(k);
            break;
        }
    }
    match split {
        Some(k) => {
            let re: f64 = body[..k]
                .parse()
                .map_err(|_| format!("invalid complex literal `{raw}`"))?;
            let im = parse_imag_coeff(&body[k..], raw)?;
            Ok(Complex64::new(re, im))
        }
        None => Ok(Complex64::new(0.0, parse_imag_coeff(body, raw)?)),
    }
}

/// Parses the coefficient in front of `i`; empty or a bare sign means ±1.
fn parse_imag_coeff(body: &str, raw: &str) -> Result<f64, String> {
    match body {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        other => other
            .parse()
            .map_err(|_| format!("invalid complex literal `{raw}`")),
    }
}

/// Parses a whole matrix from CSV text.
pub fn parse_matrix(text: &str) -> Result<DenseMatrix, String> {
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(parse_complex)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err("no matrix rows found".to_string());
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err("rows have inconsistent lengths".to_string());
    }
    let entries: Vec<Complex64> = rows.into_iter().flatten().collect();
    Ok(DenseMatrix::from_entries(entries.len() / cols, cols, entries))
}

/// Formats one entry the way `parse_complex` reads it back.
pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else if c.im < 0.0 {
        format!("{}{}i", c.re, c.im)
    } else {
        format!("{}+{}i", c.re, c.im)
    }
}

/// Renders a matrix as CSV, round-trippable through `parse_matrix`.
pub fn format_matrix(a: &DenseMatrix) -> String {
    let mut out = String::new();
    for i in 0..a.rows() {
        let row: Vec<String> = (0..a.cols()).map(|j| format_complex(a.get(i, j))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
