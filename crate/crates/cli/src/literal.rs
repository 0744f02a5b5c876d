//! Parsing for the `measure` command's state specifications: the named
//! shortcuts (`plus`, `plus2`, `canonical A=…`, `canonical2 A=… pattern=…`)
//! and inline row-major matrix literals (`;` between rows, `,` between
//! entries, complex entries like `0.5`, `-0.5i`, `0.3+0.2i`).

use imaglab_core::{
    canonical_state, density_from_pure, maximal_imaginary_state, CanonicalPattern, ComplexMatrix,
    DensityOperator, Sign,
};
use num_complex::Complex64;

/// What went wrong while turning a state spec into a density operator.
/// The two variants map onto the CLI's exit codes: malformed text is a
/// usage error, a well-formed matrix that is not a state is a data error.
#[derive(Debug)]
pub enum StateSpecError {
    Parse(String),
    Data(String),
}

/// Parses one complex scalar. Accepted forms: `0.5`, `-2`, `1e-3`,
/// `0.5i`, `-i`, `0.3+0.2i`, `1e-3-2e-4i`. Whitespace is ignored.
pub fn parse_complex(text: &str) -> Result<Complex64, StateSpecError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(StateSpecError::Parse("empty matrix entry".into()));
    }
    let bad = |t: &str| StateSpecError::Parse(format!("cannot parse complex entry `{t}`"));

    if !s.ends_with('i') {
        let re: f64 = s.parse().map_err(|_| bad(text))?;
        return Ok(Complex64::new(re, 0.0));
    }

    let body = &s[..s.len() - 1];
    // Split off a trailing imaginary term at the last '+' or '-' that does
    // not follow an exponent marker and is not the leading sign.
    let mut split = None;
    let chars: Vec<char> = body.chars().collect();
    for k in (1..chars.len()).rev() {
        if (chars[k] == '+' || chars[k] == '-') && chars[k - 1] != 'e' && chars[k - 1] != 'E' {
            split = Some(k);
            break;
        }
    }
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re: f64 = if re_text.is_empty() {
        0.0
    } else {
        re_text.parse().map_err(|_| bad(text))?
    };
    let im: f64 = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse().map_err(|_| bad(text))?,
    };
    Ok(Complex64::new(re, im))
}

/// Parses a row-major matrix literal into a density operator. Shape
/// problems (ragged rows, non-square) are parse errors; a well-formed
/// matrix that fails the density-operator invariants is a data error.
pub fn parse_matrix_literal(text: &str) -> Result<DensityOperator, StateSpecError> {
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for row_text in text.split(';') {
        let row: Vec<Complex64> = row_text
            .split(',')
            .map(parse_complex)
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n < 2 {
        return Err(StateSpecError::Parse(
            "matrix literal needs at least two `;`-separated rows".into(),
        ));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(StateSpecError::Parse(format!(
            "matrix literal must be square; got {n} rows with lengths {:?}",
            rows.iter().map(Vec::len).collect::<Vec<_>>(),
        )));
    }
    let data: Vec<Complex64> = rows.into_iter().flatten().collect();
    let matrix = ComplexMatrix::new(n, n, data)
        .map_err(|e| StateSpecError::Data(format!("invalid matrix: {e}")))?;
    DensityOperator::new(matrix)
        .map_err(|e| StateSpecError::Data(format!("not a density operator: {e}")))
}

fn key_value<'a>(token: &'a str, key: &str) -> Option<&'a str> {
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
}

fn parse_canonical(tokens: &[&str], two_qubits: bool) -> Result<DensityOperator, StateSpecError> {
    let mut a: Option<f64> = None;
    let mut pattern = if two_qubits {
        CanonicalPattern::TwoQubit00_11
    } else {
        CanonicalPattern::Qubit01
    };
    for token in tokens {
        if let Some(v) = key_value(token, "A") {
            let parsed: f64 = v
                .parse()
                .map_err(|_| StateSpecError::Parse(format!("cannot parse A value `{v}`")))?;
            a = Some(parsed);
        } else if let Some(v) = key_value(token, "pattern") {
            if !two_qubits {
                return Err(StateSpecError::Parse(
                    "pattern= applies only to canonical2".into(),
                ));
            }
            pattern = match v {
                "00_11" => CanonicalPattern::TwoQubit00_11,
                "01_10" => CanonicalPattern::TwoQubit01_10,
                other => {
                    return Err(StateSpecError::Parse(format!(
                        "unknown pattern `{other}` (expected 00_11 or 01_10)",
                    )))
                }
            };
        } else {
            return Err(StateSpecError::Parse(format!(
                "unexpected token `{token}` in canonical state spec",
            )));
        }
    }
    let a =
        a.ok_or_else(|| StateSpecError::Parse("canonical state spec needs A=<value>".into()))?;
    let psi = canonical_state(a, pattern)
        .map_err(|e| StateSpecError::Data(format!("invalid canonical parameter: {e}")))?;
    Ok(density_from_pure(&psi))
}

/// Turns a full state spec (tokens already joined with single spaces) into
/// a density operator.
pub fn parse_state_spec(spec: &str) -> Result<DensityOperator, StateSpecError> {
    let tokens: Vec<&str> = spec.split_whitespace().collect();
    match tokens.as_slice() {
        ["plus"] => Ok(maximal_imaginary_state(1, Sign::Plus)
            .expect("the single-qubit maximal state is well-formed")),
        ["plus2"] => Ok(maximal_imaginary_state(2, Sign::Plus)
            .expect("the two-qubit maximal state is well-formed")),
        ["canonical", rest @ ..] if !rest.is_empty() => parse_canonical(rest, false),
        ["canonical2", rest @ ..] if !rest.is_empty() => parse_canonical(rest, true),
        _ if spec.contains(';') => parse_matrix_literal(spec),
        _ => Err(StateSpecError::Parse(format!(
            "unrecognized state spec `{spec}` (expected plus, plus2, canonical A=<v>, \
             canonical2 A=<v> pattern=<00_11|01_10>, or a `;`-row matrix literal)",
        ))),
    }
}
