//! Numbers, pairs and grid specifications as they appear on the command line.
//!
//! Numbers accept `pi` as a factor, so `pi/2`, `-pi/3` and `2*pi` are valid.
//! Grids are `lin:a,b,n`, `log:a,b,n` or a plain comma-separated list.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

fn factor(s: &str) -> Result<f64, ParseError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("pi") {
        return Ok(PI);
    }
    t.parse::<f64>().or_else(|_| err(format!("not a number: {t:?}")))
}

/// Parses `x`, `pi`, `-pi/2`, `3*pi/4` and similar products and quotients.
pub fn parse_number(s: &str) -> Result<f64, ParseError> {
    let t = s.trim();
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) if !rest.starts_with(|c: char| c.is_ascii_digit() || c == '.') => (-1.0, rest),
        _ => (1.0, t),
    };
    if body.is_empty() {
        return err("empty number");
    }
    let mut value = 1.0;
    let mut rest = body;
    let mut divide = false;
    loop {
        let cut = rest.find(['*', '/']).unwrap_or(rest.len());
        let f = factor(&rest[..cut])?;
        value = if divide { value / f } else { value * f };
        if cut == rest.len() {
            break;
        }
        divide = rest.as_bytes()[cut] == b'/';
        rest = &rest[cut + 1..];
    }
    if !value.is_finite() {
        return err(format!("not a finite number: {t:?}"));
    }
    Ok(sign * value)
}

/// Parses `a,b`.
pub fn parse_pair(s: &str) -> Result<(f64, f64), ParseError> {
    match s.split(',').collect::<Vec<_>>().as_slice() {
        [a, b] => Ok((parse_number(a)?, parse_number(b)?)),
        _ => err(format!("expected two comma-separated numbers, got {s:?}")),
    }
}

/// Parses a comma-separated list of numbers.
pub fn parse_list(s: &str) -> Result<Vec<f64>, ParseError> {
    s.split(',').map(parse_number).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum GridSpec {
    Lin { a: f64, b: f64, n: usize },
    Log { a: f64, b: f64, n: usize },
    List(Vec<f64>),
}

impl GridSpec {
    /// The grid nodes, endpoints included.
    ///
    /// Linear nodes are `(a(n−1−i) + b·i)/(n−1)`, so a symmetric grid hits zero
    /// exactly.
    pub fn points(&self) -> Vec<f64> {
        match *self {
            GridSpec::Lin { a, n: 1, .. } => vec![a],
            GridSpec::Lin { a, b, n } => {
                let m = (n - 1) as f64;
                (0..n).map(|i| (a * (m - i as f64) + b * i as f64) / m).collect()
            }
            GridSpec::Log { a, n: 1, .. } => vec![a],
            GridSpec::Log { a, b, n } => {
                let (la, lb) = (a.ln(), b.ln());
                let m = (n - 1) as f64;
                (0..n)
                    .map(|i| {
                        if i == 0 {
                            a
                        } else if i == n - 1 {
                            b
                        } else {
                            ((la * (m - i as f64) + lb * i as f64) / m).exp()
                        }
                    })
                    .collect()
            }
            GridSpec::List(ref v) => v.clone(),
        }
    }
}

impl FromStr for GridSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let ranged = |body: &str| -> Result<(f64, f64, usize), ParseError> {
            let parts: Vec<_> = body.split(',').collect();
            let [a, b, n] = parts.as_slice() else {
                return err(format!("expected a,b,n in {s:?}"));
            };
            let n: usize = n.trim().parse().or_else(|_| err(format!("bad point count in {s:?}")))?;
            if n == 0 {
                return err("a grid needs at least one point");
            }
            Ok((parse_number(a)?, parse_number(b)?, n))
        };
        if let Some(body) = s.strip_prefix("lin:") {
            let (a, b, n) = ranged(body)?;
            Ok(GridSpec::Lin { a, b, n })
        } else if let Some(body) = s.strip_prefix("log:") {
            let (a, b, n) = ranged(body)?;
            if !(a > 0.0 && b > 0.0) {
                return err(format!("log grid endpoints must be positive in {s:?}"));
            }
            Ok(GridSpec::Log { a, b, n })
        } else {
            let v = parse_list(s)?;
            Ok(GridSpec::List(v))
        }
    }
}
