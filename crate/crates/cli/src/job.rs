//! Line-oriented job files:
//!
//! ```text
//! # Fermat cubic in characteristic 2
//! p: 2
//! vars: x y z
//! order: grevlex
//! J: x^3 + y^3 + z^3
//! omega: gorenstein
//! ```
//!
//! Lines without a `key:` prefix continue the previous value. Generator lists
//! are separated by `;`. `#` starts a comment.

use std::fmt;
use std::path::Path;

use frobroot_core::ringcore::{
    parse_polynomial, MonomialOrder, ParseErrorKind, Polynomial, Ring, RingContext, MAX_EXPONENT,
};
use frobroot_core::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobError {
    /// 1-based; 0 when the problem is not tied to a line.
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}:{}: {}", self.line, self.column, self.message)
        }
    }
}

impl std::error::Error for JobError {}

#[derive(Debug, Clone)]
pub enum OmegaSpec {
    Gorenstein,
    Generators(Vec<Polynomial>),
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub ring: Ring,
    pub j: Vec<Polynomial>,
    pub omega: OmegaSpec,
    pub u: Option<Polynomial>,
    pub max_e: Option<usize>,
}

const KEYS: [&str; 7] = ["p", "vars", "order", "J", "omega", "u", "max_e"];

/// A value with the position of each of its characters in the file.
#[derive(Debug, Default, Clone)]
struct Value {
    text: String,
    positions: Vec<(usize, usize)>,
    line: usize,
    column: usize,
}

impl Value {
    fn push_line(&mut self, text: &str, line: usize, first_col: usize) {
        if !self.text.is_empty() {
            self.text.push(' ');
            self.positions.push((line, first_col));
        }
        for (k, c) in text.chars().enumerate() {
            self.text.push(c);
            self.positions.push((line, first_col + k));
        }
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> JobError {
        let (line, column) = self.positions.get(offset).copied().unwrap_or((self.line, self.column));
        JobError { line, column, message: message.into() }
    }

    /// `;`-separated pieces with their starting character offsets.
    fn pieces(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut char_start = 0;
        for (char_idx, (byte_idx, c)) in self.text.char_indices().enumerate() {
            if c == ';' {
                out.push((char_start, &self.text[start..byte_idx]));
                start = byte_idx + 1;
                char_start = char_idx + 1;
            }
        }
        out.push((char_start, &self.text[start..]));
        out
    }
}

fn parse_poly_at(ring: &Ring, value: &Value, offset: usize, text: &str) -> Result<Polynomial, JobError> {
    let lead = text.chars().take_while(|c| c.is_whitespace()).count();
    parse_polynomial(ring, text).map_err(|e| {
        let pos = if e.position >= text.chars().count() { offset + lead } else { offset + e.position };
        let msg = match e.kind {
            ParseErrorKind::Syntax(m) => format!("syntax error: {m}"),
            ParseErrorKind::UnknownVariable(v) => format!("unknown variable `{v}`"),
            ParseErrorKind::ExponentOverflow => format!("exponent overflow (limit {MAX_EXPONENT})"),
        };
        value.error(pos, msg)
    })
}

fn parse_generators(ring: &Ring, value: &Value) -> Result<Vec<Polynomial>, JobError> {
    value
        .pieces()
        .into_iter()
        .filter(|(_, t)| !t.trim().is_empty())
        .map(|(offset, t)| parse_poly_at(ring, value, offset, t))
        .collect()
}

pub fn load_jobspec(path: &Path) -> Result<JobSpec, JobError> {
    let text = std::fs::read_to_string(path).map_err(|e| JobError {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_jobspec(&text)
}

pub fn parse_jobspec(text: &str) -> Result<JobSpec, JobError> {
    let mut values: Vec<(String, Value)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let key_part = content.split(':').next().unwrap_or("");
        let is_key = content.contains(':')
            && !key_part.trim().is_empty()
            && key_part.trim().chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if is_key {
            let key = key_part.trim().to_string();
            let key_col = content.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
            if !KEYS.contains(&key.as_str()) {
                return Err(JobError { line: line_no, column: key_col, message: format!("unknown key `{key}`") });
            }
            if values.iter().any(|(k, _)| *k == key) {
                return Err(JobError { line: line_no, column: key_col, message: format!("duplicate key `{key}`") });
            }
            let rest_start = key_part.chars().count() + 1;
            let rest: String = content.chars().skip(rest_start).collect();
            let mut value = Value { line: line_no, column: rest_start + 1, ..Value::default() };
            value.push_line(&rest, line_no, rest_start + 1);
            values.push((key, value));
        } else {
            match values.last_mut() {
                Some((_, v)) => v.push_line(content, line_no, 1),
                None => {
                    return Err(JobError {
                        line: line_no,
                        column: 1,
                        message: "expected `key: value`".into(),
                    })
                }
            }
        }
    }
    let get = |k: &str| values.iter().find(|(key, _)| key == k).map(|(_, v)| v);
    let missing = |k: &str| JobError { line: 0, column: 0, message: format!("missing required key `{k}`") };

    let p_val = get("p").ok_or_else(|| missing("p"))?;
    let p: u32 = p_val
        .text
        .trim()
        .parse()
        .map_err(|_| p_val.error(0, format!("`{}` is not a valid modulus", p_val.text.trim())))?;
    let vars_val = get("vars").ok_or_else(|| missing("vars"))?;
    let vars: Vec<&str> = vars_val.text.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
    if vars.is_empty() {
        return Err(vars_val.error(0, "no variables given"));
    }
    let order = match get("order") {
        None => MonomialOrder::Grevlex,
        Some(v) => v.text.trim().parse().map_err(|e: String| v.error(0, e))?,
    };
    let ring = RingContext::new(p, &vars, order).map_err(|e| {
        let v = if matches!(e, Error::InvalidRing(ref m) if m.contains("prime")) { p_val } else { vars_val };
        v.error(0, e.to_string())
    })?;

    let j_val = get("J").ok_or_else(|| missing("J"))?;
    let j = parse_generators(&ring, j_val)?;
    if j.is_empty() {
        return Err(j_val.error(0, "J needs at least one generator (use 0 for the zero ideal)"));
    }
    let omega = match get("omega") {
        None => OmegaSpec::Gorenstein,
        Some(v) if v.text.trim() == "gorenstein" => OmegaSpec::Gorenstein,
        Some(v) => {
            let gens = parse_generators(&ring, v)?;
            if gens.is_empty() {
                return Err(v.error(0, "omega needs generators or `gorenstein`"));
            }
            OmegaSpec::Generators(gens)
        }
    };
    let u = match get("u") {
        None => None,
        Some(v) => Some(parse_poly_at(&ring, v, 0, &v.text)?),
    };
    let max_e = match get("max_e") {
        None => None,
        Some(v) => Some(
            v.text
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&m| m >= 1)
                .ok_or_else(|| v.error(0, "max_e must be a positive integer"))?,
        ),
    };
    Ok(JobSpec { ring, j, omega, u, max_e })
}
