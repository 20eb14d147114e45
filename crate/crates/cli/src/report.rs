//! Reports in two renderings: aligned text for people and JSON for tools.
//! Every ideal is a list of reduced Gröbner basis elements in canonical form.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    CoverIncomplete,
    NoStabilization,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::CoverIncomplete => "cover_incomplete",
            Status::NoStabilization => "no_stabilization",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartReport {
    pub g: String,
    pub m: Vec<String>,
    #[serde(rename = "L")]
    pub l: Vec<Vec<String>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<String>>,
    pub stab: Option<usize>,
}

/// A single named ideal, e.g. `I_1(J)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealResult {
    pub label: String,
    pub ideal: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub command: String,
    pub p: u32,
    pub vars: Vec<String>,
    pub order: String,
    #[serde(rename = "J")]
    pub j: Vec<String>,
    /// `None` for the Gorenstein case `Omega = (1)`.
    pub omega: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    pub max_e: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<IdealResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hsl: Option<usize>,
    pub charts: Vec<ChartReport>,
    pub merged: Vec<Vec<String>>,
    pub global_bound: Option<usize>,
    pub caveats: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

/// `"(g_1, ..., g_k)"`, or `"(0)"` for the empty list.
pub fn format_ideal(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".to_string()
    } else {
        format!("({})", gens.join(", "))
    }
}

/// Inverse of [`format_ideal`].
pub fn parse_ideal(text: &str) -> Option<Vec<String>> {
    let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
    if inner == "0" {
        return Some(Vec::new());
    }
    Some(inner.split(", ").map(str::to_string).collect())
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "command = {}", self.command);
        let _ = writeln!(w, "status = {}", self.status.as_str());
        let _ = writeln!(w, "p = {}", self.p);
        let _ = writeln!(w, "vars = {}", self.vars.join(" "));
        let _ = writeln!(w, "order = {}", self.order);
        let _ = writeln!(w, "J = {}", format_ideal(&self.j));
        match &self.omega {
            None => {
                let _ = writeln!(w, "omega = gorenstein");
            }
            Some(o) => {
                let _ = writeln!(w, "omega = {}", format_ideal(o));
            }
        }
        if let Some(u) = &self.u {
            let _ = writeln!(w, "u = {u}");
        }
        let _ = writeln!(w, "max_e = {}", self.max_e);
        if let Some(msg) = &self.message {
            let _ = writeln!(w, "message = {msg}");
        }
        if let Some(r) = &self.result {
            let _ = writeln!(w, "{} = {}", r.label, format_ideal(&r.ideal));
        }
        if let Some(p) = &self.prime {
            let _ = writeln!(w, "P = {}", format_ideal(p));
        }
        if let Some(h) = self.hsl {
            let _ = writeln!(w, "HSL = {h}");
        }
        for (i, c) in self.charts.iter().enumerate() {
            let stab = c.stab.map_or_else(|| "none".to_string(), |s| s.to_string());
            let _ = writeln!(w, "chart {i}: g = {}", c.g);
            let _ = writeln!(w, "  m = {}", format_ideal(&c.m));
            let _ = writeln!(w, "  stab = {stab}");
            for (e, l) in c.l.iter().enumerate() {
                let _ = writeln!(w, "  L_{e} = {}", format_ideal(l));
            }
            for (e, k) in c.k.iter().enumerate() {
                let _ = writeln!(w, "  K_{e} = {}", format_ideal(k));
            }
        }
        for (e, z) in self.merged.iter().enumerate() {
            let _ = writeln!(w, "Z_{e} = {}", format_ideal(z));
        }
        if !self.charts.is_empty() || !self.merged.is_empty() {
            let gb = self.global_bound.map_or_else(|| "none".to_string(), |b| b.to_string());
            let _ = writeln!(w, "global_bound = {gb}");
        }
        for c in &self.caveats {
            let _ = writeln!(w, "caveat: {c}");
        }
        out
    }
}
