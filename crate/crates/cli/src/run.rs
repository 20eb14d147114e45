//! Subcommand dispatch.

use std::fmt;
use std::str::FromStr;

use frobroot_core::frobenius::ie_operator;
use frobroot_core::hslstrat::{
    f_injective_locus, frobenius_module_generators, hsl_chain, local_hsl, strata_ideals, stratify_with,
    PresentedAlgebra, Stratification, StratificationStatus, StratifyOptions, DEFAULT_MAX_E,
};
use frobroot_core::idealops::{ideal_colon, ideal_intersection};
use frobroot_core::ringcore::{parse_polynomial, Polynomial, Ring};
use frobroot_core::{Error, IdealHandle};

use crate::job::{JobSpec, OmegaSpec};
use crate::report::{ChartReport, IdealResult, Report, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Gb,
    Ie,
    Colon,
    Intersect,
    Hsl,
    Stratify,
    Finjective,
    Localhsl,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Gb,
        Command::Ie,
        Command::Colon,
        Command::Intersect,
        Command::Hsl,
        Command::Stratify,
        Command::Finjective,
        Command::Localhsl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Ie => "ie",
            Command::Colon => "colon",
            Command::Intersect => "intersect",
            Command::Hsl => "hsl",
            Command::Stratify => "stratify",
            Command::Finjective => "finjective",
            Command::Localhsl => "localhsl",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Ok = 0,
    Internal = 1,
    Input = 2,
    CoverIncomplete = 3,
    NoStabilization = 4,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn for_error(err: &Error) -> (ExitCode, Status) {
        match err {
            Error::CoverIncomplete { .. } => (ExitCode::CoverIncomplete, Status::CoverIncomplete),
            Error::NoStabilization { .. } => (ExitCode::NoStabilization, Status::NoStabilization),
            Error::Internal(_) => (ExitCode::Internal, Status::Error),
            _ => (ExitCode::Input, Status::Error),
        }
    }
}

/// Command-line options that refine a job file.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Overrides the job's `max_e`.
    pub max_e: Option<usize>,
    /// Frobenius exponent for `ie` (default 1).
    pub e: Option<u32>,
    /// Comma-separated generators of the prime for `localhsl`.
    pub prime: Option<String>,
    /// Comma-separated second operand for `colon` and `intersect`; defaults to Omega.
    pub with: Option<String>,
    /// Overrides the job's `u`.
    pub u: Option<String>,
    pub threads: usize,
}

fn parse_list(ring: &Ring, what: &str, text: &str) -> Result<Vec<Polynomial>, Error> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            parse_polynomial(ring, s)
                .map_err(|e| Error::InvalidInput(format!("{what}: {e} in `{}`", s.trim())))
        })
        .collect()
}

fn omega_ideal(spec: &JobSpec) -> Result<Option<IdealHandle>, Error> {
    match &spec.omega {
        OmegaSpec::Gorenstein => Ok(None),
        OmegaSpec::Generators(g) => IdealHandle::new(&spec.ring, g.clone()).map(Some),
    }
}

fn chart_report(g: &Polynomial, m: &IdealHandle, l: &[IdealHandle], k: &[IdealHandle], stab: Option<usize>) -> ChartReport {
    ChartReport {
        g: g.to_string(),
        m: m.gb_strings(),
        l: l.iter().map(IdealHandle::gb_strings).collect(),
        k: k.iter().map(IdealHandle::gb_strings).collect(),
        stab,
    }
}

fn fill_stratification(report: &mut Report, strat: &Stratification) {
    report.charts = strat
        .charts
        .iter()
        .map(|c| chart_report(&c.generator, &c.cover, &c.chain.l, &c.strata, c.chain.stab))
        .collect();
    report.merged = strat.merged.iter().map(IdealHandle::gb_strings).collect();
    report.global_bound = strat.global_bound;
    report.caveats = strat.caveats();
    if strat.status() == StratificationStatus::NoStabilization {
        report.status = Status::NoStabilization;
    }
}

struct Ctx<'a> {
    spec: &'a JobSpec,
    opts: &'a RunOptions,
    max_e: usize,
    j: IdealHandle,
}

impl Ctx<'_> {
    fn u(&self) -> Result<Option<Polynomial>, Error> {
        match &self.opts.u {
            Some(text) => parse_polynomial(&self.spec.ring, text)
                .map(Some)
                .map_err(|e| Error::InvalidInput(format!("--u: {e}"))),
            None => Ok(self.spec.u.clone()),
        }
    }

    fn algebra(&self, with_override: bool) -> Result<PresentedAlgebra, Error> {
        let u = if with_override { self.u()? } else { None };
        PresentedAlgebra::new(self.j.clone(), omega_ideal(self.spec)?, u)
    }

    fn stratify_opts(&self) -> StratifyOptions {
        StratifyOptions { max_e: self.max_e, threads: self.opts.threads.max(1) }
    }

    fn second_operand(&self) -> Result<(String, IdealHandle), Error> {
        match &self.opts.with {
            Some(text) => {
                let gens = parse_list(&self.spec.ring, "--with", text)?;
                Ok(("Q".to_string(), IdealHandle::new(&self.spec.ring, gens)?))
            }
            None => Ok((
                "omega".to_string(),
                omega_ideal(self.spec)?.unwrap_or_else(|| IdealHandle::unit(&self.spec.ring)),
            )),
        }
    }
}

fn execute(cmd: Command, ctx: &Ctx, report: &mut Report) -> Result<(), Error> {
    let ring = &ctx.spec.ring;
    match cmd {
        Command::Gb => {
            report.result = Some(IdealResult { label: "GB(J)".into(), ideal: ctx.j.gb_strings() });
        }
        Command::Ie => {
            let e = ctx.opts.e.unwrap_or(1);
            let ie = ie_operator(&ctx.j, e)?;
            report.result = Some(IdealResult { label: format!("I_{e}(J)"), ideal: ie.gb_strings() });
        }
        Command::Colon => {
            let (name, q) = ctx.second_operand()?;
            let c = ideal_colon(&ctx.j, &q)?;
            report.result = Some(IdealResult { label: format!("(J : {name})"), ideal: c.gb_strings() });
        }
        Command::Intersect => {
            let (name, q) = ctx.second_operand()?;
            let c = ideal_intersection(&ctx.j, &q)?;
            report.result = Some(IdealResult { label: format!("J cap {name}"), ideal: c.gb_strings() });
        }
        Command::Hsl => {
            let alg = ctx.algebra(false)?;
            let u = match ctx.u()? {
                Some(u) => u,
                None => {
                    let gens = frobenius_module_generators(&alg, 1)?;
                    match <[Polynomial; 1]>::try_from(gens) {
                        Ok([u]) => u,
                        Err(gens) => {
                            return Err(Error::InvalidInput(format!(
                                "the Frobenius-map module has {} generators; choose one with --u or use stratify",
                                gens.len()
                            )))
                        }
                    }
                }
            };
            let chain = hsl_chain(&alg, &u, ctx.max_e)?;
            let strata = strata_ideals(&chain)?;
            report.u = Some(u.to_string());
            report.charts = vec![chart_report(&u, &IdealHandle::unit(ring), &chain.l, &strata, chain.stab)];
            report.global_bound = chain.stab;
            report.caveats = vec![
                "B = A/J is assumed to be a Cohen-Macaulay domain and Omega/J a canonical ideal; this is not verified"
                    .to_string(),
                "the chain describes the HSL numbers only where u generates the Frobenius-map module".to_string(),
            ];
            if chain.stab.is_none() {
                report.status = Status::NoStabilization;
            }
        }
        Command::Stratify => {
            let alg = ctx.algebra(true)?;
            report.u = alg.u_override().map(Polynomial::to_string);
            let strat = stratify_with(&alg, &ctx.stratify_opts())?;
            fill_stratification(report, &strat);
        }
        Command::Finjective => {
            let alg = ctx.algebra(false)?;
            let z = f_injective_locus(&alg, ctx.max_e)?;
            report.result = Some(IdealResult { label: "Z_0".into(), ideal: z.gb_strings() });
            report.caveats = vec![
                "B = A/J is assumed to be a Cohen-Macaulay domain and Omega/J a canonical ideal; this is not verified"
                    .to_string(),
                "Z_0 defines the non-F-injective locus up to radical only".to_string(),
            ];
        }
        Command::Localhsl => {
            let text = ctx
                .opts
                .prime
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("localhsl requires --prime".into()))?;
            let prime = IdealHandle::new(ring, parse_list(ring, "--prime", text)?)?;
            report.prime = Some(prime.gb_strings());
            let alg = ctx.algebra(true)?;
            report.u = alg.u_override().map(Polynomial::to_string);
            let strat = stratify_with(&alg, &ctx.stratify_opts())?;
            report.caveats = strat.caveats();
            report.hsl = Some(local_hsl(&strat, &prime)?);
        }
    }
    Ok(())
}

/// Runs `cmd` on a validated job and returns the report with its exit code.
/// Failures are reported too, with `status` set and `message` filled in.
pub fn run_command(cmd: Command, spec: &JobSpec, opts: &RunOptions) -> (Report, ExitCode) {
    let ring = &spec.ring;
    let max_e = opts.max_e.or(spec.max_e).unwrap_or(DEFAULT_MAX_E);
    let j = IdealHandle::new(ring, spec.j.clone()).expect("job polynomials share the job ring");
    let omega = match &spec.omega {
        OmegaSpec::Gorenstein => None,
        OmegaSpec::Generators(g) => Some(
            IdealHandle::new(ring, g.clone())
                .expect("job polynomials share the job ring")
                .gb_strings(),
        ),
    };
    let mut report = Report {
        status: Status::Ok,
        command: cmd.name().to_string(),
        p: ring.p(),
        vars: ring.vars().to_vec(),
        order: ring.order().to_string(),
        j: j.gb_strings(),
        omega,
        u: spec.u.as_ref().map(Polynomial::to_string),
        max_e,
        result: None,
        prime: None,
        hsl: None,
        charts: Vec::new(),
        merged: Vec::new(),
        global_bound: None,
        caveats: Vec::new(),
        message: None,
    };
    if max_e == 0 {
        report.status = Status::Error;
        report.message = Some("max_e must be at least 1".into());
        return (report, ExitCode::Input);
    }
    let ctx = Ctx { spec, opts, max_e, j };
    match execute(cmd, &ctx, &mut report) {
        Ok(()) => {
            let code = match report.status {
                Status::NoStabilization => ExitCode::NoStabilization,
                _ => ExitCode::Ok,
            };
            (report, code)
        }
        Err(err) => {
            let (code, status) = ExitCode::for_error(&err);
            report.status = status;
            report.message = Some(err.to_string());
            (report, code)
        }
    }
}
