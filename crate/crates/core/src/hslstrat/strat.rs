use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::algebra::PresentedAlgebra;
use super::chain::{hsl_chain, strata_ideals, HslChain};
use super::cover::generator_cover;
use crate::error::{Error, Result};
use crate::idealops::{ideal_intersection, ideal_saturation, ideal_sum, IdealHandle};
use crate::ringcore::Polynomial;

pub const DEFAULT_MAX_E: usize = 10;

#[derive(Debug, Clone, Copy)]
pub struct StratifyOptions {
    pub max_e: usize,
    /// Worker threads for chart computations; results do not depend on it.
    pub threads: usize,
}

impl Default for StratifyOptions {
    fn default() -> Self {
        StratifyOptions { max_e: DEFAULT_MAX_E, threads: 1 }
    }
}

/// One open set `G_i = Spec(A) \ V(m_i)` of the generator cover with its chain.
#[derive(Debug, Clone)]
pub struct Chart {
    pub index: usize,
    pub generator: Polynomial,
    pub cover: IdealHandle,
    pub chain: HslChain,
    /// `K_e = (L_{e+1} : L_e)`.
    pub strata: Vec<IdealHandle>,
}

impl Chart {
    /// `K_e`, which is the unit ideal past the stabilization index.
    fn stratum(&self, e: usize) -> Option<IdealHandle> {
        match self.strata.get(e) {
            Some(k) => Some(k.clone()),
            None if self.chain.stab.is_some() => Some(IdealHandle::unit(self.cover.ring())),
            None => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratificationStatus {
    Complete,
    /// Some chart's chain did not stabilize within `max_e`.
    NoStabilization,
}

#[derive(Debug, Clone)]
pub struct Stratification {
    pub algebra: PresentedAlgebra,
    pub charts: Vec<Chart>,
    /// `Z_e = ∩_i ((K_e^(i) + J) : m_i^∞)`, cutting out `{HSL >= e + 1}` up to radical.
    /// Starts at `Z_0` and stops at the global bound (or the partial chain length).
    pub merged: Vec<IdealHandle>,
    /// Largest chart stabilization index, when every chart stabilized.
    pub global_bound: Option<usize>,
    pub max_e: usize,
}

impl Stratification {
    pub fn status(&self) -> StratificationStatus {
        if self.global_bound.is_some() {
            StratificationStatus::Complete
        } else {
            StratificationStatus::NoStabilization
        }
    }

    /// Hypotheses and approximations the results rest on.
    pub fn caveats(&self) -> Vec<String> {
        let mut out = vec![
            "B = A/J is assumed to be a Cohen-Macaulay domain and Omega/J a canonical ideal; this is not verified".to_string(),
            "merged ideals Z_e define the closed strata up to radical only".to_string(),
        ];
        if self.algebra.u_override().is_some() {
            out.push(
                "u was supplied explicitly: results are valid only where u generates the Frobenius-map module".to_string(),
            );
        }
        if self.global_bound.is_none() {
            out.push(format!(
                "some chain did not stabilize within max_e = {}; results are partial",
                self.max_e
            ));
        }
        out
    }
}

pub fn stratify(alg: &PresentedAlgebra, max_e: usize) -> Result<Stratification> {
    stratify_with(alg, &StratifyOptions { max_e, threads: 1 })
}

pub fn stratify_with(alg: &PresentedAlgebra, opts: &StratifyOptions) -> Result<Stratification> {
    let cover = match alg.u_override() {
        Some(u) => vec![(u.clone(), IdealHandle::unit(alg.ring()))],
        None => generator_cover(alg)?,
    };
    stratify_from_cover(alg, cover, opts)
}

fn build_chart(alg: &PresentedAlgebra, index: usize, g: &Polynomial, m: &IdealHandle, max_e: usize) -> Result<Chart> {
    let chain = hsl_chain(alg, g, max_e)?;
    let strata = strata_ideals(&chain)?;
    Ok(Chart { index, generator: g.clone(), cover: m.clone(), chain, strata })
}

/// Runs the per-chart chains for an explicit cover `(g_i, m_i)` and merges them.
pub fn stratify_from_cover(
    alg: &PresentedAlgebra,
    cover: Vec<(Polynomial, IdealHandle)>,
    opts: &StratifyOptions,
) -> Result<Stratification> {
    let n = cover.len();
    let threads = opts.threads.clamp(1, n.max(1));
    let results: Vec<Mutex<Option<Result<Chart>>>> = (0..n).map(|_| Mutex::new(None)).collect();
    if threads == 1 {
        for (i, (g, m)) in cover.iter().enumerate() {
            *results[i].lock().unwrap() = Some(build_chart(alg, i, g, m, opts.max_e));
        }
    } else {
        let next = AtomicUsize::new(0);
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= n {
                        break;
                    }
                    let (g, m) = &cover[i];
                    let chart = build_chart(alg, i, g, m, opts.max_e);
                    *results[i].lock().unwrap() = Some(chart);
                });
            }
        });
    }
    let charts = results
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("every chart is computed"))
        .collect::<Result<Vec<Chart>>>()?;

    let global_bound = charts
        .iter()
        .map(|c| c.chain.stab)
        .try_fold(0usize, |acc, s| s.map(|s| acc.max(s)));
    // Z_0 is always reported, even when it is the unit ideal.
    let merged_len = match global_bound {
        Some(b) => b.max(1),
        None => charts
            .iter()
            .filter(|c| c.chain.stab.is_none())
            .map(|c| c.strata.len())
            .min()
            .unwrap_or(0),
    };
    let ring = alg.ring();
    let mut merged = Vec::with_capacity(merged_len);
    for e in 0..merged_len {
        let mut z = IdealHandle::unit(ring);
        for chart in &charts {
            let k = chart.stratum(e).expect("stratum index below merged length");
            // Only primes of Spec(B) count, hence the added J.
            let k = ideal_sum(&k, alg.j())?;
            let closure = ideal_saturation(&k, &chart.cover)?.ideal;
            z = ideal_intersection(&z, &closure)?;
        }
        z.gb();
        merged.push(z);
    }
    Ok(Stratification { algebra: alg.clone(), charts, merged, global_bound, max_e: opts.max_e })
}

/// HSL number at the prime `P` (primality is not checked). Primes not
/// containing `J` give 0, the zero local ring. Uses chart-local strata only.
pub fn local_hsl(strat: &Stratification, prime: &IdealHandle) -> Result<usize> {
    strat.algebra.j().check_ring(prime)?;
    if prime.is_unit() {
        return Err(Error::InvalidInput("the prime ideal must be proper".into()));
    }
    if !prime.contains_ideal(strat.algebra.j()) {
        return Ok(0);
    }
    let chart = strat
        .charts
        .iter()
        .find(|c| !prime.contains_ideal(&c.cover))
        .ok_or_else(|| Error::Internal(format!("no chart covers {prime}")))?;
    chart_local_hsl(chart, prime).ok_or(Error::NoStabilization { max_e: strat.max_e })
}

pub(crate) fn chart_local_hsl(chart: &Chart, prime: &IdealHandle) -> Option<usize> {
    chart.strata.iter().position(|k| !prime.contains_ideal(k))
}

/// Ideal whose zero set is the non-F-injective locus (up to radical); the
/// unit ideal when `B` is F-injective everywhere.
pub fn f_injective_locus(alg: &PresentedAlgebra, max_e: usize) -> Result<IdealHandle> {
    let strat = stratify(alg, max_e)?;
    strat.merged.first().cloned().ok_or(Error::NoStabilization { max_e })
}
