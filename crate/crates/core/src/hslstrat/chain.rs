use num_bigint::BigUint;

use super::algebra::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::frobenius::ie_operator;
use crate::idealops::{ideal_colon, IdealHandle};
use crate::ringcore::Polynomial;

/// `ν_e = 1 + p + ... + p^{e-1}`, with `ν_0 = 0`.
pub fn nu(p: u32, e: usize) -> BigUint {
    let mut acc = BigUint::from(0u32);
    for _ in 0..e {
        acc = acc * p + 1u32;
    }
    acc
}

/// The descending chain `L_0 = Ω ⊇ L_1 ⊇ ...` with `L_e = I_e(u^{ν_e} Ω)`.
#[derive(Debug, Clone)]
pub struct HslChain {
    pub u: Polynomial,
    pub nu: Vec<BigUint>,
    /// `L_0, ..., L_{stab+1}` when stabilized, otherwise every computed term.
    pub l: Vec<IdealHandle>,
    /// Smallest `e` with `L_e = L_{e+1}`; `None` if the bound was reached first.
    pub stab: Option<usize>,
}

/// Next chain term: `L_{e+1} = I_1(u * L_e)`.
///
/// With `ν_{e+1} = ν_e + p^e` and `I_{e+1} = I_1 ∘ I_e`, the identity
/// `I_e(a^{p^e} b) = a I_e(b)` turns `I_{e+1}(u^{ν_{e+1}} Ω)` into `I_1(u I_e(u^{ν_e} Ω))`.
fn next_term(u: &Polynomial, current: &IdealHandle) -> Result<IdealHandle> {
    ie_operator(&current.scaled_by(u), 1)
}

/// `I_e(u^{ν_e} Ω)` straight from the definition. Exponentially expensive in
/// `e`; used to cross-check the recurrence.
pub fn chain_term_direct(omega: &IdealHandle, u: &Polynomial, e: usize) -> Result<IdealHandle> {
    if e == 0 {
        return Ok(omega.clone());
    }
    let exp: u64 = nu(u.ring().p(), e)
        .try_into()
        .map_err(|_| Error::ExponentOverflow(format!("ν_{e} does not fit in 64 bits")))?;
    let power = u.pow(exp)?;
    ie_operator(&omega.scaled_by(&power), e as u32)
}

/// Computes `L_0, L_1, ...` until two consecutive terms agree or `max_e`
/// terms past `L_0` have been produced.
///
/// On stabilization at `e` the term `L_{e+2}` is also computed and must
/// equal `L_{e+1}`; every new term must lie in its predecessor.
pub fn hsl_chain(alg: &PresentedAlgebra, u: &Polynomial, max_e: usize) -> Result<HslChain> {
    if max_e == 0 {
        return Err(Error::InvalidInput("max_e must be at least 1".into()));
    }
    alg.check_u(u)?;
    let p = alg.ring().p();
    let mut l = vec![alg.omega().clone()];
    let mut stab = None;
    for e in 0..max_e {
        let next = next_term(u, &l[e])?;
        if !l[e].contains_ideal(&next) {
            return Err(Error::Internal(format!("chain is not descending at L_{}", e + 1)));
        }
        let equal = next.same_ideal(&l[e]);
        l.push(next);
        if equal {
            stab = Some(e);
            let after = next_term(u, &l[e + 1])?;
            if !after.same_ideal(&l[e + 1]) {
                return Err(Error::Internal(format!(
                    "L_{e} = L_{} but L_{} differs",
                    e + 1,
                    e + 2
                )));
            }
            break;
        }
    }
    let nu = (0..l.len()).map(|e| nu(p, e)).collect();
    Ok(HslChain { u: u.clone(), nu, l, stab })
}

/// `K_e = (L_{e+1} : L_e)` for every consecutive pair of computed terms; the
/// primes containing `K_e` are those where the local HSL number exceeds `e`.
pub fn strata_ideals(chain: &HslChain) -> Result<Vec<IdealHandle>> {
    chain.l.windows(2).map(|w| ideal_colon(&w[1], &w[0])).collect()
}
