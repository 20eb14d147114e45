use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::frobenius::frobenius_power;
use crate::idealops::{ideal_colon, ideal_intersection, IdealHandle};
use crate::ringcore::{same_ring, Polynomial, Ring};

/// `B = A/J` together with the preimage `Ω` of a canonical ideal of `B`.
///
/// `B` is assumed to be a Cohen-Macaulay domain and `Ω/J` a canonical ideal;
/// neither is checked.
#[derive(Debug, Clone)]
pub struct PresentedAlgebra {
    ring: Ring,
    j: IdealHandle,
    omega: IdealHandle,
    gorenstein: bool,
    u_override: Option<Polynomial>,
    module_1: OnceLock<IdealHandle>,
}

impl PresentedAlgebra {
    /// `omega = None` selects the Gorenstein shortcut `Ω = (1)`.
    pub fn new(
        j: IdealHandle,
        omega: Option<IdealHandle>,
        u_override: Option<Polynomial>,
    ) -> Result<Self> {
        let ring = j.ring().clone();
        if j.is_unit() {
            return Err(Error::InvalidInput("J is the unit ideal, so B = 0".into()));
        }
        let gorenstein = omega.is_none();
        let omega = omega.unwrap_or_else(|| IdealHandle::unit(&ring));
        j.check_ring(&omega)?;
        if omega.is_zero() {
            return Err(Error::InvalidInput("Omega must be a nonzero ideal".into()));
        }
        if !omega.contains_ideal(&j) {
            return Err(Error::InvalidInput(format!("J is not contained in Omega = {omega}")));
        }
        let alg = PresentedAlgebra {
            ring,
            j,
            omega,
            gorenstein,
            u_override: None,
            module_1: OnceLock::new(),
        };
        match u_override {
            None => Ok(alg),
            Some(u) => {
                alg.check_u(&u)?;
                Ok(PresentedAlgebra { u_override: Some(u), ..alg })
            }
        }
    }

    pub fn gorenstein(j: IdealHandle) -> Result<Self> {
        Self::new(j, None, None)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn j(&self) -> &IdealHandle {
        &self.j
    }

    pub fn omega(&self) -> &IdealHandle {
        &self.omega
    }

    pub fn is_gorenstein(&self) -> bool {
        self.gorenstein
    }

    pub fn u_override(&self) -> Option<&Polynomial> {
        self.u_override.as_ref()
    }

    /// `V_1 = (J^[p] : J) ∩ (Ω^[p] : Ω)`, computed once.
    pub fn frobenius_module(&self) -> Result<&IdealHandle> {
        if let Some(v) = self.module_1.get() {
            return Ok(v);
        }
        let v = frobenius_module_ideal(self, 1)?;
        Ok(self.module_1.get_or_init(|| v))
    }

    /// Fails with `UNotInModule` unless `u ∈ V_1`.
    pub fn check_u(&self, u: &Polynomial) -> Result<()> {
        if !same_ring(u.ring(), &self.ring) {
            return Err(Error::ContextMismatch);
        }
        if self.frobenius_module()?.contains(u) {
            Ok(())
        } else {
            Err(Error::UNotInModule { u: u.to_string() })
        }
    }
}

fn frobenius_module_ideal(alg: &PresentedAlgebra, e: u32) -> Result<IdealHandle> {
    let jq = frobenius_power(&alg.j, e)?;
    let first = ideal_colon(&jq, &alg.j)?;
    if alg.gorenstein || alg.omega.is_unit() {
        return Ok(first);
    }
    let wq = frobenius_power(&alg.omega, e)?;
    let second = ideal_colon(&wq, &alg.omega)?;
    ideal_intersection(&first, &second)
}

/// Generators of `V_e` modulo `J^[p^e]`: the reduced basis of `V_e`, each
/// element reduced modulo `J^[p^e]`, made monic, with zeros and repeats dropped.
pub fn frobenius_module_generators(alg: &PresentedAlgebra, e: u32) -> Result<Vec<Polynomial>> {
    if e == 0 {
        return Err(Error::InvalidInput("Frobenius-map generators need e >= 1".into()));
    }
    let v = if e == 1 { alg.frobenius_module()?.clone() } else { frobenius_module_ideal(alg, e)? };
    let jq = frobenius_power(&alg.j, e)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in v.gb() {
        let r = jq.reduce(g);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if !gens.contains(&r) {
            gens.push(r);
        }
    }
    Ok(gens)
}
