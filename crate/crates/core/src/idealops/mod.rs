//! Gröbner bases and ideal algebra over `F_p[x_1, ..., x_n]`.

mod groebner;
mod minors;
mod ops;
mod syzygy;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ringcore::{format_polynomial, same_ring, Polynomial, Ring};

pub use minors::{minors_ideal, PolyMatrix};
pub use ops::{
    ideal_colon, ideal_equal, ideal_intersection, ideal_member, ideal_saturation, ideal_sum,
    radical_membership, Saturation,
};
pub use syzygy::{syzygies, SyzygyBasis};

pub(crate) use groebner::reduced_basis;

/// Remainder of `f` on division by `divisors`, deterministic in their order.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    for g in divisors {
        f.check_ring(g)?;
    }
    Ok(groebner::reduce(f, divisors))
}

/// The reduced Gröbner basis of `ideal` in its ring's order.
pub fn reduced_gb(ideal: &IdealHandle) -> &[Polynomial] {
    ideal.gb()
}

struct Inner {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

/// An ideal given by generators, with its reduced Gröbner basis computed on
/// first use and cached. Cloning shares the cache.
#[derive(Clone)]
pub struct IdealHandle(Arc<Inner>);

impl IdealHandle {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(Self::from_parts(ring, gens, None))
    }

    pub(crate) fn from_parts(ring: &Ring, gens: Vec<Polynomial>, gb: Option<Vec<Polynomial>>) -> Self {
        let cell = OnceLock::new();
        if let Some(gb) = gb {
            let _ = cell.set(gb);
        }
        IdealHandle(Arc::new(Inner { ring: ring.clone(), gens, gb: cell }))
    }

    /// Ideal whose generators are already known to be its reduced Gröbner basis.
    pub(crate) fn from_reduced_gb(ring: &Ring, gb: Vec<Polynomial>) -> Self {
        Self::from_parts(ring, gb.clone(), Some(gb))
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_reduced_gb(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::from_reduced_gb(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.0.gens
    }

    /// Reduced Gröbner basis, computed once.
    pub fn gb(&self) -> &[Polynomial] {
        self.0.gb.get_or_init(|| reduced_basis(&self.0.ring, &self.0.gens, 0))
    }

    pub fn has_cached_gb(&self) -> bool {
        self.0.gb.get().is_some()
    }

    pub fn is_unit(&self) -> bool {
        if self.0.gens.iter().any(Polynomial::is_unit) {
            return true;
        }
        matches!(self.gb(), [g] if g.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.0.gens.iter().all(Polynomial::is_zero)
    }

    pub fn check_ring(&self, other: &IdealHandle) -> Result<()> {
        if same_ring(self.ring(), other.ring()) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Normal form of `f` modulo this ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        groebner::reduce(f, self.gb())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        debug_assert!(same_ring(f.ring(), self.ring()));
        f.is_zero() || self.is_unit() || self.reduce(f).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> bool {
        other.gens().iter().all(|g| self.contains(g))
    }

    pub fn same_ideal(&self, other: &IdealHandle) -> bool {
        self.gb() == other.gb()
    }

    /// The ideal with the same generators, each multiplied by `f`.
    pub fn scaled_by(&self, f: &Polynomial) -> IdealHandle {
        let gens = self.gb().iter().map(|g| g.mul(f)).filter(|g| !g.is_zero()).collect();
        IdealHandle::from_parts(self.ring(), gens, None)
    }

    /// `"(g_1, ..., g_k)"` over the reduced Gröbner basis; `"(0)"` for zero.
    pub fn to_canonical_string(&self) -> String {
        let gb = self.gb();
        if gb.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = gb.iter().map(format_polynomial).collect();
        format!("({})", parts.join(", "))
    }

    /// Reduced Gröbner basis as canonical strings.
    pub fn gb_strings(&self) -> Vec<String> {
        self.gb().iter().map(format_polynomial).collect()
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealHandle{}", self.to_canonical_string())
    }
}
