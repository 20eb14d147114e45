//! Frobenius bracket powers and the root operator `I_e(-)`.
//!
//! Over the prime field, `A = F_p[x]` is free over the subring of `p^e`-th
//! powers with basis the monomials `x^α`, `0 <= α_i < p^e`. Writing
//! `f = sum_α g_α^{p^e} x^α`, the ideal `I_e((f))` is generated by the `g_α`,
//! and `I_e` of an ideal is the sum over its generators.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::idealops::IdealHandle;
use crate::ringcore::{FieldScalar, Monomial, Polynomial, Ring, Term, MAX_EXPONENT};

/// `p^e`, failing if it exceeds the exponent range.
pub fn frobenius_exponent(p: u32, e: u32) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..e {
        q *= p as u64;
        if q > MAX_EXPONENT as u64 {
            return Err(Error::ExponentOverflow(format!("{p}^{e} exceeds {MAX_EXPONENT}")));
        }
    }
    Ok(q)
}

/// `f^q` for `q` a power of the characteristic: every exponent is scaled by
/// `q` and coefficients are fixed by Frobenius on `F_p`.
pub fn frobenius_poly(f: &Polynomial, q: u64) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let scaled = m.scale_exponents(q).ok_or_else(|| {
            Error::ExponentOverflow(format!("exponent {} times {q}", m.max_exponent()))
        })?;
        terms.push((scaled, *c));
    }
    // Scaling exponents is monotone for any monomial order, so order is preserved.
    Ok(Polynomial::from_sorted_terms(f.ring(), terms))
}

/// The bracket power `I^[p^e]`.
///
/// The reduced Gröbner basis of `I^[q]` is `{ g^q : g in GB(I) }` (Frobenius is
/// flat on `A`), so the result carries that basis in its cache.
pub fn frobenius_power(ideal: &IdealHandle, e: u32) -> Result<IdealHandle> {
    if e == 0 {
        return Ok(ideal.clone());
    }
    let ring = ideal.ring();
    let q = frobenius_exponent(ring.p(), e)?;
    let gens = ideal.gens().iter().map(|g| frobenius_poly(g, q)).collect::<Result<Vec<_>>>()?;
    let gb = ideal.gb().iter().map(|g| frobenius_poly(g, q)).collect::<Result<Vec<_>>>()?;
    Ok(IdealHandle::from_parts(ring, gens, Some(gb)))
}

/// `f = sum_α (parts[α])^{p^e} * x^α` over basis monomials with exponents below `p^e`.
#[derive(Debug, Clone)]
pub struct RootDecomposition {
    pub e: u32,
    /// Nonzero parts, sorted descending by basis monomial in the ring order.
    pub parts: Vec<(Monomial, Polynomial)>,
}

impl RootDecomposition {
    pub fn part(&self, alpha: &Monomial) -> Option<&Polynomial> {
        self.parts.iter().find(|(a, _)| a == alpha).map(|(_, g)| g)
    }

    /// Reassembles `sum_α g_α^{p^e} x^α`.
    pub fn reconstruct(&self, ring: &Ring) -> Result<Polynomial> {
        let q = frobenius_exponent(ring.p(), self.e)?;
        let mut acc = Polynomial::zero(ring);
        for (alpha, g) in &self.parts {
            acc = acc.add(&frobenius_poly(g, q)?.mul_term(alpha, FieldScalar::ONE));
        }
        Ok(acc)
    }
}

pub fn pe_root_decompose(f: &Polynomial, e: u32) -> Result<RootDecomposition> {
    if e == 0 {
        return Err(Error::InvalidInput("root decomposition needs e >= 1".into()));
    }
    let ring = f.ring();
    let q = frobenius_exponent(ring.p(), e)? as u32;
    let mut buckets: HashMap<Monomial, Vec<Term>> = HashMap::new();
    for (m, c) in f.terms() {
        let (alpha, quot): (Vec<u32>, Vec<u32>) = m.exponents().iter().map(|&b| (b % q, b / q)).unzip();
        // The p^e-th root of c in F_p is c itself.
        buckets
            .entry(Monomial::from_exponents(alpha))
            .or_default()
            .push((Monomial::from_exponents(quot), *c));
    }
    let mut parts: Vec<(Monomial, Polynomial)> = buckets
        .into_iter()
        .map(|(alpha, terms)| (alpha, Polynomial::from_terms(ring, terms)))
        .filter(|(_, g)| !g.is_zero())
        .collect();
    parts.sort_by(|a, b| ring.compare(&b.0, &a.0));
    Ok(RootDecomposition { e, parts })
}

/// `I_e(J)`: the smallest ideal `L` with `J ⊆ L^[p^e]`. `I_0(J) = J`.
pub fn ie_operator(ideal: &IdealHandle, e: u32) -> Result<IdealHandle> {
    if e == 0 {
        return Ok(ideal.clone());
    }
    let ring = ideal.ring();
    let mut gens: Vec<Polynomial> = Vec::new();
    for f in ideal.gens() {
        for (_, g) in pe_root_decompose(f, e)?.parts {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
    }
    let out = IdealHandle::new(ring, gens)?;
    out.gb();
    Ok(out)
}
