use super::groebner::reduced_basis;
use super::IdealHandle;
use crate::error::{Error, Result};
use crate::ringcore::{same_ring, Polynomial, Ring};

fn check(a: &IdealHandle, b: &IdealHandle) -> Result<()> {
    a.check_ring(b)
}

pub fn ideal_member(f: &Polynomial, ideal: &IdealHandle) -> Result<bool> {
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(Error::ContextMismatch);
    }
    Ok(ideal.contains(f))
}

pub fn ideal_equal(a: &IdealHandle, b: &IdealHandle) -> Result<bool> {
    check(a, b)?;
    Ok(a.same_ideal(b))
}

pub fn ideal_sum(a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
    check(a, b)?;
    if a.is_unit() || b.is_unit() {
        return Ok(IdealHandle::unit(a.ring()));
    }
    let gens = a.gens().iter().chain(b.gens()).cloned().collect();
    IdealHandle::new(a.ring(), gens)
}

/// Maps polynomials of `ring` into a ring with `k` elimination variables prepended.
fn lift(f: &Polynomial, target: &Ring, k: usize) -> Polynomial {
    let map: Vec<usize> = (0..f.ring().nvars()).map(|i| i + k).collect();
    f.map_to_ring(target, &map)
}

fn contract(f: &Polynomial, ring: &Ring, k: usize) -> Polynomial {
    let n = ring.nvars();
    // Only called on polynomials free of the first k variables.
    let terms = f.terms().iter().map(|(m, c)| {
        (crate::ringcore::Monomial::from_exponents(m.exponents()[k..k + n].to_vec()), *c)
    });
    Polynomial::from_terms(ring, terms)
}

/// `I1 ∩ I2` by eliminating `t` from `t*I1 + (1 - t)*I2`.
pub fn ideal_intersection(a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
    check(a, b)?;
    let ring = a.ring();
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    if a.is_zero() || b.is_zero() {
        return Ok(IdealHandle::zero(ring));
    }
    let ext = ring.with_elimination_vars("t", 1);
    let t = crate::ringcore::Polynomial::variable(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let mut gens = Vec::new();
    for g in a.gb() {
        gens.push(t.mul(&lift(g, &ext, 1)));
    }
    for g in b.gb() {
        gens.push(one_minus_t.mul(&lift(g, &ext, 1)));
    }
    let basis = reduced_basis(&ext, &gens, 0);
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| g.avoids_vars(0..1))
        .map(|g| contract(g, ring, 1))
        .collect();
    IdealHandle::new(ring, kept)
}

/// `(I : g)` for a single nonzero `g`, as `(I ∩ (g)) / g`.
fn colon_by_element(ideal: &IdealHandle, g: &Polynomial) -> Result<IdealHandle> {
    let ring = ideal.ring();
    if ideal.contains(g) {
        return Ok(IdealHandle::unit(ring));
    }
    let principal = IdealHandle::new(ring, vec![g.clone()])?;
    let meet = ideal_intersection(ideal, &principal)?;
    let mut gens = Vec::with_capacity(meet.gb().len());
    for h in meet.gb() {
        match h.div_exact(g) {
            Some(q) => gens.push(q),
            None => {
                return Err(Error::Internal(format!(
                    "{h} lies in the intersection with ({g}) but is not divisible by it"
                )))
            }
        }
    }
    IdealHandle::new(ring, gens)
}

/// `(I : Q) = { a : a*Q ⊆ I }`, intersecting `(I : g)` over the reduced basis of `Q`.
/// A zero `Q` gives the unit ideal.
pub fn ideal_colon(ideal: &IdealHandle, q: &IdealHandle) -> Result<IdealHandle> {
    check(ideal, q)?;
    let ring = ideal.ring();
    if ideal.is_unit() || q.is_zero() || ideal.contains_ideal(q) {
        return Ok(IdealHandle::unit(ring));
    }
    if q.is_unit() {
        return Ok(ideal.clone());
    }
    let mut acc: Option<IdealHandle> = None;
    for g in q.gb() {
        let part = colon_by_element(ideal, g)?;
        acc = Some(match acc {
            None => part,
            Some(a) => ideal_intersection(&a, &part)?,
        });
    }
    Ok(acc.expect("nonzero Q has a nonempty basis"))
}

/// Result of a saturation: the stable ideal and the number of colon steps taken.
#[derive(Debug, Clone)]
pub struct Saturation {
    pub ideal: IdealHandle,
    pub steps: usize,
}

/// `(I : Q^∞)` as the first repeated term of `I ⊆ (I:Q) ⊆ ((I:Q):Q) ⊆ ...`.
pub fn ideal_saturation(ideal: &IdealHandle, q: &IdealHandle) -> Result<Saturation> {
    check(ideal, q)?;
    let mut current = ideal.clone();
    let mut steps = 0;
    loop {
        let next = ideal_colon(&current, q)?;
        steps += 1;
        if next.same_ideal(&current) {
            return Ok(Saturation { ideal: current, steps });
        }
        current = next;
    }
}

/// Whether some power of `f` lies in `I`, via `1 ∈ I + (1 - t*f)`.
pub fn radical_membership(f: &Polynomial, ideal: &IdealHandle) -> Result<bool> {
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(Error::ContextMismatch);
    }
    if f.is_zero() || ideal.contains(f) {
        return Ok(true);
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    let ext = ideal.ring().with_elimination_vars("t", 1);
    let t = Polynomial::variable(&ext, 0);
    let mut gens: Vec<Polynomial> = ideal.gb().iter().map(|g| lift(g, &ext, 1)).collect();
    gens.push(Polynomial::one(&ext).sub(&t.mul(&lift(f, &ext, 1))));
    let basis = reduced_basis(&ext, &gens, 0);
    Ok(matches!(basis.as_slice(), [g] if g.is_unit()))
}
