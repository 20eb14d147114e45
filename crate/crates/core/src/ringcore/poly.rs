use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::context::{same_ring, Ring};
use super::field::FieldScalar;
use super::monomial::{Monomial, MAX_EXPONENT};
use crate::error::{Error, Result};

pub type Term = (Monomial, FieldScalar);

/// A sparse polynomial over `F_p`.
///
/// Terms are kept sorted strictly descending in the ring's monomial order and
/// never carry a zero coefficient, so structural equality is ring equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = FieldScalar::from_i64(c, ring.p());
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn variable(ring: &Ring, index: usize) -> Self {
        Self::term(ring, Monomial::variable(ring.nvars(), index, 1), FieldScalar::ONE)
    }

    pub fn term(ring: &Ring, mono: Monomial, coeff: FieldScalar) -> Self {
        debug_assert_eq!(mono.nvars(), ring.nvars());
        let terms = if coeff.is_zero() { Vec::new() } else { vec![(mono, coeff)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = Term>) -> Self {
        let p = ring.p();
        let mut acc: HashMap<Monomial, FieldScalar> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let slot = acc.entry(m).or_insert(FieldScalar::ZERO);
            *slot = slot.add(FieldScalar::new(c.0 as u64, p), p);
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| ring.compare(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wraps terms that are already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    #[inline]
    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    #[inline]
    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> FieldScalar {
        self.terms.first().map_or(FieldScalar::ZERO, |t| t.1)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn max_exponent(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.max_exponent()).max().unwrap_or(0)
    }

    pub fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn scale(&self, c: FieldScalar) -> Polynomial {
        let p = self.ring.p();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c, p))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Scales so that the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.lead_term() {
            Some((_, c)) if c.0 != 1 => self.scale(c.inv(self.ring.p())),
            _ => self.clone(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(FieldScalar(self.ring.p() - 1))
    }

    /// Multiplication by `c * m`; order-preserving, so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: FieldScalar) -> Polynomial {
        let p = self.ring.p();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a.mul(c, p))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self + c * m * other` by a single merge pass.
    pub fn add_mul_term(&self, c: FieldScalar, m: &Monomial, other: &Polynomial) -> Polynomial {
        let p = self.ring.p();
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, x)| (t.mul(m), x.mul(c, p))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ring.compare(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m1, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let s = c1.add(c2, p);
                    if !s.is_zero() {
                        out.push((m1.clone(), s));
                    }
                }
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        self.add_mul_term(FieldScalar::ONE, &Monomial::one(self.ring.nvars()), other)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let minus_one = FieldScalar(self.ring.p() - 1);
        self.add_mul_term(minus_one, &Monomial::one(self.ring.nvars()), other)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, *c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, *c);
        }
        let p = self.ring.p();
        let mut acc: HashMap<Monomial, FieldScalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let slot = acc.entry(m1.mul(m2)).or_insert(FieldScalar::ZERO);
                *slot = slot.add(c1.mul(*c2, p), p);
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ring = &self.ring;
        terms.sort_unstable_by(|a, b| ring.compare(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u64) -> Result<Polynomial> {
        if k == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if self.max_exponent() as u64 * k > MAX_EXPONENT as u64 {
            return Err(Error::ExponentOverflow(format!(
                "raising a polynomial with exponent {} to the power {k}",
                self.max_exponent()
            )));
        }
        let mut base = self.clone();
        let mut acc: Option<Polynomial> = None;
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul(&base);
        }
        Ok(acc.expect("k > 0"))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.lead_term()?;
        let p = self.ring.p();
        let lc_inv = lc.inv(p);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.lead_term().cloned() {
            let q = lm.divide_into(&m)?;
            let qc = c.mul(lc_inv, p);
            rest = rest.add_mul_term(qc.neg(p), &q, divisor);
            quotient.push((q, qc));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: quotient })
    }

    /// Re-expresses this polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]` of the target ring.
    pub fn map_to_ring(&self, target: &Ring, var_map: &[usize]) -> Polynomial {
        debug_assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[var_map[i]] = x;
            }
            (Monomial::from_exponents(e), *c)
        });
        let mut terms: Vec<Term> = terms.collect();
        terms.sort_unstable_by(|a, b| target.compare(&b.0, &a.0));
        Polynomial { ring: target.clone(), terms }
    }

    /// True if no term involves any of the variables `vars`.
    pub fn avoids_vars(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms.iter().all(|(m, _)| m.exponents()[vars.clone()].iter().all(|&e| e == 0))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in addition");
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in subtraction");
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in multiplication");
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
