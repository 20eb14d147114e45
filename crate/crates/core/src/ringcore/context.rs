use std::fmt;
use std::sync::Arc;

use super::field::is_prime;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Shared handle to a polynomial ring. Polynomials and ideals hold one of these.
pub type Ring = Arc<RingContext>;

/// The polynomial ring `F_p[x_1, ..., x_n]` together with a monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    p: u32,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: AsRef<str>>(p: u32, vars: &[S], order: MonomialOrder) -> Result<Ring> {
        if !(2..(1 << 16)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not a prime in [2, 65536)")));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidRing(format!(
                    "block size {k} exceeds the number of variables ({})",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(RingContext { p, vars, order }))
    }

    pub fn grevlex<S: AsRef<str>>(p: u32, vars: &[S]) -> Result<Ring> {
        Self::new(p, vars, MonomialOrder::Grevlex)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.order.compare(a, b)
    }

    /// A name of the form `prefix`, `prefix_1`, ... not already used by this ring.
    pub(crate) fn fresh_name(&self, prefix: &str, taken: &[String]) -> String {
        let mut name = prefix.to_string();
        let mut i = 0;
        while self.vars.contains(&name) || taken.contains(&name) {
            i += 1;
            name = format!("{prefix}_{i}");
        }
        name
    }

    /// Ring with `k` fresh variables prepended and lex-over-grevlex block order
    /// eliminating them.
    pub(crate) fn with_elimination_vars(&self, prefix: &str, k: usize) -> Ring {
        let mut fresh = Vec::with_capacity(k);
        for _ in 0..k {
            let name = self.fresh_name(prefix, &fresh);
            fresh.push(name);
        }
        let mut vars = fresh;
        vars.extend(self.vars.iter().cloned());
        Arc::new(RingContext {
            p: self.p,
            vars,
            order: MonomialOrder::Block(k),
        })
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}] ({})", self.p, self.vars.join(", "), self.order)
    }
}

/// True when both handles denote the same ring.
#[inline]
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
