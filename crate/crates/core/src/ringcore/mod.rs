//! Prime fields, monomials, sparse polynomials, canonical formatting and parsing.

mod context;
mod field;
mod monomial;
mod parse;
mod poly;

pub use context::{same_ring, Ring, RingContext};
pub use field::{is_prime, FieldScalar};
pub use monomial::{Monomial, MonomialOrder, MAX_EXPONENT};
pub use parse::{parse_polynomial, ParseError, ParseErrorKind};
pub use poly::{Polynomial, Term};

/// Arithmetic operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

/// Adds or multiplies two polynomials of the same ring.
pub fn poly_arith(op: ArithOp, a: &Polynomial, b: &Polynomial) -> crate::Result<Polynomial> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

/// Canonical text form: terms descending in the ring order, coefficients in
/// `[1, p)`, unit coefficients omitted, `"0"` for the zero polynomial.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let vars = f.ring().vars();
    let mut out = String::new();
    for (i, (m, c)) in f.terms().iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if c.0 != 1 || m.is_one() {
            factors.push(c.0.to_string());
        }
        for (v, &e) in vars.iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => factors.push(v.clone()),
                _ => factors.push(format!("{v}^{e}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
