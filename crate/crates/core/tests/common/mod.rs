//! Shared helpers for the integration and acceptance suites: seeded random
//! polynomials and ideals, and a Macaulay-matrix membership oracle that does
//! not touch the Gröbner engine.
#![allow(dead_code)]

use std::collections::HashMap;

use frobroot_core::ringcore::{parse_polynomial, FieldScalar, Monomial, Polynomial, Ring, RingContext};
use frobroot_core::IdealHandle;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

pub fn ring(p: u32, nvars: usize) -> Ring {
    RingContext::grevlex(p, &VAR_NAMES[..nvars]).unwrap()
}

pub fn poly(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

pub fn ideal(r: &Ring, gens: &[&str]) -> IdealHandle {
    IdealHandle::new(r, gens.iter().map(|g| poly(r, g)).collect()).unwrap()
}

/// Uniform exponent vector of total degree exactly `d`.
pub fn random_monomial_of_degree(rng: &mut TestRng, n: usize, d: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(e)
}

/// Random polynomial with up to `max_terms` terms of total degree at most
/// `max_deg` (exactly `max_deg` when `homogeneous`).
pub fn random_poly(rng: &mut TestRng, r: &Ring, max_deg: u32, max_terms: usize, homogeneous: bool) -> Polynomial {
    let n = r.nvars();
    let k = rng.gen_range(1..=max_terms);
    let terms = (0..k).map(|_| {
        let d = if homogeneous { max_deg } else { rng.gen_range(0..=max_deg) };
        let c = rng.gen_range(1..r.p());
        (random_monomial_of_degree(rng, n, d), FieldScalar(c))
    });
    Polynomial::from_terms(r, terms.collect::<Vec<_>>())
}

/// Nonzero random polynomial of positive degree.
pub fn random_nonconstant(rng: &mut TestRng, r: &Ring, max_deg: u32, max_terms: usize) -> Polynomial {
    loop {
        let f = random_poly(rng, r, max_deg, max_terms, false);
        if !f.is_constant() {
            return f;
        }
    }
}

pub fn random_ideal(rng: &mut TestRng, r: &Ring, max_gens: usize, max_deg: u32, max_terms: usize) -> IdealHandle {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| random_poly(rng, r, max_deg, max_terms, false)).collect();
    IdealHandle::new(r, gens).unwrap()
}

/// Random ideal arranged so that each term `x^(qγ + α)` falls in one of a few residue classes modulo
/// `q = p^e`; plain random generators would almost always give `I_e(J) = (1)`.
pub fn random_structured_ideal(rng: &mut TestRng, r: &Ring, e: u32, max_gens: usize, max_deg: u32) -> IdealHandle {
    let n = r.nvars();
    let q = r.p().pow(e);
    let k = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(k);
    for _ in 0..k {
        if rng.gen_bool(0.1) {
            gens.push(random_poly(rng, r, max_deg, 3, false));
            continue;
        }
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            let alpha: Vec<u32> = (0..n).map(|_| if rng.gen_bool(0.4) { rng.gen_range(0..q) } else { 0 }).collect();
            for _ in 0..rng.gen_range(1..=3) {
                let gamma_deg = if rng.gen_bool(0.15) { 0 } else { rng.gen_range(1..=2) };
                let gamma = random_monomial_of_degree(rng, n, gamma_deg);
                let beta: Vec<u32> = gamma.exponents().iter().zip(&alpha).map(|(g, a)| q * g + a).collect();
                if beta.iter().sum::<u32>() <= max_deg {
                    terms.push((Monomial::from_exponents(beta), FieldScalar(rng.gen_range(1..r.p()))));
                }
            }
        }
        gens.push(Polynomial::from_terms(r, terms));
    }
    IdealHandle::new(r, gens).unwrap()
}

fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur.push(a);
            go(n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Brute-force membership: is `f` an F_p-linear combination of the products
/// `m * g` with `deg(m * g) <= bound`? Sound for membership; complete once the
/// bound covers some representation of `f`.
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let n = f.ring().nvars();
    let p = f.ring().p() as u64;
    let columns = monomials_up_to(n, bound);
    let index: HashMap<&[u32], usize> = columns.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let to_dense = |terms: &[(Monomial, FieldScalar)], shift: &[u32]| -> Option<Vec<u64>> {
        let mut v = vec![0u64; columns.len()];
        for (m, c) in terms {
            let e: Vec<u32> = m.exponents().iter().zip(shift).map(|(a, b)| a + b).collect();
            let &i = index.get(e.as_slice())?;
            v[i] = (v[i] + c.0 as u64) % p;
        }
        Some(v)
    };
    let zero_shift = vec![0u32; n];
    let Some(mut target) = to_dense(f.terms(), &zero_shift) else {
        return false;
    };
    // Rows of the Macaulay matrix, reduced to echelon form incrementally.
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().unwrap() as u32;
        if dg > bound {
            continue;
        }
        for shift in monomials_up_to(n, bound - dg) {
            let mut row = to_dense(g.terms(), &shift).expect("degree within bound");
            for (col, prow) in &pivots {
                let c = row[*col];
                if c != 0 {
                    for (a, b) in row.iter_mut().zip(prow) {
                        *a = (*a + (p - c) * b) % p;
                    }
                }
            }
            if let Some(col) = row.iter().position(|&a| a != 0) {
                let inv = inv_mod(row[col], p);
                for a in row.iter_mut() {
                    *a = *a * inv % p;
                }
                // keep earlier pivots reduced against the new one
                for (_, prow) in pivots.iter_mut() {
                    let c = prow[col];
                    if c != 0 {
                        for (a, b) in prow.iter_mut().zip(&row) {
                            *a = (*a + (p - c) * b) % p;
                        }
                    }
                }
                pivots.push((col, row));
            }
        }
    }
    for (col, prow) in &pivots {
        let c = target[*col];
        if c != 0 {
            for (a, b) in target.iter_mut().zip(prow) {
                *a = (*a + (p - c) * b) % p;
            }
        }
    }
    target.iter().all(|&a| a == 0)
}

pub mod props;
