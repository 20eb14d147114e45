use super::groebner::reduced_basis;
use super::IdealHandle;
use crate::error::{Error, Result};
use crate::ringcore::{same_ring, Monomial, Polynomial, Ring};

/// Generators of the relation module `{ a in A^s : sum a_i g_i ∈ modulo }`.
#[derive(Debug, Clone)]
pub struct SyzygyBasis {
    pub ring: Ring,
    /// Number of module generators, the length of every row.
    pub s: usize,
    pub rows: Vec<Vec<Polynomial>>,
}

impl SyzygyBasis {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Relations among `gens` modulo an ideal.
///
/// Builds the vectors `g_j e_0 + e_j` for the `g_j` followed by the basis of
/// `modulo`, computes a position-over-term module Gröbner basis with `e_0`
/// largest, keeps the elements with no `e_0` component and projects them onto
/// the coordinates of `gens`.
pub fn syzygies(gens: &[Polynomial], modulo: &IdealHandle) -> Result<SyzygyBasis> {
    let ring = modulo.ring();
    if gens.is_empty() {
        return Err(Error::InvalidInput("syzygies need at least one generator".into()));
    }
    for g in gens {
        if !same_ring(g.ring(), ring) {
            return Err(Error::ContextMismatch);
        }
    }
    let s = gens.len();
    let all: Vec<&Polynomial> = gens.iter().chain(modulo.gb()).collect();
    let positions = 1 + all.len();
    let ext = ring.with_elimination_vars("e", positions);
    let n = ring.nvars();
    let shift: Vec<usize> = (0..n).map(|i| i + positions).collect();
    let unit_vector = |k: usize| {
        let mut e = vec![0u32; positions + n];
        e[k] = 1;
        Monomial::from_exponents(e)
    };

    let mut vectors = Vec::with_capacity(all.len());
    for (j, g) in all.iter().enumerate() {
        let lifted = g.map_to_ring(&ext, &shift).mul_term(&unit_vector(0), crate::FieldScalar::ONE);
        let marker = Polynomial::term(&ext, unit_vector(j + 1), crate::FieldScalar::ONE);
        vectors.push(lifted.add(&marker));
    }
    let basis = reduced_basis(&ext, &vectors, positions);

    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    for v in &basis {
        if v.terms().iter().any(|(m, _)| m.exponents()[0] != 0) {
            continue;
        }
        let mut coords: Vec<Vec<(Monomial, crate::FieldScalar)>> = vec![Vec::new(); s];
        for (m, c) in v.terms() {
            let e = m.exponents();
            let pos = (1..positions).find(|&k| e[k] == 1).expect("module element term without position");
            if pos <= s {
                coords[pos - 1].push((Monomial::from_exponents(e[positions..].to_vec()), *c));
            }
        }
        let row: Vec<Polynomial> = coords.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect();
        if row.iter().any(|a| !a.is_zero()) && !rows.contains(&row) {
            rows.push(row);
        }
    }
    Ok(SyzygyBasis { ring: ring.clone(), s, rows })
}
