//! Buchberger's algorithm with the normal selection strategy, the coprime and
//! chain criteria, and final autoreduction to the reduced basis.
//!
//! The same engine computes module Gröbner bases: a vector `sum f_i e_i` is
//! encoded as a polynomial linear in `k` leading "position" variables under a
//! block order that is lex on the positions (position-over-term). Pairs whose
//! leading terms sit in different positions are never formed.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::ringcore::{FieldScalar, Monomial, Polynomial, Ring, Term};

/// `a + c*m*b` on raw descending term slices.
fn merge_add(ring: &Ring, a: &[Term], c: FieldScalar, m: &Monomial, b: &[Term]) -> Vec<Term> {
    let p = ring.p();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let next_b = |j: &mut usize| -> Option<Term> {
        let t = b.get(*j)?;
        *j += 1;
        Some((t.0.mul(m), t.1.mul(c, p)))
    };
    let mut pending = next_b(&mut j);
    loop {
        match (a.get(i), pending.as_ref()) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(pending.take().unwrap());
                pending = next_b(&mut j);
            }
            (Some(x), Some(y)) => match ring.compare(&x.0, &y.0) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    pending = next_b(&mut j);
                }
                Ordering::Equal => {
                    let s = x.1.add(y.1, p);
                    if !s.is_zero() {
                        out.push((x.0.clone(), s));
                    }
                    i += 1;
                    pending = next_b(&mut j);
                }
            },
        }
    }
    out
}

/// Fully reduces `f` by `divisors`, always using the first divisor (in list
/// order) whose leading monomial divides the current term.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let p = ring.p();
    let divisors: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let inverses: Vec<FieldScalar> = divisors.iter().map(|g| g.lead_coeff().inv(p)).collect();
    let mut rest: Vec<Term> = f.terms().to_vec();
    let mut start = 0;
    let mut remainder: Vec<Term> = Vec::new();
    while start < rest.len() {
        let (m, c) = &rest[start];
        let hit = divisors
            .iter()
            .zip(&inverses)
            .find(|(g, _)| g.lead_monomial().unwrap().divides(m));
        match hit {
            Some((g, inv)) => {
                let q = g.lead_monomial().unwrap().divide_into(m).unwrap();
                let coeff = c.mul(*inv, p).neg(p);
                // The leading terms cancel exactly; merge the tails only.
                let tail = &g.terms()[1..];
                let next = merge_add(&ring, &rest[start + 1..], coeff, &q, tail);
                rest = next;
                start = 0;
            }
            None => {
                remainder.push(rest[start].clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, remainder)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    // f and g are monic.
    let p = f.ring().p();
    let (lf, lg) = (f.lead_monomial().unwrap(), g.lead_monomial().unwrap());
    let mf = lf.divide_into(lcm).unwrap();
    let mg = lg.divide_into(lcm).unwrap();
    let ring = f.ring();
    let a = f.mul_term(&mf, FieldScalar::ONE);
    let terms = merge_add(ring, &a.terms()[1..], FieldScalar(p - 1), &mg, &g.terms()[1..]);
    Polynomial::from_sorted_terms(ring, terms)
}

fn same_position(a: &Monomial, b: &Monomial, positions: usize) -> bool {
    a.exponents()[..positions] == b.exponents()[..positions]
}

/// Reduced Gröbner basis of the ideal (or, with `positions > 0`, of the
/// submodule) generated by `input`, sorted descending by leading monomial.
/// Returns `[1]` for the unit ideal and `[]` for the zero ideal.
pub fn reduced_basis(ring: &Ring, input: &[Polynomial], positions: usize) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut seen: HashSet<Polynomial> = HashSet::new();
    for f in input {
        if f.is_zero() {
            continue;
        }
        if f.is_unit() {
            return vec![Polynomial::one(ring)];
        }
        let f = f.monic();
        if seen.insert(f.clone()) {
            basis.push(f);
        }
    }
    if basis.is_empty() {
        return basis;
    }

    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let add_pairs = |basis: &[Polynomial],
                     new: usize,
                     pairs: &mut Vec<Pair>,
                     pending: &mut HashSet<(usize, usize)>| {
        let ln = basis[new].lead_monomial().unwrap();
        for (i, bi) in basis[..new].iter().enumerate() {
            let li = bi.lead_monomial().unwrap();
            if positions > 0 && !same_position(li, ln, positions) {
                continue;
            }
            pairs.push(Pair { i, j: new, lcm: li.lcm(ln) });
            pending.insert((i, new));
        }
    };
    for k in 0..basis.len() {
        add_pairs(&basis, k, &mut pairs, &mut pending);
    }

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first, ties broken by indices.
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                ring.compare(&pairs[a].lcm, &pairs[b].lcm)
                    .then((pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
            })
            .unwrap();
        let Pair { i, j, lcm } = pairs.swap_remove(best);
        pending.remove(&(i, j));

        let (li, lj) = (basis[i].lead_monomial().unwrap(), basis[j].lead_monomial().unwrap());
        if li.is_coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead_monomial().unwrap().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], &lcm);
        let h = reduce(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return vec![Polynomial::one(ring)];
        }
        basis.push(h.monic());
        let new = basis.len() - 1;
        add_pairs(&basis, new, &mut pairs, &mut pending);
    }

    autoreduce(basis)
}

/// Turns a Gröbner basis into the reduced one.
fn autoreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let ring = basis[0].ring().clone();
    basis.sort_by(|a, b| ring.compare(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.lead_monomial().unwrap();
        if !minimal.iter().any(|h| h.lead_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let g = &minimal[k];
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, h)| h.clone())
            .collect();
        let (lm, lc) = g.lead_term().unwrap().clone();
        let tail = Polynomial::from_sorted_terms(&ring, g.terms()[1..].to_vec());
        let tail = reduce(&tail, &others);
        let mut terms = vec![(lm, lc)];
        terms.extend(tail.into_terms());
        reduced.push(Polynomial::from_sorted_terms(&ring, terms).monic());
    }
    reduced.sort_by(|a, b| ring.compare(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
    reduced
}
