//! Property checks shared by the integration tests and the acceptance suite.
//! Each returns the list of failure descriptions (empty on success).

use frobroot_core::frobenius::{frobenius_power, ie_operator};
use frobroot_core::hslstrat::{
    f_injective_locus, hsl_chain, local_hsl, strata_ideals, stratify, HslChain, PresentedAlgebra,
};
use frobroot_core::idealops::{ideal_member, ideal_sum, radical_membership};
use frobroot_core::{FieldScalar, IdealHandle, Polynomial};
use rand::seq::SliceRandom;
use rand::Rng;

use super::{
    macaulay_member, random_ideal, random_nonconstant, random_poly, random_structured_ideal, ring, TestRng,
};

/// Adjointness, reflection, additivity, composition, monotonicity and
/// generator independence of `I_e` on one random instance.
pub fn ie_properties_once(rng: &mut TestRng, failures: &mut Vec<String>) {
    let p = *[2u32, 3, 5].choose(rng).unwrap();
    let n = rng.gen_range(1..=3);
    let e = rng.gen_range(1..=2u32);
    let r = ring(p, n);
    let j = random_structured_ideal(rng, &r, e, 3, 4);
    let tag = format!("p={p} e={e} J={j:?}");
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(format!("{what}: {tag}"));
        }
    };

    let ie = ie_operator(&j, e).unwrap();
    let bracket = frobenius_power(&ie, e).unwrap();
    check(bracket.contains_ideal(&j), "J ⊆ I_e(J)^[q]");

    // I_e(J) ⊆ L <=> J ⊆ L^[q], for L near I_e(J)
    let mut candidates: Vec<IdealHandle> = Vec::new();
    let gb = ie.gb().to_vec();
    if gb.len() > 1 {
        let drop = rng.gen_range(0..gb.len());
        let kept = gb.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, g)| g.clone()).collect();
        candidates.push(IdealHandle::new(&r, kept).unwrap());
    }
    let extra = random_ideal(rng, &r, 1, 2, 2);
    candidates.push(ideal_sum(&ie, &extra).unwrap());
    candidates.push(random_ideal(rng, &r, 2, 2, 2));
    if !gb.is_empty() && !ie.is_unit() {
        // a strictly smaller ideal: multiply one generator by a variable
        let mut gens = gb.clone();
        gens[0] = gens[0].mul(&Polynomial::variable(&r, 0));
        candidates.push(IdealHandle::new(&r, gens).unwrap());
    }
    for l in &candidates {
        let lhs = l.contains_ideal(&ie);
        let rhs = frobenius_power(l, e).unwrap().contains_ideal(&j);
        check(lhs == rhs, "I_e(J) ⊆ L <=> J ⊆ L^[q]");
    }

    let l = random_ideal(rng, &r, 3, 4, 4);
    let reflected = ie_operator(&frobenius_power(&l, e).unwrap(), e).unwrap();
    check(reflected.same_ideal(&l), "I_e(L^[q]) = L");

    let j2 = random_structured_ideal(rng, &r, e, 2, 4);
    let lhs = ie_operator(&ideal_sum(&j, &j2).unwrap(), e).unwrap();
    let rhs = ideal_sum(&ie, &ie_operator(&j2, e).unwrap()).unwrap();
    check(lhs.same_ideal(&rhs), "I_e(J1 + J2) = I_e(J1) + I_e(J2)");

    let next = ie_operator(&j, e + 1).unwrap();
    let composed = ie_operator(&ie, 1).unwrap();
    check(next.same_ideal(&composed), "I_{e+1} = I_1 ∘ I_e");

    let bigger = ideal_sum(&j, &j2).unwrap();
    let big_ie = ie_operator(&bigger, e).unwrap();
    check(big_ie.contains_ideal(&ie), "monotonicity");

    let from_gb = ie_operator(&IdealHandle::new(&r, j.gb().to_vec()).unwrap(), e).unwrap();
    check(from_gb.same_ideal(&ie), "independence of generating set");
}

/// Chain invariants: descent, persistence, `K_stab = (1)`, unit rescaling.
pub fn chain_invariants(alg: &PresentedAlgebra, chain: &HslChain, max_e: usize, failures: &mut Vec<String>) {
    let tag = format!("J={:?} u={}", alg.j(), chain.u);
    for w in chain.l.windows(2) {
        if !w[0].contains_ideal(&w[1]) {
            failures.push(format!("descent: {tag}"));
        }
    }
    let p = alg.ring().p();
    for e in 1..chain.nu.len() {
        if chain.nu[e] != chain.nu[e - 1].clone() * p + 1u32 {
            failures.push(format!("nu recurrence: {tag}"));
        }
    }
    let strata = strata_ideals(chain).unwrap();
    if let Some(stab) = chain.stab {
        if !strata[stab].is_unit() {
            failures.push(format!("K_stab = (1): {tag}"));
        }
        // persistence: one more step through the definition
        let after = frobroot_core::hslstrat::chain_term_direct(alg.omega(), &chain.u, stab + 2);
        if let Ok(after) = after {
            if !after.same_ideal(&chain.l[stab + 1]) {
                failures.push(format!("persistence: {tag}"));
            }
        }
    }
    for c in 2..p.min(5) {
        let scaled = hsl_chain(alg, &chain.u.scale(FieldScalar(c)), max_e).unwrap();
        let same_l = scaled.l.len() == chain.l.len()
            && scaled.l.iter().zip(&chain.l).all(|(a, b)| a.same_ideal(b));
        let scaled_k = strata_ideals(&scaled).unwrap();
        let same_k = scaled_k.len() == strata.len() && scaled_k.iter().zip(&strata).all(|(a, b)| a.same_ideal(b));
        if !(same_l && same_k) {
            failures.push(format!("unit rescaling by {c}: {tag}"));
        }
    }
}

/// For a random hypersurface `J = (f)`, Gorenstein: the origin is F-injective
/// per the locus iff `f^{p-1}` is not in `(x_1^p, ..., x_n^p)`.
pub fn fedder_once(rng: &mut TestRng, failures: &mut Vec<String>) -> PresentedAlgebra {
    let p = *[2u32, 3].choose(rng).unwrap();
    let n = rng.gen_range(1..=3);
    let r = ring(p, n);
    let f = random_nonconstant(rng, &r, 4, 4);
    let j = IdealHandle::new(&r, vec![f.clone()]).unwrap();
    let alg = PresentedAlgebra::gorenstein(j).unwrap();
    let z0 = f_injective_locus(&alg, 10).unwrap();
    let origin = IdealHandle::new(&r, (0..n).map(|i| Polynomial::variable(&r, i)).collect()).unwrap();
    let locus_says = !origin.contains_ideal(&z0);
    let bracket = frobenius_power(&origin, 1).unwrap();
    let fedder_says = !bracket.contains(&f.pow(p as u64 - 1).unwrap());
    if locus_says != fedder_says {
        failures.push(format!("Fedder: p={p} f={f} Z_0={z0}"));
    }
    alg
}

/// Strata nesting `V(Z_{e+1}) ⊆ V(Z_e)` and the F-injectivity criterion on
/// single-chart Gorenstein inputs.
pub fn stratification_invariants(alg: &PresentedAlgebra, failures: &mut Vec<String>) {
    let strat = stratify(alg, 10).unwrap();
    let tag = format!("J={:?}", alg.j());
    let cover_sum = strat
        .charts
        .iter()
        .fold(IdealHandle::zero(alg.ring()), |acc, c| ideal_sum(&acc, &c.cover).unwrap());
    if !cover_sum.is_unit() {
        failures.push(format!("cover completeness: {tag}"));
    }
    for w in strat.merged.windows(2) {
        for g in w[1].gb() {
            if !radical_membership(g, &w[0]).unwrap() {
                failures.push(format!("strata nesting: {tag}"));
            }
        }
    }
    if strat.charts.len() == 1 && alg.is_gorenstein() {
        let chart = &strat.charts[0];
        let f_injective = strat.merged[0].is_unit();
        let direct = ie_operator(&alg.omega().scaled_by(&chart.chain.u), 1).unwrap().same_ideal(alg.omega());
        if f_injective != direct {
            failures.push(format!("Omega = I_1(u Omega) criterion: {tag}"));
        }
    }
    // local HSL at the origin agrees with the chart's chain directly
    if let Some(chart) = strat.charts.first() {
        let r = alg.ring();
        let origin = IdealHandle::new(r, (0..r.nvars()).map(|i| Polynomial::variable(r, i)).collect()).unwrap();
        if strat.global_bound.is_some() && origin.contains_ideal(alg.j()) && !origin.contains_ideal(&chart.cover) {
            let hsl = local_hsl(&strat, &origin).unwrap();
            let expected = chart.strata.iter().position(|k| !origin.contains_ideal(k)).unwrap();
            if hsl != expected {
                failures.push(format!("local HSL at origin: {tag}"));
            }
        }
    }
}

pub fn combination(rng: &mut TestRng, gens: &[Polynomial], deg: u32, homogeneous: bool) -> Polynomial {
    let r = gens[0].ring();
    gens.iter().fold(Polynomial::zero(r), |acc, g| {
        acc.add(&random_poly(rng, r, deg, 3, homogeneous).mul(g))
    })
}

/// One GB-versus-Macaulay membership comparison at degree bound
/// `deg(f) + max deg(gens) + 2`. Even cases are homogeneous. Returns whether
/// `f` was a member.
pub fn membership_case(rng: &mut TestRng, case: usize, failures: &mut Vec<String>) -> bool {
    loop {
        let p = *[2u32, 3, 5, 7].choose(rng).unwrap();
        let n = rng.gen_range(1..=3);
        let r = ring(p, n);
        let homogeneous = case.is_multiple_of(2);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = if homogeneous {
            let d = rng.gen_range(1..=3);
            (0..k).map(|_| random_poly(rng, &r, d, 3, true)).collect()
        } else {
            (0..k).map(|_| random_poly(rng, &r, 3, 3, false)).collect()
        };
        if gens.iter().all(Polynomial::is_zero) {
            continue;
        }
        let f = if homogeneous {
            let d = gens.iter().filter_map(|g| g.total_degree()).max().unwrap() as u32 + 1;
            if rng.gen_bool(0.5) {
                random_poly(rng, &r, d, 4, true)
            } else {
                // homogeneous combination of the right degree
                gens.iter().fold(Polynomial::zero(&r), |acc, g| {
                    let dg = g.total_degree().unwrap_or(0) as u32;
                    if g.is_zero() || dg > d {
                        return acc;
                    }
                    acc.add(&random_poly(rng, &r, d - dg, 3, true).mul(g))
                })
            }
        } else {
            let mut f = combination(rng, &gens, 2, false);
            if rng.gen_bool(0.5) {
                f = f.add(&random_poly(rng, &r, 3, 2, false));
            }
            f
        };
        let ideal = IdealHandle::new(&r, gens.clone()).unwrap();
        let max_deg = gens.iter().filter_map(|g| g.total_degree()).max().unwrap() as u32;
        let bound = f.total_degree().unwrap_or(0) as u32 + max_deg + 2;
        let gb_says = ideal_member(&f, &ideal).unwrap();
        if gb_says != macaulay_member(&f, &gens, bound) {
            failures.push(format!("membership case {case}: f = {f}, I = {ideal:?}"));
        }
        return gb_says;
    }
}
