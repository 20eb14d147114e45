mod common;

use common::props::{chain_invariants, fedder_once, stratification_invariants};
use common::*;
use frobroot_core::hslstrat::{
    cover_from_generators, local_hsl, stratify_from_cover, PresentedAlgebra, StratifyOptions,
};
use frobroot_core::IdealHandle;

#[test]
fn fedder_cross_check_and_invariants() {
    let mut rng = rng(0xfedd);
    let mut failures = Vec::new();
    for _ in 0..20 {
        let alg = fedder_once(&mut rng, &mut failures);
        let strat = frobroot_core::hslstrat::stratify(&alg, 10).unwrap();
        for chart in &strat.charts {
            chain_invariants(&alg, &chart.chain, 10, &mut failures);
        }
        stratification_invariants(&alg, &mut failures);
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Two charts from the generators x*f and (x+1)*f of (f)/(f^2); at primes
/// where both x and x+1 are units both charts must report the same HSL.
#[test]
fn chart_consistency() {
    let r = ring(2, 3);
    let f = poly(&r, "x^3+y^3+z^3");
    let j = IdealHandle::new(&r, vec![f.clone()]).unwrap();
    let alg = PresentedAlgebra::gorenstein(j).unwrap();
    let gens = vec![poly(&r, "x").mul(&f), poly(&r, "x + 1").mul(&f)];
    let jp = IdealHandle::new(&r, vec![f.mul(&f)]).unwrap();
    let cover = cover_from_generators(&gens, &jp).unwrap();
    assert_eq!(cover.len(), 2);
    let strat = stratify_from_cover(&alg, cover, &StratifyOptions::default()).unwrap();
    let primes = [
        ideal(&r, &["y", "x + z"]),
        ideal(&r, &["x + y", "z"]),
        ideal(&r, &["x^3+y^3+z^3"]),
    ];
    for prime in &primes {
        assert!(prime.contains(&f));
        let hsls: Vec<usize> = strat
            .charts
            .iter()
            .filter(|c| !prime.contains_ideal(&c.cover))
            .map(|c| c.strata.iter().position(|k| !prime.contains_ideal(k)).unwrap())
            .collect();
        assert_eq!(hsls.len(), 2, "prime {prime:?} should lie in both charts");
        assert_eq!(hsls[0], hsls[1], "charts disagree at {prime:?}");
        assert_eq!(local_hsl(&strat, prime).unwrap(), hsls[0]);
    }
    // The origin lies only in the chart of (x+1)*f and has HSL 1.
    assert_eq!(local_hsl(&strat, &ideal(&r, &["x", "y", "z"])).unwrap(), 1);
    // merged loci agree with the single-chart computation
    let single = frobroot_core::hslstrat::stratify(&alg, 10).unwrap();
    assert_eq!(strat.merged.len(), single.merged.len());
    for (a, b) in strat.merged.iter().zip(&single.merged) {
        assert!(a.same_ideal(b), "{a} vs {b}");
    }
}

/// Twisted cubic cone k[s^3, s^2t, st^2, t^3]: a non-Gorenstein Cohen-Macaulay
/// domain with canonical ideal (a, b) + J.
#[test]
fn non_gorenstein_cone_over_twisted_cubic() {
    let r = frobroot_core::RingContext::grevlex(2, &["a", "b", "c", "d"]).unwrap();
    let j = ideal(&r, &["a*c - b^2", "b*d - c^2", "a*d - b*c"]);
    let omega = IdealHandle::new(&r, j.gens().iter().cloned().chain([poly(&r, "a"), poly(&r, "b")]).collect()).unwrap();
    let alg = PresentedAlgebra::new(j, Some(omega), None).unwrap();
    let strat = frobroot_core::hslstrat::stratify(&alg, 10).unwrap();
    // A normal toric ring is F-regular, so F-injective everywhere. Charts may
    // report a larger bound from primes outside Spec(B), but every Z_e is (1).
    assert!(strat.merged.iter().all(|z| z.is_unit()), "{:?}", strat.merged);
    assert_eq!(strat.charts.len(), 3);
    let origin = ideal(&r, &["a", "b", "c", "d"]);
    assert_eq!(local_hsl(&strat, &origin).unwrap(), 0);
    let mut failures = Vec::new();
    for chart in &strat.charts {
        chain_invariants(&alg, &chart.chain, 10, &mut failures);
    }
    stratification_invariants(&alg, &mut failures);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn parallel_charts_match_sequential() {
    let r = ring(2, 3);
    let f = poly(&r, "x^3+y^3+z^3");
    let alg = PresentedAlgebra::gorenstein(IdealHandle::new(&r, vec![f.clone()]).unwrap()).unwrap();
    let gens = vec![poly(&r, "x").mul(&f), poly(&r, "x + 1").mul(&f), poly(&r, "y").mul(&f)];
    let jp = IdealHandle::new(&r, vec![f.mul(&f)]).unwrap();
    let cover = cover_from_generators(&gens, &jp).unwrap();
    let seq = stratify_from_cover(&alg, cover.clone(), &StratifyOptions { max_e: 10, threads: 1 }).unwrap();
    let par = stratify_from_cover(&alg, cover, &StratifyOptions { max_e: 10, threads: 4 }).unwrap();
    let show = |s: &frobroot_core::hslstrat::Stratification| -> Vec<String> {
        s.charts
            .iter()
            .flat_map(|c| c.chain.l.iter().chain(&c.strata).map(|i| i.to_canonical_string()))
            .chain(s.merged.iter().map(|i| i.to_canonical_string()))
            .collect()
    };
    assert_eq!(show(&seq), show(&par));
}
