mod common;

use common::props::{combination, membership_case};
use common::*;
use frobroot_core::idealops::{
    ideal_colon, ideal_intersection, ideal_saturation, radical_membership, syzygies,
};
use frobroot_core::{IdealHandle, Polynomial};
use rand::seq::SliceRandom;
use rand::Rng;

#[test]
fn membership_agrees_with_macaulay_oracle() {
    let mut rng = rng(0x6b0b);
    let mut failures = Vec::new();
    let mut members = 0;
    for case in 0..120 {
        members += membership_case(&mut rng, case, &mut failures) as usize;
    }
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(members > 20, "too few positive membership cases ({members})");
}

#[test]
fn reduced_gb_is_independent_of_generating_set() {
    let mut rng = rng(7);
    for _ in 0..60 {
        let p = *[2u32, 3, 5].choose(&mut rng).unwrap();
        let r = ring(p, 3);
        let i = random_ideal(&mut rng, &r, 3, 3, 3);
        let mut shuffled: Vec<Polynomial> = i.gens().to_vec();
        shuffled.shuffle(&mut rng);
        shuffled.push(i.gens()[0].clone());
        shuffled.push(combination(&mut rng, i.gens(), 1, false));
        let scaled: Vec<Polynomial> =
            shuffled.iter().map(|g| g.scale(frobroot_core::FieldScalar(rng.gen_range(1..p)))).collect();
        let j = IdealHandle::new(&r, scaled).unwrap();
        assert_eq!(i.gb(), j.gb());
        // every generator reduces to zero against the basis and vice versa
        for g in i.gens() {
            assert!(j.reduce(g).is_zero());
        }
        for g in i.gb() {
            assert!(IdealHandle::new(&r, i.gens().to_vec()).unwrap().contains(g));
        }
    }
}

#[test]
fn colon_and_intersection_adjunctions() {
    let mut rng = rng(11);
    for _ in 0..25 {
        let p = *[2u32, 3, 5].choose(&mut rng).unwrap();
        let r = ring(p, rng.gen_range(2..=3));
        let a = random_ideal(&mut rng, &r, 2, 2, 3);
        let b = random_ideal(&mut rng, &r, 2, 2, 3);
        let meet = ideal_intersection(&a, &b).unwrap();
        assert!(a.contains_ideal(&meet) && b.contains_ideal(&meet));
        // products lie in both
        for g in a.gens() {
            for h in b.gens() {
                assert!(meet.contains(&g.mul(h)));
            }
        }
        let colon = ideal_colon(&a, &b).unwrap();
        for c in colon.gb() {
            for g in b.gens() {
                assert!(a.contains(&c.mul(g)));
            }
        }
        // a random f with f*Q ⊆ I must lie in the colon
        let f = a.gens()[0].clone();
        assert!(colon.contains(&f));
        let sat = ideal_saturation(&a, &b).unwrap().ideal;
        assert!(ideal_colon(&sat, &b).unwrap().same_ideal(&sat));
    }
}

#[test]
fn radical_membership_sanity() {
    let mut rng = rng(13);
    for _ in 0..20 {
        let r = ring(3, 3);
        let f = random_nonconstant(&mut rng, &r, 2, 3);
        let g = random_nonconstant(&mut rng, &r, 2, 3);
        let i = IdealHandle::new(&r, vec![f.pow(3).unwrap().mul(&g)]).unwrap();
        assert!(radical_membership(&f.mul(&g), &i).unwrap());
    }
}

#[test]
fn syzygy_rows_are_relations() {
    let mut rng = rng(17);
    for _ in 0..20 {
        let p = *[2u32, 3, 5].choose(&mut rng).unwrap();
        let r = ring(p, 3);
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3)).map(|_| random_nonconstant(&mut rng, &r, 2, 3)).collect();
        let modulo = random_ideal(&mut rng, &r, 2, 3, 2);
        let syz = syzygies(&gens, &modulo).unwrap();
        for row in &syz.rows {
            assert_eq!(row.len(), gens.len());
            let combo = row.iter().zip(&gens).fold(Polynomial::zero(&r), |acc, (a, g)| acc.add(&a.mul(g)));
            assert!(modulo.contains(&combo));
        }
        // Koszul relations g_j e_i - g_i e_j are in the row module's span
        // (checked coordinate-wise on the first coordinate ideal).
        if gens.len() >= 2 {
            let first = IdealHandle::new(&r, syz.rows.iter().map(|row| row[0].clone()).collect()).unwrap();
            assert!(first.contains(&gens[1]));
        }
    }
}
