use super::algebra::{frobenius_module_generators, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::frobenius::frobenius_power;
use crate::idealops::{ideal_sum, minors_ideal, syzygies, IdealHandle, PolyMatrix};
use crate::ringcore::Polynomial;

/// For generators `g_1..g_s` of a module `M = (g) + modulo / modulo`, the ideals
/// `m_i` of `(s-1)`-minors of the relation matrix with row `i` deleted: `g_i`
/// generates `M` locally at a prime exactly when `m_i` is not contained in it.
///
/// Fails with `CoverIncomplete` unless the `m_i` sum to the unit ideal.
pub fn cover_from_generators(
    gens: &[Polynomial],
    modulo: &IdealHandle,
) -> Result<Vec<(Polynomial, IdealHandle)>> {
    let ring = modulo.ring();
    let s = gens.len();
    if s == 0 {
        return Err(Error::CoverIncomplete { sum: "(0)".into() });
    }
    if s == 1 {
        return Ok(vec![(gens[0].clone(), IdealHandle::unit(ring))]);
    }
    let relations = syzygies(gens, modulo)?;
    let matrix = PolyMatrix::from_columns(ring, s, &relations.rows)?;
    let mut cover = Vec::with_capacity(s);
    let mut sum = IdealHandle::zero(ring);
    for (i, g) in gens.iter().enumerate() {
        let m = minors_ideal(&matrix.delete_row(i), s - 1);
        sum = ideal_sum(&sum, &m)?;
        cover.push((g.clone(), m));
    }
    if !sum.is_unit() {
        return Err(Error::CoverIncomplete { sum: sum.to_canonical_string() });
    }
    Ok(cover)
}

/// The cover of `Spec(A)` by the open sets where one generator of `U_(1)` suffices.
pub fn generator_cover(alg: &PresentedAlgebra) -> Result<Vec<(Polynomial, IdealHandle)>> {
    let gens = frobenius_module_generators(alg, 1)?;
    let jp = frobenius_power(alg.j(), 1)?;
    cover_from_generators(&gens, &jp)
}
