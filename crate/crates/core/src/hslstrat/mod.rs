//! HSL numbers of top local cohomology and the stratification of `Spec(A)`.
//!
//! For `B = A/J` with canonical ideal `Ω/J`, the Frobenius maps on the top
//! local cohomology are parametrized by `U_(e) = V_e / J^[p^e]` where
//! `V_e = (J^[p^e] : J) ∩ (Ω^[p^e] : Ω)`. Wherever a generator `u` of `U_(1)`
//! generates it locally, the HSL number is the first `e` with
//! `L_e = L_{e+1}`, where `L_e = I_e(u^{ν_e} Ω)` and `ν_e = 1 + p + ... + p^{e-1}`.

mod algebra;
mod chain;
mod cover;
mod strat;

pub use algebra::{frobenius_module_generators, PresentedAlgebra};
pub use chain::{chain_term_direct, hsl_chain, nu, strata_ideals, HslChain};
pub use cover::{cover_from_generators, generator_cover};
pub use strat::{
    f_injective_locus, local_hsl, stratify, stratify_from_cover, stratify_with, Chart, StratifyOptions,
    Stratification, StratificationStatus, DEFAULT_MAX_E,
};
