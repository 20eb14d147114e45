//! Exact computations over quotients of polynomial rings in characteristic p.
//!
//! The crate is layered bottom-up:
//!
//! * [`ringcore`]: prime fields, monomial orders, sparse polynomials and a parser.
//! * [`idealops`]: Buchberger's algorithm and the usual ideal algebra built on it
//!   (intersection, colon, saturation, syzygies, ideals of minors).
//! * [`frobenius`]: bracket powers `I^[p^e]` and the root operator `I_e(-)`.
//! * [`hslstrat`]: Frobenius-map generators, HSL chains, the generator cover and
//!   the stratification of `Spec(A)` by HSL number.
//!
//! ```
//! use frobroot_core::hslstrat::{stratify, PresentedAlgebra};
//! use frobroot_core::ringcore::{parse_polynomial, RingContext};
//! use frobroot_core::IdealHandle;
//!
//! let r = RingContext::grevlex(2, &["x", "y", "z"])?;
//! let f = parse_polynomial(&r, "x^3 + y^3 + z^3")?;
//! let alg = PresentedAlgebra::gorenstein(IdealHandle::new(&r, vec![f])?)?;
//! let strat = stratify(&alg, 10)?;
//! assert_eq!(strat.merged[0].to_string(), "(x, y, z)");
//! assert_eq!(strat.global_bound, Some(1));
//! # Ok::<(), frobroot_core::Error>(())
//! ```

pub mod error;
pub mod frobenius;
pub mod hslstrat;
pub mod idealops;
pub mod ringcore;

pub use error::{Error, Result};
pub use idealops::{IdealHandle, PolyMatrix, SyzygyBasis};
pub use ringcore::{FieldScalar, Monomial, MonomialOrder, Polynomial, Ring, RingContext};
