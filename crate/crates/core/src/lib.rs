//! Exact machinery for finding and checking *finitistic order witnesses*:
//! given an element of SL₂ over the S-integers of a number field and a target
//! integer `m > 2`, find a prime place 𝔭 at which the element's image in
//! PSL₂(k_𝔭) has order exactly `m`, and package the result as an
//! independently re-checkable certificate.
//!
//! The crate is organized bottom-up:
//!
//! * [`polyarith`] — dense integer/rational polynomials, cyclotomic
//!   polynomials, resultants, Bézout reduction data and the modulus bound
//!   `N(n)` that controls which primes preserve root-of-unity orders.
//! * [`galoisfield`] — finite fields `F_{p^d}`, multiplicative orders,
//!   elements of prescribed order, and factorization of integer polynomials
//!   modulo `p`.
//! * [`numberfield`] — `K = ℚ[x]/(f)`, its elements, places above a rational
//!   prime, and reduction to residue fields.
//! * [`psl2`] — 2×2 determinant-1 matrices over `K` or a finite field, word
//!   evaluation, entrywise reduction, and exact order in PSL₂.
//! * [`witness`] — candidate-prime generation from resultant norms,
//!   certificate construction and independent verification, plus brute-force
//!   empirical scans.
//! * [`sunit`] — bounded enumeration of solutions `u` with `u` and `1−u`
//!   both S-units, and the exceptional trace candidate set built from them.
//!
//! Scans and trace sweeps are data-parallel via rayon when the default
//! `parallel` feature is enabled; disabling it yields a sequential build with
//! identical (deterministically ordered) results.

pub mod galoisfield;
pub mod numberfield;
pub mod polyarith;
pub mod primes;
pub mod psl2;
pub mod sunit;
pub mod witness;

pub use galoisfield::{FFElement, FiniteField, FpPoly};
pub use numberfield::{NFElement, NumberField, Place};
pub use polyarith::{CyclotomicBezout, IntPoly, RatPoly};
pub use psl2::{GroupPreset, MatFF, MatK, Word};
pub use witness::{CertifyOptions, OrderCertificate, ScanHit, WitnessFailure};
