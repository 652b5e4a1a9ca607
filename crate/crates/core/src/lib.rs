//! Polar codes viewed as monomial codes, their affine automorphisms, and
//! automorphism-ensemble (AE) decoding.
//!
//! The crate covers the full pipeline from code construction to decoding:
//!
//! * [`monomial`] — negative monomials, generating monomial sets and the
//!   universal partial order on bit-channel indices.
//! * [`code`] — polar code objects, butterfly encoding, CRC attachment and
//!   small-code oracles (codebook enumeration, membership tests).
//! * [`construction`] — reliability-based designs (Gaussian-approximation
//!   density evolution, Reed-Muller, externally supplied sequences) and the
//!   UTL design procedure that grows the automorphism group of a code.
//! * [`automorphism`] — admissibility of upper-triangular substitutions,
//!   affine transforms over F2, codeword permutations and brute-force
//!   automorphism counting oracles.
//! * [`decode`] — LLR-based SC, SCL (optionally CRC-aided) and belief
//!   propagation decoders.
//! * [`ae`] — automorphism ensembles and the AE decoder wrapper.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the channel
//! simulator live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ae;
pub mod automorphism;
pub mod code;
pub mod construction;
pub mod decode;
pub mod monomial;

pub use ae::{ae_decode, build_ensemble, select_best, AutomorphismKind, Ensemble};
pub use automorphism::{AffineTransform, BitMatrix, CodewordPermutation, UtlMask};
pub use code::{CrcSpec, PolarCode};
pub use construction::ReliabilitySequence;
pub use decode::{DecodeResult, DecoderSpec};
pub use monomial::{Monomial, MonomialSet};
