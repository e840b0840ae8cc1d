//! Exact computer algebra for the enveloping algebras U(gl(N)), the
//! Weyl-Laurent operator algebra D'(n), their tensor product, and the maps
//! between them: the homomorphism rho from U(gl(n+1)) into
//! D'(n) tensor U(gl(n)), Harish-Chandra projections, Capelli-type
//! determinants, Gelfand invariants, the central extension U' and its
//! projection, and highest-weight module actions.
//!
//! All coefficients are exact rationals and all elements live in canonical
//! normal forms, so identity checks are zero-tolerance equalities. The
//! `suite` module groups the checks into named verification suites; the CLI
//! and the Python bindings are thin layers over it.

pub mod capelli;
pub mod cpoly;
pub mod dops;
pub mod error;
pub mod gelfand;
pub mod hc;
pub mod homs;
pub mod laurent;
pub mod repmod;
pub mod ring;
pub mod sample;
pub mod scalar;
pub mod suite;
pub mod tensor;
pub mod tpoly;
pub mod ugl;
pub mod uprime;

pub use capelli::{capelli, capelli_minor, CapelliVariant};
pub use cpoly::CPoly;
pub use dops::{euler, DopElement, DopMono};
pub use error::{Check, Error, Failure, Result};
pub use gelfand::{f_m, gelfand_g, r_k};
pub use hc::{chi, chi_0n, ell, tau, HcImage};
pub use homs::{gamma, iota_g, iota_s, pi_g, rho_s, RhoFault, RhoMap};
pub use laurent::{series_div, series_mul, LaurentTail};
pub use repmod::{is_antidominant, lambda_tilde, tensor_act, verma_act, TensorModVector, VermaVector, Weight};
pub use ring::Ring;
pub use scalar::Q;
pub use suite::{run_suite, run_suite_with, Hooks, Report, SuiteName, SuiteParams, SuiteSpec};
pub use tensor::{r1, r2, TensorCtx, TensorElement};
pub use tpoly::{matrix_substitute, NcMatrix, TPoly};
pub use ugl::{from_adapted, in_g1_ideal, to_adapted, AdaptedElement, GlRank, PbwMono, UglElement};
pub use uprime::{pi_g_prime, reduce_mod_capelli, uhat, UPrimeElement};
