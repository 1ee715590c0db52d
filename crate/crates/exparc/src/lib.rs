//! Exponential arcs between states.
//!
//! An exponential arc connects a state `y` to a faithful reference state `x`
//! through `γ(t) = e^{−ζ(t)} X^{t/2} x`, where `X` is the Radon–Nikodym
//! operator of `y` relative to `x` taken in the commutant, and
//! `ζ(t) = log ‖X^{t/2} x‖` is the normalization function. All of the arc
//! calculus — ζ and its derivatives, subarcs, inversion, reparametrization,
//! Legendre duality — depends only on the spectral data `(λ_k, w_k)` of `X`
//! as seen by `x`. This crate implements that calculus once and reconstructs
//! the carriers separately:
//!
//! - [`spectral`]: Hermitian eigendecomposition and matrix functions with an
//!   explicit support/tolerance policy.
//! - [`arc`]: the carrier-independent calculus on `(λ_k, w_k)` pairs.
//! - [`classical`]: arcs between probability vectors (diagonal algebra),
//!   optionally quadrature-weighted to model densities on a grid.
//! - [`quantum`]: arcs between density matrices via
//!   `ρ_t ∝ ρ_x^{1/2} [ρ_x^{-1/2} ρ_y ρ_x^{-1/2}]^t ρ_x^{1/2}`, and the
//!   log-geodesic they differ from when the endpoints do not commute.
//! - [`standard_form`]: the finite-dimensional modular toolbox on ℂⁿ⊗ℂⁿ
//!   (S, J, Δ, modular flow, cones) used as an independent oracle.
//! - [`verify`]: the seeded property-verification suite surfaced by the CLI.

pub mod arc;
pub mod classical;
pub mod error;
pub mod io;
pub mod quantum;
pub mod sample;
pub mod spectral;
pub mod standard_form;
pub mod verify;

pub use error::{Error, Result};
