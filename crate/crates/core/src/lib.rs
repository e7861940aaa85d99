//! Entropy-conservative and entropy-stable discretizations of the isothermal
//! and polytropic Euler equations.
//!
//! The crate provides the pressure law and entropy analysis
//! ([`eos`], [`equations`]), numerically stable interface means ([`means`]),
//! two-point flux kernels in one to three space dimensions ([`flux`]), a
//! first-order finite volume scheme built on those kernels ([`fv`]), and
//! split-form discontinuous Galerkin spectral element solvers on periodic
//! Cartesian meshes ([`dg1d`], [`dg2d`]) with summation-by-parts operators
//! ([`sbp`]) and low-storage Runge-Kutta time integration ([`timeint`]).
//! [`harness`] drives the convergence and entropy-conservation experiments
//! behind the `polytrope` command line tool.

pub mod dg1d;
pub mod dg2d;
pub mod eos;
pub mod equations;
pub mod error;
pub mod flux;
pub mod fv;
pub mod harness;
pub mod mesh;
pub mod means;
pub mod sbp;
pub mod state;
pub mod timeint;

pub use eos::EquationOfState;
pub use error::{Error, Result};
pub use flux::NumericalFlux;
pub use state::{State, State1, State2, State3};
