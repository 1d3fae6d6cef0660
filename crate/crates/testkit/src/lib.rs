//! Reference oracles for the test suites.
//!
//! Everything in this crate is deliberately implemented from first
//! principles, independently of the main library: free-group actions
//! instead of handle reduction, exhaustive relation rewriting instead of
//! normal forms, plain lattice geometry instead of the torus model, a
//! classical Runge–Kutta integrator instead of closed-form solutions.
//! The oracles are slower and smaller in scope than the real
//! implementations; their only job is to be obviously correct.

pub mod artin;
pub mod lattice;
pub mod ode;
pub mod opt;
pub mod rewrite;
