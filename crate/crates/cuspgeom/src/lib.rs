//! Computational toolkit for braid orderings and coarse cusp geometry.
//!
//! The crate is organised around three layers:
//!
//! * **Braid arithmetic** — [`braid`] implements words, Garside normal form
//!   and the word problem; [`dehornoy`] implements handle reduction, the
//!   left-order sign test, the order floor and the fractional twist
//!   intervals derived from it; [`band`] implements the syllable-length
//!   metric over the band generating set.
//! * **Cusp models** — [`cusp`] holds the flat-torus model of a cusp
//!   cross-section with its inequality certificates; [`arcgraph`] holds the
//!   pointed arc graph model used to estimate translation distances.
//! * **Quantitative bounds** — [`bound`] evaluates the closed-form constants
//!   and gate checks; [`cone`] carries the cone-deformation tube
//!   computations and their rigorous drift enclosures.
//!
//! Everything here is exact or conservatively rounded: integer and rational
//! arithmetic where the objects are discrete, outward-padded interval
//! arithmetic where they are not.

pub mod arcgraph;
pub mod band;
pub mod bound;
pub mod braid;
pub mod cone;
pub mod cusp;
pub mod dehornoy;
pub mod interval;

pub use arcgraph::{
    ap_adjacent, distance, g_adjacent, lemma17_fdtc_interval, parse_offset, translation_distance,
    ActionSpec, ArcLabel, BaseArcGraph, GraphError, Model, PointedVertex,
};
pub use band::{
    band_generators, conj_min_lt, lt_length, thm4_threshold, thm4_volume_interval, BandGenerator,
    SearchStats, SyllableBound, Thm4Outcome,
};
pub use bound::{
    f_constant, fdtc_geometric_lower_bound, k_squared, k_squared_branches, prop22_gate,
    prop22_volume_interval, tightness_certificate, BoundError, FillingParams, TightnessInput,
};
pub use braid::{braids_equal, half_twist, BraidError, BraidWord, GarsideForm, Permutation};
pub use cone::{
    alpha_l_lower, aux_rate_bound, central_solution, consistent_radius, constant_chain,
    derive_hypothesis_constants, domega_dt_global_bound, drift_enclosure, hypothesis_gate_report,
    lemma28_estimates, omega, omega_alpha_derivative, sup_ratio_constant, tube_boundary,
    tube_to_def1_torus, ChainRow, ConeError, ConeState, HypothesisConstants, TubeBoundary,
};
pub use cusp::{
    cor19_certificate, lemma18_certificate, lemma8_certificate, lemma9_certificate,
    normalized_length, skew, slope_length, thm10_certificate, thm2_certificate, BoundCertificate,
    CuspError, FlatTorus,
};
pub use interval::Interval;

pub use dehornoy::{
    dehornoy_floor, fdtc_interval, handle_reduce, sigma_class, FdtcInterval, OrderError,
    SigmaClass,
};
