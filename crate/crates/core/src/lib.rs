//! Exact combinatorial dynamics of one-dimensional maps.
//!
//! The crate covers the Sharkovsky ordering and its initial segments, cycle
//! patterns of interval maps together with their connect-the-dots (P-linear)
//! representatives, Markov graphs and pattern entropy, the forcing relation
//! between patterns computed by exact periodic-orbit enumeration, over-rotation
//! pairs, and rotation theory for degree-one circle maps.
//!
//! All combinatorial decisions are made in exact integer or rational
//! arithmetic. Floating point only appears in entropy values and in the
//! enclosures of irrational rotation numbers.

pub mod error;
pub mod forcing;
pub mod markov;
pub mod pattern;
pub mod plmap;
pub mod rotation;
pub mod sharkovsky;
pub mod spectral;

pub use error::{Error, Result};
pub use forcing::{
    double_pattern, enumerate_loops, forced_cycles, forces, forcing_poset, is_primary,
    is_twist_up_to, min_entropy_search, periods, realize_period_set, realizing_pattern,
    resolve_loop, stefan_pattern, ExactCycle, ForcingPoset, Loop, Selector,
};
pub use markov::{markov_graph, TransitionMatrix};
pub use pattern::{pattern_of_cycle, patterns_of_period, Pattern};
pub use plmap::{p_linear_map, PLMap};
pub use rotation::{
    circle_period_set, enumerate_circle_cycles, orp_compare, over_rotation_number,
    over_rotation_pair, over_rotation_spectrum, rotation_interval, rotation_number_of_cycle,
    CircleCycle, Endpoint, LiftedCircleMap, OrpOrdering, OverRotationPair, RotationInterval,
};
pub use sharkovsky::{initial_segment, sharkovsky_compare, SharkovskyElement, SharkovskyKey};
pub use spectral::{pattern_entropy, spectral_radius};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;
