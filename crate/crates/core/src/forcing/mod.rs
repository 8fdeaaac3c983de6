//! Forcing between interval patterns, computed on P-linear maps.
//!
//! A pattern `A` forces `B` exactly when the P-linear map of `A` has a cycle
//! of pattern `B`, so every question here reduces to exact enumeration of the
//! periodic orbits of one piecewise-linear map.

mod classify;
mod constructions;
mod cycles;
mod loops;
mod poset;

pub use classify::{is_primary, is_twist_up_to, min_entropy_search, Selector, MAX_SEARCH_PERIOD};
pub use constructions::{double_pattern, realize_period_set, realizing_pattern, stefan_pattern};
pub use cycles::{exact_cycles, forced_cycles, forces, periods, resolve_loop, ExactCycle};
pub use loops::{enumerate_loops, Loop};
pub(crate) use loops::walk_lyndon_loops_from;
pub use poset::{forcing_poset, transitive_reduction, ForcingPoset, MAX_POSET_PERIOD};
