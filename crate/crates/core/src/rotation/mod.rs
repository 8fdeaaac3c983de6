mod circle;
mod cycles;
mod interval;
mod orbit;
mod over_rotation;
mod period_set;

pub use circle::{rotation_number_of_cycle, LiftedCircleMap};
pub use cycles::{enumerate_circle_cycles, CircleCycle};
pub use interval::{iteration_bounds, rotation_interval, rotation_number, Endpoint, RotationInterval, MAX_DENOMINATOR};
pub use over_rotation::{
    orp_compare, over_rotation_number, over_rotation_pair, over_rotation_spectrum, OrpOrdering,
    OverRotationPair,
};
pub use period_set::circle_period_set;
