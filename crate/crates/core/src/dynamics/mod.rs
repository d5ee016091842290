//! Exponential-weights dynamics in log-ratio coordinates.

mod bounds;
mod construct;
mod detect;
mod flips;
mod sim;
mod state;

pub use bounds::{contraction_map, decay_bounds, two_flip_bound, ContractionMap, DecayBound, TwoFlipBound};
pub use construct::{
    construct_mixed_limit_example, construct_oscillation_identical, construct_oscillation_opposite,
    MixedLimitConstruction, OscillationConstruction,
};
pub use detect::{detect_limit, LimitKind, LimitVerdict, Tolerances};
pub use flips::{flip_events, FlipCounts, FlipEvent, FlipKind, FlipTracker, Potential};
pub use sim::{
    simulate, simulate_from, write_trajectory_csv, Recording, SimOptions, Trajectory, CSV_HEADER,
    DEFAULT_HORIZON,
};
pub use state::{ew_step, relabel_state, strategy_from_log_ratio, DynState, U_CAP};
