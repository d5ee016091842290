//! Harness around the `ewgame` library: config parsing, seeded sweeps and the
//! acceptance campaigns.

pub mod campaigns;
pub mod config;
pub mod sweep;
