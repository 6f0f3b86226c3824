//! Experiment sweeps over powers of cycles and the verification suites.

pub mod sweep;
pub mod verify;

pub use sweep::{
    run_sweep, sidecar_path, write_sidecars, write_sweep_csv, ConjectureMatch, SweepMethod,
    SweepRow, SweepSpec, CSV_HEADER,
};
pub use verify::{run_suite, Check, Report, Suite, VerifyRanges};
