//! Job files, command dispatch and report rendering for the `frobroot` binary.

pub mod job;
pub mod report;
pub mod run;

pub use job::{load_jobspec, parse_jobspec, JobError, JobSpec, OmegaSpec};
pub use report::{ChartReport, Report, Status};
pub use run::{run_command, Command, ExitCode, RunOptions};
