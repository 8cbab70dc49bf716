//! Session files, reports and command dispatch for the `jetclosure`
//! command-line tool.

pub mod commands;
pub mod report;
pub mod session;

pub use commands::{run_command, CliError, CommandKind, Options};
pub use report::{CertificateReport, Report};
pub use session::{parse_session, Session, SessionError, SessionErrorKind};
