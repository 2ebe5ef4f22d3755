//! Library half of the `pksums` binary: argument model, command execution,
//! output rendering and the run ledger. Split out so the integration tests can
//! drive the same code the binary runs.

pub mod cli;
pub mod commands;
pub mod config;
pub mod ledger;
pub mod output;

use pksums_core::Error;

/// Exit codes: 0 ok, 2 usage, 3 domain, 4 resource, 5 data.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const DOMAIN: i32 = 3;
    pub const RESOURCE: i32 = 4;
    pub const DATA: i32 = 5;
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Singularity(_) => exit::DOMAIN,
        Error::Resource { .. } => exit::RESOURCE,
        Error::Range { .. } | Error::Format { .. } | Error::Validation { .. } | Error::Io(_) => {
            exit::DATA
        }
    }
}
