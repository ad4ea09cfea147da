//! Library side of the `galmag` binary: input resolution, reports and the
//! verification battery. `main.rs` only parses arguments and prints.

pub mod battery;
pub mod input;
pub mod report;

use std::fmt;

/// A command failure carrying its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }
}

impl From<galmag::Error> for Failure {
    fn from(e: galmag::Error) -> Self {
        let code = if e.is_cap() { EXIT_CAP } else { EXIT_PARSE };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub type CmdResult<T> = std::result::Result<T, Failure>;
