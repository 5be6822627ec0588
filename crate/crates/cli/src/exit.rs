use std::fmt;

/// Error classes with a fixed process exit code. Attached to errors as
/// `anyhow` context and recovered by downcasting in `main`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Usage,
    Parse,
    Valuation,
    Data,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Usage => 1,
            Exit::Parse => 2,
            Exit::Valuation => 3,
            Exit::Data => 4,
        }
    }
}

impl fmt::Display for Exit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exit::Usage => "usage error",
            Exit::Parse => "formula does not parse",
            Exit::Valuation => "valuation error",
            Exit::Data => "data error",
        })
    }
}

impl std::error::Error for Exit {}

/// Exit code of an error whose outermost context is an `Exit`; anything
/// unclassified is a data error.
pub fn code_of(err: &anyhow::Error) -> u8 {
    err.downcast_ref::<Exit>().map_or(Exit::Data.code(), |e| e.code())
}
