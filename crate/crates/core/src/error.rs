use std::fmt;

/// Where a parse error was detected in serialized input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// Byte offset into a graph6 string.
    Byte(usize),
    /// 1-based line number of an edge-list document.
    Line(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad parameters or graph data: out-of-range endpoints, loops,
    /// infeasible family parameters, operations that need a connected graph.
    Input(String),
    /// Malformed serialized graph.
    Parse { at: Location, message: String },
    /// Instance exceeds a documented size cap for an exact search or a format.
    Capacity(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn at_byte(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse { at: Location::Byte(offset), message: msg.into() }
    }

    pub fn at_line(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { at: Location::Line(line), message: msg.into() }
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Parse { at: Location::Byte(b), message } => {
                write!(f, "parse error at byte {b}: {message}")
            }
            Error::Parse { at: Location::Line(l), message } => {
                write!(f, "parse error at line {l}: {message}")
            }
            Error::Capacity(msg) => write!(f, "capacity exceeded: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
