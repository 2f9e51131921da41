use ladders_core::{Error, ParseError};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    ParseError,
    PreconditionError,
    CheckFailure,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::ParseError => 1,
            Status::PreconditionError => 2,
            Status::CheckFailure => 3,
        }
    }
}

/// Outcome of one command: a status, a structured payload and free-form
/// diagnostics. The text rendering is kept alongside but not serialized.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CommandReport {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl CommandReport {
    pub fn ok(payload: Value, lines: Vec<String>) -> Self {
        Self {
            status: Status::Ok,
            payload,
            diagnostics: Vec::new(),
            lines,
        }
    }

    pub fn failure(status: Status, message: String) -> Self {
        Self {
            status,
            payload: Value::Null,
            diagnostics: vec![message],
            lines: Vec::new(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

impl From<ParseError> for CommandReport {
    fn from(e: ParseError) -> Self {
        CommandReport::failure(Status::ParseError, e.to_string())
    }
}

/// Internal consistency failures map to check failures, everything else is
/// a violated precondition.
impl From<Error> for CommandReport {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Counterexample(_) | Error::ShapeViolation(_) => Status::CheckFailure,
            _ => Status::PreconditionError,
        };
        CommandReport::failure(status, e.to_string())
    }
}
