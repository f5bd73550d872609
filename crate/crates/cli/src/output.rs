use std::fmt::Display;

use serde::Serialize;

/// Version tag carried by every structured document.
pub const SCHEMA: &str = "skewbrace/1";

/// How a run ends when it does not succeed.
#[derive(Debug)]
pub enum Failure {
    /// A mathematical "no": exit status 1. The answer itself has already been
    /// printed; the message, if any, goes to stderr.
    Negative(Option<String>),
    /// Unreadable, malformed or invalid input: exit status 2.
    Input(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    pub fn message(&self) -> Option<String> {
        match self {
            Failure::Negative(m) => m.clone(),
            Failure::Input(m) => Some(format!("error: {m}")),
        }
    }
}

pub fn input_error(e: impl Display) -> Failure {
    Failure::Input(e.to_string())
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'a str,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

pub fn print_structured<T: Serialize>(command: &str, body: T) {
    let doc = Envelope {
        schema: SCHEMA,
        command,
        body,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("report serialises")
    );
}
