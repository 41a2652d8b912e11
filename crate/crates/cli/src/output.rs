use std::path::PathBuf;
use std::process::ExitCode;

use serde_json::{json, Value};

pub const EXIT_GENERAL: u8 = 1;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_VERIFY: u8 = 5;

/// What a command produced: plain text and the JSON payload.
pub struct CommandResult {
    pub command: &'static str,
    pub text: String,
    pub payload: Value,
    /// Set when the command ran but a cross-check disagreed.
    pub mismatch: Option<String>,
}

impl CommandResult {
    pub fn ok(command: &'static str, text: impl Into<String>, payload: Value) -> Self {
        CommandResult {
            command,
            text: text.into(),
            payload,
            mismatch: None,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(sigchrom::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<sigchrom::Error> for CliError {
    fn from(e: sigchrom::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(sigchrom::Error::Parse { .. }) => "parse",
            CliError::Core(e) if e.is_budget() => "budget",
            CliError::Core(_) => "invalid",
            CliError::Io(..) => "io",
            CliError::Usage(_) => "usage",
        }
    }

    fn exit_code(&self) -> u8 {
        match self.kind() {
            "parse" => EXIT_PARSE,
            "budget" => EXIT_BUDGET,
            _ => EXIT_GENERAL,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(path, e) => format!("{}: {e}", path.display()),
            CliError::Usage(msg) => msg.clone(),
        }
    }
}

pub fn emit(result: Result<CommandResult, CliError>, json: bool) -> ExitCode {
    match result {
        Ok(res) => {
            let status = if res.mismatch.is_some() {
                "error"
            } else {
                "ok"
            };
            if json {
                let mut envelope = json!({
                    "status": status,
                    "command": res.command,
                    "payload": res.payload,
                });
                if let Some(why) = &res.mismatch {
                    envelope["error"] = json!({ "kind": "verification", "message": why });
                }
                println!("{envelope}");
            } else {
                print!("{}", res.text);
                if !res.text.ends_with('\n') {
                    println!();
                }
                if let Some(why) = &res.mismatch {
                    eprintln!("error: {why}");
                }
            }
            if res.mismatch.is_some() {
                ExitCode::from(EXIT_VERIFY)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            if json {
                println!(
                    "{}",
                    json!({
                        "status": "error",
                        "error": { "kind": err.kind(), "message": err.message() },
                    })
                );
            } else {
                eprintln!("error: {}", err.message());
            }
            ExitCode::from(err.exit_code())
        }
    }
}
