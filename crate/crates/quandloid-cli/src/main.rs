mod args;
mod commands;
mod registry;

use clap::Parser;

use args::{Cli, Command};
use registry::Caps;

/// Die quietly on a closed pipe instead of panicking in println.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    let result = Caps::from_env().and_then(|caps| match cli.command {
        Command::Quandle { command } => commands::run_quandle(command, &caps),
        Command::Diagram { command } => commands::run_diagram(command, &caps),
        Command::Color { command } => commands::run_color(command, &caps),
        Command::Dtable(args) => commands::run_dtable(args),
    });
    match result {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            let payload = serde_json::json!({
                "error": { "code": e.code(), "message": e.to_string() }
            });
            eprintln!("{payload}");
            std::process::exit(1);
        }
    }
}
