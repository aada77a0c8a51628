use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(pathpower::cli::main_with(std::env::args_os()))
}
