use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(excitable::cli::run(std::env::args_os()))
}
