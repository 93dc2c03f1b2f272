use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(totaldom::cli::run(std::env::args()) as u8)
}
