use std::process::ExitCode;

fn main() -> ExitCode {
    atomarch_cli::run()
}
