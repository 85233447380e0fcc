use std::process::ExitCode;

fn main() -> ExitCode {
    isaonto::cli::main_with(std::env::args_os())
}
