use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let code = figfig::run_cli(std::env::args_os(), &mut stdout, &mut stderr);
    ExitCode::from(code as u8)
}
