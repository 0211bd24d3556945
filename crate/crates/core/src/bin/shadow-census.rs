use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = shadow_census::cli::run(std::env::args_os(), &mut out, &mut err);
    ExitCode::from(code.clamp(0, 255) as u8)
}
