use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(msg) = hyperind::cli::init_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = hyperind::cli::run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
