use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let (code, stdout, stderr) = hollowlat_cli::invoke(std::env::args_os());
    if let Some(text) = stdout {
        let mut out = std::io::stdout().lock();
        // A closed pipe is not worth a panic.
        let _ = out.write_all(text.as_bytes());
        let _ = out.flush();
    }
    if let Some(msg) = stderr {
        eprintln!("{}", msg.trim_end());
    }
    ExitCode::from(code as u8)
}
