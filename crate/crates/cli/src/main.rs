use std::io::{self, Write};
use std::process::ExitCode;

use capgame_cli::{run, Settings, SCALE_ENV};

fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let env = std::env::var(SCALE_ENV).ok();
    let code = match Settings::from_env_value(env.as_deref(), &mut err) {
        Ok(settings) => run(std::env::args_os(), settings, &mut out, &mut err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
