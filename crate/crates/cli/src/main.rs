use std::io::Write;
use std::process::ExitCode;

use belyi_cli::{deliver, run, CommandConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cfg = match CommandConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cfg).and_then(|out| deliver(&cfg, &out).map(|body| (out.success, body)));
    match result {
        Ok((success, body)) => {
            if let Some(body) = body {
                let _ = std::io::stdout().write_all(body.as_bytes());
            }
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
