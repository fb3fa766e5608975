use std::process::ExitCode;

use frontal_cli::{parse_job, run_job, CliError};

fn main() -> ExitCode {
    let job = match parse_job(std::env::args_os()) {
        Ok(job) => job,
        Err(CliError::Args(e)) => e.exit(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run_job(&job) {
        Ok(report) => {
            print!("{}", report.summary());
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
