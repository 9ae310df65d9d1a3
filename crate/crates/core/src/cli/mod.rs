//! The `m0n` command line.
//!
//! Exit codes: 0 success (or every identity verified), 1 a verification
//! failed, 2 usage error.

mod args;
mod render;
mod verify;

use std::ffi::OsString;

use clap::Parser;

pub use args::{Cli, Command, OutputFormat, Target};

use crate::error::Error;

/// Largest `n` for stratum enumeration unless raised by [`STRATA_GUARD_ENV`].
pub const DEFAULT_STRATA_MAX_N: usize = 8;
pub const STRATA_GUARD_ENV: &str = "M0N_STRATA_MAX_N";
pub const MAX_SERIES_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub(crate) enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::NotPrimePower { .. }
            | Error::UnsupportedField(_)
            | Error::ResourceGuard { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub(crate) fn strata_limit() -> usize {
    std::env::var(STRATA_GUARD_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .map_or(DEFAULT_STRATA_MAX_N, |v: usize| v.max(DEFAULT_STRATA_MAX_N))
}

pub(crate) fn guard_strata(n: usize) -> Result<(), Failure> {
    let limit = strata_limit();
    if n > limit {
        return Err(usage(format!(
            "stratum enumeration for n = {n} exceeds the limit {limit} (raise with {STRATA_GUARD_ENV})"
        )));
    }
    Ok(())
}

pub(crate) fn guard_order(order: usize) -> Result<(), Failure> {
    if order > MAX_SERIES_ORDER {
        return Err(usage(format!("series order {order} exceeds the limit {MAX_SERIES_ORDER}")));
    }
    Ok(())
}

/// Parses arguments and runs one command, capturing its output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (code, body, stderr) = match execute(&cli) {
        Ok((body, all_pass)) => (if all_pass { 0 } else { 1 }, body, String::new()),
        Err(Failure::Usage(m)) => (2, String::new(), format!("error: {m}\n")),
        Err(Failure::Verification(m)) => (1, String::new(), format!("verification error: {m}\n")),
    };
    if let (Some(path), true) = (&cli.output, code != 2) {
        if let Err(e) = std::fs::write(path, &body) {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
        return Outcome { code, stdout: String::new(), stderr };
    }
    Outcome { code, stdout: body, stderr }
}

fn execute(cli: &Cli) -> Result<(String, bool), Failure> {
    let fmt = cli.format;
    let ok = |s: String| Ok((s, true));
    match &cli.command {
        Command::Poincare { n } => ok(render::poincare(*n, fmt)?),
        Command::Betti { n, k } => ok(render::betti(*n, *k, fmt)?),
        Command::Count { n, q } => ok(render::count(*n, *q, fmt)?),
        Command::Strata { n, q } => ok(render::strata(*n, *q, fmt)?),
        Command::Zeta { n, p, order } => ok(render::zeta(*n, *p, *order, fmt)?),
        Command::Getzler { order } => ok(render::getzler(*order, fmt)?),
        Command::Verify { target, max_n, q, order } => {
            let qs = verify::parse_q_list(q)?;
            let reports = verify::run(*target, *max_n, &qs, *order)?;
            let pass = crate::report::all_pass(&reports);
            Ok((render::reports(&reports, fmt)?, pass))
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_and_verification_errors_are_separated() {
        assert!(matches!(Failure::from(Error::UnsupportedField(4)), Failure::Usage(_)));
        assert!(matches!(
            Failure::from(Error::OddDoubleCount { n: 5, sum: "3".into() }),
            Failure::Verification(_)
        ));
        assert!(matches!(
            Failure::from(Error::Invariant("x".into())),
            Failure::Verification(_)
        ));
    }

    #[test]
    fn failing_reports_render_and_fail() {
        let bad = crate::report::VerificationReport::compare("demo", &[("n", "4".into())], &1, &2);
        assert!(!crate::report::all_pass([&bad]));
        let text = render::reports(&[bad], OutputFormat::Plain).ok().unwrap_or_default();
        assert!(text.lines().any(|l| l.starts_with("FAIL demo")), "{text}");
    }

    #[test]
    fn guards_reject_oversized_inputs() {
        assert!(matches!(guard_order(MAX_SERIES_ORDER + 1), Err(Failure::Usage(_))));
        assert!(guard_order(MAX_SERIES_ORDER).is_ok());
    }
}
