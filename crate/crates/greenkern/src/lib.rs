//! Command-line front end for `greenkern-core`: output formats, system files,
//! argument parsing and the verification suites behind `greenkern verify`.

pub mod cli;
pub mod oracles;
pub mod output;
pub mod parse;
pub mod system;
pub mod verify;

/// Failures of a CLI invocation, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed flags, files or combinations: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A typed error from the numerical core: exit code 3.
    #[error(transparent)]
    Domain(#[from] greenkern_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    /// `UsageError` or the core error's typed name, e.g. `PoleError`.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Domain(e) => e.kind(),
        }
    }
}

/// Size of the worker pool from `GREENKERN_THREADS`, if set.
pub fn thread_limit() -> Result<Option<usize>, CliError> {
    match std::env::var("GREENKERN_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("GREENKERN_THREADS must be a positive integer, got {v:?}"))),
        },
    }
}

/// Configures the global rayon pool from `GREENKERN_THREADS`.
pub fn init_threads() -> Result<(), CliError> {
    if let Some(n) = thread_limit()? {
        // Fails only if the pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}
