pub mod check;
pub mod degree;
pub mod hardware;
pub mod pool;
pub mod sim;

use crate::config::ExperimentConfig;
use crate::table::Table;

pub struct Ctx {
    pub cfg: ExperimentConfig,
    pub seed: u64,
}

/// Everything a subcommand produces. Nothing is written until the whole
/// report exists, so a failing command leaves no partial output.
#[derive(Debug, Default)]
pub struct Report {
    pub tables: Vec<Table>,
    /// Summary lines.
    pub notes: Vec<String>,
    /// Machine-readable results, written only to an output directory.
    pub json: Vec<(String, serde_json::Value)>,
    /// False when a check failed; the run still completed.
    pub passed: bool,
}

impl Report {
    pub fn new() -> Self {
        Self {
            passed: true,
            ..Self::default()
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or configuration.
    Usage(anyhow::Error),
    /// Valid inputs that failed while running.
    Run(anyhow::Error),
}

impl From<optocog::Error> for Failure {
    fn from(e: optocog::Error) -> Self {
        use optocog::Error::*;
        match e {
            Domain { .. } | ElementKindMismatch { .. } | InfeasibleDegreeSequence { .. } | Config(_) => {
                Self::Usage(e.into())
            }
            _ => Self::Run(e.into()),
        }
    }
}

pub fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(anyhow::anyhow!("{msg}"))
}

/// Command-line value if given, else the config value.
pub fn pick<T: Clone>(flag: &Option<T>, cfg: &T) -> T {
    flag.clone().unwrap_or_else(|| cfg.clone())
}

/// Command-line list if non-empty, else the config list.
pub fn pick_list<T: Clone>(flag: &[T], cfg: &[T]) -> Vec<T> {
    if flag.is_empty() { cfg } else { flag }.to_vec()
}
