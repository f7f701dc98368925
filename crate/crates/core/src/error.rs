use thiserror::Error;

/// Everything that can go wrong in the models.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the model is defined.
    #[error("{name} = {value} is outside the valid domain: {requirement}")]
    Domain {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// Pool ratios only make sense between elements of the same kind.
    #[error("cannot compare a {left} platform with a {right} platform")]
    ElementKindMismatch {
        left: crate::pool::ElementKind,
        right: crate::pool::ElementKind,
    },

    #[error("infeasible degree sequence: maximum degree {max_degree} needs more than {n_nodes} nodes")]
    InfeasibleDegreeSequence { max_degree: f64, n_nodes: u64 },

    #[error("graph would need about {edges} edges, above the sampling limit of {limit}")]
    GraphTooLarge { edges: f64, limit: u64 },

    /// The giant component is too small for a meaningful path length.
    #[error(
        "giant component holds {giant} of {n_nodes} nodes ({components} components); \
         at least {:.0}% coverage is required", required_coverage * 100.0
    )]
    Disconnected {
        n_nodes: usize,
        giant: usize,
        components: usize,
        required_coverage: f64,
    },

    #[error("simulation exceeded its event cap of {cap} events at t = {time} s; coupling or refractory parameters allow runaway firing")]
    EventCapExceeded { cap: u64, time: f64 },

    #[error("no spikes fall inside the analysis window [{start}, {end}] s")]
    EmptyWindow { start: f64, end: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(
    name: &'static str,
    value: impl Into<f64>,
    requirement: &'static str,
) -> Result<T> {
    Err(Error::Domain {
        name,
        value: value.into(),
        requirement,
    })
}
