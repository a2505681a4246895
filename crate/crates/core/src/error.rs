use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the numerical core can report.
///
/// The CLI prints [`Error::kind`] on stderr, so the names are part of the
/// external contract.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole of {function} at {re} + {im}i")]
    Pole { function: &'static str, re: f64, im: f64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{what} did not converge within {terms} terms")]
    BudgetExceeded { what: &'static str, terms: usize },
    #[error("quadrature tolerance not met: best value {value_re} + {value_im}i, error estimate {estimate}")]
    ToleranceNotMet { value_re: f64, value_im: f64, estimate: f64 },
    #[error("integrand is not finite at t = {at}")]
    NonFiniteIntegrand { at: f64 },
    #[error("extrapolation diverged: {0}")]
    ExtrapolationDiverged(String),
    #[error("least-squares system is ill-conditioned (condition estimate {condition:e})")]
    IllConditioned { condition: f64 },
    #[error("Q(ζ) - diag(α) is singular at ζ = {re} + {im}i")]
    SingularQ { re: f64, im: f64 },
    #[error("window upper end {upper} reaches the spectrum starting at {threshold}")]
    WindowTouchesSpectrum { upper: f64, threshold: f64 },
}

impl Error {
    /// Stable error name, e.g. `"PoleError"`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "PoleError",
            Error::Domain(_) => "DomainError",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::ToleranceNotMet { .. } => "ToleranceNotMet",
            Error::NonFiniteIntegrand { .. } => "NonFiniteIntegrand",
            Error::ExtrapolationDiverged(_) => "ExtrapolationDiverged",
            Error::IllConditioned { .. } => "IllConditioned",
            Error::SingularQ { .. } => "SingularQ",
            Error::WindowTouchesSpectrum { .. } => "WindowTouchesSpectrum",
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(function: &'static str, z: crate::ComplexArg) -> Self {
        Error::Pole { function, re: z.re, im: z.im }
    }
}
