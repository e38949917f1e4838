use core::fmt;

/// Errors raised by the algebra and geometry layers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A spin element failed its unit-norm invariant.
    InvalidElement { norm: f64 },
    /// A Lie bracket left the algebra: residual mass outside the spanned
    /// blades exceeded tolerance.
    BracketNotClosed { residual: f64 },
    /// A matrix failed the Galilei group invariants.
    NotGalilei { residual: f64 },
    /// Newton-Cartan point data violated a structural precondition.
    InvalidInput(&'static str),
    /// Inputs that must come from the same point are mutually inconsistent.
    InconsistentInputs { residual: f64 },
    /// Metric inversion refused: condition number above ceiling.
    IllConditioned { cond: f64 },
    /// Gram-Schmidt pivot collapsed while building the adapted frame.
    DegenerateComplement { pivot: f64 },
    /// A finite-difference stencil does not fit the sampled grid.
    InsufficientSamples,
    /// A connection 1-form direction does not decompose into so(1,0,3).
    NotSo103Valued { residual: f64 },
    /// A field derivative was requested at a grid boundary.
    Boundary,
    /// Nonpositive mass parameter.
    InvalidMass(f64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidElement { norm } => {
                write!(f, "invalid spin element: norm {norm} is not 1")
            }
            Error::BracketNotClosed { residual } => {
                write!(f, "lie bracket left the algebra (residual {residual:e})")
            }
            Error::NotGalilei { residual } => {
                write!(
                    f,
                    "matrix violates Galilei invariants (residual {residual:e})"
                )
            }
            Error::InvalidInput(what) => write!(f, "invalid Newton-Cartan data: {what}"),
            Error::InconsistentInputs { residual } => {
                write!(
                    f,
                    "inputs are not from the same point (residual {residual:e})"
                )
            }
            Error::IllConditioned { cond } => {
                write!(f, "metric too ill-conditioned to invert (cond {cond:e})")
            }
            Error::DegenerateComplement { pivot } => {
                write!(f, "degenerate spatial complement (pivot {pivot:e})")
            }
            Error::InsufficientSamples => write!(f, "grid too small for the FD stencil"),
            Error::NotSo103Valued { residual } => {
                write!(
                    f,
                    "connection form is not so(1,0,3)-valued (residual {residual:e})"
                )
            }
            Error::Boundary => write!(f, "FD stencil out of range at a grid boundary"),
            Error::InvalidMass(m) => write!(f, "mass must be positive, got {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
