use core::fmt;

/// Errors produced by evaluators in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    /// Input outside the function's domain (the message names the violated constraint).
    Domain(&'static str),
    /// Argument sits on a pole of the gamma/digamma function.
    Pole { arg: f64 },
    /// A term or the result exceeds the representable f64 range.
    Overflow,
    /// The stopping rule did not fire before the term cap.
    NonConvergence { terms: usize },
    /// A nominally real result kept a non-negligible imaginary part.
    ImaginaryResidue { re: f64, im: f64 },
    /// No closed-form registry entry matches the requested key.
    UnknownKey,
    /// A closed form disagrees with its defining derivative beyond tolerance.
    FormulaDiscrepancy { got: f64, expected: f64 },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Domain(msg) => write!(f, "domain error: {msg}"),
            EvalError::Pole { arg } => write!(f, "pole at argument {arg}"),
            EvalError::Overflow => write!(f, "result exceeds f64 range"),
            EvalError::NonConvergence { terms } => {
                write!(f, "series did not converge within {terms} terms")
            }
            EvalError::ImaginaryResidue { re, im } => {
                write!(f, "imaginary residue {im} too large relative to {re}")
            }
            EvalError::UnknownKey => write!(f, "no closed form registered for this key"),
            EvalError::FormulaDiscrepancy { got, expected } => {
                write!(f, "closed form {got} disagrees with derivative {expected}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, EvalError>;
