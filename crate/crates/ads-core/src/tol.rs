//! Tolerance configuration shared by all modules.

/// Tolerances used by validity checks and finite-difference schemes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Algebraic identities (quadric membership, determinants, tangency).
    pub algebraic: f64,
    /// Finite-difference comparisons (pulled-back metrics, curvatures).
    pub finite_diff: f64,
    /// Step for central differences.
    pub fd_step: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            algebraic: 1e-9,
            finite_diff: 1e-5,
            fd_step: 1e-4,
        }
    }
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        algebraic: 1e-9,
        finite_diff: 1e-5,
        fd_step: 1e-4,
    };
}
