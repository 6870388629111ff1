use thiserror::Error;

/// Domain errors shared by every module of the crate.
///
/// `Display` prints the bare error name so that front ends can report a
/// stable token on their diagnostic stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ConicError {
    /// The directrix direction is lightlike (`a^2 = c^2`); the foot
    /// parameter denominator vanishes and no foot point exists.
    #[error("NullDirectrix")]
    NullDirectrix,
    /// The directrix has no direction at all: `(a, c) = (0, 0)` describes a
    /// point, not a line.
    #[error("DegenerateDirectrix")]
    DegenerateDirectrix,
    /// The defining equation vanishes identically (equal foci with
    /// `k^2 = 0`), so its solution set is the whole plane and no quadric
    /// can represent it. Also used to reject the all-zero quadric.
    #[error("DegeneratePlane")]
    DegeneratePlane,
    /// A hyperbolic-rotation pair `(lambda, mu)` with `lambda^2 - mu^2 != 1`.
    #[error("InvalidBoost")]
    InvalidBoost,
    /// Sampling window bounds are not strictly ordered or the resolution is
    /// below two cells per axis.
    #[error("InvalidWindow")]
    InvalidWindow,
    /// The operation is only defined for two-focus specs (ellipse or
    /// hyperbola).
    #[error("UnsupportedSpec")]
    UnsupportedSpec,
}

impl ConicError {
    /// Stable token for reports and process diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            ConicError::NullDirectrix => "NullDirectrix",
            ConicError::DegenerateDirectrix => "DegenerateDirectrix",
            ConicError::DegeneratePlane => "DegeneratePlane",
            ConicError::InvalidBoost => "InvalidBoost",
            ConicError::InvalidWindow => "InvalidWindow",
            ConicError::UnsupportedSpec => "UnsupportedSpec",
        }
    }
}
