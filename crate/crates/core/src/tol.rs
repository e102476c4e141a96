//! Numeric policy for the auxiliary-field solver.

/// Relative residual allowed on the virial identity p0 T'(p0) = r0 V'(r0)
/// at a returned solution.
pub const VIRIAL_RESIDUAL_REL: f64 = 1e-10;

/// Geometric expansions allowed while hunting for a sign change of the
/// extremization function.
pub const BRACKET_MAX_DOUBLINGS: usize = 200;

/// Bisection iterations once a bracket is found (more than enough to reach
/// f64 resolution from any bracket the expansion can produce).
pub const BISECT_ITERS: usize = 200;

/// Relative agreement required between a supplied derivative closure and a
/// central finite difference of the value closure.
pub const DERIV_CONSISTENCY_REL: f64 = 1e-5;

/// Probe radii used for derivative-consistency checks and convexity
/// classification (intersected with the potential's domain).
pub const PROBE_RADII: [f64; 5] = [0.31, 0.7, 1.3, 2.7, 5.1];

/// Points per decade on the logarithmic grid used by the bound classifier.
pub const CLASSIFY_GRID: usize = 48;

/// Span of the classifier grid in units of the probe interval.
pub const CLASSIFY_R_MIN: f64 = 0.05;
pub const CLASSIFY_R_MAX: f64 = 50.0;
