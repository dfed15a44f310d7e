//! Kinematics derived from the split-octonion signal geometry: the
//! wavelength-momentum map, boost-induced uncertainty ratios, the spin
//! vector, generalized velocity addition with Doppler-rate terms, the
//! parity-asymmetric aberration formulas, eikonal and conserved-action
//! checks along null trajectories, the modified free-particle Lagrangian,
//! and the maximal force and mass bounds.
//!
//! All formulas take explicit physical constants; the defaults are natural
//! units `c = hbar = G = 1`.

use thiserror::Error;

use crate::autom::AutomorphismParams;
use crate::TOL_ZERO;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub c: f64,
    pub hbar: f64,
    pub g: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::natural()
    }
}

impl PhysicalConstants {
    pub fn natural() -> Self {
        Self { c: 1.0, hbar: 1.0, g: 1.0 }
    }

    /// CODATA SI values.
    pub fn si() -> Self {
        Self {
            c: 299_792_458.0,
            hbar: 1.054_571_817e-34,
            g: 6.674_30e-11,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KinError {
    #[error("zero momentum: the wavelength map needs p^2 > 0")]
    ZeroMomentum,
    #[error("singular frame: velocity-addition denominator {denominator:e} is within tolerance of zero")]
    SingularFrame { denominator: f64 },
    #[error("virtual regime: Lagrangian radicand {radicand:e} is negative")]
    VirtualRegime { radicand: f64 },
    #[error("sample {index}: null-interval condition violated (residual {residual:e})")]
    NotNullTrajectory { index: usize, residual: f64 },
    #[error("trajectory needs at least 3 samples, got {got}")]
    InsufficientSamples { got: usize },
}

/// Wavelength 3-vector `lam^n = hbar p^n / p^2`.
pub fn wavelengths(p: [f64; 3], consts: &PhysicalConstants) -> Result<[f64; 3], KinError> {
    let p2: f64 = p.iter().map(|v| v * v).sum();
    if p2 == 0.0 {
        return Err(KinError::ZeroMomentum);
    }
    Ok([
        consts.hbar * p[0] / p2,
        consts.hbar * p[1] / p2,
        consts.hbar * p[2] / p2,
    ])
}

/// Position, momentum, velocity, and the derived wavelengths of one signal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicState {
    pub x: [f64; 3],
    pub p: [f64; 3],
    pub v: [f64; 3],
    pub lam: [f64; 3],
}

impl KinematicState {
    pub fn new(
        x: [f64; 3],
        p: [f64; 3],
        v: [f64; 3],
        consts: &PhysicalConstants,
    ) -> Result<Self, KinError> {
        Ok(Self {
            x,
            p,
            v,
            lam: wavelengths(p, consts)?,
        })
    }
}

/// Spin vector `sigma_n = (1/hbar) eps_{nmk} x^m p^k`, the cross product
/// characterizing the relative rotation of x and lam orthogonal to the
/// velocity planes.
pub fn spin_vector(x: [f64; 3], p: [f64; 3], consts: &PhysicalConstants) -> [f64; 3] {
    [
        (x[1] * p[2] - x[2] * p[1]) / consts.hbar,
        (x[2] * p[0] - x[0] * p[2]) / consts.hbar,
        (x[0] * p[1] - x[1] * p[0]) / consts.hbar,
    ]
}

/// One invariant-ratio check of the boost transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioCheck {
    pub delta_x: f64,
    pub delta_lam: f64,
    /// Expected ratio `delta_x / delta_lam`.
    pub expected: f64,
    /// Cross-multiplied residual `|delta_x * x + delta_lam * lam|`, immune
    /// to vanishing denominators; second order in the boost angle.
    pub residual: f64,
}

/// Report of the boost-invariant ratios and the uncertainty products.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyReport {
    pub theta: f64,
    /// Zero boost makes both deltas vanish and the ratios vacuous.
    pub vacuous: bool,
    /// `dx2/dlam2` against `-lam3/x3`.
    pub ratio12: RatioCheck,
    /// `dx3/dlam3` against `-lam2/x2`.
    pub ratio13: RatioCheck,
    /// Per-axis product proxy `hbar |x_n| / |lam_n|`; at least `hbar`
    /// whenever `|x_n| >= |lam_n|`, saturating at equality.
    pub products: [f64; 3],
}

/// Transform a state by the finite boost along axis 1 with the second angle
/// switched off, and report the two invariant ratios plus the implied
/// uncertainty products.
pub fn uncertainty_ratios(
    state: &KinematicState,
    theta1: f64,
    consts: &PhysicalConstants,
) -> UncertaintyReport {
    let map = AutomorphismParams::Boost {
        axis: 1,
        theta: theta1,
        phi: 0.0,
    }
    .coordinate_map();
    let s = crate::SplitOctonion::new(0.0, state.lam, state.x, 0.0);
    let out = map.apply(&s);
    let dx = [
        out.x[0] - state.x[0],
        out.x[1] - state.x[1],
        out.x[2] - state.x[2],
    ];
    let dlam = [
        out.lam[0] - state.lam[0],
        out.lam[1] - state.lam[1],
        out.lam[2] - state.lam[2],
    ];
    let ratio12 = RatioCheck {
        delta_x: dx[1],
        delta_lam: dlam[1],
        expected: -state.lam[2] / state.x[2],
        residual: (dx[1] * state.x[2] + dlam[1] * state.lam[2]).abs(),
    };
    let ratio13 = RatioCheck {
        delta_x: dx[2],
        delta_lam: dlam[2],
        expected: -state.lam[1] / state.x[1],
        residual: (dx[2] * state.x[1] + dlam[2] * state.lam[1]).abs(),
    };
    let mut products = [0.0; 3];
    for n in 0..3 {
        products[n] = consts.hbar * (state.x[n] / state.lam[n]).abs();
    }
    UncertaintyReport {
        theta: theta1,
        vacuous: theta1 == 0.0,
        ratio12,
        ratio13,
        products,
    }
}

/// Generalized velocity addition for a boost `tanh(theta1) = V/c` along
/// axis 1. The transverse components pick up the Doppler-rate terms with
/// opposite signs.
pub fn velocity_add(
    v: [f64; 3],
    theta1: f64,
    lamdot2: f64,
    lamdot3: f64,
    consts: &PhysicalConstants,
) -> Result<[f64; 3], KinError> {
    let t = theta1.tanh();
    let denominator = 1.0 - t * v[0] / consts.c;
    if denominator.abs() <= TOL_ZERO {
        return Err(KinError::SingularFrame { denominator });
    }
    Ok([
        (v[0] - consts.c * t) / denominator,
        (v[1] - t * lamdot3) / denominator,
        (v[2] + t * lamdot2) / denominator,
    ])
}

/// Which orthogonal plane the aberration is measured in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AberrationPlane {
    /// (x1, x2) plane: the Doppler-rate term enters with a minus sign.
    X1X2,
    /// (x1, x3) plane: plus sign.
    X1X3,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aberration {
    pub delta: f64,
    /// The first-order formula is only trusted for |V|/c < 0.1.
    pub beyond_validity: bool,
}

/// First-order aberration shift `(V/c) sin(gamma) -+ (V/c^2) lamdot`, with
/// the sign of the Doppler-rate term depending on the plane. The asymmetry
/// between the two planes is the parity-violating effect.
pub fn aberration(
    gamma: f64,
    speed: f64,
    lamdot_orth: f64,
    plane: AberrationPlane,
    consts: &PhysicalConstants,
) -> Aberration {
    let vc = speed / consts.c;
    let doppler = speed / (consts.c * consts.c) * lamdot_orth;
    let delta = match plane {
        AberrationPlane::X1X2 => vc * gamma.sin() - doppler,
        AberrationPlane::X1X3 => vc * gamma.sin() + doppler,
    };
    Aberration {
        delta,
        beyond_validity: vc.abs() >= 0.1,
    }
}

/// Free-particle Lagrangian `-m c^2 sqrt(1 - v^2/c^2 + hbar^2 pdot^2 /
/// (c^2 p^4))`. A negative radicand is the virtual regime and is reported,
/// not clamped.
pub fn lagrangian(
    m: f64,
    v: [f64; 3],
    p: [f64; 3],
    pdot: [f64; 3],
    consts: &PhysicalConstants,
) -> Result<f64, KinError> {
    let p2: f64 = p.iter().map(|x| x * x).sum();
    if p2 == 0.0 {
        return Err(KinError::ZeroMomentum);
    }
    let v2: f64 = v.iter().map(|x| x * x).sum();
    let pdot2: f64 = pdot.iter().map(|x| x * x).sum();
    let c2 = consts.c * consts.c;
    let radicand = 1.0 - v2 / c2 + consts.hbar * consts.hbar * pdot2 / (c2 * p2 * p2);
    if radicand < 0.0 {
        return Err(KinError::VirtualRegime { radicand });
    }
    Ok(-m * c2 * radicand.sqrt())
}

/// Maximal force `m^2 c^3 / hbar` on signals carried by a particle of mass m.
pub fn max_force(m: f64, consts: &PhysicalConstants) -> f64 {
    m * m * consts.c.powi(3) / consts.hbar
}

/// Maximal mass `sqrt(hbar c / G)` a physical signal can carry.
pub fn max_mass(consts: &PhysicalConstants) -> f64 {
    (consts.hbar * consts.c / consts.g).sqrt()
}

/// Deviation `|grad . grad - 1|` from the unit-gradient (eikonal) condition
/// of photon trajectories.
pub fn eikonal_residual(grad: [f64; 3]) -> f64 {
    let g2: f64 = grad.iter().map(|x| x * x).sum();
    (g2 - 1.0).abs()
}

/// One sample of a world line: time, the scalar (action) coordinate, the
/// spatial position, and the wavelength vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub w: f64,
    pub x: [f64; 3],
    pub lam: [f64; 3],
}

/// Relative tolerance for the null-interval precondition along a trajectory.
pub const NULL_TOLERANCE: f64 = 1e-6;

/// Check conservation of the action coordinate along a null world line.
///
/// At each interior sample (central differences) the null condition
/// `wdot^2 = c^2 (1 - v^2/c^2 + lamdot^2/c^2)` must hold to
/// [`NULL_TOLERANCE`] times the local scale. The returned value is the
/// largest deviation of `|wdot| - c sqrt(1 - v^2/c^2 + lamdot^2/c^2)` from
/// zero, i.e. how far the differentiated action relation drifts; it is
/// O(dt^2) for a sampled solution.
pub fn action_conservation(
    samples: &[TrajectorySample],
    consts: &PhysicalConstants,
) -> Result<f64, KinError> {
    if samples.len() < 3 {
        return Err(KinError::InsufficientSamples { got: samples.len() });
    }
    let c2 = consts.c * consts.c;
    let mut worst = 0.0f64;
    for i in 1..samples.len() - 1 {
        let prev = &samples[i - 1];
        let next = &samples[i + 1];
        let dt = next.t - prev.t;
        let wdot = (next.w - prev.w) / dt;
        let mut v2 = 0.0;
        let mut lamdot2 = 0.0;
        for n in 0..3 {
            let vn = (next.x[n] - prev.x[n]) / dt;
            let ln = (next.lam[n] - prev.lam[n]) / dt;
            v2 += vn * vn;
            lamdot2 += ln * ln;
        }
        let radicand = 1.0 - v2 / c2 + lamdot2 / c2;
        let null_residual = (wdot * wdot - c2 * radicand).abs();
        let scale = wdot * wdot + c2 + v2 + lamdot2;
        if radicand < 0.0 || null_residual > NULL_TOLERANCE * scale {
            return Err(KinError::NotNullTrajectory {
                index: i,
                residual: null_residual,
            });
        }
        worst = worst.max((wdot.abs() - consts.c * radicand.sqrt()).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    const NAT: PhysicalConstants = PhysicalConstants { c: 1.0, hbar: 1.0, g: 1.0 };

    #[test]
    fn wavelengths_fixed_values() {
        assert_eq!(wavelengths([1.0, 0.0, 0.0], &NAT).unwrap(), [1.0, 0.0, 0.0]);
        assert_eq!(wavelengths([2.0, 0.0, 0.0], &NAT).unwrap(), [0.5, 0.0, 0.0]);
        let lam = wavelengths([3.0, 4.0, 0.0], &NAT).unwrap();
        assert!((lam[0] - 0.12).abs() <= 1e-15);
        assert!((lam[1] - 0.16).abs() <= 1e-15);
        assert_eq!(lam[2], 0.0);
        assert!(matches!(wavelengths([0.0; 3], &NAT), Err(KinError::ZeroMomentum)));
    }

    #[test]
    fn wavelength_inverse_scaling() {
        let p = [0.4, -1.1, 2.3];
        let a = 3.7;
        let lam = wavelengths(p, &NAT).unwrap();
        let scaled = wavelengths([a * p[0], a * p[1], a * p[2]], &NAT).unwrap();
        for n in 0..3 {
            assert!((scaled[n] - lam[n] / a).abs() <= 1e-15);
        }
    }

    #[test]
    fn spin_vector_cross_product() {
        assert_eq!(spin_vector([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], &NAT), [0.0, 0.0, 1.0]);
        // parallel momentum gives zero
        assert_eq!(spin_vector([2.0, -1.0, 0.5], [4.0, -2.0, 1.0], &NAT), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn spin_vector_matches_epsilon_sum() {
        // brute-force epsilon contraction as the oracle
        let x = [0.3, -1.2, 0.7];
        let p = [1.9, 0.4, -0.8];
        let hbar = 2.5;
        let consts = PhysicalConstants { c: 1.0, hbar, g: 1.0 };
        let got = spin_vector(x, p, &consts);
        for n in 1..=3usize {
            let mut acc = 0.0;
            for m in 1..=3usize {
                for k in 1..=3usize {
                    acc += crate::algebra::epsilon(n, m, k) * x[m - 1] * p[k - 1];
                }
            }
            assert!((got[n - 1] - acc / hbar).abs() <= 1e-15);
        }
    }

    #[test]
    fn velocity_add_light_speed_fixed_point() {
        let v = velocity_add([1.0, 0.0, 0.0], 0.8, 0.0, 0.0, &NAT).unwrap();
        assert_eq!(v, [1.0, 0.0, 0.0]);
    }

    #[test]
    fn velocity_add_fixed_transverse() {
        // v = (0, u, 0), tanh(theta) = b, lamdot3 = d: v2' = u - b d
        let u = 0.4;
        let d = 1.7;
        let theta = 0.6f64;
        let b = theta.tanh();
        let v = velocity_add([0.0, u, 0.0], theta, 0.0, d, &NAT).unwrap();
        assert!((v[1] - (u - b * d)).abs() <= 1e-15);
        assert!((v[0] + b).abs() <= 1e-15);
    }

    #[test]
    fn velocity_add_singular_frame() {
        // v1 = c / tanh(theta) makes the denominator vanish
        let theta = 0.5f64;
        let v1 = 1.0 / theta.tanh();
        assert!(matches!(
            velocity_add([v1, 0.0, 0.0], theta, 0.0, 0.0, &NAT),
            Err(KinError::SingularFrame { .. })
        ));
    }

    #[test]
    fn velocity_add_longitudinal_matches_textbook() {
        let theta = 1.2f64;
        let big_v = theta.tanh();
        for v1 in [-0.9, -0.3, 0.0, 0.45, 0.99] {
            let got = velocity_add([v1, 0.0, 0.0], theta, 0.0, 0.0, &NAT).unwrap();
            let expect = (v1 - big_v) / (1.0 - big_v * v1);
            assert!((got[0] - expect).abs() <= 1e-15);
            assert_eq!(got[1], 0.0);
            assert_eq!(got[2], 0.0);
        }
    }

    #[test]
    fn aberration_fixed_values() {
        // classical limit
        let a = aberration(0.3, 0.01, 0.0, AberrationPlane::X1X2, &NAT);
        assert!((a.delta - 0.01 * 0.3f64.sin()).abs() <= 1e-15);
        assert!(!a.beyond_validity);
        // gamma = 0: pure Doppler terms with opposite signs
        let d = 1.3;
        let a12 = aberration(0.0, 0.01, d, AberrationPlane::X1X2, &NAT);
        let a13 = aberration(0.0, 0.01, d, AberrationPlane::X1X3, &NAT);
        assert!((a12.delta + 0.01 * d).abs() <= 1e-15);
        assert!((a13.delta - 0.01 * d).abs() <= 1e-15);
        // V = 0
        assert_eq!(aberration(0.7, 0.0, d, AberrationPlane::X1X2, &NAT).delta, 0.0);
        // validity flag
        assert!(aberration(0.7, 0.2, d, AberrationPlane::X1X2, &NAT).beyond_validity);
    }

    #[test]
    fn aberration_parity_identity() {
        // the Doppler terms cancel in the sum of the two planes
        let (gamma, speed, d) = (0.37, 0.05, 2.2);
        let a12 = aberration(gamma, speed, d, AberrationPlane::X1X2, &NAT).delta;
        let a13 = aberration(gamma, speed, d, AberrationPlane::X1X3, &NAT).delta;
        let expect = 2.0 * speed * gamma.sin();
        assert!((a12 + a13 - expect).abs() <= 1e-14);
    }

    #[test]
    fn lagrangian_fixed_values() {
        let p = [1.0, 0.0, 0.0];
        assert_eq!(lagrangian(1.0, [0.0; 3], p, [0.0; 3], &NAT).unwrap(), -1.0);
        let l = lagrangian(1.0, [0.6, 0.0, 0.0], p, [0.0; 3], &NAT).unwrap();
        assert!((l + 0.8).abs() <= 1e-12);
        // |v| = c with pdot != 0: radicand is the positive quantum term
        let l = lagrangian(1.0, [1.0, 0.0, 0.0], p, [0.5, 0.0, 0.0], &NAT).unwrap();
        assert!((l + 0.5).abs() <= 1e-12);
        // virtual regime reported with its radicand
        match lagrangian(1.0, [2.0, 0.0, 0.0], p, [0.0; 3], &NAT) {
            Err(KinError::VirtualRegime { radicand }) => assert!((radicand + 3.0).abs() <= 1e-12),
            other => panic!("expected VirtualRegime, got {other:?}"),
        }
    }

    #[test]
    fn lagrangian_magnitude_grows_with_pdot() {
        let p = [0.8, 0.0, 0.0];
        let v = [0.3, 0.0, 0.0];
        let mut last = lagrangian(1.0, v, p, [0.0; 3], &NAT).unwrap().abs();
        for pd in [0.1, 0.2, 0.4] {
            let l = lagrangian(1.0, v, p, [pd, 0.0, 0.0], &NAT).unwrap().abs();
            assert!(l > last);
            last = l;
        }
    }

    #[test]
    fn bounds_fixed_values() {
        assert_eq!(max_force(1.0, &NAT), 1.0);
        assert_eq!(max_mass(&NAT), 1.0);
        // maximal force scales as m^2
        assert_eq!(max_force(3.0, &NAT), 9.0 * max_force(1.0, &NAT));
        // SI evaluation lands on the Planck-mass scale
        let m = max_mass(&PhysicalConstants::si());
        assert!((m - 2.18e-8).abs() / 2.18e-8 < 0.01, "max mass {m}");
    }

    #[test]
    fn eikonal_fixed_values() {
        assert_eq!(eikonal_residual([1.0, 0.0, 0.0]), 0.0);
        assert!(eikonal_residual([0.6, 0.8, 0.0]) <= 1e-15);
        assert_eq!(eikonal_residual([1.0, 1.0, 0.0]), 1.0);
    }

    fn quadrature_trajectory(
        v: [f64; 3],
        lamdot: [f64; 3],
        steps: usize,
        dt: f64,
    ) -> Vec<TrajectorySample> {
        // constant-rate motion; w from trapezoid quadrature of the action rate
        let v2: f64 = v.iter().map(|x| x * x).sum();
        let l2: f64 = lamdot.iter().map(|x| x * x).sum();
        let rate = -(1.0 - v2 + l2).sqrt();
        let mut out = Vec::with_capacity(steps);
        let mut w = 0.0;
        for i in 0..steps {
            let t = i as f64 * dt;
            out.push(TrajectorySample {
                t,
                w,
                x: [v[0] * t, v[1] * t, v[2] * t],
                lam: [lamdot[0] * t, lamdot[1] * t, lamdot[2] * t],
            });
            w += rate * dt;
        }
        out
    }

    #[test]
    fn action_conserved_on_constant_velocity_trajectory() {
        let samples = quadrature_trajectory([0.4, 0.1, 0.0], [0.05, 0.0, 0.2], 50, 1e-3);
        let dev = action_conservation(&samples, &NAT).unwrap();
        assert!(dev <= 1e-10, "deviation {dev}");
    }

    #[test]
    fn static_particle_slope_is_exact() {
        // v = 0, lamdot = 0: w(t) = -c t, central differences land exactly
        let samples: Vec<TrajectorySample> = (0..20)
            .map(|i| {
                let t = i as f64 * 0.125;
                TrajectorySample { t, w: -t, x: [0.0; 3], lam: [0.0; 3] }
            })
            .collect();
        assert_eq!(action_conservation(&samples, &NAT).unwrap(), 0.0);
    }

    #[test]
    fn non_null_trajectory_rejected() {
        let mut samples = quadrature_trajectory([0.4, 0.0, 0.0], [0.0; 3], 20, 1e-2);
        for s in &mut samples {
            s.w *= 1.5; // breaks the null condition
        }
        assert!(matches!(
            action_conservation(&samples, &NAT),
            Err(KinError::NotNullTrajectory { .. })
        ));
    }

    #[test]
    fn too_few_samples_rejected() {
        assert!(matches!(
            action_conservation(&[], &NAT),
            Err(KinError::InsufficientSamples { got: 0 })
        ));
    }

    #[test]
    fn uncertainty_ratio_residuals_second_order() {
        let state = KinematicState {
            x: [0.9, 1.1, 1.3],
            p: [0.0; 3],
            v: [0.0; 3],
            lam: [0.5, 0.6, 0.7],
        };
        let report = uncertainty_ratios(&state, 1e-4, &NAT);
        assert!(!report.vacuous);
        assert!(report.ratio12.residual <= 1e-8, "{:?}", report.ratio12);
        assert!(report.ratio13.residual <= 1e-8, "{:?}", report.ratio13);
        // measured ratios approach the expected invariants
        let measured12 = report.ratio12.delta_x / report.ratio12.delta_lam;
        assert!((measured12 - report.ratio12.expected).abs() <= 1e-3);
    }

    #[test]
    fn uncertainty_vacuous_at_zero_boost() {
        let state = KinematicState {
            x: [1.0, 1.0, 1.0],
            p: [0.0; 3],
            v: [0.0; 3],
            lam: [0.5, 0.5, 0.5],
        };
        let report = uncertainty_ratios(&state, 0.0, &NAT);
        assert!(report.vacuous);
        assert_eq!(report.ratio12.delta_x, 0.0);
        assert_eq!(report.ratio12.delta_lam, 0.0);
    }

    #[test]
    fn uncertainty_product_saturates_at_boundary() {
        let state = KinematicState {
            x: [0.8, -0.6, 0.4],
            p: [0.0; 3],
            v: [0.0; 3],
            lam: [0.8, 0.6, -0.4],
        };
        let report = uncertainty_ratios(&state, 1e-5, &NAT);
        for p in report.products {
            assert!((p - 1.0).abs() <= 1e-12);
        }
    }
}
