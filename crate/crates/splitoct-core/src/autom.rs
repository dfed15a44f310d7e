//! The three explicit automorphism families of the noncompact G2 group as
//! exact linear maps on octonion coefficients, their induced coordinate
//! transformations, the infinitesimal form, the Poincare-type limit, and the
//! Gell-Mann form of the diagonal family.
//!
//! Each family rotates two orthogonal planes per fixed axis: compact angle
//! pairs `(alpha, beta)` around a pseudovector axis, hyperbolic pairs
//! `(theta, phi)` around a vector axis, and the two-parameter abelian
//! diagonal family `(k1, k2)` fixing the pseudoscalar. Maps are stored as
//! basis-image matrices (active transformations) acting on coefficient
//! vectors ordered `(w, lam, x, ct)`.
//!
//! Coordinate transformations carry a per-family orientation: compact
//! rotations act on coordinates inversely to the basis rotation, while the
//! hyperbolic families act along it. That convention is what makes the
//! small-angle limit agree term by term with [`infinitesimal`].

use thiserror::Error;

use crate::algebra::{epsilon, mul, SplitOctonion, DIM, ETA};

/// An automorphism as an 8x8 coefficient matrix. Fixes the scalar slot and
/// preserves both the product and the (4,4) norm form.
#[derive(Debug, Clone, PartialEq)]
pub struct AutomorphismMap {
    m: [[f64; DIM]; DIM],
}

impl AutomorphismMap {
    pub fn identity() -> Self {
        let mut m = [[0.0; DIM]; DIM];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { m }
    }

    pub fn matrix(&self) -> &[[f64; DIM]; DIM] {
        &self.m
    }

    /// Active action on an octonion: coefficients map through the matrix.
    pub fn apply(&self, s: &SplitOctonion) -> SplitOctonion {
        let c = s.coeffs();
        let mut out = [0.0; DIM];
        for (i, row) in self.m.iter().enumerate() {
            out[i] = row.iter().zip(c.iter()).map(|(a, b)| a * b).sum();
        }
        SplitOctonion::from_coeffs(out)
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &AutomorphismMap) -> AutomorphismMap {
        let mut m = [[0.0; DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                m[i][j] = (0..DIM).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        AutomorphismMap { m }
    }

    /// Inverse through eta-orthogonality: `m^{-1} = eta m^T eta`.
    pub fn inverse(&self) -> AutomorphismMap {
        let mut m = [[0.0; DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                m[i][j] = ETA[i] * self.m[j][i] * ETA[j];
            }
        }
        AutomorphismMap { m }
    }

    /// Largest deviation of `m^T eta m` from `eta`.
    pub fn eta_orthogonality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..DIM {
            for j in 0..DIM {
                let mut acc = 0.0;
                for k in 0..DIM {
                    acc += self.m[k][i] * ETA[k] * self.m[k][j];
                }
                let expect = if i == j { ETA[i] } else { 0.0 };
                worst = worst.max((acc - expect).abs());
            }
        }
        worst
    }

    /// Restriction to the seven vector coordinates, reordered
    /// `(lam1..3, ct, x1..3)` to match the generator frame.
    pub fn coordinate_matrix7(&self) -> [[f64; 7]; 7] {
        const MAP: [usize; 7] = [1, 2, 3, 7, 4, 5, 6];
        let mut out = [[0.0; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                out[i][j] = self.m[MAP[i]][MAP[j]];
            }
        }
        out
    }
}

fn set_column(m: &mut [[f64; DIM]; DIM], col: usize, entries: &[(usize, f64)]) {
    for row in m.iter_mut() {
        row[col] = 0.0;
    }
    for &(row, v) in entries {
        m[row][col] = v;
    }
}

/// Rotation family around the pseudovector axis `j_1` by compact angles
/// `(alpha, beta)`: the `(j2,j3)` plane turns by alpha, `(J1,I)` by beta,
/// and the induced `(J2,J3)` turn is by `alpha - beta`.
fn rotation_axis1(alpha: f64, beta: f64) -> [[f64; DIM]; DIM] {
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let (cb, sb) = (beta.cos(), beta.sin());
    let (cab, sab) = ((alpha - beta).cos(), (alpha - beta).sin());
    let mut m = AutomorphismMap::identity().m;
    set_column(&mut m, 1, &[(1, cb), (7, sb)]); // J1' = J1 cos b + I sin b
    set_column(&mut m, 2, &[(2, cab), (3, sab)]); // J2' = J2 cos(a-b) + J3 sin(a-b)
    set_column(&mut m, 3, &[(3, cab), (2, -sab)]); // J3' = J3 cos(a-b) - J2 sin(a-b)
    set_column(&mut m, 5, &[(5, ca), (6, sa)]); // j2' = j2 cos a + j3 sin a
    set_column(&mut m, 6, &[(6, ca), (5, -sa)]); // j3' = j3 cos a - j2 sin a
    set_column(&mut m, 7, &[(7, cb), (1, -sb)]); // I' = I cos b - J1 sin b
    m
}

/// Boost family around the vector axis `J_1` by hyperbolic angles
/// `(theta, phi)`: the `(j1,I)` plane boosts by theta and the four remaining
/// units mix through the half-angle combinations `(phi +- theta)/2`.
fn boost_axis1(theta: f64, phi: f64) -> [[f64; DIM]; DIM] {
    let (cht, sht) = (theta.cosh(), theta.sinh());
    let hp = 0.5 * (phi + theta);
    let hm = 0.5 * (phi - theta);
    let (chp, shp) = (hp.cosh(), hp.sinh());
    let (chm, shm) = (hm.cosh(), hm.sinh());
    let mut m = AutomorphismMap::identity().m;
    set_column(&mut m, 2, &[(2, chp), (6, shp)]); // J2' = J2 ch+ + j3 sh+
    set_column(&mut m, 3, &[(3, chm), (5, shm)]); // J3' = J3 ch- + j2 sh-
    set_column(&mut m, 4, &[(4, cht), (7, -sht)]); // j1' = j1 ch t - I sh t
    set_column(&mut m, 5, &[(5, chm), (3, shm)]); // j2' = j2 ch- + J3 sh-
    set_column(&mut m, 6, &[(6, chp), (2, shp)]); // j3' = j3 ch+ + J2 sh+
    set_column(&mut m, 7, &[(7, cht), (4, -sht)]); // I' = I ch t - j1 sh t
    m
}

/// Diagonal family fixing `I`: per axis n the `(j_n, J_n)` pair boosts by the
/// hyperbolic angle `k_n` with `k3 = -(k1 + k2)`.
fn diagonal_map(k1: f64, k2: f64) -> [[f64; DIM]; DIM] {
    let ks = [k1, k2, -(k1 + k2)];
    let mut m = AutomorphismMap::identity().m;
    for n in 1..=3usize {
        let (ch, sh) = (ks[n - 1].cosh(), ks[n - 1].sinh());
        set_column(&mut m, n, &[(n, ch), (3 + n, sh)]); // J_n' = J_n ch + j_n sh
        set_column(&mut m, 3 + n, &[(3 + n, ch), (n, sh)]); // j_n' = j_n ch + J_n sh
    }
    m
}

/// Cyclic relabelling `1 -> 2 -> 3 -> 1` on both the J and j triples; an
/// algebra automorphism, used to transport the axis-1 families to axes 2, 3.
fn cyclic_permutation(shift: usize) -> [[f64; DIM]; DIM] {
    let mut m = [[0.0; DIM]; DIM];
    m[0][0] = 1.0;
    m[7][7] = 1.0;
    for n in 0..3 {
        let target = (n + shift) % 3;
        m[1 + target][1 + n] = 1.0;
        m[4 + target][4 + n] = 1.0;
    }
    m
}

fn conjugate_by_permutation(shift: usize, m: [[f64; DIM]; DIM]) -> [[f64; DIM]; DIM] {
    if shift == 0 {
        return m;
    }
    let p = cyclic_permutation(shift);
    let pinv = cyclic_permutation((3 - shift) % 3);
    let pm = mat_mul(&p, &m);
    mat_mul(&pm, &pinv)
}

fn mat_mul(a: &[[f64; DIM]; DIM], b: &[[f64; DIM]; DIM]) -> [[f64; DIM]; DIM] {
    let mut out = [[0.0; DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            out[i][j] = (0..DIM).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Rotation automorphism with fixed axis `j_n`, compact angles `(alpha, beta)`.
pub fn build_rotation(n: u8, alpha: f64, beta: f64) -> AutomorphismMap {
    assert!((1..=3).contains(&n), "rotation axis must be 1..=3");
    AutomorphismMap {
        m: conjugate_by_permutation(n as usize - 1, rotation_axis1(alpha, beta)),
    }
}

/// Boost automorphism with fixed axis `J_n`, hyperbolic angles `(theta, phi)`.
pub fn build_boost(n: u8, theta: f64, phi: f64) -> AutomorphismMap {
    assert!((1..=3).contains(&n), "boost axis must be 1..=3");
    AutomorphismMap {
        m: conjugate_by_permutation(n as usize - 1, boost_axis1(theta, phi)),
    }
}

/// Diagonal (Cartan) automorphism, hyperbolic angles `(k1, k2)`.
pub fn build_diagonal(k1: f64, k2: f64) -> AutomorphismMap {
    AutomorphismMap {
        m: diagonal_map(k1, k2),
    }
}

/// Trace-free reparameterization: `k_n = varphi_n - mean(varphi)`, returning
/// `(k1, k2)`; the implied third angle is `-(k1 + k2)`.
pub fn k_from_varphi(varphi: [f64; 3]) -> (f64, f64) {
    let mean = (varphi[0] + varphi[1] + varphi[2]) / 3.0;
    (varphi[0] - mean, varphi[1] - mean)
}

/// Parameters of one automorphism family member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AutomorphismParams {
    Rotation { axis: u8, alpha: f64, beta: f64 },
    Boost { axis: u8, theta: f64, phi: f64 },
    Diagonal { k1: f64, k2: f64 },
}

impl AutomorphismParams {
    /// The basis-image (active) matrix.
    pub fn map(&self) -> AutomorphismMap {
        match *self {
            AutomorphismParams::Rotation { axis, alpha, beta } => build_rotation(axis, alpha, beta),
            AutomorphismParams::Boost { axis, theta, phi } => build_boost(axis, theta, phi),
            AutomorphismParams::Diagonal { k1, k2 } => build_diagonal(k1, k2),
        }
    }

    /// The induced transformation of the seven coordinates.
    ///
    /// Compact rotations transform coordinates with the inverse of the basis
    /// map; the hyperbolic families transform them directly. The small-angle
    /// limit of this map reproduces [`infinitesimal`] term by term.
    pub fn coordinate_map(&self) -> AutomorphismMap {
        match *self {
            AutomorphismParams::Rotation { axis, alpha, beta } => {
                build_rotation(axis, -alpha, -beta)
            }
            _ => self.map(),
        }
    }

    /// The matching infinitesimal parameter direction.
    pub fn infinitesimal_direction(&self) -> InfinitesimalParams {
        let mut p = InfinitesimalParams::default();
        match *self {
            AutomorphismParams::Rotation { axis, alpha, beta } => {
                p.alpha[axis as usize - 1] = alpha;
                p.beta[axis as usize - 1] = beta;
            }
            AutomorphismParams::Boost { axis, theta, phi } => {
                p.boost_theta[axis as usize - 1] = theta;
                p.boost_phi[axis as usize - 1] = phi;
            }
            AutomorphismParams::Diagonal { k1, k2 } => {
                p.diag_phi = [k1, k2, -(k1 + k2)];
            }
        }
        p
    }
}

/// The fifteen raw angles of the infinitesimal coordinate transformation.
/// Only the trace-free part of `diag_phi` acts, so fourteen are independent.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct InfinitesimalParams {
    pub alpha: [f64; 3],
    pub beta: [f64; 3],
    pub boost_theta: [f64; 3],
    pub boost_phi: [f64; 3],
    pub diag_phi: [f64; 3],
}

/// Coordinate ordering for the 7-vector forms: `(lam1..3, ct, x1..3)`.
const LAM: [usize; 3] = [0, 1, 2];
const CT: usize = 3;
const X: [usize; 3] = [4, 5, 6];

/// Generator matrix of the infinitesimal transformation: the linear part of
/// the coordinate map minus the identity, acting on `(lam, ct, x)`.
pub fn infinitesimal_generator(p: &InfinitesimalParams) -> [[f64; 7]; 7] {
    let mean = (p.diag_phi[0] + p.diag_phi[1] + p.diag_phi[2]) / 3.0;
    let traceless = [
        p.diag_phi[0] - mean,
        p.diag_phi[1] - mean,
        p.diag_phi[2] - mean,
    ];
    let mut l = [[0.0; 7]; 7];
    for n in 1..=3usize {
        // x_n' = x_n - eps alpha x - theta_n ct + (|eps| phi + eps theta)/2 lam + tf_n lam_n
        l[X[n - 1]][CT] -= p.boost_theta[n - 1];
        l[X[n - 1]][LAM[n - 1]] += traceless[n - 1];
        // ct' = ct - beta lam - theta x
        l[CT][LAM[n - 1]] -= p.beta[n - 1];
        l[CT][X[n - 1]] -= p.boost_theta[n - 1];
        // lam_n' = lam_n - eps (alpha - beta) lam + beta_n ct + (|eps| phi - eps theta)/2 x + tf_n x_n
        l[LAM[n - 1]][CT] += p.beta[n - 1];
        l[LAM[n - 1]][X[n - 1]] += traceless[n - 1];
        for m in 1..=3usize {
            for k in 1..=3usize {
                let e = epsilon(n, m, k);
                if e == 0.0 {
                    continue;
                }
                l[X[n - 1]][X[k - 1]] -= e * p.alpha[m - 1];
                l[X[n - 1]][LAM[k - 1]] +=
                    0.5 * (e.abs() * p.boost_phi[m - 1] + e * p.boost_theta[m - 1]);
                l[LAM[n - 1]][LAM[k - 1]] -= e * (p.alpha[m - 1] - p.beta[m - 1]);
                l[LAM[n - 1]][X[k - 1]] +=
                    0.5 * (e.abs() * p.boost_phi[m - 1] - e * p.boost_theta[m - 1]);
            }
        }
    }
    l
}

/// First-order coordinate transformation applied to `(lam1..3, ct, x1..3)`.
pub fn infinitesimal(p: &InfinitesimalParams, coords: &[f64; 7]) -> [f64; 7] {
    let l = infinitesimal_generator(p);
    let mut out = *coords;
    for i in 0..7 {
        for j in 0..7 {
            out[i] += l[i][j] * coords[j];
        }
    }
    out
}

/// The (3+1) pieces a restricted infinitesimal transformation induces:
/// a spatial rotation, a boost, and translations generated by the rotations
/// toward the extra time-like directions evaluated at `lam`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoincarePieces {
    /// Infinitesimal rotation matrix acting on x: `dx_n = sum_k rot[n][k] x_k`.
    pub rotation: [[f64; 3]; 3],
    /// Boost angles theta (velocity per c).
    pub boost: [f64; 3],
    /// Time translation `a0 = -beta . lam`.
    pub time_translation: f64,
    /// Space translation `a_n = (1/2) eps_{nmk} theta_m lam_k`.
    pub space_translation: [f64; 3],
}

/// Poincare-type limit of the infinitesimal transformation with the second
/// boost angles and the diagonal angles switched off.
pub fn poincare_limit(
    alpha: [f64; 3],
    beta: [f64; 3],
    theta: [f64; 3],
    lam: [f64; 3],
) -> PoincarePieces {
    let mut rotation = [[0.0; 3]; 3];
    let mut space_translation = [0.0; 3];
    for n in 1..=3usize {
        for m in 1..=3usize {
            for k in 1..=3usize {
                let e = epsilon(n, m, k);
                if e == 0.0 {
                    continue;
                }
                rotation[n - 1][k - 1] -= e * alpha[m - 1];
                space_translation[n - 1] += 0.5 * e * theta[m - 1] * lam[k - 1];
            }
        }
    }
    let time_translation = -(beta[0] * lam[0] + beta[1] * lam[1] + beta[2] * lam[2]);
    PoincarePieces {
        rotation,
        boost: theta,
        time_translation,
        space_translation,
    }
}

/// Diagonal-family action written over the Gell-Mann Cartan directions: the
/// exponent `(K1 L3 + K2 L8) I` is diagonal with entries `d_n I`, and since
/// `I^2 = +1` each pair `(lam_n + I x_n)` boosts hyperbolically by `d_n`.
pub fn gellmann_diagonal(
    k_big1: f64,
    k_big2: f64,
    lam: [f64; 3],
    x: [f64; 3],
) -> ([f64; 3], [f64; 3]) {
    let s3 = 3f64.sqrt();
    let d = [
        k_big1 + k_big2 / s3,
        -k_big1 + k_big2 / s3,
        -2.0 * k_big2 / s3,
    ];
    let mut lam_out = [0.0; 3];
    let mut x_out = [0.0; 3];
    for n in 0..3 {
        let (ch, sh) = (d[n].cosh(), d[n].sinh());
        lam_out[n] = lam[n] * ch + x[n] * sh;
        x_out[n] = x[n] * ch + lam[n] * sh;
    }
    (lam_out, x_out)
}

/// Gell-Mann parameters matching the diagonal family angles `(k1, k2)`.
pub fn gellmann_from_k_pair(k1: f64, k2: f64) -> (f64, f64) {
    (0.5 * (k1 - k2), 0.5 * 3f64.sqrt() * (k1 + k2))
}

/// Diagonal family angles matching Gell-Mann parameters `(K1, K2)`.
pub fn k_pair_from_gellmann(k_big1: f64, k_big2: f64) -> (f64, f64) {
    let s3 = 3f64.sqrt();
    (k_big1 + k_big2 / s3, -k_big1 + k_big2 / s3)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AutomError {
    #[error("family axis {axis} out of range 1..=3")]
    BadAxis { axis: u8 },
}

/// Homomorphism residual `max |U(ab) - U(a) U(b)|` scaled by magnitude.
pub fn homomorphism_residual(map: &AutomorphismMap, a: &SplitOctonion, b: &SplitOctonion) -> f64 {
    let lhs = map.apply(&mul(a, b));
    let rhs = mul(&map.apply(a), &map.apply(b));
    let scale = lhs.max_abs().max(rhs.max_abs()).max(1.0);
    (lhs - rhs).max_abs() / scale
}
