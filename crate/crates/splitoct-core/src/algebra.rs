//! Split-octonion values and their exact basis algebra.
//!
//! Elements are eight real coefficients over the fixed basis
//! `(1, J1, J2, J3, j1, j2, j3, I)`: a scalar, three vector-like units with
//! square `+1`, three pseudovector-like units with square `-1`, and the
//! pseudoscalar-like unit `I` with square `+1`. The norm form is
//! `N^2 = w^2 - lam^2 + x^2 - ct^2`, signature (4,4).
//!
//! The multiplication table is generated programmatically from the
//! epsilon-tensor rules (never hand-entered) and self-checked on first use:
//! alternativity and the composition law `N(ab) = N(a) N(b)` must hold
//! exactly on all basis pairs.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;
use thiserror::Error;

use crate::{TOL_REL, TOL_ZERO};

/// Dimension of the algebra.
pub const DIM: usize = 8;

/// Coefficient slot names in basis order.
pub const COEFF_NAMES: [&str; DIM] = ["w", "lam1", "lam2", "lam3", "x1", "x2", "x3", "ct"];

/// Signature of the norm form on the coefficient vector: diag(+,-,-,-,+,+,+,-).
pub const ETA: [f64; DIM] = [1.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, -1.0];

/// Totally antisymmetric symbol on indices 1..=3.
pub(crate) fn epsilon(n: usize, m: usize, k: usize) -> f64 {
    match (n, m, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1.0,
        _ => 0.0,
    }
}

/// A split octonion `w + lam^n J_n + x^n j_n + ct I`.
///
/// `w` is the scalar (action/phase) part; `lam`, `x` and `ct` fill the
/// seven-dimensional vector part. All operations are pure; values are
/// immutable and freely shareable across threads.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitOctonion {
    pub w: f64,
    pub lam: [f64; 3],
    pub x: [f64; 3],
    pub ct: f64,
}

impl SplitOctonion {
    pub fn new(w: f64, lam: [f64; 3], x: [f64; 3], ct: f64) -> Self {
        Self { w, lam, x, ct }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(1.0)
    }

    pub fn scalar(w: f64) -> Self {
        Self { w, ..Self::default() }
    }

    /// Basis unit with index in 0..8, coefficient order `(1, J, j, I)`.
    pub fn basis(index: usize) -> Self {
        assert!(index < DIM, "basis index out of range");
        let mut c = [0.0; DIM];
        c[index] = 1.0;
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(c: [f64; DIM]) -> Self {
        Self {
            w: c[0],
            lam: [c[1], c[2], c[3]],
            x: [c[4], c[5], c[6]],
            ct: c[7],
        }
    }

    pub fn coeffs(&self) -> [f64; DIM] {
        [
            self.w, self.lam[0], self.lam[1], self.lam[2], self.x[0], self.x[1], self.x[2],
            self.ct,
        ]
    }

    pub fn coeff(&self, index: usize) -> f64 {
        self.coeffs()[index]
    }

    pub fn set_coeff(&mut self, index: usize, value: f64) {
        match index {
            0 => self.w = value,
            1..=3 => self.lam[index - 1] = value,
            4..=6 => self.x[index - 4] = value,
            7 => self.ct = value,
            _ => panic!("coefficient index out of range"),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_finite())
    }

    pub fn scaled(&self, f: f64) -> Self {
        let mut c = self.coeffs();
        for v in &mut c {
            *v *= f;
        }
        Self::from_coeffs(c)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs().iter().fold(0.0, |a, c| a.max(c.abs()))
    }

    /// Conjugate: scalar part kept, all seven vector coefficients negated.
    pub fn conj(&self) -> Self {
        Self {
            w: self.w,
            lam: [-self.lam[0], -self.lam[1], -self.lam[2]],
            x: [-self.x[0], -self.x[1], -self.x[2]],
            ct: -self.ct,
        }
    }

    /// Norm form `w^2 - lam^2 + x^2 - ct^2`, the scalar part of `s conj(s)`.
    pub fn norm2(&self) -> f64 {
        let l2: f64 = self.lam.iter().map(|v| v * v).sum();
        let x2: f64 = self.x.iter().map(|v| v * v).sum();
        self.w * self.w - l2 + x2 - self.ct * self.ct
    }

    /// Vector-part norm `V^2 = -x^2 + ct^2 + lam^2`; its sign classifies the
    /// vector part as time-, space- or light-like.
    pub fn vector_norm2(&self) -> f64 {
        let l2: f64 = self.lam.iter().map(|v| v * v).sum();
        let x2: f64 = self.x.iter().map(|v| v * v).sum();
        -x2 + self.ct * self.ct + l2
    }

    /// Time-like signal condition `ct^2 + lam^2 > x^2`.
    pub fn time_like_signal(&self) -> bool {
        self.vector_norm2() > 0.0
    }

    pub fn classify(&self) -> (NormClass, VectorClass) {
        self.classify_with(TOL_ZERO)
    }

    pub fn classify_with(&self, tol_zero: f64) -> (NormClass, VectorClass) {
        let n2 = self.norm2();
        let v2 = self.vector_norm2();
        let norm = if n2.abs() <= tol_zero {
            NormClass::Zero
        } else if n2 > 0.0 {
            NormClass::Positive
        } else {
            NormClass::Negative
        };
        let vector = if v2.abs() <= tol_zero {
            VectorClass::LightLike
        } else if v2 > 0.0 {
            VectorClass::TimeLike
        } else {
            VectorClass::SpaceLike
        };
        (norm, vector)
    }

    /// Two-sided inverse `conj(s) / N^2`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        self.inverse_with(TOL_ZERO)
    }

    pub fn inverse_with(&self, tol_zero: f64) -> Result<Self, AlgebraError> {
        let n2 = self.norm2();
        if n2.abs() <= tol_zero {
            return Err(AlgebraError::ZeroNorm { norm2: n2 });
        }
        Ok(self.conj().scaled(1.0 / n2))
    }

    pub fn polar(&self) -> Result<PolarForm, AlgebraError> {
        self.polar_with(TOL_ZERO)
    }

    /// Polar form of a non-null octonion.
    ///
    /// Three cases, by the signs of the norm and of the vector part:
    /// negative norm gives `N (sinh t + eps cosh t)`, positive norm with
    /// time-like vector part gives `N (cosh t + eps sinh t)` (requires a
    /// positive scalar part), positive norm with space-like vector part
    /// gives `N (cos t + eps sin t)`.
    pub fn polar_with(&self, tol_zero: f64) -> Result<PolarForm, AlgebraError> {
        let n2 = self.norm2();
        if n2.abs() <= tol_zero {
            return Err(AlgebraError::ZeroNorm { norm2: n2 });
        }
        let v2 = self.vector_norm2();
        let vec = [
            self.lam[0], self.lam[1], self.lam[2], self.x[0], self.x[1], self.x[2], self.ct,
        ];
        if n2 < 0.0 {
            // Negative norm forces V^2 > w^2 >= 0; eps is time-like.
            let n = (-n2).sqrt();
            let vnorm = v2.sqrt();
            let eps = unit7(&vec, vnorm);
            return Ok(PolarForm {
                n,
                eps,
                theta: (self.w / n).asinh(),
                kind: PolarKind::SinhCosh,
            });
        }
        if v2.abs() <= tol_zero {
            return Err(AlgebraError::LightLikeVector { vector_norm2: v2 });
        }
        let n = n2.sqrt();
        if v2 > 0.0 {
            if self.w <= 0.0 {
                return Err(AlgebraError::NegativeScalarBranch { w: self.w });
            }
            let vnorm = v2.sqrt();
            Ok(PolarForm {
                n,
                eps: unit7(&vec, vnorm),
                theta: (vnorm / n).asinh(),
                kind: PolarKind::CoshSinh,
            })
        } else {
            let vnorm = (-v2).sqrt();
            Ok(PolarForm {
                n,
                eps: unit7(&vec, vnorm),
                theta: vnorm.atan2(self.w),
                kind: PolarKind::CosSin,
            })
        }
    }
}

fn unit7(vec: &[f64; 7], norm: f64) -> [f64; 7] {
    let mut eps = *vec;
    for v in &mut eps {
        *v /= norm;
    }
    eps
}

/// Product through the basis table, extended bilinearly. Exact on integer
/// coefficients.
pub fn mul(a: &SplitOctonion, b: &SplitOctonion) -> SplitOctonion {
    let table = BasisProductTable::canonical();
    let ac = a.coeffs();
    let bc = b.coeffs();
    let mut out = [0.0; DIM];
    for (i, &ai) in ac.iter().enumerate() {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in bc.iter().enumerate() {
            let (sign, k) = table.entries[i][j];
            out[k] += sign * ai * bj;
        }
    }
    SplitOctonion::from_coeffs(out)
}

impl Mul for SplitOctonion {
    type Output = SplitOctonion;
    fn mul(self, rhs: SplitOctonion) -> SplitOctonion {
        mul(&self, &rhs)
    }
}

impl Mul<f64> for SplitOctonion {
    type Output = SplitOctonion;
    fn mul(self, rhs: f64) -> SplitOctonion {
        self.scaled(rhs)
    }
}

impl Add for SplitOctonion {
    type Output = SplitOctonion;
    fn add(self, rhs: SplitOctonion) -> SplitOctonion {
        let a = self.coeffs();
        let b = rhs.coeffs();
        let mut c = [0.0; DIM];
        for i in 0..DIM {
            c[i] = a[i] + b[i];
        }
        SplitOctonion::from_coeffs(c)
    }
}

impl Sub for SplitOctonion {
    type Output = SplitOctonion;
    fn sub(self, rhs: SplitOctonion) -> SplitOctonion {
        self + (-rhs)
    }
}

impl Neg for SplitOctonion {
    type Output = SplitOctonion;
    fn neg(self) -> SplitOctonion {
        self.scaled(-1.0)
    }
}

impl fmt::Display for SplitOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["1", "J1", "J2", "J3", "j1", "j2", "j3", "I"];
        let mut first = true;
        for (c, name) in self.coeffs().iter().zip(names) {
            if *c == 0.0 {
                continue;
            }
            if first {
                write!(f, "{c} {name}")?;
                first = false;
            } else {
                write!(f, " {} {} {name}", if *c < 0.0 { "-" } else { "+" }, c.abs())?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sign of the norm form, within an absolute tolerance around zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormClass {
    Positive,
    Negative,
    Zero,
}

/// Sign of the vector-part norm `V^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorClass {
    TimeLike,
    SpaceLike,
    LightLike,
}

/// Which trigonometric pair the polar form uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolarKind {
    /// `N (sinh t + eps cosh t)`, negative norm, time-like eps.
    SinhCosh,
    /// `N (cosh t + eps sinh t)`, positive norm, time-like eps.
    CoshSinh,
    /// `N (cos t + eps sin t)`, positive norm, space-like eps.
    CosSin,
}

/// Polar decomposition `s = N f(theta, eps)` of a non-null octonion.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PolarForm {
    /// Norm magnitude, `sqrt(|N^2|)`.
    pub n: f64,
    /// Unit 7-vector over the `(J, j, I)` axes; squares to +1 or -1 per kind.
    pub eps: [f64; 7],
    pub theta: f64,
    pub kind: PolarKind,
}

impl PolarForm {
    pub fn reconstruct(&self) -> SplitOctonion {
        let (scal, vec) = match self.kind {
            PolarKind::SinhCosh => (self.theta.sinh(), self.theta.cosh()),
            PolarKind::CoshSinh => (self.theta.cosh(), self.theta.sinh()),
            PolarKind::CosSin => (self.theta.cos(), self.theta.sin()),
        };
        let mut c = [0.0; DIM];
        c[0] = self.n * scal;
        for (i, e) in self.eps.iter().enumerate() {
            c[i + 1] = self.n * vec * e;
        }
        SplitOctonion::from_coeffs(c)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("zero-norm octonion (N^2 = {norm2:e}) is a zero divisor and has no inverse")]
    ZeroNorm { norm2: f64 },
    #[error("light-like vector part (V^2 = {vector_norm2:e}) leaves the polar axis undefined")]
    LightLikeVector { vector_norm2: f64 },
    #[error("polar form with positive norm and time-like vector part needs w > 0 (got {w})")]
    NegativeScalarBranch { w: f64 },
}

/// Signed index table for products of the eight basis units:
/// `entries[i][j] = (sign, k)` means `e_i e_j = sign * e_k`.
#[derive(Debug, Clone)]
pub struct BasisProductTable {
    pub entries: [[(f64, usize); DIM]; DIM],
}

static TABLE: OnceLock<BasisProductTable> = OnceLock::new();

impl BasisProductTable {
    /// The canonical table, built once from the epsilon rules and
    /// self-checked before first use.
    pub fn canonical() -> &'static BasisProductTable {
        TABLE.get_or_init(|| {
            let t = BasisProductTable::build();
            if let Err(e) = t.validate() {
                panic!("basis product table failed self-check: {e}");
            }
            t
        })
    }

    /// Construct the table from the defining rules:
    /// `J_n^2 = 1`, `j_n^2 = -1`, `I^2 = 1`;
    /// `J_n J_m = eps_{nmk} j_k`, `j_n j_m = eps_{nmk} j_k`,
    /// `j_m J_n = -J_n j_m = eps_{nmk} J_k` (n != m);
    /// `J_n j_n = I`; `J_n I = -I J_n = j_n`; `j_n I = -I j_n = J_n`.
    fn build() -> BasisProductTable {
        let jj = |n: usize| n; // J_n index
        let pj = |n: usize| 3 + n; // j_n index
        const I: usize = 7;

        let mut e = [[(0.0, 0usize); DIM]; DIM];
        e[0][0] = (1.0, 0);
        for i in 1..DIM {
            e[0][i] = (1.0, i);
            e[i][0] = (1.0, i);
        }
        for n in 1..=3 {
            e[jj(n)][jj(n)] = (1.0, 0);
            e[pj(n)][pj(n)] = (-1.0, 0);
        }
        e[I][I] = (1.0, 0);

        for n in 1..=3 {
            for m in 1..=3 {
                if n == m {
                    continue;
                }
                for k in 1..=3 {
                    let s = epsilon(n, m, k);
                    if s == 0.0 {
                        continue;
                    }
                    e[jj(n)][jj(m)] = (s, pj(k));
                    e[pj(n)][pj(m)] = (s, pj(k));
                    e[pj(m)][jj(n)] = (s, jj(k));
                    e[jj(n)][pj(m)] = (-s, jj(k));
                }
            }
        }
        for n in 1..=3 {
            e[jj(n)][pj(n)] = (1.0, I);
            e[pj(n)][jj(n)] = (-1.0, I);
            e[jj(n)][I] = (1.0, pj(n));
            e[I][jj(n)] = (-1.0, pj(n));
            e[pj(n)][I] = (1.0, jj(n));
            e[I][pj(n)] = (-1.0, jj(n));
        }
        BasisProductTable { entries: e }
    }

    /// Product through this table (`canonical()` may still be initializing,
    /// so validation must not go through the global accessor).
    fn mul_with(&self, a: &SplitOctonion, b: &SplitOctonion) -> SplitOctonion {
        let ac = a.coeffs();
        let bc = b.coeffs();
        let mut out = [0.0; DIM];
        for (i, &ai) in ac.iter().enumerate() {
            if ai == 0.0 {
                continue;
            }
            for (j, &bj) in bc.iter().enumerate() {
                let (sign, k) = self.entries[i][j];
                out[k] += sign * ai * bj;
            }
        }
        SplitOctonion::from_coeffs(out)
    }

    /// Exact structural checks: diagonal squares, the three diagonal mixed
    /// products landing on I, alternativity on all basis pairs, and the
    /// composition law on all basis pairs.
    pub fn validate(&self) -> Result<(), String> {
        for n in 1..=3 {
            if self.entries[n][n] != (1.0, 0) {
                return Err(format!("J{n}^2 != 1"));
            }
            if self.entries[3 + n][3 + n] != (-1.0, 0) {
                return Err(format!("j{n}^2 != -1"));
            }
            if self.entries[n][3 + n] != (1.0, 7) {
                return Err(format!("J{n} j{n} != I"));
            }
        }
        if self.entries[7][7] != (1.0, 0) {
            return Err("I^2 != 1".into());
        }
        for i in 0..DIM {
            for j in 0..DIM {
                let a = SplitOctonion::basis(i);
                let b = SplitOctonion::basis(j);
                let ab = self.mul_with(&a, &b);
                // composition law, exact on basis elements
                if ab.norm2() != a.norm2() * b.norm2() {
                    return Err(format!("composition law fails on basis pair ({i},{j})"));
                }
                // alternativity a(ab) = (aa)b and (ba)a = b(aa)
                let aa = self.mul_with(&a, &a);
                let left = self.mul_with(&a, &ab) - self.mul_with(&aa, &b);
                let right = self.mul_with(&self.mul_with(&b, &a), &a) - self.mul_with(&b, &aa);
                if left.max_abs() != 0.0 || right.max_abs() != 0.0 {
                    return Err(format!("alternativity fails on basis pair ({i},{j})"));
                }
            }
        }
        Ok(())
    }
}

/// Associator `(ab)c - a(bc)`; nonzero triples witness non-associativity.
pub fn associator(a: &SplitOctonion, b: &SplitOctonion, c: &SplitOctonion) -> SplitOctonion {
    mul(&mul(a, b), c) - mul(a, &mul(b, c))
}

/// Relative deviation between two octonions, scaled by the larger magnitude.
pub fn rel_diff(a: &SplitOctonion, b: &SplitOctonion) -> f64 {
    let scale = a.max_abs().max(b.max_abs()).max(1.0);
    (*a - *b).max_abs() / scale
}

/// Checks `|a - b|` against the library's relative identity tolerance.
pub fn approx_eq(a: &SplitOctonion, b: &SplitOctonion) -> bool {
    rel_diff(a, b) <= TOL_REL
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(i: usize) -> SplitOctonion {
        SplitOctonion::basis(i)
    }

    // Independent oracle: the full signed table transcribed by hand from the
    // five product lines plus squares and the diagonal completions. Indices
    // follow (1, J1, J2, J3, j1, j2, j3, I).
    #[rustfmt::skip]
    const EXPECTED: [[(f64, usize); 8]; 8] = [
        [(1.,0),(1.,1),(1.,2),(1.,3),(1.,4),(1.,5),(1.,6),(1.,7)],
        [(1.,1),(1.,0),(1.,6),(-1.,5),(1.,7),(-1.,3),(1.,2),(1.,4)],
        [(1.,2),(-1.,6),(1.,0),(1.,4),(1.,3),(1.,7),(-1.,1),(1.,5)],
        [(1.,3),(1.,5),(-1.,4),(1.,0),(-1.,2),(1.,1),(1.,7),(1.,6)],
        [(1.,4),(-1.,7),(-1.,3),(1.,2),(-1.,0),(1.,6),(-1.,5),(1.,1)],
        [(1.,5),(1.,3),(-1.,7),(-1.,1),(-1.,6),(-1.,0),(1.,4),(1.,2)],
        [(1.,6),(-1.,2),(1.,1),(-1.,7),(1.,5),(-1.,4),(-1.,0),(1.,3)],
        [(1.,7),(-1.,4),(-1.,5),(-1.,6),(-1.,1),(-1.,2),(-1.,3),(1.,0)],
    ];

    #[test]
    fn table_matches_hand_transcription() {
        let t = BasisProductTable::canonical();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(t.entries[i][j], EXPECTED[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn table_self_check_passes() {
        assert!(BasisProductTable::canonical().validate().is_ok());
    }

    #[test]
    fn named_products() {
        // J1 J2 = j3, J1 I = j1, j1 j2 = j3, j1 I = J1, J1 j1 = I
        assert_eq!(mul(&b(1), &b(2)), b(6));
        assert_eq!(mul(&b(1), &b(7)), b(4));
        assert_eq!(mul(&b(4), &b(5)), b(6));
        assert_eq!(mul(&b(4), &b(7)), b(1));
        assert_eq!(mul(&b(1), &b(4)), b(7));
        assert_eq!(mul(&b(7), &b(1)), -b(4));
    }

    #[test]
    fn unit_element() {
        let s = SplitOctonion::new(0.3, [1.0, -2.0, 0.5], [0.1, 0.2, -0.7], 1.4);
        assert_eq!(mul(&SplitOctonion::one(), &s), s);
        assert_eq!(mul(&s, &SplitOctonion::one()), s);
    }

    #[test]
    fn associator_witness_nonzero() {
        // (J1 J2) J3 - J1 (J2 J3) = -2 I: the algebra is genuinely octonionic.
        let a = associator(&b(1), &b(2), &b(3));
        assert_eq!(a, b(7).scaled(-2.0));
    }

    #[test]
    fn conj_fixed_values() {
        let s = SplitOctonion::new(2.0, [3.0, 0.0, 0.0], [0.0; 3], 0.0);
        let c = s.conj();
        assert_eq!(c.w, 2.0);
        assert_eq!(c.lam[0], -3.0);
        assert_eq!(SplitOctonion::one().conj(), SplitOctonion::one());
    }

    #[test]
    fn conj_sum_is_twice_scalar() {
        let s = SplitOctonion::new(1.25, [0.5, -1.0, 2.0], [3.0, 0.0, -0.5], 0.75);
        assert_eq!(s + s.conj(), SplitOctonion::scalar(2.5));
    }

    #[test]
    fn norm2_fixed_values() {
        assert_eq!(SplitOctonion::new(1.0, [1.0, 0.0, 0.0], [0.0; 3], 0.0).norm2(), 0.0);
        assert_eq!(SplitOctonion::scalar(2.0).norm2(), 4.0);
        // w=1, lam=(1,0,0), x=(2,0,0), ct=1: 1 - 1 + 4 - 1 = 3
        let s = SplitOctonion::new(1.0, [1.0, 0.0, 0.0], [2.0, 0.0, 0.0], 1.0);
        assert_eq!(s.norm2(), 3.0);
    }

    #[test]
    fn norm2_is_scalar_part_of_s_conj_s() {
        let s = SplitOctonion::new(0.7, [0.2, -1.3, 0.4], [1.1, 0.0, -0.6], -0.9);
        let p = mul(&s, &s.conj());
        assert!((p.w - s.norm2()).abs() <= 1e-12);
        let vec_max = p.coeffs()[1..].iter().fold(0.0f64, |a, c| a.max(c.abs()));
        assert!(vec_max <= 1e-12);
    }

    #[test]
    fn vector_norm2_fixed_values() {
        let t = SplitOctonion::new(0.0, [0.0; 3], [0.0; 3], 1.0);
        assert_eq!(t.vector_norm2(), 1.0);
        assert_eq!(b(4).vector_norm2(), -1.0);
        assert_eq!((b(1) + b(4)).vector_norm2(), 0.0);
    }

    #[test]
    fn classify_fixed_values() {
        // 1 + J1 is null (N^2 = 0); its vector part J1 has V^2 = +1.
        let (n, v) = (SplitOctonion::one() + b(1)).classify();
        assert_eq!((n, v), (NormClass::Zero, VectorClass::TimeLike));

        // 1 + j1 is null with a space-like vector part, J1 + j1 light-like.
        let (n, v) = (SplitOctonion::one() + b(4)).classify();
        assert_eq!((n, v), (NormClass::Positive, VectorClass::SpaceLike));
        let (n, v) = (b(1) + b(4)).classify();
        assert_eq!((n, v), (NormClass::Zero, VectorClass::LightLike));

        let s = SplitOctonion::new(1f64.cosh(), [0.0; 3], [0.0; 3], 1f64.sinh());
        assert_eq!(s.classify(), (NormClass::Positive, VectorClass::TimeLike));

        let s = SplitOctonion::new(1f64.sinh(), [0.0; 3], [0.0; 3], 1f64.cosh());
        assert_eq!(s.classify(), (NormClass::Negative, VectorClass::TimeLike));
    }

    #[test]
    fn inverse_fixed_values() {
        // J1^2 = 1 and N^2(J1) = -1, so J1^{-1} = J1; j1^{-1} = -j1.
        assert_eq!(b(1).inverse().unwrap(), b(1));
        assert_eq!(b(4).inverse().unwrap(), -b(4));
        assert!(matches!(
            (SplitOctonion::one() + b(1)).inverse(),
            Err(AlgebraError::ZeroNorm { .. })
        ));
    }

    #[test]
    fn inverse_is_two_sided() {
        let s = SplitOctonion::new(0.9, [0.4, -0.2, 0.1], [1.2, 0.3, -0.5], 0.6);
        let inv = s.inverse().unwrap();
        assert!(approx_eq(&mul(&s, &inv), &SplitOctonion::one()));
        assert!(approx_eq(&mul(&inv, &s), &SplitOctonion::one()));
    }

    #[test]
    fn polar_fixed_forms() {
        let th = 0.7f64;
        let s = SplitOctonion::new(th.cosh(), [th.sinh(), 0.0, 0.0], [0.0; 3], 0.0);
        let p = s.polar().unwrap();
        assert_eq!(p.kind, PolarKind::CoshSinh);
        assert!((p.n - 1.0).abs() <= 1e-12);
        assert!((p.theta - th).abs() <= 1e-12);
        assert!((p.eps[0] - 1.0).abs() <= 1e-12);

        let th = 0.3f64;
        let s = SplitOctonion::new(th.cos(), [0.0; 3], [0.0, th.sin(), 0.0], 0.0);
        let p = s.polar().unwrap();
        assert_eq!(p.kind, PolarKind::CosSin);
        assert!((p.theta - th).abs() <= 1e-12);
        assert!((p.eps[4] - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn polar_rejects_degenerate_inputs() {
        assert!(matches!(
            (SplitOctonion::one() + b(1)).polar(),
            Err(AlgebraError::ZeroNorm { .. })
        ));
        // positive norm, |V^2| below tolerance
        assert!(matches!(
            SplitOctonion::scalar(2.0).polar(),
            Err(AlgebraError::LightLikeVector { .. })
        ));
        // positive norm, time-like vector part, negative scalar part
        let s = SplitOctonion::new(-2.0, [0.0; 3], [0.0; 3], 1.0);
        assert!(matches!(s.polar(), Err(AlgebraError::NegativeScalarBranch { .. })));
    }

    #[test]
    fn time_like_signal_matches_vector_class() {
        let samples = [
            SplitOctonion::new(0.0, [1.0, 0.0, 0.0], [0.0; 3], 1.0),
            SplitOctonion::new(0.0, [0.0; 3], [2.0, 0.0, 0.0], 1.0),
            b(4),
        ];
        for s in samples {
            let (_, v) = s.classify();
            assert_eq!(s.time_like_signal(), v == VectorClass::TimeLike);
        }
    }

    #[test]
    fn json_round_trip_is_exact() {
        let s = SplitOctonion::new(0.1, [0.2, 0.3, -0.4], [1.5, -2.5, 3.5], -0.7);
        let json = serde_json::to_string(&s).unwrap();
        let back: SplitOctonion = serde_json::from_str(&json).unwrap();
        assert_eq!(s, back);
    }
}
