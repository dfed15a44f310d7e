//! Zero divisors: primitive idempotents, primitive nilpotents, and the two
//! light-cone decompositions they induce.
//!
//! All coefficients are exact dyadic rationals (one half), so every identity
//! in this module holds with no floating-point tolerance at all.

use serde::Serialize;
use std::fmt;

use crate::algebra::{mul, SplitOctonion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// Primitive idempotent kinds: `D^(J)_n(+-) = (1 +- J_n)/2` and
/// `D^(I)(+-) = (1 +- I)/2`. Eight in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectorKind {
    J(u8, Sign),
    I(Sign),
}

impl fmt::Display for ProjectorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectorKind::J(n, s) => write!(f, "D{s}(J{n})"),
            ProjectorKind::I(s) => write!(f, "D{s}(I)"),
        }
    }
}

/// Primitive nilpotent kinds: `G^(J)_n(+-) = (J_n +- j_n)/2` and
/// `G^(I)_n(+-) = (I +- j_n)/2`. Twelve in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NilpotentKind {
    J(u8, Sign),
    I(u8, Sign),
}

impl fmt::Display for NilpotentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilpotentKind::J(n, s) => write!(f, "G{s}(J{n})"),
            NilpotentKind::I(n, s) => write!(f, "G{s}(I{n})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projector {
    pub kind: ProjectorKind,
    pub value: SplitOctonion,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nilpotent {
    pub kind: NilpotentKind,
    pub value: SplitOctonion,
}

pub fn make_projector(kind: ProjectorKind) -> Projector {
    let mut v = SplitOctonion::zero();
    match kind {
        ProjectorKind::J(n, s) => {
            v.w = 0.5;
            v.lam[n as usize - 1] = 0.5 * s.value();
        }
        ProjectorKind::I(s) => {
            v.w = 0.5;
            v.ct = 0.5 * s.value();
        }
    }
    Projector { kind, value: v }
}

pub fn make_nilpotent(kind: NilpotentKind) -> Nilpotent {
    let mut v = SplitOctonion::zero();
    match kind {
        NilpotentKind::J(n, s) => {
            v.lam[n as usize - 1] = 0.5;
            v.x[n as usize - 1] = 0.5 * s.value();
        }
        NilpotentKind::I(n, s) => {
            v.ct = 0.5;
            v.x[n as usize - 1] = 0.5 * s.value();
        }
    }
    Nilpotent { kind, value: v }
}

/// All eight primitive idempotents.
pub fn all_projectors() -> Vec<Projector> {
    let mut out = Vec::with_capacity(8);
    for n in 1..=3 {
        for s in Sign::BOTH {
            out.push(make_projector(ProjectorKind::J(n, s)));
        }
    }
    for s in Sign::BOTH {
        out.push(make_projector(ProjectorKind::I(s)));
    }
    out
}

/// All twelve primitive nilpotents.
pub fn all_nilpotents() -> Vec<Nilpotent> {
    let mut out = Vec::with_capacity(12);
    for n in 1..=3 {
        for s in Sign::BOTH {
            out.push(make_nilpotent(NilpotentKind::J(n, s)));
        }
    }
    for n in 1..=3 {
        for s in Sign::BOTH {
            out.push(make_nilpotent(NilpotentKind::I(n, s)));
        }
    }
    out
}

/// One verified product identity.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub name: String,
    /// Largest coefficient deviation; zero for every relation here.
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroDivisorReport {
    pub checks: Vec<RelationCheck>,
    pub overall: bool,
}

fn rel(name: String, lhs: SplitOctonion, rhs: SplitOctonion) -> RelationCheck {
    let residual = (lhs - rhs).max_abs();
    RelationCheck {
        name,
        residual,
        pass: residual == 0.0,
    }
}

/// Verify every product identity of the zero-divisor algebra exactly:
/// idempotency and annihilation of the projectors, Grassmann squares,
/// cross products landing back on projectors, Fermi anti-commutators, and
/// the mixed projector/nilpotent relations.
pub fn relation_suite() -> ZeroDivisorReport {
    let mut checks = Vec::new();
    let zero = SplitOctonion::zero();
    let one = SplitOctonion::one();

    let dj = |n: u8, s: Sign| make_projector(ProjectorKind::J(n, s)).value;
    let di = |s: Sign| make_projector(ProjectorKind::I(s)).value;
    let gj = |n: u8, s: Sign| make_nilpotent(NilpotentKind::J(n, s)).value;
    let gi = |n: u8, s: Sign| make_nilpotent(NilpotentKind::I(n, s)).value;

    for s in Sign::BOTH {
        for n in 1..=3u8 {
            checks.push(rel(
                format!("D{s}(J{n}) D{s}(J{n}) = D{s}(J{n})"),
                mul(&dj(n, s), &dj(n, s)),
                dj(n, s),
            ));
            checks.push(rel(
                format!("D{s}(J{n}) D{}(J{n}) = 0", s.flip()),
                mul(&dj(n, s), &dj(n, s.flip())),
                zero,
            ));
        }
        checks.push(rel(
            format!("D{s}(I) D{s}(I) = D{s}(I)"),
            mul(&di(s), &di(s)),
            di(s),
        ));
        checks.push(rel(
            format!("D{s}(I) D{}(I) = 0", s.flip()),
            mul(&di(s), &di(s.flip())),
            zero,
        ));
    }

    for s in Sign::BOTH {
        for n in 1..=3u8 {
            checks.push(rel(
                format!("G{s}(J{n}) G{s}(J{n}) = 0"),
                mul(&gj(n, s), &gj(n, s)),
                zero,
            ));
            checks.push(rel(
                format!("G{s}(J{n}) G{}(J{n}) = D{}(I)", s.flip(), s.flip()),
                mul(&gj(n, s), &gj(n, s.flip())),
                di(s.flip()),
            ));
            checks.push(rel(
                format!("G{s}(I{n}) G{s}(I{n}) = 0"),
                mul(&gi(n, s), &gi(n, s)),
                zero,
            ));
            checks.push(rel(
                format!("G{s}(I{n}) G{}(I{n}) = D{s}(J{n})", s.flip()),
                mul(&gi(n, s), &gi(n, s.flip())),
                dj(n, s),
            ));
        }
    }

    // Fermi anti-commutators
    for n in 1..=3u8 {
        let anti_j = mul(&gj(n, Sign::Plus), &gj(n, Sign::Minus))
            + mul(&gj(n, Sign::Minus), &gj(n, Sign::Plus));
        checks.push(rel(
            format!("G+(J{n}) G-(J{n}) + G-(J{n}) G+(J{n}) = 1"),
            anti_j,
            one,
        ));
        let anti_i = mul(&gi(n, Sign::Plus), &gi(n, Sign::Minus))
            + mul(&gi(n, Sign::Minus), &gi(n, Sign::Plus));
        checks.push(rel(
            format!("G+(I{n}) G-(I{n}) + G-(I{n}) G+(I{n}) = 1"),
            anti_i,
            one,
        ));
    }

    // Mixed projector/nilpotent relations
    for s in Sign::BOTH {
        for n in 1..=3u8 {
            checks.push(rel(
                format!("D{s}(J{n}) G{s}(I{n}) = G{s}(I{n})"),
                mul(&dj(n, s), &gi(n, s)),
                gi(n, s),
            ));
            checks.push(rel(
                format!("D{s}(J{n}) G{}(I{n}) = 0", s.flip()),
                mul(&dj(n, s), &gi(n, s.flip())),
                zero,
            ));
            checks.push(rel(
                format!("D{s}(I) G{s}(J{n}) = 0"),
                mul(&di(s), &gj(n, s)),
                zero,
            ));
            checks.push(rel(
                format!("D{s}(I) G{}(J{n}) = G{}(J{n})", s.flip(), s.flip()),
                mul(&di(s), &gj(n, s.flip())),
                gj(n, s.flip()),
            ));
        }
    }

    let overall = checks.iter().all(|c| c.pass);
    ZeroDivisorReport { checks, overall }
}

/// Which zero divisor a light-cone coefficient multiplies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZeroDivisorKind {
    Projector(ProjectorKind),
    Nilpotent(NilpotentKind),
}

impl ZeroDivisorKind {
    pub fn value(self) -> SplitOctonion {
        match self {
            ZeroDivisorKind::Projector(k) => make_projector(k).value,
            ZeroDivisorKind::Nilpotent(k) => make_nilpotent(k).value,
        }
    }
}

impl fmt::Display for ZeroDivisorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroDivisorKind::Projector(k) => k.fmt(f),
            ZeroDivisorKind::Nilpotent(k) => k.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightconeTerm {
    pub kind: ZeroDivisorKind,
    pub coefficient: f64,
}

/// The two light-cone bases an octonion decomposes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LightconeBasis {
    /// Projectors along J_n paired with I-type nilpotents; the scalar and
    /// ct coefficients spread over the three planes with weight 1/3.
    JForm,
    /// Projectors along I paired with J-type nilpotents.
    IForm,
}

/// Linear coefficient reads of the chosen light-cone decomposition.
///
/// `JForm` returns, per n: `(w/3 + lam_n)`, `(ct/3 + x_n)`, `(w/3 - lam_n)`,
/// `(ct/3 - x_n)` against `D+(Jn)`, `G+(In)`, `D-(Jn)`, `G-(In)`. The ct
/// weight mirrors the printed 1/3 on the action coordinate; both are forced
/// by the exact reconstruction identity. `IForm` returns `(w +- ct)` against
/// `D(I)` and `(lam_n +- x_n)` against `G(Jn)`.
pub fn lightcone_decompose(s: &SplitOctonion, basis: LightconeBasis) -> Vec<LightconeTerm> {
    let mut terms = Vec::new();
    match basis {
        LightconeBasis::JForm => {
            for n in 1..=3u8 {
                let i = n as usize - 1;
                terms.push(LightconeTerm {
                    kind: ZeroDivisorKind::Projector(ProjectorKind::J(n, Sign::Plus)),
                    coefficient: s.w / 3.0 + s.lam[i],
                });
                terms.push(LightconeTerm {
                    kind: ZeroDivisorKind::Nilpotent(NilpotentKind::I(n, Sign::Plus)),
                    coefficient: s.ct / 3.0 + s.x[i],
                });
                terms.push(LightconeTerm {
                    kind: ZeroDivisorKind::Projector(ProjectorKind::J(n, Sign::Minus)),
                    coefficient: s.w / 3.0 - s.lam[i],
                });
                terms.push(LightconeTerm {
                    kind: ZeroDivisorKind::Nilpotent(NilpotentKind::I(n, Sign::Minus)),
                    coefficient: s.ct / 3.0 - s.x[i],
                });
            }
        }
        LightconeBasis::IForm => {
            terms.push(LightconeTerm {
                kind: ZeroDivisorKind::Projector(ProjectorKind::I(Sign::Plus)),
                coefficient: s.w + s.ct,
            });
            terms.push(LightconeTerm {
                kind: ZeroDivisorKind::Projector(ProjectorKind::I(Sign::Minus)),
                coefficient: s.w - s.ct,
            });
            for n in 1..=3u8 {
                let i = n as usize - 1;
                terms.push(LightconeTerm {
                    kind: ZeroDivisorKind::Nilpotent(NilpotentKind::J(n, Sign::Plus)),
                    coefficient: s.lam[i] + s.x[i],
                });
                terms.push(LightconeTerm {
                    kind: ZeroDivisorKind::Nilpotent(NilpotentKind::J(n, Sign::Minus)),
                    coefficient: s.lam[i] - s.x[i],
                });
            }
        }
    }
    terms
}

/// Scale each zero divisor by its coefficient and sum.
pub fn lightcone_reconstruct(terms: &[LightconeTerm]) -> SplitOctonion {
    terms.iter().fold(SplitOctonion::zero(), |acc, t| {
        acc + t.kind.value().scaled(t.coefficient)
    })
}
