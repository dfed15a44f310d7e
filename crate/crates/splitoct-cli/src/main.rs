//! `splitoct` — command-line surface over the split-octonion toolkit:
//! algebra operations, rotor decompositions, automorphisms, generator
//! reports, zero-divisor identities, kinematics (with CSV batch mode), and
//! the seeded verification suites.
//!
//! Exit codes: 0 success, 1 failed verification or domain error, 2 bad
//! arguments or unparsable input.

#![allow(clippy::needless_range_loop)]

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use std::fmt::Display;
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use splitoct_core::algebra::SplitOctonion;
use splitoct_core::autom::{AutomorphismMap, AutomorphismParams};
use splitoct_core::generators::{
    build_generators, closure_report, metric_residual, max_abs7, Frame,
};
use splitoct_core::kin::{
    aberration, eikonal_residual, lagrangian, max_force, max_mass, velocity_add, AberrationPlane,
    KinError, PhysicalConstants,
};
use splitoct_core::rotor::{decompose, left_rotate, Axis, Rotor};
use splitoct_core::verify::{run_suite, Suite, Tolerances};
use splitoct_core::zerodiv::relation_suite;

#[derive(Parser)]
#[command(
    name = "splitoct",
    version,
    about = "Split-octonion algebra, its automorphism group, and derived kinematics"
)]
struct Cli {
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, env = "SPLITOCT_SEED", default_value_t = 42)]
    seed: u64,

    /// Trial count for randomized suites.
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,

    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Absolute tolerance separating zero from nonzero in classification.
    #[arg(long, global = true, default_value_t = splitoct_core::TOL_ZERO)]
    tol_zero: f64,

    /// Relative tolerance for identity checks.
    #[arg(long, global = true, default_value_t = splitoct_core::TOL_REL)]
    tol_rel: f64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two octonions given as JSON objects.
    Mul {
        /// Left factor, e.g. '{"w":0,"lam":[1,0,0],"x":[0,0,0],"ct":0}'.
        a: String,
        /// Right factor.
        b: String,
    },
    /// Classify an octonion by the signs of its norm and vector-part norm.
    Classify { s: String },
    /// Left-rotate an octonion by a rotor (two-sided angle convention).
    Rotate {
        #[arg(long)]
        axis: String,
        #[arg(long)]
        angle: f64,
        s: String,
    },
    /// Decompose an octonion into the four rotation planes of an axis.
    Decompose {
        #[arg(long)]
        axis: String,
        s: String,
    },
    /// Apply an automorphism to an octonion or a 7-coordinate vector.
    ///
    /// An octonion target transforms through the basis (active) map; a
    /// 7-vector [lam1,lam2,lam3,ct,x1,x2,x3] transforms through the induced
    /// coordinate map.
    Autom {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Family axis 1..=3 (rotation and boost families).
        #[arg(long)]
        axis: Option<u8>,
        /// The two family angles, comma separated: "alpha,beta",
        /// "theta,phi", or "k1,k2".
        #[arg(long)]
        angles: String,
        target: String,
    },
    /// Report on the fifteen generator operators of one frame.
    Generators {
        #[arg(long, value_enum, default_value_t = FrameArg::Diagonal)]
        frame: FrameArg,
    },
    /// Verify the zero-divisor product identities (all exact).
    Zerodiv,
    /// Kinematics formulas.
    Kin {
        #[command(subcommand)]
        verb: KinVerb,
    },
    /// Run a seeded verification suite; exits 1 on any failing check.
    Verify {
        /// algebra | rotor | autom | generators | zerodiv | kin | all
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Rot,
    Boost,
    Diag,
}

#[derive(Clone, Copy, ValueEnum)]
enum FrameArg {
    Cartan,
    Diagonal,
}

#[derive(Args)]
struct ConstArgs {
    /// Speed of light.
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    /// Reduced Planck constant.
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    /// Gravitational constant.
    #[arg(long = "G", default_value_t = 1.0)]
    g: f64,
}

impl ConstArgs {
    fn consts(&self) -> PhysicalConstants {
        PhysicalConstants {
            c: self.c,
            hbar: self.hbar,
            g: self.g,
        }
    }
}

#[derive(Subcommand)]
enum KinVerb {
    /// Generalized velocity addition with Doppler-rate terms.
    Vadd {
        /// Velocity components "v1,v2,v3".
        #[arg(long)]
        v: String,
        /// Boost rapidity theta1 (tanh theta1 = V/c).
        #[arg(long)]
        theta: f64,
        #[arg(long, default_value_t = 0.0)]
        lamdot2: f64,
        #[arg(long, default_value_t = 0.0)]
        lamdot3: f64,
        #[command(flatten)]
        consts: ConstArgs,
    },
    /// First-order aberration shift in one of the two orthogonal planes.
    Aberration {
        /// Plane: 12 or 13.
        #[arg(long)]
        plane: String,
        #[arg(long)]
        gamma: f64,
        /// Frame speed V.
        #[arg(long = "V")]
        speed: f64,
        /// Doppler rate orthogonal to the plane.
        #[arg(long)]
        lamdot: f64,
        #[command(flatten)]
        consts: ConstArgs,
    },
    /// Free-particle Lagrangian with the quantum momentum-rate term.
    Lagrangian {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        v: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        pdot: String,
        #[command(flatten)]
        consts: ConstArgs,
    },
    /// Maximal force on a particle of mass m.
    Maxforce {
        #[arg(long)]
        m: f64,
        #[command(flatten)]
        consts: ConstArgs,
    },
    /// Maximal mass a physical signal can carry.
    Maxmass {
        #[command(flatten)]
        consts: ConstArgs,
    },
    /// Eikonal residual |grad.grad - 1|.
    Eikonal {
        /// Gradient components "g1,g2,g3".
        #[arg(long)]
        grad: String,
    },
    /// Apply one operation to every row of a CSV file, appending output
    /// columns (see README for the fixed headers per operation).
    Batch {
        #[arg(long, value_enum)]
        op: BatchOp,
        /// Input CSV path, or "-" for stdin.
        #[arg(long)]
        input: String,
        /// Output CSV path, or "-" for stdout (default).
        #[arg(long, default_value = "-")]
        output: String,
        #[command(flatten)]
        consts: ConstArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BatchOp {
    Vadd,
    Aberration,
    Lagrangian,
    Maxforce,
    Eikonal,
}

/// Errors carrying their process exit code: usage/parse problems exit 2,
/// runtime failures exit 1.
enum CliError {
    Usage(String),
    Fail(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Fail(_) => 1,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Fail(m) => m,
        }
    }
}

fn usage(msg: impl Display) -> CliError {
    CliError::Usage(msg.to_string())
}

fn fail(msg: impl Display) -> CliError {
    CliError::Fail(msg.to_string())
}

fn parse_octonion(text: &str) -> Result<SplitOctonion, CliError> {
    serde_json::from_str(text).map_err(|e| usage(format!("invalid octonion JSON: {e}")))
}

fn parse_triple(text: &str, what: &str) -> Result<[f64; 3], CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(usage(format!("{what} needs exactly 3 comma-separated values")));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|e| usage(format!("{what}: bad number `{part}`: {e}")))?;
    }
    Ok(out)
}

fn parse_axis(text: &str) -> Result<Axis, CliError> {
    Axis::from_str(text).map_err(usage)
}

fn emit(value: &impl Serialize, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("JSON serialization");
    println!("{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let pretty = cli.pretty;
    match &cli.cmd {
        Cmd::Mul { a, b } => {
            let a = parse_octonion(a)?;
            let b = parse_octonion(b)?;
            emit(&(a * b), pretty);
        }
        Cmd::Classify { s } => {
            let s = parse_octonion(s)?;
            let (norm, vector) = s.classify_with(cli.tol_zero);
            emit(
                &json!({
                    "norm": norm,
                    "vector": vector,
                    "norm2": s.norm2(),
                    "vector_norm2": s.vector_norm2(),
                }),
                pretty,
            );
        }
        Cmd::Rotate { axis, angle, s } => {
            let axis = parse_axis(axis)?;
            let s = parse_octonion(s)?;
            emit(&left_rotate(&Rotor::new(axis, *angle), &s), pretty);
        }
        Cmd::Decompose { axis, s } => {
            let axis = parse_axis(axis)?;
            let s = parse_octonion(s)?;
            let d = decompose(&s, axis).map_err(fail)?;
            let planes: Vec<_> = d
                .planes
                .iter()
                .map(|p| {
                    json!({
                        "plane": p.label(),
                        "magnitude": p.magnitude,
                        "phase": p.phase,
                    })
                })
                .collect();
            emit(&planes, pretty);
        }
        Cmd::Autom {
            family,
            axis,
            angles,
            target,
        } => {
            let parts: Vec<&str> = angles.split(',').collect();
            if parts.len() != 2 {
                return Err(usage("--angles needs exactly two comma-separated values"));
            }
            let a: f64 = parts[0]
                .trim()
                .parse()
                .map_err(|e| usage(format!("bad angle `{}`: {e}", parts[0])))?;
            let b: f64 = parts[1]
                .trim()
                .parse()
                .map_err(|e| usage(format!("bad angle `{}`: {e}", parts[1])))?;
            let params = match family {
                FamilyArg::Rot | FamilyArg::Boost => {
                    let n = axis.ok_or_else(|| usage("--axis is required for rot/boost"))?;
                    if !(1..=3).contains(&n) {
                        return Err(usage("--axis must be 1, 2 or 3"));
                    }
                    match family {
                        FamilyArg::Rot => AutomorphismParams::Rotation { axis: n, alpha: a, beta: b },
                        _ => AutomorphismParams::Boost { axis: n, theta: a, phi: b },
                    }
                }
                FamilyArg::Diag => AutomorphismParams::Diagonal { k1: a, k2: b },
            };
            apply_autom(&params, target, pretty)?;
        }
        Cmd::Generators { frame } => {
            let frame = match frame {
                FrameArg::Cartan => Frame::Cartan,
                FrameArg::Diagonal => Frame::Diagonal,
            };
            let gens = build_generators(frame);
            let mut trace = [[0.0; 7]; 7];
            for g in &gens[0..3] {
                for i in 0..7 {
                    for j in 0..7 {
                        trace[i][j] += g.m[i][j];
                    }
                }
            }
            let metric: Vec<f64> = gens.iter().map(metric_residual).collect();
            let report = closure_report(&gens);
            emit(
                &json!({
                    "frame": format!("{frame:?}").to_lowercase(),
                    "dimension": report.dim,
                    "trace_identity_residual": max_abs7(&trace),
                    "metric_residuals": metric,
                    "closure_ok": report.missing.is_empty(),
                }),
                pretty,
            );
        }
        Cmd::Zerodiv => {
            let report = relation_suite();
            emit(&report, pretty);
            if !report.overall {
                return Err(fail("zero-divisor relation suite failed"));
            }
        }
        Cmd::Kin { verb } => run_kin(verb, pretty)?,
        Cmd::Verify { suite } => {
            let suite = Suite::from_str(suite).map_err(usage)?;
            let tol = Tolerances {
                zero: cli.tol_zero,
                rel: cli.tol_rel,
            };
            let report = run_suite(suite, cli.seed, cli.trials as usize, &tol);
            emit(&report, pretty);
            if !report.overall {
                return Err(fail(format!(
                    "{} of {} checks failed",
                    report.checks.iter().filter(|c| !c.pass).count(),
                    report.checks.len()
                )));
            }
        }
    }
    Ok(())
}

fn apply_autom(params: &AutomorphismParams, target: &str, pretty: bool) -> Result<(), CliError> {
    let value: serde_json::Value =
        serde_json::from_str(target).map_err(|e| usage(format!("invalid JSON target: {e}")))?;
    if value.is_array() {
        let coords: [f64; 7] = serde_json::from_value(value)
            .map_err(|e| usage(format!("coordinate vector needs 7 numbers (lam1..3, ct, x1..3): {e}")))?;
        let m = params.coordinate_map().coordinate_matrix7();
        let mut out = [0.0; 7];
        for i in 0..7 {
            for (j, c) in coords.iter().enumerate() {
                out[i] += m[i][j] * c;
            }
        }
        emit(&out.to_vec(), pretty);
    } else {
        let s: SplitOctonion = serde_json::from_value(value)
            .map_err(|e| usage(format!("invalid octonion JSON: {e}")))?;
        let map: AutomorphismMap = params.map();
        emit(&map.apply(&s), pretty);
    }
    Ok(())
}

fn parse_plane(text: &str) -> Result<AberrationPlane, CliError> {
    match text {
        "12" => Ok(AberrationPlane::X1X2),
        "13" => Ok(AberrationPlane::X1X3),
        other => Err(usage(format!("unknown plane `{other}` (expected 12 or 13)"))),
    }
}

fn run_kin(verb: &KinVerb, pretty: bool) -> Result<(), CliError> {
    match verb {
        KinVerb::Vadd {
            v,
            theta,
            lamdot2,
            lamdot3,
            consts,
        } => {
            let v = parse_triple(v, "--v")?;
            let out = velocity_add(v, *theta, *lamdot2, *lamdot3, &consts.consts())
                .map_err(fail)?;
            emit(&json!({ "v_prime": out }), pretty);
        }
        KinVerb::Aberration {
            plane,
            gamma,
            speed,
            lamdot,
            consts,
        } => {
            let plane = parse_plane(plane)?;
            let a = aberration(*gamma, *speed, *lamdot, plane, &consts.consts());
            emit(
                &json!({ "delta": a.delta, "beyond_validity": a.beyond_validity }),
                pretty,
            );
        }
        KinVerb::Lagrangian { m, v, p, pdot, consts } => {
            let v = parse_triple(v, "--v")?;
            let p = parse_triple(p, "--p")?;
            let pdot = parse_triple(pdot, "--pdot")?;
            match lagrangian(*m, v, p, pdot, &consts.consts()) {
                Ok(l) => emit(&json!({ "lagrangian": l }), pretty),
                Err(KinError::VirtualRegime { radicand }) => {
                    emit(
                        &json!({ "lagrangian": null, "virtual": true, "radicand": radicand }),
                        pretty,
                    );
                }
                Err(e) => return Err(fail(e)),
            }
        }
        KinVerb::Maxforce { m, consts } => {
            emit(&json!({ "force_max": max_force(*m, &consts.consts()) }), pretty);
        }
        KinVerb::Maxmass { consts } => {
            emit(&json!({ "mass_max": max_mass(&consts.consts()) }), pretty);
        }
        KinVerb::Eikonal { grad } => {
            let grad = parse_triple(grad, "--grad")?;
            emit(&json!({ "residual": eikonal_residual(grad) }), pretty);
        }
        KinVerb::Batch {
            op,
            input,
            output,
            consts,
        } => run_batch(*op, input, output, &consts.consts())?,
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    }
}

fn field(record: &csv::StringRecord, headers: &csv::StringRecord, name: &str, row: usize)
    -> Result<f64, CliError>
{
    let idx = headers
        .iter()
        .position(|h| h == name)
        .ok_or_else(|| usage(format!("missing CSV column `{name}`")))?;
    let raw = record
        .get(idx)
        .ok_or_else(|| usage(format!("row {row}: missing value in column `{name}`")))?;
    raw.trim()
        .parse()
        .map_err(|e| usage(format!("row {row}, column `{name}`: bad number `{raw}`: {e}")))
}

fn run_batch(
    op: BatchOp,
    input: &str,
    output: &str,
    consts: &PhysicalConstants,
) -> Result<(), CliError> {
    let text = read_input(input)?;
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| usage(format!("reading CSV headers: {e}")))?
        .clone();

    let appended: &[&str] = match op {
        BatchOp::Vadd => &["v1p", "v2p", "v3p"],
        BatchOp::Aberration => &["delta", "beyond_validity"],
        BatchOp::Lagrangian => &["L", "status"],
        BatchOp::Maxforce => &["force_max"],
        BatchOp::Eikonal => &["residual"],
    };

    let mut out_rows: Vec<Vec<String>> = Vec::new();
    let mut out_header: Vec<String> = headers.iter().map(str::to_string).collect();
    out_header.extend(appended.iter().map(|s| s.to_string()));

    for (i, record) in reader.records().enumerate() {
        let row = i + 2; // 1-based, after the header line
        let record = record.map_err(|e| usage(format!("row {row}: {e}")))?;
        let mut out: Vec<String> = record.iter().map(str::to_string).collect();
        let f = |name: &str| field(&record, &headers, name, row);
        match op {
            BatchOp::Vadd => {
                let v = [f("v1")?, f("v2")?, f("v3")?];
                let got = velocity_add(v, f("theta")?, f("lamdot2")?, f("lamdot3")?, consts)
                    .map_err(|e| fail(format!("row {row}: {e}")))?;
                out.extend(got.iter().map(|x| format!("{x}")));
            }
            BatchOp::Aberration => {
                let plane = match f("plane")? as i64 {
                    12 => AberrationPlane::X1X2,
                    13 => AberrationPlane::X1X3,
                    other => {
                        return Err(usage(format!("row {row}: unknown plane `{other}`")));
                    }
                };
                let a = aberration(f("gamma")?, f("V")?, f("lamdot")?, plane, consts);
                out.push(format!("{}", a.delta));
                out.push(format!("{}", a.beyond_validity));
            }
            BatchOp::Lagrangian => {
                let v = [f("v1")?, f("v2")?, f("v3")?];
                let p = [f("p1")?, f("p2")?, f("p3")?];
                let pdot = [f("pdot1")?, f("pdot2")?, f("pdot3")?];
                match lagrangian(f("m")?, v, p, pdot, consts) {
                    Ok(l) => {
                        out.push(format!("{l}"));
                        out.push("ok".to_string());
                    }
                    Err(KinError::VirtualRegime { .. }) => {
                        out.push(String::new());
                        out.push("virtual".to_string());
                    }
                    Err(e) => return Err(fail(format!("row {row}: {e}"))),
                }
            }
            BatchOp::Maxforce => {
                out.push(format!("{}", max_force(f("m")?, consts)));
            }
            BatchOp::Eikonal => {
                let g = [f("g1")?, f("g2")?, f("g3")?];
                out.push(format!("{}", eikonal_residual(g)));
            }
        }
        out_rows.push(out);
    }

    let mut writer: Box<dyn std::io::Write> = if output == "-" {
        Box::new(std::io::stdout())
    } else {
        Box::new(
            std::fs::File::create(output)
                .map_err(|e| usage(format!("creating {output}: {e}")))?,
        )
    };
    let mut w = csv::Writer::from_writer(&mut writer);
    w.write_record(&out_header)
        .and_then(|_| out_rows.iter().try_for_each(|r| w.write_record(r)))
        .map_err(|e| fail(format!("writing CSV: {e}")))?;
    w.flush().map_err(|e| fail(format!("writing CSV: {e}")))?;
    Ok(())
}
