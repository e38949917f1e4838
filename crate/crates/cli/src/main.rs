//! `ll-cli`: verification suites, Newton-Cartan tensor reports, connection
//! lifts and the flat-space Levy-Leblond solver.
//!
//! Exit codes: 0 success, 1 verification or solve failure, 2 usage or
//! configuration error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use ll_cli::analytic::{constant_factor, GaussianPacket1D, ProductWave3D};
use ll_cli::config::load_manifold;
use ll_cli::csvio;
use ll_cli::flat::{default_reduce_points, planewave_check, reduce_check};
use ll_cli::report::RunReport;
use ll_cli::solver::{evolve_wavepacket, SolveError, SolverParams};
use ll_cli::suites;

use ll_core::linalg::Mat4;
use ll_core::nc::{self, adapted_frame, connection_form, frame_christoffels, PointField};
use ll_core::spinor::GammaSet;

#[derive(Parser)]
#[command(
    name = "ll-cli",
    about = "Galilei/Clifford verification, Newton-Cartan tensors, and the Levy-Leblond solver",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of human tables.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full invariant suites of all modules; exit 0 iff all pass.
    Verify,
    /// Print derived tensors, the adapted frame and diagnostics at a point.
    Tensors(TensorArgs),
    /// Print the connection form and the lifted spinor matrices at a point.
    Lift(TensorArgs),
    /// Flat-space checks and the wave-packet solver.
    Solve(SolveArgs),
}

#[derive(Args)]
struct TensorArgs {
    /// Manifold config file (TOML).
    #[arg(long)]
    config: PathBuf,
    /// Evaluation point as `t,x,y,z`.
    #[arg(long, default_value = "0,0,0,0", value_parser = parse_point)]
    point: Vec4Arg,
    /// Finite-difference step for derivative-based quantities.
    #[arg(long, default_value_t = 1e-3)]
    fd_step: f64,
}

#[derive(Clone, Copy)]
struct Vec4Arg([f64; 4]);

fn parse_point(s: &str) -> Result<Vec4Arg, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!(
            "point: expected 4 comma-separated numbers, got {}",
            parts.len()
        ));
    }
    let mut p = [0.0; 4];
    for (i, part) in parts.iter().enumerate() {
        p[i] = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("point[{i}]: {e}"))?;
    }
    Ok(Vec4Arg(p))
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Planewave,
    Wavepacket,
    ReduceCheck,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Wave vector `kx,ky,kz` (planewave mode).
    #[arg(long, default_value = "1,0,0", value_parser = parse_k)]
    k: KArg,
    #[arg(long, default_value_t = 512)]
    grid_points: usize,
    #[arg(long, default_value_t = 0.05)]
    dx: f64,
    #[arg(long, default_value_t = 0.001)]
    dt: f64,
    #[arg(long, default_value_t = 1000)]
    steps: usize,
    /// Packet width sigma0.
    #[arg(long, default_value_t = 1.0)]
    sigma0: f64,
    /// Carrier wavenumber k0.
    #[arg(long, default_value_t = 1.0)]
    k0: f64,
    /// Packet center x0; defaults to the domain midpoint.
    #[arg(long)]
    x0: Option<f64>,
    /// Record a trajectory slice every this many steps.
    #[arg(long, default_value_t = 100)]
    output_every: usize,
    /// Trajectory CSV path (wavepacket mode).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy)]
struct KArg([f64; 3]);

fn parse_k(s: &str) -> Result<KArg, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!(
            "k: expected 3 comma-separated numbers, got {}",
            parts.len()
        ));
    }
    let mut k = [0.0; 3];
    for (i, part) in parts.iter().enumerate() {
        k[i] = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("k[{i}]: {e}"))?;
    }
    Ok(KArg(k))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify => cmd_verify(cli.json),
        Command::Tensors(args) => cmd_tensors(&args, cli.json),
        Command::Lift(args) => cmd_lift(&args, cli.json),
        Command::Solve(args) => cmd_solve(&args, cli.json),
    }
}

fn cmd_verify(json: bool) -> ExitCode {
    let results = suites::run_all();
    let all_pass = results.iter().all(|r| r.pass);
    if json {
        let rows: Vec<_> = results
            .iter()
            .map(|r| json!({"suite": r.name, "pass": r.pass, "detail": r.detail}))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"suites": rows, "all_pass": all_pass})).unwrap()
        );
    } else {
        for r in &results {
            println!(
                "{:<16} {}  {}",
                r.name,
                if r.pass { "PASS" } else { "FAIL" },
                r.detail
            );
        }
        println!("overall: {}", if all_pass { "PASS" } else { "FAIL" });
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn mat4_json(m: &Mat4) -> serde_json::Value {
    json!(m)
}

fn fmt_mat4(m: &Mat4) -> String {
    let mut out = String::new();
    for row in m {
        out.push_str(&format!(
            "  [{:>12.6} {:>12.6} {:>12.6} {:>12.6}]\n",
            row[0], row[1], row[2], row[3]
        ));
    }
    out
}

fn cmd_tensors(args: &TensorArgs, json: bool) -> ExitCode {
    let field = match load_manifold(&args.config) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let p = args.point.0;
    let data = match field.data_at(p) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let report = data.validate();
    let derived = (|| -> Result<(Mat4, Mat4, Mat4), ll_core::Error> {
        let gb = nc::gbar(&data)?;
        let hb = nc::hbar(&gb)?;
        let h = nc::hfield(&data, &hb)?;
        Ok((gb, hb, h))
    })();
    let frame = adapted_frame(&data);
    let compat = field.compatibility(args.fd_step);

    if json {
        let mut doc = json!({
            "point": p,
            "diagnostics": report.checks.iter().map(|c| json!({
                "name": c.name, "pass": c.pass, "residual": c.residual
            })).collect::<Vec<_>>(),
            "torsion_max": report.torsion_max,
        });
        if let Ok((gb, hb, h)) = &derived {
            doc["gbar"] = mat4_json(gb);
            doc["hbar"] = mat4_json(hb);
            doc["h"] = mat4_json(h);
        } else if let Err(e) = &derived {
            doc["error"] = json!(e.to_string());
        }
        if let Ok(f) = &frame {
            doc["frame"] = json!(f.x);
            doc["coframe"] = json!(f.e);
        }
        if let Ok(c) = &compat {
            doc["compatibility"] =
                json!({"spatial": c.spatial, "clock": c.clock, "g_lower": c.g_lower});
        }
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("point: ({}, {}, {}, {})", p[0], p[1], p[2], p[3]);
        println!("diagnostics:");
        for c in &report.checks {
            println!(
                "  {:<34} {}  (residual {:.3e})",
                c.name,
                if c.pass { "ok" } else { "VIOLATED" },
                c.residual
            );
        }
        println!("  torsion max: {:.3e}", report.torsion_max);
        match &derived {
            Ok((gb, hb, h)) => {
                println!("gbar:\n{}", fmt_mat4(gb));
                println!("hbar:\n{}", fmt_mat4(hb));
                println!("h:\n{}", fmt_mat4(h));
            }
            Err(e) => println!("derived tensors unavailable: {e}"),
        }
        match &frame {
            Ok(f) => {
                println!("adapted frame (rows X_0..X_3):");
                for x in &f.x {
                    println!(
                        "  [{:>10.6} {:>10.6} {:>10.6} {:>10.6}]",
                        x[0], x[1], x[2], x[3]
                    );
                }
            }
            Err(e) => println!("adapted frame unavailable: {e}"),
        }
        match &compat {
            Ok(c) => println!(
                "compatibility residuals: spatial {:.3e}, clock {:.3e} (covariant grad g {:.3e})",
                c.spatial, c.clock, c.g_lower
            ),
            Err(e) => println!("compatibility unavailable: {e}"),
        }
    }

    if report.all_pass() && derived.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_lift(args: &TensorArgs, json: bool) -> ExitCode {
    let field = match load_manifold(&args.config) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let p = args.point.0;
    let gamma = match frame_christoffels(&field, p, args.fd_step) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: frame christoffels: {e}");
            return ExitCode::from(1);
        }
    };
    let form = match connection_form(&gamma) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: connection form: {e}");
            return ExitCode::from(1);
        }
    };
    let gammas = GammaSet::standard();
    let lifted: Vec<_> = form.dirs.iter().map(|d| gammas.lift(d)).collect();

    if json {
        let dirs: Vec<_> = form
            .dirs
            .iter()
            .zip(&lifted)
            .enumerate()
            .map(|(c, (d, l))| {
                json!({
                    "direction": c,
                    "omega": d.as_matrix(),
                    "lifted_re": l.iter().map(|row| row.iter().map(|z| z.re).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "lifted_im": l.iter().map(|row| row.iter().map(|z| z.im).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"point": p, "dirs": dirs})).unwrap()
        );
    } else {
        println!("point: ({}, {}, {}, {})", p[0], p[1], p[2], p[3]);
        for (c, (d, l)) in form.dirs.iter().zip(&lifted).enumerate() {
            println!("direction X_{c}: omega =");
            print!("{}", fmt_mat4(&d.as_matrix()));
            println!("  lifted A(X_{c}) =");
            for row in l {
                let cells: Vec<String> = row
                    .iter()
                    .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                    .collect();
                println!("    [{}]", cells.join("  "));
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_solve(args: &SolveArgs, json: bool) -> ExitCode {
    let start = Instant::now();
    match args.mode {
        Mode::Planewave => {
            let u2 = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
            match planewave_check(args.k.0, args.mass, 0.0, u2) {
                Ok(residual) => {
                    let report = RunReport {
                        mode: "planewave".into(),
                        residual_max: residual,
                        residual_l2: 0.0,
                        norm_drift: 0.0,
                        l2_error: 0.0,
                        wall_time_s: start.elapsed().as_secs_f64(),
                        output_path: None,
                        warnings: vec![],
                    };
                    emit_report(&report, json);
                    if report.all_finite() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Mode::ReduceCheck => {
            let packet = GaussianPacket1D {
                sigma0: args.sigma0,
                k0: args.k0,
                x0: 0.0,
                mass: args.mass,
            };
            let wave = ProductWave3D {
                factors: [
                    Box::new(move |x, t| packet.derivs(x, t)),
                    Box::new(constant_factor()),
                    Box::new(constant_factor()),
                ],
            };
            match reduce_check(&wave, args.mass, &default_reduce_points()) {
                Ok(r) => {
                    let report = RunReport {
                        mode: "reduce-check".into(),
                        residual_max: r.ll_max.max(r.schrodinger_max),
                        residual_l2: 0.0,
                        norm_drift: 0.0,
                        l2_error: 0.0,
                        wall_time_s: start.elapsed().as_secs_f64(),
                        output_path: None,
                        warnings: vec![],
                    };
                    emit_report(&report, json);
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Mode::Wavepacket => {
            let params = SolverParams {
                mass: args.mass,
                grid_points: args.grid_points,
                dx: args.dx,
                dt: args.dt,
                steps: args.steps,
                sigma0: args.sigma0,
                k0: args.k0,
                x0: args.x0.unwrap_or(args.grid_points as f64 * args.dx / 2.0),
                output_every: args.output_every,
            };
            let mut warnings = vec![];
            if let Some(w) = params.stability_advisory() {
                eprintln!("{w}");
                warnings.push(w);
            }
            match evolve_wavepacket(&params) {
                Ok(out) => {
                    let mut output_path = None;
                    if let Some(path) = &args.out {
                        if let Err(e) = csvio::write_trajectory(path, &out.slices, params.dx) {
                            eprintln!("error: writing {}: {e}", path.display());
                            return ExitCode::from(1);
                        }
                        output_path = Some(path.display().to_string());
                    }
                    let report = RunReport {
                        mode: "wavepacket".into(),
                        residual_max: out.ll_residual_max,
                        residual_l2: out.ll_residual_l2,
                        norm_drift: out.norm_drift,
                        l2_error: out.l2_error,
                        wall_time_s: start.elapsed().as_secs_f64(),
                        output_path,
                        warnings,
                    };
                    emit_report(&report, json);
                    if report.all_finite() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(SolveError::Config(msg)) => {
                    eprintln!("config error: {msg}");
                    ExitCode::from(2)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}

fn emit_report(report: &RunReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
    } else {
        print!("{}", report.render_text());
    }
}
