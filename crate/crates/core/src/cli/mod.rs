//! The `ftri` command line.

pub mod elaborate;
pub mod expr;
pub mod plot;

use crate::exactmath::{parse_rational, pow2_neg, to_decimal, IsolatedRoot, Rational};
use crate::ftriangle::{a_decompose, FTriangle};
use crate::par::Exec;
use crate::regions::{
    barycentric_p4, check_71, check_72, classify_p3, conjecture_b_membership, p3_params, rank3_coords, rank4_coords,
    skew_growth_check, P3Point,
};
use crate::zerolocus::{
    count_roots_at, default_grid, find_bending, oracle_count, profile_at, verify_a3, verify_a4, verify_a5, verify_a6,
    CheckSummary, CountRoute, Failure, SignConvention, VerifyOptions, YCheck,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ftri", version, about = "Exact F-triangle algebra and zero-locus checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Run grid work on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

type Runner = fn(&FTriangle, &[Rational], &VerifyOptions) -> Result<Vec<YCheck>, crate::zerolocus::ZeroError>;

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
enum Cmd {
    /// Print the canonical expression, polynomial, A-part and coordinates.
    Show {
        expr: String,
        /// Also print decimals with this many digits.
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// JSON decomposition: A-part, coordinates, boundary inequalities.
    Decompose {
        expr: String,
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Roots of F(x, y) at a fixed y, with the D-sequence count.
    Roots {
        expr: String,
        #[arg(long, value_parser = rational)]
        y: Rational,
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Run the zero-locus and membership checks over a grid of y values.
    Verify {
        expr: String,
        #[arg(long, value_delimiter = ',', default_value = "A3,A4,A5,A6", ignore_case = true)]
        checks: Vec<Check>,
        /// Grid denominator; the grid is j/n for j = 0..=n plus 1/2.
        #[arg(long, env = "FTRI_GRID", default_value_t = 256)]
        grid: u32,
        #[arg(long, value_enum, default_value = "negative")]
        neighbour_sign: Sign,
        #[arg(long, value_enum, default_value = "negative")]
        derivative_sign: Sign,
    },
    /// Classify a rectangle of (lambda, s) points; CSV on stdout.
    Scan {
        #[arg(long, value_parser = range)]
        lambda: (Rational, Rational),
        #[arg(long, value_parser = range)]
        s: (Rational, Rational),
        #[arg(long, value_parser = rational)]
        step: Rational,
        /// Grid denominator for the A3 and A4 columns.
        #[arg(long, default_value_t = 16)]
        grid: u32,
    },
    /// Draw the zero loci of F, DF, D2F.
    Plot {
        expr: String,
        /// Output file; a `.ppm` extension selects the raster format.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "F,DF,D2F", value_parser = layer)]
        layers: Vec<plot::Layer>,
        /// Plot side in pixels.
        #[arg(long, default_value_t = 400)]
        size: u32,
        #[arg(long)]
        label: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Check {
    A3,
    A4,
    A5,
    A6,
    B,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sign {
    Negative,
    Positive,
}

impl From<Sign> for SignConvention {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Negative => SignConvention::Negative,
            Sign::Positive => SignConvention::Positive,
        }
    }
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational number: `{s}`"))
}

fn range(s: &str) -> Result<(Rational, Rational), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let (a, b) = (rational(a)?, rational(b)?);
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok((a, b))
}

fn layer(s: &str) -> Result<plot::Layer, String> {
    plot::Layer::parse(s).ok_or_else(|| format!("unknown layer `{s}` (expected F, DF or D2F)"))
}

/// Input problems that end the command with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] expr::ParseError),
    #[error(transparent)]
    Elab(#[from] elaborate::ElabError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn load(src: &str) -> Result<(expr::Expr, FTriangle), CliError> {
    let e = expr::parse(src)?;
    let f = elaborate::elaborate(&e)?;
    Ok((e, f))
}

fn num(q: &Rational, decimal: Option<usize>) -> Value {
    match decimal {
        None => Value::String(q.to_string()),
        Some(d) => json!({ "exact": q.to_string(), "decimal": to_decimal(q, d) }),
    }
}

fn root_json(r: &IsolatedRoot, decimal: Option<usize>) -> Value {
    let mut v = json!({
        "lo": r.lo.to_string(),
        "hi": r.hi.to_string(),
        "exact": r.exact_value().map(|q| q.to_string()),
        "multiplicity": r.multiplicity,
    });
    if let Some(d) = decimal {
        v["decimal"] = Value::String(to_decimal(&r.midpoint(), d));
    }
    v
}

fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match dispatch(cli.cmd, exec, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cmd: Cmd, exec: Exec, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Cmd::Show { expr, decimal } => {
            out.write_all(show(&expr, decimal)?.as_bytes())?;
            Ok(EXIT_PASS)
        }
        Cmd::Decompose { expr, decimal } => {
            out.write_all(to_pretty(&decompose(&expr, decimal)?).as_bytes())?;
            Ok(EXIT_PASS)
        }
        Cmd::Roots { expr, y, decimal } => {
            out.write_all(to_pretty(&roots(&expr, &y, decimal)?).as_bytes())?;
            Ok(EXIT_PASS)
        }
        Cmd::Verify { expr, checks, grid, neighbour_sign, derivative_sign } => {
            let opts = VerifyOptions {
                a6_neighbours: neighbour_sign.into(),
                a6_derivative: derivative_sign.into(),
                exec,
                ..VerifyOptions::default()
            };
            let (report, pass) = verify(&expr, &checks, grid, &opts)?;
            out.write_all(to_pretty(&report).as_bytes())?;
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Cmd::Scan { lambda, s, step, grid } => {
            out.write_all(scan(&lambda, &s, &step, grid, exec)?.as_bytes())?;
            Ok(EXIT_PASS)
        }
        Cmd::Plot { expr, out: path, layers, size, label } => {
            let (e, f) = load(&expr)?;
            if size == 0 {
                return Err(CliError::Input("plot size must be positive".into()));
            }
            let mut spec = plot::PlotSpec::new(label.unwrap_or_else(|| e.to_string()));
            spec.layers = layers;
            spec.size = size;
            spec.exec = exec;
            let bytes = if path.extension().is_some_and(|x| x == "ppm") {
                plot::render_ppm(&f, &spec)
            } else {
                plot::render_svg(&f, &spec).into_bytes()
            };
            std::fs::write(&path, bytes)?;
            writeln!(out, "wrote {}", path.display())?;
            Ok(EXIT_PASS)
        }
    }
}

/// Text summary whose first line is a canonical expression for the input.
pub fn show(src: &str, decimal: Option<usize>) -> Result<String, CliError> {
    let (e, f) = load(src)?;
    let mut s = format!("expr: {e}\nrank: {}\ntrace: {}\nF = {}\n", f.rank(), f.trace(), f.poly());
    if f.rank() >= 2 {
        let a = a_decompose(&f).map_err(|x| CliError::Input(x.to_string()))?;
        s += &format!("A = {}\n", a.poly);
        match f.rank() {
            3 => {
                if let Ok((ca, cb)) = rank3_coords(&a) {
                    let (lambda, sv) = p3_params(&ca, &cb);
                    s += &format!("coords (a, b) = ({ca}, {cb})\nlambda = {lambda}, s = {sv}\n");
                    if let Ok(p) = P3Point::new(lambda, sv) {
                        s += &format!("region: {}\n", classify_p3(&p));
                    }
                }
            }
            4 => {
                if let Ok(c) = rank4_coords(&a) {
                    s += &format!("coords (a, b, c, d) = {c}\n");
                    if let Ok(b) = barycentric_p4(&c) {
                        let v = b.to_vec().iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ");
                        s += &format!("barycentric (lambda, mu, nu, s1, s2) = ({v})\n");
                    }
                }
            }
            _ => {}
        }
    }
    if let Some(d) = decimal {
        let terms: Vec<String> =
            f.poly().terms().map(|(&(i, j), c)| format!("x^{i}y^{j}: {}", to_decimal(c, d))).collect();
        s += &format!("decimal: {}\n", terms.join(", "));
    }
    Ok(s)
}

pub fn decompose(src: &str, decimal: Option<usize>) -> Result<Value, CliError> {
    let (e, f) = load(src)?;
    let input = |x: String| CliError::Input(x);
    let mut v = json!({
        "schema": 1,
        "expr": e.to_string(),
        "triangle": f.to_json(),
    });
    if f.rank() < 2 {
        return Ok(v);
    }
    let a = a_decompose(&f).map_err(|x| input(x.to_string()))?;
    v["a_part"] = json!(a.poly.terms().map(|(&(i, j), c)| (i, j, c.to_string())).collect::<Vec<_>>());
    let conds = |c: Vec<crate::regions::Condition>| -> Value {
        Value::Array(
            c.iter()
                .map(|c| json!({ "k": c.k, "value": num(&c.value, decimal), "pass": c.pass }))
                .collect(),
        )
    };
    v["condition_71"] = conds(check_71(&f).map_err(|x| input(x.to_string()))?);
    if f.rank() >= 3 {
        v["condition_72"] = conds(check_72(&f).map_err(|x| input(x.to_string()))?);
    }
    let (sg, expected) = skew_growth_check(&f).map_err(|x| input(x.to_string()))?;
    v["skew_growth"] = json!({ "value": num(&sg, decimal), "expected": expected.map(|q| q.to_string()) });
    if f.rank() == 3 {
        if let Ok((ca, cb)) = rank3_coords(&a) {
            let (lambda, s) = p3_params(&ca, &cb);
            let region = P3Point::new(lambda.clone(), s.clone()).ok().map(|p| classify_p3(&p).to_string());
            v["rank3"] = json!({
                "a": num(&ca, decimal),
                "b": num(&cb, decimal),
                "lambda": num(&lambda, decimal),
                "s": num(&s, decimal),
                "region": region,
            });
        }
    }
    if f.rank() == 4 {
        if let Ok(c) = rank4_coords(&a) {
            let coords: Vec<Value> = c.to_vec().iter().map(|q| num(q, decimal)).collect();
            let bary = barycentric_p4(&c)
                .ok()
                .map(|b| b.to_vec().iter().map(|q| num(q, decimal)).collect::<Vec<_>>());
            v["rank4"] = json!({ "coords": coords, "barycentric": bary });
        }
    }
    Ok(v)
}

pub fn roots(src: &str, y: &Rational, decimal: Option<usize>) -> Result<Value, CliError> {
    let (e, f) = load(src)?;
    let zero = |x: crate::zerolocus::ZeroError| CliError::Input(x.to_string());
    let p = profile_at(&f, y, &pow2_neg(40)).map_err(zero)?;
    let mut v = json!({
        "schema": 1,
        "expr": e.to_string(),
        "y": num(y, decimal),
        "poly": p.poly.to_string(),
        "identically_zero": p.identically_zero,
        "roots": p.roots.iter().map(|r| root_json(r, decimal)).collect::<Vec<_>>(),
        "count_in_unit": p.count_in_unit,
        "all_in_unit": p.all_in_unit,
        "outside_signs_ok": p.outside_signs_ok,
    });
    if !p.identically_zero {
        v["oracle_count"] = json!(oracle_count(&p.poly).map_err(zero)?);
        v["d_sequence"] = match count_roots_at(&f, y) {
            Ok(c) => json!({
                "route": match c.route {
                    CountRoute::Direct => "direct",
                    CountRoute::KnownFactors => "known_factors",
                    CountRoute::SquareFree => "square_free",
                },
                "total": c.total,
                "parts": c.parts.iter().map(|(d, n, m)| json!({ "factor": d, "count": n, "multiplicity": m })).collect::<Vec<_>>(),
            }),
            Err(x) => json!({ "error": x.to_string() }),
        };
    }
    Ok(v)
}

/// JSON report and overall verdict of the selected checks.
fn verify(src: &str, checks: &[Check], n: u32, opts: &VerifyOptions) -> Result<(Value, bool), CliError> {
    let (e, f) = load(src)?;
    let grid = default_grid(n);
    let zero = |x: crate::zerolocus::ZeroError| CliError::Input(x.to_string());
    let mut pass = true;
    let mut summaries = serde_json::Map::new();
    let mut failures: Vec<Failure> = Vec::new();
    let runners: [(Check, &str, Runner); 4] = [
        (Check::A3, "A3", verify_a3),
        (Check::A4, "A4", verify_a4),
        (Check::A5, "A5", verify_a5),
        (Check::A6, "A6", verify_a6),
    ];
    for (c, name, run) in runners {
        if !checks.contains(&c) {
            continue;
        }
        let res = run(&f, &grid, opts).map_err(zero)?;
        let s = CheckSummary::of(&res);
        pass &= s.pass;
        failures.extend(res.into_iter().flat_map(|r| r.failures));
        summaries.insert(name.to_string(), serde_json::to_value(&s).expect("summary serializes"));
    }
    let mut v = json!({
        "schema": 1,
        "expr": e.to_string(),
        "triangle": f.provenance().to_string(),
        "rank": f.rank(),
        "trace": f.trace().to_string(),
        "grid_points": grid.len(),
        "a6_neighbours": opts.a6_neighbours,
        "a6_derivative": opts.a6_derivative,
        "checks": summaries,
        "failures": failures,
    });
    if checks.iter().any(|c| *c != Check::B) {
        v["bending"] = match find_bending(&f, &opts.width) {
            Ok(pts) => Value::Array(
                pts.iter()
                    .map(|p| {
                        json!({
                            "y": root_json(&p.y, None),
                            "x": root_json(&p.x, None),
                            "multiplicity": p.multiplicity,
                            "indices": p.indices,
                            "kinds": p.kinds,
                            "boundary": p.on_boundary,
                        })
                    })
                    .collect(),
            ),
            Err(x) => json!({ "error": x.to_string() }),
        };
    }
    if checks.contains(&Check::B) {
        let b = conjecture_b_membership(&f, &grid, opts.exec).map_err(|x| CliError::Input(x.to_string()))?;
        pass &= b.member();
        v["conjecture_b"] = json!({ "member": b.member(), "report": b });
    }
    v["pass"] = json!(pass);
    Ok((v, pass))
}

pub fn scan(lambda: &(Rational, Rational), s: &(Rational, Rational), step: &Rational, n: u32, exec: Exec) -> Result<String, CliError> {
    use num_traits::Signed;
    if !step.is_positive() {
        return Err(CliError::Input("step must be positive".into()));
    }
    let axis = |(lo, hi): &(Rational, Rational)| {
        let mut v = Vec::new();
        let mut t = lo.clone();
        while &t <= hi {
            v.push(t.clone());
            t += step;
        }
        v
    };
    let mut points = Vec::new();
    for l in axis(lambda) {
        for sv in axis(s) {
            points.push(P3Point::new(l.clone(), sv).map_err(|x| CliError::Input(x.to_string()))?);
        }
    }
    let grid = default_grid(n);
    let opts = VerifyOptions { exec, ..VerifyOptions::default() };
    let mut csv = String::from("lambda,s,region,A3,A4\n");
    for p in &points {
        let f = crate::regions::f_lambda_s(p);
        let ok = |r: Result<Vec<YCheck>, crate::zerolocus::ZeroError>| match r {
            Ok(v) => if v.iter().all(YCheck::pass) { "pass" } else { "fail" },
            Err(_) => "error",
        };
        csv += &format!(
            "{},{},{},{},{}\n",
            p.lambda,
            p.s,
            classify_p3(p),
            ok(verify_a3(&f, &grid, &opts)),
            ok(verify_a4(&f, &grid, &opts))
        );
    }
    Ok(csv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("ftri").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn show_b3() {
        let (code, out, _) = run_str(&["show", "B3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("expr: B3\n"), "{out}");
        let b3 = crate::ftriangle::f_of(&crate::coxeter::CoxSum::irreducible(crate::coxeter::IrreducibleType::B(3))).unwrap();
        let a = a_decompose(&b3).unwrap();
        assert_eq!(a.poly.coeff(0, 0), crate::exactmath::int(8));
        assert_eq!(a.poly.coeff(1, 0), crate::exactmath::int(-10));
        assert_eq!(a.poly.coeff(0, 1), crate::exactmath::int(-6));
        assert!(out.contains(&format!("A = {}\n", a.poly)));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["show", "A3 +"]).0, 2);
        assert_eq!(run_str(&["show", "A3 + A4"]).0, 2);
        let (code, out, _) = run_str(&["verify", "LS(1/20, 1/2)", "--checks", "A3", "--grid", "8"]);
        assert_eq!(code, 1);
        assert!(out.contains("\"pass\": false"));
        assert_eq!(run_str(&["verify", "A3", "--checks", "A3,A4,A5,A6,B", "--grid", "8"]).0, 0);
        assert_eq!(run_str(&["roots", "A3", "--y", "1/0"]).0, 2);
    }

    #[test]
    fn scan_rows() {
        let (code, out, _) = run_str(&["scan", "--lambda", "1/20..1/20", "--s", "1/2..3/4", "--step", "1/4", "--grid", "32"]);
        assert_eq!(code, 0);
        assert_eq!(out, "lambda,s,region,A3,A4\n1/20,1/2,I,fail,fail\n1/20,3/4,II,pass,fail\n");
    }
}
