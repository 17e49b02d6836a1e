use super::bending::{find_bending, BendKind};
use super::dseq::d_sequence;
use super::profile::{profile_at, unit_roots};
use super::ZeroError;
use crate::exactmath::{int, pow2_neg, IsolatedRoot, Rational, UniPoly, Var};
use crate::ftriangle::{d_operator, FTriangle};
use crate::par::{self, Exec};
use num_traits::{One, Zero};
use serde::Serialize;
use std::cmp::Ordering;

/// Required sign of a product of two D-sequence values at a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    Negative,
    Positive,
}

impl SignConvention {
    fn accepts(self, s: Ordering) -> bool {
        match self {
            SignConvention::Negative => s == Ordering::Less,
            SignConvention::Positive => s == Ordering::Greater,
        }
    }

    fn other(self) -> Self {
        match self {
            SignConvention::Negative => SignConvention::Positive,
            SignConvention::Positive => SignConvention::Negative,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Width to which roots are isolated before comparison.
    pub width: Rational,
    /// `D^{k-1}F · D^{k+1}F` at roots of `D^kF`.
    pub a6_neighbours: SignConvention,
    /// `∂F/∂x · DF` at roots of `F`.
    pub a6_derivative: SignConvention,
    pub exec: Exec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            width: pow2_neg(12),
            a6_neighbours: SignConvention::Negative,
            a6_derivative: SignConvention::Negative,
            exec: Exec::default(),
        }
    }
}

/// A failed check at one `y`, with the exact evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: &'static str,
    #[serde(serialize_with = "ser_display")]
    pub y: Rational,
    pub detail: String,
    pub witness: String,
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Outcome of one check at one `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YCheck {
    pub y: Rational,
    /// Set when `y` was skipped, with the reason.
    pub excluded: Option<String>,
    pub failures: Vec<Failure>,
    /// Number of sign tests that would fail under the other sign convention
    /// (A6 only).
    pub alt_failures: usize,
}

impl YCheck {
    fn new(y: &Rational) -> Self {
        YCheck { y: y.clone(), excluded: None, failures: Vec::new(), alt_failures: 0 }
    }

    fn excluded(y: &Rational, reason: String) -> Self {
        YCheck { excluded: Some(reason), ..YCheck::new(y) }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, check: &'static str, detail: String, witness: String) {
        self.failures.push(Failure { check, y: self.y.clone(), detail, witness });
    }
}

pub type A3Result = YCheck;
pub type A4Result = YCheck;
pub type A5Result = YCheck;
pub type A6Result = YCheck;

/// `j/n` for `j = 0..=n`, plus `1/2`.
pub fn default_grid(n: u32) -> Vec<Rational> {
    let n = n.max(1) as i64;
    let mut g: Vec<Rational> = (0..=n).map(|j| Rational::new(j.into(), n.into())).collect();
    let half = Rational::new(1.into(), 2.into());
    if let Err(pos) = g.binary_search(&half) {
        g.insert(pos, half);
    }
    g
}

fn sym(s: Ordering) -> &'static str {
    match s {
        Ordering::Less => "-",
        Ordering::Equal => "0",
        Ordering::Greater => "+",
    }
}

fn interval(r: &IsolatedRoot) -> String {
    match r.exact_value() {
        Some(v) => format!("x = {v}"),
        None => format!("x in ({}, {})", r.lo, r.hi),
    }
}

fn at_corner(y: &Rational, r: &IsolatedRoot) -> bool {
    (y.is_zero() && r.exact_value().is_some_and(|v| v.is_one()))
        || (y.is_one() && r.exact_value().is_some_and(|v| v.is_zero()))
}

fn sweep<F>(grid: &[Rational], exec: Exec, check: F) -> Result<Vec<YCheck>, ZeroError>
where
    F: Fn(&Rational) -> Result<YCheck, ZeroError> + Sync + Send,
{
    par::map(exec, grid, check).into_iter().collect()
}

/// `F|_y` has `l` roots in `[0, 1]` (with multiplicity) and none outside.
pub fn verify_a3(f: &FTriangle, grid: &[Rational], opts: &VerifyOptions) -> Result<Vec<A3Result>, ZeroError> {
    let l = f.rank() as usize;
    sweep(grid, opts.exec, |y| {
        let mut out = YCheck::new(y);
        let p = profile_at(f, y, &opts.width)?;
        if p.identically_zero {
            out.fail("A3", "F|y vanishes identically".into(), "all coefficients are zero".into());
            return Ok(out);
        }
        if p.count_in_unit != l {
            out.fail(
                "A3",
                format!("{} roots in [0,1], expected {l}", p.count_in_unit),
                format!("Sturm count on [0,1] is {}", p.count_in_unit),
            );
        }
        if let Some(r) = p.roots.iter().find(|r| !super::profile::in_unit(r)) {
            out.fail("A3", "real root outside [0,1]".into(), interval(r));
        }
        if p.outside_signs_ok == Some(false) {
            out.fail(
                "A3",
                "wrong sign outside [0,1]".into(),
                format!("F(-1) = {}, F(2) = {}", p.poly.eval(&int(-1)), p.poly.eval(&int(2))),
            );
        }
        Ok(out)
    })
}

/// At each simple root in `[0, 1]` for `0 < y < 1`, `∂F/∂x` and `∂F/∂y` have
/// the same sign, so the root decreases in `y`.
pub fn verify_a4(f: &FTriangle, grid: &[Rational], opts: &VerifyOptions) -> Result<Vec<A4Result>, ZeroError> {
    let fx = f.poly().partial(Var::X);
    let fy = f.poly().partial(Var::Y);
    let interior: Vec<Rational> = grid.iter().filter(|y| !y.is_zero() && !y.is_one()).cloned().collect();
    sweep(&interior, opts.exec, |y| {
        let p = f.at_y(y);
        if p.is_zero() {
            return Ok(YCheck::excluded(y, "F|y vanishes identically".into()));
        }
        let mut out = YCheck::new(y);
        let (px, py) = (fx.specialize_y(y), fy.specialize_y(y));
        for r in unit_roots(&p, &opts.width)? {
            if r.multiplicity > 1 {
                continue;
            }
            let (sx, sy) = (r.sign_of(&px), r.sign_of(&py));
            if !(sx == sy && sx != Ordering::Equal) {
                out.fail(
                    "A4",
                    "root is not strictly decreasing in y".into(),
                    format!("{}: sign dF/dx = {}, sign dF/dy = {}", interval(&r), sym(sx), sym(sy)),
                );
            }
        }
        Ok(out)
    })
}

/// Roots of `F|_y` and `DF|_y` in `[0, 1]` interlace; ties only at multiple
/// roots of `F|_y` or at the corners `(1, 0)` and `(0, 1)`.
pub fn verify_a5(f: &FTriangle, grid: &[Rational], opts: &VerifyOptions) -> Result<Vec<A5Result>, ZeroError> {
    let l = f.rank() as usize;
    if l < 2 {
        return Ok(grid.iter().map(YCheck::new).collect());
    }
    let df = d_operator(f)?;
    sweep(grid, opts.exec, |y| {
        let (p, q) = (f.at_y(y), df.at_y(y));
        if p.is_zero() || q.is_zero() {
            return Ok(YCheck::excluded(y, "F|y or DF|y vanishes identically".into()));
        }
        let mut out = YCheck::new(y);
        let expand = |v: Vec<IsolatedRoot>| -> Vec<IsolatedRoot> {
            v.into_iter().flat_map(|r| std::iter::repeat_n(r.clone(), r.multiplicity)).collect()
        };
        let xs = expand(unit_roots(&p, &opts.width)?);
        let ds = expand(unit_roots(&q, &opts.width)?);
        if xs.len() != l || ds.len() != l - 1 {
            out.fail(
                "A5",
                "wrong number of roots for interlacing".into(),
                format!("F|y has {} roots in [0,1], DF|y has {}", xs.len(), ds.len()),
            );
            return Ok(out);
        }
        for i in 0..l - 1 {
            for (j, f_below) in [(i, true), (i + 1, false)] {
                let (mut a, mut b) = (xs[j].clone(), ds[i].clone());
                let ord = if f_below { a.compare(&mut b) } else { b.compare(&mut a) };
                match ord {
                    Ordering::Less => {}
                    Ordering::Equal if xs[j].multiplicity > 1 || at_corner(y, &xs[j]) => {}
                    _ => out.fail(
                        "A5",
                        format!("interlacing fails between x_{} and x'_{}", j + 1, i + 1),
                        format!("F root {}, DF root {}", interval(&xs[j]), interval(&ds[i])),
                    ),
                }
            }
        }
        Ok(out)
    })
}

/// Sign conditions along the D-sequence. Requires every `D^kF` to be reduced
/// as a bivariate polynomial; a `y` where some `D^kF|_y` is not square-free
/// is excluded.
pub fn verify_a6(f: &FTriangle, grid: &[Rational], opts: &VerifyOptions) -> Result<Vec<A6Result>, ZeroError> {
    let d = d_sequence(f);
    let l = f.rank() as usize;
    if let Some(k) = d.polys()[..l].iter().position(|p| !p.is_reduced()) {
        let reason = format!("D^{k}F non-reduced as bivariate");
        return Ok(grid.iter().map(|y| YCheck::excluded(y, reason.clone())).collect());
    }
    let fx = f.poly().partial(Var::X);
    sweep(grid, opts.exec, |y| {
        let ps: Vec<UniPoly> = d.at_y(y);
        for (k, p) in ps[..l].iter().enumerate() {
            if p.is_zero() {
                return Ok(YCheck::excluded(y, format!("D^{k}F|y vanishes identically")));
            }
            if !p.is_square_free() {
                return Ok(YCheck::excluded(y, format!("D^{k}F|y is not square-free")));
            }
        }
        let mut out = YCheck::new(y);
        for k in 1..l {
            for r in unit_roots(&ps[k], &opts.width)? {
                let s = mul_sign(r.sign_of(&ps[k - 1]), r.sign_of(&ps[k + 1]));
                if s == Ordering::Equal && at_corner(y, &r) {
                    continue;
                }
                if !opts.a6_neighbours.accepts(s) {
                    out.fail(
                        "A6",
                        format!("sign of D^{}F * D^{}F at a root of D^{k}F", k - 1, k + 1),
                        format!("{}: product sign {}", interval(&r), sym(s)),
                    );
                }
                if !opts.a6_neighbours.other().accepts(s) {
                    out.alt_failures += 1;
                }
            }
        }
        let px = fx.specialize_y(y);
        for r in unit_roots(&ps[0], &opts.width)? {
            let s = mul_sign(r.sign_of(&px), r.sign_of(&ps[1]));
            if s == Ordering::Equal && at_corner(y, &r) {
                continue;
            }
            if !opts.a6_derivative.accepts(s) {
                out.fail("A6", "sign of dF/dx * DF at a root of F".into(), format!("{}: product sign {}", interval(&r), sym(s)));
            }
            if !opts.a6_derivative.other().accepts(s) {
                out.alt_failures += 1;
            }
        }
        Ok(out)
    })
}

fn mul_sign(a: Ordering, b: Ordering) -> Ordering {
    match (a, b) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        _ if a == b => Ordering::Greater,
        _ => Ordering::Less,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub pass: bool,
    pub checked: usize,
    pub failed: usize,
    pub excluded: Vec<(String, String)>,
    /// Sign tests failing under the other sign convention (A6 only).
    pub alt_convention_failures: usize,
}

impl CheckSummary {
    pub fn of(results: &[YCheck]) -> Self {
        CheckSummary {
            pass: results.iter().all(YCheck::pass),
            checked: results.iter().filter(|r| r.excluded.is_none()).count(),
            failed: results.iter().filter(|r| !r.pass()).count(),
            excluded: results
                .iter()
                .filter_map(|r| r.excluded.as_ref().map(|e| (r.y.to_string(), e.clone())))
                .collect(),
            alt_convention_failures: results.iter().map(|r| r.alt_failures).sum(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BendingEntry {
    pub y: String,
    pub x: String,
    pub multiplicity: usize,
    pub indices: Vec<usize>,
    pub kinds: Vec<BendKind>,
    pub boundary: bool,
}

/// Machine-readable report of all four checks over one grid.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureAReport {
    pub schema: u32,
    pub triangle: String,
    pub rank: u32,
    pub trace: String,
    pub grid_points: usize,
    pub a6_neighbours: SignConvention,
    pub a6_derivative: SignConvention,
    pub a3: CheckSummary,
    pub a4: CheckSummary,
    pub a5: CheckSummary,
    pub a6: CheckSummary,
    pub bending: Result<Vec<BendingEntry>, String>,
    pub failures: Vec<Failure>,
}

impl ConjectureAReport {
    pub fn pass(&self) -> bool {
        self.a3.pass && self.a4.pass && self.a5.pass && self.a6.pass
    }
}

fn root_text(r: &IsolatedRoot) -> String {
    match r.exact_value() {
        Some(v) => v.to_string(),
        None => format!("({}, {})", r.lo, r.hi),
    }
}

pub fn verify_all(f: &FTriangle, grid: &[Rational], opts: &VerifyOptions) -> Result<ConjectureAReport, ZeroError> {
    let a3 = verify_a3(f, grid, opts)?;
    let a4 = verify_a4(f, grid, opts)?;
    let a5 = verify_a5(f, grid, opts)?;
    let a6 = verify_a6(f, grid, opts)?;
    let bending = match find_bending(f, &opts.width) {
        Ok(pts) => Ok(pts
            .iter()
            .map(|p| BendingEntry {
                y: root_text(&p.y),
                x: root_text(&p.x),
                multiplicity: p.multiplicity,
                indices: p.indices.clone(),
                kinds: p.kinds.clone(),
                boundary: p.on_boundary,
            })
            .collect()),
        Err(e) => Err(e.to_string()),
    };
    let failures = [&a3, &a4, &a5, &a6]
        .iter()
        .flat_map(|v| v.iter().flat_map(|r| r.failures.iter().cloned()))
        .collect();
    Ok(ConjectureAReport {
        schema: 1,
        triangle: f.provenance().to_string(),
        rank: f.rank(),
        trace: f.trace().to_string(),
        grid_points: grid.len(),
        a6_neighbours: opts.a6_neighbours,
        a6_derivative: opts.a6_derivative,
        a3: CheckSummary::of(&a3),
        a4: CheckSummary::of(&a4),
        a5: CheckSummary::of(&a5),
        a6: CheckSummary::of(&a6),
        bending,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxMonomial, CoxSum, IrreducibleType::*};
    use crate::ftriangle::f_of;

    fn opts() -> VerifyOptions {
        VerifyOptions { width: pow2_neg(24), ..VerifyOptions::default() }
    }

    #[test]
    fn grid_has_half() {
        assert_eq!(default_grid(4).len(), 5);
        assert_eq!(default_grid(3).len(), 5);
        assert_eq!(default_grid(256).len(), 257);
    }

    #[test]
    fn a4_passes_for_h4_coarse() {
        let f = f_of(&CoxSum::irreducible(H4)).unwrap();
        let r = verify_all(&f, &default_grid(16), &opts()).unwrap();
        assert!(r.pass(), "{:?}", r.failures);
    }

    #[test]
    fn product_reports_bending() {
        let f = f_of(&CoxSum::monomial(CoxMonomial::from_factors(vec![A(1), A(3)]))).unwrap();
        let r = verify_all(&f, &default_grid(8), &opts()).unwrap();
        assert!(r.a3.pass && r.a4.pass && r.a5.pass);
        let b = r.bending.unwrap();
        assert!(b.iter().any(|e| !e.boundary && e.y == "1/2"));
    }

    #[test]
    fn flipped_neighbour_convention_fails() {
        let f = f_of(&CoxSum::irreducible(A(4))).unwrap();
        let mut o = opts();
        o.a6_neighbours = SignConvention::Positive;
        let r = verify_a6(&f, &default_grid(8), &o).unwrap();
        assert!(r.iter().any(|c| !c.pass()));
        assert!(verify_a6(&f, &default_grid(8), &opts()).unwrap().iter().all(YCheck::pass));
    }
}
