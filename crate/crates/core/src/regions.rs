//! Where a triangle sits: the rank-3 polyhedron and its pieces, rank-4
//! coordinates and the translation action, and the boundary inequalities on
//! A-parts.

use crate::coxeter::{CoxMonomial, CoxSum, IrreducibleType};
use crate::exactmath::{int, isolate_roots_real_line, pow2_neg, rat, resultant, BiPoly, MathError, Rational, UniPoly};
use crate::ftriangle::{a_decompose, d_operator, f_chapoton, f_of, AtrianglePart, FError, FTriangle, Provenance};
use crate::par::{self, Exec};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegionError {
    #[error("parameter out of range: lambda = {lambda}, s = {s} (need 0 <= lambda <= 1, s >= 0)")]
    OutOfRange { lambda: Box<Rational>, s: Box<Rational> },
    #[error("A-part is not in the span of the rank-{0} basis")]
    NotInSpan(u32),
    #[error("wrong rank: expected {expected}, got {got}")]
    WrongRank { expected: u32, got: u32 },
    #[error("barycentric basis is degenerate")]
    Degenerate,
    #[error(transparent)]
    Triangle(#[from] FError),
    #[error(transparent)]
    Math(#[from] MathError),
}

/// The three pieces of the rank-3 polyhedron, with the two separating curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum P3Region {
    I,
    /// Boundary quadratic a) vanishes.
    BoundaryIII,
    II,
    /// Boundary quadratic b) vanishes.
    BoundaryIIIII,
    III,
}

impl fmt::Display for P3Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            P3Region::I => "I",
            P3Region::BoundaryIII => "I|II",
            P3Region::II => "II",
            P3Region::BoundaryIIIII => "II|III",
            P3Region::III => "III",
        })
    }
}

/// `(λ, s)` parameterizing `(1-λ)F_{A1^3} + λF_{H3} + s F_{A1} F∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P3Point {
    pub lambda: Rational,
    pub s: Rational,
}

impl P3Point {
    pub fn new(lambda: Rational, s: Rational) -> Result<Self, RegionError> {
        if lambda.is_negative() || lambda > Rational::one() || s.is_negative() {
            return Err(RegionError::OutOfRange { lambda: Box::new(lambda), s: Box::new(s) });
        }
        Ok(P3Point { lambda, s })
    }
}

/// `-32λ + 144λ² + 24λs + s²`.
pub fn quadratic_a(lambda: &Rational, s: &Rational) -> Rational {
    int(-32) * lambda + int(144) * lambda * lambda + int(24) * lambda * s + s * s
}

/// `-36λ + 64λ² + 20λs + s²`.
pub fn quadratic_b(lambda: &Rational, s: &Rational) -> Rational {
    int(-36) * lambda + int(64) * lambda * lambda + int(20) * lambda * s + s * s
}

pub fn classify_p3(p: &P3Point) -> P3Region {
    let qa = quadratic_a(&p.lambda, &p.s);
    let qb = quadratic_b(&p.lambda, &p.s);
    if qa.is_negative() {
        P3Region::I
    } else if qa.is_zero() {
        P3Region::BoundaryIII
    } else if qb.is_negative() {
        P3Region::II
    } else if qb.is_zero() {
        P3Region::BoundaryIIIII
    } else {
        P3Region::III
    }
}

pub fn f_lambda_s(p: &P3Point) -> FTriangle {
    let a1 = IrreducibleType::A(1);
    let a1cubed = f_of(&CoxSum::monomial(CoxMonomial::from_factors(vec![a1; 3]))).expect("supported");
    let h3 = f_of(&CoxSum::irreducible(IrreducibleType::H3)).expect("supported");
    let a1f = &crate::ftriangle::a1_poly() * &BiPoly::f_infty();
    let poly = &(&a1cubed.poly().scale(&(Rational::one() - &p.lambda)) + &h3.poly().scale(&p.lambda)) + &a1f.scale(&p.s);
    FTriangle::new(poly, 3, Rational::one(), Provenance::LambdaS { lambda: p.lambda.clone(), s: p.s.clone() })
        .expect("convex combination plus a trace-zero direction")
}

/// `(a, b)` with `A = a(1/2 - x) + b(1/2 - y)`.
pub fn rank3_coords(a: &AtrianglePart) -> Result<(Rational, Rational), RegionError> {
    if a.rank != 3 {
        return Err(RegionError::WrongRank { expected: 3, got: a.rank });
    }
    let ca = -a.poly.coeff(1, 0);
    let cb = -a.poly.coeff(0, 1);
    let rebuilt = BiPoly::from_terms([
        ((0, 0), (&ca + &cb) / int(2)),
        ((1, 0), -ca.clone()),
        ((0, 1), -cb.clone()),
    ]);
    if rebuilt != a.poly {
        return Err(RegionError::NotInSpan(3));
    }
    Ok((ca, cb))
}

/// Inverse of `(λ, s) ↦ (1 + 20λ + s, 3 + 4λ + s)`; membership is `0 ≤ λ ≤ 1, s ≥ 0`.
pub fn p3_params(a: &Rational, b: &Rational) -> (Rational, Rational) {
    let lambda = (a - b + int(2)) / int(16);
    let s = b - int(3) - int(4) * &lambda;
    (lambda, s)
}

/// Coefficients in the basis `x(x-1), 2xy - x - y, y(y-1), 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rank4Coords {
    #[serde(serialize_with = "ser_display")]
    pub a: Rational,
    #[serde(serialize_with = "ser_display")]
    pub b: Rational,
    #[serde(serialize_with = "ser_display")]
    pub c: Rational,
    #[serde(serialize_with = "ser_display")]
    pub d: Rational,
}

fn ser_display<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl Rank4Coords {
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Rank4Coords { a: int(a), b: int(b), c: int(c), d: int(d) }
    }

    pub fn to_vec(&self) -> [Rational; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn a_poly(&self) -> BiPoly {
        BiPoly::from_terms([
            ((2, 0), self.a.clone()),
            ((1, 0), -&self.a - &self.b),
            ((1, 1), int(2) * &self.b),
            ((0, 1), -&self.b - &self.c),
            ((0, 2), self.c.clone()),
            ((0, 0), self.d.clone()),
        ])
    }
}

impl fmt::Display for Rank4Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

pub fn rank4_coords(a: &AtrianglePart) -> Result<Rank4Coords, RegionError> {
    if a.rank != 4 {
        return Err(RegionError::WrongRank { expected: 4, got: a.rank });
    }
    let c = Rank4Coords {
        a: a.poly.coeff(2, 0),
        b: a.poly.coeff(1, 1) / int(2),
        c: a.poly.coeff(0, 2),
        d: a.poly.coeff(0, 0),
    };
    if c.a_poly() != a.poly {
        return Err(RegionError::NotInSpan(4));
    }
    Ok(c)
}

/// Translation by `s1 F_{A1}² F∞ + s2 F∞²` in coordinates.
pub fn rank4_action(c: &Rank4Coords, s1: &Rational, s2: &Rational) -> Rank4Coords {
    Rank4Coords { a: &c.a + s1 + s2, b: &c.b + s1, c: &c.c + s1, d: &c.d + s1 }
}

/// `(λ, μ, ν, s1, s2)` with `c = λ·I4(0,0) + μ·A1H3 + ν·H4 + action(s1, s2)`
/// and `λ + μ + ν = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Barycentric {
    pub lambda: Rational,
    pub mu: Rational,
    pub nu: Rational,
    pub s1: Rational,
    pub s2: Rational,
}

impl Barycentric {
    pub fn to_vec(&self) -> [Rational; 5] {
        [self.lambda.clone(), self.mu.clone(), self.nu.clone(), self.s1.clone(), self.s2.clone()]
    }
}

fn barycentric_vertices() -> [Rank4Coords; 3] {
    [Rank4Coords::from_ints(1, 2, 6, 3), Rank4Coords::from_ints(21, 14, 10, 15), Rank4Coords::from_ints(232, 16, 11, 59)]
}

pub fn barycentric_p4(c: &Rank4Coords) -> Result<Barycentric, RegionError> {
    let [v0, v1, v2] = barycentric_vertices().map(|v| v.to_vec());
    let g1 = [int(1), int(1), int(1), int(1)];
    let g2 = [int(1), int(0), int(0), int(0)];
    let cols = [&v0, &v1, &v2, &g1, &g2];
    let target = c.to_vec();
    let mut m: Vec<Vec<Rational>> = (0..4)
        .map(|r| cols.iter().map(|col| col[r].clone()).chain([target[r].clone()]).collect())
        .collect();
    m.push(vec![int(1), int(1), int(1), int(0), int(0), int(1)]);
    let x = solve(m).ok_or(RegionError::Degenerate)?;
    Ok(Barycentric {
        lambda: x[0].clone(),
        mu: x[1].clone(),
        nu: x[2].clone(),
        s1: x[3].clone(),
        s2: x[4].clone(),
    })
}

/// Gauss-Jordan on an augmented `n × (n+1)` matrix.
fn solve(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=n {
                    let t = &f * &m[col][k];
                    m[r][k] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// One inequality with its exact value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub k: u32,
    #[serde(serialize_with = "ser_display")]
    pub value: Rational,
    pub pass: bool,
}

/// A-parts of `F, DF, …, D^{l-2}F`.
fn a_parts(f: &FTriangle) -> Result<Vec<AtrianglePart>, RegionError> {
    let mut out = Vec::new();
    let mut cur = f.clone();
    while cur.rank() >= 2 {
        out.push(a_decompose(&cur)?);
        cur = d_operator(&cur)?;
    }
    Ok(out)
}

/// `(-1)^{l-k} (D^kA(1, 0) - trace) ≥ 0` for `0 ≤ k ≤ l-2`.
pub fn check_71(f: &FTriangle) -> Result<Vec<Condition>, RegionError> {
    let l = f.rank();
    if l < 2 {
        return Err(FError::RankTooSmall { needed: 2, rank: l }.into());
    }
    Ok(a_parts(f)?
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let v = a.eval(&int(1), &int(0)) - f.trace();
            let value = if (l as usize - k).is_multiple_of(2) { v } else { -v };
            Condition { k: k as u32, pass: !value.is_negative(), value }
        })
        .collect())
}

/// `1 - x·A(x, 0)`.
fn one_minus_x_a(a: &AtrianglePart) -> UniPoly {
    UniPoly::one() - UniPoly::x() * a.poly.specialize_y(&Rational::zero())
}

/// `(-1)^{⌊(l-k)/2⌋} Res(1 - x D^{k-1}A|_{y=0}, 1 - x D^kA|_{y=0}) ≥ 0` for `0 < k ≤ l-2`.
pub fn check_72(f: &FTriangle) -> Result<Vec<Condition>, RegionError> {
    let l = f.rank();
    if l < 3 {
        return Err(FError::RankTooSmall { needed: 3, rank: l }.into());
    }
    let parts = a_parts(f)?;
    (1..parts.len())
        .map(|k| {
            let r = resultant(&one_minus_x_a(&parts[k - 1]), &one_minus_x_a(&parts[k]))?;
            let value = if ((l as usize - k) / 2).is_multiple_of(2) { r } else { -r };
            Ok(Condition { k: k as u32, pass: !value.is_negative(), value })
        })
        .collect()
}

/// The value `1 - A(1, 0)` and, for a single irreducible type with a known
/// closed form, the expected value.
pub fn skew_growth_check(f: &FTriangle) -> Result<(Rational, Option<Rational>), RegionError> {
    let a = a_decompose(f)?;
    let value = Rational::one() - a.eval(&int(1), &int(0));
    let expected = match f.provenance() {
        Provenance::Cox(s) => {
            let mut terms = s.terms();
            match (terms.next(), terms.next()) {
                (Some((m, c)), None) if c.is_one() && m.factors().len() == 1 => skew_growth_value(m.factors()[0]),
                _ => None,
            }
        }
        _ => None,
    };
    Ok((value, expected))
}

/// Reduced skew growth value at 1 for the irreducible types.
pub fn skew_growth_value(t: IrreducibleType) -> Option<Rational> {
    use IrreducibleType::*;
    let sgn = |l: u32| if l % 2 == 1 { 1 } else { -1 };
    let v = match t {
        A(l) => sgn(l),
        B(l) => sgn(l) * l as i64,
        D(l) => sgn(l) * (l as i64 - 2),
        E6 => -7,
        E7 => 16,
        E8 => -44,
        F4 => -10,
        H3 => 8,
        H4 => -42,
        I2(p) => 2 - p as i64,
    };
    Some(int(v))
}

/// Whether every `F|_y` on the grid has only real roots.
pub fn totally_real_on(f: &FTriangle, grid: &[Rational], exec: Exec) -> Vec<(Rational, bool)> {
    let w = pow2_neg(8);
    par::map(exec, grid, |y| {
        let p = f.at_y(y);
        let ok = match (p.degree(), isolate_roots_real_line(&p, &w)) {
            (Some(d), Ok(rs)) => rs.iter().map(|r| r.multiplicity).sum::<usize>() == d,
            _ => false,
        };
        (y.clone(), ok)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureBReport {
    pub schema: u32,
    pub triangle: String,
    pub condition_71: Vec<Condition>,
    pub condition_72: Vec<Condition>,
    pub totally_real: bool,
    pub not_totally_real_at: Vec<String>,
}

impl ConjectureBReport {
    pub fn member(&self) -> bool {
        self.totally_real && self.condition_71.iter().chain(&self.condition_72).all(|c| c.pass)
    }
}

pub fn conjecture_b_membership(f: &FTriangle, grid: &[Rational], exec: Exec) -> Result<ConjectureBReport, RegionError> {
    let c71 = check_71(f)?;
    let c72 = if f.rank() >= 3 { check_72(f)? } else { Vec::new() };
    let bad: Vec<String> = totally_real_on(f, grid, exec)
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(y, _)| y.to_string())
        .collect();
    Ok(ConjectureBReport {
        schema: 1,
        triangle: f.provenance().to_string(),
        condition_71: c71,
        condition_72: c72,
        totally_real: bad.is_empty(),
        not_totally_real_at: bad,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChapotonRange {
    Outside,
    InA3Only { boundary: bool },
    InP3 { boundary: bool },
}

/// Position of `Chap(h)` computed from its rank-3 coordinates.
pub fn chapoton_range(h: &Rational) -> Result<ChapotonRange, RegionError> {
    let f = f_chapoton(h)?;
    let (a, b) = rank3_coords(&a_decompose(&f)?)?;
    if a.is_negative() || !b.is_positive() {
        return Ok(ChapotonRange::Outside);
    }
    let (lambda, s) = p3_params(&a, &b);
    if !lambda.is_negative() && lambda <= Rational::one() && !s.is_negative() {
        let boundary = lambda.is_zero() || lambda.is_one() || s.is_zero();
        return Ok(ChapotonRange::InP3 { boundary });
    }
    Ok(ChapotonRange::InA3Only { boundary: a.is_zero() })
}

/// Totally-real criterion for virtual types: the roots of
/// `T^k + s_1 T^{k-1} + … + s_k` are all real and nonpositive.
pub fn virtual_totally_real(s: &[Rational]) -> bool {
    if s.is_empty() {
        return true;
    }
    let mut coeffs: Vec<Rational> = s.iter().rev().cloned().collect();
    coeffs.push(Rational::one());
    let p = UniPoly::from_coeffs(coeffs);
    let roots = isolate_roots_real_line(&p, &rat(1, 1024)).expect("monic");
    roots.iter().map(|r| r.multiplicity).sum::<usize>() == s.len() && roots.iter().all(|r| !r.lo.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::ftriangle::{f_virtual, tables};
    use crate::zerolocus::default_grid;
    use IrreducibleType::*;

    fn irr(t: IrreducibleType) -> FTriangle {
        f_of(&CoxSum::irreducible(t)).unwrap()
    }

    #[test]
    fn lambda_s_family() {
        let p = P3Point::new(int(0), int(0)).unwrap();
        let a1 = crate::ftriangle::a1_poly();
        assert_eq!(f_lambda_s(&p).poly(), &a1.pow(3));
        assert_eq!(f_lambda_s(&P3Point::new(int(1), int(0)).unwrap()).poly(), irr(H3).poly());
        let f = f_lambda_s(&P3Point::new(rat(1, 2), int(2)).unwrap());
        assert_eq!(f.poly().coeff(3, 0), int(-13));
        assert!(P3Point::new(int(2), int(0)).is_err());
    }

    #[test]
    fn region_samples() {
        let at = |s| classify_p3(&P3Point::new(rat(1, 20), s).unwrap());
        assert_eq!(at(rat(1, 2)), P3Region::I);
        assert_eq!(at(rat(3, 4)), P3Region::II);
        assert_eq!(at(int(1)), P3Region::III);
    }

    #[test]
    fn rational_points_on_the_curves() {
        for u in [rat(1, 3), rat(1, 2), int(1), rat(5, 2)] {
            let lambda = &u * &u / int(32);
            let s = &u - int(3) * &u * &u / int(8);
            assert_eq!(classify_p3(&P3Point::new(lambda, s).unwrap()), P3Region::BoundaryIII);
        }
        for m in [rat(5, 3), int(2), int(3), int(7)] {
            let lambda = int(1) / (&m * &m - int(1));
            let s = (int(6) * &m - int(10)) / (&m * &m - int(1));
            assert_eq!(classify_p3(&P3Point::new(lambda, s).unwrap()), P3Region::BoundaryIIIII);
        }
    }

    #[test]
    fn rank3_plane() {
        let expect = [(A(3), 5, 5), (B(3), 10, 6), (H3, 21, 7)];
        for (t, a, b) in expect {
            assert_eq!(rank3_coords(&a_decompose(&irr(t)).unwrap()).unwrap(), (int(a), int(b)));
        }
        let (l, s) = p3_params(&int(21), &int(7));
        assert_eq!((l, s), (int(1), int(0)));
    }

    #[test]
    fn rank4_rows() {
        let rows = [
            (A(4), (14, 7, 9, 9)),
            (B(4), (35, 10, 10, 15)),
            (D(4), (20, 8, 9, 11)),
            (F4, (66, 12, 10, 23)),
            (H4, (232, 16, 11, 59)),
        ];
        for (t, (a, b, c, d)) in rows {
            let got = rank4_coords(&a_decompose(&irr(t)).unwrap()).unwrap();
            assert_eq!(got, Rank4Coords::from_ints(a, b, c, d), "{t}");
        }
        let a = BiPoly::from_int_terms(tables::A1B3.a_part);
        let got = rank4_coords(&AtrianglePart { poly: a, rank: 4 }).unwrap();
        assert_eq!(got, Rank4Coords::from_ints(10, 8, 9, 9));
    }

    #[test]
    fn virtual_rank4_row_and_action() {
        let (s1, s2) = (rat(2, 3), rat(5, 7));
        let f = f_virtual(4, &[s1.clone(), s2.clone()]).unwrap();
        let got = rank4_coords(&a_decompose(&f).unwrap()).unwrap();
        let base = Rank4Coords::from_ints(1, 2, 6, 3);
        assert_eq!(got, rank4_action(&base, &s1, &s2));
    }

    #[test]
    fn barycentric_rows() {
        let b = barycentric_p4(&Rank4Coords::from_ints(14, 7, 9, 9)).unwrap();
        assert_eq!(b.to_vec(), [rat(253, 336), rat(25, 112), rat(1, 42), rat(167, 84), rat(22, 21)]);
        let b = barycentric_p4(&Rank4Coords::from_ints(66, 12, 10, 23)).unwrap();
        assert_eq!(b.s2, rat(-11, 21));
        let b = barycentric_p4(&Rank4Coords::from_ints(232, 16, 11, 59)).unwrap();
        assert_eq!(b.to_vec(), [int(0), int(0), int(1), int(0), int(0)]);
    }

    #[test]
    fn conditions_71_72() {
        let a3 = irr(A(3));
        let c = check_71(&a3).unwrap();
        assert_eq!(c.iter().map(|c| c.value.clone()).collect::<Vec<_>>(), vec![int(1), rat(2, 3)]);
        assert_eq!(check_72(&a3).unwrap()[0].value, rat(5, 9));
        let i2 = irr(I2(7));
        assert_eq!(check_71(&i2).unwrap()[0].value, int(5));
        let v = f_virtual(5, &[int(1), int(3)]).unwrap();
        assert!(check_72(&v).unwrap().iter().filter(|c| c.k < 3).all(|c| c.value.is_zero()));
    }

    #[test]
    fn example_three_formula() {
        for (a, b) in [(int(5), int(5)), (rat(3, 2), rat(7, 3)), (int(21), int(7))] {
            let apart = BiPoly::from_terms([
                ((0, 0), (&a + &b) / int(2)),
                ((1, 0), -a.clone()),
                ((0, 1), -b.clone()),
            ]);
            let f = crate::ftriangle::from_a_part(&apart, 3, &int(1), Provenance::Expr("ab".into()));
            let r = check_72(&f).unwrap()[0].value.clone();
            assert_eq!(-r, (int(18) * &a - int(3) * &a * &b - &b * &b) / int(18));
        }
    }

    #[test]
    fn skew_growth_columns() {
        for (t, v) in [(A(3), 1), (B(3), 3), (H3, 8), (A(4), -1), (B(4), -4), (D(4), -2), (F4, -10), (H4, -42), (I2(9), -7)] {
            let (value, expected) = skew_growth_check(&irr(t)).unwrap();
            assert_eq!(value, int(v), "{t}");
            assert_eq!(expected, Some(int(v)));
        }
    }

    #[test]
    fn chapoton_positions() {
        assert_eq!(chapoton_range(&int(1)).unwrap(), ChapotonRange::InA3Only { boundary: true });
        assert_eq!(chapoton_range(&int(2)).unwrap(), ChapotonRange::InP3 { boundary: true });
        assert_eq!(chapoton_range(&int(4)).unwrap(), ChapotonRange::InP3 { boundary: false });
        assert_eq!(chapoton_range(&int(10)).unwrap(), ChapotonRange::InP3 { boundary: true });
        assert_eq!(chapoton_range(&int(11)).unwrap(), ChapotonRange::InA3Only { boundary: false });
        assert_eq!(chapoton_range(&rat(1, 2)).unwrap(), ChapotonRange::Outside);
        assert!(chapoton_range(&int(-2)).is_err());
    }

    #[test]
    fn conjecture_b_members() {
        let r = conjecture_b_membership(&irr(B(4)), &default_grid(16), Exec::Sequential).unwrap();
        assert!(r.member());
        let ls = f_lambda_s(&P3Point::new(rat(1, 20), rat(1, 2)).unwrap());
        let r = conjecture_b_membership(&ls, &default_grid(16), Exec::Sequential).unwrap();
        assert!(!r.totally_real);
    }

    #[test]
    fn virtual_reality_matches_grid() {
        let grid = default_grid(8);
        for s in [vec![int(1)], vec![int(1), int(0)], vec![int(3), int(2)], vec![int(1), int(1)], vec![int(0), int(0)]] {
            let f = f_virtual(2 * s.len() as u32 + 1, &s).unwrap();
            let grid_ok = totally_real_on(&f, &grid, Exec::Sequential).iter().all(|(_, ok)| *ok);
            assert_eq!(grid_ok, virtual_totally_real(&s), "{s:?}");
        }
    }
}
