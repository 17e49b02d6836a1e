//! F-triangles: construction from Coxeter data, virtual types, the Chapoton
//! family, the A-triangle decomposition and the normalized derivation `D`.

#[rustfmt::skip]
pub mod tables;

use crate::coxeter::{CoxError, CoxMonomial, CoxSum, IrreducibleType};
use crate::exactmath::{int, BiPoly, Rational, UniPoly, Var};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FError {
    #[error("no F-table for type {0}")]
    NoTable(IrreducibleType),
    #[error("not in Sigma stratification: ({0})")]
    NotInSigma(String),
    #[error("translation vector must be nonnegative: ({0})")]
    NegativeTranslation(String),
    #[error("parameter vector has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("pole in family at h = -2")]
    PoleInFamily,
    #[error("operation needs rank at least {needed}, got {rank}")]
    RankTooSmall { needed: u32, rank: u32 },
    #[error("not an F-triangle (boundary mismatch)")]
    BoundaryMismatch,
    #[error("cannot add triangles of rank {0} and {1}")]
    MixedRank(u32, u32),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Cox(#[from] CoxError),
}

/// Where a triangle came from; rendered into reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Cox(CoxSum),
    Virtual { l: u32, s: Vec<Rational> },
    Chapoton(Rational),
    LambdaS { lambda: Rational, s: Rational },
    Derived { base: Box<Provenance>, order: u32 },
    Translated { base: Box<Provenance>, s: Vec<Rational> },
    Factor { base: Box<Provenance>, index: usize },
    Expr(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Cox(s) => write!(f, "{s}"),
            Provenance::Virtual { l, s } => write!(f, "I({l}; {})", join(s)),
            Provenance::Chapoton(h) => write!(f, "Chap({h})"),
            Provenance::LambdaS { lambda, s } => write!(f, "LS({lambda}, {s})"),
            Provenance::Derived { base, order } => write!(f, "D^{order}({base})"),
            Provenance::Translated { base, s } => write!(f, "({base}).translate({})", join(s)),
            Provenance::Factor { base, index } => write!(f, "factor {index} of ({base})"),
            Provenance::Expr(e) => f.write_str(e),
        }
    }
}

fn join(v: &[Rational]) -> String {
    v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")
}

/// A rank-`l` polynomial obeying the F-triangle identities, with its trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTriangle {
    poly: BiPoly,
    rank: u32,
    trace: Rational,
    provenance: Provenance,
}

impl FTriangle {
    /// Checks `poly(0,0) = trace`, the rotation identity and both boundary formulas.
    pub fn new(poly: BiPoly, rank: u32, trace: Rational, provenance: Provenance) -> Result<Self, FError> {
        let t = FTriangle { poly, rank, trace, provenance };
        if let Some(v) = t.invariant_violations().into_iter().next() {
            return Err(FError::Invariant(v));
        }
        Ok(t)
    }

    fn new_unchecked(poly: BiPoly, rank: u32, trace: Rational, provenance: Provenance) -> Self {
        debug_assert!(poly.eval(&Rational::zero(), &Rational::zero()) == trace);
        FTriangle { poly, rank, trace, provenance }
    }

    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn trace(&self) -> &Rational {
        &self.trace
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    /// Human-readable list of failed identities; empty when all hold.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let l = self.rank;
        let zero = Rational::zero();
        if self.poly.eval(&zero, &zero) != self.trace {
            out.push(format!("F(0,0) = {} but trace is {}", self.poly.eval(&zero, &zero), self.trace));
        }
        if self.poly.total_degree().unwrap_or(0) > l {
            out.push(format!("total degree exceeds rank {l}"));
        }
        let rotated = self.poly.rotate();
        let expect = if l.is_multiple_of(2) { rotated } else { -rotated };
        if expect != self.poly {
            out.push("rotation identity F(x,y) = (-1)^l F(1-x,1-y) fails".into());
        }
        let (_, u, v) = self.poly.divide_by_finfty();
        let (bu, bv) = b_parts(l);
        if v != bv.scale(&self.trace) {
            out.push("F(0,y) differs from trace·(1-y)^l".into());
        }
        if u != bu.scale(&self.trace) {
            out.push("F(1,y) differs from trace·(-y)^l".into());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> FTriangle {
        FTriangle::new_unchecked(self.poly.scale(c), self.rank, &self.trace * c, self.provenance.clone())
    }

    pub fn add(&self, other: &FTriangle) -> Result<FTriangle, FError> {
        if self.rank != other.rank {
            return Err(FError::MixedRank(self.rank, other.rank));
        }
        Ok(FTriangle::new_unchecked(
            &self.poly + &other.poly,
            self.rank,
            &self.trace + &other.trace,
            Provenance::Expr(format!("{} + {}", self.provenance, other.provenance)),
        ))
    }

    pub fn mul(&self, other: &FTriangle) -> FTriangle {
        FTriangle::new_unchecked(
            &self.poly * &other.poly,
            self.rank + other.rank,
            &self.trace * &other.trace,
            Provenance::Expr(format!("({})*({})", self.provenance, other.provenance)),
        )
    }

    /// `F(x, 0)`.
    pub fn f_plus(&self) -> UniPoly {
        self.poly.specialize_y(&Rational::zero())
    }

    /// `F(x, x)`.
    pub fn f_full(&self) -> UniPoly {
        self.poly.diagonal()
    }

    /// `F(x, y0)`.
    pub fn at_y(&self, y0: &Rational) -> UniPoly {
        self.poly.specialize_y(y0)
    }

    pub fn to_json(&self) -> FTriangleJson {
        FTriangleJson {
            rank: self.rank,
            trace: self.trace.to_string(),
            terms: self.poly.terms().map(|(&(i, j), c)| (i, j, c.to_string())).collect(),
            provenance: self.provenance.to_string(),
        }
    }
}

/// Canonical JSON shape; terms sorted by `(i, j)`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FTriangleJson {
    pub rank: u32,
    pub trace: String,
    pub terms: Vec<(u32, u32, String)>,
    pub provenance: String,
}

/// `1 - x - y`.
pub fn a1_poly() -> BiPoly {
    BiPoly::from_int_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)])
}

/// `(U, V)` with `B_l = U(y)·x + V(y)`: `U = (-y)^l - (1-y)^l`, `V = (1-y)^l`.
fn b_parts(l: u32) -> (UniPoly, UniPoly) {
    let v = UniPoly::from_ints(&[1, -1]).pow(l);
    let u = &UniPoly::from_ints(&[0, -1]).pow(l) - &v;
    (u, v)
}

pub fn b_poly(l: u32) -> BiPoly {
    let (u, v) = b_parts(l);
    &(&BiPoly::x() * &BiPoly::from_y(&u)) + &BiPoly::from_y(&v)
}

/// `I2(p)`: `1 - 2y - px + y^2 + 2xy + (p-1)x^2` for any rational `p`.
pub fn dihedral_poly(p: &Rational) -> BiPoly {
    BiPoly::from_terms([
        ((0, 0), Rational::one()),
        ((0, 1), int(-2)),
        ((1, 0), -p.clone()),
        ((0, 2), Rational::one()),
        ((1, 1), int(2)),
        ((2, 0), p - Rational::one()),
    ])
}

fn table_poly(terms: tables::Terms) -> BiPoly {
    BiPoly::from_int_terms(terms)
}

pub fn f_irreducible(t: IrreducibleType) -> Result<FTriangle, FError> {
    use IrreducibleType::*;
    let poly = match t {
        A(1) => a1_poly(),
        A(2) => dihedral_poly(&int(3)),
        B(2) => dihedral_poly(&int(4)),
        I2(p) => dihedral_poly(&int(p as i64)),
        A(3) => table_poly(tables::A3.expanded),
        B(3) => table_poly(tables::B3.expanded),
        H3 => table_poly(tables::H3.expanded),
        A(4) => table_poly(tables::A4.expanded),
        B(4) => table_poly(tables::B4.expanded),
        D(4) => table_poly(tables::D4.expanded),
        F4 => table_poly(tables::F4.expanded),
        H4 => table_poly(tables::H4.expanded),
        _ => return Err(FError::NoTable(t)),
    };
    Ok(FTriangle::new_unchecked(poly, t.rank(), Rational::one(), Provenance::Cox(CoxSum::irreducible(t))))
}

fn f_monomial(m: &CoxMonomial) -> Result<BiPoly, FError> {
    let mut p = BiPoly::one();
    for &t in m.factors() {
        p = &p * f_irreducible(t)?.poly();
    }
    Ok(p)
}

/// `F` of a homogeneous Coxeter sum, by multiplicativity and linearity.
pub fn f_of(s: &CoxSum) -> Result<FTriangle, FError> {
    let rank = s.rank()?;
    let mut poly = BiPoly::zero();
    for (m, c) in s.terms() {
        poly = &poly + &f_monomial(m)?.scale(c);
    }
    Ok(FTriangle::new_unchecked(poly, rank, s.trace(), Provenance::Cox(s.clone())))
}

/// `s ∈ Σ_k`: a positive prefix followed by zeros.
pub fn in_sigma(s: &[Rational]) -> bool {
    let first_non_pos = s.iter().position(|c| !c.is_positive()).unwrap_or(s.len());
    s[first_non_pos..].iter().all(|c| c.is_zero())
}

/// `Σ s_i F_{A1}^{l-2i} F∞^i`.
fn translation_poly(l: u32, s: &[Rational]) -> BiPoly {
    let mut p = BiPoly::zero();
    for (i, c) in s.iter().enumerate() {
        let i = i as u32 + 1;
        let term = &a1_poly().pow(l - 2 * i) * &BiPoly::f_infty().pow(i);
        p = &p + &term.scale(c);
    }
    p
}

fn check_len(l: u32, s: &[Rational]) -> Result<(), FError> {
    let k = (l / 2) as usize;
    if s.len() != k {
        return Err(FError::WrongLength { expected: k, got: s.len() });
    }
    Ok(())
}

pub fn f_virtual(l: u32, s: &[Rational]) -> Result<FTriangle, FError> {
    check_len(l, s)?;
    if !in_sigma(s) {
        return Err(FError::NotInSigma(join(s)));
    }
    let poly = &a1_poly().pow(l) + &translation_poly(l, s);
    Ok(FTriangle::new_unchecked(poly, l, Rational::one(), Provenance::Virtual { l, s: s.to_vec() }))
}

/// Translation by an element of `Σ_{⌊l/2⌋}`.
pub fn translate(f: &FTriangle, s: &[Rational]) -> Result<FTriangle, FError> {
    check_len(f.rank, s)?;
    if !in_sigma(s) {
        return Err(FError::NotInSigma(join(s)));
    }
    Ok(translate_unchecked(f, s))
}

/// Translation by any nonnegative vector, i.e. by the closure of `Σ_{⌊l/2⌋}`.
pub fn translate_closure(f: &FTriangle, s: &[Rational]) -> Result<FTriangle, FError> {
    check_len(f.rank, s)?;
    if s.iter().any(|c| c.is_negative()) {
        return Err(FError::NegativeTranslation(join(s)));
    }
    Ok(translate_unchecked(f, s))
}

fn translate_unchecked(f: &FTriangle, s: &[Rational]) -> FTriangle {
    let poly = &f.poly + &translation_poly(f.rank, s);
    let prov = Provenance::Translated { base: Box::new(f.provenance.clone()), s: s.to_vec() };
    FTriangle::new_unchecked(poly, f.rank, f.trace.clone(), prov)
}

/// A-part of the Chapoton family:
/// `(3h-2)/2 - ((h-1)(3h-2)/(h+2))x - (3(3h-2)/(h+2))y`.
pub fn chapoton_a_part(h: &Rational) -> Result<BiPoly, FError> {
    let two = int(2);
    let hp2 = h + &two;
    if hp2.is_zero() {
        return Err(FError::PoleInFamily);
    }
    let k = h * int(3) - &two;
    Ok(BiPoly::from_terms([
        ((0, 0), &k / &two),
        ((1, 0), -((h - Rational::one()) * &k) / &hp2),
        ((0, 1), -(int(3) * &k) / &hp2),
    ]))
}

pub fn f_chapoton(h: &Rational) -> Result<FTriangle, FError> {
    let a = chapoton_a_part(h)?;
    let poly = &(&a * &BiPoly::f_infty()) + &b_poly(3);
    Ok(FTriangle::new_unchecked(poly, 3, Rational::one(), Provenance::Chapoton(h.clone())))
}

/// `F ↦ -(1/l) ∂_y F`.
pub fn d_operator(f: &FTriangle) -> Result<FTriangle, FError> {
    if f.rank == 0 {
        return Err(FError::RankTooSmall { needed: 1, rank: 0 });
    }
    let l = int(f.rank as i64);
    let poly = f.poly.partial(Var::Y).scale(&(-Rational::one() / l));
    let prov = match &f.provenance {
        Provenance::Derived { base, order } => Provenance::Derived { base: base.clone(), order: order + 1 },
        p => Provenance::Derived { base: Box::new(p.clone()), order: 1 },
    };
    Ok(FTriangle::new_unchecked(poly, f.rank - 1, f.trace.clone(), prov))
}

/// Quotient `A` in `F = A·F∞ + Tr·B_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtrianglePart {
    pub poly: BiPoly,
    pub rank: u32,
}

impl AtrianglePart {
    /// Rotational (anti)symmetry `A(x,y) = (-1)^l A(1-x,1-y)`.
    pub fn has_rotation_symmetry(&self) -> bool {
        let r = self.poly.rotate();
        if self.rank.is_multiple_of(2) {
            r == self.poly
        } else {
            -r == self.poly
        }
    }

    /// Sign pattern of `A(-x,-y) = Σ a_{k,m} x^k y^m`: positive for
    /// `k + m ≤ l - 2`, zero above. Returns the offending `(k, m)` on failure.
    pub fn sign_pattern_violation(&self) -> Option<(u32, u32)> {
        let top = self.rank - 2;
        for k in 0..=self.rank {
            for m in 0..=(self.rank - k) {
                let c = self.poly.coeff(k, m);
                let a = if (k + m) % 2 == 0 { c } else { -c };
                let ok = if k + m <= top { a.is_positive() } else { a.is_zero() };
                if !ok {
                    return Some((k, m));
                }
            }
        }
        None
    }

    /// `A` at `(x0, y0)`.
    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        self.poly.eval(x0, y0)
    }
}

pub fn a_decompose(f: &FTriangle) -> Result<AtrianglePart, FError> {
    if f.rank < 2 {
        return Err(FError::RankTooSmall { needed: 2, rank: f.rank });
    }
    let (q, u, v) = f.poly.divide_by_finfty();
    let (bu, bv) = b_parts(f.rank);
    if u != bu.scale(&f.trace) || v != bv.scale(&f.trace) {
        return Err(FError::BoundaryMismatch);
    }
    Ok(AtrianglePart { poly: q, rank: f.rank })
}

/// Rebuild `A·F∞ + trace·B_l`.
pub fn from_a_part(a: &BiPoly, rank: u32, trace: &Rational, provenance: Provenance) -> FTriangle {
    let poly = &(a * &BiPoly::f_infty()) + &b_poly(rank).scale(trace);
    FTriangle::new_unchecked(poly, rank, trace.clone(), provenance)
}

/// `F∞^k` as a trace-zero triangle of rank `2k` (a translation direction).
pub fn f_infty_power(k: u32) -> FTriangle {
    FTriangle::new_unchecked(BiPoly::f_infty().pow(k), 2 * k, Rational::zero(), Provenance::Expr(format!("Finf^{k}")))
}

/// Normalize a factor polynomial to trace 1 and accept it as a triangle when
/// it satisfies the identities at rank = total degree.
pub fn as_triangle(p: &BiPoly, provenance: Provenance) -> Option<FTriangle> {
    let c = p.eval(&Rational::zero(), &Rational::zero());
    if c.is_zero() {
        return None;
    }
    let q = p.scale(&(Rational::one() / c));
    let rank = q.total_degree().unwrap_or(0);
    FTriangle::new(q, rank, Rational::one(), provenance).ok()
}
