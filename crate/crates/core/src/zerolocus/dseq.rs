use super::ZeroError;
use crate::exactmath::{count_variations, root_count, BiPoly, Endpoints, Rational, UniPoly};
use crate::ftriangle::{as_triangle, d_operator, f_irreducible, FTriangle, Provenance};
use num_traits::{One, Zero};

/// `[F, DF, D²F, …, D^l F]`; the last entry is the constant trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSequence {
    polys: Vec<BiPoly>,
    trace: Rational,
}

pub fn d_sequence(f: &FTriangle) -> DSequence {
    let mut polys = vec![f.poly().clone()];
    let mut cur = f.clone();
    while cur.rank() > 0 {
        cur = d_operator(&cur).expect("rank is positive");
        polys.push(cur.poly().clone());
    }
    DSequence { polys, trace: f.trace().clone() }
}

impl DSequence {
    pub fn polys(&self) -> &[BiPoly] {
        &self.polys
    }

    pub fn rank(&self) -> u32 {
        (self.polys.len() - 1) as u32
    }

    pub fn trace(&self) -> &Rational {
        &self.trace
    }

    pub fn at_y(&self, y0: &Rational) -> Vec<UniPoly> {
        self.polys.iter().map(|p| p.specialize_y(y0)).collect()
    }
}

/// Sign-change bookkeeping of a D-sequence at one `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmCount {
    pub y: Rational,
    /// Sign changes of the values at `x = 0` and `x = 1`, zeros skipped.
    pub n0: usize,
    pub n1: usize,
    /// Same at `x = 0+` and `x = 1-`, where vanishing entries take their one-sided sign.
    pub n0_right: usize,
    pub n1_left: usize,
    /// Roots in the open interval, `n1_left - n0_right`.
    pub interior: usize,
    /// Multiplicities of `x = 0` and `x = 1` as roots of `F|_y`.
    pub at_zero: usize,
    pub at_one: usize,
}

impl SturmCount {
    /// Roots of `F|_y` in `[0, 1]` counted with multiplicity.
    pub fn total(&self) -> usize {
        self.interior + self.at_zero + self.at_one
    }
}

fn has_root_in_open_unit(g: &UniPoly) -> bool {
    !g.is_constant() && root_count(g, &Rational::zero(), &Rational::one(), Endpoints::Open).unwrap_or(0) > 0
}

/// Count the roots of `F|_{y0}` on `[0, 1]` from the sign changes of the D-sequence.
pub fn sturm_count_at(d: &DSequence, y0: &Rational) -> Result<SturmCount, ZeroError> {
    if d.trace.is_zero() {
        return Err(ZeroError::ZeroTrace);
    }
    let degenerate = |reason: String| ZeroError::Degenerate { y: y0.clone(), reason };
    let ps = d.at_y(y0);
    if let Some(k) = ps.iter().position(|p| p.is_zero()) {
        return Err(degenerate(format!("D^{k}F vanishes identically")));
    }
    if has_root_in_open_unit(&ps[0].gcd(&ps[0].derivative())) {
        return Err(degenerate("F|y has a multiple root in (0,1)".into()));
    }
    for k in 0..ps.len() - 1 {
        if has_root_in_open_unit(&ps[k].gcd(&ps[k + 1])) {
            return Err(degenerate(format!("D^{k}F and D^{}F share a root in (0,1)", k + 1)));
        }
    }
    let zero = Rational::zero();
    let one = Rational::one();
    let n0 = count_variations(ps.iter().map(|p| p.sign_at(&zero)));
    let n1 = count_variations(ps.iter().map(|p| p.sign_at(&one)));
    let n0_right = count_variations(ps.iter().map(|p| p.sign_right_of(&zero)));
    let n1_left = count_variations(ps.iter().map(|p| p.sign_left_of(&one)));
    let interior = n1_left
        .checked_sub(n0_right)
        .ok_or_else(|| degenerate(format!("sign changes decrease: n(0+) = {n0_right}, n(1-) = {n1_left}")))?;
    Ok(SturmCount {
        y: y0.clone(),
        n0,
        n1,
        n0_right,
        n1_left,
        interior,
        at_zero: ps[0].root_multiplicity(&zero),
        at_one: ps[0].root_multiplicity(&one),
    })
}

/// Classic-Sturm count of the roots of `p` in `[0, 1]`, with multiplicity.
pub fn oracle_count(p: &UniPoly) -> Result<usize, ZeroError> {
    let mut n = 0;
    for (g, m) in p.square_free_decomposition() {
        n += m * root_count(&g, &Rational::zero(), &Rational::one(), Endpoints::Closed)?;
    }
    Ok(n)
}

/// Irreducible factors for a triangle built from one Coxeter monomial with at
/// least two factors.
pub fn known_factors(f: &FTriangle) -> Option<Vec<FTriangle>> {
    let Provenance::Cox(s) = f.provenance() else {
        return None;
    };
    let mut terms = s.terms();
    let (m, _) = terms.next()?;
    if terms.next().is_some() || m.factors().len() < 2 {
        return None;
    }
    m.factors().iter().map(|&t| f_irreducible(t).ok()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountRoute {
    /// The D-sequence of `F` itself.
    Direct,
    /// Sum over the irreducible Coxeter factors.
    KnownFactors,
    /// Sum over the square-free factors of `F`, weighted by multiplicity.
    SquareFree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub y: Rational,
    pub route: CountRoute,
    pub total: usize,
    /// `(factor description, count of one copy, multiplicity)`.
    pub parts: Vec<(String, usize, usize)>,
}

/// D-sequence root count on `[0, 1]`, falling back to a factorization when
/// `y0` is degenerate for `F` itself.
pub fn count_roots_at(f: &FTriangle, y0: &Rational) -> Result<CountReport, ZeroError> {
    let direct = sturm_count_at(&d_sequence(f), y0);
    let err = match direct {
        Ok(c) => {
            return Ok(CountReport {
                y: y0.clone(),
                route: CountRoute::Direct,
                total: c.total(),
                parts: vec![(f.provenance().to_string(), c.total(), 1)],
            })
        }
        Err(e @ ZeroError::Degenerate { .. }) => e,
        Err(e) => return Err(e),
    };
    if let Some(factors) = known_factors(f) {
        let mut parts = Vec::new();
        let mut total = 0;
        for g in &factors {
            let c = sturm_count_at(&d_sequence(g), y0)?;
            total += c.total();
            parts.push((g.provenance().to_string(), c.total(), 1));
        }
        return Ok(CountReport { y: y0.clone(), route: CountRoute::KnownFactors, total, parts });
    }
    if !f.poly().is_reduced() {
        if f.poly().content_x().eval(y0).is_zero() {
            return Err(ZeroError::Degenerate { y: y0.clone(), reason: "F|y vanishes identically".into() });
        }
        let mut parts = Vec::new();
        let mut total = 0;
        for (index, (g, m)) in f.poly().square_free_decomposition_x().into_iter().enumerate() {
            let prov = Provenance::Factor { base: Box::new(f.provenance().clone()), index };
            let Some(t) = as_triangle(&g, prov) else {
                return Err(err);
            };
            let c = sturm_count_at(&d_sequence(&t), y0)?;
            total += m * c.total();
            parts.push((g.to_string(), c.total(), m));
        }
        return Ok(CountReport { y: y0.clone(), route: CountRoute::SquareFree, total, parts });
    }
    Err(err)
}
