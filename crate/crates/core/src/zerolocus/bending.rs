use super::profile::{in_unit, profile_at, unit_roots};
use super::ZeroError;
use crate::exactmath::{
    discriminant_in_x, int, isolate_roots, pow2_neg, rat, resultant_x, IsolatedRoot, MathError, Rational, Var,
};
use crate::ftriangle::FTriangle;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BendKind {
    Upper,
    Lower,
    /// Middle index of a collision of three or more roots.
    Both,
    Undetermined,
}

/// A point `(x*, y*)` of the unit square where `F|_{y*}` has a multiple root `x*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BendingPoint {
    pub y: IsolatedRoot,
    pub x: IsolatedRoot,
    pub multiplicity: usize,
    /// 1-based indices `i` of the colliding root functions `x_i`.
    pub indices: Vec<usize>,
    pub kinds: Vec<BendKind>,
    pub on_boundary: bool,
    /// The colliding roots were seen to separate into simple real roots on
    /// each side of `y*`.
    pub split_verified: bool,
}

impl BendingPoint {
    pub fn is_interior(&self) -> bool {
        !self.on_boundary
    }
}

/// Bending points with `y*` in `[0, 1]` and `x*` in `[0, 1]`.
pub fn find_bending(f: &FTriangle, width: &Rational) -> Result<Vec<BendingPoint>, ZeroError> {
    let disc = match discriminant_in_x(f.poly()) {
        Ok(d) => d,
        Err(MathError::ConstantInX) => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    if disc.is_zero() {
        return Err(ZeroError::NonReducedBivariate);
    }
    let mut out = Vec::new();
    for y in isolate_roots(&disc, &Rational::zero(), &Rational::one(), width)? {
        match y.exact_value() {
            Some(y0) => out.extend(rational_bending(f, y0, width)?),
            None => out.extend(irrational_bending(f, y, width)?),
        }
    }
    Ok(out)
}

fn rational_bending(f: &FTriangle, y0: &Rational, width: &Rational) -> Result<Vec<BendingPoint>, ZeroError> {
    let prof = profile_at(f, y0, width)?;
    let mut out = Vec::new();
    let mut index = 1;
    for r in prof.unit_roots() {
        if r.multiplicity >= 2 {
            let indices: Vec<usize> = (index..index + r.multiplicity).collect();
            let split_verified = splits(f, y0, &indices, width)?;
            out.push(BendingPoint {
                y: IsolatedRoot::exact(y0.clone(), 1),
                x: r.clone(),
                multiplicity: r.multiplicity,
                kinds: kinds_for(indices.len(), split_verified),
                indices,
                on_boundary: y0.is_zero() || y0.is_one(),
                split_verified,
            });
        }
        index += r.multiplicity;
    }
    Ok(out)
}

fn kinds_for(m: usize, verified: bool) -> Vec<BendKind> {
    (0..m)
        .map(|i| match () {
            _ if !verified => BendKind::Undetermined,
            _ if i == 0 => BendKind::Upper,
            _ if i + 1 == m => BendKind::Lower,
            _ => BendKind::Both,
        })
        .collect()
}

/// On both sides of `y0` (within the unit interval), at offsets 1/1024 and
/// then 4, 16, 64 times closer, look for `l` roots in `[0, 1]` whose entries
/// at `indices` are simple.
fn splits(f: &FTriangle, y0: &Rational, indices: &[usize], width: &Rational) -> Result<bool, ZeroError> {
    let l = f.rank() as usize;
    let mut delta = rat(1, 1024);
    for _ in 0..4 {
        let mut sides = Vec::new();
        if y0.is_positive() {
            sides.push(y0 - &delta);
        }
        if y0 < &Rational::one() {
            sides.push(y0 + &delta);
        }
        let mut ok = true;
        for y in &sides {
            let p = profile_at(f, y, width)?;
            let xs = p.expanded_unit_roots();
            ok &= xs.len() == l && indices.iter().all(|&i| xs[i - 1].multiplicity == 1);
        }
        if ok {
            return Ok(true);
        }
        delta /= int(4);
    }
    Ok(false)
}

fn irrational_bending(f: &FTriangle, mut y: IsolatedRoot, width: &Rational) -> Result<Vec<BendingPoint>, ZeroError> {
    let fx = f.poly().partial(Var::X);
    let rx = resultant_x(&f.poly().swap_xy(), &fx.swap_xy())?;
    if rx.is_zero() {
        return Ok(Vec::new());
    }
    let fine = pow2_neg(40).min(width.clone());
    y.refine_to(&fine);
    let mut out = Vec::new();
    for mut x in unit_roots(&rx, &fine)? {
        x.refine_to(&fine);
        if !in_unit(&x) {
            continue;
        }
        let my = y.midpoint();
        let ry = y.width() / int(2);
        let mx = x.midpoint();
        let rxw = x.width() / int(2);
        let excluded = [f.poly(), &fx].iter().any(|p| {
            let (c, b) = p.box_enclosure(&mx, &my, &rxw, &ry);
            c.abs() > b
        });
        if excluded {
            continue;
        }
        let below = profile_at(f, &y.lo, width)?;
        let start = 1 + below.expanded_unit_roots().iter().filter(|r| r.hi <= x.lo).count();
        let indices = vec![start, start + 1];
        out.push(BendingPoint {
            y: y.clone(),
            x,
            multiplicity: 2,
            kinds: kinds_for(2, false),
            indices,
            on_boundary: false,
            split_verified: false,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxMonomial, CoxSum, IrreducibleType::*};
    use crate::ftriangle::{f_infty_power, f_of};

    #[test]
    fn product_bends_at_centre() {
        let f = f_of(&CoxSum::monomial(CoxMonomial::from_factors(vec![A(1), A(3)]))).unwrap();
        let pts = find_bending(&f, &pow2_neg(30)).unwrap();
        let interior: Vec<_> = pts.iter().filter(|p| p.is_interior()).collect();
        assert_eq!(interior.len(), 1);
        let p = interior[0];
        assert_eq!(p.y.exact_value(), Some(&rat(1, 2)));
        assert_eq!(p.x.exact_value(), Some(&rat(1, 2)));
        assert_eq!(p.indices, vec![2, 3]);
        assert_eq!(p.kinds, vec![BendKind::Upper, BendKind::Lower]);
    }

    #[test]
    fn deformation_removes_interior_bending() {
        let f = f_of(&CoxSum::monomial(CoxMonomial::from_factors(vec![A(1), A(3)]))).unwrap();
        let g = f.add(&f_infty_power(2).scale(&rat(1, 10))).unwrap();
        let pts = find_bending(&g, &pow2_neg(30)).unwrap();
        assert!(pts.iter().all(|p| p.on_boundary));
    }

    #[test]
    fn irreducible_has_none_inside() {
        let f = f_of(&CoxSum::irreducible(H3)).unwrap();
        assert!(find_bending(&f, &pow2_neg(30)).unwrap().iter().all(|p| p.on_boundary));
    }

    #[test]
    fn non_reduced_is_an_error() {
        let f = f_of(&CoxSum::monomial(CoxMonomial::from_factors(vec![A(1), A(1)]))).unwrap();
        assert_eq!(find_bending(&f, &pow2_neg(10)), Err(ZeroError::NonReducedBivariate));
    }
}
