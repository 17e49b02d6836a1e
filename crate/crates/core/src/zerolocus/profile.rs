use super::ZeroError;
use crate::exactmath::{int, isolate_roots, IsolatedRoot, Rational, UniPoly};
use crate::ftriangle::FTriangle;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Real roots of `F|_y`, sorted, with the unit-interval bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootProfile {
    pub y: Rational,
    pub poly: UniPoly,
    /// Every distinct real root.
    pub roots: Vec<IsolatedRoot>,
    /// Roots in `[0, 1]` counted with multiplicity.
    pub count_in_unit: usize,
    /// No real root outside `[0, 1]`.
    pub all_in_unit: bool,
    /// When all roots are in `[0, 1]`: whether `F` has the sign of the trace
    /// left of 0 and `(-1)^l` times that sign right of 1.
    pub outside_signs_ok: Option<bool>,
    pub identically_zero: bool,
}

impl RootProfile {
    pub fn unit_roots(&self) -> impl Iterator<Item = &IsolatedRoot> {
        self.roots.iter().filter(|r| in_unit(r))
    }

    /// Unit-interval roots with each root repeated by its multiplicity.
    pub fn expanded_unit_roots(&self) -> Vec<IsolatedRoot> {
        self.unit_roots()
            .flat_map(|r| std::iter::repeat_n(r.clone(), r.multiplicity))
            .collect()
    }
}

pub(crate) fn in_unit(r: &IsolatedRoot) -> bool {
    !r.lo.is_negative() && r.hi <= Rational::one()
}

/// Shrink `r` until `pt` is not strictly inside its interval.
pub(crate) fn settle_against(r: &mut IsolatedRoot, pt: &Rational) {
    while !r.is_exact() && &r.lo < pt && pt < &r.hi {
        if r.poly.eval(pt).is_zero() {
            *r = IsolatedRoot::exact(pt.clone(), r.multiplicity);
            return;
        }
        r.bisect();
    }
}

/// Real roots of `p`, refined to `width` and settled against 0 and 1.
pub(crate) fn real_roots(p: &UniPoly, width: &Rational) -> Result<Vec<IsolatedRoot>, ZeroError> {
    let b = p.cauchy_bound().max(int(2));
    let mut roots = isolate_roots(p, &-b.clone(), &b, width)?;
    for r in roots.iter_mut() {
        settle_against(r, &Rational::zero());
        settle_against(r, &Rational::one());
    }
    Ok(roots)
}

/// Unit-interval roots of `p`, settled against 0 and 1.
pub(crate) fn unit_roots(p: &UniPoly, width: &Rational) -> Result<Vec<IsolatedRoot>, ZeroError> {
    Ok(real_roots(p, width)?.into_iter().filter(in_unit).collect())
}

pub fn profile_at(f: &FTriangle, y0: &Rational, width: &Rational) -> Result<RootProfile, ZeroError> {
    let poly = f.at_y(y0);
    if poly.is_zero() {
        return Ok(RootProfile {
            y: y0.clone(),
            poly,
            roots: Vec::new(),
            count_in_unit: 0,
            all_in_unit: false,
            outside_signs_ok: None,
            identically_zero: true,
        });
    }
    let roots = real_roots(&poly, width)?;
    let count_in_unit = roots.iter().filter(|r| in_unit(r)).map(|r| r.multiplicity).sum();
    let all_in_unit = roots.iter().all(in_unit);
    let outside_signs_ok = all_in_unit.then(|| {
        let t = crate::exactmath::sign(f.trace());
        let right = if f.rank().is_multiple_of(2) { t } else { t.reverse() };
        t != Ordering::Equal && poly.sign_at(&int(-1)) == t && poly.sign_at(&int(2)) == right
    });
    Ok(RootProfile {
        y: y0.clone(),
        poly,
        roots,
        count_in_unit,
        all_in_unit,
        outside_signs_ok,
        identically_zero: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxSum, IrreducibleType::*};
    use crate::exactmath::{pow2_neg, rat};
    use crate::ftriangle::f_of;

    #[test]
    fn a3_profiles() {
        let f = f_of(&CoxSum::irreducible(A(3))).unwrap();
        let w = pow2_neg(30);
        for y in [int(0), rat(1, 4), rat(1, 2), int(1)] {
            let p = profile_at(&f, &y, &w).unwrap();
            assert_eq!(p.count_in_unit, 3);
            assert!(p.all_in_unit);
            assert_eq!(p.outside_signs_ok, Some(true));
        }
        let p = profile_at(&f, &int(0), &w).unwrap();
        assert_eq!(p.expanded_unit_roots().last().unwrap().exact_value(), Some(&int(1)));
    }

    #[test]
    fn roots_outside_are_flagged() {
        let f = f_of(&CoxSum::irreducible(A(1))).unwrap();
        let p = profile_at(&f, &int(3), &pow2_neg(20)).unwrap();
        assert!(!p.all_in_unit);
        assert_eq!(p.outside_signs_ok, None);
    }
}
