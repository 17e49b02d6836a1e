use super::{int, sign, MathError, Rational, UniPoly};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Classic Sturm chain `P, P', -rem(P, P'), …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self, MathError> {
        if p.is_zero() {
            return Err(MathError::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let r = -&polys.last().unwrap().rem(&next);
            polys.push(next);
            next = r;
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    /// Sign changes of the chain at `a`, zeros skipped.
    pub fn variations_at(&self, a: &Rational) -> usize {
        count_variations(self.polys.iter().map(|p| p.sign_at(a)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        count_variations(self.polys.iter().map(|p| sign(&p.leading_coeff())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        count_variations(self.polys.iter().map(|p| {
            let s = sign(&p.leading_coeff());
            if p.degree().unwrap_or(0) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(a, b]`, valid when the first entry is square-free.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

/// Sign changes in a sequence, zero entries skipped.
pub fn count_variations<I: IntoIterator<Item = Ordering>>(signs: I) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Which endpoints of `[a, b]` belong to the counting interval.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Endpoints {
    #[default]
    Closed,
    HalfOpen,
    Open,
}

/// Number of distinct real roots of `p` in the interval from `a` to `b`.
///
/// The polynomial is reduced to its square-free part first, so non-square-free
/// input is accepted; endpoint membership is decided by exact evaluation.
pub fn root_count(p: &UniPoly, a: &Rational, b: &Rational, ends: Endpoints) -> Result<usize, MathError> {
    if p.is_zero() {
        return Err(MathError::ZeroPolynomial);
    }
    if a >= b {
        return Err(MathError::EmptyInterval { lo: Box::new(a.clone()), hi: Box::new(b.clone()) });
    }
    let g = p.square_free_part();
    let chain = SturmChain::new(&g)?;
    let half_open = chain.count_half_open(a, b);
    let at_a = g.eval(a).is_zero() as usize;
    let at_b = g.eval(b).is_zero() as usize;
    Ok(match ends {
        Endpoints::Closed => half_open + at_a,
        Endpoints::HalfOpen => half_open,
        Endpoints::Open => half_open - at_b,
    })
}

/// One distinct real root: either the exact rational `lo == hi`, or the unique
/// root of `poly` strictly inside `(lo, hi)` with `poly` nonzero at both ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
    /// Square-free defining polynomial.
    pub poly: UniPoly,
}

impl IsolatedRoot {
    pub fn exact(r: Rational, multiplicity: usize) -> Self {
        let poly = UniPoly::linear_root(&r);
        IsolatedRoot { lo: r.clone(), hi: r, multiplicity, poly }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    /// Halve the isolating interval once.
    pub fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let m = self.midpoint();
        match self.poly.sign_at(&m) {
            Ordering::Equal => {
                self.lo = m.clone();
                self.hi = m;
            }
            s if s == self.poly.sign_at(&self.lo) => self.lo = m,
            _ => self.hi = m,
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while !self.is_exact() && &self.width() > width {
            self.bisect();
        }
    }

    /// True if this root is certainly below `other`.
    pub fn certainly_below(&self, other: &IsolatedRoot) -> bool {
        match (self.is_exact(), other.is_exact()) {
            (true, true) => self.lo < other.lo,
            _ => self.hi <= other.lo,
        }
    }

    /// Certified ordering between two distinct roots, refining as needed.
    /// Returns `Equal` only when both denote the same algebraic number.
    pub fn compare(&mut self, other: &mut IsolatedRoot) -> Ordering {
        let mut steps = 0;
        loop {
            if self.is_exact() && other.is_exact() {
                return self.lo.cmp(&other.lo);
            }
            if self.certainly_below(other) {
                return Ordering::Less;
            }
            if other.certainly_below(self) {
                return Ordering::Greater;
            }
            if steps == 8 && self.same_number(other) {
                return Ordering::Equal;
            }
            steps += 1;
            if self.width() >= other.width() && !self.is_exact() {
                self.bisect();
            } else {
                other.bisect();
            }
        }
    }

    fn same_number(&self, other: &IsolatedRoot) -> bool {
        if let Some(r) = self.exact_value() {
            return other.contains_root_of_value(r);
        }
        if let Some(r) = other.exact_value() {
            return self.contains_root_of_value(r);
        }
        let g = self.poly.gcd(&other.poly);
        if g.is_constant() || !self.is_root_of(&g) || !other.is_root_of(&g) {
            return false;
        }
        let chain = SturmChain::new(&g).expect("nonconstant");
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi <= b.lo || b.hi <= a.lo {
                return false;
            }
            if chain.count_half_open(&a.lo, &a.hi) == 1 && chain.count_half_open(&b.lo, &b.hi) == 1 {
                let lo = if a.lo > b.lo { &a.lo } else { &b.lo };
                let hi = if a.hi < b.hi { &a.hi } else { &b.hi };
                return chain.count_half_open(lo, hi) + g.eval(lo).is_zero() as usize >= 1;
            }
            a.bisect();
            b.bisect();
            if a.is_exact() || b.is_exact() {
                return a.is_exact() && b.is_exact() && a.lo == b.lo
                    || a.exact_value().is_some_and(|r| b.contains_root_of_value(r))
                    || b.exact_value().is_some_and(|r| a.contains_root_of_value(r));
            }
        }
    }

    fn contains_root_of_value(&self, r: &Rational) -> bool {
        if self.is_exact() {
            return &self.lo == r;
        }
        &self.lo < r && r < &self.hi && self.poly.eval(r).is_zero()
    }

    /// Whether the represented number is a root of `q`.
    pub fn is_root_of(&self, q: &UniPoly) -> bool {
        if let Some(r) = self.exact_value() {
            return q.eval(r).is_zero();
        }
        let g = self.poly.gcd(q);
        if g.is_constant() {
            return false;
        }
        g.sign_at(&self.lo) != g.sign_at(&self.hi)
    }

    /// Exact sign of `q` at the represented number.
    pub fn sign_of(&self, q: &UniPoly) -> Ordering {
        if let Some(r) = self.exact_value() {
            return q.sign_at(r);
        }
        if q.is_zero() {
            return Ordering::Equal;
        }
        if let Some(s) = q.sign_on_interval(&self.lo, &self.hi) {
            return s;
        }
        if self.is_root_of(q) {
            return Ordering::Equal;
        }
        let mut me = self.clone();
        loop {
            if let Some(s) = q.sign_on_interval(&me.lo, &me.hi) {
                return s;
            }
            me.bisect();
            if let Some(r) = me.exact_value() {
                return q.sign_at(r);
            }
        }
    }
}

/// The rational with least denominator (then least absolute numerator) in the
/// open interval `(lo, hi)`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !hi.is_positive() {
        return -simplest_between(&-hi, &-lo);
    }
    simplest_pos(lo, hi)
}

// lo >= 0, lo < hi, open interval
fn simplest_pos(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    let candidate = &fl + Rational::one();
    if &candidate < hi {
        return candidate;
    }
    // lo and hi share the integer part (hi may equal fl + 1 exactly)
    let frac_lo = lo - &fl;
    let frac_hi = hi - &fl;
    if frac_lo.is_zero() {
        // (fl, fl + frac_hi): simplest is fl + 1/(k) with k = floor(1/frac_hi) + 1
        let inv = Rational::one() / &frac_hi;
        let k = inv.floor() + Rational::one();
        return fl + Rational::one() / k;
    }
    let inner = simplest_pos(&(Rational::one() / &frac_hi), &(Rational::one() / &frac_lo));
    fl + Rational::one() / inner
}

/// Isolate all distinct real roots of `p` in the closed interval `[a, b]`,
/// to width at most `width`, sorted increasingly, with multiplicities.
pub fn isolate_roots(
    p: &UniPoly,
    a: &Rational,
    b: &Rational,
    width: &Rational,
) -> Result<Vec<IsolatedRoot>, MathError> {
    if p.is_zero() {
        return Err(MathError::ZeroPolynomial);
    }
    if !width.is_positive() {
        return Err(MathError::NonPositiveWidth);
    }
    if a > b {
        return Err(MathError::EmptyInterval { lo: Box::new(a.clone()), hi: Box::new(b.clone()) });
    }
    let mut all: Vec<IsolatedRoot> = Vec::new();
    for (g, mult) in p.square_free_decomposition() {
        all.extend(isolate_square_free(&g, a, b, width, mult));
    }
    sort_roots(&mut all);
    Ok(all)
}

/// All real roots of `p`.
pub fn isolate_roots_real_line(p: &UniPoly, width: &Rational) -> Result<Vec<IsolatedRoot>, MathError> {
    if p.is_zero() {
        return Err(MathError::ZeroPolynomial);
    }
    let bnd = p.cauchy_bound();
    isolate_roots(p, &-bnd.clone(), &bnd, width)
}

fn sort_roots(roots: &mut [IsolatedRoot]) {
    // insertion sort with certified comparisons; lists are short
    for i in 1..roots.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = roots.split_at_mut(j);
            if left[j - 1].compare(&mut right[0]) == Ordering::Greater {
                roots.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    for i in 1..roots.len() {
        let (left, right) = roots.split_at_mut(i);
        let prev = &mut left[i - 1];
        let cur = &mut right[0];
        while prev.hi >= cur.lo && !(prev.is_exact() && cur.is_exact()) {
            if cur.is_exact() || (!prev.is_exact() && prev.width() >= cur.width()) {
                prev.bisect();
            } else {
                cur.bisect();
            }
        }
    }
}

fn isolate_square_free(g: &UniPoly, a: &Rational, b: &Rational, width: &Rational, mult: usize) -> Vec<IsolatedRoot> {
    let mut out = Vec::new();
    if g.is_constant() {
        return out;
    }
    if a == b {
        if g.eval(a).is_zero() {
            out.push(IsolatedRoot::exact(a.clone(), mult));
        }
        return out;
    }
    let chain = SturmChain::new(g).expect("nonzero");
    if g.eval(a).is_zero() {
        out.push(IsolatedRoot::exact(a.clone(), mult));
    }
    let b_root = g.eval(b).is_zero();
    let open_count = |l: &Rational, r: &Rational, r_is_root: bool| -> usize {
        chain.count_half_open(l, r) - r_is_root as usize
    };
    let mut stack = vec![(a.clone(), b.clone(), open_count(a, b, b_root))];
    while let Some((l, r, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        let l_zero = g.eval(&l).is_zero();
        let r_zero = g.eval(&r).is_zero();
        if n == 1 && !l_zero && !r_zero {
            let mut root = IsolatedRoot { lo: l, hi: r, multiplicity: mult, poly: g.clone() };
            root.refine_to(width);
            if !root.is_exact() {
                let q = simplest_between(&root.lo, &root.hi);
                if g.eval(&q).is_zero() {
                    root = IsolatedRoot::exact(q, mult);
                }
            }
            if root.is_exact() {
                root = IsolatedRoot::exact(root.lo, mult);
            }
            out.push(root);
            continue;
        }
        let m = simplest_between(&l, &r);
        let m_zero = g.eval(&m).is_zero();
        if m_zero {
            out.push(IsolatedRoot::exact(m.clone(), mult));
        }
        let left = open_count(&l, &m, m_zero);
        let right = n - left - m_zero as usize;
        stack.push((l, m.clone(), left));
        stack.push((m, r, right));
    }
    if b_root {
        out.push(IsolatedRoot::exact(b.clone(), mult));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{pow2_neg, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn count_on_unit_interval() {
        let f = p(&[1, -3, 2]);
        assert_eq!(root_count(&f, &int(0), &int(1), Endpoints::Closed).unwrap(), 2);
        assert_eq!(root_count(&f, &int(0), &int(1), Endpoints::Open).unwrap(), 1);
        let h3 = p(&[1, -15, 35, -21]);
        assert_eq!(root_count(&h3, &int(0), &int(1), Endpoints::Closed).unwrap(), 3);
        assert_eq!(root_count(&p(&[1]), &int(0), &int(1), Endpoints::Closed).unwrap(), 0);
        assert!(root_count(&UniPoly::zero(), &int(0), &int(1), Endpoints::Closed).is_err());
    }

    #[test]
    fn chain_degrees_strictly_decrease() {
        let c = SturmChain::new(&p(&[1, -15, 35, -21])).unwrap();
        let degs: Vec<_> = c.polys().iter().map(|q| q.degree().unwrap()).collect();
        assert!(degs.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(*degs.last().unwrap(), 0);
    }

    #[test]
    fn isolates_with_multiplicity() {
        let w = pow2_neg(10);
        let r = isolate_roots(&p(&[1, -3, 2]), &int(0), &int(1), &w).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].exact_value(), Some(&rat(1, 2)));
        assert_eq!(r[1].exact_value(), Some(&int(1)));
        let r = isolate_roots(&p(&[1, -1]).pow(2), &int(0), &int(1), &w).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 2);
    }

    #[test]
    fn irrational_roots_are_bracketed() {
        let f = p(&[-2, 0, 1]);
        let w = pow2_neg(20);
        let r = isolate_roots(&f, &int(-2), &int(2), &w).unwrap();
        assert_eq!(r.len(), 2);
        for root in &r {
            assert!(root.width() <= w);
            assert_ne!(f.sign_at(&root.lo), f.sign_at(&root.hi));
        }
        assert!(r[0].hi < r[1].lo);
    }

    #[test]
    fn sign_at_algebraic_root() {
        let f = p(&[-2, 0, 1]);
        let r = isolate_roots(&f, &int(0), &int(2), &rat(1, 2)).unwrap();
        let sqrt2 = &r[0];
        assert_eq!(sqrt2.sign_of(&p(&[-1, 1])), Ordering::Greater);
        assert_eq!(sqrt2.sign_of(&p(&[-3, 2])), Ordering::Less);
        assert_eq!(sqrt2.sign_of(&p(&[-4, 0, 2])), Ordering::Equal);
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert_eq!(simplest_between(&rat(-1, 2), &rat(3, 1)), int(0));
        assert_eq!(simplest_between(&rat(3, 2), &int(2)), rat(5, 3));
        assert_eq!(simplest_between(&int(2), &rat(5, 2)), rat(7, 3));
        assert_eq!(simplest_between(&rat(-5, 2), &int(-2)), rat(-7, 3));
    }

    #[test]
    fn roots_of_coprime_factors_sorted() {
        let f = &p(&[-2, 0, 1]) * &p(&[-3, 2]).pow(2);
        let r = isolate_roots_real_line(&f, &pow2_neg(8)).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r[2].exact_value(), Some(&rat(3, 2)));
        assert_eq!(r[2].multiplicity, 2);
        assert!(r[1].hi <= r[2].lo);
    }
}
