//! Finite Coxeter types: diagrams, classification, and the graded monoid
//! algebra of formal nonnegative combinations with its boundary map.

use crate::exactmath::Rational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxError {
    #[error("mixed rank: sum contains monomials of ranks {0} and {1}")]
    MixedRank(u32, u32),
    #[error("rank of the zero sum is undefined")]
    ZeroSum,
    #[error("not finite type: {0}")]
    NotFiniteType(String),
    #[error("invalid type {0}")]
    InvalidType(String),
    #[error("negative coefficient {0} in a Coxeter sum")]
    NegativeCoefficient(Rational),
}

/// Connected finite Coxeter type, in canonical form.
///
/// `I2(2)`, `I2(3)`, `I2(4)` never appear: they are `A1^2`, `A2`, `B2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleType {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl IrreducibleType {
    /// Checked constructor for the families; `I2(p)` goes through [`CoxMonomial::dihedral`].
    pub fn family(letter: char, l: u32) -> Result<Self, CoxError> {
        let t = match (letter, l) {
            ('A', l) if l >= 1 => IrreducibleType::A(l),
            ('B', l) if l >= 2 => IrreducibleType::B(l),
            ('C', l) if l >= 2 => IrreducibleType::B(l),
            ('D', l) if l >= 4 => IrreducibleType::D(l),
            ('E', 6) => IrreducibleType::E6,
            ('E', 7) => IrreducibleType::E7,
            ('E', 8) => IrreducibleType::E8,
            ('F', 4) => IrreducibleType::F4,
            ('G', 2) => IrreducibleType::I2(6),
            ('H', 3) => IrreducibleType::H3,
            ('H', 4) => IrreducibleType::H4,
            _ => return Err(CoxError::InvalidType(format!("{letter}{l}"))),
        };
        Ok(t)
    }

    pub fn rank(self) -> u32 {
        use IrreducibleType::*;
        match self {
            A(l) | B(l) | D(l) => l,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            F4 | H4 => 4,
            H3 => 3,
            I2(_) => 2,
        }
    }

    /// Diagram with nodes `0..rank`, generated from the family pattern.
    pub fn diagram(self) -> Diagram {
        use IrreducibleType::*;
        let n = self.rank() as usize;
        let mut d = Diagram::new(n);
        let path = |d: &mut Diagram, len: usize, labels: &dyn Fn(usize) -> u32| {
            for i in 0..len.saturating_sub(1) {
                d.connect(i, i + 1, labels(i));
            }
        };
        match self {
            A(_) => path(&mut d, n, &|_| 3),
            B(_) => path(&mut d, n, &|i| if i == 0 { 4 } else { 3 }),
            D(_) => {
                path(&mut d, n - 1, &|_| 3);
                d.connect(n - 1, n - 3, 3);
            }
            E6 | E7 | E8 => {
                path(&mut d, n - 1, &|_| 3);
                d.connect(n - 1, 2, 3);
            }
            F4 => path(&mut d, 4, &|i| if i == 1 { 4 } else { 3 }),
            H3 | H4 => path(&mut d, n, &|i| if i == 0 { 5 } else { 3 }),
            I2(p) => d.connect(0, 1, p),
        }
        d
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use IrreducibleType::*;
        match self {
            A(l) => write!(f, "A{l}"),
            B(l) => write!(f, "B{l}"),
            D(l) => write!(f, "D{l}"),
            E6 => f.write_str("E6"),
            E7 => f.write_str("E7"),
            E8 => f.write_str("E8"),
            F4 => f.write_str("F4"),
            H3 => f.write_str("H3"),
            H4 => f.write_str("H4"),
            I2(6) => f.write_str("G2"),
            I2(p) => write!(f, "I2({p})"),
        }
    }
}

/// Coxeter diagram: nodes `0..n`, edges labelled `m ≥ 3`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
    edges: BTreeMap<(usize, usize), u32>,
}

impl Diagram {
    pub fn new(n: usize) -> Self {
        Diagram { n, edges: BTreeMap::new() }
    }

    /// Add an edge; label 2 means "no edge" and is ignored.
    pub fn connect(&mut self, a: usize, b: usize, m: u32) {
        assert!(a != b && a < self.n && b < self.n);
        if m <= 2 {
            return;
        }
        self.edges.insert((a.min(b), a.max(b)), m);
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn label(&self, a: usize, b: usize) -> u32 {
        *self.edges.get(&(a.min(b), a.max(b))).unwrap_or(&2)
    }

    /// Disjoint union, nodes of `other` shifted after ours.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let mut d = self.clone();
        d.n += other.n;
        for (&(a, b), &m) in &other.edges {
            d.edges.insert((a + self.n, b + self.n), m);
        }
        d
    }

    /// The diagram with node `v` removed and the rest renumbered.
    pub fn delete(&self, v: usize) -> Diagram {
        let re = |a: usize| if a > v { a - 1 } else { a };
        let mut d = Diagram::new(self.n - 1);
        for (&(a, b), &m) in &self.edges {
            if a != v && b != v {
                d.edges.insert((re(a), re(b)), m);
            }
        }
        d
    }

    fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn induced(&self, nodes: &[usize]) -> Diagram {
        let pos: BTreeMap<usize, usize> = nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut d = Diagram::new(nodes.len());
        for (&(a, b), &m) in &self.edges {
            if let (Some(&i), Some(&j)) = (pos.get(&a), pos.get(&b)) {
                d.connect(i, j, m);
            }
        }
        d
    }
}

/// Classify a Coxeter diagram as a product of irreducible finite types.
pub fn recognize(d: &Diagram) -> Result<CoxMonomial, CoxError> {
    let mut factors = Vec::new();
    for comp in d.components() {
        factors.push(recognize_connected(&d.induced(&comp))?);
    }
    Ok(CoxMonomial::from_factors(factors))
}

fn recognize_connected(d: &Diagram) -> Result<IrreducibleType, CoxError> {
    use IrreducibleType::*;
    let n = d.n;
    match n {
        1 => return Ok(A(1)),
        2 => {
            return Ok(match d.label(0, 1) {
                3 => A(2),
                4 => B(2),
                m => I2(m),
            })
        }
        _ => {}
    }
    if d.edges.len() != n - 1 {
        return Err(CoxError::NotFiniteType("diagram contains a cycle".into()));
    }
    if d.edges.values().any(|&m| m > 5) {
        return Err(CoxError::NotFiniteType(format!("label above 5 in a diagram of rank {n}")));
    }
    let degree: Vec<usize> = (0..n).map(|v| d.neighbours(v).len()).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    if !branch.is_empty() {
        if branch.len() > 1 || degree[branch[0]] > 3 || d.edges.values().any(|&m| m != 3) {
            return Err(CoxError::NotFiniteType("branched diagram outside D/E".into()));
        }
        let c = branch[0];
        let mut arms: Vec<usize> = d.neighbours(c).into_iter().map(|w| arm_length(d, c, w)).collect();
        arms.sort_unstable();
        return match (arms[0], arms[1], arms[2]) {
            (1, 1, k) => Ok(D(k as u32 + 3)),
            (1, 2, 2) => Ok(E6),
            (1, 2, 3) => Ok(E7),
            (1, 2, 4) => Ok(E8),
            _ => Err(CoxError::NotFiniteType(format!("branch arms {arms:?}"))),
        };
    }
    // a path: read the labels from one end
    let start = (0..n).find(|&v| degree[v] == 1).expect("path has an end");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = d.neighbours(cur).into_iter().find(|&w| w != prev).expect("connected path");
        order.push(next);
        prev = cur;
        cur = next;
    }
    let mut labels: Vec<u32> = order.windows(2).map(|w| d.label(w[0], w[1])).collect();
    let special: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] != 3).collect();
    if special.is_empty() {
        return Ok(A(n as u32));
    }
    if special.len() > 1 {
        return Err(CoxError::NotFiniteType(format!("path labels {labels:?}")));
    }
    if special[0] * 2 >= labels.len() {
        labels.reverse();
    }
    let k = (0..labels.len()).find(|&i| labels[i] != 3).unwrap();
    match (labels[k], k, n) {
        (4, 0, _) => Ok(B(n as u32)),
        (4, 1, 4) => Ok(F4),
        (5, 0, 3) => Ok(H3),
        (5, 0, 4) => Ok(H4),
        _ => Err(CoxError::NotFiniteType(format!("path labels {labels:?}"))),
    }
}

fn arm_length(d: &Diagram, centre: usize, first: usize) -> usize {
    let mut len = 1;
    let mut prev = centre;
    let mut cur = first;
    loop {
        let next: Vec<usize> = d.neighbours(cur).into_iter().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Multiset of irreducible types, sorted. The empty monomial has rank 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxMonomial {
    factors: Vec<IrreducibleType>,
}

impl CoxMonomial {
    pub fn empty() -> Self {
        CoxMonomial { factors: Vec::new() }
    }

    pub fn from_factors(mut factors: Vec<IrreducibleType>) -> Self {
        factors.sort_unstable();
        CoxMonomial { factors }
    }

    pub fn single(t: IrreducibleType) -> Self {
        Self::from_factors(vec![t])
    }

    /// `I2(p)` in canonical form: `A1^2`, `A2`, `B2`, or `I2(p)` for `p ≥ 5`.
    pub fn dihedral(p: u32) -> Result<Self, CoxError> {
        use IrreducibleType::*;
        Ok(match p {
            0 | 1 => return Err(CoxError::InvalidType(format!("I2({p})"))),
            2 => Self::from_factors(vec![A(1), A(1)]),
            3 => Self::single(A(2)),
            4 => Self::single(B(2)),
            p => Self::single(I2(p)),
        })
    }

    pub fn factors(&self) -> &[IrreducibleType] {
        &self.factors
    }

    pub fn rank(&self) -> u32 {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    pub fn mul(&self, other: &CoxMonomial) -> CoxMonomial {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        Self::from_factors(f)
    }

    pub fn diagram(&self) -> Diagram {
        self.factors.iter().fold(Diagram::new(0), |d, t| d.disjoint_union(&t.diagram()))
    }

    /// Sum over nodes of the re-recognized monomial with that node deleted.
    pub fn boundary(&self) -> CoxSum {
        let d = self.diagram();
        let mut s = CoxSum::zero();
        for v in 0..d.node_count() {
            let m = recognize(&d.delete(v)).expect("subdiagram of a finite type is finite");
            s.add_term(m, Rational::one());
        }
        s
    }
}

impl fmt::Display for CoxMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.factors.len() {
            let t = self.factors[i];
            let mut k = 1;
            while i + k < self.factors.len() && self.factors[i + k] == t {
                k += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{t}")?;
            } else {
                write!(f, "{t}^{k}")?;
            }
            i += k;
        }
        Ok(())
    }
}

/// Formal nonnegative rational combination of Coxeter monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoxSum {
    terms: BTreeMap<CoxMonomial, Rational>,
}

impl CoxSum {
    pub fn zero() -> Self {
        CoxSum { terms: BTreeMap::new() }
    }

    pub fn monomial(m: CoxMonomial) -> Self {
        let mut s = Self::zero();
        s.add_term(m, Rational::one());
        s
    }

    pub fn irreducible(t: IrreducibleType) -> Self {
        Self::monomial(CoxMonomial::single(t))
    }

    /// Panics on a negative coefficient; use [`CoxSum::try_add_term`] for checked input.
    pub fn add_term(&mut self, m: CoxMonomial, c: Rational) {
        self.try_add_term(m, c).expect("nonnegative coefficient")
    }

    pub fn try_add_term(&mut self, m: CoxMonomial, c: Rational) -> Result<(), CoxError> {
        if c.is_negative() {
            return Err(CoxError::NegativeCoefficient(c));
        }
        if c.is_zero() {
            return Ok(());
        }
        *self.terms.entry(m).or_insert_with(Rational::zero) += c;
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoxMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CoxSum) -> CoxSum {
        let mut s = self.clone();
        for (m, c) in &other.terms {
            s.add_term(m.clone(), c.clone());
        }
        s
    }

    pub fn scale(&self, c: &Rational) -> Result<CoxSum, CoxError> {
        if c.is_negative() {
            return Err(CoxError::NegativeCoefficient(c.clone()));
        }
        let mut s = CoxSum::zero();
        for (m, a) in &self.terms {
            s.add_term(m.clone(), a * c);
        }
        Ok(s)
    }

    pub fn product(&self, other: &CoxSum) -> CoxSum {
        let mut s = CoxSum::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                s.add_term(m1.mul(m2), c1 * c2);
            }
        }
        s
    }

    pub fn rank(&self) -> Result<u32, CoxError> {
        let mut ranks = self.terms.keys().map(|m| m.rank());
        let r = ranks.next().ok_or(CoxError::ZeroSum)?;
        for r2 in ranks {
            if r2 != r {
                return Err(CoxError::MixedRank(r.min(r2), r.max(r2)));
            }
        }
        Ok(r)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rank().is_ok()
    }

    pub fn trace(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    pub fn boundary(&self) -> CoxSum {
        let mut s = CoxSum::zero();
        for (m, c) in &self.terms {
            s = s.add(&m.boundary().scale(c).expect("nonnegative"));
        }
        s
    }

    /// The distinct irreducible types occurring anywhere in the sum.
    pub fn irreducibles(&self) -> BTreeSet<IrreducibleType> {
        self.terms.keys().flat_map(|m| m.factors().iter().copied()).collect()
    }
}

impl fmt::Display for CoxSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{m}")?;
            } else if m.factors().is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// All supported monomials of the given rank built from `types` (multisets).
pub fn monomials_of_rank(types: &[IrreducibleType], rank: u32) -> Vec<CoxMonomial> {
    fn go(types: &[IrreducibleType], start: usize, left: u32, acc: &mut Vec<IrreducibleType>, out: &mut Vec<CoxMonomial>) {
        if left == 0 {
            out.push(CoxMonomial::from_factors(acc.clone()));
            return;
        }
        for i in start..types.len() {
            let r = types[i].rank();
            if r <= left {
                acc.push(types[i]);
                go(types, i, left - r, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(types, 0, rank, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::IrreducibleType::*;
    use super::*;
    use crate::exactmath::int;

    fn sum(parts: &[(&[IrreducibleType], i64)]) -> CoxSum {
        let mut s = CoxSum::zero();
        for (f, c) in parts {
            s.add_term(CoxMonomial::from_factors(f.to_vec()), int(*c));
        }
        s
    }

    #[test]
    fn ranks_and_traces() {
        assert_eq!(CoxSum::monomial(CoxMonomial::from_factors(vec![A(1), H3])).rank(), Ok(4));
        assert_eq!(CoxSum::monomial(CoxMonomial::from_factors(vec![I2(5), I2(7)])).rank(), Ok(4));
        assert_eq!(sum(&[(&[A(3)], 2), (&[B(3)], 3)]).trace(), int(5));
        assert_eq!(sum(&[(&[A(3)], 1), (&[A(1)], 1)]).rank(), Err(CoxError::MixedRank(1, 3)));
        assert_eq!(CoxSum::zero().rank(), Err(CoxError::ZeroSum));
    }

    #[test]
    fn product_multiplies_traces() {
        let a = sum(&[(&[A(1)], 2)]);
        let b = sum(&[(&[A(1)], 3)]);
        assert_eq!(a.product(&b), sum(&[(&[A(1), A(1)], 6)]));
        let s = sum(&[(&[A(3)], 1), (&[B(3)], 1)]).product(&CoxSum::irreducible(A(1)));
        assert_eq!(s, sum(&[(&[A(1), A(3)], 1), (&[A(1), B(3)], 1)]));
    }

    #[test]
    fn boundaries() {
        assert_eq!(CoxSum::irreducible(A(2)).boundary(), sum(&[(&[A(1)], 2)]));
        assert_eq!(
            CoxSum::irreducible(H3).boundary(),
            sum(&[(&[A(2)], 1), (&[A(1), A(1)], 1), (&[I2(5)], 1)])
        );
        assert_eq!(CoxSum::irreducible(D(4)).boundary(), sum(&[(&[A(3)], 3), (&[A(1), A(1), A(1)], 1)]));
        assert_eq!(
            CoxSum::irreducible(F4).boundary(),
            sum(&[(&[B(3)], 2), (&[A(1), A(2)], 2)])
        );
        assert_eq!(
            CoxSum::irreducible(H4).boundary(),
            sum(&[(&[H3], 1), (&[A(3)], 1), (&[A(1), A(2)], 1), (&[A(1), I2(5)], 1)])
        );
        assert_eq!(CoxSum::irreducible(A(1)).boundary(), CoxSum::monomial(CoxMonomial::empty()));
        assert_eq!(CoxSum::irreducible(H4).boundary().trace(), int(4));
    }

    #[test]
    fn recognition_round_trip() {
        let all = [A(1), A(2), A(5), B(2), B(3), B(6), D(4), D(5), D(7), E6, E7, E8, F4, H3, H4, I2(5), I2(6), I2(9)];
        for t in all {
            assert_eq!(recognize(&t.diagram()), Ok(CoxMonomial::single(t)), "{t}");
        }
    }

    #[test]
    fn recognition_examples() {
        let mut d = Diagram::new(3);
        d.connect(0, 1, 5);
        d.connect(1, 2, 3);
        assert_eq!(recognize(&d), Ok(CoxMonomial::single(H3)));
        assert_eq!(recognize(&Diagram::new(2)), Ok(CoxMonomial::from_factors(vec![A(1), A(1)])));
        let mut cyc = Diagram::new(3);
        cyc.connect(0, 1, 3);
        cyc.connect(1, 2, 3);
        cyc.connect(2, 0, 3);
        assert!(matches!(recognize(&cyc), Err(CoxError::NotFiniteType(_))));
        let mut bad = Diagram::new(3);
        bad.connect(0, 1, 4);
        bad.connect(1, 2, 4);
        assert!(recognize(&bad).is_err());
    }

    #[test]
    fn dihedral_canonical_forms() {
        assert_eq!(CoxMonomial::dihedral(2).unwrap().to_string(), "A1^2");
        assert_eq!(CoxMonomial::dihedral(3).unwrap(), CoxMonomial::single(A(2)));
        assert_eq!(CoxMonomial::dihedral(4).unwrap(), CoxMonomial::single(B(2)));
        assert_eq!(CoxMonomial::dihedral(6).unwrap().to_string(), "G2");
        assert!(CoxMonomial::dihedral(1).is_err());
    }

    #[test]
    fn leibniz_rule() {
        let types = [A(1), A(2), B(2), I2(5), I2(6), A(3), B(3), H3, A(4), B(4), D(4), F4, H4];
        for r in 1..=6 {
            for m in monomials_of_rank(&types, r) {
                if m.factors().len() < 2 {
                    continue;
                }
                let (first, rest) = m.factors().split_first().unwrap();
                let a = CoxSum::irreducible(*first);
                let b = CoxSum::monomial(CoxMonomial::from_factors(rest.to_vec()));
                let leibniz = a.boundary().product(&b).add(&a.product(&b.boundary()));
                assert_eq!(CoxSum::monomial(m.clone()).boundary(), leibniz, "{m}");
            }
        }
    }

    #[test]
    fn trace_degree() {
        let s = sum(&[(&[A(1), H3], 2), (&[D(4)], 3), (&[I2(7), B(2)], 1)]);
        assert_eq!(s.boundary().trace(), int(4) * s.trace());
    }
}
