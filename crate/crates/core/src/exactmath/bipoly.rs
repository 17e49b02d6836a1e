use super::unipoly::{monomial_text, push_term};
use super::{int, Rational, UniPoly};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Sparse bivariate polynomial: exponent pair `(i, j)` of `x^i y^j` to coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// From `(i, j, coeff)` integer triples; repeated exponents accumulate.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, int(c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// A polynomial in `x` alone.
    pub fn from_x(u: &UniPoly) -> Self {
        Self::from_terms(u.coeffs().iter().enumerate().map(|(k, c)| ((k as u32, 0), c.clone())))
    }

    /// A polynomial in `y` alone.
    pub fn from_y(u: &UniPoly) -> Self {
        Self::from_terms(u.coeffs().iter().enumerate().map(|(k, c)| ((0, k as u32), c.clone())))
    }

    /// `x(x - 1)`.
    pub fn f_infty() -> Self {
        Self::from_int_terms(&[(2, 0, 1), (1, 0, -1)])
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Terms in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).max()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.specialize_y(y).eval(x)
    }

    /// `F(x, y0)` as a polynomial in `x`.
    pub fn specialize_y(&self, y0: &Rational) -> UniPoly {
        let n = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut c = vec![Rational::zero(); n];
        for (&(i, j), a) in &self.terms {
            c[i as usize] += a * pow(y0, j);
        }
        UniPoly::from_coeffs(c)
    }

    /// `F(x0, y)` as a polynomial in `y`.
    pub fn specialize_x(&self, x0: &Rational) -> UniPoly {
        self.swap_xy().specialize_y(x0)
    }

    /// `F(x, x)`.
    pub fn diagonal(&self) -> UniPoly {
        let n = self.total_degree().map_or(0, |d| d as usize + 1);
        let mut c = vec![Rational::zero(); n];
        for (&(i, j), a) in &self.terms {
            c[(i + j) as usize] += a;
        }
        UniPoly::from_coeffs(c)
    }

    pub fn swap_xy(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn partial(&self, v: Var) -> Self {
        let mut p = Self::zero();
        for (&(i, j), c) in &self.terms {
            match v {
                Var::X if i > 0 => p.add_term(i - 1, j, c * int(i as i64)),
                Var::Y if j > 0 => p.add_term(i, j - 1, c * int(j as i64)),
                _ => {}
            }
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `F(x + a, y + b)`.
    pub fn shift(&self, a: &Rational, b: &Rational) -> Self {
        let cols = self.x_coeffs();
        let xa = UniPoly::from_coeffs(vec![a.clone(), Rational::one()]);
        let mut acc = Self::zero();
        for (i, col) in cols.iter().enumerate() {
            let col_shifted = col.taylor_shift(b);
            let xpart = BiPoly::from_x(&xa.pow(i as u32));
            acc = &acc + &(&xpart * &BiPoly::from_y(&col_shifted));
        }
        acc
    }

    /// `F(1 - x, 1 - y)`.
    pub fn rotate(&self) -> Self {
        let mut acc = Self::zero();
        let omx = UniPoly::from_ints(&[1, -1]);
        for (i, col) in self.x_coeffs().iter().enumerate() {
            let xpart = BiPoly::from_x(&omx.pow(i as u32));
            acc = &acc + &(&xpart * &BiPoly::from_y(&col.reflect()));
        }
        acc
    }

    /// Coefficients in `x` as polynomials in `y`: `F = Σ c_i(y) x^i`.
    pub fn x_coeffs(&self) -> Vec<UniPoly> {
        let n = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut cols: Vec<Vec<Rational>> = vec![Vec::new(); n];
        for (&(i, j), a) in &self.terms {
            let col = &mut cols[i as usize];
            if col.len() <= j as usize {
                col.resize(j as usize + 1, Rational::zero());
            }
            col[j as usize] = a.clone();
        }
        cols.into_iter().map(UniPoly::from_coeffs).collect()
    }

    pub fn from_x_coeffs(cols: &[UniPoly]) -> Self {
        let mut p = Self::zero();
        for (i, col) in cols.iter().enumerate() {
            for (j, c) in col.coeffs().iter().enumerate() {
                p.add_term(i as u32, j as u32, c.clone());
            }
        }
        p
    }

    /// Leading coefficient in `x`, a polynomial in `y`.
    pub fn lc_x(&self) -> UniPoly {
        self.x_coeffs().pop().unwrap_or_else(UniPoly::zero)
    }

    /// Euclidean division by `F∞ = x(x - 1)` in `x`:
    /// `F = Q·x(x - 1) + U(y)·x + V(y)` with `V = F(0, y)`, `U = F(1, y) - F(0, y)`.
    pub fn divide_by_finfty(&self) -> (BiPoly, UniPoly, UniPoly) {
        let mut cols = self.x_coeffs();
        let n = cols.len();
        let mut q = vec![UniPoly::zero(); n.saturating_sub(2)];
        for k in (2..n).rev() {
            let c = cols[k].clone();
            // subtract c·x^{k-2}·(x^2 - x)
            cols[k - 1] = &cols[k - 1] + &c;
            cols[k] = UniPoly::zero();
            q[k - 2] = c;
        }
        let v = cols.first().cloned().unwrap_or_else(UniPoly::zero);
        let u = cols.get(1).cloned().unwrap_or_else(UniPoly::zero);
        (Self::from_x_coeffs(&q), u, v)
    }

    /// Content in `Q[y]` with respect to `x`: monic gcd of the `x`-coefficients.
    pub fn content_x(&self) -> UniPoly {
        self.x_coeffs().iter().fold(UniPoly::zero(), |g, c| g.gcd(c))
    }

    /// Divide every `x`-coefficient by `c(y)`; `None` if not exact.
    pub fn div_y_poly(&self, c: &UniPoly) -> Option<Self> {
        let cols: Option<Vec<UniPoly>> = self.x_coeffs().iter().map(|k| k.exact_div(c)).collect();
        cols.map(|c| Self::from_x_coeffs(&c))
    }

    pub fn primitive_part_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content_x();
        self.div_y_poly(&c).expect("content divides")
    }

    /// Pseudo-remainder in `x`: `lc(B)^(deg A - deg B + 1)·A mod B`.
    pub fn pseudo_rem_x(&self, b: &BiPoly) -> BiPoly {
        let db = b.degree_x().expect("nonzero divisor") as usize;
        let bc = b.x_coeffs();
        let lcb = bc[db].clone();
        let mut r = self.x_coeffs();
        if r.len() <= db {
            return self.clone();
        }
        let steps = r.len() - db;
        for k in (0..steps).rev() {
            let lead = r[k + db].clone();
            for c in r.iter_mut() {
                *c = &*c * &lcb;
            }
            for (j, bj) in bc.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&lead * bj);
            }
        }
        r.truncate(db);
        Self::from_x_coeffs(&r)
    }

    /// Exact division in `Q[y][x]`; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &BiPoly) -> Option<BiPoly> {
        let dd = d.degree_x()? as usize;
        let dc = d.x_coeffs();
        let lcd = &dc[dd];
        let mut r = self.x_coeffs();
        if self.is_zero() {
            return Some(Self::zero());
        }
        if r.len() <= dd {
            if dd == 0 {
                return self.div_y_poly(lcd);
            }
            return None;
        }
        let mut q = vec![UniPoly::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = r[k + dd].exact_div(lcd)?;
            for (j, dj) in dc.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&t * dj);
            }
            q[k] = t;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::from_x_coeffs(&q))
        } else {
            None
        }
    }

    /// Greatest common divisor in `Q[y][x]`, up to a rational scalar.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let cont = self.content_x().gcd(&other.content_x());
        let mut a = self.primitive_part_x();
        let mut b = other.primitive_part_x();
        if a.degree_x() < b.degree_x() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.degree_x().unwrap_or(0) > 0 {
            let r = a.pseudo_rem_x(&b);
            a = b;
            b = if r.is_zero() { BiPoly::zero() } else { r.primitive_part_x() };
            if b.is_zero() {
                break;
            }
        }
        let g = if b.is_zero() { a } else { BiPoly::one() };
        (&g * &BiPoly::from_y(&cont)).normalized()
    }

    /// Scale so that the highest term (in `(i, j)` order) has coefficient 1.
    pub fn normalized(&self) -> BiPoly {
        match self.terms.values().next_back() {
            None => Self::zero(),
            Some(c) => self.scale(&(Rational::one() / c)),
        }
    }

    /// Square-free decomposition of the primitive part in `x` (Yun), returning
    /// `(g_i, i)` with the primitive part equal to `∏ g_i^i` up to a scalar.
    pub fn square_free_decomposition_x(&self) -> Vec<(BiPoly, usize)> {
        let mut out = Vec::new();
        let p = self.primitive_part_x();
        if p.degree_x().unwrap_or(0) == 0 {
            return out;
        }
        let dp = p.partial(Var::X);
        let a0 = p.gcd(&dp);
        let mut b = p.exact_div(&a0).expect("gcd divides");
        let c = dp.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.partial(Var::X);
        let mut i = 1;
        while b.degree_x().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree_x().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            let c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.partial(Var::X);
            i += 1;
        }
        out
    }

    /// No repeated factor: square-free `x`-content and square-free primitive part.
    pub fn is_reduced(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if !self.content_x().is_square_free() {
            return false;
        }
        let p = self.primitive_part_x();
        if p.degree_x().unwrap_or(0) == 0 {
            return true;
        }
        p.gcd(&p.partial(Var::X)).degree_x().unwrap_or(0) == 0
    }

    /// Upper bound for `|F(x, y) - F(mx, my)|` on the box `|x - mx| ≤ rx, |y - my| ≤ ry`,
    /// together with the centre value `F(mx, my)`.
    pub fn box_enclosure(&self, mx: &Rational, my: &Rational, rx: &Rational, ry: &Rational) -> (Rational, Rational) {
        let s = self.shift(mx, my);
        let mut bound = Rational::zero();
        let mut centre = Rational::zero();
        for (&(i, j), c) in &s.terms {
            if i == 0 && j == 0 {
                centre = c.clone();
            } else {
                bound += c.abs() * pow(rx, i) * pow(ry, j);
            }
        }
        (centre, bound)
    }

    /// Render in graded order: by total degree, then by decreasing power of `x`.
    pub fn fmt_vars(&self, x: &str, y: &str) -> String {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (a.0 + a.1).cmp(&(b.0 + b.1)).then(b.0.cmp(&a.0)));
        let mut s = String::new();
        for (i, j) in keys {
            push_term(&mut s, &self.terms[&(i, j)], &monomial_text(&[(x, i as usize), (y, j as usize)]));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

fn pow(a: &Rational, k: u32) -> Rational {
    num_traits::pow(a.clone(), k as usize)
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_vars("x", "y"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (&(i, j), c) in &o.terms {
            p.add_term(i, j, c.clone());
        }
        p
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (&(i, j), c) in &o.terms {
            p.add_term(i, j, -c);
        }
        p
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut p = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                p.add_term(i + k, j + l, a * b);
            }
        }
        p
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, o: BiPoly) -> BiPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}
