use super::{sign, Rational};
use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial, coefficients stored from degree 0 upward.
///
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c·x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    /// The linear polynomial `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::from_coeffs(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let (n, d) = self.eval_unreduced(x);
        Rational::new(n, d)
    }

    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let (n, d) = self.eval_unreduced(x);
        match (n.sign(), d.sign()) {
            (Sign::NoSign, _) => Ordering::Equal,
            (a, b) if a == b => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Horner's rule on numerator/denominator pairs, reducing nothing.
    fn eval_unreduced(&self, x: &Rational) -> (BigInt, BigInt) {
        let (xn, xd) = (x.numer(), x.denom());
        let (mut an, mut ad) = (BigInt::zero(), BigInt::one());
        for c in self.coeffs.iter().rev() {
            let (cn, cd) = (c.numer(), c.denom());
            let t = &ad * xd;
            an = &an * xn * cd + cn * &t;
            ad = t * cd;
        }
        (an, ad)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divide by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rational::one() / lc))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc_inv = Rational::one() / d.leading_coeff();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `P / gcd(P, P')`, carrying the sign of the leading coefficient of `P`.
    pub fn square_free_part(&self) -> UniPoly {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let q = self.exact_div(&g).expect("gcd divides");
        let s = if self.leading_coeff().is_negative() { -Rational::one() } else { Rational::one() };
        q.monic().scale(&s)
    }

    /// Yun's square-free decomposition: monic `(g_i, i)` with `P = lc·∏ g_i^i`,
    /// each `g_i` square-free and pairwise coprime. Constant factors are omitted.
    pub fn square_free_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let p = self.monic();
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.exact_div(&a0).expect("gcd divides");
        let mut c = dp.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn is_square_free(&self) -> bool {
        self.is_constant() || self.gcd(&self.derivative()).is_constant()
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients of `t ↦ P(a + t)`.
    pub fn taylor_shift(&self, a: &Rational) -> UniPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Self::from_coeffs(c)
    }

    /// `P(1 - x)`.
    pub fn reflect(&self) -> UniPoly {
        let one_minus_x = UniPoly::from_ints(&[1, -1]);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &one_minus_x) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Sign of `P` on `(a, a + ε)` for small `ε > 0`.
    pub fn sign_right_of(&self, a: &Rational) -> Ordering {
        let s = self.taylor_shift(a);
        s.coeffs.iter().find(|c| !c.is_zero()).map(sign).unwrap_or(Ordering::Equal)
    }

    /// Sign of `P` on `(a - ε, a)` for small `ε > 0`.
    pub fn sign_left_of(&self, a: &Rational) -> Ordering {
        let s = self.taylor_shift(a);
        match s.coeffs.iter().position(|c| !c.is_zero()) {
            None => Ordering::Equal,
            Some(k) if k % 2 == 0 => sign(&s.coeffs[k]),
            Some(k) => sign(&s.coeffs[k]).reverse(),
        }
    }

    /// Multiplicity of `a` as a root (0 if `P(a) ≠ 0`). Zero polynomial gives 0.
    pub fn root_multiplicity(&self, a: &Rational) -> usize {
        let s = self.taylor_shift(a);
        s.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn cauchy_bound(&self) -> Rational {
        let lc = self.leading_coeff().abs();
        let mut m = Rational::zero();
        if let Some(d) = self.degree() {
            for c in &self.coeffs[..d] {
                let r = c.abs() / &lc;
                if r > m {
                    m = r;
                }
            }
        }
        m + Rational::one()
    }

    /// Exact sign of `P` over the closed interval `[lo, hi]` if it is constant
    /// and nonzero there, by a first-order Taylor enclosure around the midpoint.
    pub fn sign_on_interval(&self, lo: &Rational, hi: &Rational) -> Option<Ordering> {
        let two = Rational::from_integer(2.into());
        let m = (lo + hi) / &two;
        let r = (hi - lo) / two;
        let s = self.taylor_shift(&m);
        let c0 = s.coeff(0);
        let mut bound = Rational::zero();
        let mut rp = Rational::one();
        for c in s.coeffs.iter().skip(1) {
            rp *= &r;
            bound += c.abs() * &rp;
        }
        if c0.abs() > bound {
            Some(sign(&c0))
        } else {
            None
        }
    }

    /// Substitute a polynomial for `x`.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn fmt_in(&self, var: &str) -> String {
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            push_term(&mut s, c, &monomial_text(&[(var, k)]));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

pub(crate) fn monomial_text(parts: &[(&str, usize)]) -> String {
    let mut s = String::new();
    for (v, k) in parts {
        match k {
            0 => {}
            1 => s.push_str(v),
            k => s.push_str(&format!("{v}^{k}")),
        }
    }
    s
}

pub(crate) fn push_term(out: &mut String, c: &Rational, mono: &str) {
    let neg = c.is_negative();
    let a = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&a.to_string());
    } else if a.is_one() {
        out.push_str(mono);
    } else if a.is_integer() {
        out.push_str(&format!("{a}{mono}"));
    } else {
        out.push_str(&format!("({a}){mono}"));
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}
