use super::{int, BiPoly, MathError, Rational, UniPoly, Var};
use num_traits::{One, Zero};

/// Resultant `Res(P, Q) = lc(P)^deg Q · ∏ Q(α)` over roots `α` of `P`,
/// by the Euclidean remainder sequence over `Q`.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rational, MathError> {
    if p.is_zero() || q.is_zero() {
        return Err(MathError::ZeroResultant);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut acc = Rational::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            return Ok(acc * num_traits::pow(b.leading_coeff(), da));
        }
        if da == 0 {
            return Ok(acc * num_traits::pow(a.leading_coeff(), db));
        }
        if da < db {
            // Res(A, B) = (-1)^(da·db) Res(B, A)
            if (da * db) % 2 == 1 {
                acc = -acc;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // Res(A, B) = (-1)^(da·db) lc(B)^(da - dr) Res(B, R) with R = A mod B
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(Rational::zero());
        }
        let dr = r.degree().unwrap();
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b.leading_coeff(), da - dr);
        a = b;
        b = r;
    }
}

/// Determinant of the Sylvester matrix by Gaussian elimination over `Q`.
pub fn sylvester_resultant(p: &UniPoly, q: &UniPoly) -> Result<Rational, MathError> {
    if p.is_zero() || q.is_zero() {
        return Err(MathError::ZeroResultant);
    }
    let m = p.degree().unwrap();
    let n = q.degree().unwrap();
    let size = m + n;
    if size == 0 {
        return Ok(Rational::one());
    }
    let mut mat = vec![vec![Rational::zero(); size]; size];
    let pc: Vec<_> = p.coeffs().iter().rev().cloned().collect();
    let qc: Vec<_> = q.coeffs().iter().rev().cloned().collect();
    for row in 0..n {
        for (k, c) in pc.iter().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in qc.iter().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    Ok(determinant(mat))
}

fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// `Res_x(F, G)` as a polynomial in `y`, by evaluation at integer `y` and
/// Newton interpolation.
pub fn resultant_x(f: &BiPoly, g: &BiPoly) -> Result<UniPoly, MathError> {
    if f.is_zero() || g.is_zero() {
        return Err(MathError::ZeroResultant);
    }
    let n = f.degree_x().unwrap();
    let m = g.degree_x().unwrap();
    let bound = (n * g.degree_y().unwrap() + m * f.degree_y().unwrap()) as usize;
    let lf = f.lc_x();
    let lg = g.lc_x();
    let mut xs = Vec::with_capacity(bound + 1);
    let mut vs = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while xs.len() < bound + 1 {
        let y = int(k);
        k += 1;
        if lf.eval(&y).is_zero() || lg.eval(&y).is_zero() {
            continue;
        }
        let v = resultant(&f.specialize_y(&y), &g.specialize_y(&y))?;
        xs.push(y);
        vs.push(v);
    }
    Ok(interpolate(&xs, &vs))
}

/// The unique polynomial of degree `< n` through `n` points.
pub fn interpolate(xs: &[Rational], vs: &[Rational]) -> UniPoly {
    let n = xs.len();
    let mut dd = vs.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &UniPoly::linear_root(&xs[i])) + &UniPoly::constant(dd[i].clone());
    }
    acc
}

/// Discriminant of `F` in `x`: `(-1)^(n(n-1)/2) Res_x(F, ∂xF) / lc_x(F)`.
pub fn discriminant_in_x(f: &BiPoly) -> Result<UniPoly, MathError> {
    let n = match f.degree_x() {
        Some(d) if d >= 1 => d,
        _ => return Err(MathError::ConstantInX),
    };
    if n == 1 {
        return Ok(UniPoly::one());
    }
    let r = resultant_x(f, &f.partial(Var::X))?;
    let q = r.exact_div(&f.lc_x()).expect("leading coefficient divides the resultant");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}
