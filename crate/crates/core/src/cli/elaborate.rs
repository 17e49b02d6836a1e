use super::expr::Expr;
use crate::coxeter::{CoxMonomial, CoxSum};
use crate::exactmath::Rational;
use crate::ftriangle::{f_chapoton, f_infty_power, f_irreducible, f_of, f_virtual, translate_closure, FTriangle, Provenance};
use crate::regions::{f_lambda_s, P3Point};
use num_traits::{One, Signed};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("in `{expr}`: {message}")]
pub struct ElabError {
    pub expr: String,
    pub message: String,
}

enum Val {
    Num(Rational),
    Tri(FTriangle),
}

fn fail<T>(e: &Expr, message: impl ToString) -> Result<T, ElabError> {
    Err(ElabError { expr: e.to_string(), message: message.to_string() })
}

/// A nonnegative combination of Coxeter monomials, if `e` is one.
fn as_cox(e: &Expr) -> Option<CoxSum> {
    match e {
        Expr::Type(t) => Some(CoxSum::irreducible(*t)),
        Expr::Num(q) if !q.is_negative() => {
            let mut s = CoxSum::zero();
            s.try_add_term(CoxMonomial::empty(), q.clone()).ok()?;
            Some(s)
        }
        Expr::Add(a, b) => Some(as_cox(a)?.add(&as_cox(b)?)),
        Expr::Mul(a, b) => Some(as_cox(a)?.product(&as_cox(b)?)),
        Expr::Pow(a, k) => {
            let base = as_cox(a)?;
            let mut acc = CoxSum::monomial(CoxMonomial::empty());
            for _ in 0..*k {
                acc = acc.product(&base);
            }
            Some(acc)
        }
        _ => None,
    }
}

/// Turn an expression into a triangle. Pure Coxeter combinations keep their
/// Coxeter provenance; anything else is labelled with its canonical text.
pub fn elaborate(e: &Expr) -> Result<FTriangle, ElabError> {
    if let Some(s) = as_cox(e) {
        if s.is_homogeneous() && !s.is_zero() {
            return f_of(&s).or_else(|err| fail(e, err));
        }
    }
    let keep = matches!(e, Expr::Chap(_) | Expr::LambdaS(..) | Expr::Virtual { .. } | Expr::Type(_));
    match eval(e)? {
        Val::Tri(t) if keep => Ok(t),
        Val::Tri(t) => Ok(t.with_provenance(Provenance::Expr(e.to_string()))),
        Val::Num(_) => fail(e, "a number is not a triangle"),
    }
}

fn eval(e: &Expr) -> Result<Val, ElabError> {
    Ok(match e {
        Expr::Num(q) => Val::Num(q.clone()),
        Expr::Type(t) => Val::Tri(f_irreducible(*t).or_else(|err| fail(e, err))?),
        Expr::Finf => Val::Tri(f_infty_power(1)),
        Expr::Virtual { l, s } => Val::Tri(f_virtual(*l, s).or_else(|err| fail(e, err))?),
        Expr::Chap(h) => Val::Tri(f_chapoton(h).or_else(|err| fail(e, err))?),
        Expr::LambdaS(l, s) => {
            let p = P3Point::new(l.clone(), s.clone()).or_else(|err| fail(e, err))?;
            Val::Tri(f_lambda_s(&p))
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let sign = if matches!(e, Expr::Sub(..)) { -Rational::one() } else { Rational::one() };
            match (eval(a)?, eval(b)?) {
                (Val::Num(x), Val::Num(y)) => Val::Num(x + sign * y),
                (Val::Tri(x), Val::Tri(y)) => Val::Tri(x.add(&y.scale(&sign)).or_else(|err| fail(e, err))?),
                _ => return fail(e, "cannot add a number to a triangle"),
            }
        }
        Expr::Mul(a, b) => match (eval(a)?, eval(b)?) {
            (Val::Num(x), Val::Num(y)) => Val::Num(x * y),
            (Val::Num(c), Val::Tri(t)) | (Val::Tri(t), Val::Num(c)) => Val::Tri(t.scale(&c)),
            (Val::Tri(x), Val::Tri(y)) => Val::Tri(x.mul(&y)),
        },
        Expr::Pow(a, k) => match eval(a)? {
            Val::Num(x) => Val::Num((0..*k).fold(Rational::one(), |acc, _| acc * &x)),
            Val::Tri(t) => {
                if *k == 0 {
                    return fail(e, "zeroth power of a triangle");
                }
                Val::Tri((1..*k).fold(t.clone(), |acc, _| acc.mul(&t)))
            }
        },
        Expr::Translate(a, s) => match eval(a)? {
            Val::Tri(t) => Val::Tri(translate_closure(&t, s).or_else(|err| fail(e, err))?),
            Val::Num(_) => return fail(e, "cannot translate a number"),
        },
    })
}
