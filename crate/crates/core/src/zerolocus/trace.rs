use super::profile::profile_at;
use super::ZeroError;
use crate::exactmath::{IsolatedRoot, Rational};
use crate::ftriangle::FTriangle;
use crate::par::{self, Exec};
use std::cmp::Ordering;

/// The root functions `x_1(y) ≤ … ≤ x_l(y)` sampled on a grid.
#[derive(Clone, Debug)]
pub struct CurveTrace {
    pub grid: Vec<Rational>,
    /// `curves[i][j]` is `x_{i+1}(grid[j])`, absent where `F|_y` does not
    /// have exactly `l` roots in `[0, 1]`.
    pub curves: Vec<Vec<Option<IsolatedRoot>>>,
    /// Per curve: strictly decreasing between consecutive present samples.
    pub monotone: Vec<bool>,
}

pub fn trace_curves(f: &FTriangle, grid: &[Rational], width: &Rational, exec: Exec) -> Result<CurveTrace, ZeroError> {
    let l = f.rank() as usize;
    let profiles = par::map(exec, grid, |y| profile_at(f, y, width));
    let mut curves = vec![vec![None; grid.len()]; l];
    for (j, p) in profiles.into_iter().enumerate() {
        let xs = p?.expanded_unit_roots();
        if xs.len() == l {
            for (i, x) in xs.into_iter().enumerate() {
                curves[i][j] = Some(x);
            }
        }
    }
    let monotone = curves
        .iter()
        .map(|c| {
            let present: Vec<&IsolatedRoot> = c.iter().flatten().collect();
            present.windows(2).all(|w| {
                let (mut a, mut b) = (w[0].clone(), w[1].clone());
                a.compare(&mut b) == Ordering::Greater
            })
        })
        .collect();
    Ok(CurveTrace { grid: grid.to_vec(), curves, monotone })
}
