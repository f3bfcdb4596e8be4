use super::linalg::solve;
use super::{Polynomial, Scalar};
use crate::error::{Error, Result};

/// Polynomial in `u` of the given degree through `points`.
///
/// The first `degree + 1` distinct abscissae determine the candidate; every
/// remaining sample must then lie on it.
pub fn interpolate<T: Scalar>(points: &[(T, T)], degree: usize) -> Result<Polynomial<T>> {
    let mut distinct: Vec<(T, T)> = Vec::new();
    for (x, y) in points {
        match distinct.iter().find(|(x0, _)| x0 == x) {
            Some((_, y0)) if y0 != y => return Err(Error::InconsistentSamples { degree }),
            Some(_) => {}
            None => distinct.push((x.clone(), y.clone())),
        }
    }
    if distinct.len() < degree + 1 {
        return Err(Error::InsufficientSamples {
            needed: degree + 1,
            got: distinct.len(),
        });
    }
    let head = &distinct[..=degree];
    let a: Vec<Vec<T>> = head
        .iter()
        .map(|(x, _)| {
            let mut row = Vec::with_capacity(degree + 1);
            let mut p = T::one();
            for _ in 0..=degree {
                row.push(p.clone());
                p = p * x.clone();
            }
            row
        })
        .collect();
    let b: Vec<T> = head.iter().map(|(_, y)| y.clone()).collect();
    let coeffs = solve(&a, &b).ok_or(Error::InconsistentSamples { degree })?;
    let poly = Polynomial::from_coeffs_u(&coeffs);
    if distinct[degree + 1..]
        .iter()
        .any(|(x, y)| &poly.eval_u(x) != y)
    {
        return Err(Error::InconsistentSamples { degree });
    }
    Ok(poly)
}
