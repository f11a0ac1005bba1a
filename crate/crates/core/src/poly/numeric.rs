//! Floating-point root finding (Aberth–Ehrlich simultaneous iteration).

use num::complex::Complex64;
use num::Zero;

use super::UnivariateExact;
use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 1000;
pub const DEFAULT_TOL: f64 = 1e-12;

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Backward-error scale `sum |a_i| |z|^i`.
fn magnitude(c: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs())
}

/// All complex roots of the float image of `f`, with multiplicity.
///
/// Zero roots are split off exactly. Convergence requires every correction
/// to fall below `tol * (1 + |z|)`; afterwards each root must have a
/// residual within `tol`-relative backward error, else the partial
/// approximations are returned inside the error.
pub fn complex_roots_numeric(f: &UnivariateExact, tol: f64) -> Result<Vec<Complex64>> {
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::input("numeric roots need degree >= 1")),
    };
    let all = f.to_f64();
    let zeros = all.iter().take_while(|c| **c == 0.0).count();
    let mut roots = vec![Complex64::zero(); zeros];
    let c: Vec<f64> = all[zeros..].to_vec();
    let n = deg - zeros;
    if n == 0 {
        return Ok(roots);
    }
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|a| a / lead).collect();

    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius.min(1e6) * 0.5 + 0.1, theta)
        })
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_rel = 0.0f64;
        for k in 0..n {
            let (p, dp) = horner(&monic, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.is_zero() {
                        Complex64::zero()
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_rel = max_rel.max(step.norm() / (1.0 + z[k].norm()));
            } else {
                max_rel = f64::INFINITY;
            }
        }
        if max_rel <= tol {
            converged = true;
            break;
        }
    }

    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&monic, *zk);
            if dp.is_zero() {
                break;
            }
            let next = *zk - p / dp;
            if next.is_finite() && horner(&monic, next).0.norm() < p.norm() {
                *zk = next;
            } else {
                break;
            }
        }
    }

    roots.extend(z.iter().copied());
    if !converged {
        return Err(Error::Numeric {
            message: format!("Aberth iteration did not converge in {MAX_ITERATIONS} steps"),
            partial: roots,
        });
    }
    // Multiple roots are only determined to about sqrt(eps), so the residual
    // test is relative to the polynomial's magnitude at the root.
    let residual_tol = tol.max(1e3 * f64::EPSILON);
    for zk in &z {
        let res = horner(&monic, *zk).0.norm();
        if res > residual_tol * (1.0 + magnitude(&monic, *zk)) {
            return Err(Error::Numeric {
                message: format!("residual {res:e} at root {zk} exceeds tolerance"),
                partial: roots,
            });
        }
    }
    Ok(roots)
}
