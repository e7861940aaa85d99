//! Five-stage fourth-order low-storage Runge-Kutta time integration.
//!
//! The scheme keeps one extra register beside the solution. Each stage asks
//! the right-hand side to fold its output into that register, so the full
//! step works with two arrays regardless of the spatial problem size.

use ndarray::{Array, Dimension};

use crate::error::{Error, Result};

/// Register recurrence coefficients.
pub const RK_A: [f64; 5] = [
    0.0,
    -567301805773.0 / 1357537059087.0,
    -2404267990393.0 / 2016746695238.0,
    -3550918686646.0 / 2091501179385.0,
    -1275806237668.0 / 842570457699.0,
];

/// Solution update weights.
pub const RK_B: [f64; 5] = [
    1432997174477.0 / 9575080441755.0,
    5161836677717.0 / 13612068292357.0,
    1720146321549.0 / 2090206949498.0,
    3134564353537.0 / 4481467310338.0,
    2277821191437.0 / 14882151754819.0,
];

/// Stage time fractions.
pub const RK_C: [f64; 5] = [
    0.0,
    1432997174477.0 / 9575080441755.0,
    2526269341429.0 / 6820363962896.0,
    2006345519317.0 / 3224310063776.0,
    2802321613138.0 / 2924317926251.0,
];

/// Advances `u` by one step of size `dt` from time `t`.
///
/// The right-hand side contract is `rhs(u, stage_time, out, beta)` computing
/// `out = beta * out + du/dt`; a call with `beta = 0` must overwrite `out`
/// entirely (the register may hold stale values from the previous step).
/// `register` is scratch storage of the same shape as `u`.
pub fn lsrk54_step<D, F>(
    u: &mut Array<f64, D>,
    register: &mut Array<f64, D>,
    t: f64,
    dt: f64,
    mut rhs: F,
) -> Result<()>
where
    D: Dimension,
    F: FnMut(&Array<f64, D>, f64, &mut Array<f64, D>, f64) -> Result<()>,
{
    for s in 0..5 {
        rhs(u, t + RK_C[s] * dt, register, RK_A[s])?;
        let bdt = RK_B[s] * dt;
        u.zip_mut_with(register, |ui, ri| *ui += bdt * ri);
    }
    Ok(())
}

/// Step size from the CFL condition `dt = cfl * dx / (lambda * (2 N + 1))`.
pub fn timestep_from_wave_speed(lambda_max: f64, dx: f64, degree: usize, cfl: f64) -> Result<f64> {
    if !lambda_max.is_finite() || lambda_max <= 0.0 {
        return Err(Error::InvalidWaveSpeed(lambda_max));
    }
    Ok(cfl * dx / (lambda_max * (2 * degree + 1) as f64))
}
