//! Interface mean values for two-point flux kernels.
//!
//! Besides plain arithmetic averages, the entropy-conservative fluxes need a
//! density mean adapted to the pressure law,
//!
//! ```text
//! gamma_mean(l, r) = (1/gamma) [[p]] / [[e]]
//! ```
//!
//! with `[[.]]` the right-minus-left jump, and the squared interface sound
//! speed `a_bar^2 = [[p]] / [[rho]]`. For `gamma = 1` the density mean reduces
//! to the logarithmic mean, for `gamma = 2` to the arithmetic mean. Both
//! quotients are indeterminate as the states coalesce, so below a jump cutoff
//! they switch to truncated series in `nu = f^2`, where
//! `f = (rho_r - rho_l) / (rho_r + rho_l)`.

use crate::eos::EquationOfState;
use crate::error::{Error, Result};

/// Branch switch threshold on `nu = f^2`; below it the series branch is used.
pub const NU_CUTOFF: f64 = 1e-4;

pub fn arithmetic_mean(a: f64, b: f64) -> f64 {
    0.5 * (a + b)
}

fn check_pair(rho_l: f64, rho_r: f64) -> Result<()> {
    for rho in [rho_l, rho_r] {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(Error::NonpositiveDensity { value: rho, context: "interface mean" });
        }
    }
    Ok(())
}

/// Relative density jump `f` and its square `nu`.
#[inline]
fn jump_parameters(rho_l: f64, rho_r: f64) -> (f64, f64) {
    let f = (rho_r - rho_l) / (rho_r + rho_l);
    (f, f * f)
}

/// Density mean adapted to the pressure law (logarithmic mean for
/// `gamma = 1`, arithmetic mean for `gamma = 2`).
pub fn gamma_mean(rho_l: f64, rho_r: f64, eos: &EquationOfState) -> Result<f64> {
    check_pair(rho_l, rho_r)?;
    let (_, nu) = jump_parameters(rho_l, rho_r);
    if nu < NU_CUTOFF {
        Ok(gamma_mean_series(rho_l, rho_r, eos))
    } else {
        Ok(gamma_mean_direct(rho_l, rho_r, eos))
    }
}

/// Direct quotient branch of [`gamma_mean`], `(1/gamma) [[p]] / [[e]]`.
/// Accurate away from coalescing states; exposed for branch verification.
pub fn gamma_mean_direct(rho_l: f64, rho_r: f64, eos: &EquationOfState) -> f64 {
    let jump_p = eos.pressure(rho_r).unwrap() - eos.pressure(rho_l).unwrap();
    let jump_e = eos.internal_energy(rho_r).unwrap() - eos.internal_energy(rho_l).unwrap();
    jump_p / (eos.gamma() * jump_e)
}

/// Series branch of [`gamma_mean`]: the arithmetic mean times a cubic
/// polynomial in `nu`, the truncation of the exact expansion
///
/// ```text
/// 1 + (g-2)/3 nu - (g+1)(g-2)(g-3)/45 nu^2
///   + (g+1)(g-2)(g-3)(2g(g-2) - 9)/945 nu^3 + O(nu^4)
/// ```
pub fn gamma_mean_series(rho_l: f64, rho_r: f64, eos: &EquationOfState) -> f64 {
    let g = eos.gamma();
    let (_, nu) = jump_parameters(rho_l, rho_r);
    let c1 = (g - 2.0) / 3.0;
    let c2 = (g + 1.0) * (g - 2.0) * (g - 3.0) / 45.0;
    let c3 = (g + 1.0) * (g - 2.0) * (g - 3.0) * (2.0 * g * (g - 2.0) - 9.0) / 945.0;
    arithmetic_mean(rho_l, rho_r) * (1.0 + nu * (c1 - nu * (c2 - nu * c3)))
}

/// Squared interface sound speed `a_bar^2 = [[p]] / [[rho]]`; exactly `c^2`
/// for the isothermal law and `gamma p / rho` for coalescing states.
pub fn avg_sound_speed_sq(rho_l: f64, rho_r: f64, eos: &EquationOfState) -> Result<f64> {
    check_pair(rho_l, rho_r)?;
    if let EquationOfState::Isothermal { sound_speed } = eos {
        return Ok(sound_speed * sound_speed);
    }
    let (_, nu) = jump_parameters(rho_l, rho_r);
    if nu < NU_CUTOFF {
        Ok(avg_sound_speed_sq_series(rho_l, rho_r, eos))
    } else {
        Ok(avg_sound_speed_sq_direct(rho_l, rho_r, eos))
    }
}

/// Direct quotient branch of [`avg_sound_speed_sq`].
pub fn avg_sound_speed_sq_direct(rho_l: f64, rho_r: f64, eos: &EquationOfState) -> f64 {
    if let EquationOfState::Isothermal { sound_speed } = eos {
        return sound_speed * sound_speed;
    }
    let jump_p = eos.pressure(rho_r).unwrap() - eos.pressure(rho_l).unwrap();
    jump_p / (rho_r - rho_l)
}

/// Series branch of [`avg_sound_speed_sq`]:
///
/// ```text
/// g kappa avg^(g-1) (1 + (g-1)(g-2)/6 nu + (g-1)(g-2)(g-3)(g-4)/120 nu^2
///                      + (g-1)(g-2)(g-3)(g-4)(g-5)(g-6)/5040 nu^3 + O(nu^4))
/// ```
pub fn avg_sound_speed_sq_series(rho_l: f64, rho_r: f64, eos: &EquationOfState) -> f64 {
    let g = eos.gamma();
    let kappa = eos.kappa();
    let (_, nu) = jump_parameters(rho_l, rho_r);
    let c1 = (g - 1.0) * (g - 2.0) / 6.0;
    let c2 = (g - 1.0) * (g - 2.0) * (g - 3.0) * (g - 4.0) / 120.0;
    let c3 =
        (g - 1.0) * (g - 2.0) * (g - 3.0) * (g - 4.0) * (g - 5.0) * (g - 6.0) / 5040.0;
    let avg = arithmetic_mean(rho_l, rho_r);
    g * kappa * avg.powf(g - 1.0) * (1.0 + nu * (c1 + nu * (c2 + nu * c3)))
}
