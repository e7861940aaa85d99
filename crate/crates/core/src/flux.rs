//! Two-point numerical fluxes.
//!
//! The entropy-conservative (EC) flux combines arithmetic means of velocity
//! and pressure with the adapted density mean from [`crate::means`]; it
//! satisfies the jump condition `[[w]] . f* = [[psi]]` exactly. The
//! entropy-stable (ES) flux subtracts a dissipation term built from the
//! discrete eigensystem at the interface,
//!
//! ```text
//! f_es = f_ec - 1/2 R |Lambda| Z R^T [[w]],
//! ```
//!
//! whose quadratic entropy contribution is nonpositive by construction. No
//! eigenvalue fix is applied; `|Lambda|` uses the plain absolute values.

use ndarray::{Array1, Array2};

use crate::eos::EquationOfState;
use crate::equations::{check_axis, eigen_matrices, entropy_variables, scaled_outer_product};
use crate::error::Result;
use crate::means::{arithmetic_mean, avg_sound_speed_sq_series, gamma_mean_series, NU_CUTOFF};
use crate::state::State;

/// Interface flux selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumericalFlux {
    EntropyConservative,
    EntropyStable,
}

/// Per-node thermodynamic values reused across many two-point evaluations.
/// Residual assembly precomputes one of these per quadrature node so that the
/// `rho^gamma` powers are evaluated once per node instead of once per pair.
#[derive(Debug, Clone, Copy)]
pub(crate) struct NodeVals<const D: usize> {
    pub rho: f64,
    pub v: [f64; D],
    pub p: f64,
    pub e: f64,
    /// First entropy variable `e + p/rho - |v|^2/2`.
    pub w0: f64,
}

impl<const D: usize> NodeVals<D> {
    pub fn from_state(u: &State<D>, eos: &EquationOfState) -> Result<Self> {
        eos.pressure(u.rho)?; // density validation
        Ok(Self::from_admissible(u.rho, u.mom, eos))
    }

    /// Caller guarantees `rho > 0`; used by residual assembly after the
    /// per-node admissibility scan. The formulas mirror the checked
    /// equation-of-state methods exactly so both paths agree bitwise.
    pub(crate) fn from_admissible(rho: f64, mom: [f64; D], eos: &EquationOfState) -> Self {
        let (p, e) = match eos {
            EquationOfState::Polytropic { kappa, gamma } => {
                (kappa * rho.powf(*gamma), kappa * rho.powf(gamma - 1.0) / (gamma - 1.0))
            }
            EquationOfState::Isothermal { sound_speed } => {
                let c2 = sound_speed * sound_speed;
                (c2 * rho, c2 * rho.ln())
            }
        };
        let v = mom.map(|m| m / rho);
        let w0 = e + p / rho - 0.5 * v.iter().map(|vi| vi * vi).sum::<f64>();
        Self { rho, v, p, e, w0 }
    }
}

/// Physical flux from cached node values; written so that it is bit-identical
/// to `ec_flux_vals(n, n, axis)`, which keeps surface brackets of constant
/// states exactly zero.
#[inline]
pub(crate) fn physical_flux_vals<const D: usize>(n: &NodeVals<D>, axis: usize) -> State<D> {
    let mass = n.rho * n.v[axis];
    let mut mom = [0.0; D];
    for (k, m) in mom.iter_mut().enumerate() {
        *m = mass * n.v[k] + if k == axis { n.p } else { 0.0 };
    }
    State { rho: mass, mom }
}

/// Adapted density mean evaluated from cached node values; bit-identical to
/// [`crate::means::gamma_mean`] on admissible input.
#[inline]
pub(crate) fn gamma_mean_vals<const D: usize>(
    l: &NodeVals<D>,
    r: &NodeVals<D>,
    eos: &EquationOfState,
) -> f64 {
    let f = (r.rho - l.rho) / (r.rho + l.rho);
    let nu = f * f;
    if nu < NU_CUTOFF {
        gamma_mean_series(l.rho, r.rho, eos)
    } else {
        (r.p - l.p) / (eos.gamma() * (r.e - l.e))
    }
}

/// Squared interface sound speed from cached node values; bit-identical to
/// [`crate::means::avg_sound_speed_sq`] on admissible input.
#[inline]
pub(crate) fn avg_sound_speed_sq_vals<const D: usize>(
    l: &NodeVals<D>,
    r: &NodeVals<D>,
    eos: &EquationOfState,
) -> f64 {
    if let EquationOfState::Isothermal { sound_speed } = eos {
        return sound_speed * sound_speed;
    }
    let f = (r.rho - l.rho) / (r.rho + l.rho);
    if f * f < NU_CUTOFF {
        avg_sound_speed_sq_series(l.rho, r.rho, eos)
    } else {
        (r.p - l.p) / (r.rho - l.rho)
    }
}

#[inline]
pub(crate) fn ec_flux_vals<const D: usize>(
    l: &NodeVals<D>,
    r: &NodeVals<D>,
    axis: usize,
    eos: &EquationOfState,
) -> State<D> {
    let rho_m = gamma_mean_vals(l, r, eos);
    let p_avg = arithmetic_mean(l.p, r.p);
    let mut v_avg = [0.0; D];
    for k in 0..D {
        v_avg[k] = arithmetic_mean(l.v[k], r.v[k]);
    }
    let mass = rho_m * v_avg[axis];
    let mut mom = [0.0; D];
    for (k, m) in mom.iter_mut().enumerate() {
        *m = mass * v_avg[k] + if k == axis { p_avg } else { 0.0 };
    }
    State { rho: mass, mom }
}

#[inline]
pub(crate) fn es_flux_vals<const D: usize>(
    l: &NodeVals<D>,
    r: &NodeVals<D>,
    axis: usize,
    eos: &EquationOfState,
) -> State<D> {
    let mut f = ec_flux_vals(l, r, axis, eos);

    let rho_m = gamma_mean_vals(l, r, eos);
    let a2 = avg_sound_speed_sq_vals(l, r, eos);
    let a = a2.sqrt();
    let mut v_avg = [0.0; D];
    let mut jv = [0.0; D];
    for k in 0..D {
        v_avg[k] = arithmetic_mean(l.v[k], r.v[k]);
        jv[k] = r.v[k] - l.v[k];
    }
    let jw0 = r.w0 - l.w0;
    let v_dot_jv: f64 = v_avg.iter().zip(&jv).map(|(a, b)| a * b).sum();

    // Characteristic components of R^T [[w]], scaled by |Lambda| Z.
    let z_acoustic = rho_m / (2.0 * a2);
    let c_minus = (v_avg[axis] - a).abs() * z_acoustic * (jw0 + v_dot_jv - a * jv[axis]);
    let c_plus = (v_avg[axis] + a).abs() * z_acoustic * (jw0 + v_dot_jv + a * jv[axis]);
    let shear_scale = v_avg[axis].abs() * rho_m;

    // Half of R applied to the scaled components, subtracted from the flux.
    f.rho -= 0.5 * (c_minus + c_plus);
    for k in 0..D {
        let mut diss = c_minus * v_avg[k] + c_plus * v_avg[k];
        if k == axis {
            diss += a * (c_plus - c_minus);
        } else {
            diss += shear_scale * jv[k];
        }
        f.mom[k] -= 0.5 * diss;
    }
    f
}

/// Entropy-conservative two-point flux in the given direction.
pub fn ec_flux<const D: usize>(
    u_l: &State<D>,
    u_r: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<State<D>> {
    check_axis::<D>(axis)?;
    let l = NodeVals::from_state(u_l, eos)?;
    let r = NodeVals::from_state(u_r, eos)?;
    Ok(ec_flux_vals(&l, &r, axis, eos))
}

/// Entropy-stable two-point flux: the EC flux plus interface dissipation.
pub fn es_flux<const D: usize>(
    u_l: &State<D>,
    u_r: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<State<D>> {
    check_axis::<D>(axis)?;
    let l = NodeVals::from_state(u_l, eos)?;
    let r = NodeVals::from_state(u_r, eos)?;
    Ok(es_flux_vals(&l, &r, axis, eos))
}

/// Dispatch on the flux selector.
pub fn two_point_flux<const D: usize>(
    kind: NumericalFlux,
    u_l: &State<D>,
    u_r: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<State<D>> {
    match kind {
        NumericalFlux::EntropyConservative => ec_flux(u_l, u_r, axis, eos),
        NumericalFlux::EntropyStable => es_flux(u_l, u_r, axis, eos),
    }
}

/// Discrete entropy Jacobian at an interface,
///
/// ```text
/// H_hat = (1/a_bar^2) [ rho_gm        rho_gm {v}^T                       ]
///                     [ rho_gm {v}    rho_gm {v}{v}^T + a_bar^2 {rho} I  ]
/// ```
///
/// with `rho_gm` the adapted density mean. It satisfies
/// `H_hat [[w]] = [[u]]` exactly in exact arithmetic.
pub fn discrete_entropy_jacobian<const D: usize>(
    u_l: &State<D>,
    u_r: &State<D>,
    eos: &EquationOfState,
) -> Result<Array2<f64>> {
    let l = NodeVals::from_state(u_l, eos)?;
    let r = NodeVals::from_state(u_r, eos)?;
    let rho_m = gamma_mean_vals(&l, &r, eos);
    let a2 = avg_sound_speed_sq_vals(&l, &r, eos);
    let rho_avg = arithmetic_mean(l.rho, r.rho);
    let n = D + 1;
    let mut h = Array2::zeros((n, n));
    h[(0, 0)] = rho_m / a2;
    for i in 0..D {
        let vbar_i = arithmetic_mean(l.v[i], r.v[i]);
        h[(0, 1 + i)] = rho_m * vbar_i / a2;
        h[(1 + i, 0)] = h[(0, 1 + i)];
        for j in 0..D {
            let vbar_j = arithmetic_mean(l.v[j], r.v[j]);
            h[(1 + i, 1 + j)] =
                rho_m * (vbar_i * vbar_j) / a2 + if i == j { rho_avg } else { 0.0 };
        }
    }
    Ok(h)
}

/// Discrete eigendecomposition underlying the ES dissipation operator.
///
/// `r_z_rt` matches [`discrete_entropy_jacobian`] everywhere except the
/// momentum diagonal, where the adapted density mean appears in place of the
/// arithmetic one; that mismatch is exactly `gamma_mean - avg` and does not
/// affect the sign of the dissipation.
pub struct DissipationDecomposition {
    pub r_hat: Array2<f64>,
    /// Signed interface eigenvalues (slow, advective..., fast).
    pub lambda_hat: Array1<f64>,
    /// Diagonal of the positive scaling matrix.
    pub z_hat: Array1<f64>,
    /// `R_hat diag(z_hat) R_hat^T`.
    pub r_z_rt: Array2<f64>,
}

pub fn dissipation_decomposition<const D: usize>(
    u_l: &State<D>,
    u_r: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<DissipationDecomposition> {
    check_axis::<D>(axis)?;
    let l = NodeVals::from_state(u_l, eos)?;
    let r = NodeVals::from_state(u_r, eos)?;
    let rho_m = gamma_mean_vals(&l, &r, eos);
    let a = avg_sound_speed_sq_vals(&l, &r, eos).sqrt();
    let mut v_avg = [0.0; D];
    for k in 0..D {
        v_avg[k] = arithmetic_mean(l.v[k], r.v[k]);
    }
    let (r_hat, lambda_hat, z_hat) = eigen_matrices::<D>(v_avg, a, rho_m, axis);
    let r_z_rt = scaled_outer_product(&r_hat, &z_hat);
    Ok(DissipationDecomposition { r_hat, lambda_hat, z_hat, r_z_rt })
}

/// Entropy production of a two-point flux: `[[w]] . f* - [[psi]]`.
/// Zero (to round-off) for the EC flux, nonpositive for the ES flux.
pub fn entropy_production<const D: usize>(
    flux: &State<D>,
    u_l: &State<D>,
    u_r: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<f64> {
    let w_l = entropy_variables(u_l, eos)?;
    let w_r = entropy_variables(u_r, eos)?;
    let jw = w_r - w_l;
    let psi_jump = crate::equations::entropy_potential(u_r, axis, eos)?
        - crate::equations::entropy_potential(u_l, axis, eos)?;
    Ok(jw.dot(flux) - psi_jump)
}
