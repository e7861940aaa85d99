//! Continuous flux and entropy analysis for the barotropic Euler equations.
//!
//! The conserved variables are density and momentum; the pressure closes the
//! system through a barotropic law, making the energy equation redundant. The
//! total energy `s = rho |v|^2 / 2 + rho e(rho)` acts as a strictly convex
//! mathematical entropy with flux `f^s = v (s + p)` and flux potential
//! `psi_i = p v_i`.

use ndarray::{Array1, Array2};

use crate::eos::EquationOfState;
use crate::error::{Error, Result};
use crate::state::{EntropyVector, State};

pub(crate) fn check_axis<const D: usize>(axis: usize) -> Result<()> {
    if axis < D {
        Ok(())
    } else {
        Err(Error::AxisOutOfRange { axis, dim: D })
    }
}

/// Advective flux `f_axis(u) = (rho v_a, rho v_a v_1 + p d_1a, ...)`.
pub fn physical_flux<const D: usize>(
    u: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<State<D>> {
    check_axis::<D>(axis)?;
    let p = eos.pressure(u.rho)?;
    let v = u.velocity();
    let mut mom = [0.0; D];
    for (j, m) in mom.iter_mut().enumerate() {
        *m = u.mom[j] * v[axis] + if j == axis { p } else { 0.0 };
    }
    Ok(State { rho: u.mom[axis], mom })
}

/// Mathematical entropy `s(u) = rho |v|^2 / 2 + rho e(rho)` (the total energy).
pub fn entropy<const D: usize>(u: &State<D>, eos: &EquationOfState) -> Result<f64> {
    let e = eos.internal_energy(u.rho)?;
    let v = u.velocity();
    let kinetic = 0.5 * u.rho * v.iter().map(|vi| vi * vi).sum::<f64>();
    Ok(kinetic + u.rho * e)
}

/// Entropy variables `w = ds/du = (e + p/rho - |v|^2/2, v)`.
pub fn entropy_variables<const D: usize>(
    u: &State<D>,
    eos: &EquationOfState,
) -> Result<EntropyVector<D>> {
    let e = eos.internal_energy(u.rho)?;
    let p = eos.pressure(u.rho)?;
    let v = u.velocity();
    let w_rho = e + p / u.rho - 0.5 * v.iter().map(|vi| vi * vi).sum::<f64>();
    Ok(EntropyVector { w_rho, w_mom: v })
}

/// Entropy flux `f^s_axis = v_axis (s + p)`.
pub fn entropy_flux<const D: usize>(
    u: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<f64> {
    check_axis::<D>(axis)?;
    let s = entropy(u, eos)?;
    let p = eos.pressure(u.rho)?;
    Ok(u.velocity()[axis] * (s + p))
}

/// Entropy flux potential `psi_axis = w . f_axis - f^s_axis = p v_axis`.
pub fn entropy_potential<const D: usize>(
    u: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<f64> {
    check_axis::<D>(axis)?;
    let p = eos.pressure(u.rho)?;
    Ok(p * u.velocity()[axis])
}

/// Eigenvalues of the directional flux Jacobian, ordered
/// `(v_a - a, v_a, ..., v_a, v_a + a)` with the advective speed repeated
/// `D - 1` times.
pub fn eigenvalues<const D: usize>(
    u: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<Vec<f64>> {
    check_axis::<D>(axis)?;
    let a = eos.sound_speed_sq(u.rho)?.sqrt();
    let va = u.velocity()[axis];
    let mut lambda = Vec::with_capacity(D + 1);
    lambda.push(va - a);
    lambda.extend(std::iter::repeat(va).take(D - 1));
    lambda.push(va + a);
    Ok(lambda)
}

/// Largest signal speed `max_axis |v_axis| + a` over all directions.
pub fn max_wave_speed<const D: usize>(u: &State<D>, eos: &EquationOfState) -> Result<f64> {
    let a = eos.sound_speed_sq(u.rho)?.sqrt();
    let v = u.velocity();
    Ok(v.iter().fold(0.0f64, |m, vi| m.max(vi.abs())) + a)
}

/// Directional flux Jacobian `A_axis = df_axis/du`.
pub fn flux_jacobian<const D: usize>(
    u: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<Array2<f64>> {
    check_axis::<D>(axis)?;
    let a2 = eos.sound_speed_sq(u.rho)?;
    let v = u.velocity();
    let n = D + 1;
    let mut jac = Array2::zeros((n, n));
    jac[(0, 1 + axis)] = 1.0;
    for j in 0..D {
        jac[(1 + j, 0)] = -v[axis] * v[j] + if j == axis { a2 } else { 0.0 };
        for k in 0..D {
            let mut entry = 0.0;
            if k == axis {
                entry += v[j];
            }
            if k == j {
                entry += v[axis];
            }
            jac[(1 + j, 1 + k)] = entry;
        }
    }
    Ok(jac)
}

/// Entropy Jacobian `H = du/dw`, the inverse Hessian of the entropy:
/// `H = (1/a^2) [rho, rho v^T; rho v, rho v v^T + a^2 rho I]`.
pub fn entropy_jacobian<const D: usize>(
    u: &State<D>,
    eos: &EquationOfState,
) -> Result<Array2<f64>> {
    let a2 = eos.sound_speed_sq(u.rho)?;
    let v = u.velocity();
    let n = D + 1;
    let mut h = Array2::zeros((n, n));
    h[(0, 0)] = u.rho / a2;
    for i in 0..D {
        h[(0, 1 + i)] = u.rho * v[i] / a2;
        h[(1 + i, 0)] = h[(0, 1 + i)];
        for j in 0..D {
            h[(1 + i, 1 + j)] =
                u.rho * (v[i] * v[j]) / a2 + if i == j { u.rho } else { 0.0 };
        }
    }
    Ok(h)
}

/// Assemble the right eigenvector matrix and the diagonals of the eigenvalue
/// and scaling matrices for a wave system with velocity `v`, sound speed `a`,
/// and density-like scaling weight `m` in direction `axis`.
///
/// Columns are ordered (slow acoustic, shear waves in component order, fast
/// acoustic); shear columns are unit vectors in the transverse momentum slots.
/// Shared by the exact eigensystem and its discrete counterpart built from
/// interface mean values.
pub(crate) fn eigen_matrices<const D: usize>(
    v: [f64; D],
    a: f64,
    m: f64,
    axis: usize,
) -> (Array2<f64>, Array1<f64>, Array1<f64>) {
    let n = D + 1;
    let a2 = a * a;
    let mut r = Array2::zeros((n, n));
    let mut lambda = Array1::zeros(n);
    let mut z = Array1::zeros(n);

    // Slow acoustic wave in column 0, fast in column n-1.
    r[(0, 0)] = 1.0;
    r[(0, n - 1)] = 1.0;
    for k in 0..D {
        r[(1 + k, 0)] = v[k] - if k == axis { a } else { 0.0 };
        r[(1 + k, n - 1)] = v[k] + if k == axis { a } else { 0.0 };
    }
    lambda[0] = v[axis] - a;
    lambda[n - 1] = v[axis] + a;
    z[0] = m / (2.0 * a2);
    z[n - 1] = m / (2.0 * a2);

    let mut col = 1;
    for k in 0..D {
        if k == axis {
            continue;
        }
        r[(1 + k, col)] = 1.0;
        lambda[col] = v[axis];
        z[col] = m;
        col += 1;
    }

    (r, lambda, z)
}

/// Right eigenvectors `R`, Barth scaling `Z`, and the product `R Z R^T` for
/// the directional flux Jacobian. The product equals the entropy Jacobian
/// [`entropy_jacobian`], which is the eigenvector scaling property that the
/// dissipation operator of the entropy-stable flux is built on.
pub struct EigenScaling {
    /// Right eigenvector matrix, columns ordered slow/shear/fast.
    pub r: Array2<f64>,
    /// Diagonal of the eigenvalue matrix, same column order.
    pub lambda: Array1<f64>,
    /// Diagonal of the s.p.d. scaling matrix `Z`.
    pub z: Array1<f64>,
    /// `R Z R^T`.
    pub r_z_rt: Array2<f64>,
}

pub fn eigenvector_scaling<const D: usize>(
    u: &State<D>,
    axis: usize,
    eos: &EquationOfState,
) -> Result<EigenScaling> {
    check_axis::<D>(axis)?;
    let a = eos.sound_speed_sq(u.rho)?.sqrt();
    let (r, lambda, z) = eigen_matrices::<D>(u.velocity(), a, u.rho, axis);
    let r_z_rt = scaled_outer_product(&r, &z);
    Ok(EigenScaling { r, lambda, z, r_z_rt })
}

/// `R diag(z) R^T` for a square `R`.
pub(crate) fn scaled_outer_product(r: &Array2<f64>, z: &Array1<f64>) -> Array2<f64> {
    let n = r.nrows();
    let mut out = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += (r[(i, k)] * r[(j, k)]) * z[k];
            }
            out[(i, j)] = acc;
        }
    }
    out
}
