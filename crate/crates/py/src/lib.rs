//! Python bindings for the flux kernels, entropy analysis, interface means,
//! and collocation operators. States cross the boundary as flat lists
//! `[rho, momentum...]` with 2, 3, or 4 entries; the spatial dimension is
//! inferred from the length.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use polytrope::{equations, flux, harness, means, sbp, EquationOfState, State};

fn to_py_err(e: polytrope::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Equation of state, either isothermal or polytropic.
#[pyclass(frozen)]
struct Eos(EquationOfState);

#[pymethods]
impl Eos {
    #[staticmethod]
    fn isothermal(sound_speed: f64) -> PyResult<Self> {
        EquationOfState::isothermal(sound_speed).map(Eos).map_err(to_py_err)
    }

    #[staticmethod]
    fn polytropic(kappa: f64, gamma: f64) -> PyResult<Self> {
        EquationOfState::polytropic(kappa, gamma).map(Eos).map_err(to_py_err)
    }

    fn pressure(&self, rho: f64) -> PyResult<f64> {
        self.0.pressure(rho).map_err(to_py_err)
    }

    fn internal_energy(&self, rho: f64) -> PyResult<f64> {
        self.0.internal_energy(rho).map_err(to_py_err)
    }

    fn sound_speed_sq(&self, rho: f64) -> PyResult<f64> {
        self.0.sound_speed_sq(rho).map_err(to_py_err)
    }

    fn gamma(&self) -> f64 {
        self.0.gamma()
    }

    fn kappa(&self) -> f64 {
        self.0.kappa()
    }

    fn __repr__(&self) -> String {
        match self.0 {
            EquationOfState::Polytropic { kappa, gamma } => {
                format!("Eos.polytropic(kappa={kappa}, gamma={gamma})")
            }
            EquationOfState::Isothermal { sound_speed } => {
                format!("Eos.isothermal(sound_speed={sound_speed})")
            }
        }
    }
}

fn check_len(u: &[f64]) -> PyResult<()> {
    match u.len() {
        2..=4 => Ok(()),
        n => Err(PyValueError::new_err(format!(
            "state must have 2, 3, or 4 components [rho, momentum...], got {n}"
        ))),
    }
}

fn check_same_len(a: &[f64], b: &[f64]) -> PyResult<()> {
    check_len(a)?;
    if a.len() != b.len() {
        return Err(PyValueError::new_err(format!(
            "states have mismatched dimensions: {} vs {} components",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

fn state<const D: usize>(u: &[f64]) -> State<D> {
    let mut mom = [0.0; D];
    mom.copy_from_slice(&u[1..]);
    State { rho: u[0], mom }
}

/// Physical flux along `axis`.
#[pyfunction]
fn physical_flux(u: Vec<f64>, axis: usize, eos: &Eos) -> PyResult<Vec<f64>> {
    check_len(&u)?;
    let f = match u.len() {
        2 => equations::physical_flux(&state::<1>(&u), axis, &eos.0).map(|f| f.to_vec()),
        3 => equations::physical_flux(&state::<2>(&u), axis, &eos.0).map(|f| f.to_vec()),
        _ => equations::physical_flux(&state::<3>(&u), axis, &eos.0).map(|f| f.to_vec()),
    };
    f.map_err(to_py_err)
}

/// Mathematical entropy (kinetic plus internal energy density).
#[pyfunction]
fn entropy(u: Vec<f64>, eos: &Eos) -> PyResult<f64> {
    check_len(&u)?;
    let s = match u.len() {
        2 => equations::entropy(&state::<1>(&u), &eos.0),
        3 => equations::entropy(&state::<2>(&u), &eos.0),
        _ => equations::entropy(&state::<3>(&u), &eos.0),
    };
    s.map_err(to_py_err)
}

/// Entropy variables `w = ds/du`.
#[pyfunction]
fn entropy_variables(u: Vec<f64>, eos: &Eos) -> PyResult<Vec<f64>> {
    check_len(&u)?;
    let w = match u.len() {
        2 => equations::entropy_variables(&state::<1>(&u), &eos.0).map(|w| w.to_vec()),
        3 => equations::entropy_variables(&state::<2>(&u), &eos.0).map(|w| w.to_vec()),
        _ => equations::entropy_variables(&state::<3>(&u), &eos.0).map(|w| w.to_vec()),
    };
    w.map_err(to_py_err)
}

/// Entropy flux along `axis`.
#[pyfunction]
fn entropy_flux(u: Vec<f64>, axis: usize, eos: &Eos) -> PyResult<f64> {
    check_len(&u)?;
    let f = match u.len() {
        2 => equations::entropy_flux(&state::<1>(&u), axis, &eos.0),
        3 => equations::entropy_flux(&state::<2>(&u), axis, &eos.0),
        _ => equations::entropy_flux(&state::<3>(&u), axis, &eos.0),
    };
    f.map_err(to_py_err)
}

/// Entropy flux potential `psi = p v_axis`.
#[pyfunction]
fn entropy_potential(u: Vec<f64>, axis: usize, eos: &Eos) -> PyResult<f64> {
    check_len(&u)?;
    let psi = match u.len() {
        2 => equations::entropy_potential(&state::<1>(&u), axis, &eos.0),
        3 => equations::entropy_potential(&state::<2>(&u), axis, &eos.0),
        _ => equations::entropy_potential(&state::<3>(&u), axis, &eos.0),
    };
    psi.map_err(to_py_err)
}

/// Largest characteristic speed `max |v_i| + a`.
#[pyfunction]
fn max_wave_speed(u: Vec<f64>, eos: &Eos) -> PyResult<f64> {
    check_len(&u)?;
    let lambda = match u.len() {
        2 => equations::max_wave_speed(&state::<1>(&u), &eos.0),
        3 => equations::max_wave_speed(&state::<2>(&u), &eos.0),
        _ => equations::max_wave_speed(&state::<3>(&u), &eos.0),
    };
    lambda.map_err(to_py_err)
}

/// Entropy-conservative two-point flux along `axis`.
#[pyfunction]
fn ec_flux(u_l: Vec<f64>, u_r: Vec<f64>, axis: usize, eos: &Eos) -> PyResult<Vec<f64>> {
    check_same_len(&u_l, &u_r)?;
    let f = match u_l.len() {
        2 => flux::ec_flux(&state::<1>(&u_l), &state::<1>(&u_r), axis, &eos.0).map(|f| f.to_vec()),
        3 => flux::ec_flux(&state::<2>(&u_l), &state::<2>(&u_r), axis, &eos.0).map(|f| f.to_vec()),
        _ => flux::ec_flux(&state::<3>(&u_l), &state::<3>(&u_r), axis, &eos.0).map(|f| f.to_vec()),
    };
    f.map_err(to_py_err)
}

/// Entropy-stable two-point flux along `axis`.
#[pyfunction]
fn es_flux(u_l: Vec<f64>, u_r: Vec<f64>, axis: usize, eos: &Eos) -> PyResult<Vec<f64>> {
    check_same_len(&u_l, &u_r)?;
    let f = match u_l.len() {
        2 => flux::es_flux(&state::<1>(&u_l), &state::<1>(&u_r), axis, &eos.0).map(|f| f.to_vec()),
        3 => flux::es_flux(&state::<2>(&u_l), &state::<2>(&u_r), axis, &eos.0).map(|f| f.to_vec()),
        _ => flux::es_flux(&state::<3>(&u_l), &state::<3>(&u_r), axis, &eos.0).map(|f| f.to_vec()),
    };
    f.map_err(to_py_err)
}

/// Entropy production `[[w]] . f - [[psi]]` of a numerical flux; zero for the
/// entropy-conservative flux, nonpositive for the entropy-stable one.
#[pyfunction]
fn entropy_production(
    flux_vec: Vec<f64>,
    u_l: Vec<f64>,
    u_r: Vec<f64>,
    axis: usize,
    eos: &Eos,
) -> PyResult<f64> {
    check_same_len(&u_l, &u_r)?;
    check_same_len(&u_l, &flux_vec)?;
    let p = match u_l.len() {
        2 => flux::entropy_production(
            &state::<1>(&flux_vec),
            &state::<1>(&u_l),
            &state::<1>(&u_r),
            axis,
            &eos.0,
        ),
        3 => flux::entropy_production(
            &state::<2>(&flux_vec),
            &state::<2>(&u_l),
            &state::<2>(&u_r),
            axis,
            &eos.0,
        ),
        _ => flux::entropy_production(
            &state::<3>(&flux_vec),
            &state::<3>(&u_l),
            &state::<3>(&u_r),
            axis,
            &eos.0,
        ),
    };
    p.map_err(to_py_err)
}

/// Interface density mean entering the entropy-conservative flux.
#[pyfunction]
fn gamma_mean(rho_l: f64, rho_r: f64, eos: &Eos) -> PyResult<f64> {
    means::gamma_mean(rho_l, rho_r, &eos.0).map_err(to_py_err)
}

/// Squared interface sound speed entering the dissipation operator.
#[pyfunction]
fn avg_sound_speed_sq(rho_l: f64, rho_r: f64, eos: &Eos) -> PyResult<f64> {
    means::avg_sound_speed_sq(rho_l, rho_r, &eos.0).map_err(to_py_err)
}

/// Legendre-Gauss-Lobatto collocation operators for the given degree:
/// `(nodes, quadrature weights, derivative matrix)`.
#[pyfunction]
fn lgl_operators(degree: usize) -> PyResult<(Vec<f64>, Vec<f64>, Vec<Vec<f64>>)> {
    let ops = sbp::lgl_operator_set(degree).map_err(to_py_err)?;
    let deriv = ops.deriv.rows().into_iter().map(|row| row.to_vec()).collect();
    Ok((ops.nodes, ops.weights, deriv))
}

/// Manufactured solution state `[rho, mom_x, mom_y]` at `(x, y, t)`.
#[pyfunction]
fn manufactured_state(x: f64, y: f64, t: f64) -> Vec<f64> {
    harness::manufactured_state(x, y, t).to_vec()
}

/// Source term making the manufactured solution exact.
#[pyfunction]
fn manufactured_source(x: f64, y: f64, t: f64, eos: &Eos) -> Vec<f64> {
    harness::manufactured_source(x, y, t, &eos.0).to_vec()
}

/// Discontinuous initial condition of the entropy-conservation study.
#[pyfunction]
fn discontinuous_ic(x: f64, y: f64) -> Vec<f64> {
    harness::discontinuous_ic(x, y).to_vec()
}

#[pymodule(name = "polytrope")]
fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Eos>()?;
    m.add_function(wrap_pyfunction!(physical_flux, m)?)?;
    m.add_function(wrap_pyfunction!(entropy, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_variables, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_flux, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_potential, m)?)?;
    m.add_function(wrap_pyfunction!(max_wave_speed, m)?)?;
    m.add_function(wrap_pyfunction!(ec_flux, m)?)?;
    m.add_function(wrap_pyfunction!(es_flux, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_production, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_mean, m)?)?;
    m.add_function(wrap_pyfunction!(avg_sound_speed_sq, m)?)?;
    m.add_function(wrap_pyfunction!(lgl_operators, m)?)?;
    m.add_function(wrap_pyfunction!(manufactured_state, m)?)?;
    m.add_function(wrap_pyfunction!(manufactured_source, m)?)?;
    m.add_function(wrap_pyfunction!(discontinuous_ic, m)?)?;
    Ok(())
}
