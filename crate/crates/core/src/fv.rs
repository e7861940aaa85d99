//! First-order finite volume discretization of cell averages on a periodic
//! 1d mesh, with a selectable interface flux. States may carry extra
//! momentum components that are transported passively; fluxes act along the
//! first one.

use crate::eos::EquationOfState;
use crate::equations::{self, entropy, entropy_variables};
use crate::error::Result;
use crate::flux::{two_point_flux, NumericalFlux};
use crate::mesh::Mesh1d;
use crate::state::State;

pub struct FvGrid<const D: usize> {
    pub mesh: Mesh1d,
    pub cells: Vec<State<D>>,
}

impl<const D: usize> FvGrid<D> {
    /// Grid initialized by sampling `f` at the cell centers.
    pub fn from_fn(mesh: Mesh1d, f: impl Fn(f64) -> State<D>) -> Self {
        let cells = (0..mesh.n_cells).map(|i| f(center(&mesh, i))).collect();
        Self { mesh, cells }
    }

    pub fn cell_center(&self, i: usize) -> f64 {
        center(&self.mesh, i)
    }

    /// Numerical flux through interface `i`, which separates cell `i` from
    /// cell `i + 1` modulo periodicity.
    pub fn interface_fluxes(
        &self,
        flux: NumericalFlux,
        eos: &EquationOfState,
    ) -> Result<Vec<State<D>>> {
        let n = self.mesh.n_cells;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(two_point_flux(flux, &self.cells[i], &self.cells[(i + 1) % n], 0, eos)?);
        }
        Ok(out)
    }

    /// Cell tendencies `du_i/dt = -(f*_i - f*_{i-1}) / dx`.
    pub fn time_derivative(
        &self,
        flux: NumericalFlux,
        eos: &EquationOfState,
    ) -> Result<Vec<State<D>>> {
        let fluxes = self.interface_fluxes(flux, eos)?;
        let n = self.mesh.n_cells;
        let inv_dx = 1.0 / self.mesh.dx();
        Ok((0..n).map(|i| (fluxes[(i + n - 1) % n] - fluxes[i]) * inv_dx).collect())
    }

    pub fn total_entropy(&self, eos: &EquationOfState) -> Result<f64> {
        let dx = self.mesh.dx();
        let mut total = 0.0;
        for u in &self.cells {
            total += dx * entropy(u, eos)?;
        }
        Ok(total)
    }

    /// Semidiscrete entropy rate `sum_i dx w_i . du_i/dt`; vanishes to
    /// rounding for the entropy-conservative flux and is nonpositive for the
    /// entropy-stable one.
    pub fn entropy_rate(&self, flux: NumericalFlux, eos: &EquationOfState) -> Result<f64> {
        let tendency = self.time_derivative(flux, eos)?;
        let dx = self.mesh.dx();
        let mut total = 0.0;
        for (u, du) in self.cells.iter().zip(&tendency) {
            total += dx * entropy_variables(u, eos)?.dot(du);
        }
        Ok(total)
    }

    pub fn max_wave_speed(&self, eos: &EquationOfState) -> Result<f64> {
        let mut lambda: f64 = 0.0;
        for u in &self.cells {
            lambda = lambda.max(equations::max_wave_speed(u, eos)?);
        }
        Ok(lambda)
    }
}

fn center(mesh: &Mesh1d, i: usize) -> f64 {
    mesh.x_min + (i as f64 + 0.5) * mesh.dx()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::State1;

    const RATE_TOL: f64 = 1e-13;

    fn wavy(x: f64) -> State1 {
        let h = 1.5 + 0.4 * (2.0 * std::f64::consts::PI * x).sin();
        State { rho: h, mom: [0.25 * h * (2.0 * std::f64::consts::PI * x).cos()] }
    }

    fn both_eos() -> [EquationOfState; 2] {
        [
            EquationOfState::isothermal(1.0).unwrap(),
            EquationOfState::polytropic(0.5, 1.4).unwrap(),
        ]
    }

    #[test]
    fn cell_centers_are_equally_spaced() {
        let grid = FvGrid::<1>::from_fn(Mesh1d::new(4, -1.0, 1.0).unwrap(), wavy);
        let centers: Vec<f64> = (0..4).map(|i| grid.cell_center(i)).collect();
        assert_eq!(centers, vec![-0.75, -0.25, 0.25, 0.75]);
    }

    #[test]
    fn constant_data_is_stationary() {
        for eos in both_eos() {
            for flux in [NumericalFlux::EntropyConservative, NumericalFlux::EntropyStable] {
                let grid = FvGrid::<2>::from_fn(Mesh1d::unit_interval(6).unwrap(), |_| State {
                    rho: 1.4,
                    mom: [0.6, -0.3],
                });
                for du in grid.time_derivative(flux, &eos).unwrap() {
                    assert_eq!(du.rho, 0.0);
                    assert_eq!(du.mom, [0.0, 0.0]);
                }
            }
        }
    }

    #[test]
    fn two_cell_tendencies_come_from_the_interface_flux_difference() {
        let eos = EquationOfState::isothermal(1.0).unwrap();
        let mesh = Mesh1d::unit_interval(2).unwrap();
        let grid = FvGrid::<1> {
            mesh,
            cells: vec![State { rho: 1.2, mom: [0.1] }, State { rho: 1.0, mom: [-0.3] }],
        };
        let fluxes = grid.interface_fluxes(NumericalFlux::EntropyConservative, &eos).unwrap();
        let tendency = grid.time_derivative(NumericalFlux::EntropyConservative, &eos).unwrap();
        // With two cells both interfaces see the same pair in opposite order,
        // and the flux is symmetric, so the tendencies mirror each other.
        let expected = (fluxes[1] - fluxes[0]) * (1.0 / grid.mesh.dx());
        assert_eq!(tendency[0].rho, expected.rho);
        assert_eq!(tendency[1].rho, -expected.rho);
        assert_eq!(tendency[0].mom[0], expected.mom[0]);
        assert_eq!(tendency[1].mom[0], -expected.mom[0]);
    }

    #[test]
    fn tendencies_conserve_mass_and_momentum() {
        for eos in both_eos() {
            for flux in [NumericalFlux::EntropyConservative, NumericalFlux::EntropyStable] {
                let grid = FvGrid::<1>::from_fn(Mesh1d::unit_interval(17).unwrap(), wavy);
                let tendency = grid.time_derivative(flux, &eos).unwrap();
                let mass: f64 = tendency.iter().map(|du| du.rho).sum();
                let momentum: f64 = tendency.iter().map(|du| du.mom[0]).sum();
                assert!(mass.abs() <= 1e-13, "mass drift {mass:e}");
                assert!(momentum.abs() <= 1e-13, "momentum drift {momentum:e}");
            }
        }
    }

    #[test]
    fn entropy_rate_vanishes_for_the_conservative_flux() {
        for eos in both_eos() {
            let grid = FvGrid::<1>::from_fn(Mesh1d::unit_interval(32).unwrap(), wavy);
            let rate = grid.entropy_rate(NumericalFlux::EntropyConservative, &eos).unwrap();
            let scale = grid.total_entropy(&eos).unwrap().abs().max(1.0);
            assert!(rate.abs() <= RATE_TOL * scale, "entropy rate {rate:e}");
        }
    }

    #[test]
    fn entropy_rate_is_nonpositive_for_the_stable_flux() {
        for eos in both_eos() {
            let grid = FvGrid::<1>::from_fn(Mesh1d::unit_interval(32).unwrap(), wavy);
            let rate = grid.entropy_rate(NumericalFlux::EntropyStable, &eos).unwrap();
            assert!(rate <= 1e-14, "entropy rate {rate:e}");
            assert!(rate < -1e-10, "dissipation should be visible, got {rate:e}");
        }
    }

    #[test]
    fn transverse_momentum_rides_along() {
        // A uniform transverse velocity is advected without affecting the
        // in-line dynamics.
        let eos = EquationOfState::polytropic(0.5, 1.4).unwrap();
        let flat = FvGrid::<1>::from_fn(Mesh1d::unit_interval(8).unwrap(), wavy);
        let lifted = FvGrid::<2>::from_fn(Mesh1d::unit_interval(8).unwrap(), |x| {
            let u = wavy(x);
            State { rho: u.rho, mom: [u.mom[0], 0.2 * u.rho] }
        });
        let t1 = flat.time_derivative(NumericalFlux::EntropyConservative, &eos).unwrap();
        let t2 = lifted.time_derivative(NumericalFlux::EntropyConservative, &eos).unwrap();
        for (a, b) in t1.iter().zip(&t2) {
            assert!((a.rho - b.rho).abs() <= 1e-15);
            assert!((a.mom[0] - b.mom[0]).abs() <= 1e-15);
            // Transverse momentum tendency is 0.2 times the density tendency.
            assert!((b.mom[1] - 0.2 * a.rho).abs() <= 1e-14);
        }
    }

    #[test]
    fn wave_speed_scan_covers_all_cells() {
        let eos = EquationOfState::isothermal(1.0).unwrap();
        let grid = FvGrid::<1>::from_fn(Mesh1d::unit_interval(8).unwrap(), wavy);
        let expected = grid
            .cells
            .iter()
            .map(|u| (u.mom[0] / u.rho).abs() + 1.0)
            .fold(0.0f64, f64::max);
        assert!((grid.max_wave_speed(&eos).unwrap() - expected).abs() <= 1e-15);
    }
}
