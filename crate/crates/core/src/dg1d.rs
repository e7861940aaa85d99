//! Split-form discontinuous Galerkin spectral element discretization on a
//! periodic 1d mesh. Mirrors the 2d variant with one coordinate line per
//! element; solution data has shape `(n_cells, 2, n_nodes)`.

use ndarray::Array3;

use crate::eos::EquationOfState;
use crate::equations::{self, entropy, entropy_variables};
use crate::error::{Error, Result};
use crate::flux::{ec_flux_vals, es_flux_vals, physical_flux_vals, NodeVals, NumericalFlux};
use crate::mesh::Mesh1d;
use crate::sbp::{lgl_operator_set, SbpOperatorSet};
use crate::state::{State, State1};

/// Conserved fields per node: density and one momentum component.
pub const N_FIELDS_1D: usize = 2;

pub struct DgSystem1d {
    pub mesh: Mesh1d,
    pub ops: SbpOperatorSet,
    pub eos: EquationOfState,
    pub volume_flux: NumericalFlux,
    pub surface_flux: NumericalFlux,
}

impl DgSystem1d {
    pub fn new(
        mesh: Mesh1d,
        degree: usize,
        eos: EquationOfState,
        volume_flux: NumericalFlux,
        surface_flux: NumericalFlux,
    ) -> Result<Self> {
        if volume_flux == NumericalFlux::EntropyStable {
            return Err(Error::Config(
                "volume flux must be the entropy-conservative one; the split form needs a \
                 symmetric two-point function, so dissipation belongs on surfaces"
                    .into(),
            ));
        }
        let ops = lgl_operator_set(degree)?;
        Ok(Self { mesh, ops, eos, volume_flux, surface_flux })
    }

    pub fn data_dim(&self) -> (usize, usize, usize) {
        (self.mesh.n_cells, N_FIELDS_1D, self.ops.n_nodes())
    }

    pub fn zeros(&self) -> Array3<f64> {
        Array3::zeros(self.data_dim())
    }

    /// Physical coordinate of quadrature node `i` of element `e`.
    pub fn node_coord(&self, e: usize, i: usize) -> f64 {
        self.mesh.x_min + (e as f64 + 0.5 * (self.ops.nodes[i] + 1.0)) * self.mesh.dx()
    }

    pub fn project(&self, f: impl Fn(f64) -> State1) -> Array3<f64> {
        let mut data = self.zeros();
        for e in 0..self.mesh.n_cells {
            for i in 0..self.ops.n_nodes() {
                let u = f(self.node_coord(e, i));
                data[[e, 0, i]] = u.rho;
                data[[e, 1, i]] = u.mom[0];
            }
        }
        data
    }

    pub fn state_at(data: &Array3<f64>, e: usize, i: usize) -> State1 {
        State { rho: data[[e, 0, i]], mom: [data[[e, 1, i]]] }
    }

    /// Spatial residual `Res` in the convention `J u_t + Res = 0`.
    pub fn residual(&self, data: &Array3<f64>) -> Result<Array3<f64>> {
        let mut out = self.zeros();
        self.accumulate_spatial(data, 1.0, 1.0, &mut out)?;
        Ok(out)
    }

    /// `out = beta * out + (-Res / J + source)` at time `t`.
    pub fn accumulate_rhs(
        &self,
        data: &Array3<f64>,
        t: f64,
        source: Option<&dyn Fn(f64, f64) -> [f64; N_FIELDS_1D]>,
        out: &mut Array3<f64>,
        beta: f64,
    ) -> Result<()> {
        let inv_jac = 1.0 / self.mesh.jacobian();
        self.accumulate_spatial(data, -inv_jac, beta, out)?;
        if let Some(src) = source {
            let nn = self.ops.n_nodes();
            let o = out.as_slice_mut().expect("solution arrays must be in standard memory order");
            for e in 0..self.mesh.n_cells {
                let base = e * N_FIELDS_1D * nn;
                for i in 0..nn {
                    let r = src(self.node_coord(e, i), t);
                    o[base + i] += r[0];
                    o[base + nn + i] += r[1];
                }
            }
        }
        Ok(())
    }

    pub fn total_entropy(&self, data: &Array3<f64>) -> Result<f64> {
        let jac = self.mesh.jacobian();
        let mut total = 0.0;
        for e in 0..self.mesh.n_cells {
            let mut elem = 0.0;
            for i in 0..self.ops.n_nodes() {
                let u = Self::state_at(data, e, i);
                elem += self.ops.weights[i] * entropy(&u, &self.eos)?;
            }
            total += jac * elem;
        }
        Ok(total)
    }

    /// Entropy-variable contraction of the spatial residual; see the 2d
    /// variant for the sign conventions.
    pub fn entropy_residual_rate(&self, data: &Array3<f64>) -> Result<f64> {
        let res = self.residual(data)?;
        let jac = self.mesh.jacobian();
        let mut total = 0.0;
        for e in 0..self.mesh.n_cells {
            let mut elem = 0.0;
            for i in 0..self.ops.n_nodes() {
                let u = Self::state_at(data, e, i);
                let wv = entropy_variables(&u, &self.eos)?;
                elem += self.ops.weights[i] * wv.dot(&Self::state_at(&res, e, i));
            }
            total += jac * elem;
        }
        Ok(-total)
    }

    pub fn l2_error(&self, data: &Array3<f64>, exact: impl Fn(f64) -> State1) -> [f64; N_FIELDS_1D] {
        let jac = self.mesh.jacobian();
        let mut acc = [0.0; N_FIELDS_1D];
        for e in 0..self.mesh.n_cells {
            for i in 0..self.ops.n_nodes() {
                let diff = Self::state_at(data, e, i) - exact(self.node_coord(e, i));
                let ww = jac * self.ops.weights[i];
                acc[0] += ww * diff.rho * diff.rho;
                acc[1] += ww * diff.mom[0] * diff.mom[0];
            }
        }
        acc.map(f64::sqrt)
    }

    pub fn max_wave_speed(&self, data: &Array3<f64>) -> Result<f64> {
        let mut lambda: f64 = 0.0;
        for e in 0..self.mesh.n_cells {
            for i in 0..self.ops.n_nodes() {
                let u = Self::state_at(data, e, i);
                lambda = lambda.max(equations::max_wave_speed(&u, &self.eos)?);
            }
        }
        Ok(lambda)
    }

    fn node_values(&self, data: &Array3<f64>) -> Result<Vec<NodeVals<1>>> {
        let nn = self.ops.n_nodes();
        let u = data.as_slice().expect("solution arrays must be in standard memory order");
        let mut vals = Vec::with_capacity(self.mesh.n_cells * nn);
        for e in 0..self.mesh.n_cells {
            let base = e * N_FIELDS_1D * nn;
            for i in 0..nn {
                let rho = u[base + i];
                if !rho.is_finite() || rho <= 0.0 {
                    return Err(Error::InadmissibleState { element: e, node: (i, 0), rho });
                }
                vals.push(NodeVals::from_admissible(rho, [u[base + nn + i]], &self.eos));
            }
        }
        Ok(vals)
    }

    /// `out = beta * out + alpha * Res(data)`.
    fn accumulate_spatial(
        &self,
        data: &Array3<f64>,
        alpha: f64,
        beta: f64,
        out: &mut Array3<f64>,
    ) -> Result<()> {
        assert_eq!(data.dim(), self.data_dim(), "state array has the wrong shape");
        assert_eq!(out.dim(), self.data_dim(), "output array has the wrong shape");
        let vals = self.node_values(data)?;
        if beta == 0.0 {
            out.fill(0.0);
        } else if beta != 1.0 {
            out.mapv_inplace(|x| beta * x);
        }
        let o = out.as_slice_mut().expect("solution arrays must be in standard memory order");
        match self.surface_flux {
            NumericalFlux::EntropyConservative => self.assemble(&vals, alpha, o, ec_flux_vals),
            NumericalFlux::EntropyStable => self.assemble(&vals, alpha, o, es_flux_vals),
        }
        Ok(())
    }

    fn assemble<SF>(&self, vals: &[NodeVals<1>], alpha: f64, out: &mut [f64], sf: SF)
    where
        SF: Fn(&NodeVals<1>, &NodeVals<1>, usize, &EquationOfState) -> State1 + Copy,
    {
        let nn = self.ops.n_nodes();
        let last = nn - 1;
        let eos = &self.eos;
        let d = &self.ops.deriv;

        for e in 0..self.mesh.n_cells {
            let vbase = e * nn;
            let obase = e * N_FIELDS_1D * nn;
            for i in 0..nn {
                let ni = &vals[vbase + i];
                let diag = ec_flux_vals(ni, ni, 0, eos);
                add_node(out, obase + i, nn, alpha * 2.0 * d[(i, i)], &diag);
                for m in (i + 1)..nn {
                    let f = ec_flux_vals(ni, &vals[vbase + m], 0, eos);
                    add_node(out, obase + i, nn, alpha * 2.0 * d[(i, m)], &f);
                    add_node(out, obase + m, nn, alpha * 2.0 * d[(m, i)], &f);
                }
            }
        }

        let inv_w_first = 1.0 / self.ops.weights[0];
        let inv_w_last = 1.0 / self.ops.weights[last];
        for e in 0..self.mesh.n_cells {
            let e_next = (e + 1) % self.mesh.n_cells;
            let nl = &vals[e * nn + last];
            let nr = &vals[e_next * nn];
            let fs = sf(nl, nr, 0, eos);
            let jump_l = fs - physical_flux_vals(nl, 0);
            let jump_r = fs - physical_flux_vals(nr, 0);
            add_node(out, e * N_FIELDS_1D * nn + last, nn, alpha * inv_w_last, &jump_l);
            add_node(out, e_next * N_FIELDS_1D * nn, nn, -alpha * inv_w_first, &jump_r);
        }
    }
}

#[inline]
fn add_node(out: &mut [f64], node: usize, stride: usize, c: f64, f: &State1) {
    out[node] += c * f.rho;
    out[node + stride] += c * f.mom[0];
}
