//! Split-form discontinuous Galerkin spectral element discretization of the
//! polytropic Euler equations on a periodic Cartesian 2d mesh.
//!
//! Volume terms couple every pair of nodes along each coordinate line through
//! a symmetric two-point flux; surface terms penalize the interface flux
//! against the boundary-node physical flux. With the entropy-conservative
//! flux on both volume and surface the semidiscrete entropy residual vanishes
//! to rounding; switching the surface flux to the dissipative variant makes
//! it nonpositive.

use ndarray::Array4;

use crate::eos::EquationOfState;
use crate::equations::{self, entropy, entropy_variables};
use crate::error::{Error, Result};
use crate::flux::{ec_flux_vals, es_flux_vals, physical_flux_vals, NodeVals, NumericalFlux};
use crate::mesh::Mesh2d;
use crate::sbp::{lgl_operator_set, SbpOperatorSet};
use crate::state::{State, State2};

/// Conserved fields per node: density and two momentum components.
pub const N_FIELDS_2D: usize = 3;

/// Discretization operators and physics for one 2d run. Solution data lives
/// in a separate `Array4<f64>` of shape `(n_elements, 3, n_nodes, n_nodes)`
/// indexed `[element, field, x node, y node]`, so the system can be borrowed
/// immutably while a time integrator mutates the state.
pub struct DgSystem2d {
    pub mesh: Mesh2d,
    pub ops: SbpOperatorSet,
    pub eos: EquationOfState,
    pub volume_flux: NumericalFlux,
    pub surface_flux: NumericalFlux,
}

impl DgSystem2d {
    pub fn new(
        mesh: Mesh2d,
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

    /// Shape of a compatible solution array.
    pub fn data_dim(&self) -> (usize, usize, usize, usize) {
        let nn = self.ops.n_nodes();
        (self.mesh.n_elements(), N_FIELDS_2D, nn, nn)
    }

    /// Zero-initialized solution array of the right shape.
    pub fn zeros(&self) -> Array4<f64> {
        Array4::zeros(self.data_dim())
    }

    /// Physical coordinates of quadrature node `(i, j)` of element `e`.
    pub fn node_coords(&self, e: usize, i: usize, j: usize) -> (f64, f64) {
        let (ex, ey) = self.mesh.element_coords(e);
        let x = self.mesh.x_min + (ex as f64 + 0.5 * (self.ops.nodes[i] + 1.0)) * self.mesh.dx();
        let y = self.mesh.y_min + (ey as f64 + 0.5 * (self.ops.nodes[j] + 1.0)) * self.mesh.dy();
        (x, y)
    }

    /// Nodal interpolant of a state field.
    pub fn project(&self, f: impl Fn(f64, f64) -> State2) -> Array4<f64> {
        let mut data = self.zeros();
        let nn = self.ops.n_nodes();
        for e in 0..self.mesh.n_elements() {
            for i in 0..nn {
                for j in 0..nn {
                    let (x, y) = self.node_coords(e, i, j);
                    let u = f(x, y);
                    data[[e, 0, i, j]] = u.rho;
                    data[[e, 1, i, j]] = u.mom[0];
                    data[[e, 2, i, j]] = u.mom[1];
                }
            }
        }
        data
    }

    /// Conserved state stored at one node.
    pub fn state_at(data: &Array4<f64>, e: usize, i: usize, j: usize) -> State2 {
        State { rho: data[[e, 0, i, j]], mom: [data[[e, 1, i, j]], data[[e, 2, i, j]]] }
    }

    /// Spatial residual `Res` in the convention `J u_t + Res = 0`.
    pub fn residual(&self, data: &Array4<f64>) -> Result<Array4<f64>> {
        let mut out = self.zeros();
        self.accumulate_spatial(data, 1.0, 1.0, &mut out)?;
        Ok(out)
    }

    /// Time derivative accumulation for low-storage integrators:
    /// `out = beta * out + (-Res / J + source)` evaluated at time `t`.
    pub fn accumulate_rhs(
        &self,
        data: &Array4<f64>,
        t: f64,
        source: Option<&dyn Fn(f64, f64, f64) -> [f64; N_FIELDS_2D]>,
        out: &mut Array4<f64>,
        beta: f64,
    ) -> Result<()> {
        let inv_jac = 1.0 / self.mesh.jacobian();
        self.accumulate_spatial(data, -inv_jac, beta, out)?;
        if let Some(src) = source {
            let nn = self.ops.n_nodes();
            let o = standard_slice_mut(out);
            let stride = nn * nn;
            for e in 0..self.mesh.n_elements() {
                let base = e * N_FIELDS_2D * stride;
                for i in 0..nn {
                    for j in 0..nn {
                        let (x, y) = self.node_coords(e, i, j);
                        let r = src(x, y, t);
                        let node = base + i * nn + j;
                        o[node] += r[0];
                        o[node + stride] += r[1];
                        o[node + 2 * stride] += r[2];
                    }
                }
            }
        }
        Ok(())
    }

    /// Quadrature approximation of the total entropy.
    pub fn total_entropy(&self, data: &Array4<f64>) -> Result<f64> {
        let nn = self.ops.n_nodes();
        let w = &self.ops.weights;
        let jac = self.mesh.jacobian();
        let mut total = 0.0;
        for e in 0..self.mesh.n_elements() {
            let mut elem = 0.0;
            for i in 0..nn {
                for j in 0..nn {
                    let u = Self::state_at(data, e, i, j);
                    elem += w[i] * w[j] * entropy(&u, &self.eos)?;
                }
            }
            total += jac * elem;
        }
        Ok(total)
    }

    /// Semidiscrete entropy residual rate: the entropy-variable contraction
    /// of the spatial residual, summed with quadrature weights and the
    /// element Jacobian. Zero to rounding when the surface flux is
    /// entropy conservative, nonpositive when it is entropy stable.
    pub fn entropy_residual_rate(&self, data: &Array4<f64>) -> Result<f64> {
        let res = self.residual(data)?;
        let nn = self.ops.n_nodes();
        let w = &self.ops.weights;
        let jac = self.mesh.jacobian();
        let mut total = 0.0;
        for e in 0..self.mesh.n_elements() {
            let mut elem = 0.0;
            for i in 0..nn {
                for j in 0..nn {
                    let u = Self::state_at(data, e, i, j);
                    let wv = entropy_variables(&u, &self.eos)?;
                    let r = Self::state_at(&res, e, i, j);
                    elem += w[i] * w[j] * wv.dot(&r);
                }
            }
            total += jac * elem;
        }
        Ok(-total)
    }

    /// Discrete L2 error of each conserved field against a reference field.
    pub fn l2_error(&self, data: &Array4<f64>, exact: impl Fn(f64, f64) -> State2) -> [f64; N_FIELDS_2D] {
        let nn = self.ops.n_nodes();
        let w = &self.ops.weights;
        let jac = self.mesh.jacobian();
        let mut acc = [0.0; N_FIELDS_2D];
        for e in 0..self.mesh.n_elements() {
            for i in 0..nn {
                for j in 0..nn {
                    let (x, y) = self.node_coords(e, i, j);
                    let u = Self::state_at(data, e, i, j);
                    let diff = u - exact(x, y);
                    let ww = jac * w[i] * w[j];
                    acc[0] += ww * diff.rho * diff.rho;
                    acc[1] += ww * diff.mom[0] * diff.mom[0];
                    acc[2] += ww * diff.mom[1] * diff.mom[1];
                }
            }
        }
        acc.map(f64::sqrt)
    }

    /// Largest nodal wave speed, for CFL-based step selection.
    pub fn max_wave_speed(&self, data: &Array4<f64>) -> Result<f64> {
        let nn = self.ops.n_nodes();
        let mut lambda: f64 = 0.0;
        for e in 0..self.mesh.n_elements() {
            for i in 0..nn {
                for j in 0..nn {
                    let u = Self::state_at(data, e, i, j);
                    lambda = lambda.max(equations::max_wave_speed(&u, &self.eos)?);
                }
            }
        }
        Ok(lambda)
    }

    /// Cached thermodynamic values per node, with the admissibility scan.
    fn node_values(&self, data: &Array4<f64>) -> Result<Vec<NodeVals<2>>> {
        let nn = self.ops.n_nodes();
        let stride = nn * nn;
        let u = standard_slice(data);
        let mut vals = Vec::with_capacity(self.mesh.n_elements() * stride);
        for e in 0..self.mesh.n_elements() {
            let base = e * N_FIELDS_2D * stride;
            for i in 0..nn {
                for j in 0..nn {
                    let node = base + i * nn + j;
                    let rho = u[node];
                    if !rho.is_finite() || rho <= 0.0 {
                        return Err(Error::InadmissibleState { element: e, node: (i, j), rho });
                    }
                    let mom = [u[node + stride], u[node + 2 * stride]];
                    vals.push(NodeVals::from_admissible(rho, mom, &self.eos));
                }
            }
        }
        Ok(vals)
    }

    /// `out = beta * out + alpha * Res(data)`.
    fn accumulate_spatial(
        &self,
        data: &Array4<f64>,
        alpha: f64,
        beta: f64,
        out: &mut Array4<f64>,
    ) -> Result<()> {
        assert_eq!(data.dim(), self.data_dim(), "state array has the wrong shape");
        assert_eq!(out.dim(), self.data_dim(), "output array has the wrong shape");
        let vals = self.node_values(data)?;
        if beta == 0.0 {
            out.fill(0.0);
        } else if beta != 1.0 {
            out.mapv_inplace(|x| beta * x);
        }
        let o = standard_slice_mut(out);
        match self.surface_flux {
            NumericalFlux::EntropyConservative => self.assemble(&vals, alpha, o, ec_flux_vals),
            NumericalFlux::EntropyStable => self.assemble(&vals, alpha, o, es_flux_vals),
        }
        Ok(())
    }

    /// Adds `alpha * Res` to `out`, with the entropy-conservative volume flux
    /// and the surface flux `sf`. The volume loops visit each unordered node
    /// pair once: the two-point flux is symmetric, so one evaluation serves
    /// both derivative-matrix entries.
    fn assemble<SF>(&self, vals: &[NodeVals<2>], alpha: f64, out: &mut [f64], sf: SF)
    where
        SF: Fn(&NodeVals<2>, &NodeVals<2>, usize, &EquationOfState) -> State2 + Copy,
    {
        let nn = self.ops.n_nodes();
        let last = nn - 1;
        let stride = nn * nn;
        let eos = &self.eos;
        let d = &self.ops.deriv;
        // Reference-to-physical flux scalings for x and y fluxes.
        let mx = 0.5 * self.mesh.dy();
        let my = 0.5 * self.mesh.dx();

        for e in 0..self.mesh.n_elements() {
            let vbase = e * stride;
            let obase = e * N_FIELDS_2D * stride;
            // x-direction volume terms along each line of constant j.
            for j in 0..nn {
                for i in 0..nn {
                    let ni = &vals[vbase + i * nn + j];
                    let diag = ec_flux_vals(ni, ni, 0, eos);
                    add_node(out, obase + i * nn + j, stride, alpha * 2.0 * d[(i, i)] * mx, &diag);
                    for m in (i + 1)..nn {
                        let nm = &vals[vbase + m * nn + j];
                        let f = ec_flux_vals(ni, nm, 0, eos);
                        add_node(out, obase + i * nn + j, stride, alpha * 2.0 * d[(i, m)] * mx, &f);
                        add_node(out, obase + m * nn + j, stride, alpha * 2.0 * d[(m, i)] * mx, &f);
                    }
                }
            }
            // y-direction volume terms along each line of constant i.
            for i in 0..nn {
                for j in 0..nn {
                    let nj = &vals[vbase + i * nn + j];
                    let diag = ec_flux_vals(nj, nj, 1, eos);
                    add_node(out, obase + i * nn + j, stride, alpha * 2.0 * d[(j, j)] * my, &diag);
                    for m in (j + 1)..nn {
                        let nm = &vals[vbase + i * nn + m];
                        let f = ec_flux_vals(nj, nm, 1, eos);
                        add_node(out, obase + i * nn + j, stride, alpha * 2.0 * d[(j, m)] * my, &f);
                        add_node(out, obase + i * nn + m, stride, alpha * 2.0 * d[(m, j)] * my, &f);
                    }
                }
            }
        }

        // Periodic interface terms. Each interface is visited once and
        // contributes to the boundary nodes of both adjacent elements.
        let inv_w_first = 1.0 / self.ops.weights[0];
        let inv_w_last = 1.0 / self.ops.weights[last];
        for ey in 0..self.mesh.ny {
            for ex in 0..self.mesh.nx {
                let e = self.mesh.element_index(ex, ey);
                let ex_next = self.mesh.element_index((ex + 1) % self.mesh.nx, ey);
                for j in 0..nn {
                    let nl = &vals[e * stride + last * nn + j];
                    let nr = &vals[ex_next * stride + j];
                    let fs = sf(nl, nr, 0, eos);
                    let jump_l = fs - physical_flux_vals(nl, 0);
                    let jump_r = fs - physical_flux_vals(nr, 0);
                    add_node(out, e * N_FIELDS_2D * stride + last * nn + j, stride, alpha * mx * inv_w_last, &jump_l);
                    add_node(out, ex_next * N_FIELDS_2D * stride + j, stride, -alpha * mx * inv_w_first, &jump_r);
                }
                let ey_next = self.mesh.element_index(ex, (ey + 1) % self.mesh.ny);
                for i in 0..nn {
                    let nl = &vals[e * stride + i * nn + last];
                    let nr = &vals[ey_next * stride + i * nn];
                    let fs = sf(nl, nr, 1, eos);
                    let jump_l = fs - physical_flux_vals(nl, 1);
                    let jump_r = fs - physical_flux_vals(nr, 1);
                    add_node(out, e * N_FIELDS_2D * stride + i * nn + last, stride, alpha * my * inv_w_last, &jump_l);
                    add_node(out, ey_next * N_FIELDS_2D * stride + i * nn, stride, -alpha * my * inv_w_first, &jump_r);
                }
            }
        }
    }
}

#[inline]
fn add_node(out: &mut [f64], node: usize, stride: usize, c: f64, f: &State2) {
    out[node] += c * f.rho;
    out[node + stride] += c * f.mom[0];
    out[node + 2 * stride] += c * f.mom[1];
}

fn standard_slice(a: &Array4<f64>) -> &[f64] {
    a.as_slice().expect("solution arrays must be in standard memory order")
}

fn standard_slice_mut(a: &mut Array4<f64>) -> &mut [f64] {
    a.as_slice_mut().expect("solution arrays must be in standard memory order")
}
