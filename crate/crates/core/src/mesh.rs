//! Periodic Cartesian meshes.

use crate::error::{Error, Result};

/// Uniform periodic interval mesh.
#[derive(Debug, Clone, Copy)]
pub struct Mesh1d {
    pub n_cells: usize,
    pub x_min: f64,
    pub x_max: f64,
}

impl Mesh1d {
    pub fn new(n_cells: usize, x_min: f64, x_max: f64) -> Result<Self> {
        if n_cells == 0 || !(x_max > x_min) {
            return Err(Error::Config(format!(
                "invalid 1d mesh: {n_cells} cells on [{x_min}, {x_max}]"
            )));
        }
        Ok(Self { n_cells, x_min, x_max })
    }

    pub fn unit_interval(n_cells: usize) -> Result<Self> {
        Self::new(n_cells, 0.0, 1.0)
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n_cells as f64
    }

    /// Mapping Jacobian from the reference element [-1, 1].
    pub fn jacobian(&self) -> f64 {
        0.5 * self.dx()
    }
}

/// Uniform periodic rectangle mesh with `nx * ny` quadrilateral elements.
#[derive(Debug, Clone, Copy)]
pub struct Mesh2d {
    pub nx: usize,
    pub ny: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Mesh2d {
    pub fn new(
        nx: usize,
        ny: usize,
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
    ) -> Result<Self> {
        if nx == 0 || ny == 0 || !(x_max > x_min) || !(y_max > y_min) {
            return Err(Error::Config(format!(
                "invalid 2d mesh: {nx} x {ny} elements on [{x_min}, {x_max}] x [{y_min}, {y_max}]"
            )));
        }
        Ok(Self { nx, ny, x_min, x_max, y_min, y_max })
    }

    pub fn unit_square(n_per_side: usize) -> Result<Self> {
        Self::new(n_per_side, n_per_side, 0.0, 1.0, 0.0, 1.0)
    }

    pub fn n_elements(&self) -> usize {
        self.nx * self.ny
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        (self.y_max - self.y_min) / self.ny as f64
    }

    /// Mapping Jacobian from the reference square [-1, 1]^2.
    pub fn jacobian(&self) -> f64 {
        0.25 * self.dx() * self.dy()
    }

    /// Linear element index from per-direction indices.
    pub fn element_index(&self, ex: usize, ey: usize) -> usize {
        ey * self.nx + ex
    }

    /// Per-direction indices from the linear element index.
    pub fn element_coords(&self, e: usize) -> (usize, usize) {
        (e % self.nx, e / self.nx)
    }
}
