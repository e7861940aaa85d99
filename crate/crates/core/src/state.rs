//! Conserved states and entropy variables.
//!
//! A state in `D` spatial dimensions carries density and `D` momentum
//! components. Flux vectors have the same shape (one mass flux, `D` momentum
//! fluxes), so [`State`] doubles as the return type of flux kernels.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Conserved variables `(rho, rho v_1, ..., rho v_D)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State<const D: usize> {
    pub rho: f64,
    pub mom: [f64; D],
}

pub type State1 = State<1>;
pub type State2 = State<2>;
pub type State3 = State<3>;

impl<const D: usize> State<D> {
    pub const DIM: usize = D;

    pub fn new(rho: f64, mom: [f64; D]) -> Self {
        Self { rho, mom }
    }

    /// State at rest with the given density.
    pub fn quiescent(rho: f64) -> Self {
        Self { rho, mom: [0.0; D] }
    }

    pub fn velocity(&self) -> [f64; D] {
        self.mom.map(|m| m / self.rho)
    }

    /// Number of conserved components (`D + 1`).
    pub fn n_components(&self) -> usize {
        D + 1
    }

    pub fn component(&self, k: usize) -> f64 {
        if k == 0 {
            self.rho
        } else {
            self.mom[k - 1]
        }
    }

    pub fn component_mut(&mut self, k: usize) -> &mut f64 {
        if k == 0 {
            &mut self.rho
        } else {
            &mut self.mom[k - 1]
        }
    }

    pub fn to_vec(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(D + 1);
        v.push(self.rho);
        v.extend_from_slice(&self.mom);
        v
    }

    pub fn abs_max(&self) -> f64 {
        self.mom.iter().fold(self.rho.abs(), |m, x| m.max(x.abs()))
    }
}

impl<const D: usize> Add for State<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut mom = self.mom;
        for (m, r) in mom.iter_mut().zip(rhs.mom) {
            *m += r;
        }
        Self { rho: self.rho + rhs.rho, mom }
    }
}

impl<const D: usize> AddAssign for State<D> {
    fn add_assign(&mut self, rhs: Self) {
        self.rho += rhs.rho;
        for (m, r) in self.mom.iter_mut().zip(rhs.mom) {
            *m += r;
        }
    }
}

impl<const D: usize> Sub for State<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut mom = self.mom;
        for (m, r) in mom.iter_mut().zip(rhs.mom) {
            *m -= r;
        }
        Self { rho: self.rho - rhs.rho, mom }
    }
}

impl<const D: usize> Mul<f64> for State<D> {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self { rho: self.rho * s, mom: self.mom.map(|m| m * s) }
    }
}

impl<const D: usize> Neg for State<D> {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

/// Entropy variables `w = (e + p/rho - |v|^2/2, v_1, ..., v_D)`, the gradient
/// of the total-energy entropy with respect to the conserved variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyVector<const D: usize> {
    /// First entropy variable, conjugate to density.
    pub w_rho: f64,
    /// Remaining entropy variables; these equal the velocity components.
    pub w_mom: [f64; D],
}

impl<const D: usize> EntropyVector<D> {
    pub fn component(&self, k: usize) -> f64 {
        if k == 0 {
            self.w_rho
        } else {
            self.w_mom[k - 1]
        }
    }

    pub fn to_vec(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(D + 1);
        v.push(self.w_rho);
        v.extend_from_slice(&self.w_mom);
        v
    }

    /// Euclidean inner product with a state-shaped vector.
    pub fn dot(&self, u: &State<D>) -> f64 {
        let mut acc = self.w_rho * u.rho;
        for (w, m) in self.w_mom.iter().zip(u.mom) {
            acc += w * m;
        }
        acc
    }
}

impl<const D: usize> Sub for EntropyVector<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut w_mom = self.w_mom;
        for (w, r) in w_mom.iter_mut().zip(rhs.w_mom) {
            *w -= r;
        }
        Self { w_rho: self.w_rho - rhs.w_rho, w_mom }
    }
}
