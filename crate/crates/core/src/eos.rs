//! Barotropic equations of state.
//!
//! Pressure depends on density alone: the polytropic law `p = kappa rho^gamma`
//! with `gamma > 1`, and its isothermal limit `p = c^2 rho` (`gamma = 1`).
//! The specific internal energy is tied to the pressure law through
//! `rho de/drho = p / rho`, which fixes
//! `e = kappa rho^(gamma - 1) / (gamma - 1)` for the polytropic gas and
//! `e = c^2 ln(rho)` for the isothermal one.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EquationOfState {
    /// `p = kappa rho^gamma`, `gamma > 1`, `kappa > 0`.
    Polytropic { kappa: f64, gamma: f64 },
    /// `p = c^2 rho` with constant sound speed `c > 0`.
    Isothermal { sound_speed: f64 },
}

impl EquationOfState {
    pub fn polytropic(kappa: f64, gamma: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return Err(Error::InvalidEos(format!("kappa must be positive, got {kappa}")));
        }
        if !(gamma > 1.0 && gamma.is_finite()) {
            return Err(Error::InvalidEos(format!(
                "polytropic exponent must exceed 1, got {gamma} (use isothermal for gamma = 1)"
            )));
        }
        Ok(Self::Polytropic { kappa, gamma })
    }

    pub fn isothermal(sound_speed: f64) -> Result<Self> {
        if !(sound_speed > 0.0 && sound_speed.is_finite()) {
            return Err(Error::InvalidEos(format!(
                "isothermal sound speed must be positive, got {sound_speed}"
            )));
        }
        Ok(Self::Isothermal { sound_speed })
    }

    /// Polytropic exponent; exactly 1 for the isothermal law.
    pub fn gamma(&self) -> f64 {
        match self {
            Self::Polytropic { gamma, .. } => *gamma,
            Self::Isothermal { .. } => 1.0,
        }
    }

    /// Coefficient of `rho^gamma` in the pressure law (`c^2` when isothermal).
    pub fn kappa(&self) -> f64 {
        match self {
            Self::Polytropic { kappa, .. } => *kappa,
            Self::Isothermal { sound_speed } => sound_speed * sound_speed,
        }
    }

    pub fn pressure(&self, rho: f64) -> Result<f64> {
        self.check_density(rho, "pressure")?;
        Ok(match self {
            Self::Polytropic { kappa, gamma } => kappa * rho.powf(*gamma),
            Self::Isothermal { sound_speed } => sound_speed * sound_speed * rho,
        })
    }

    /// Specific internal energy `e(rho)`.
    pub fn internal_energy(&self, rho: f64) -> Result<f64> {
        self.check_density(rho, "internal_energy")?;
        Ok(match self {
            Self::Polytropic { kappa, gamma } => kappa * rho.powf(gamma - 1.0) / (gamma - 1.0),
            Self::Isothermal { sound_speed } => sound_speed * sound_speed * rho.ln(),
        })
    }

    /// Squared sound speed `a^2 = dp/drho = gamma p / rho`.
    pub fn sound_speed_sq(&self, rho: f64) -> Result<f64> {
        self.check_density(rho, "sound_speed_sq")?;
        Ok(match self {
            Self::Polytropic { kappa, gamma } => gamma * kappa * rho.powf(gamma - 1.0),
            Self::Isothermal { sound_speed } => sound_speed * sound_speed,
        })
    }

    fn check_density(&self, rho: f64, context: &'static str) -> Result<()> {
        if rho > 0.0 && rho.is_finite() {
            Ok(())
        } else {
            Err(Error::NonpositiveDensity { value: rho, context })
        }
    }
}
