//! Experiment driver behind the command line tool: run configuration with
//! file parsing and overrides, the manufactured and discontinuous test
//! fields, the time integration loop, and the convergence and
//! entropy-residual studies with console tables and CSV output.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use ndarray::Array4;

use crate::dg2d::{DgSystem2d, N_FIELDS_2D};
use crate::eos::EquationOfState;
use crate::error::{Error, Result};
use crate::flux::NumericalFlux;
use crate::mesh::Mesh2d;
use crate::state::{State, State2};
use crate::timeint::{lsrk54_step, timestep_from_wave_speed};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    Convergence,
    Entropy,
}

/// Scheme variant: the volume flux is always entropy conservative, the
/// surface flux selects between conservation and dissipation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FluxChoice {
    EcEc,
    EcEs,
}

impl FluxChoice {
    pub fn volume(self) -> NumericalFlux {
        NumericalFlux::EntropyConservative
    }

    pub fn surface(self) -> NumericalFlux {
        match self {
            FluxChoice::EcEc => NumericalFlux::EntropyConservative,
            FluxChoice::EcEs => NumericalFlux::EntropyStable,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub experiment: Experiment,
    pub eos: EquationOfState,
    pub degree: usize,
    /// Elements per side of the unit square, strictly increasing.
    pub mesh_sizes: Vec<usize>,
    pub flux: FluxChoice,
    pub cfl: f64,
    pub tfinal: f64,
    pub out: Option<PathBuf>,
}

/// Partially specified configuration, merged from a file and command line
/// overrides before validation.
#[derive(Debug, Clone, Default)]
pub struct ConfigBuilder {
    pub experiment: Option<Experiment>,
    pub eos_kind: Option<String>,
    pub gamma: Option<f64>,
    pub kappa: Option<f64>,
    pub c: Option<f64>,
    pub degree: Option<usize>,
    pub mesh_sizes: Option<Vec<usize>>,
    pub flux: Option<FluxChoice>,
    pub cfl: Option<f64>,
    pub tfinal: Option<f64>,
    pub out: Option<PathBuf>,
}

impl ConfigBuilder {
    /// Parses a flat key=value file, one key per line. Blank lines and lines
    /// starting with `#` are ignored; unknown or repeated keys are errors.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut builder = Self::default();
        let mut seen: Vec<String> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("{}:{}: expected key=value", path.display(), lineno + 1))
            })?;
            let key = key.trim();
            if seen.iter().any(|k| k == key) {
                return Err(Error::Config(format!(
                    "{}:{}: repeated key {key}",
                    path.display(),
                    lineno + 1
                )));
            }
            seen.push(key.to_string());
            builder.set(key, value.trim())?;
        }
        Ok(builder)
    }

    /// Sets one field from its textual form; keys mirror the config file.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "experiment" => {
                self.experiment = Some(match value {
                    "convergence" => Experiment::Convergence,
                    "entropy" => Experiment::Entropy,
                    other => {
                        return Err(Error::Config(format!(
                            "unknown experiment {other:?}; use convergence or entropy"
                        )))
                    }
                })
            }
            "eos" => match value {
                "isothermal" | "polytropic" => self.eos_kind = Some(value.to_string()),
                other => {
                    return Err(Error::Config(format!(
                        "unknown eos {other:?}; use isothermal or polytropic"
                    )))
                }
            },
            "gamma" => self.gamma = Some(parse_f64(key, value)?),
            "kappa" => self.kappa = Some(parse_f64(key, value)?),
            "c" => self.c = Some(parse_f64(key, value)?),
            "n" => {
                self.degree = Some(value.parse().map_err(|_| {
                    Error::Config(format!("invalid value {value:?} for key n"))
                })?)
            }
            "mesh" => {
                let sizes = value
                    .split(',')
                    .map(|tok| tok.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| {
                        Error::Config(format!("invalid mesh list {value:?}; expected e.g. 4,8,16"))
                    })?;
                self.mesh_sizes = Some(sizes);
            }
            "flux" => {
                self.flux = Some(match value {
                    "ec_ec" => FluxChoice::EcEc,
                    "ec_es" => FluxChoice::EcEs,
                    other => {
                        return Err(Error::Config(format!(
                            "unknown flux {other:?}; use ec_ec or ec_es"
                        )))
                    }
                })
            }
            "cfl" => self.cfl = Some(parse_f64(key, value)?),
            "tfinal" => self.tfinal = Some(parse_f64(key, value)?),
            "out" => self.out = Some(PathBuf::from(value)),
            other => return Err(Error::Config(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    /// Fills defaults and validates. The experiment defaults to convergence;
    /// unset final time and flux depend on it (T=1.0 with ec_es for
    /// convergence, T=0.5 with ec_ec for the entropy study).
    pub fn build(self) -> Result<RunConfig> {
        let experiment = self.experiment.unwrap_or(Experiment::Convergence);
        let eos = match self.eos_kind.as_deref().unwrap_or("isothermal") {
            "polytropic" => {
                EquationOfState::polytropic(self.kappa.unwrap_or(0.5), self.gamma.unwrap_or(1.4))?
            }
            _ => EquationOfState::isothermal(self.c.unwrap_or(1.0))?,
        };
        let mesh_sizes = self.mesh_sizes.unwrap_or_else(|| vec![4, 8, 16, 32]);
        if mesh_sizes.is_empty() {
            return Err(Error::Config("mesh list is empty".into()));
        }
        if !mesh_sizes.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::Config(format!(
                "mesh sizes must be strictly increasing, got {mesh_sizes:?}"
            )));
        }
        let flux = self.flux.unwrap_or(match experiment {
            Experiment::Convergence => FluxChoice::EcEs,
            Experiment::Entropy => FluxChoice::EcEc,
        });
        let tfinal = self.tfinal.unwrap_or(match experiment {
            Experiment::Convergence => 1.0,
            Experiment::Entropy => 0.5,
        });
        if !tfinal.is_finite() || tfinal < 0.0 {
            return Err(Error::Config(format!("final time must be nonnegative, got {tfinal}")));
        }
        let cfl = self.cfl.unwrap_or(1.0);
        if !cfl.is_finite() || cfl <= 0.0 {
            return Err(Error::Config(format!("cfl must be positive, got {cfl}")));
        }
        Ok(RunConfig {
            experiment,
            eos,
            degree: self.degree.unwrap_or(3),
            mesh_sizes,
            flux,
            cfl,
            tfinal,
            out: self.out,
        })
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("invalid value {value:?} for key {key}")))
}

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Manufactured solution `h = 8 + cos(2 pi x) sin(2 pi y) cos(2 pi t)` with
/// constant velocity (1/2, 3/2).
pub fn manufactured_state(x: f64, y: f64, t: f64) -> State2 {
    let h = 8.0 + (TWO_PI * x).cos() * (TWO_PI * y).sin() * (TWO_PI * t).cos();
    State { rho: h, mom: [0.5 * h, 1.5 * h] }
}

/// Source term that makes the manufactured solution exact: the residual of
/// substituting it into the equations, using the analytic partials of `h`
/// and the pressure derivative `b = dp/drho` evaluated at `h`.
pub fn manufactured_source(x: f64, y: f64, t: f64, eos: &EquationOfState) -> [f64; N_FIELDS_2D] {
    let (sx, cx) = (TWO_PI * x).sin_cos();
    let (sy, cy) = (TWO_PI * y).sin_cos();
    let (st, ct) = (TWO_PI * t).sin_cos();
    let h = 8.0 + cx * sy * ct;
    let h_x = -TWO_PI * sx * sy * ct;
    let h_y = TWO_PI * cx * cy * ct;
    let h_t = -TWO_PI * cx * sy * st;

    let b = match eos {
        EquationOfState::Polytropic { kappa, gamma } => kappa * gamma * h.powf(gamma - 1.0),
        EquationOfState::Isothermal { sound_speed } => sound_speed * sound_speed,
    };

    [
        h_t + 0.5 * h_x + 1.5 * h_y,
        0.5 * h_t + (0.25 + b) * h_x + 0.75 * h_y,
        1.5 * h_t + 0.75 * h_x + (2.25 + b) * h_y,
    ]
}

/// Discontinuous initial condition for the entropy-conservation study.
pub fn discontinuous_ic(x: f64, y: f64) -> State2 {
    if x <= y {
        State { rho: 1.2, mom: [0.1, 0.0] }
    } else {
        State { rho: 1.0, mom: [0.2, -0.4] }
    }
}

/// Advances `data` from t=0 to `tfinal`. Each step size comes from the
/// current global wave speed through the CFL condition; the last step is
/// truncated to land on `tfinal` exactly. The observer runs on the initial
/// state and after every accepted step.
pub fn integrate(
    system: &DgSystem2d,
    data: &mut Array4<f64>,
    tfinal: f64,
    cfl: f64,
    source: Option<&dyn Fn(f64, f64, f64) -> [f64; N_FIELDS_2D]>,
    mut observer: impl FnMut(&Array4<f64>, f64) -> Result<()>,
) -> Result<()> {
    let dx_min = system.mesh.dx().min(system.mesh.dy());
    let mut register = system.zeros();
    let mut t = 0.0;
    observer(data, t)?;
    while t < tfinal {
        let lambda = system.max_wave_speed(data)?;
        let mut dt = timestep_from_wave_speed(lambda, dx_min, system.ops.degree, cfl)?;
        let last = t + dt >= tfinal;
        if last {
            dt = tfinal - t;
        }
        lsrk54_step(data, &mut register, t, dt, |u, ts, out, beta| {
            system.accumulate_rhs(u, ts, source, out, beta)
        })?;
        t = if last { tfinal } else { t + dt };
        observer(data, t)?;
    }
    Ok(())
}

/// One line of a convergence study.
#[derive(Debug, Clone, Copy)]
pub struct EocRow {
    /// Elements per side.
    pub n_el: usize,
    /// L2 error of the density against the manufactured solution.
    pub error: f64,
    /// Observed order against the previous row; absent on the first row.
    pub eoc: Option<f64>,
}

/// One line of an entropy-residual study.
#[derive(Debug, Clone, Copy)]
pub struct EntropyRow {
    /// Elements per side.
    pub n_el: usize,
    /// Largest |IS_t| over the recorded steps.
    pub max_abs: f64,
    /// Largest signed IS_t, for dissipativity checks.
    pub max_signed: f64,
}

/// Manufactured-solution accuracy study over the configured mesh sweep.
/// Prints the table as rows complete and writes CSV when an output path is
/// configured.
pub fn run_convergence(cfg: &RunConfig) -> Result<Vec<EocRow>> {
    let mut rows: Vec<EocRow> = Vec::new();
    println!("{:>6}  {:>12}  {:>6}", "N_el", "L2(rho)", "EOC");
    for &n_el in &cfg.mesh_sizes {
        let system = DgSystem2d::new(
            Mesh2d::unit_square(n_el)?,
            cfg.degree,
            cfg.eos,
            cfg.flux.volume(),
            cfg.flux.surface(),
        )?;
        let mut data = system.project(|x, y| manufactured_state(x, y, 0.0));
        let eos = cfg.eos;
        let source = move |x: f64, y: f64, t: f64| manufactured_source(x, y, t, &eos);
        integrate(&system, &mut data, cfg.tfinal, cfg.cfl, Some(&source), |_, _| Ok(()))?;
        let tfinal = cfg.tfinal;
        let error = system.l2_error(&data, |x, y| manufactured_state(x, y, tfinal))[0];
        let eoc = rows.last().map(|prev| {
            (prev.error / error).log2() / (n_el as f64 / prev.n_el as f64).log2()
        });
        match eoc {
            Some(e) => println!("{n_el:>6}  {error:>12.4e}  {e:>6.2}"),
            None => println!("{n_el:>6}  {error:>12.4e}  {:>6}", "---"),
        }
        rows.push(EocRow { n_el, error, eoc });
    }
    if let Some(path) = &cfg.out {
        write_convergence_csv(path, &rows)?;
    }
    Ok(rows)
}

/// Entropy-residual study over the configured mesh sweep: evolve the
/// discontinuous initial condition and record the extreme values of IS_t
/// over all steps. Writes CSV when an output path is configured.
pub fn run_entropy(cfg: &RunConfig) -> Result<Vec<EntropyRow>> {
    let mut rows: Vec<EntropyRow> = Vec::new();
    println!("{:>6}  {:>12}", "N_el", "max|IS_t|");
    for &n_el in &cfg.mesh_sizes {
        let system = DgSystem2d::new(
            Mesh2d::unit_square(n_el)?,
            cfg.degree,
            cfg.eos,
            cfg.flux.volume(),
            cfg.flux.surface(),
        )?;
        let mut data = system.project(discontinuous_ic);
        let mut max_abs: f64 = 0.0;
        let mut max_signed = f64::NEG_INFINITY;
        integrate(&system, &mut data, cfg.tfinal, cfg.cfl, None, |state, _| {
            let rate = system.entropy_residual_rate(state)?;
            max_abs = max_abs.max(rate.abs());
            max_signed = max_signed.max(rate);
            Ok(())
        })?;
        println!("{n_el:>6}  {max_abs:>12.4e}");
        rows.push(EntropyRow { n_el, max_abs, max_signed });
    }
    if let Some(path) = &cfg.out {
        write_entropy_csv(path, &rows)?;
    }
    Ok(rows)
}

/// CSV with columns `n_el,error,eoc`; 16 significant digits, empty EOC on
/// the first row.
pub fn write_convergence_csv(path: &Path, rows: &[EocRow]) -> Result<()> {
    let mut text = String::from("n_el,error,eoc\n");
    for row in rows {
        match row.eoc {
            Some(e) => writeln!(text, "{},{:.15e},{:.15e}", row.n_el, row.error, e),
            None => writeln!(text, "{},{:.15e},", row.n_el, row.error),
        }
        .expect("writing to a string cannot fail");
    }
    fs::write(path, text)?;
    Ok(())
}

/// CSV with columns `n_el,max_abs_ISt`; 16 significant digits.
pub fn write_entropy_csv(path: &Path, rows: &[EntropyRow]) -> Result<()> {
    let mut text = String::from("n_el,max_abs_ISt\n");
    for row in rows {
        writeln!(text, "{},{:.15e}", row.n_el, row.max_abs)
            .expect("writing to a string cannot fail");
    }
    fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::physical_flux;

    const SOURCE_FD_TOL: f64 = 1e-6;

    fn write_temp_config(name: &str, contents: &str) -> PathBuf {
        let path = std::env::temp_dir().join(format!("polytrope-test-{}-{name}", std::process::id()));
        fs::write(&path, contents).unwrap();
        path
    }

    #[test]
    fn manufactured_state_known_values() {
        let u = manufactured_state(0.0, 0.0, 0.0);
        assert_eq!((u.rho, u.mom), (8.0, [4.0, 12.0]));
        let u = manufactured_state(0.0, 0.25, 0.0);
        assert_eq!((u.rho, u.mom), (9.0, [4.5, 13.5]));
    }

    #[test]
    fn manufactured_source_matches_a_finite_difference_residual() {
        let eps = 1e-5;
        for eos in [
            EquationOfState::isothermal(1.0).unwrap(),
            EquationOfState::polytropic(0.5, 1.4).unwrap(),
        ] {
            for (x, y, t) in [(0.13, 0.37, 0.29), (0.71, 0.02, 0.55), (0.5, 0.5, 0.0)] {
                let diff = |f: &dyn Fn(f64) -> f64, at: f64| (f(at + eps) - f(at - eps)) / (2.0 * eps);
                let got = manufactured_source(x, y, t, &eos);
                for var in 0..N_FIELDS_2D {
                    let u_t = diff(&|s| manufactured_state(x, y, s).component(var), t);
                    let f1_x = diff(
                        &|s| physical_flux(&manufactured_state(s, y, t), 0, &eos).unwrap().component(var),
                        x,
                    );
                    let f2_y = diff(
                        &|s| physical_flux(&manufactured_state(x, s, t), 1, &eos).unwrap().component(var),
                        y,
                    );
                    let expected = u_t + f1_x + f2_y;
                    assert!(
                        (got[var] - expected).abs() <= SOURCE_FD_TOL * (1.0 + expected.abs()),
                        "field {var}: analytic {} vs finite difference {expected}",
                        got[var]
                    );
                }
            }
        }
    }

    #[test]
    fn discontinuous_ic_branches_on_the_diagonal() {
        let u = discontinuous_ic(0.2, 0.5);
        assert_eq!((u.rho, u.mom), (1.2, [0.1, 0.0]));
        let u = discontinuous_ic(0.5, 0.2);
        assert_eq!((u.rho, u.mom), (1.0, [0.2, -0.4]));
        let u = discontinuous_ic(0.3, 0.3);
        assert_eq!((u.rho, u.mom), (1.2, [0.1, 0.0]));
    }

    #[test]
    fn config_file_round_trip_with_all_keys() {
        let path = write_temp_config(
            "full.cfg",
            "# comment line\n\
             experiment=entropy\n\
             eos=polytropic\n\
             gamma=1.4\n\
             kappa=0.5\n\
             n=4\n\
             mesh=2, 4, 8\n\
             flux=ec_es\n\
             cfl=0.75\n\
             tfinal=0.25\n\
             out=/tmp/entropy.csv\n",
        );
        let cfg = ConfigBuilder::from_file(&path).unwrap().build().unwrap();
        fs::remove_file(&path).unwrap();
        assert_eq!(cfg.experiment, Experiment::Entropy);
        assert!(matches!(cfg.eos, EquationOfState::Polytropic { .. }));
        assert_eq!(cfg.degree, 4);
        assert_eq!(cfg.mesh_sizes, vec![2, 4, 8]);
        assert_eq!(cfg.flux, FluxChoice::EcEs);
        assert_eq!(cfg.cfl, 0.75);
        assert_eq!(cfg.tfinal, 0.25);
        assert_eq!(cfg.out, Some(PathBuf::from("/tmp/entropy.csv")));
    }

    #[test]
    fn config_rejects_unknown_repeated_and_malformed_keys() {
        let path = write_temp_config("bad-key.cfg", "speed=3\n");
        assert!(matches!(ConfigBuilder::from_file(&path), Err(Error::Config(_))));
        fs::remove_file(&path).unwrap();

        let path = write_temp_config("repeat.cfg", "cfl=1\ncfl=2\n");
        assert!(matches!(ConfigBuilder::from_file(&path), Err(Error::Config(_))));
        fs::remove_file(&path).unwrap();

        let path = write_temp_config("noeq.cfg", "cfl 1\n");
        assert!(matches!(ConfigBuilder::from_file(&path), Err(Error::Config(_))));
        fs::remove_file(&path).unwrap();
    }

    #[test]
    fn experiment_dependent_defaults() {
        let cfg = ConfigBuilder::default().build().unwrap();
        assert_eq!(cfg.experiment, Experiment::Convergence);
        assert_eq!((cfg.tfinal, cfg.flux), (1.0, FluxChoice::EcEs));
        assert_eq!(cfg.degree, 3);
        assert_eq!(cfg.mesh_sizes, vec![4, 8, 16, 32]);
        assert!(matches!(cfg.eos, EquationOfState::Isothermal { sound_speed } if sound_speed == 1.0));

        let mut builder = ConfigBuilder::default();
        builder.set("experiment", "entropy").unwrap();
        let cfg = builder.build().unwrap();
        assert_eq!((cfg.tfinal, cfg.flux), (0.5, FluxChoice::EcEc));
    }

    #[test]
    fn config_validation_catches_bad_values() {
        let mut builder = ConfigBuilder::default();
        builder.set("mesh", "8,4").unwrap();
        assert!(matches!(builder.build(), Err(Error::Config(_))));

        let mut builder = ConfigBuilder::default();
        builder.set("cfl", "0").unwrap();
        assert!(matches!(builder.build(), Err(Error::Config(_))));

        let mut builder = ConfigBuilder::default();
        builder.set("tfinal", "-1").unwrap();
        assert!(matches!(builder.build(), Err(Error::Config(_))));

        let mut builder = ConfigBuilder::default();
        assert!(builder.set("flux", "upwind").is_err());
        assert!(builder.set("mesh", "4,eight").is_err());
        assert!(builder.set("experiment", "spectra").is_err());
        assert!(builder.set("eos", "stiffened").is_err());
    }

    #[test]
    fn integration_lands_exactly_on_the_final_time() {
        let eos = EquationOfState::isothermal(1.0).unwrap();
        let system = DgSystem2d::new(
            Mesh2d::unit_square(2).unwrap(),
            3,
            eos,
            NumericalFlux::EntropyConservative,
            NumericalFlux::EntropyStable,
        )
        .unwrap();
        let mut data = system.project(|x, y| manufactured_state(x, y, 0.0));
        let tfinal = 0.0371;
        let mut times = Vec::new();
        integrate(&system, &mut data, tfinal, 1.0, None, |_, t| {
            times.push(t);
            Ok(())
        })
        .unwrap();
        assert_eq!(times[0], 0.0);
        assert!(times.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(*times.last().unwrap(), tfinal);
        // All interior steps obey the CFL bound with the truncated last step.
        assert!(times.len() >= 3);
    }

    #[test]
    fn zero_final_time_only_observes_the_initial_state() {
        let eos = EquationOfState::isothermal(1.0).unwrap();
        let system = DgSystem2d::new(
            Mesh2d::unit_square(2).unwrap(),
            2,
            eos,
            NumericalFlux::EntropyConservative,
            NumericalFlux::EntropyConservative,
        )
        .unwrap();
        let mut data = system.project(discontinuous_ic);
        let before = data.clone();
        let mut calls = 0;
        integrate(&system, &mut data, 0.0, 1.0, None, |_, _| {
            calls += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(calls, 1);
        assert_eq!(data, before);
    }

    #[test]
    fn convergence_rows_shrink_under_refinement() {
        let mut builder = ConfigBuilder::default();
        builder.set("mesh", "2,4").unwrap();
        builder.set("n", "2").unwrap();
        builder.set("tfinal", "0.05").unwrap();
        let cfg = builder.build().unwrap();
        let rows = run_convergence(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].eoc.is_none() && rows[1].eoc.is_some());
        assert!(rows[1].error < rows[0].error);
        assert_eq!((rows[0].n_el, rows[1].n_el), (2, 4));
    }

    #[test]
    fn entropy_rows_are_machine_small_for_conservative_fluxes() {
        let mut builder = ConfigBuilder::default();
        builder.set("experiment", "entropy").unwrap();
        builder.set("mesh", "2").unwrap();
        builder.set("tfinal", "0.05").unwrap();
        let cfg = builder.build().unwrap();
        let rows = run_entropy(&cfg).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].max_abs <= 1e-13, "max |IS_t| = {:e}", rows[0].max_abs);
    }

    #[test]
    fn entropy_rows_stay_nonpositive_for_stable_fluxes() {
        let mut builder = ConfigBuilder::default();
        builder.set("experiment", "entropy").unwrap();
        builder.set("flux", "ec_es").unwrap();
        builder.set("mesh", "2").unwrap();
        builder.set("tfinal", "0.05").unwrap();
        let cfg = builder.build().unwrap();
        let rows = run_entropy(&cfg).unwrap();
        assert!(rows[0].max_signed <= 1e-14, "max IS_t = {:e}", rows[0].max_signed);
        assert!(rows[0].max_abs > 1e-8, "dissipation should be visible");
    }

    #[test]
    fn csv_files_have_the_documented_shape() {
        let rows = vec![
            EocRow { n_el: 4, error: 9.8e-2, eoc: None },
            EocRow { n_el: 8, error: 1.7e-3, eoc: Some(5.8491) },
        ];
        let path = std::env::temp_dir()
            .join(format!("polytrope-test-{}-conv.csv", std::process::id()));
        write_convergence_csv(&path, &rows).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        fs::remove_file(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n_el,error,eoc");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("4,") && lines[1].ends_with(','));
        let fields: Vec<&str> = lines[2].split(',').collect();
        assert_eq!(fields[0], "8");
        assert!((fields[1].parse::<f64>().unwrap() - 1.7e-3).abs() <= 1e-18);
        assert!((fields[2].parse::<f64>().unwrap() - 5.8491).abs() <= 1e-15);

        let rows = vec![EntropyRow { n_el: 2, max_abs: 8.3e-16, max_signed: -8.3e-16 }];
        let path = std::env::temp_dir()
            .join(format!("polytrope-test-{}-ent.csv", std::process::id()));
        write_entropy_csv(&path, &rows).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        fs::remove_file(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n_el,max_abs_ISt");
        assert!((lines[1].split(',').nth(1).unwrap().parse::<f64>().unwrap() - 8.3e-16).abs() <= 1e-30);
    }
}
