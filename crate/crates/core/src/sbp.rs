//! Legendre-Gauss-Lobatto collocation operators on [-1, 1].
//!
//! Nodes are the roots of `(1 - x^2) P_N'(x)`, weights are
//! `2 / (N (N+1) P_N(x_i)^2)`, and the nodal derivative matrix is built from
//! barycentric weights. With `M = diag(w)` and `B = diag(-1, 0, ..., 0, 1)`
//! the operators satisfy the summation-by-parts property
//! `M D + (M D)^T = B`, which is what the split-form scheme's entropy
//! argument rests on.

use ndarray::Array2;

use crate::error::{Error, Result};

pub const MIN_DEGREE: usize = 1;
pub const MAX_DEGREE: usize = 15;

/// Nodes, quadrature weights, and derivative matrix for one degree.
#[derive(Debug, Clone)]
pub struct SbpOperatorSet {
    pub degree: usize,
    /// `degree + 1` nodes in ascending order; endpoints are exactly -1 and 1.
    pub nodes: Vec<f64>,
    /// Quadrature weights, exact for polynomials of degree `2 degree - 1`.
    pub weights: Vec<f64>,
    /// Nodal polynomial derivative matrix.
    pub deriv: Array2<f64>,
}

impl SbpOperatorSet {
    pub fn n_nodes(&self) -> usize {
        self.degree + 1
    }
}

/// Legendre polynomial value and first derivative via the three-term
/// recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    // (1 - x^2) P_n' = n (P_{n-1} - x P_n)
    let dp = if x.abs() < 1.0 {
        n as f64 * (p_prev - x * p) / (1.0 - x * x)
    } else {
        // At the endpoints P_n' = (+-1)^(n+1) n (n+1) / 2.
        let sign = if x > 0.0 { 1.0 } else { (-1.0f64).powi(n as i32 + 1) };
        sign * n as f64 * (n as f64 + 1.0) / 2.0
    };
    (p, dp)
}

/// Interior LGL nodes are the roots of P_N'; locate them by Newton iteration
/// from Chebyshev-Lobatto starting guesses, using
/// P_N'' = (2 x P_N' - N (N+1) P_N) / (1 - x^2).
fn lgl_nodes(n: usize) -> Vec<f64> {
    let m = n + 1;
    let mut nodes = vec![0.0; m];
    nodes[0] = -1.0;
    nodes[n] = 1.0;
    for i in 1..n {
        let mut x = -(std::f64::consts::PI * i as f64 / n as f64).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let ddp = (2.0 * x * dp - (n * (n + 1)) as f64 * p) / (1.0 - x * x);
            let step = dp / ddp;
            x -= step;
            if step.abs() <= 1e-15 {
                break;
            }
        }
        nodes[i] = x;
    }
    // Enforce exact symmetry about the origin.
    for i in 0..m / 2 {
        let s = 0.5 * (nodes[i] - nodes[n - i]);
        nodes[i] = s;
        nodes[n - i] = -s;
    }
    if m % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    nodes
}

/// Operator set for polynomial degree `n` (`n + 1` nodes).
pub fn lgl_operator_set(n: usize) -> Result<SbpOperatorSet> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange { degree: n, min: MIN_DEGREE, max: MAX_DEGREE });
    }
    let nodes = lgl_nodes(n);
    let m = n + 1;

    let scale = (n * (n + 1)) as f64;
    let weights: Vec<f64> = nodes
        .iter()
        .map(|&x| {
            let (p, _) = legendre(n, x);
            2.0 / (scale * p * p)
        })
        .collect();

    // Barycentric weights, normalized for scale only (ratios enter D).
    let mut bary = vec![1.0; m];
    for i in 0..m {
        for j in 0..m {
            if i != j {
                bary[i] *= nodes[i] - nodes[j];
            }
        }
        bary[i] = 1.0 / bary[i];
    }

    let mut deriv = Array2::zeros((m, m));
    for i in 0..m {
        let mut row_sum = 0.0;
        for j in 0..m {
            if i != j {
                let d = (bary[j] / bary[i]) / (nodes[i] - nodes[j]);
                deriv[(i, j)] = d;
                row_sum += d;
            }
        }
        // Negative-sum trick: rows of D annihilate constants exactly.
        deriv[(i, i)] = -row_sum;
    }

    Ok(SbpOperatorSet { degree: n, nodes, weights, deriv })
}

/// Maximum entry of `M D + (M D)^T - B`; zero for an exact SBP pair.
pub fn sbp_defect(ops: &SbpOperatorSet) -> f64 {
    let m = ops.n_nodes();
    let mut worst = 0.0f64;
    for i in 0..m {
        for j in 0..m {
            let q = ops.weights[i] * ops.deriv[(i, j)] + ops.weights[j] * ops.deriv[(j, i)];
            let b = if i == 0 && j == 0 {
                -1.0
            } else if i == m - 1 && j == m - 1 {
                1.0
            } else {
                0.0
            };
            worst = worst.max((q - b).abs());
        }
    }
    worst
}
