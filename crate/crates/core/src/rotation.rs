//! Axis-angle rotation matrices, the determinant identity behind the Molien
//! integral, and the Gauss-Legendre quadrature oracle that cross-checks the
//! symbolic results in floating point.

use crate::molien::character;

/// Axis-angle parameters: the rotation axis points along
/// (sin theta cos phi, sin theta sin phi, cos theta) and omega is the
/// rotation angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationParams {
    pub phi: f64,
    pub theta: f64,
    pub omega: f64,
}

impl RotationParams {
    pub fn new(phi: f64, theta: f64, omega: f64) -> Self {
        RotationParams { phi, theta, omega }
    }
}

/// Row-major 3x3 real matrix.
pub type Matrix3 = [[f64; 3]; 3];

pub fn identity3() -> Matrix3 {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

pub fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn transpose(a: &Matrix3) -> Matrix3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn trace(a: &Matrix3) -> f64 {
    a[0][0] + a[1][1] + a[2][2]
}

pub fn det3(a: &Matrix3) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Largest absolute entry of a - b.
pub fn max_abs_diff(a: &Matrix3, b: &Matrix3) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            m = m.max((a[i][j] - b[i][j]).abs());
        }
    }
    m
}

/// Frame-alignment matrix: its third column is the rotation-axis unit
/// vector.
pub fn m1(theta: f64, phi: f64) -> Matrix3 {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [
        [cp * ct, -sp, cp * st],
        [sp * ct, cp, sp * st],
        [-st, 0.0, ct],
    ]
}

/// Rotation through omega about the z axis.
pub fn m2(omega: f64) -> Matrix3 {
    let (s, c) = omega.sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
}

/// Rotation through omega about the axis selected by (theta, phi):
/// M1(theta, phi) M2(omega) M1(theta, phi)^T.
pub fn rotation(params: RotationParams) -> Matrix3 {
    let f = m1(params.theta, params.phi);
    mat_mul(&mat_mul(&f, &m2(params.omega)), &transpose(&f))
}

/// Determinant of a dense square matrix by partial-pivot Gaussian
/// elimination. Used for the 3N x 3N block matrix I - lambda D.
pub fn det_dense(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower {
            let f = row[col] / pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
        }
    }
    det
}

/// Checks det(I - lambda D) = [(1 - lambda)(1 - 2 lambda cos omega +
/// lambda^2)]^N, where D is the block-diagonal action of the rotation on N
/// vectors. Returns (lhs, rhs, |lhs - rhs|).
pub fn det_identity_check(params: RotationParams, lambda: f64, n_vectors: u32) -> (f64, f64, f64) {
    let r = rotation(params);
    let dim = 3 * n_vectors as usize;
    let mut a = vec![vec![0.0; dim]; dim];
    for block in 0..n_vectors as usize {
        for i in 0..3 {
            for j in 0..3 {
                let delta = if i == j { 1.0 } else { 0.0 };
                a[3 * block + i][3 * block + j] = delta - lambda * r[i][j];
            }
        }
    }
    let lhs = det_dense(a);
    let rhs = ((1.0 - lambda) * (1.0 - 2.0 * lambda * params.omega.cos() + lambda * lambda))
        .powi(n_vectors as i32);
    (lhs, rhs, (lhs - rhs).abs())
}

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton
/// iteration on the Legendre polynomial.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1);
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and P_n' by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 1 { x } else { p1 };
            let pm1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * p - pm1) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Integrate f over [a, b] with a fixed-order Gauss-Legendre rule.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, order: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    nodes
        .iter()
        .zip(&weights)
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

/// Numeric Molien function via the reduced one-dimensional integral:
///
///   g = 2/pi * (1-lambda)^-N *
///       Int_0^pi sin((L+1/2) w) sin(w/2) / (1 - 2 lambda cos w + lambda^2)^N dw
pub fn molien_numeric(n_vectors: u32, target_l: u32, lambda: f64, quad_points: usize) -> f64 {
    let n = n_vectors as i32;
    let integral = integrate(
        |w| {
            let den = (1.0 - 2.0 * lambda * w.cos() + lambda * lambda).powi(n);
            ((target_l as f64 + 0.5) * w).sin() * (0.5 * w).sin() / den
        },
        0.0,
        std::f64::consts::PI,
        quad_points,
    );
    2.0 / std::f64::consts::PI * (1.0 - lambda).powi(-n) * integral
}

/// Numeric Molien function through the full three-dimensional group
/// average with Haar measure sin^2(w/2) sin(theta) / (2 pi^2), evaluating
/// the determinant at each sampled rotation. Slow; exists to validate the
/// reduction to the one-dimensional form.
pub fn molien_numeric_3d(n_vectors: u32, target_l: u32, lambda: f64, order: usize) -> f64 {
    let pi = std::f64::consts::PI;
    let (nodes, weights) = gauss_legendre(order);
    let map = |x: f64, a: f64, b: f64| 0.5 * (a + b) + 0.5 * (b - a) * x;
    let mut total = 0.0;
    for (xp, wp) in nodes.iter().zip(&weights) {
        let phi = map(*xp, 0.0, 2.0 * pi);
        for (xt, wt) in nodes.iter().zip(&weights) {
            let theta = map(*xt, 0.0, pi);
            for (xo, wo) in nodes.iter().zip(&weights) {
                let omega = map(*xo, 0.0, pi);
                let (det, _, _) =
                    det_identity_check(RotationParams::new(phi, theta, omega), lambda, n_vectors);
                let weight = wp * wt * wo * (0.5 * omega).sin().powi(2) * theta.sin();
                total += weight * character(target_l, omega) / det;
            }
        }
    }
    // Jacobians of the three interval maps, then the Haar normalization.
    total *= pi * (0.5 * pi) * (0.5 * pi);
    total / (2.0 * pi * pi)
}
