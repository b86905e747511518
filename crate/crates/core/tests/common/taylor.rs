/// Solves the 3×3 system by Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
pub fn solve3(mut m: [[f64; 3]; 3], mut rhs: [f64; 3]) -> [f64; 3] {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs())).unwrap();
        m.swap(col, piv);
        rhs.swap(col, piv);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..3 {
                m[row][k] -= f * m[col][k];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let s: f64 = (row + 1..3).map(|k| m[row][k] * x[k]).sum();
        x[row] = (rhs[row] - s) / m[row][row];
    }
    x
}

/// Coefficients making `x₁φ₁ + x₂φ₂ + x₃φ₃` match `1/z²` to second order at
/// `z = u`, where `basis(u)` returns the values and first two derivatives.
pub fn taylor_system(basis: impl Fn(f64) -> [[f64; 3]; 3], u: f64) -> [f64; 3] {
    let d = basis(u);
    let m = [[d[0][0], d[1][0], d[2][0]], [d[0][1], d[1][1], d[2][1]], [d[0][2], d[1][2], d[2][2]]];
    solve3(m, [1.0 / (u * u), -2.0 / u.powi(3), 6.0 / u.powi(4)])
}

/// MR basis in z = r/b: 1, q, q² with q = 1/(e^z − 1).
pub fn mr_basis(z: f64) -> [[f64; 3]; 3] {
    let q = 1.0 / z.exp_m1();
    let q1 = -q * (1.0 + q);
    let q2 = q * (1.0 + q) * (1.0 + 2.0 * q);
    [[1.0, 0.0, 0.0], [q, q1, q2], [q * q, 2.0 * q * q1, 2.0 * q1 * q1 + 2.0 * q * q2]]
}

/// PT basis in z = αr: 1, 1/sinh², cosh/sinh².
pub fn pt_basis(z: f64) -> [[f64; 3]; 3] {
    let (s, c) = (z.sinh(), z.cosh());
    [
        [1.0, 0.0, 0.0],
        [s.powi(-2), -2.0 * c * s.powi(-3), -2.0 * s.powi(-2) + 6.0 * c * c * s.powi(-4)],
        [c * s.powi(-2), 1.0 / s - 2.0 * c * c * s.powi(-3), -5.0 * c * s.powi(-2) + 6.0 * c.powi(3) * s.powi(-4)],
    ]
}
