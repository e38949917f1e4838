//! Flat-space Levy-Leblond checks evaluated analytically (exact
//! derivatives, no grid): the plane-wave family and the Schrödinger
//! reduction of a smooth 2-spinor test function.
//!
//! The flat equation is `gamma^a d_a psi + 2 m i gamma_0^t psi = 0` with
//! spinors split as `psi = (u1, u2)` (upper block first). Blockwise this is
//! `d_t u2 + sigma.grad u1 = 0` and `-sigma.grad u2 + 2 m i u1 = 0`.

use num_complex::Complex64;

use crate::analytic::{ScalarWave, WaveDerivs};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub type Mat2c = [[Complex64; 2]; 2];
pub type Spinor2 = [Complex64; 2];

/// The Pauli matrices `sigma_1, sigma_2, sigma_3`.
pub fn pauli() -> [Mat2c; 3] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [
        [[z, one], [one, z]],
        [[z, -i], [i, z]],
        [[one, z], [z, -one]],
    ]
}

pub fn mat2_apply(m: &Mat2c, x: &Spinor2) -> Spinor2 {
    [
        m[0][0] * x[0] + m[0][1] * x[1],
        m[1][0] * x[0] + m[1][1] * x[1],
    ]
}

fn spinor2_scale(x: &Spinor2, s: Complex64) -> Spinor2 {
    [x[0] * s, x[1] * s]
}

fn spinor2_add(a: &Spinor2, b: &Spinor2) -> Spinor2 {
    [a[0] + b[0], a[1] + b[1]]
}

fn spinor2_max(a: &Spinor2) -> f64 {
    a[0].norm().max(a[1].norm())
}

/// `sigma . v` for a complex 3-vector of coefficients.
pub fn sigma_dot(v: &[Complex64; 3]) -> Mat2c {
    let s = pauli();
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for a in 0..3 {
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] += s[a][i][j] * v[a];
            }
        }
    }
    out
}

/// Residual of the plane-wave ansatz `psi = (u1, u2) e^{i(k.x - E t)}` with
/// `u1 = (sigma.k) u2 / (2m)` and `E = |k|^2/(2m) + delta_e`.
///
/// Substitution gives upper residual `-i delta_e u2` and lower residual 0,
/// so the returned max norm is `|delta_e| * max|u2|` exactly; the function
/// still evaluates both blocks from the operator, not from that formula.
pub fn planewave_check(
    k: [f64; 3],
    mass: f64,
    delta_e: f64,
    u2: Spinor2,
) -> Result<f64, ll_core::Error> {
    if !(mass > 0.0) {
        return Err(ll_core::Error::InvalidMass(mass));
    }
    let k2: f64 = k.iter().map(|v| v * v).sum();
    let e = k2 / (2.0 * mass) + delta_e;
    let kc = [c(k[0], 0.0), c(k[1], 0.0), c(k[2], 0.0)];
    let sk = sigma_dot(&kc);
    let u1 = spinor2_scale(&mat2_apply(&sk, &u2), c(1.0 / (2.0 * mass), 0.0));

    // derivatives of the phase: d_t -> -iE, grad -> i k
    // upper residual: d_t u2 + sigma.grad u1 = (-iE) u2 + (i sigma.k) u1
    let upper = spinor2_add(
        &spinor2_scale(&u2, c(0.0, -e)),
        &spinor2_scale(&mat2_apply(&sk, &u1), c(0.0, 1.0)),
    );
    // lower residual: -sigma.grad u2 + 2 m i u1 = -(i sigma.k) u2 + 2 m i u1
    let lower = spinor2_add(
        &spinor2_scale(&mat2_apply(&sk, &u2), c(0.0, -1.0)),
        &spinor2_scale(&u1, c(0.0, 2.0 * mass)),
    );
    Ok(spinor2_max(&upper).max(spinor2_max(&lower)))
}

/// Residual norms of the Schrödinger reduction at sampled points.
#[derive(Debug, Clone, Copy)]
pub struct ReduceReport {
    /// Max pointwise Levy-Leblond residual of the reconstructed 4-spinor.
    pub ll_max: f64,
    /// Max pointwise Schrödinger residual `i d_t chi + (Delta chi)/(2m)`.
    pub schrodinger_max: f64,
}

/// Build the spinor `psi = ((sigma.grad chi) w / (2mi), chi w)` from a
/// scalar test function and evaluate both residuals analytically over the
/// given sample points. The lower-block equation holds identically; the
/// upper block reproduces the Schrödinger residual, which is what makes
/// this a faithful reduction check.
pub fn reduce_check(
    wave: &dyn ScalarWave,
    mass: f64,
    points: &[([f64; 3], f64)],
) -> Result<ReduceReport, ll_core::Error> {
    if !(mass > 0.0) {
        return Err(ll_core::Error::InvalidMass(mass));
    }
    let w: Spinor2 = [c(1.0, 0.0), c(0.0, 0.0)];
    let mut ll_max = 0.0f64;
    let mut schr_max = 0.0f64;
    for &(x, t) in points {
        let d: WaveDerivs = wave.eval(x, t);

        // u2 = chi w;  u1 = (sigma.grad chi) w / (2 m i)
        let sg = sigma_dot(&d.grad);
        let u1 = spinor2_scale(&mat2_apply(&sg, &w), c(1.0, 0.0) / c(0.0, 2.0 * mass));

        // upper: d_t u2 + sigma.grad u1
        //      = (d_t chi) w + sigma_a sigma_b (d_a d_b chi) w / (2 m i)
        let mut grad_u1_contracted = [c(0.0, 0.0); 2];
        let s = pauli();
        for a in 0..3 {
            // d_a u1 = sigma_b (hess[a][b]) w / (2mi); then apply sigma_a
            let mut da_u1 = [c(0.0, 0.0); 2];
            for b in 0..3 {
                let term = spinor2_scale(&mat2_apply(&s[b], &w), d.hess[a][b] / c(0.0, 2.0 * mass));
                da_u1 = spinor2_add(&da_u1, &term);
            }
            grad_u1_contracted = spinor2_add(&grad_u1_contracted, &mat2_apply(&s[a], &da_u1));
        }
        let upper = spinor2_add(&spinor2_scale(&w, d.vt), &grad_u1_contracted);

        // lower: -sigma.grad u2 + 2 m i u1, with grad u2 = (grad chi) w
        let sgu2 = mat2_apply(&sg, &w);
        let lower = spinor2_add(
            &spinor2_scale(&sgu2, c(-1.0, 0.0)),
            &spinor2_scale(&u1, c(0.0, 2.0 * mass)),
        );

        ll_max = ll_max.max(spinor2_max(&upper)).max(spinor2_max(&lower));
        let schr = (c(0.0, 1.0) * d.vt + d.laplacian() / (2.0 * mass)).norm();
        schr_max = schr_max.max(schr);
    }
    Ok(ReduceReport {
        ll_max,
        schrodinger_max: schr_max,
    })
}

/// Default spacetime sample lattice for reduction checks.
pub fn default_reduce_points() -> Vec<([f64; 3], f64)> {
    let xs = [-1.2, -0.4, 0.0, 0.5, 1.3];
    let ts = [0.0, 0.3, 0.9];
    let mut pts = Vec::new();
    for &t in &ts {
        for &x in &xs {
            for &y in &[-0.7, 0.2] {
                pts.push(([x, y, 0.3], t));
            }
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{constant_factor, GaussianPacket1D, PlaneWave3D, ProductWave3D};

    #[test]
    fn planewave_zero_k_is_exact() {
        let r = planewave_check([0.0; 3], 1.0, 0.0, [c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn planewave_on_dispersion_is_tiny() {
        let u2 = [c(0.6, 0.0), c(0.0, 0.8)];
        let r = planewave_check([1.0, 0.0, 0.0], 1.0, 0.0, u2).unwrap();
        assert!(r < 1e-12, "residual {r}");
    }

    #[test]
    fn dispersion_violation_shows_up_linearly() {
        // E forced off the dispersion by delta produces residual
        // delta * max|u2|
        let u2 = [c(1.0, 0.0), c(0.0, 0.0)];
        let r = planewave_check([1.0, 0.0, 0.0], 1.0, 0.5, u2).unwrap();
        assert!((r - 0.5).abs() < 1e-12, "residual {r}");
    }

    #[test]
    fn invalid_mass_rejected() {
        assert!(planewave_check([1.0, 0.0, 0.0], -1.0, 0.0, [c(1.0, 0.0), c(0.0, 0.0)]).is_err());
    }

    #[test]
    fn gaussian_family_passes_reduce_check() {
        let m = 1.0;
        let packet = GaussianPacket1D {
            sigma0: 1.0,
            k0: 1.0,
            x0: 0.0,
            mass: m,
        };
        let wave = ProductWave3D {
            factors: [
                Box::new(move |x, t| packet.derivs(x, t)),
                Box::new(constant_factor()),
                Box::new(constant_factor()),
            ],
        };
        let r = reduce_check(&wave, m, &default_reduce_points()).unwrap();
        assert!(r.ll_max <= 1e-10, "ll {}", r.ll_max);
        assert!(
            r.schrodinger_max <= 1e-10,
            "schrodinger {}",
            r.schrodinger_max
        );
    }

    #[test]
    fn plane_wave_family_passes_reduce_check() {
        let m = 2.0;
        let k = [0.7, -0.4, 1.1];
        let k2: f64 = k.iter().map(|v| v * v).sum();
        let wave = PlaneWave3D {
            k,
            e: k2 / (2.0 * m),
        };
        let r = reduce_check(&wave, m, &default_reduce_points()).unwrap();
        assert!(r.ll_max <= 1e-12);
        assert!(r.schrodinger_max <= 1e-12);
    }

    #[test]
    fn non_solution_gives_matching_residuals() {
        // static Gaussian: LL residual norm equals the Schrödinger residual
        // norm (the mismatch is confined to one 2-spinor block)
        use crate::analytic::StaticGaussian1D;
        let g = StaticGaussian1D {
            sigma0: 1.0,
            x0: 0.0,
        };
        let wave = ProductWave3D {
            factors: [
                Box::new(move |x, _t| g.derivs(x)),
                Box::new(constant_factor()),
                Box::new(constant_factor()),
            ],
        };
        let r = reduce_check(&wave, 1.0, &default_reduce_points()).unwrap();
        assert!(r.schrodinger_max > 0.01, "should not be a solution");
        assert!(
            (r.ll_max - r.schrodinger_max).abs() < 1e-10,
            "ll {} vs schrodinger {}",
            r.ll_max,
            r.schrodinger_max
        );
    }
}
