//! Closed-form scalar wave families with exact derivatives. These are the
//! oracles: every solver and reduction check is measured against them, so
//! they are derived independently of the numerical code.
//!
//! Sign convention: plane waves are `e^{+i(k x - E t)}`; units have hbar = 1.

use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Value and derivatives of a scalar wave at one spacetime point.
#[derive(Debug, Clone, Copy)]
pub struct WaveDerivs {
    pub v: Complex64,
    pub grad: [Complex64; 3],
    pub hess: [[Complex64; 3]; 3],
    pub vt: Complex64,
}

impl WaveDerivs {
    pub fn laplacian(&self) -> Complex64 {
        self.hess[0][0] + self.hess[1][1] + self.hess[2][2]
    }
}

/// A scalar test function with analytic derivatives.
pub trait ScalarWave {
    fn eval(&self, x: [f64; 3], t: f64) -> WaveDerivs;
}

/// One-dimensional factor: value plus x- and t-derivatives.
#[derive(Debug, Clone, Copy)]
pub struct FactorDerivs {
    pub v: Complex64,
    pub vx: Complex64,
    pub vxx: Complex64,
    pub vt: Complex64,
}

/// The exact spreading Gaussian solution of the free 1D Schrödinger
/// equation `i d_t chi = -chi'' / (2m)`:
///
/// `chi(x, t) = (2 pi s0^2)^{-1/4} (s0 / sqrt(b)) *
///              exp(-Y^2/(4b) + i k0 X - i k0^2 t / (2m))`
///
/// with `X = x - x0`, `Y = X - k0 t / m`, `b = s0^2 + i t / (2m)`.
/// Derived by Fourier transform of the t = 0 packet; the probability
/// density keeps variance `s0^2 + (t / (2 m s0))^2`.
#[derive(Debug, Clone, Copy)]
pub struct GaussianPacket1D {
    pub sigma0: f64,
    pub k0: f64,
    pub x0: f64,
    pub mass: f64,
}

impl GaussianPacket1D {
    pub fn derivs(&self, x: f64, t: f64) -> FactorDerivs {
        let s0 = self.sigma0;
        let m = self.mass;
        let k0 = self.k0;
        let big_x = x - self.x0;
        let big_y = big_x - k0 * t / m;
        let b = c(s0 * s0, t / (2.0 * m));
        let norm = (2.0 * core::f64::consts::PI * s0 * s0).powf(-0.25);
        let pref = c(norm * s0, 0.0) / b.sqrt();
        let expo = -c(big_y * big_y, 0.0) / (4.0 * b) + c(0.0, k0 * big_x)
            - c(0.0, k0 * k0 * t / (2.0 * m));
        let v = pref * expo.exp();

        // log-derivatives
        let lx = -c(big_y, 0.0) / (2.0 * b) + c(0.0, k0);
        let vx = v * lx;
        let vxx = v * (lx * lx - 1.0 / (2.0 * b));
        // d_t log chi = -b'/(2b) + k0 Y/(2 m b) + i Y^2/(8 m b^2) - i k0^2/(2m)
        let bp = c(0.0, 1.0 / (2.0 * m));
        let lt = -bp / (2.0 * b)
            + c(k0 * big_y / (2.0 * m), 0.0) / b
            + c(0.0, big_y * big_y / (8.0 * m)) / (b * b)
            - c(0.0, k0 * k0 / (2.0 * m));
        let vt = v * lt;
        FactorDerivs { v, vx, vxx, vt }
    }
}

/// A time-frozen Gaussian `exp(-(x-x0)^2 / (4 s0^2))`; deliberately NOT a
/// Schrödinger solution (vt = 0), used to check that the reduction maps a
/// nonzero Schrödinger residual to an equally large Levy-Leblond residual.
#[derive(Debug, Clone, Copy)]
pub struct StaticGaussian1D {
    pub sigma0: f64,
    pub x0: f64,
}

impl StaticGaussian1D {
    pub fn derivs(&self, x: f64) -> FactorDerivs {
        let s2 = self.sigma0 * self.sigma0;
        let big_x = x - self.x0;
        let v = c((-big_x * big_x / (4.0 * s2)).exp(), 0.0);
        let lx = c(-big_x / (2.0 * s2), 0.0);
        FactorDerivs {
            v,
            vx: v * lx,
            vxx: v * (lx * lx - 1.0 / (2.0 * s2)),
            vt: c(0.0, 0.0),
        }
    }
}

/// A separable 3D wave built from three 1D factors, each of which may carry
/// its own time dependence. Mixed second derivatives come from products of
/// first derivatives of the factors.
pub struct ProductWave3D {
    pub factors: [Box<dyn Fn(f64, f64) -> FactorDerivs + Sync>; 3],
}

impl ScalarWave for ProductWave3D {
    fn eval(&self, x: [f64; 3], t: f64) -> WaveDerivs {
        let f: Vec<FactorDerivs> = (0..3).map(|a| (self.factors[a])(x[a], t)).collect();
        let v = f[0].v * f[1].v * f[2].v;
        let mut grad = [c(0.0, 0.0); 3];
        let mut hess = [[c(0.0, 0.0); 3]; 3];
        for a in 0..3 {
            let mut ga = f[a].vx;
            for b in 0..3 {
                if b != a {
                    ga *= f[b].v;
                }
            }
            grad[a] = ga;
        }
        for a in 0..3 {
            for b in 0..3 {
                let mut h = if a == b { f[a].vxx } else { f[a].vx * f[b].vx };
                for k in 0..3 {
                    if k != a && k != b {
                        h *= f[k].v;
                    }
                }
                hess[a][b] = h;
            }
        }
        // product rule in time
        let vt = f[0].vt * f[1].v * f[2].v + f[0].v * f[1].vt * f[2].v + f[0].v * f[1].v * f[2].vt;
        WaveDerivs { v, grad, hess, vt }
    }
}

/// A plane wave `e^{i (k.x - E t)}` with arbitrary `E` (not necessarily on
/// the free dispersion).
#[derive(Debug, Clone, Copy)]
pub struct PlaneWave3D {
    pub k: [f64; 3],
    pub e: f64,
}

impl ScalarWave for PlaneWave3D {
    fn eval(&self, x: [f64; 3], t: f64) -> WaveDerivs {
        let phase = self.k[0] * x[0] + self.k[1] * x[1] + self.k[2] * x[2] - self.e * t;
        let v = c(0.0, phase).exp();
        let mut grad = [c(0.0, 0.0); 3];
        let mut hess = [[c(0.0, 0.0); 3]; 3];
        for a in 0..3 {
            grad[a] = v * c(0.0, self.k[a]);
            for b in 0..3 {
                hess[a][b] = v * c(0.0, self.k[a]) * c(0.0, self.k[b]);
            }
        }
        WaveDerivs {
            v,
            grad,
            hess,
            vt: v * c(0.0, -self.e),
        }
    }
}

/// Constant-in-one-direction helper for building product waves.
pub fn constant_factor() -> impl Fn(f64, f64) -> FactorDerivs + Sync {
    |_x, _t| FactorDerivs {
        v: c(1.0, 0.0),
        vx: c(0.0, 0.0),
        vxx: c(0.0, 0.0),
        vt: c(0.0, 0.0),
    }
}
