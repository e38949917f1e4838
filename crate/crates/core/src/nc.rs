//! Newton-Cartan tensor calculus on a single chart.
//!
//! A point carries a co-rank-one degenerate spatial metric `g`, a clock form
//! `tau`, the clock vector `V` (spanning the radical of `g`, normalized by
//! `tau(V) = 1`) and connection coefficients. From these we derive the
//! nondegenerate `gbar = tau (x) tau + g`, its inverse `hbar`, the degenerate
//! cometric `h = -V (x) V + hbar`, adapted frames, compatibility residuals
//! and the so(1,0,3)-valued connection 1-form.
//!
//! Compatibility of a connection is checked as `grad tau = 0` together with
//! `grad h = 0` on the contravariant spatial cometric. The covariant
//! statement `grad g = 0` is stricter: it additionally kills the boost
//! components `Gamma^i_{c0}`, which rejects the Newtonian connection
//! `Gamma^i_00 = d_i Phi`. Both residuals are reported; the (h, tau) pair is
//! the one a Newtonian spacetime satisfies.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{self, Mat4, Vec4};
use crate::spin::So103Element;
use crate::tol;

/// Connection coefficients `Gamma^mu_{lambda nu}`, indexed
/// `[mu][lambda][nu]` with `lambda` the differentiation direction.
pub type Christoffels = [[[f64; 4]; 4]; 4];

/// Sampled Newton-Cartan data at one space-time point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NCPointData {
    /// Covariant spatial metric `g_{mu nu}` (symmetric, rank 3, `g V = 0`).
    pub g: Mat4,
    /// Clock form `tau_mu`.
    pub tau: Vec4,
    /// Clock vector `V^mu` with `tau(V) = 1`.
    pub v: Vec4,
    /// Connection coefficients `Gamma^mu_{lambda nu}`.
    pub gamma: Christoffels,
}

/// One validation line: invariant name, verdict and residual magnitude.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub residual: f64,
}

/// Full validation report for a point. Torsion is informational only; the
/// connection is not required to be symmetric.
#[derive(Debug, Clone)]
pub struct DiagnosticsReport {
    pub checks: Vec<Check>,
    pub torsion_max: f64,
}

impl DiagnosticsReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl NCPointData {
    /// The canonical flat model: `g = diag(0,1,1,1)`, `tau = dt`,
    /// `V = d_t`, vanishing connection.
    pub fn flat() -> Self {
        let mut g = linalg::mat4_zero();
        for i in 1..4 {
            g[i][i] = 1.0;
        }
        NCPointData {
            g,
            tau: [1.0, 0.0, 0.0, 0.0],
            v: [1.0, 0.0, 0.0, 0.0],
            gamma: [[[0.0; 4]; 4]; 4],
        }
    }

    /// Check every structural invariant, reporting residuals.
    pub fn validate(&self) -> DiagnosticsReport {
        let mut checks = Vec::new();

        let mut sym = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                sym = sym.max(libm::fabs(self.g[i][j] - self.g[j][i]));
            }
        }
        checks.push(Check {
            name: "g symmetric",
            pass: sym <= tol::EXACT,
            residual: sym,
        });

        let mut ev = linalg::sym_eigenvalues(&self.g);
        ev.sort_by(|a, b| libm::fabs(*a).partial_cmp(&libm::fabs(*b)).unwrap());
        let scale = libm::fabs(ev[3]).max(1.0);
        let null = libm::fabs(ev[0]);
        let next = libm::fabs(ev[1]);
        checks.push(Check {
            name: "g has co-rank 1",
            pass: null <= tol::RANK_EPS * scale && next > tol::RANK_EPS * scale,
            residual: null,
        });

        let min_ev = ev.iter().cloned().fold(f64::INFINITY, f64::min);
        checks.push(Check {
            name: "g positive semi-definite",
            pass: min_ev >= -tol::RANK_EPS * scale,
            residual: (-min_ev).max(0.0),
        });

        let gv = linalg::mat4_apply(&self.g, &self.v);
        let gv_res = gv.iter().fold(0.0f64, |m, &x| m.max(libm::fabs(x)));
        checks.push(Check {
            name: "g annihilates V",
            pass: gv_res <= tol::EXACT,
            residual: gv_res,
        });

        let tv: f64 = (0..4).map(|i| self.tau[i] * self.v[i]).sum();
        let tv_res = libm::fabs(tv - 1.0);
        checks.push(Check {
            name: "clock normalization tau(V) = 1",
            pass: tv_res <= tol::EXACT,
            residual: tv_res,
        });

        // Positive-definiteness on ker(tau): Gram eigenvalues of a kernel basis.
        let kernel_ok = match kernel_basis(self) {
            Ok(basis) => {
                let mut gram = [[0.0f64; 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        gram[i][j] = g_inner(&self.g, &basis[i], &basis[j]);
                    }
                }
                let gev = linalg::sym_eigenvalues(&gram);
                let min = gev.iter().cloned().fold(f64::INFINITY, f64::min);
                Check {
                    name: "g positive definite on ker tau",
                    pass: min > tol::RANK_EPS,
                    residual: (-min).max(0.0),
                }
            }
            Err(_) => Check {
                name: "g positive definite on ker tau",
                pass: false,
                residual: f64::INFINITY,
            },
        };
        checks.push(kernel_ok);

        let mut torsion = 0.0f64;
        for m in 0..4 {
            for l in 0..4 {
                for n in 0..4 {
                    torsion = torsion.max(libm::fabs(self.gamma[m][l][n] - self.gamma[m][n][l]));
                }
            }
        }

        DiagnosticsReport {
            checks,
            torsion_max: torsion,
        }
    }
}

fn g_inner(g: &Mat4, x: &Vec4, y: &Vec4) -> f64 {
    let gy = linalg::mat4_apply(g, y);
    (0..4).map(|i| x[i] * gy[i]).sum()
}

/// `gbar = tau (x) tau + g`; nondegenerate for valid data.
pub fn gbar(data: &NCPointData) -> Result<Mat4> {
    let mut m = data.g;
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] += data.tau[i] * data.tau[j];
        }
    }
    if libm::fabs(linalg::mat4_det(&m)) < 1e-300 {
        return Err(Error::InvalidInput("gbar is singular"));
    }
    Ok(m)
}

/// Inverse of `gbar`, refusing badly conditioned inputs.
pub fn hbar(gbar: &Mat4) -> Result<Mat4> {
    let cond = linalg::sym_condition(gbar);
    if !(cond < tol::COND_MAX) {
        return Err(Error::IllConditioned { cond });
    }
    let inv = linalg::mat4_inverse(gbar)?;
    // symmetrize away inversion roundoff
    let mut out = inv;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = 0.5 * (inv[i][j] + inv[j][i]);
        }
    }
    Ok(out)
}

/// The degenerate cometric `h = -V (x) V + hbar`, verified against the
/// identity `h g = I - V (x) tau`.
pub fn hfield(data: &NCPointData, hbar: &Mat4) -> Result<Mat4> {
    let mut h = *hbar;
    for i in 0..4 {
        for j in 0..4 {
            h[i][j] -= data.v[i] * data.v[j];
        }
    }
    let hg = linalg::mat4_mul(&h, &data.g);
    let mut residual = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let target = if i == j { 1.0 } else { 0.0 } - data.v[i] * data.tau[j];
            residual = residual.max(libm::fabs(hg[i][j] - target));
        }
    }
    if residual > tol::ACCUMULATED {
        return Err(Error::InconsistentInputs { residual });
    }
    Ok(h)
}

/// An adapted frame: `X_0 = V`, the `X_i` a `g`-orthonormal basis of
/// `ker tau`, and the dual coframe (`e^0 = tau`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptedFrame {
    /// Frame vectors `X_a` in coordinate components.
    pub x: [Vec4; 4],
    /// Coframe covectors `e^a`.
    pub e: [Vec4; 4],
}

impl AdaptedFrame {
    /// Max residual over the frame invariants: duality, `tau`-orthogonality
    /// of the spatial legs and their `g`-orthonormality.
    pub fn invariant_residual(&self, data: &NCPointData) -> f64 {
        let mut res = 0.0f64;
        for mu in 0..4 {
            res = res.max(libm::fabs(self.x[0][mu] - data.v[mu]));
            res = res.max(libm::fabs(self.e[0][mu] - data.tau[mu]));
        }
        for a in 0..4 {
            for b in 0..4 {
                let dot: f64 = (0..4).map(|mu| self.e[a][mu] * self.x[b][mu]).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                res = res.max(libm::fabs(dot - target));
            }
        }
        for i in 1..4 {
            let t: f64 = (0..4).map(|mu| data.tau[mu] * self.x[i][mu]).sum();
            res = res.max(libm::fabs(t));
            for j in 1..4 {
                let target = if i == j { 1.0 } else { 0.0 };
                res = res.max(libm::fabs(
                    g_inner(&data.g, &self.x[i], &self.x[j]) - target,
                ));
            }
        }
        res
    }
}

/// Deterministic seed basis of `ker tau`: project the coordinate directions
/// along `V`, order by descending `g`-norm with index order breaking ties.
fn kernel_seed_order(data: &NCPointData) -> [(usize, Vec4, f64); 4] {
    let mut seeds: [(usize, Vec4, f64); 4] = [(0, [0.0; 4], 0.0); 4];
    for mu in 0..4 {
        let mut u = [0.0; 4];
        u[mu] = 1.0;
        for k in 0..4 {
            u[k] -= data.tau[mu] * data.v[k];
        }
        let n = g_inner(&data.g, &u, &u);
        seeds[mu] = (mu, u, n);
    }
    // stable by construction: sort_by on equal keys keeps index order
    let mut order = seeds;
    order.sort_by(|a, b| b.2.partial_cmp(&a.2).unwrap());
    order
}

fn kernel_basis(data: &NCPointData) -> Result<[Vec4; 3]> {
    let order = kernel_seed_order(data);
    let mut basis: [Vec4; 3] = [[0.0; 4]; 3];
    let mut count = 0;
    let mut last_pivot = 0.0;
    for (_, seed, _) in order.iter() {
        if count == 3 {
            break;
        }
        let mut w = *seed;
        for b in basis.iter().take(count) {
            let proj = g_inner(&data.g, b, &w);
            for k in 0..4 {
                w[k] -= proj * b[k];
            }
        }
        let n2 = g_inner(&data.g, &w, &w);
        if n2 <= tol::PIVOT_MIN {
            last_pivot = n2;
            continue;
        }
        let n = libm::sqrt(n2);
        for k in 0..4 {
            w[k] /= n;
        }
        basis[count] = w;
        count += 1;
    }
    if count < 3 {
        return Err(Error::DegenerateComplement { pivot: last_pivot });
    }
    Ok(basis)
}

/// Build the adapted frame by Gram-Schmidt under `g` over the deterministic
/// seed basis, then solve the coframe from duality.
pub fn adapted_frame(data: &NCPointData) -> Result<AdaptedFrame> {
    let spatial = kernel_basis(data)?;
    let x = [data.v, spatial[0], spatial[1], spatial[2]];
    // coframe rows are the inverse of the column matrix [X_0 .. X_3]
    let mut cols = linalg::mat4_zero();
    for (b, xb) in x.iter().enumerate() {
        for mu in 0..4 {
            cols[mu][b] = xb[mu];
        }
    }
    let e = linalg::mat4_inverse(&cols)?;
    Ok(AdaptedFrame { x, e })
}

// ---------------------------------------------------------------------------
// fields
// ---------------------------------------------------------------------------

/// Anything that can produce Newton-Cartan data at a coordinate point.
pub trait PointField {
    fn data_at(&self, p: Vec4) -> Result<NCPointData>;
}

/// A polynomial potential: sum of monomials `coeff * t^p0 x^p1 y^p2 z^p3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Potential {
    pub monomials: Vec<Monomial>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monomial {
    pub coeff: f64,
    pub powers: [u32; 4],
}

impl Potential {
    pub fn eval(&self, p: Vec4) -> f64 {
        self.monomials
            .iter()
            .map(|m| m.coeff * (0..4).map(|k| powi(p[k], m.powers[k])).product::<f64>())
            .sum()
    }

    /// Analytic gradient in all four coordinates.
    pub fn grad(&self, p: Vec4) -> Vec4 {
        let mut grad = [0.0; 4];
        for m in &self.monomials {
            for dir in 0..4 {
                if m.powers[dir] == 0 {
                    continue;
                }
                let mut term = m.coeff * m.powers[dir] as f64;
                for k in 0..4 {
                    let pw = if k == dir {
                        m.powers[k] - 1
                    } else {
                        m.powers[k]
                    };
                    term *= powi(p[k], pw);
                }
                grad[dir] += term;
            }
        }
        grad
    }
}

fn powi(x: f64, n: u32) -> f64 {
    let mut out = 1.0;
    for _ in 0..n {
        out *= x;
    }
    out
}

/// A Newton-Cartan field: an analytic preset or a sampled grid.
#[derive(Debug, Clone)]
pub enum NCField {
    /// Flat data everywhere.
    Flat,
    /// Flat `g`, `tau`, `V` with the Newtonian connection
    /// `Gamma^i_00 = d_i Phi` for a polynomial potential.
    Newtonian(Potential),
    /// Point data sampled on a regular 4-grid.
    Sampled(SampledGrid),
}

impl PointField for NCField {
    fn data_at(&self, p: Vec4) -> Result<NCPointData> {
        match self {
            NCField::Flat => Ok(NCPointData::flat()),
            NCField::Newtonian(phi) => {
                let mut data = NCPointData::flat();
                let grad = phi.grad(p);
                for i in 1..4 {
                    data.gamma[i][0][0] = grad[i];
                }
                Ok(data)
            }
            NCField::Sampled(grid) => grid.nearest(p),
        }
    }
}

/// Regular 4-grid of sampled point data.
#[derive(Debug, Clone)]
pub struct SampledGrid {
    pub shape: [usize; 4],
    pub spacing: [f64; 4],
    pub origin: [f64; 4],
    data: Vec<NCPointData>,
}

impl SampledGrid {
    pub fn new(
        shape: [usize; 4],
        spacing: [f64; 4],
        origin: [f64; 4],
        data: Vec<NCPointData>,
    ) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n == 0 || data.len() != n {
            return Err(Error::InvalidInput(
                "sample count does not match grid shape",
            ));
        }
        if spacing.iter().any(|&s| !(s > 0.0)) {
            return Err(Error::InvalidInput("grid spacings must be positive"));
        }
        Ok(SampledGrid {
            shape,
            spacing,
            origin,
            data,
        })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn at_index(&self, idx: [usize; 4]) -> &NCPointData {
        &self.data[self.flatten(idx)]
    }

    fn flatten(&self, idx: [usize; 4]) -> usize {
        ((idx[0] * self.shape[1] + idx[1]) * self.shape[2] + idx[2]) * self.shape[3] + idx[3]
    }

    pub fn coordinate(&self, idx: [usize; 4]) -> Vec4 {
        let mut p = [0.0; 4];
        for k in 0..4 {
            p[k] = self.origin[k] + idx[k] as f64 * self.spacing[k];
        }
        p
    }

    /// Nearest grid sample (indices clamped to the grid).
    pub fn nearest(&self, p: Vec4) -> Result<NCPointData> {
        let mut idx = [0usize; 4];
        for k in 0..4 {
            let r = libm::round((p[k] - self.origin[k]) / self.spacing[k]);
            let i = if r < 0.0 { 0 } else { r as usize };
            idx[k] = i.min(self.shape[k] - 1);
        }
        Ok(*self.at_index(idx))
    }

    /// First sample that fails validation, if any.
    pub fn first_invalid(&self) -> Option<(usize, DiagnosticsReport)> {
        for (i, d) in self.data.iter().enumerate() {
            let report = d.validate();
            if !report.all_pass() {
                return Some((i, report));
            }
        }
        None
    }
}

/// Max compatibility residuals of a connection over a set of points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompatResiduals {
    /// `grad h` residual on the contravariant spatial cometric.
    pub spatial: f64,
    /// `grad tau` residual.
    pub clock: f64,
    /// Covariant `grad g` residual, reported for reference; nonzero for any
    /// connection with boost components (for example Newtonian gravity).
    pub g_lower: f64,
}

impl CompatResiduals {
    pub fn max(&self) -> f64 {
        self.spatial.max(self.clock)
    }
}

fn h_at(field: &dyn PointField, p: Vec4) -> Result<Mat4> {
    let data = field.data_at(p)?;
    let gb = gbar(&data)?;
    let hb = hbar(&gb)?;
    hfield(&data, &hb)
}

/// Compatibility residuals at one point, with per-axis FD steps.
pub fn compatibility_at(
    field: &dyn PointField,
    p: Vec4,
    steps: [f64; 4],
) -> Result<CompatResiduals> {
    let center = field.data_at(p)?;
    let h_c = h_at(field, p)?;
    let mut spatial = 0.0f64;
    let mut clock = 0.0f64;
    let mut g_lower = 0.0f64;

    for lam in 0..4 {
        let mut pp = p;
        let mut pm = p;
        pp[lam] += steps[lam];
        pm[lam] -= steps[lam];
        let h_p = h_at(field, pp)?;
        let h_m = h_at(field, pm)?;
        let d_p = field.data_at(pp)?;
        let d_m = field.data_at(pm)?;
        let inv2h = 1.0 / (2.0 * steps[lam]);

        for mu in 0..4 {
            // grad_lam tau_mu = d tau - Gamma^k_{lam mu} tau_k
            let mut r = (d_p.tau[mu] - d_m.tau[mu]) * inv2h;
            for k in 0..4 {
                r -= center.gamma[k][lam][mu] * center.tau[k];
            }
            clock = clock.max(libm::fabs(r));

            for nu in 0..4 {
                // grad_lam h^{mu nu} = d h + Gamma^mu_{lam k} h^{k nu}
                //                          + Gamma^nu_{lam k} h^{mu k}
                let mut r = (h_p[mu][nu] - h_m[mu][nu]) * inv2h;
                for k in 0..4 {
                    r += center.gamma[mu][lam][k] * h_c[k][nu];
                    r += center.gamma[nu][lam][k] * h_c[mu][k];
                }
                spatial = spatial.max(libm::fabs(r));

                // grad_lam g_{mu nu} = d g - Gamma^k_{lam mu} g_{k nu}
                //                          - Gamma^k_{lam nu} g_{mu k}
                let mut r = (d_p.g[mu][nu] - d_m.g[mu][nu]) * inv2h;
                for k in 0..4 {
                    r -= center.gamma[k][lam][mu] * center.g[k][nu];
                    r -= center.gamma[k][lam][nu] * center.g[mu][k];
                }
                g_lower = g_lower.max(libm::fabs(r));
            }
        }
    }

    Ok(CompatResiduals {
        spatial,
        clock,
        g_lower,
    })
}

/// Max compatibility residuals over a list of points.
pub fn compatibility_check(
    field: &dyn PointField,
    points: &[Vec4],
    fd_step: f64,
) -> Result<CompatResiduals> {
    if points.is_empty() {
        return Err(Error::InsufficientSamples);
    }
    let steps = [fd_step; 4];
    let mut out = CompatResiduals {
        spatial: 0.0,
        clock: 0.0,
        g_lower: 0.0,
    };
    for &p in points {
        let r = compatibility_at(field, p, steps)?;
        out.spatial = out.spatial.max(r.spatial);
        out.clock = out.clock.max(r.clock);
        out.g_lower = out.g_lower.max(r.g_lower);
    }
    Ok(out)
}

/// Default evaluation lattice for analytic fields: a 3^4 grid over
/// `[-0.4, 0.4]^4`.
pub fn default_lattice() -> Vec<Vec4> {
    let vals = [-0.4, 0.0, 0.4];
    let mut pts = Vec::with_capacity(81);
    for &t in &vals {
        for &x in &vals {
            for &y in &vals {
                for &z in &vals {
                    pts.push([t, x, y, z]);
                }
            }
        }
    }
    pts
}

impl NCField {
    /// Compatibility residuals with default sampling: an analytic lattice
    /// for presets, all interior nodes for sampled grids.
    pub fn compatibility(&self, fd_step: f64) -> Result<CompatResiduals> {
        match self {
            NCField::Flat | NCField::Newtonian(_) => {
                compatibility_check(self, &default_lattice(), fd_step)
            }
            NCField::Sampled(grid) => {
                if grid.shape.iter().any(|&n| n < 3) {
                    return Err(Error::InsufficientSamples);
                }
                let mut out = CompatResiduals {
                    spatial: 0.0,
                    clock: 0.0,
                    g_lower: 0.0,
                };
                let steps = grid.spacing;
                for i0 in 1..grid.shape[0] - 1 {
                    for i1 in 1..grid.shape[1] - 1 {
                        for i2 in 1..grid.shape[2] - 1 {
                            for i3 in 1..grid.shape[3] - 1 {
                                let p = grid.coordinate([i0, i1, i2, i3]);
                                let r = compatibility_at(self, p, steps)?;
                                out.spatial = out.spatial.max(r.spatial);
                                out.clock = out.clock.max(r.clock);
                                out.g_lower = out.g_lower.max(r.g_lower);
                            }
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

/// Frame-index connection coefficients `Gamma^a_{cb} = e^a(grad_{X_c} X_b)`,
/// indexed `[a][c][b]`; `c` is the differentiation direction.
pub fn frame_christoffels(
    field: &dyn PointField,
    p: Vec4,
    fd_step: f64,
) -> Result<[[[f64; 4]; 4]; 4]> {
    let data = field.data_at(p)?;
    let frame = adapted_frame(&data)?;

    // central differences of the frame components
    let mut dx = [[[0.0f64; 4]; 4]; 4]; // [lam][b][mu] = d_lam X_b^mu
    for lam in 0..4 {
        let mut pp = p;
        let mut pm = p;
        pp[lam] += fd_step;
        pm[lam] -= fd_step;
        let f_p = adapted_frame(&field.data_at(pp)?)?;
        let f_m = adapted_frame(&field.data_at(pm)?)?;
        for b in 0..4 {
            for mu in 0..4 {
                dx[lam][b][mu] = (f_p.x[b][mu] - f_m.x[b][mu]) / (2.0 * fd_step);
            }
        }
    }

    let mut out = [[[0.0f64; 4]; 4]; 4];
    for c in 0..4 {
        for b in 0..4 {
            // (grad_{X_c} X_b)^mu
            let mut cov = [0.0f64; 4];
            for mu in 0..4 {
                for lam in 0..4 {
                    cov[mu] += frame.x[c][lam] * dx[lam][b][mu];
                    for nu in 0..4 {
                        cov[mu] += frame.x[c][lam] * data.gamma[mu][lam][nu] * frame.x[b][nu];
                    }
                }
            }
            for a in 0..4 {
                out[a][c][b] = (0..4).map(|mu| frame.e[a][mu] * cov[mu]).sum();
            }
        }
    }
    Ok(out)
}

/// The connection 1-form: per frame direction `c`, the so(1,0,3)-valued
/// matrix `omega^a_b(X_c) = Gamma^a_{cb}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionForm {
    /// One algebra element per frame direction `X_0..X_3`.
    pub dirs: [So103Element; 4],
}

/// Decompose frame Christoffels into the connection form. Any component
/// outside so(1,0,3) above tolerance is an error, never silently dropped.
pub fn connection_form(frame_gamma: &[[[f64; 4]; 4]; 4]) -> Result<ConnectionForm> {
    let mut dirs = [So103Element::zero(); 4];
    for c in 0..4 {
        let mut omega = linalg::mat4_zero();
        for a in 0..4 {
            for b in 0..4 {
                omega[a][b] = frame_gamma[a][c][b];
            }
        }
        dirs[c] = So103Element::from_matrix(&omega, tol::ACCUMULATED)?;
    }
    Ok(ConnectionForm { dirs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn flat_data_validates() {
        let report = NCPointData::flat().validate();
        assert!(report.all_pass(), "{:?}", report.checks);
        assert_eq!(report.torsion_max, 0.0);
    }

    #[test]
    fn broken_clock_normalization_fails() {
        let mut d = NCPointData::flat();
        d.tau = [0.0; 4]; // tau(V) = 0
        let report = d.validate();
        assert!(!report.all_pass());
        let check = report
            .checks
            .iter()
            .find(|c| c.name.contains("clock"))
            .unwrap();
        assert!(!check.pass);
    }

    #[test]
    fn full_rank_g_fails_corank() {
        let mut d = NCPointData::flat();
        d.g[0][0] = 1.0; // rank 4 now
        let report = d.validate();
        let check = report
            .checks
            .iter()
            .find(|c| c.name.contains("co-rank"))
            .unwrap();
        assert!(!check.pass);
    }

    #[test]
    fn flat_gbar_is_identity() {
        let d = NCPointData::flat();
        let gb = gbar(&d).unwrap();
        assert_eq!(gb, linalg::mat4_identity());
        let hb = hbar(&gb).unwrap();
        assert_eq!(hb, linalg::mat4_identity());
        let h = hfield(&d, &hb).unwrap();
        let mut expected = linalg::mat4_identity();
        expected[0][0] = 0.0;
        assert_eq!(h, expected);
    }

    #[test]
    fn hbar_inverts_diagonal() {
        let mut gb = linalg::mat4_identity();
        gb[0][0] = 4.0;
        let hb = hbar(&gb).unwrap();
        assert!((hb[0][0] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn hfield_rejects_zero_v() {
        let mut d = NCPointData::flat();
        d.v = [0.0; 4];
        let gb = {
            // gbar from the unmodified tau/g is still invertible
            gbar(&d).unwrap()
        };
        let hb = hbar(&gb).unwrap();
        assert!(matches!(
            hfield(&d, &hb),
            Err(Error::InconsistentInputs { .. })
        ));
    }

    #[test]
    fn flat_adapted_frame_is_coordinates() {
        let d = NCPointData::flat();
        let frame = adapted_frame(&d).unwrap();
        for a in 0..4 {
            for mu in 0..4 {
                let target = if a == mu { 1.0 } else { 0.0 };
                assert!((frame.x[a][mu] - target).abs() < 1e-14);
                assert!((frame.e[a][mu] - target).abs() < 1e-14);
            }
        }
        assert!(frame.invariant_residual(&d) < 1e-14);
    }

    #[test]
    fn boosted_clock_vector_frame() {
        // tau = dt, V = d_t + w d_x, g built from dx - w dt, dy, dz
        let w = 2.5;
        let mut d = NCPointData::flat();
        d.v = [1.0, w, 0.0, 0.0];
        d.g = [
            [w * w, -w, 0.0, 0.0],
            [-w, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        assert!(d.validate().all_pass());
        let frame = adapted_frame(&d).unwrap();
        assert_eq!(frame.x[0], d.v); // X_0 carries the boost
        assert!(frame.invariant_residual(&d) < 1e-12);
    }

    #[test]
    fn flat_compatibility_is_zero() {
        let field = NCField::Flat;
        let r = field.compatibility(1e-3).unwrap();
        assert_eq!(r.spatial, 0.0);
        assert_eq!(r.clock, 0.0);
        assert_eq!(r.g_lower, 0.0);
    }

    #[test]
    fn newtonian_is_compatible_in_contravariant_form() {
        let phi = Potential {
            monomials: vec![
                Monomial {
                    coeff: 0.5,
                    powers: [0, 2, 0, 0],
                },
                Monomial {
                    coeff: -0.2,
                    powers: [0, 0, 1, 1],
                },
            ],
        };
        let field = NCField::Newtonian(phi);
        let r = field.compatibility(1e-3).unwrap();
        assert!(r.spatial <= 1e-8, "spatial {}", r.spatial);
        assert!(r.clock <= 1e-12, "clock {}", r.clock);
        // covariant grad g sees the boost components
        assert!(r.g_lower > 0.1, "g_lower {}", r.g_lower);
    }

    #[test]
    fn incompatible_gamma_detected() {
        let mut d = NCPointData::flat();
        d.gamma[1][1][1] = 1.0;
        struct Const(NCPointData);
        impl PointField for Const {
            fn data_at(&self, _p: Vec4) -> crate::error::Result<NCPointData> {
                Ok(self.0)
            }
        }
        let r = compatibility_check(&Const(d), &[[0.0; 4]], 1e-3).unwrap();
        assert!((r.spatial - 2.0).abs() < 1e-12, "spatial {}", r.spatial);
        assert!((r.g_lower - 2.0).abs() < 1e-12);
    }

    #[test]
    fn flat_frame_christoffels_vanish() {
        let gamma = frame_christoffels(&NCField::Flat, [0.0; 4], 1e-3).unwrap();
        for a in 0..4 {
            for c in 0..4 {
                for b in 0..4 {
                    assert_eq!(gamma[a][c][b], 0.0);
                }
            }
        }
        let form = connection_form(&gamma).unwrap();
        for c in 0..4 {
            assert_eq!(form.dirs[c].max_abs_diff(&So103Element::zero()), 0.0);
        }
    }

    #[test]
    fn newtonian_frame_christoffels_match_coordinates() {
        let phi = Potential {
            monomials: vec![Monomial {
                coeff: 1.0,
                powers: [0, 1, 1, 0],
            }],
        };
        let field = NCField::Newtonian(phi.clone());
        let p = [0.0, 0.7, -0.3, 0.2];
        let gamma = frame_christoffels(&field, p, 1e-3).unwrap();
        let grad = phi.grad(p);
        for a in 0..4 {
            for c in 0..4 {
                for b in 0..4 {
                    let expected = if (1..4).contains(&a) && c == 0 && b == 0 {
                        grad[a]
                    } else {
                        0.0
                    };
                    assert!(
                        (gamma[a][c][b] - expected).abs() < 1e-12,
                        "gamma[{a}][{c}][{b}] = {}",
                        gamma[a][c][b]
                    );
                }
            }
        }
        // boost components sit in column 0, outside so(1,0,3)
        assert!(matches!(
            connection_form(&gamma),
            Err(Error::NotSo103Valued { .. })
        ));
    }

    #[test]
    fn antisymmetry_violation_is_structural_error() {
        let mut gamma = [[[0.0f64; 4]; 4]; 4];
        gamma[1][0][2] = 1.0;
        gamma[2][0][1] = 1.0; // symmetric spatial block
        assert!(matches!(
            connection_form(&gamma),
            Err(Error::NotSo103Valued { .. })
        ));
    }
}
