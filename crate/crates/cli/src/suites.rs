//! Verification suites, one per acceptance area. `ll-cli verify` prints one
//! row per suite; the acceptance test target runs the same functions.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ll_core::linalg::{self, Vec4};
use ll_core::nc::{
    self, adapted_frame, compatibility_at, NCField, NCPointData, PointField, Potential,
};
use ll_core::spin::d_rho_prime;
use ll_core::spinor::GammaSet;
use ll_core::{
    blade_mul, BladeMask, Multivector, So103Element, Spin103AlgebraElement, Spin103Element,
    Spin3Element,
};

use crate::analytic::{constant_factor, GaussianPacket1D, ProductWave3D};
use crate::flat::{default_reduce_points, planewave_check, reduce_check};
use crate::solver::{evolve_wavepacket, time_error, SolverParams};

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl SuiteResult {
    fn pass(name: &'static str, detail: String) -> Self {
        SuiteResult {
            name,
            pass: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        SuiteResult {
            name,
            pass: false,
            detail,
        }
    }
}

pub fn run_all() -> Vec<SuiteResult> {
    vec![
        clifford_suite(),
        group_suite(),
        lie_suite(),
        tensor_suite(),
        representation_suite(),
        flat_ll_suite(),
        solver_suite(),
    ]
}

// ---------------------------------------------------------------------------
// 1. Clifford
// ---------------------------------------------------------------------------

/// Independent blade-product oracle: concatenate generator lists, bubble
/// sort with swap counting, contract duplicates with the metric square.
fn oracle_blade_mul(a: u8, b: u8) -> (f64, u8) {
    let mut gens: Vec<usize> = (0..4)
        .filter(|&i| a & (1 << i) != 0)
        .chain((0..4).filter(|&i| b & (1 << i) != 0))
        .collect();
    let mut sign = 1.0f64;
    loop {
        let mut swapped = false;
        for k in 0..gens.len().saturating_sub(1) {
            if gens[k] > gens[k + 1] {
                gens.swap(k, k + 1);
                sign = -sign;
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let mut mask = 0u8;
    let mut k = 0;
    while k < gens.len() {
        if k + 1 < gens.len() && gens[k] == gens[k + 1] {
            sign *= if gens[k] == 0 { 0.0 } else { 1.0 };
            k += 2;
        } else {
            mask |= 1 << gens[k];
            k += 1;
        }
    }
    if sign == 0.0 {
        mask = 0;
    }
    (sign, mask)
}

fn random_multivector(rng: &mut impl Rng) -> Multivector {
    let mut m = Multivector::ZERO;
    for i in 0..16 {
        m.coeffs[i] = rng.gen_range(-2.0..2.0);
    }
    m
}

pub fn clifford_suite() -> SuiteResult {
    const NAME: &str = "clifford";
    // full 16x16 table against the oracle
    for a in 0..16u8 {
        for b in 0..16u8 {
            let (sign, mask) = blade_mul(BladeMask(a), BladeMask(b));
            let (osign, omask) = oracle_blade_mul(a, b);
            if sign != osign || (osign != 0.0 && mask.0 != omask) {
                return SuiteResult::fail(NAME, format!("table mismatch at {a:#06b} * {b:#06b}"));
            }
        }
    }
    // f^2 = 0 and generator anticommutation, exact
    let f = Multivector::f();
    if f.gp(&f) != Multivector::ZERO {
        return SuiteResult::fail(NAME, "f^2 != 0".into());
    }
    for i in 1..=3usize {
        for j in 1..=3usize {
            let anti =
                Multivector::e(i).gp(&Multivector::e(j)) + Multivector::e(j).gp(&Multivector::e(i));
            let target = if i == j {
                Multivector::scalar(2.0)
            } else {
                Multivector::ZERO
            };
            if anti != target {
                return SuiteResult::fail(NAME, format!("e{i} e{j} anticommutation broken"));
            }
        }
        let anti = Multivector::e(i).gp(&f) + f.gp(&Multivector::e(i));
        if anti != Multivector::ZERO {
            return SuiteResult::fail(NAME, format!("f e{i} anticommutation broken"));
        }
    }
    // associativity on random triples
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let a = random_multivector(&mut rng);
        let b = random_multivector(&mut rng);
        let c = random_multivector(&mut rng);
        let diff = a.gp(&b).gp(&c).max_abs_diff(&a.gp(&b.gp(&c)));
        worst = worst.max(diff);
    }
    if worst > 1e-12 {
        return SuiteResult::fail(NAME, format!("associativity residual {worst:e}"));
    }
    SuiteResult::pass(NAME, format!("table exact, associativity <= {worst:e}"))
}

// ---------------------------------------------------------------------------
// 2. Group
// ---------------------------------------------------------------------------

fn random_spin103(rng: &mut impl Rng) -> Spin103Element {
    let s = Spin3Element::from_unnormalized(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
    .expect("nonzero");
    Spin103Element::new(
        s,
        [
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ],
    )
}

pub fn group_suite() -> SuiteResult {
    const NAME: &str = "group";
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let id = Spin103Element::identity().embed();
    let mut worst_mul = 0.0f64;
    let mut worst_inv = 0.0f64;
    let mut worst_hom = 0.0f64;
    let mut worst_galilei = 0.0f64;
    let mut worst_center = 0.0f64;
    for _ in 0..10_000 {
        let g = random_spin103(&mut rng);
        let h = random_spin103(&mut rng);

        // closed-form product vs the Clifford-product oracle
        worst_mul = worst_mul.max(g.mul(&h).embed().max_abs_diff(&g.embed().gp(&h.embed())));
        // inverse law
        worst_inv = worst_inv.max(g.mul(&g.inverse()).embed().max_abs_diff(&id));
        // rho' homomorphism
        let lhs = g.mul(&h).rho_prime();
        let rhs = linalg::mat4_mul(g.rho_prime().matrix(), h.rho_prime().matrix());
        worst_hom = worst_hom.max(linalg::mat4_max_abs(&linalg::mat4_sub(lhs.matrix(), &rhs)));
        // Galilei invariants of the image
        worst_galilei = worst_galilei.max(g.rho_prime().invariant_residual());
        // 2:1 kernel
        let diff = linalg::mat4_max_abs(&linalg::mat4_sub(
            g.rho_prime().matrix(),
            g.neg().rho_prime().matrix(),
        ));
        worst_center = worst_center.max(diff);
    }
    if worst_mul > 1e-12 {
        return SuiteResult::fail(NAME, format!("spin_mul vs Clifford oracle {worst_mul:e}"));
    }
    if worst_inv > 1e-10 {
        return SuiteResult::fail(NAME, format!("inverse law residual {worst_inv:e}"));
    }
    if worst_hom > 1e-10 {
        return SuiteResult::fail(NAME, format!("rho' homomorphism residual {worst_hom:e}"));
    }
    if worst_center > 1e-12 {
        return SuiteResult::fail(NAME, format!("rho'(+/-s) differ by {worst_center:e}"));
    }
    if worst_galilei > 1e-12 {
        return SuiteResult::fail(
            NAME,
            format!("Galilei invariant residual {worst_galilei:e}"),
        );
    }
    SuiteResult::pass(
        NAME,
        format!("10^4 pairs: mul {worst_mul:e}, hom {worst_hom:e}, invariants {worst_galilei:e}"),
    )
}

// ---------------------------------------------------------------------------
// 3. Lie
// ---------------------------------------------------------------------------

pub fn lie_suite() -> SuiteResult {
    const NAME: &str = "lie";
    let basis = [
        Spin103AlgebraElement::fe(1),
        Spin103AlgebraElement::fe(2),
        Spin103AlgebraElement::fe(3),
        Spin103AlgebraElement::eij(1, 2),
        Spin103AlgebraElement::eij(1, 3),
        Spin103AlgebraElement::eij(2, 3),
    ];
    let mut pairs = 0;
    for i in 0..6 {
        for j in (i + 1)..6 {
            let x = &basis[i];
            let y = &basis[j];
            let upstairs = match x.lie_bracket(y) {
                Ok(b) => b,
                Err(e) => return SuiteResult::fail(NAME, format!("spin bracket failed: {e}")),
            };
            let downstairs = match d_rho_prime(x).lie_bracket(&d_rho_prime(y)) {
                Ok(b) => b,
                Err(e) => return SuiteResult::fail(NAME, format!("so bracket failed: {e}")),
            };
            if d_rho_prime(&upstairs).max_abs_diff(&downstairs) != 0.0 {
                return SuiteResult::fail(NAME, format!("basis pair ({i},{j}) not intertwined"));
            }
            pairs += 1;
        }
    }
    // boost-boost brackets vanish exactly
    for i in 1..=3 {
        for j in 1..=3 {
            let b = Spin103AlgebraElement::fe(i)
                .lie_bracket(&Spin103AlgebraElement::fe(j))
                .expect("closes");
            if b.max_abs_diff(&Spin103AlgebraElement::zero()) != 0.0 {
                return SuiteResult::fail(NAME, format!("[fe{i}, fe{j}] != 0"));
            }
        }
    }
    SuiteResult::pass(NAME, format!("{pairs} basis pairs intertwined exactly"))
}

// ---------------------------------------------------------------------------
// 4. Tensors
// ---------------------------------------------------------------------------

/// Random valid Newton-Cartan point data: boost the flat model by a random
/// clock vector and install a random SPD spatial metric on its kernel
/// coframe `theta^i = dx^i - w^i dt`.
pub fn random_nc_data(rng: &mut impl Rng) -> NCPointData {
    let w = [
        rng.gen_range(-1.5..1.5),
        rng.gen_range(-1.5..1.5),
        rng.gen_range(-1.5..1.5),
    ];
    let mut a = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            a[i][j] = rng.gen_range(-1.0..1.0);
        }
    }
    // SPD: A A^t + 0.3 I
    let mut m = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                m[i][j] += a[i][k] * a[j][k];
            }
        }
        m[i][i] += 0.3;
    }
    // theta^i components: theta^i_0 = -w_i, theta^i_j = delta_ij
    let theta = |i: usize, mu: usize| -> f64 {
        if mu == 0 {
            -w[i]
        } else if mu == i + 1 {
            1.0
        } else {
            0.0
        }
    };
    let mut g = [[0.0f64; 4]; 4];
    for mu in 0..4 {
        for nu in 0..4 {
            for i in 0..3 {
                for j in 0..3 {
                    g[mu][nu] += m[i][j] * theta(i, mu) * theta(j, nu);
                }
            }
        }
    }
    NCPointData {
        g,
        tau: [1.0, 0.0, 0.0, 0.0],
        v: [1.0, w[0], w[1], w[2]],
        gamma: [[[0.0; 4]; 4]; 4],
    }
}

/// The warped-but-flat field used to expose the FD truncation error of the
/// compatibility check: `g_11 = a(x)^2`, `Gamma^1_11 = a'/a`, exactly
/// compatible, so the residual is pure second-order truncation.
pub struct WarpedFlat;

impl PointField for WarpedFlat {
    fn data_at(&self, p: Vec4) -> ll_core::error::Result<NCPointData> {
        let x = p[1];
        let a = 1.0 + 0.3 * x.sin();
        let da = 0.3 * x.cos();
        let mut data = NCPointData::flat();
        data.g[1][1] = a * a;
        data.gamma[1][1][1] = da / a;
        Ok(data)
    }
}

pub fn tensor_suite() -> SuiteResult {
    const NAME: &str = "tensors";
    // flat preset: gbar = I4, h = diag(0,1,1,1) exactly
    let flat = NCPointData::flat();
    let gb = match nc::gbar(&flat) {
        Ok(v) => v,
        Err(e) => return SuiteResult::fail(NAME, format!("flat gbar: {e}")),
    };
    if gb != linalg::mat4_identity() {
        return SuiteResult::fail(NAME, "flat gbar is not the identity".into());
    }
    let hb = nc::hbar(&gb).expect("identity inverts");
    let h = match nc::hfield(&flat, &hb) {
        Ok(v) => v,
        Err(e) => return SuiteResult::fail(NAME, format!("flat h: {e}")),
    };
    let mut h_expected = linalg::mat4_identity();
    h_expected[0][0] = 0.0;
    if h != h_expected {
        return SuiteResult::fail(NAME, "flat h is not diag(0,1,1,1)".into());
    }

    // random valid data: hbar gbar = I and h g = delta - V tau
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut worst_inv = 0.0f64;
    let mut worst_id = 0.0f64;
    for _ in 0..200 {
        let data = random_nc_data(&mut rng);
        if !data.validate().all_pass() {
            return SuiteResult::fail(NAME, "random sample failed validation".into());
        }
        let gb = nc::gbar(&data).expect("nondegenerate");
        let hb = match nc::hbar(&gb) {
            Ok(v) => v,
            Err(e) => return SuiteResult::fail(NAME, format!("hbar: {e}")),
        };
        let prod = linalg::mat4_mul(&hb, &gb);
        worst_inv = worst_inv.max(linalg::mat4_max_abs(&linalg::mat4_sub(
            &prod,
            &linalg::mat4_identity(),
        )));
        // hfield internally enforces h g = delta - V tau at 1e-10
        match nc::hfield(&data, &hb) {
            Ok(hmat) => {
                let hg = linalg::mat4_mul(&hmat, &data.g);
                for i in 0..4 {
                    for j in 0..4 {
                        let target = if i == j { 1.0 } else { 0.0 } - data.v[i] * data.tau[j];
                        worst_id = worst_id.max((hg[i][j] - target).abs());
                    }
                }
            }
            Err(e) => return SuiteResult::fail(NAME, format!("hfield: {e}")),
        }
        // adapted frame invariants while we are here
        match adapted_frame(&data) {
            Ok(frame) => {
                if frame.invariant_residual(&data) > 1e-10 {
                    return SuiteResult::fail(NAME, "adapted frame invariants broken".into());
                }
            }
            Err(e) => return SuiteResult::fail(NAME, format!("adapted_frame: {e}")),
        }
    }
    if worst_inv > 1e-10 || worst_id > 1e-10 {
        return SuiteResult::fail(
            NAME,
            format!("identity residuals: hbar*gbar {worst_inv:e}, h*g {worst_id:e}"),
        );
    }

    // newtonian preset compatibility at fd_step 1e-3
    let field = NCField::Newtonian(Potential {
        monomials: vec![
            ll_core::nc::Monomial {
                coeff: 0.5,
                powers: [0, 2, 0, 0],
            },
            ll_core::nc::Monomial {
                coeff: -0.2,
                powers: [0, 1, 1, 0],
            },
        ],
    });
    let compat = match field.compatibility(1e-3) {
        Ok(r) => r,
        Err(e) => return SuiteResult::fail(NAME, format!("compatibility: {e}")),
    };
    if compat.max() > 1e-8 {
        return SuiteResult::fail(NAME, format!("newtonian residual {:e}", compat.max()));
    }

    // FD second-order convergence. The newtonian residual is identically
    // zero (constant tensors), so the halving ratio is measured on the
    // warped compatible field where truncation error is nonzero.
    let p = [0.0, 0.7, 0.0, 0.0];
    let r1 = compatibility_at(&WarpedFlat, p, [0.02; 4])
        .expect("warped")
        .spatial;
    let r2 = compatibility_at(&WarpedFlat, p, [0.01; 4])
        .expect("warped")
        .spatial;
    if r1 < 1e-9 {
        return SuiteResult::fail(NAME, "warped residual too small to measure ratio".into());
    }
    let ratio = r1 / r2;
    if !(3.5..=4.5).contains(&ratio) {
        return SuiteResult::fail(NAME, format!("FD halving ratio {ratio}"));
    }
    SuiteResult::pass(
        NAME,
        format!(
            "flat exact; identities <= {:e}; newtonian residual {:e}; FD ratio {ratio:.2}",
            worst_inv.max(worst_id),
            compat.max()
        ),
    )
}

// ---------------------------------------------------------------------------
// 5. Representation
// ---------------------------------------------------------------------------

pub fn representation_suite() -> SuiteResult {
    const NAME: &str = "representation";
    let gammas = GammaSet::standard();
    if gammas.invariant_residual() != 0.0 {
        return SuiteResult::fail(NAME, "gamma relations not exact".into());
    }
    // homomorphism on 1000 random pairs
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let a = random_multivector(&mut rng);
        let b = random_multivector(&mut rng);
        let lhs = gammas.theta(&a.gp(&b));
        let rhs = linalg::mat4c_mul(&gammas.theta(&a), &gammas.theta(&b));
        worst = worst.max(linalg::mat4c_max_abs_diff(&lhs, &rhs));
    }
    if worst > 1e-12 {
        return SuiteResult::fail(NAME, format!("theta homomorphism residual {worst:e}"));
    }
    // two-path lift, exact on the six basis directions
    let so_basis = [
        So103Element::e0(1),
        So103Element::e0(2),
        So103Element::e0(3),
        So103Element::eij(1, 2),
        So103Element::eij(1, 3),
        So103Element::eij(2, 3),
    ];
    for (i, phi) in so_basis.iter().enumerate() {
        let explicit = gammas.lift(phi);
        let factored = gammas.theta(&ll_core::spin::d_rho_prime_inv(phi).embed());
        if linalg::mat4c_max_abs_diff(&explicit, &factored) != 0.0 {
            return SuiteResult::fail(NAME, format!("two-path lift differs on basis {i}"));
        }
    }
    SuiteResult::pass(
        NAME,
        format!("invariants exact, theta hom <= {worst:e}, lift exact"),
    )
}

// ---------------------------------------------------------------------------
// 6. Flat Levy-Leblond
// ---------------------------------------------------------------------------

pub fn flat_ll_suite() -> SuiteResult {
    const NAME: &str = "flat-ll";
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut worst_exact = 0.0f64;
    let mut worst_margin = f64::INFINITY;
    for _ in 0..100 {
        let k = [
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ];
        let mass = rng.gen_range(0.5..2.0);
        // random unit 2-spinor
        let raw = [
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        ];
        let norm = (raw[0].norm_sqr() + raw[1].norm_sqr()).sqrt().max(1e-9);
        let u2 = [raw[0] / norm, raw[1] / norm];

        let r = planewave_check(k, mass, 0.0, u2).expect("valid mass");
        worst_exact = worst_exact.max(r);

        let delta_e = rng.gen_range(0.01..0.1);
        let r = planewave_check(k, mass, delta_e, u2).expect("valid mass");
        worst_margin = worst_margin.min(r / delta_e);
    }
    if worst_exact > 1e-12 {
        return SuiteResult::fail(NAME, format!("on-dispersion residual {worst_exact:e}"));
    }
    if worst_margin < 0.4 {
        return SuiteResult::fail(
            NAME,
            format!("dispersion-perturbation margin {worst_margin} < 0.4"),
        );
    }
    // reduce_check on the analytic Gaussian family
    for &(sigma0, k0, m) in &[(1.0, 1.0, 1.0), (0.8, -0.6, 1.5), (1.4, 0.0, 0.7)] {
        let packet = GaussianPacket1D {
            sigma0,
            k0,
            x0: 0.2,
            mass: m,
        };
        let wave = ProductWave3D {
            factors: [
                Box::new(move |x, t| packet.derivs(x, t)),
                Box::new(constant_factor()),
                Box::new(constant_factor()),
            ],
        };
        let r = reduce_check(&wave, m, &default_reduce_points()).expect("valid mass");
        if r.ll_max > 1e-10 || r.schrodinger_max > 1e-10 {
            return SuiteResult::fail(
                NAME,
                format!(
                    "gaussian family residuals ll {:e} schr {:e}",
                    r.ll_max, r.schrodinger_max
                ),
            );
        }
    }
    SuiteResult::pass(
        NAME,
        format!("planewave {worst_exact:e}, margin {worst_margin:.2}, gaussian family ok"),
    )
}

// ---------------------------------------------------------------------------
// 7. Solver
// ---------------------------------------------------------------------------

pub fn solver_suite() -> SuiteResult {
    const NAME: &str = "solver";
    let p = SolverParams {
        mass: 1.0,
        grid_points: 512,
        dx: 0.05,
        dt: 0.001,
        steps: 1000,
        sigma0: 1.0,
        k0: 1.0,
        x0: 12.8,
        output_every: 250,
    };
    let out = match evolve_wavepacket(&p) {
        Ok(o) => o,
        Err(e) => return SuiteResult::fail(NAME, format!("reference run failed: {e}")),
    };
    if out.l2_error > 1e-4 {
        return SuiteResult::fail(NAME, format!("L2 error {:e} > 1e-4", out.l2_error));
    }
    if out.norm_drift > 1e-10 {
        return SuiteResult::fail(NAME, format!("norm drift {:e} > 1e-10", out.norm_drift));
    }
    // dt second-order convergence on a shorter horizon (time error isolated
    // by Richardson self-comparison; see solver::time_error)
    let mut ps = p;
    ps.steps = 200;
    let e1 = match time_error(&ps) {
        Ok(e) => e,
        Err(e) => return SuiteResult::fail(NAME, format!("convergence run failed: {e}")),
    };
    let mut ps2 = ps;
    ps2.dt /= 2.0;
    ps2.steps *= 2;
    let e2 = match time_error(&ps2) {
        Ok(e) => e,
        Err(e) => return SuiteResult::fail(NAME, format!("convergence run failed: {e}")),
    };
    let ratio = e1 / e2;
    if !(3.5..=4.5).contains(&ratio) {
        return SuiteResult::fail(NAME, format!("dt halving ratio {ratio}"));
    }
    SuiteResult::pass(
        NAME,
        format!(
            "L2 error {:e}, drift {:e}, dt ratio {ratio:.2}",
            out.l2_error, out.norm_drift
        ),
    )
}
