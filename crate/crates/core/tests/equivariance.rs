//! Equivariance of the gamma representation under the spin group: since
//! theta is an algebra homomorphism, conjugating a generator image by
//! theta(s) must reproduce the pushforward of Clifford conjugation, which
//! relates to the covering matrix rho'(s) by the intertwiner
//! `D = diag(-1,1,1,1)` (the boost row changes sign).

#![allow(clippy::needless_range_loop)]

use ll_core::linalg::{self, Mat4c};
use ll_core::spinor::GammaSet;
use ll_core::{Spin103Element, Spin3Element};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn combine(gammas: &GammaSet, coeffs: [f64; 4]) -> Mat4c {
    let mut out = linalg::mat4c_zero();
    for a in 0..4 {
        out = linalg::mat4c_add(
            &out,
            &linalg::mat4c_scale(&gammas.gamma[a], Complex64::new(coeffs[a], 0.0)),
        );
    }
    out
}

#[test]
fn gamma_conjugation_follows_the_intertwined_cover() {
    let gammas = GammaSet::standard();
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    for _ in 0..500 {
        let s = Spin3Element::from_unnormalized(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
        .unwrap();
        let g = Spin103Element::new(
            s,
            [
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            ],
        );
        let ts = gammas.theta(&g.embed());
        let tsi = gammas.theta(&g.inverse().embed());
        let phi = g.rho_prime();
        let m = phi.matrix();
        for b in 0..4 {
            let lhs = linalg::mat4c_mul(&linalg::mat4c_mul(&ts, &gammas.gamma[b]), &tsi);
            // column b of D rho' D
            let mut col = [0.0; 4];
            for a in 0..4 {
                let d = if (a == 0) ^ (b == 0) { -1.0 } else { 1.0 };
                col[a] = d * m[a][b];
            }
            let rhs = combine(&gammas, col);
            assert!(
                linalg::mat4c_max_abs_diff(&lhs, &rhs) < 1e-11,
                "generator {b} not equivariant"
            );
        }
    }
}

#[test]
fn conjugation_by_a_pure_boost_mixes_gamma0_into_gammas() {
    // s = 1 + v f: theta(s) gamma_i theta(s)^-1 = gamma_i - 2 v_i gamma_0,
    // while gamma_0 itself is fixed.
    let gammas = GammaSet::standard();
    let v = [0.7, -0.4, 1.2];
    let g = Spin103Element::new(Spin3Element::identity(), v);
    let ts = gammas.theta(&g.embed());
    let tsi = gammas.theta(&g.inverse().embed());

    let g0 = linalg::mat4c_mul(&linalg::mat4c_mul(&ts, &gammas.gamma[0]), &tsi);
    assert!(linalg::mat4c_max_abs_diff(&g0, &gammas.gamma[0]) < 1e-14);

    for i in 0..3 {
        let gi = linalg::mat4c_mul(&linalg::mat4c_mul(&ts, &gammas.gamma[i + 1]), &tsi);
        let mut coeffs = [0.0; 4];
        coeffs[0] = -2.0 * v[i];
        coeffs[i + 1] = 1.0;
        let expected = combine(&gammas, coeffs);
        assert!(
            linalg::mat4c_max_abs_diff(&gi, &expected) < 1e-13,
            "i = {i}"
        );
    }
}
