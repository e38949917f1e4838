//! The Galilei group SO(1,0,3), its double cover SPIN(1,0,3) inside
//! Cl(1,0,3), both Lie algebras and the maps between them.
//!
//! Convention note: the covering map is implemented in the matrix form
//! `[[1, 2v], [0, rho(s)]]` with `v` entering the boost row, and the
//! differential sends `e_i e_j -> 2 E_ij`, `f e_i -> -2 E_0i`. The
//! pushforward of plain Clifford conjugation `x -> s x s^{-1}` differs from
//! this matrix by the intertwiner `diag(-1,1,1,1)` (the boost row flips
//! sign); see [`Spin103Element::conjugation_matrix`].

use crate::clifford::{BladeMask, Multivector};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat3, Mat4, Vec3};
use crate::tol;

/// Blade masks of the even generators used by the spin elements.
const M_E12: BladeMask = BladeMask(0b0110);
const M_E13: BladeMask = BladeMask(0b1010);
const M_E23: BladeMask = BladeMask(0b1100);
const M_FE1: BladeMask = BladeMask(0b0011);
const M_FE2: BladeMask = BladeMask(0b0101);
const M_FE3: BladeMask = BladeMask(0b1001);

/// A unit even element of the Clifford algebra on `span{e1,e2,e3}`:
/// `a + b12 e1e2 + b13 e1e3 + b23 e2e3` with unit norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spin3Element {
    pub a: f64,
    pub b12: f64,
    pub b13: f64,
    pub b23: f64,
}

impl Spin3Element {
    pub fn identity() -> Self {
        Spin3Element {
            a: 1.0,
            b12: 0.0,
            b13: 0.0,
            b23: 0.0,
        }
    }

    /// Strict constructor: rejects drift beyond [`tol::RENORM_MAX`] and
    /// renormalizes anything smaller.
    pub fn new(a: f64, b12: f64, b13: f64, b23: f64) -> Result<Self> {
        let n2 = a * a + b12 * b12 + b13 * b13 + b23 * b23;
        let drift = libm::fabs(n2 - 1.0);
        if drift > tol::RENORM_MAX {
            return Err(Error::InvalidElement {
                norm: libm::sqrt(n2),
            });
        }
        let s = if drift > tol::EXACT {
            1.0 / libm::sqrt(n2)
        } else {
            1.0
        };
        Ok(Spin3Element {
            a: a * s,
            b12: b12 * s,
            b13: b13 * s,
            b23: b23 * s,
        })
    }

    /// Normalize arbitrary components onto the unit sphere. Used for
    /// sampling; fails only on the zero element.
    pub fn from_unnormalized(a: f64, b12: f64, b13: f64, b23: f64) -> Result<Self> {
        let n = libm::sqrt(a * a + b12 * b12 + b13 * b13 + b23 * b23);
        if n < 1e-300 {
            return Err(Error::InvalidElement { norm: 0.0 });
        }
        Ok(Spin3Element {
            a: a / n,
            b12: b12 / n,
            b13: b13 / n,
            b23: b23 / n,
        })
    }

    /// Rotor for a rotation by `angle` in the `e_i e_j` plane (i < j),
    /// oriented so conjugation carries `e_i` toward `e_j`.
    pub fn rotor(plane: (usize, usize), angle: f64) -> Self {
        let c = libm::cos(angle / 2.0);
        let s = -libm::sin(angle / 2.0);
        match plane {
            (1, 2) => Spin3Element {
                a: c,
                b12: s,
                b13: 0.0,
                b23: 0.0,
            },
            (1, 3) => Spin3Element {
                a: c,
                b12: 0.0,
                b13: s,
                b23: 0.0,
            },
            (2, 3) => Spin3Element {
                a: c,
                b12: 0.0,
                b13: 0.0,
                b23: s,
            },
            _ => panic!("plane must be one of (1,2), (1,3), (2,3)"),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a * self.a + self.b12 * self.b12 + self.b13 * self.b13 + self.b23 * self.b23
    }

    /// Embedding as an even multivector of Cl(1,0,3).
    pub fn embed(&self) -> Multivector {
        let mut m = Multivector::scalar(self.a);
        m.set(M_E12, self.b12);
        m.set(M_E13, self.b13);
        m.set(M_E23, self.b23);
        m
    }

    /// Product in the even subalgebra (quaternion-like structure constants).
    pub fn mul(&self, o: &Spin3Element) -> Spin3Element {
        Spin3Element {
            a: self.a * o.a - self.b12 * o.b12 - self.b13 * o.b13 - self.b23 * o.b23,
            b12: self.a * o.b12 + self.b12 * o.a - self.b13 * o.b23 + self.b23 * o.b13,
            b13: self.a * o.b13 + self.b13 * o.a + self.b12 * o.b23 - self.b23 * o.b12,
            b23: self.a * o.b23 + self.b23 * o.a - self.b12 * o.b13 + self.b13 * o.b12,
        }
    }

    /// Inverse of a unit even element is its reversion.
    pub fn inverse(&self) -> Spin3Element {
        Spin3Element {
            a: self.a,
            b12: -self.b12,
            b13: -self.b13,
            b23: -self.b23,
        }
    }

    pub fn neg(&self) -> Spin3Element {
        Spin3Element {
            a: -self.a,
            b12: -self.b12,
            b13: -self.b13,
            b23: -self.b23,
        }
    }
}

/// The covering map SPIN(3) -> SO(3): column `j` of the result holds the
/// spatial coefficients of `s e_j s^{-1}`.
pub fn rho(s: &Spin3Element) -> Mat3 {
    let se = s.embed();
    let si = s.inverse().embed();
    let mut r = [[0.0; 3]; 3];
    for j in 0..3 {
        let col = se.gp(&Multivector::e(j + 1)).gp(&si);
        for i in 0..3 {
            r[i][j] = col.get(BladeMask(1 << (i + 1)));
        }
    }
    r
}

/// An element `s(1 + vf)` of SPIN(1,0,3), stored as the pair `(s, v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spin103Element {
    pub s: Spin3Element,
    pub v: Vec3,
}

impl Spin103Element {
    pub fn new(s: Spin3Element, v: Vec3) -> Self {
        Spin103Element { s, v }
    }

    pub fn identity() -> Self {
        Spin103Element {
            s: Spin3Element::identity(),
            v: [0.0; 3],
        }
    }

    pub fn neg(&self) -> Spin103Element {
        Spin103Element {
            s: self.s.neg(),
            v: self.v,
        }
    }

    /// The multivector `s (1 + v f)`.
    pub fn embed(&self) -> Multivector {
        let vf = Multivector::vector(self.v).gp(&Multivector::f());
        self.s.embed().gp(&(Multivector::one() + vf))
    }

    /// Group law: `(s, v)(s', v') = (s s', v' + rho(s'^{-1})(v))`.
    pub fn mul(&self, o: &Spin103Element) -> Spin103Element {
        let r_inv = rho(&o.s.inverse());
        let rv = linalg::mat3_apply(&r_inv, &self.v);
        Spin103Element {
            s: self.s.mul(&o.s),
            v: [o.v[0] + rv[0], o.v[1] + rv[1], o.v[2] + rv[2]],
        }
    }

    /// Inverse: `(s^{-1}, -rho(s)(v))`.
    pub fn inverse(&self) -> Spin103Element {
        let rv = linalg::mat3_apply(&rho(&self.s), &self.v);
        Spin103Element {
            s: self.s.inverse(),
            v: [-rv[0], -rv[1], -rv[2]],
        }
    }

    /// The 2:1 covering map in matrix form: `[[1, 2v], [0, rho(s)]]`.
    pub fn rho_prime(&self) -> GalileiMatrix {
        let r = rho(&self.s);
        let mut phi = linalg::mat4_identity();
        for j in 0..3 {
            phi[0][j + 1] = 2.0 * self.v[j];
            for i in 0..3 {
                phi[i + 1][j + 1] = r[i][j];
            }
            phi[j + 1][0] = 0.0;
        }
        GalileiMatrix::new_unchecked(phi)
    }

    /// Pushforward of Clifford conjugation: column `b` holds the
    /// coefficients of `s x_b s^{-1}` on `(f, e1, e2, e3)`.
    ///
    /// Equals `D * rho_prime * D` with `D = diag(-1,1,1,1)`.
    pub fn conjugation_matrix(&self) -> Mat4 {
        let se = self.embed();
        let si = self.inverse().embed();
        let basis = [
            Multivector::f(),
            Multivector::e(1),
            Multivector::e(2),
            Multivector::e(3),
        ];
        let masks = [BladeMask::F, BladeMask::E1, BladeMask::E2, BladeMask::E3];
        let mut m = linalg::mat4_zero();
        for (j, x) in basis.iter().enumerate() {
            let img = se.gp(x).gp(&si);
            for (i, mask) in masks.iter().enumerate() {
                m[i][j] = img.get(*mask);
            }
        }
        m
    }
}

/// A Galilei matrix: block form `[[1, A], [0, R]]` with `R` in SO(3),
/// preserving `G = diag(0,1,1,1)` and fixing the radical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GalileiMatrix(Mat4);

impl GalileiMatrix {
    /// Validating constructor.
    pub fn new(m: Mat4) -> Result<Self> {
        let residual = linalg::galilei_residual(&m);
        if residual > tol::EXACT {
            return Err(Error::NotGalilei { residual });
        }
        Ok(GalileiMatrix(m))
    }

    pub(crate) fn new_unchecked(m: Mat4) -> Self {
        debug_assert!(linalg::galilei_residual(&m) <= tol::ACCUMULATED);
        GalileiMatrix(m)
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    /// Boost row `A`.
    pub fn boost(&self) -> Vec3 {
        [self.0[0][1], self.0[0][2], self.0[0][3]]
    }

    /// Rotation block `R`.
    pub fn rotation(&self) -> Mat3 {
        let mut r = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                r[i][j] = self.0[i + 1][j + 1];
            }
        }
        r
    }

    pub fn invariant_residual(&self) -> f64 {
        linalg::galilei_residual(&self.0)
    }
}

/// Element of so(1,0,3): boost row `a` on `E_01..E_03` plus an antisymmetric
/// rotation block `r` on `E_12, E_13, E_23`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct So103Element {
    pub a: Vec3,
    pub r: Mat3,
}

impl So103Element {
    pub fn zero() -> Self {
        So103Element {
            a: [0.0; 3],
            r: [[0.0; 3]; 3],
        }
    }

    /// From boost coefficients and the three independent rotation
    /// coefficients `(w12, w13, w23)` on `E_12, E_13, E_23`.
    pub fn from_coeffs(a: Vec3, w: Vec3) -> Self {
        let r = [[0.0, w[0], w[1]], [-w[0], 0.0, w[2]], [-w[1], -w[2], 0.0]];
        So103Element { a, r }
    }

    /// Basis element `E_0i` for `i` in `1..=3`.
    pub fn e0(i: usize) -> Self {
        let mut a = [0.0; 3];
        a[i - 1] = 1.0;
        So103Element {
            a,
            r: [[0.0; 3]; 3],
        }
    }

    /// Basis element `E_ij` for `1 <= i < j <= 3`.
    pub fn eij(i: usize, j: usize) -> Self {
        assert!(i < j && (1..=3).contains(&i) && j <= 3);
        let mut r = [[0.0; 3]; 3];
        r[i - 1][j - 1] = 1.0;
        r[j - 1][i - 1] = -1.0;
        So103Element { a: [0.0; 3], r }
    }

    /// The coefficients on `(E_12, E_13, E_23)`.
    pub fn rotation_coeffs(&self) -> Vec3 {
        [self.r[0][1], self.r[0][2], self.r[1][2]]
    }

    /// Assemble the 4x4 matrix `[[0, a], [0, r]]`.
    pub fn as_matrix(&self) -> Mat4 {
        let mut m = linalg::mat4_zero();
        for j in 0..3 {
            m[0][j + 1] = self.a[j];
            for i in 0..3 {
                m[i + 1][j + 1] = self.r[i][j];
            }
        }
        m
    }

    /// Decompose a 4x4 matrix; errors if it is not of the algebra form.
    pub fn from_matrix(m: &Mat4, tolerance: f64) -> Result<Self> {
        let mut residual = libm::fabs(m[0][0]);
        for i in 1..4 {
            residual = residual.max(libm::fabs(m[i][0]));
        }
        for i in 0..3 {
            for j in 0..3 {
                residual = residual.max(libm::fabs(m[i + 1][j + 1] + m[j + 1][i + 1]) / 2.0);
            }
        }
        if residual > tolerance {
            return Err(Error::NotSo103Valued { residual });
        }
        let mut r = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                r[i][j] = (m[i + 1][j + 1] - m[j + 1][i + 1]) / 2.0;
            }
        }
        Ok(So103Element {
            a: [m[0][1], m[0][2], m[0][3]],
            r,
        })
    }

    /// Matrix commutator; closed in the algebra by the block structure.
    pub fn lie_bracket(&self, other: &So103Element) -> Result<So103Element> {
        let x = self.as_matrix();
        let y = other.as_matrix();
        let comm = linalg::mat4_sub(&linalg::mat4_mul(&x, &y), &linalg::mat4_mul(&y, &x));
        So103Element::from_matrix(&comm, tol::EXACT).map_err(|_| Error::BracketNotClosed {
            residual: linalg::mat4_max_abs(&comm),
        })
    }

    pub fn max_abs_diff(&self, other: &So103Element) -> f64 {
        let mut m = 0.0f64;
        for i in 0..3 {
            m = m.max(libm::fabs(self.a[i] - other.a[i]));
            for j in 0..3 {
                m = m.max(libm::fabs(self.r[i][j] - other.r[i][j]));
            }
        }
        m
    }
}

/// Element of spin(1,0,3): coefficients on `f e_i` and on the spatial
/// bivectors `(e1e2, e1e3, e2e3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spin103AlgebraElement {
    /// Coefficients on `f e_1, f e_2, f e_3`.
    pub b: Vec3,
    /// Coefficients on `e1e2, e1e3, e2e3`.
    pub c: Vec3,
}

impl Spin103AlgebraElement {
    pub fn zero() -> Self {
        Spin103AlgebraElement {
            b: [0.0; 3],
            c: [0.0; 3],
        }
    }

    pub fn new(b: Vec3, c: Vec3) -> Self {
        Spin103AlgebraElement { b, c }
    }

    /// Basis element `f e_i`.
    pub fn fe(i: usize) -> Self {
        let mut b = [0.0; 3];
        b[i - 1] = 1.0;
        Spin103AlgebraElement { b, c: [0.0; 3] }
    }

    /// Basis element `e_i e_j`, `1 <= i < j <= 3`.
    pub fn eij(i: usize, j: usize) -> Self {
        assert!(i < j && (1..=3).contains(&i) && j <= 3);
        let mut c = [0.0; 3];
        c[bivector_slot(i, j)] = 1.0;
        Spin103AlgebraElement { b: [0.0; 3], c }
    }

    pub fn embed(&self) -> Multivector {
        let mut m = Multivector::ZERO;
        m.set(M_FE1, self.b[0]);
        m.set(M_FE2, self.b[1]);
        m.set(M_FE3, self.b[2]);
        m.set(M_E12, self.c[0]);
        m.set(M_E13, self.c[1]);
        m.set(M_E23, self.c[2]);
        m
    }

    /// Extract from a multivector; any mass outside the six spanned blades
    /// above `tolerance` is a structural error.
    pub fn from_multivector(m: &Multivector, tolerance: f64) -> Result<Self> {
        let el = Spin103AlgebraElement {
            b: [m.get(M_FE1), m.get(M_FE2), m.get(M_FE3)],
            c: [m.get(M_E12), m.get(M_E13), m.get(M_E23)],
        };
        let residual = (*m - el.embed()).max_abs();
        if residual > tolerance {
            return Err(Error::BracketNotClosed { residual });
        }
        Ok(el)
    }

    /// Clifford commutator `xy - yx`, checked to stay inside the algebra.
    pub fn lie_bracket(&self, other: &Spin103AlgebraElement) -> Result<Spin103AlgebraElement> {
        let x = self.embed();
        let y = other.embed();
        let comm = x.gp(&y) - y.gp(&x);
        Spin103AlgebraElement::from_multivector(&comm, tol::EXACT)
    }

    pub fn max_abs_diff(&self, other: &Spin103AlgebraElement) -> f64 {
        let mut m = 0.0f64;
        for i in 0..3 {
            m = m.max(libm::fabs(self.b[i] - other.b[i]));
            m = m.max(libm::fabs(self.c[i] - other.c[i]));
        }
        m
    }
}

/// Slot of the pair `(i, j)` (1-based, i < j) in `(e1e2, e1e3, e2e3)`.
fn bivector_slot(i: usize, j: usize) -> usize {
    match (i, j) {
        (1, 2) => 0,
        (1, 3) => 1,
        (2, 3) => 2,
        _ => panic!("not an ordered bivector pair"),
    }
}

/// Differential of the covering map: `e_i e_j -> 2 E_ij`, `f e_i -> -2 E_0i`.
pub fn d_rho_prime(xi: &Spin103AlgebraElement) -> So103Element {
    So103Element::from_coeffs(
        [-2.0 * xi.b[0], -2.0 * xi.b[1], -2.0 * xi.b[2]],
        [2.0 * xi.c[0], 2.0 * xi.c[1], 2.0 * xi.c[2]],
    )
}

/// Inverse of [`d_rho_prime`]: `E_0i -> -1/2 f e_i`, `E_ij -> 1/2 e_i e_j`.
pub fn d_rho_prime_inv(phi: &So103Element) -> Spin103AlgebraElement {
    let w = phi.rotation_coeffs();
    Spin103AlgebraElement::new(
        [-0.5 * phi.a[0], -0.5 * phi.a[1], -0.5 * phi.a[2]],
        [0.5 * w[0], 0.5 * w[1], 0.5 * w[2]],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rotation_residual;

    #[test]
    fn spin3_mul_matches_clifford_product() {
        let s1 = Spin3Element::from_unnormalized(1.0, 2.0, -0.5, 0.25).unwrap();
        let s2 = Spin3Element::from_unnormalized(-0.3, 1.0, 4.0, -1.0).unwrap();
        let structured = s1.mul(&s2).embed();
        let clifford = s1.embed().gp(&s2.embed());
        assert!(structured.max_abs_diff(&clifford) < 1e-15);
    }

    #[test]
    fn rho_of_identity_and_center() {
        let id = rho(&Spin3Element::identity());
        let neg = rho(&Spin3Element::identity().neg());
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 1.0 } else { 0.0 };
                assert_eq!(id[i][j], target);
                assert_eq!(neg[i][j], target);
            }
        }
    }

    #[test]
    fn rho_rotor_is_plane_rotation() {
        let theta = 0.7;
        let r = rho(&Spin3Element::rotor((1, 2), theta));
        let (c, s) = (libm::cos(theta), libm::sin(theta));
        let expected = [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((r[i][j] - expected[i][j]).abs() < 1e-14, "{i}{j}");
            }
        }
        assert!(rotation_residual(&r) < 1e-14);
    }

    #[test]
    fn translations_compose_additively() {
        let t1 = Spin103Element::new(Spin3Element::identity(), [1.0, 2.0, 3.0]);
        let t2 = Spin103Element::new(Spin3Element::identity(), [-0.5, 1.0, 0.0]);
        let p = t1.mul(&t2);
        assert_eq!(p.v, [0.5, 3.0, 3.0]);
        assert_eq!(p.s, Spin3Element::identity());
    }

    #[test]
    fn identity_laws_and_inverse() {
        let s = Spin3Element::from_unnormalized(0.2, -1.0, 0.7, 2.0).unwrap();
        let g = Spin103Element::new(s, [0.3, -1.2, 0.8]);
        let id = Spin103Element::identity();
        assert!(g.mul(&id).embed().max_abs_diff(&g.embed()) < 1e-15);
        assert!(id.mul(&g).embed().max_abs_diff(&g.embed()) < 1e-15);
        let prod = g.mul(&g.inverse());
        assert!(prod.embed().max_abs_diff(&id.embed()) < 1e-13);

        let boost = Spin103Element::new(Spin3Element::identity(), [1.0, -2.0, 0.5]);
        assert_eq!(boost.inverse().v, [-1.0, 2.0, -0.5]);
    }

    #[test]
    fn embed_of_pure_boost() {
        // (s=1, v=e1) -> 1 + e1 f
        let g = Spin103Element::new(Spin3Element::identity(), [1.0, 0.0, 0.0]);
        let m = g.embed();
        let expected = Multivector::one() + Multivector::e(1).gp(&Multivector::f());
        assert_eq!(m, expected);
        // e1 f = -f e1, so the fe1 coefficient is -1
        assert_eq!(m.get(M_FE1), -1.0);
    }

    #[test]
    fn rho_prime_of_pure_boost() {
        let g = Spin103Element::new(Spin3Element::identity(), [1.0, -2.0, 0.5]);
        let phi = g.rho_prime();
        assert_eq!(phi.boost(), [2.0, -4.0, 1.0]);
        assert!(phi.invariant_residual() < 1e-14);
    }

    #[test]
    fn rho_prime_kernel_is_center() {
        let s = Spin3Element::from_unnormalized(0.4, 0.3, -0.2, 0.9).unwrap();
        let g = Spin103Element::new(s, [0.1, 0.2, -0.3]);
        let p1 = g.rho_prime();
        let p2 = g.neg().rho_prime();
        assert_eq!(p1.matrix(), p2.matrix());
    }

    #[test]
    fn conjugation_matrix_is_intertwined_cover() {
        // D * rho_prime * D with D = diag(-1,1,1,1): boost row flips sign.
        let s = Spin3Element::from_unnormalized(1.0, 0.5, -0.25, 2.0).unwrap();
        let g = Spin103Element::new(s, [0.4, -0.7, 0.9]);
        let conj = g.conjugation_matrix();
        let phi = g.rho_prime();
        let m = phi.matrix();
        for i in 0..4 {
            for j in 0..4 {
                let d = if (i == 0) ^ (j == 0) { -1.0 } else { 1.0 };
                assert!(
                    (conj[i][j] - d * m[i][j]).abs() < 1e-13,
                    "entry ({i},{j}): {} vs {}",
                    conj[i][j],
                    m[i][j]
                );
            }
        }
    }

    #[test]
    fn d_rho_prime_basis_images() {
        let img = d_rho_prime(&Spin103AlgebraElement::eij(1, 2));
        assert_eq!(img.rotation_coeffs(), [2.0, 0.0, 0.0]);
        assert_eq!(img.a, [0.0, 0.0, 0.0]);

        let img = d_rho_prime(&Spin103AlgebraElement::fe(1));
        assert_eq!(img.a, [-2.0, 0.0, 0.0]);
        assert_eq!(img.rotation_coeffs(), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn d_rho_prime_inv_images() {
        // 2 E_12 -> e1 e2
        let mut e12 = So103Element::eij(1, 2);
        for i in 0..3 {
            for j in 0..3 {
                e12.r[i][j] *= 2.0;
            }
        }
        let xi = d_rho_prime_inv(&e12);
        assert_eq!(xi.c, [1.0, 0.0, 0.0]);
        // E_01 -> -1/2 f e1
        let xi = d_rho_prime_inv(&So103Element::e0(1));
        assert_eq!(xi.b, [-0.5, 0.0, 0.0]);
    }

    #[test]
    fn boost_boost_brackets_vanish() {
        for i in 1..=3 {
            for j in 1..=3 {
                let spin = Spin103AlgebraElement::fe(i)
                    .lie_bracket(&Spin103AlgebraElement::fe(j))
                    .unwrap();
                assert_eq!(spin.max_abs_diff(&Spin103AlgebraElement::zero()), 0.0);
                let so = So103Element::e0(i)
                    .lie_bracket(&So103Element::e0(j))
                    .unwrap();
                assert_eq!(so.max_abs_diff(&So103Element::zero()), 0.0);
            }
        }
    }

    #[test]
    fn rotation_bracket_stays_rotational() {
        let x = Spin103AlgebraElement::eij(1, 2);
        let y = Spin103AlgebraElement::eij(2, 3);
        let br = x.lie_bracket(&y).unwrap();
        assert_eq!(br.b, [0.0, 0.0, 0.0]);
        assert!(br.c != [0.0, 0.0, 0.0]);
    }
}
