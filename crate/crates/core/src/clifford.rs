//! Blade-level arithmetic for the degenerate Clifford algebra Cl(1,0,3).
//!
//! Generators are ordered `(f, e1, e2, e3)` with squares `(0, +1, +1, +1)`;
//! `f` spans the radical. Basis blades are indexed by a 4-bit mask with `f`
//! at bit 0, so the special-casing of the nilpotent generator is a single
//! bit test in [`blade_mul`].

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// The fixed signature of this algebra: co-rank 1, no negative squares,
/// three positive squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature;

impl Signature {
    /// Count of null generators.
    pub const R: usize = 1;
    /// Count of generators squaring to -1.
    pub const P: usize = 0;
    /// Count of generators squaring to +1.
    pub const Q: usize = 3;
    /// Total dimension of the generating space.
    pub const DIM: usize = 4;
    /// Number of basis blades.
    pub const NUM_BLADES: usize = 16;

    /// Square of generator `i` in the order `(f, e1, e2, e3)`.
    pub const fn square(i: usize) -> f64 {
        if i == 0 {
            0.0
        } else {
            1.0
        }
    }
}

/// A basis blade as a 4-bit mask: bit 0 is `f`, bits 1-3 are `e1..e3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BladeMask(pub u8);

impl BladeMask {
    pub const SCALAR: BladeMask = BladeMask(0);
    pub const F: BladeMask = BladeMask(0b0001);
    pub const E1: BladeMask = BladeMask(0b0010);
    pub const E2: BladeMask = BladeMask(0b0100);
    pub const E3: BladeMask = BladeMask(0b1000);

    pub fn new(mask: u8) -> Self {
        debug_assert!(mask < 16);
        BladeMask(mask)
    }

    /// Blade grade (number of generators).
    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains_f(self) -> bool {
        self.0 & 1 != 0
    }
}

/// Product of two basis blades.
///
/// The sign comes from the transposition count of merging the two ascending
/// generator lists; repeated generators contract with their metric square,
/// so any repeated `f` annihilates the product.
pub fn blade_mul(a: BladeMask, b: BladeMask) -> (f64, BladeMask) {
    if a.0 & b.0 & 1 != 0 {
        // f^2 = 0
        return (0.0, BladeMask::SCALAR);
    }
    // Count transpositions needed to interleave b into a in ascending order:
    // each generator of a above a generator of b contributes one swap.
    let mut shifted = a.0 >> 1;
    let mut swaps = 0u32;
    while shifted != 0 {
        swaps += (shifted & b.0).count_ones();
        shifted >>= 1;
    }
    // Repeated e-generators contract to +1, leaving the symmetric difference.
    let sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
    (sign, BladeMask(a.0 ^ b.0))
}

/// A general element of Cl(1,0,3): 16 real coefficients indexed by blade mask.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multivector {
    pub coeffs: [f64; 16],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { coeffs: [0.0; 16] };

    pub fn scalar(x: f64) -> Self {
        let mut m = Self::ZERO;
        m.coeffs[0] = x;
        m
    }

    pub fn one() -> Self {
        Self::scalar(1.0)
    }

    /// The blade with the given mask and unit coefficient.
    pub fn basis(mask: BladeMask) -> Self {
        let mut m = Self::ZERO;
        m.coeffs[mask.0 as usize] = 1.0;
        m
    }

    pub fn f() -> Self {
        Self::basis(BladeMask::F)
    }

    /// Generator `e1`, `e2` or `e3` for `i` in `1..=3`.
    pub fn e(i: usize) -> Self {
        assert!((1..=3).contains(&i));
        Self::basis(BladeMask(1 << i))
    }

    /// A grade-1 element on the spatial generators.
    pub fn vector(v: [f64; 3]) -> Self {
        let mut m = Self::ZERO;
        for i in 0..3 {
            m.coeffs[1 << (i + 1)] = v[i];
        }
        m
    }

    pub fn get(&self, mask: BladeMask) -> f64 {
        self.coeffs[mask.0 as usize]
    }

    pub fn set(&mut self, mask: BladeMask, value: f64) {
        self.coeffs[mask.0 as usize] = value;
    }

    /// Geometric product, the bilinear extension of [`blade_mul`].
    pub fn gp(&self, other: &Multivector) -> Multivector {
        let mut out = Multivector::ZERO;
        for a in 0..16u8 {
            let ca = self.coeffs[a as usize];
            if ca == 0.0 {
                continue;
            }
            for b in 0..16u8 {
                let cb = other.coeffs[b as usize];
                if cb == 0.0 {
                    continue;
                }
                let (sign, mask) = blade_mul(BladeMask(a), BladeMask(b));
                if sign != 0.0 {
                    out.coeffs[mask.0 as usize] += sign * ca * cb;
                }
            }
        }
        out
    }

    /// Keep only the grade-`k` part.
    pub fn grade_project(&self, k: u32) -> Multivector {
        assert!(k <= 4);
        let mut out = Multivector::ZERO;
        for mask in 0..16u8 {
            if BladeMask(mask).grade() == k {
                out.coeffs[mask as usize] = self.coeffs[mask as usize];
            }
        }
        out
    }

    /// Reversion: grade-k blades pick up `(-1)^{k(k-1)/2}`.
    pub fn reverse(&self) -> Multivector {
        let mut out = *self;
        for mask in 0..16u8 {
            let k = BladeMask(mask).grade();
            if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
                out.coeffs[mask as usize] = -out.coeffs[mask as usize];
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Multivector {
        let mut out = *self;
        for c in out.coeffs.iter_mut() {
            *c *= s;
        }
        out
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for &c in &self.coeffs {
            m = m.max(libm::fabs(c));
        }
        m
    }

    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        let mut m = 0.0f64;
        for i in 0..16 {
            m = m.max(libm::fabs(self.coeffs[i] - other.coeffs[i]));
        }
        m
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        let mut out = self;
        for i in 0..16 {
            out.coeffs[i] += rhs.coeffs[i];
        }
        out
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        let mut out = self;
        for i in 0..16 {
            out.coeffs[i] -= rhs.coeffs[i];
        }
        out
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.gp(&rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

const BLADE_NAMES: [&str; 16] = [
    "1", "f", "e1", "fe1", "e2", "fe2", "e1e2", "fe1e2", "e3", "fe3", "e1e3", "fe1e3", "e2e3",
    "fe2e3", "e1e2e3", "fe1e2e3",
];

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for mask in 0..16usize {
            let c = self.coeffs[mask];
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if mask == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}", BLADE_NAMES[mask])?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_squares_to_zero() {
        let (s, m) = blade_mul(BladeMask::F, BladeMask::F);
        assert_eq!(s, 0.0);
        assert_eq!(m, BladeMask::SCALAR);
    }

    #[test]
    fn e1_squares_to_one() {
        let (s, m) = blade_mul(BladeMask::E1, BladeMask::E1);
        assert_eq!(s, 1.0);
        assert_eq!(m, BladeMask::SCALAR);
    }

    #[test]
    fn e2_e1_anticommute_sign() {
        let (s, m) = blade_mul(BladeMask::E2, BladeMask::E1);
        assert_eq!(s, -1.0);
        assert_eq!(m, BladeMask(0b0110)); // e1e2
    }

    #[test]
    fn unit_law() {
        let a = Multivector::vector([1.0, -2.0, 3.0]) + Multivector::scalar(0.5);
        assert_eq!(Multivector::one().gp(&a), a);
        assert_eq!(a.gp(&Multivector::one()), a);
    }

    #[test]
    fn vf_times_vf_vanishes() {
        // (v f)(v' f) = 0 for spatial v, v'
        let vf = Multivector::vector([1.0, 2.0, 3.0]).gp(&Multivector::f());
        let vpf = Multivector::vector([-1.0, 0.5, 2.0]).gp(&Multivector::f());
        assert_eq!(vf.gp(&vpf), Multivector::ZERO);
    }

    #[test]
    fn bivector_product() {
        // e1e2 * e2e3 = e1e3
        let e12 = Multivector::e(1) * Multivector::e(2);
        let e23 = Multivector::e(2) * Multivector::e(3);
        let e13 = Multivector::e(1) * Multivector::e(3);
        assert_eq!(e12 * e23, e13);
    }

    #[test]
    fn grade_projection_partition() {
        let mut a = Multivector::ZERO;
        for i in 0..16 {
            a.coeffs[i] = (i as f64) - 7.5;
        }
        let mut sum = Multivector::ZERO;
        for k in 0..=4 {
            sum = sum + a.grade_project(k);
        }
        assert_eq!(sum, a);
        let v = Multivector::one() + Multivector::e(1) + Multivector::e(1) * Multivector::e(2);
        assert_eq!(v.grade_project(1), Multivector::e(1));
    }

    #[test]
    fn grade3_product() {
        let lhs = Multivector::e(1).gp(&(Multivector::e(2) * Multivector::e(3)));
        assert_eq!(lhs.grade_project(3), lhs);
        assert_eq!(lhs.get(BladeMask(0b1110)), 1.0);
    }

    #[test]
    fn reverse_signs() {
        assert_eq!(Multivector::scalar(2.0).reverse(), Multivector::scalar(2.0));
        let e12 = Multivector::e(1) * Multivector::e(2);
        assert_eq!(e12.reverse(), -e12);
    }
}
