//! Blade arithmetic checked against an independent oracle: products are
//! recomputed by explicit generator-list concatenation and bubble-sort
//! reordering, with no shared code with the bitmask implementation.

use ll_core::{blade_mul, BladeMask, Multivector};
use proptest::prelude::*;

/// Oracle: multiply two blades given as ascending generator index lists
/// (0 = f, 1..3 = e1..e3) by concatenating and bubble-sorting, counting
/// swaps and contracting adjacent equal generators with their square.
fn oracle_mul(a: &[usize], b: &[usize]) -> (f64, Vec<usize>) {
    let mut gens: Vec<usize> = a.iter().chain(b.iter()).cloned().collect();
    let mut sign = 1.0f64;
    // bubble sort with swap counting
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
    // contract adjacent duplicates
    let mut out = Vec::new();
    let mut k = 0;
    while k < gens.len() {
        if k + 1 < gens.len() && gens[k] == gens[k + 1] {
            let sq = if gens[k] == 0 { 0.0 } else { 1.0 };
            sign *= sq;
            k += 2;
        } else {
            out.push(gens[k]);
            k += 1;
        }
    }
    if sign == 0.0 {
        out.clear();
    }
    (sign, out)
}

fn mask_to_list(mask: u8) -> Vec<usize> {
    (0..4).filter(|&i| mask & (1 << i) != 0).collect()
}

fn list_to_mask(list: &[usize]) -> u8 {
    list.iter().fold(0u8, |m, &i| m | (1 << i))
}

#[test]
fn full_multiplication_table_matches_oracle() {
    for a in 0..16u8 {
        for b in 0..16u8 {
            let (sign, mask) = blade_mul(BladeMask(a), BladeMask(b));
            let (osign, olist) = oracle_mul(&mask_to_list(a), &mask_to_list(b));
            assert_eq!(sign, osign, "sign mismatch for masks {a:#06b} * {b:#06b}");
            if osign != 0.0 {
                assert_eq!(
                    mask.0,
                    list_to_mask(&olist),
                    "blade mismatch for {a:#06b} * {b:#06b}"
                );
            }
        }
    }
}

#[test]
fn radical_annihilates_table_row() {
    // every product containing f twice vanishes
    for a in 0..16u8 {
        for b in 0..16u8 {
            if a & b & 1 != 0 {
                let (sign, _) = blade_mul(BladeMask(a), BladeMask(b));
                assert_eq!(sign, 0.0);
            }
        }
    }
}

fn arb_multivector() -> impl Strategy<Value = Multivector> {
    prop::array::uniform16(-4.0f64..4.0).prop_map(|coeffs| Multivector { coeffs })
}

proptest! {
    #[test]
    fn geometric_product_is_associative(
        a in arb_multivector(),
        b in arb_multivector(),
        c in arb_multivector(),
    ) {
        let lhs = a.gp(&b).gp(&c);
        let rhs = a.gp(&b.gp(&c));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-10);
    }

    #[test]
    fn geometric_product_distributes(
        a in arb_multivector(),
        b in arb_multivector(),
        c in arb_multivector(),
    ) {
        let lhs = a.gp(&(b + c));
        let rhs = a.gp(&b) + a.gp(&c);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }

    #[test]
    fn reversion_is_an_antiautomorphism(
        a in arb_multivector(),
        b in arb_multivector(),
    ) {
        let lhs = a.gp(&b).reverse();
        let rhs = b.reverse().gp(&a.reverse());
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }
}
