//! Property tests for the structural invariants.

use std::collections::BTreeSet;

use proptest::prelude::*;

use gridcrc_core::codes::{parse_compact, verify_periodic, ParamMatrix, PeriodicCode};
use gridcrc_core::lattice::{gray_inverse, gray_word};

fn arbitrary_matrix() -> impl Strategy<Value = ParamMatrix> {
    // Random valency and tridiagonal sequence with consistent row sums.
    (2u32..=8, 1usize..=5).prop_flat_map(|(valency, rho)| {
        let a_row = prop::collection::vec(0u32..=valency, rho + 1);
        let c_row = prop::collection::vec(1u32..=valency, rho);
        (a_row, c_row).prop_filter_map("row sums must fit", move |(a, c)| {
            let mut b = Vec::with_capacity(rho);
            for i in 0..rho {
                let used = a[i] + if i > 0 { c[i - 1] } else { 0 };
                let bi = valency.checked_sub(used)?;
                b.push(bi);
            }
            if a[rho] + c[rho - 1] != valency {
                return None;
            }
            ParamMatrix::new(valency, a, b, c).ok()
        })
    })
}

proptest! {
    #[test]
    fn compact_form_round_trips(matrix in arbitrary_matrix()) {
        let text = matrix.compact();
        prop_assert_eq!(parse_compact(&text).unwrap(), matrix);
    }

    #[test]
    fn opposite_is_an_involution(matrix in arbitrary_matrix()) {
        prop_assert_eq!(matrix.opposite().opposite(), matrix.clone());
        prop_assert_eq!(matrix.opposite().valency(), matrix.valency());
    }

    #[test]
    fn gray_round_trips(residues in prop::collection::vec(0i64..4, 1..6)) {
        let bits = gray_word(&residues).unwrap();
        let back = gray_inverse(bits.coords()).unwrap();
        prop_assert_eq!(back.coords(), &residues[..]);
    }

    /// Doubling every axis period never changes the verification outcome.
    #[test]
    fn verification_is_stable_under_refinement(
        n in 1usize..=2,
        q in 3u32..=5,
        picks in prop::collection::btree_set(0u32..25, 1..6),
    ) {
        let box_size = q.pow(n as u32);
        let residues: BTreeSet<Vec<i64>> = picks
            .into_iter()
            .map(|p| {
                let mut index = p % box_size;
                let mut coords = vec![0i64; n];
                for axis in (0..n).rev() {
                    coords[axis] = i64::from(index % q);
                    index /= q;
                }
                coords
            })
            .collect();
        let code = PeriodicCode::new(n, vec![q; n], residues).unwrap();
        let once = verify_periodic(&code, None).unwrap();
        let doubled = verify_periodic(&code.refine(2), None).unwrap();
        prop_assert_eq!(once.is_crc, doubled.is_crc);
        prop_assert_eq!(once.covering_radius, doubled.covering_radius);
        prop_assert_eq!(once.matrix, doubled.matrix);
    }
}

/// Every verified matrix from the construction suite satisfies the
/// monotonicity restriction (the necessary condition checked, not assumed).
#[test]
fn verified_matrices_are_monotone() {
    for n in 1..=3usize {
        for spec in gridcrc_core::constructions::catalog(n).unwrap() {
            let verdict = verify_periodic(&spec.code, None).unwrap();
            let matrix = verdict.matrix.expect("catalog entries verify");
            assert!(matrix.is_monotone(), "{} in dimension {n}", spec.id);
            assert_eq!(matrix.opposite().opposite(), matrix);
        }
    }
}

/// Mutating a verified code breaks verification with a concrete witness.
#[test]
fn perturbed_codes_fail_with_witness() {
    let code = gridcrc_core::constructions::golomb_welch_perfect(2);
    let mut residues: Vec<Vec<i64>> = code.residues().iter().cloned().collect();
    residues.pop();
    let broken = PeriodicCode::new(2, code.periods().to_vec(), residues).unwrap();
    let verdict = verify_periodic(&broken, None).unwrap();
    assert!(!verdict.is_crc);
    assert!(verdict.failure.is_some());
}
