mod common;

use common::*;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scrows::constraints::{impose_noncover, impose_transversal, intersect_rows};
use scrows::{Kind, Row};

fn kind_of(b: bool) -> Kind {
    if b {
        Kind::E
    } else {
        Kind::N
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn card_k_matches_expansion(seed: u64, w in 1usize..=11, e: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_row(&mut rng, w, kind_of(e));
        let members = row_members(&r);
        let hist = popcount_histogram(&members, w);
        let card = r.card_k(w);
        for k in 0..=w {
            prop_assert_eq!(card[k].to_u64().unwrap(), hist[k], "k = {} row {}", k, r);
        }
        prop_assert_eq!(r.cardinality().to_u64().unwrap(), members.len() as u64);
        for &x in &members {
            prop_assert!(r.contains(&set(x)).unwrap());
        }
    }

    #[test]
    fn complement_is_pointwise(seed: u64, w in 1usize..=10, e: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_row(&mut rng, w, kind_of(e));
        let c = r.complement();
        prop_assert_eq!(c.kind(), r.kind().dual());
        let full = (1u64 << w) - 1;
        let mut flipped: Vec<u64> = row_members(&r).iter().map(|x| !x & full).collect();
        flipped.sort_unstable();
        prop_assert_eq!(row_members(&c), flipped);
        prop_assert_eq!(c.complement(), r);
    }

    #[test]
    fn render_parse_round_trip(seed: u64, w in 1usize..=12, e: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_row(&mut rng, w, kind_of(e));
        prop_assert_eq!(Row::parse(&r.render(), r.kind()).unwrap(), r);
    }

    #[test]
    fn transversal_split(seed: u64, w in 1usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_row(&mut rng, w, Kind::E);
        let h = random_subset(&mut rng, w, 0.4).max(1);
        let sons = impose_transversal(&r, &set(h)).unwrap();
        let expected: Vec<u64> = row_members(&r).into_iter().filter(|x| x & h != 0).collect();
        prop_assert_eq!(rows_members(&sons), expected);
    }

    #[test]
    fn noncover_split(seed: u64, w in 1usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_row(&mut rng, w, Kind::N);
        let g = random_subset(&mut rng, w, 0.4).max(1);
        let sons = impose_noncover(&r, &set(g)).unwrap();
        let expected: Vec<u64> = row_members(&r).into_iter().filter(|x| x & g != g).collect();
        prop_assert_eq!(rows_members(&sons), expected);
    }

    #[test]
    fn row_intersection(seed: u64, w in 1usize..=9, e: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_row(&mut rng, w, kind_of(e));
        let b = random_row(&mut rng, w, kind_of(e));
        let rows = intersect_rows(&a, &b).unwrap();
        let mb = row_members(&b);
        let expected: Vec<u64> = row_members(&a).into_iter().filter(|x| mb.contains(x)).collect();
        prop_assert_eq!(rows_members(&rows), expected);
        for r in &rows {
            prop_assert_eq!(r.kind(), a.kind());
        }
    }
}

#[test]
fn kind_mismatch_is_rejected() {
    let a = Row::full(Kind::E, 3);
    let b = Row::full(Kind::N, 3);
    assert!(intersect_rows(&a, &b).is_err());
    assert!(impose_transversal(&b, &fs(&[1])).is_err());
    assert!(impose_noncover(&a, &fs(&[1])).is_err());
    assert!(intersect_rows(&a, &Row::full(Kind::E, 4)).is_err());
}

#[test]
fn large_width_cardinality() {
    let r = Row::full(Kind::E, 200);
    assert_eq!(r.cardinality(), num_bigint::BigUint::from(1u8) << 200);
    assert_eq!(r.card_k(200)[100], num_bigint::BigUint::from(1u8) * scrows::poly::binomial(200, 100));
}
