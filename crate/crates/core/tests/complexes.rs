mod common;

use common::*;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scrows::complex::{enumerate_k_faces, minimal_nonfaces, oracle_fvector};
use scrows::counting::{face_numbers, ie_cardinality, tau_vector};
use scrows::partition::{
    link, link_facets, link_via_facets, maximize, partition_from_facets, partition_from_nonfaces,
    TargetFunction,
};
use scrows::{FaceSet, FacetFamily, GroundSet, Kind, NonfaceFamily};

const CASES: u64 = 150;

fn each_case(mut body: impl FnMut(&mut ChaCha8Rng, FacetFamily)) {
    for seed in 0..CASES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = rng.gen_range(1..=11);
        let h = rng.gen_range(1..=7);
        let f = random_complex(&mut rng, w, h);
        body(&mut rng, f);
    }
}

#[test]
fn facet_partition_is_exact() {
    each_case(|_, f| {
        let p = partition_from_facets(&f);
        assert_eq!(p.kind(), Kind::E);
        let expected = complex_members(&facet_masks(&f), f.width());
        // equal multisets, so no face is covered twice
        assert_eq!(rows_members(p.rows()), expected, "facets {:?}", f.facets());
        assert_eq!(p.cardinality().to_u64().unwrap(), expected.len() as u64);
    });
}

#[test]
fn facet_prefixes_partition_subcomplexes() {
    each_case(|_, f| {
        let p = partition_from_facets(&f);
        let mut start = 0;
        for q in 1..=f.len() {
            let prefix = FacetFamily::new(f.ground(), f.facets()[..q].to_vec()).unwrap();
            let block_len = partition_from_facets(&prefix).len();
            let expected = complex_members(&facet_masks(&prefix), f.width());
            assert_eq!(rows_members(&p.rows()[..block_len]), expected);
            assert!(block_len >= start);
            start = block_len;
        }
    });
}

#[test]
fn nonface_route_agrees() {
    each_case(|_, f| {
        let g = minimal_nonfaces(&f).unwrap();
        let w = f.width();
        let members = complex_members(&facet_masks(&f), w);
        // every generator is a non-face whose proper subsets are faces
        for x in g.generators() {
            let m = mask(x);
            assert!(!members.contains(&m));
            for i in 0..w {
                if m >> i & 1 == 1 {
                    assert!(members.contains(&(m & !(1 << i))));
                }
            }
        }
        // and every non-face contains one
        for x in 0..1u64 << w {
            let covered = g.generators().iter().any(|y| mask(y) & !x == 0);
            assert_eq!(covered, !members.contains(&x));
        }
        let p = partition_from_nonfaces(&g);
        assert_eq!(p.kind(), Kind::N);
        assert_eq!(rows_members(p.rows()), members);
        assert_eq!(p.card_k(), partition_from_facets(&f).card_k());
    });
}

#[test]
fn three_counting_routes() {
    each_case(|_, f| {
        let w = f.width();
        let members = complex_members(&facet_masks(&f), w);
        let hist = popcount_histogram(&members, w);
        let fv = face_numbers(&f);
        let tau = tau_vector(&f);
        for k in 0..=w {
            assert_eq!(fv[k].to_u64().unwrap(), hist[k]);
            if k > 0 {
                assert_eq!(tau[k].to_u64().unwrap() + hist[k], binom(w as u64, k as u64));
            }
        }
        assert_eq!(oracle_fvector(&f).unwrap(), fv);
        assert_eq!(ie_cardinality(&f).unwrap().to_u64().unwrap(), members.len() as u64);
        assert_eq!(partition_from_facets(&f).cardinality(), fv.total());
    });
}

#[test]
fn k_faces_in_order() {
    each_case(|_, f| {
        let w = f.width();
        let members = complex_members(&facet_masks(&f), w);
        for k in 0..=w {
            let got = enumerate_k_faces(&f, k);
            let mut expected: Vec<FaceSet> = members
                .iter()
                .filter(|x| x.count_ones() as usize == k)
                .map(|&x| set(x))
                .collect();
            expected.sort();
            assert_eq!(got, expected, "k = {k}");
        }
    });
}

#[test]
fn maximum_matches_brute_force() {
    each_case(|rng, f| {
        let w = f.width();
        let weights: Vec<i64> = (0..w).map(|_| rng.gen_range(-20..=20)).collect();
        let t = TargetFunction::new(weights.clone());
        let value = |x: u64| -> i128 {
            (0..w).filter(|i| x >> i & 1 == 1).map(|i| weights[i] as i128).sum()
        };
        let members = complex_members(&facet_masks(&f), w);
        let best = members.iter().map(|&x| value(x)).max().unwrap();
        let (v, x) = maximize(&partition_from_facets(&f), &t).unwrap();
        assert_eq!(v, best);
        assert_eq!(value(mask(&x)), best);
        assert!(members.contains(&mask(&x)));
        let (v2, x2) = maximize(&partition_from_nonfaces(&minimal_nonfaces(&f).unwrap()), &t).unwrap();
        assert_eq!(v2, best);
        assert!(members.contains(&mask(&x2)));
    });
}

#[test]
fn link_matches_brute_force() {
    each_case(|rng, f| {
        let w = f.width();
        let members = complex_members(&facet_masks(&f), w);
        let x = members[rng.gen_range(0..members.len())];
        let expected: Vec<u64> = members
            .iter()
            .copied()
            .filter(|&y| y & x == 0 && members.contains(&(x | y)))
            .collect();
        let p = partition_from_facets(&f);
        let l = link(&p, &f, &set(x)).unwrap();
        assert_eq!(rows_members(l.rows()), expected);
        let via = link_via_facets(&f, &set(x)).unwrap();
        assert_eq!(rows_members(via.rows()), expected);
        let lf = link_facets(&f, &set(x)).unwrap();
        assert_eq!(complex_members(&facet_masks(&lf), w), expected);

        let np = partition_from_nonfaces(&minimal_nonfaces(&f).unwrap());
        let nl = link(&np, &f, &set(x)).unwrap();
        assert_eq!(nl.kind(), Kind::N);
        assert_eq!(rows_members(nl.rows()), expected);
    });
}

#[test]
fn link_of_non_face_fails() {
    let g = GroundSet::new(4).unwrap();
    let f = FacetFamily::new(g, vec![fs(&[1, 2]), fs(&[3, 4])]).unwrap();
    let p = partition_from_facets(&f);
    assert!(link(&p, &f, &fs(&[1, 3])).is_err());
    assert!(link(&p, &f, &fs(&[5])).is_err());
}

#[test]
fn auto_reduction_is_reported() {
    let g = GroundSet::new(5).unwrap();
    let f = FacetFamily::new(g, vec![fs(&[1, 2]), fs(&[1]), fs(&[1, 2]), fs(&[3, 4, 5])]).unwrap();
    assert_eq!(f.facets(), &[fs(&[1, 2]), fs(&[3, 4, 5])]);
    assert_eq!(f.dropped(), 2);
    assert!(FacetFamily::new(g, vec![]).is_err());
    assert!(FacetFamily::new(g, vec![fs(&[6])]).is_err());
}

#[test]
fn nonface_family_keeps_minimal_generators() {
    let g = GroundSet::new(4).unwrap();
    let n = NonfaceFamily::new(g, vec![fs(&[1, 2, 3]), fs(&[1, 2])]).unwrap();
    assert_eq!(n.generators(), &[fs(&[1, 2])]);
    assert!(NonfaceFamily::new(g, vec![FaceSet::new()]).is_err());
}
