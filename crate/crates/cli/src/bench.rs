//! Random instances and timing.

use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scrows::{FaceSet, FacetFamily, GroundSet};

use crate::engine::{self, Mode};
use crate::report::BenchReport;

/// `h` random `m`-subsets of `[w]`, reduced to an antichain.
pub fn random_facets(w: usize, h: usize, m: usize, seed: u64) -> scrows::Result<FacetFamily> {
    if m > w {
        return Err(scrows::Error::InvalidArgument(format!("facet size {m} exceeds w = {w}")));
    }
    let ground = GroundSet::new(w)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let facets = (0..h)
        .map(|_| FaceSet::from_indices(sample(&mut rng, w, m)))
        .collect();
    FacetFamily::new(ground, facets)
}

/// Times the complex's own partition and the full f-vector.
pub fn run(f: &FacetFamily, mode: Mode) -> BenchReport {
    let t0 = Instant::now();
    let p = engine::facet_partition(f, mode);
    let partition_ms = t0.elapsed().as_secs_f64() * 1e3;
    let t1 = Instant::now();
    let (tp, _, fv) = engine::tau_and_faces(f, mode);
    let fvector_ms = t1.elapsed().as_secs_f64() * 1e3;
    BenchReport {
        w: f.width(),
        h: f.len(),
        m: None,
        seed: None,
        parallel: mode == Mode::Parallel,
        rows: p.len(),
        transversal_rows: tp.len(),
        cardinality: p.cardinality().to_string(),
        f: fv.iter().map(|x| x.to_string()).collect(),
        partition_ms,
        fvector_ms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_seeded() {
        let a = random_facets(30, 17, 10, 7).unwrap();
        let b = random_facets(30, 17, 10, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.facets().iter().all(|x| x.len() == 10));
        assert!(random_facets(5, 2, 6, 0).is_err());
    }

    #[test]
    fn bench_counts_agree() {
        let f = random_facets(16, 6, 6, 3).unwrap();
        let r = run(&f, Mode::Sequential);
        let total: num_bigint::BigUint = r.f.iter().map(|x| x.parse::<num_bigint::BigUint>().unwrap()).sum();
        assert_eq!(total.to_string(), r.cardinality);
    }
}
