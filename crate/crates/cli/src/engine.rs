//! Sequential and parallel drivers for the row algorithms.
//!
//! The sequential path is the core crate's deterministic order. The parallel
//! path expands the first few constraints breadth-first until there is
//! enough independent work, then finishes each subtree on the rayon pool.
//! It yields a valid partition of the same family, but row order (and in
//! general row count) may differ.

use rayon::prelude::*;
use scrows::constraints::{impose_all, impose_noncover, impose_transversal};
use scrows::counting::{face_numbers_from_tau, transversal_partition};
use scrows::partition::{partition_from_facets, partition_from_nonfaces};
use scrows::{Constraint, CountVector, FacetFamily, Kind, NonfaceFamily, Partition, Row};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Sequential,
    Parallel,
}

/// Work items at which breadth-first expansion stops.
const FAN_OUT: usize = 256;

fn constraint_set(c: &Constraint) -> &scrows::FaceSet {
    match c {
        Constraint::Transversal(h) | Constraint::Noncover(h) => h,
    }
}

fn impose_parallel(
    ground: scrows::GroundSet,
    kind: Kind,
    start: Vec<Row>,
    cs: &[Constraint],
) -> Partition {
    let mut frontier = start;
    let mut next = 0;
    while next < cs.len() && frontier.len() < FAN_OUT && !frontier.is_empty() {
        let h = constraint_set(&cs[next]);
        frontier = frontier
            .iter()
            .flat_map(|r| match kind {
                Kind::E => impose_transversal(r, h),
                Kind::N => impose_noncover(r, h),
            }
            .expect("rows and constraints share the ground set"))
            .collect();
        next += 1;
    }
    let rest = &cs[next..];
    let rows: Vec<Row> = frontier
        .into_par_iter()
        .flat_map_iter(|r| {
            impose_all(ground, kind, vec![r], rest)
                .expect("rows and constraints share the ground set")
                .into_rows()
        })
        .collect();
    Partition::new(ground, kind, rows).expect("rows built on the ground set")
}

pub fn facet_partition(f: &FacetFamily, mode: Mode) -> Partition {
    match mode {
        Mode::Sequential => partition_from_facets(f),
        Mode::Parallel => {
            let w = f.width();
            let cs: Vec<Constraint> = f
                .complements()
                .into_iter()
                .filter(|h| !h.is_empty())
                .map(Constraint::Transversal)
                .collect();
            let blocks: Vec<Vec<Row>> = f
                .facets()
                .par_iter()
                .enumerate()
                .map(|(q, facet)| {
                    let start = vec![Row::powerset(w, facet)];
                    impose_all(f.ground(), Kind::E, start, &cs[..q.min(cs.len())])
                        .expect("rows and constraints share the ground set")
                        .into_rows()
                })
                .collect();
            Partition::new(f.ground(), Kind::E, blocks.concat()).expect("rows built on the ground set")
        }
    }
}

pub fn nonface_partition(g: &NonfaceFamily, mode: Mode) -> Partition {
    match mode {
        Mode::Sequential => partition_from_nonfaces(g),
        Mode::Parallel => {
            let cs: Vec<Constraint> = g
                .generators()
                .iter()
                .map(|x| Constraint::Noncover(x.clone()))
                .collect();
            impose_parallel(g.ground(), Kind::N, vec![Row::full(Kind::N, g.width())], &cs)
        }
    }
}

pub fn transversals(f: &FacetFamily, mode: Mode) -> Partition {
    match mode {
        Mode::Sequential => transversal_partition(f),
        Mode::Parallel => {
            let hs = f.complements();
            if hs.iter().any(|h| h.is_empty()) {
                return Partition::empty(f.ground(), Kind::E);
            }
            let cs: Vec<Constraint> = hs.into_iter().map(Constraint::Transversal).collect();
            impose_parallel(f.ground(), Kind::E, vec![Row::full(Kind::E, f.width())], &cs)
        }
    }
}

/// `Σ Card(r, k)` over the rows, summed on the pool in parallel mode.
pub fn card_k(p: &Partition, mode: Mode) -> CountVector {
    match mode {
        Mode::Sequential => p.card_k(),
        Mode::Parallel => {
            let w = p.width();
            p.rows()
                .par_iter()
                .map(|r| r.card_k(w))
                .reduce(
                    || CountVector::zeros(w),
                    |mut a, b| {
                        a.add_assign(&b);
                        a
                    },
                )
        }
    }
}

/// `(τ, f)` via the transversal route.
pub fn tau_and_faces(f: &FacetFamily, mode: Mode) -> (Partition, CountVector, CountVector) {
    let p = transversals(f, mode);
    let tau = card_k(&p, mode);
    let fv = face_numbers_from_tau(&tau);
    (p, tau, fv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use scrows::complex::minimal_nonfaces;
    use scrows::{FaceSet, GroundSet};

    fn sample() -> FacetFamily {
        let sets = [
            &[1, 2, 5, 6, 7, 8, 10, 11, 12, 13, 14][..],
            &[1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14],
            &[1, 2, 3, 4, 5, 8, 9, 10, 13, 14],
            &[1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12],
            &[9, 10, 11, 12, 13, 14],
            &[1, 2, 6, 7, 9, 10, 11, 14],
        ];
        let facets = sets
            .iter()
            .map(|s| FaceSet::from_positions(s.iter().copied()).unwrap())
            .collect();
        FacetFamily::new(GroundSet::new(14).unwrap(), facets).unwrap()
    }

    #[test]
    fn modes_agree() {
        let f = sample();
        let seq = facet_partition(&f, Mode::Sequential);
        let par = facet_partition(&f, Mode::Parallel);
        assert_eq!(seq.rows(), par.rows());
        let (_, tau_s, f_s) = tau_and_faces(&f, Mode::Sequential);
        let (tp, tau_p, f_p) = tau_and_faces(&f, Mode::Parallel);
        assert_eq!(tau_s, tau_p);
        assert_eq!(f_s, f_p);
        assert!(tp.is_pairwise_disjoint());
        let g = minimal_nonfaces(&f).unwrap();
        let np = nonface_partition(&g, Mode::Parallel);
        assert_eq!(np.card_k(), nonface_partition(&g, Mode::Sequential).card_k());
        assert!(np.is_pairwise_disjoint());
    }
}
