//! Fixed workloads shared by the benchmarks in `benches/`.

use ladders_core::{Multicharge, Multipartition, Multisegment, Segment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` seeded random multisegments on `[-3, 3]` with `segments`
/// segments each.
pub fn multisegments(segments: usize, count: usize) -> Vec<Multisegment> {
    let mut rng = ChaCha8Rng::seed_from_u64(segments as u64);
    (0..count)
        .map(|_| {
            Multisegment::new((0..segments).map(|_| {
                let b = rng.gen_range(-3..=3);
                let e = rng.gen_range(b..=3);
                Segment::new(b, e).expect("b <= e")
            }))
        })
        .collect()
}

/// The level-three proper example and its non-proper sibling.
pub fn level_three_inputs() -> Vec<(Multicharge, Multipartition)> {
    let kappa = Multicharge::new(vec![2, 1, -1]).expect("weakly decreasing");
    ["4,2,2,2,1|3,3,2,2|3,2", "4,3,2|3,3,2|3,1"]
        .iter()
        .map(|s| (kappa.clone(), s.parse().expect("valid multipartition")))
        .collect()
}
