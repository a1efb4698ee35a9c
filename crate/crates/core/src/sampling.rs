//! Seeded random profile generation (impartial culture).
//!
//! Everything here is deterministic given the seed: the generators draw
//! from a ChaCha stream, so the same seed reproduces the same instances on
//! any platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Alt, Profile, WeakOrder};

/// The RNG used for all seeded generation.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform random weak order over `1..=m` with at most `max_classes`
/// classes: the class count is uniform in `1..=min(max_classes, m)`, the
/// class sizes a uniform composition, and the membership a uniform shuffle.
pub fn random_weak_order<R: Rng>(m: usize, max_classes: usize, rng: &mut R) -> WeakOrder {
    let mut alts: Vec<Alt> = (1..=m as u32).map(Alt).collect();
    alts.shuffle(rng);
    let classes = random_composition(m, max_classes.clamp(1, m), rng);
    let mut out = Vec::with_capacity(classes.len());
    let mut rest = alts.as_slice();
    for size in classes {
        let (class, tail) = rest.split_at(size);
        out.push(class.to_vec());
        rest = tail;
    }
    WeakOrder::new(m, out).expect("shuffled composition partitions 1..=m")
}

/// Splits `m` into a uniformly chosen number of positive parts (at most
/// `max_parts`), the split itself uniform among compositions of that length.
fn random_composition<R: Rng>(m: usize, max_parts: usize, rng: &mut R) -> Vec<usize> {
    let parts = rng.random_range(1..=max_parts);
    // parts - 1 distinct break points among the m - 1 gaps
    let mut gaps: Vec<usize> = (1..m).collect();
    gaps.shuffle(rng);
    let mut breaks: Vec<usize> = gaps.into_iter().take(parts - 1).collect();
    breaks.push(0);
    breaks.push(m);
    breaks.sort_unstable();
    breaks.windows(2).map(|w| w[1] - w[0]).collect()
}

/// An impartial-culture profile: `n` independent random weak orders.
pub fn random_profile<R: Rng>(
    m: usize,
    n: usize,
    k: usize,
    max_classes: usize,
    rng: &mut R,
) -> Profile {
    let orders = (0..n).map(|_| random_weak_order(m, max_classes, rng)).collect();
    Profile::new(m, k, orders).expect("generated orders are valid")
}

/// A profile of strict (linear) orders.
pub fn random_strict_profile<R: Rng>(m: usize, n: usize, k: usize, rng: &mut R) -> Profile {
    let orders = (0..n)
        .map(|_| {
            let mut alts: Vec<Alt> = (1..=m as u32).map(Alt).collect();
            alts.shuffle(rng);
            let classes = alts.into_iter().map(|a| vec![a]).collect();
            WeakOrder::new(m, classes).expect("singleton classes partition 1..=m")
        })
        .collect();
    Profile::new(m, k, orders).expect("generated orders are valid")
}

/// A dichotomous profile with top classes of size 1 or 2 (requires `m ≥ 2`).
pub fn random_dichotomous_tw2_profile<R: Rng>(
    m: usize,
    n: usize,
    k: usize,
    rng: &mut R,
) -> Profile {
    assert!(m >= 2, "a dichotomous order needs at least two alternatives");
    let orders = (0..n)
        .map(|_| {
            let mut alts: Vec<Alt> = (1..=m as u32).map(Alt).collect();
            alts.shuffle(rng);
            // leave the second class non-empty
            let top = if m > 2 { rng.random_range(1..=2) } else { 1 };
            let (first, second) = alts.split_at(top);
            WeakOrder::new(m, vec![first.to_vec(), second.to_vec()])
                .expect("two classes partition 1..=m")
        })
        .collect();
    Profile::new(m, k, orders).expect("generated orders are valid")
}
