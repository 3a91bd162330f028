//! Shared inputs for the benchmarks.

use klsf_core::ResidueSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded pseudo-random subset of `Z_n` holding roughly `density` of the residues.
pub fn sample_set(n: u64, density: f64, seed: u64) -> ResidueSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let members: Vec<u64> = (0..n).filter(|_| rng.gen_bool(density)).collect();
    ResidueSet::from_residues(n, members).expect("residues are reduced")
}
