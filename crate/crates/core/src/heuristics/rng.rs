//! Seeded random streams.
//!
//! Every run derives its generators from a single `u64` seed with
//! [`ChaCha8Rng`], a portable generator whose output is identical on every
//! platform. Each operator draws from its own stream of that seed, so adding
//! draws to one operator never shifts another's sequence:
//!
//! | stream | consumer                                   |
//! |--------|--------------------------------------------|
//! | 0      | initial colorings (local search, GA)       |
//! | 1      | GA parent selection                        |
//! | 2      | crossover 1                                |
//! | 3      | crossover 2                                |
//! | 4      | mutation                                   |
//! | 5      | vertex orders for the greedy baseline      |

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const INIT: u64 = 0;
pub const SELECTION: u64 = 1;
pub const CROSSOVER1: u64 = 2;
pub const CROSSOVER2: u64 = 3;
pub const MUTATION: u64 = 4;
pub const GREEDY_ORDER: u64 = 5;

pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
