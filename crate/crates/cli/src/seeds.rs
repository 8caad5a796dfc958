//! Named random substreams derived from one seed.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const GRAPH_GEN: &str = "graph-gen";
pub const LIST_GEN: &str = "list-gen";
pub const FUZZ_ORDER: &str = "fuzz-order";

/// FNV-1a, so stream ids do not depend on the standard library's hasher.
fn stream_id(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Generator for item `index` of the substream `name`. Items are 2^20 words
/// apart, far more than any single trial draws.
pub fn substream(seed: u64, name: &str, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id(name));
    rng.set_word_pos(u128::from(index) << 20);
    rng
}
