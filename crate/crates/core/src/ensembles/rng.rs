use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// ChaCha8 keyed by `seed`, positioned on stream `stream_index`.
///
/// Equal `(seed, stream_index)` pairs reproduce the same sequence; distinct
/// stream indices select disjoint keystreams of the same key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    stream_index: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream_index: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream_index);
        RngStream { seed, stream_index, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_index(&self) -> u64 {
        self.stream_index
    }

    /// Independent child stream, e.g. one per Monte-Carlo trial. Depends only on
    /// `(seed, stream_index, index)`, never on how much of `self` was consumed.
    pub fn substream(&self, index: u64) -> RngStream {
        let child_seed = splitmix64(self.seed ^ splitmix64(self.stream_index.wrapping_add(0x5bd1_e995)));
        RngStream::new(child_seed, index)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
