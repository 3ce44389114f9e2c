use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic, seekable random stream.
///
/// A stream is identified by a `(seed, stream_id)` pair; the same pair with
/// the same call sequence yields bit-identical variates on every run.
/// Distinct stream ids select independent ChaCha streams of the same keyed
/// cipher, so parallel chains can share a seed without sharing randomness.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream_id: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_id);
        RngStream {
            seed,
            stream_id,
            rng,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Position of the cursor within the stream, in 32-bit words.
    pub fn word_pos(&self) -> u128 {
        self.rng.get_word_pos()
    }

    /// Rebuild a stream at an exact saved position.
    pub fn restore(seed: u64, stream_id: u64, word_pos: u128) -> Self {
        let mut s = RngStream::new(seed, stream_id);
        s.rng.set_word_pos(word_pos);
        s
    }

    /// Derive an independent substream. The derivation is a pure function of
    /// `(seed, stream_id, id)`, so substreams are reproducible and two
    /// distinct ids never alias in practice.
    pub fn substream(&self, id: u64) -> RngStream {
        let derived_seed = mix3(self.seed, self.stream_id, id);
        let derived_stream = mix3(self.seed ^ 0x6a09_e667_f3bc_c909, self.stream_id, id);
        RngStream::new(derived_seed, derived_stream)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }
}

/// splitmix64 finalizer.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn mix3(a: u64, b: u64, c: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(a) ^ b) ^ c)
}
