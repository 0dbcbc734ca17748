//! Reproducible random streams and small random scalars.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Scalar;

/// Deterministic stream; `child(i)` gives independent sub-streams so that
/// parallel work is reproducible regardless of scheduling.
#[derive(Clone, Debug)]
pub struct SeedStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        SeedStream { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn child(&self, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index.wrapping_add(1));
        SeedStream { seed: self.seed ^ index.rotate_left(17), rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// Rational `p/q` with `|p| <= height`, `1 <= q <= height`. Height 0 gives
/// the constant 0, or 1 when `nonzero` is set.
pub fn random_scalar(stream: &mut SeedStream, height: u32, nonzero: bool) -> Scalar {
    if height == 0 {
        return Scalar::from_int(i64::from(nonzero));
    }
    let h = height as i64;
    loop {
        let p = stream.rng().gen_range(-h..=h);
        let q = stream.rng().gen_range(1..=h);
        if nonzero && p == 0 {
            continue;
        }
        return Scalar::from_ratio(p, q);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<Scalar> = {
            let mut s = SeedStream::new(7).child(3);
            (0..10).map(|_| random_scalar(&mut s, 5, false)).collect()
        };
        let b: Vec<Scalar> = {
            let mut s = SeedStream::new(7).child(3);
            (0..10).map(|_| random_scalar(&mut s, 5, false)).collect()
        };
        assert_eq!(a, b);
        let mut s = SeedStream::new(7);
        assert!((0..50).all(|_| !random_scalar(&mut s, 3, true).is_zero()));
    }
}
