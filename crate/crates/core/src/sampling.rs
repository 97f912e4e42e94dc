//! Exhaustive and seeded word generation.
//!
//! The random sampler draws a length uniformly from `1..=max_len`, then each
//! letter uniformly from the given alphabet, using `ChaCha8Rng` seeded with
//! the run seed. Alternate implementations reproduce samples by following
//! the same recipe.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::terms::{Generator, Word};

/// All words of length `0..=max_len` over `alphabet`, shortest first.
pub fn words_up_to(alphabet: &[Generator], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    let mut layer = vec![Word::unit()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| alphabet.iter().map(move |&g| w.concat(&Word::letter(g)))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub struct WordSampler {
    rng: ChaCha8Rng,
    alphabet: Vec<Generator>,
    max_len: usize,
}

impl WordSampler {
    pub fn new(seed: u64, alphabet: Vec<Generator>, max_len: usize) -> Self {
        assert!(!alphabet.is_empty() && max_len >= 1);
        WordSampler { rng: ChaCha8Rng::seed_from_u64(seed), alphabet, max_len }
    }

    pub fn sample(&mut self) -> Word {
        let len = self.rng.random_range(1..=self.max_len);
        (0..len).map(|_| self.alphabet[self.rng.random_range(0..self.alphabet.len())]).collect()
    }

    pub fn take(&mut self, count: usize) -> Vec<Word> {
        (0..count).map(|_| self.sample()).collect()
    }

    /// Generator for per-sample randomness (rule orders and the like).
    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        let a = [Generator::b_plus(1), Generator::b_minus(1), Generator::G];
        assert_eq!(words_up_to(&a, 3).len(), 1 + 3 + 9 + 27);
        assert_eq!(words_up_to(&a, 0), vec![Word::unit()]);
    }

    #[test]
    fn seeded_samples_repeat() {
        let a = vec![Generator::b_plus(1), Generator::b_minus(2)];
        let x = WordSampler::new(7, a.clone(), 5).take(50);
        let y = WordSampler::new(7, a, 5).take(50);
        assert_eq!(x, y);
        assert!(x.iter().all(|w| (1..=5).contains(&w.len())));
    }
}
