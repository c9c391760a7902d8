//! Packed bit table shared by the sieves and the congruence trace.
//!
//! Bit `i` lives in word `i / 64` at position `i % 64`. Unused bits in the
//! last word are kept clear so population counts stay honest.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitTable {
    words: Vec<u64>,
    nbits: u64,
}

impl BitTable {
    /// All bits set.
    pub fn all_set(nbits: u64) -> Self {
        let nwords = (nbits as usize).div_ceil(64);
        let mut words = vec![u64::MAX; nwords];
        let extra = nwords as u64 * 64 - nbits;
        if extra > 0 {
            if let Some(last) = words.last_mut() {
                *last >>= extra;
            }
        }
        BitTable { words, nbits }
    }

    /// All bits clear.
    pub fn all_clear(nbits: u64) -> Self {
        BitTable {
            words: vec![0u64; (nbits as usize).div_ceil(64)],
            nbits,
        }
    }

    #[inline]
    pub fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.nbits);
        self.words[(i / 64) as usize] & (1u64 << (i % 64)) != 0
    }

    #[inline]
    pub fn set(&mut self, i: u64) {
        debug_assert!(i < self.nbits);
        self.words[(i / 64) as usize] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: u64) {
        debug_assert!(i < self.nbits);
        self.words[(i / 64) as usize] &= !(1u64 << (i % 64));
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let base = wi as u64 * 64;
            OnesInWord { word, base }
        })
    }

    /// Mutable word view for chunked elimination passes.
    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }
}

struct OnesInWord {
    word: u64,
    base: u64,
}

impl Iterator for OnesInWord {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as u64;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}
