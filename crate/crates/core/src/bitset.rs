//! Fixed-width bitsets over element or vertex indices.
//!
//! Subgroup membership, adjacency rows, and visited sets all live on these.
//! Word 0 holds indices 0..64 with index 0 at the least significant bit.

use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    nbits: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(nbits: usize) -> Self {
        Bitset {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Bitset {
            nbits,
            words: vec![!0u64; nbits.div_ceil(64)],
        };
        let tail = nbits % 64;
        if tail != 0 {
            *s.words.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        s
    }

    pub fn singleton(nbits: usize, i: usize) -> Self {
        let mut s = Bitset::new(nbits);
        s.insert(i);
        s
    }

    pub fn nbits(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        debug_assert_eq!(self.nbits, other.nbits);
        Bitset {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    /// Lexicographic order on the bit string b0 b1 ... b(n-1).
    pub fn lex_cmp(&self, other: &Bitset) -> Ordering {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter().zip(&other.words) {
            // reversing makes index 0 the most significant bit of the word
            let ord = a.reverse_bits().cmp(&b.reverse_bits());
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}
