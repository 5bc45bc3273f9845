//! Enumeration of k-element subsets of `0..n` in lexicographic order,
//! yielded as bitmasks. Lexicographic order of the sorted index tuples
//! makes the first valid subset found by an increasing-cardinality search
//! the canonical (lexicographically least) minimum witness.

pub(crate) struct Combinations {
    n: usize,
    k: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            k,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    fn mask(&self) -> u64 {
        self.idx.iter().fold(0u64, |m, &i| m | (1u64 << i))
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.mask());
        }
        // Advance the rightmost index that can still move.
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - (self.k - i) {
                self.idx[i] += 1;
                for j in i + 1..self.k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.mask());
            }
        }
    }
}

/// Indices of the set bits of `mask`, ascending.
pub(crate) fn mask_to_indices(mask: u64) -> Vec<usize> {
    crate::graph::bits(mask).collect()
}
