//! SplitMix64, plus the bounded sampling rules used by the generators.
//!
//! Every draw is defined exactly so that fixtures can be reproduced by other
//! implementations:
//!
//! * `next_u64`: `state += 0x9E3779B97F4A7C15`, then the standard
//!   finalizer `(z ^ z>>30) * 0xBF58476D1CE4E5B9`, `(z ^ z>>27) * 0x94D049BB133111EB`,
//!   `z ^ z>>31` (all arithmetic mod 2^64).
//! * `below(n)`: draw `x` until `x >= (2^64 - n) mod n`, return `x mod n`.
//! * `sample_distinct(n, m)`: call `below(n)` repeatedly, dropping repeats,
//!   until `m` distinct values are collected; returned in draw order.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        let threshold = n.wrapping_neg() % n;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % n;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi);
        lo + self.index(hi - lo + 1)
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    /// `m` distinct values from `0..n`. Panics if `m > n`.
    pub fn sample_distinct(&mut self, n: usize, m: usize) -> Vec<usize> {
        assert!(m <= n, "cannot draw {m} distinct values below {n}");
        let mut out = Vec::with_capacity(m);
        while out.len() < m {
            let x = self.index(n);
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    /// Fisher-Yates from the back: `i` from `len-1` down to 1 swaps with `index(i+1)`.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_vectors() {
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
        assert_eq!(r.next_u64(), 0x06c45d188009454f);
        assert_eq!(r.next_u64(), 0xf88bb8a8724c81ec);
        let mut r = SplitMix64::new(42);
        assert_eq!(r.next_u64(), 0xbdd732262feb6e95);
        assert_eq!(r.next_u64(), 0x28efe333b266f103);
        assert_eq!(r.next_u64(), 0x47526757130f9f52);
        assert_eq!(r.next_u64(), 0x581ce1ff0e4ae394);
    }

    #[test]
    fn bounded_vectors() {
        let mut r = SplitMix64::new(7);
        let got: Vec<u64> = (0..10).map(|_| r.below(10)).collect();
        assert_eq!(got, vec![7, 4, 6, 3, 4, 5, 8, 2, 5, 5]);
        let mut r = SplitMix64::new(7);
        let got: Vec<u64> = (0..5).map(|_| r.below(1_000_003)).collect();
        assert_eq!(got, vec![291423, 625217, 913369, 465503, 301666]);
    }

    #[test]
    fn sampling_is_distinct_and_in_range() {
        let mut r = SplitMix64::new(1);
        for n in 1..20 {
            for m in 0..=n {
                let s = r.sample_distinct(n, m);
                assert_eq!(s.len(), m);
                let mut d = s.clone();
                d.sort();
                d.dedup();
                assert_eq!(d.len(), m);
                assert!(s.iter().all(|&x| x < n));
            }
        }
        let mut v: Vec<usize> = (0..10).collect();
        r.shuffle(&mut v);
        v.sort();
        assert_eq!(v, (0..10).collect::<Vec<_>>());
    }
}
