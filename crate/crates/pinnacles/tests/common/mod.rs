#![allow(dead_code)]

use std::collections::BTreeMap;

use pinnacles::{for_each_permutation, Permutation};

/// Orbit totals for the symmetric group, indexed by n (Euler zigzag numbers).
pub const ZIGZAG: [u64; 9] = [1, 1, 1, 2, 5, 16, 61, 272, 1385];

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// All subsets of `lo..=hi`, each sorted ascending, in bitmask order.
pub fn subsets_of(lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let values: Vec<u32> = (lo..=hi).collect();
    (0u32..1 << values.len())
        .map(|mask| {
            values
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Permutations of [n] grouped by pinnacle set.
pub fn pinnacle_census(n: usize) -> BTreeMap<Vec<u32>, Vec<Permutation>> {
    let mut census: BTreeMap<Vec<u32>, Vec<Permutation>> = BTreeMap::new();
    for_each_permutation(n, |p| {
        census.entry(p.pinnacle_set()).or_default().push(p.clone());
    });
    census
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(l: u64) -> u64 {
    binom(2 * l, l) / (l + 1)
}
