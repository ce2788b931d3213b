//! Which pinnacle/vale pairs are realizable, and the vale sets compatible
//! with a given pinnacle set.
//!
//! For sets `P` and `V` and a value `k`, write `N(k)` for the number of
//! vales below `k` minus the number of pinnacles below `k`. A pair is
//! *admissible* in `{1, .., n}` when some permutation has exactly those
//! pinnacles and vales; this happens iff `1` is a vale, the vales outnumber
//! the pinnacles by one, and `N(p) >= 2` for every pinnacle `p`.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Number of vales below `k` minus number of pinnacles below `k`.
pub fn npv(pinnacles: &[u32], vales: &[u32], k: u32) -> i64 {
    let below = |s: &[u32]| s.iter().filter(|&&v| v < k).count() as i64;
    below(vales) - below(pinnacles)
}

/// Whether some permutation of `{1, .., n}` has exactly these pinnacles and
/// vales. Malformed input (duplicates, overlap, out-of-range values) is
/// simply inadmissible.
pub fn is_admissible_pair(pinnacles: &[u32], vales: &[u32], n: usize) -> bool {
    let Some(p) = normalized_set(pinnacles, n) else {
        return false;
    };
    let Some(v) = normalized_set(vales, n) else {
        return false;
    };
    v.first() == Some(&1)
        && v.len() == p.len() + 1
        && p.iter().all(|x| v.binary_search(x).is_err())
        && p.iter().all(|&q| npv(&p, &v, q) >= 2)
}

fn normalized_set(s: &[u32], n: usize) -> Option<Vec<u32>> {
    let mut out = s.to_vec();
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    if out.iter().any(|&x| x == 0 || x as usize > n) {
        return None;
    }
    Some(out)
}

/// A weak composition `(t_1, .., t_l)` of `l` whose every prefix sum is at
/// least its length. For each `l` there are Catalan-many of these; they
/// index the ways of distributing vales among the gaps below the pinnacles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let l = parts.len() as u32;
        if parts.iter().sum::<u32>() != l {
            return Err(Error::InvalidComposition(format!(
                "parts must sum to their count {l}"
            )));
        }
        let mut prefix = 0u32;
        for (k, &t) in parts.iter().enumerate() {
            prefix += t;
            if (prefix as usize) < k + 1 {
                return Err(Error::InvalidComposition(format!(
                    "prefix sum {prefix} falls below index {}",
                    k + 1
                )));
            }
        }
        Ok(WeakComposition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// All prefix-dominant weak compositions of `l`, lexicographically sorted.
/// `compositions(0)` holds just the empty tuple.
pub fn compositions(l: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(l);
    fill_compositions(l, 0, &mut parts, &mut out);
    out
}

fn fill_compositions(l: usize, prefix: u32, parts: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
    let k = parts.len();
    if k == l {
        out.push(WeakComposition { parts: parts.clone() });
        return;
    }
    let need = (k as u32 + 1).saturating_sub(prefix);
    let room = l as u32 - prefix;
    let lo = if k + 1 == l { room } else { need };
    for t in lo..=room {
        parts.push(t);
        fill_compositions(l, prefix + t, parts, out);
        parts.pop();
    }
}

/// Renders a composition as the lattice word `U^{t_1} R U^{t_2} R ...`.
pub fn composition_to_dyck(c: &WeakComposition) -> String {
    let mut s = String::with_capacity(2 * c.len());
    for &t in c.parts() {
        for _ in 0..t {
            s.push('U');
        }
        s.push('R');
    }
    s
}

/// The values of `{1, .., n}` strictly between consecutive pinnacles, the
/// left end anchored at 1: `gaps[i]` sits between `p[i-1]` (or 1) and `p[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapDecomposition {
    pub gaps: Vec<Vec<u32>>,
}

impl GapDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.gaps.iter().map(Vec::len).collect()
    }
}

/// Gap sets for a sorted pinnacle set.
pub fn gap_sets(pinnacles: &[u32], n: usize) -> GapDecomposition {
    debug_assert!(pinnacles.windows(2).all(|w| w[0] < w[1]));
    let mut gaps = Vec::with_capacity(pinnacles.len());
    let mut lo = 1u32;
    for &p in pinnacles {
        gaps.push((lo + 1..p).filter(|&j| j as usize <= n).collect());
        lo = p;
    }
    GapDecomposition { gaps }
}

/// Every vale set that together with `pinnacles` (sorted, distinct) forms an
/// admissible pair in `{1, .., n}`: the value 1 plus, for each composition
/// `(t_1, .., t_l)` of the prefix-dominant family, a choice of `t_i` values
/// from the i-th gap set.
///
/// Deterministic order: compositions lexicographic, subset choices
/// colexicographic within each gap, later gaps varying fastest. Each set is
/// sorted ascending. Empty exactly when no permutation of `{1, .., n}` has
/// this pinnacle set.
pub fn vale_sets(pinnacles: &[u32], n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return Vec::new();
    }
    if pinnacles.iter().any(|&p| p == 0 || p as usize > n) {
        return Vec::new();
    }
    if pinnacles.windows(2).any(|w| w[0] >= w[1]) {
        return Vec::new();
    }
    let gaps = gap_sets(pinnacles, n).gaps;
    let l = pinnacles.len();
    let mut out = Vec::new();
    for comp in compositions(l) {
        let t = comp.parts();
        if (0..l).any(|i| (t[i] as usize) > gaps[i].len()) {
            continue;
        }
        let choices: Vec<Vec<Vec<u32>>> = (0..l)
            .map(|i| combinations_colex(&gaps[i], t[i] as usize))
            .collect();
        for_each_product(&choices, |picks| {
            let mut v = vec![1u32];
            for &(i, j) in picks {
                v.extend_from_slice(&choices[i][j]);
            }
            v.sort_unstable();
            out.push(v);
        });
    }
    out
}

/// Whether any permutation of `{1, .., n}` has this pinnacle set.
pub fn is_admissible_pinnacle_set(pinnacles: &[u32], n: usize) -> bool {
    !vale_sets(pinnacles, n).is_empty()
}

/// A deterministic permutation of `{1, .., n}` with the given pinnacle and
/// vale sets: sorted vales and pinnacles interleaved, every remaining value
/// placed in the first ascending run that fits it.
pub fn witness_permutation(pinnacles: &[u32], vales: &[u32], n: usize) -> Result<Permutation> {
    if !is_admissible_pair(pinnacles, vales, n) {
        return Err(Error::InadmissiblePair);
    }
    let mut p = pinnacles.to_vec();
    p.sort_unstable();
    let mut v = vales.to_vec();
    v.sort_unstable();
    let l = p.len();
    let mut runs: Vec<Vec<u32>> = vec![Vec::new(); l + 1];
    for r in 1..=n as u32 {
        if p.binary_search(&r).is_ok() || v.binary_search(&r).is_ok() {
            continue;
        }
        let slot = (0..l).find(|&i| v[i] < r && r < p[i]).unwrap_or(l);
        debug_assert!(slot < l || r > v[l]);
        runs[slot].push(r);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..l {
        out.push(v[i]);
        out.extend_from_slice(&runs[i]);
        out.push(p[i]);
    }
    out.push(v[l]);
    out.extend_from_slice(&runs[l]);
    Ok(Permutation::from_values_unchecked(out))
}

/// Parses `"4,8,11"` (or the empty string) into a sorted value set.
pub fn parse_value_set(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let v: u32 = tok
            .parse()
            .map_err(|e| Error::Parse(format!("bad set value {tok:?}: {e}")))?;
        if v == 0 {
            return Err(Error::Parse("set values start at 1".into()));
        }
        out.push(v);
    }
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Parse(format!("duplicate value in set {s:?}")));
    }
    Ok(out)
}

/// Renders a set as sorted comma-separated values.
pub fn format_value_set(s: &[u32]) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Size-`k` subsets of `items` (kept in their given order) listed
/// colexicographically.
fn combinations_colex(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fill_combinations(items, k, 0, &mut cur, &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

fn fill_combinations(
    items: &[u32],
    k: usize,
    from: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in from..items.len() {
        cur.push(items[i]);
        fill_combinations(items, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Odometer over one index per choice list, later positions varying
/// fastest; `f` receives `(list, index)` pairs.
fn for_each_product(choices: &[Vec<Vec<u32>>], mut f: impl FnMut(&[(usize, usize)])) {
    let m = choices.len();
    let mut idx: Vec<(usize, usize)> = (0..m).map(|i| (i, 0)).collect();
    if m == 0 {
        f(&idx);
        return;
    }
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    'emit: loop {
        f(&idx);
        let mut j = m;
        while j > 0 {
            j -= 1;
            idx[j].1 += 1;
            if idx[j].1 < choices[j].len() {
                continue 'emit;
            }
            idx[j].1 = 0;
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn npv_golden_cases() {
        let p = [7, 10, 12];
        let v = [1, 3, 5, 8];
        assert_eq!(npv(&p, &v, 6), 3);
        assert_eq!(npv(&p, &v, 2), 1);
        assert_eq!(npv(&p, &v, 1), 0);
        assert_eq!(npv(&p, &v, 9), 3);
        assert_eq!(npv(&p, &v, 13), 1);
        assert_eq!(npv(&[3, 4], &[1], 5), -1);
    }

    #[test]
    fn admissible_pair_golden_cases() {
        assert!(is_admissible_pair(&[7, 8], &[1, 2, 5], 8));
        assert!(is_admissible_pair(&[], &[1], 1));
        assert!(is_admissible_pair(&[7, 10, 12], &[1, 3, 5, 8], 12));
        assert!(!is_admissible_pair(&[5], &[1, 5], 8)); // overlap
        assert!(!is_admissible_pair(&[4], &[1, 5], 8)); // N(4) = 1
        assert!(!is_admissible_pair(&[4], &[2, 3], 8)); // 1 missing
        assert!(!is_admissible_pair(&[4], &[1, 2, 3], 8)); // sizes off
        assert!(!is_admissible_pair(&[9], &[1, 2], 8)); // out of range
        assert!(!is_admissible_pair(&[4, 4], &[1, 2, 3], 8)); // duplicate
    }

    #[test]
    fn composition_family_for_small_lengths() {
        assert_eq!(compositions(0).len(), 1);
        assert!(compositions(0)[0].is_empty());
        assert_eq!(compositions(1), vec![WeakComposition::new(vec![1]).unwrap()]);

        let c3: Vec<Vec<u32>> = compositions(3).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(
            c3,
            vec![
                vec![1, 1, 1],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0],
                vec![3, 0, 0],
            ]
        );
    }

    #[test]
    fn composition_family_is_catalan_counted() {
        // C(l) via the standard recurrence
        let mut catalan = vec![1u64; 11];
        for l in 1..=10usize {
            catalan[l] = (0..l).map(|i| catalan[i] * catalan[l - 1 - i]).sum();
        }
        for l in 0..=10 {
            assert_eq!(compositions(l).len() as u64, catalan[l], "l = {l}");
        }
    }

    #[test]
    fn composition_validation() {
        assert!(WeakComposition::new(vec![2, 0, 1]).is_ok());
        assert!(WeakComposition::new(vec![0, 2, 1]).is_err()); // prefix 0 < 1
        assert!(WeakComposition::new(vec![1, 1]).is_ok());
        assert!(WeakComposition::new(vec![2, 1]).is_err()); // sum 3 != 2
        assert!(WeakComposition::new(vec![]).is_ok());
    }

    #[test]
    fn dyck_words() {
        let c = |p: Vec<u32>| WeakComposition::new(p).unwrap();
        assert_eq!(composition_to_dyck(&c(vec![1, 1, 1])), "URURUR");
        assert_eq!(composition_to_dyck(&c(vec![2, 0, 1])), "UURRUR");
        assert_eq!(composition_to_dyck(&c(vec![2, 1, 0])), "UURURR");
        assert_eq!(composition_to_dyck(&c(vec![1, 2, 0])), "URUURR");
        assert_eq!(composition_to_dyck(&c(vec![3, 0, 0])), "UUURRR");
        assert_eq!(composition_to_dyck(&c(vec![])), "");
    }

    #[test]
    fn gap_sets_golden_cases() {
        let g = gap_sets(&[4, 8, 11], 12);
        assert_eq!(g.gaps, vec![vec![2, 3], vec![5, 6, 7], vec![9, 10]]);
        assert_eq!(g.sizes(), vec![2, 3, 2]);
        assert_eq!(gap_sets(&[3], 8).gaps, vec![vec![2]]);
        assert_eq!(gap_sets(&[], 8).gaps, Vec::<Vec<u32>>::new());
        assert_eq!(gap_sets(&[3, 4], 6).gaps, vec![vec![2], vec![]]);
    }

    #[test]
    fn vale_sets_golden_cases() {
        assert_eq!(vale_sets(&[5], 8), vec![vec![1, 2], vec![1, 3], vec![1, 4]]);
        assert_eq!(vale_sets(&[], 5), vec![vec![1]]);
        assert_eq!(vale_sets(&[], 1), vec![vec![1]]);
        assert!(vale_sets(&[2], 4).is_empty());
        assert!(vale_sets(&[9], 8).is_empty());
        assert!(vale_sets(&[3, 3], 8).is_empty());
    }

    #[test]
    fn vale_sets_for_a_three_pinnacle_example() {
        let got = vale_sets(&[4, 8, 11], 12);
        assert_eq!(got.len(), 23);

        let mut expected: Vec<Vec<u32>> = Vec::new();
        for a in [2u32, 3] {
            for b in [5u32, 6, 7] {
                for c in [9u32, 10] {
                    expected.push(vec![1, a, b, c]);
                }
            }
        }
        expected.push(vec![1, 2, 3, 9]);
        expected.push(vec![1, 2, 3, 10]);
        expected.push(vec![1, 2, 3, 5]);
        expected.push(vec![1, 2, 3, 6]);
        expected.push(vec![1, 2, 3, 7]);
        for a in [2u32, 3] {
            for bc in [[5u32, 6], [5, 7], [6, 7]] {
                expected.push(vec![1, a, bc[0], bc[1]]);
            }
        }
        let mut got_sorted = got.clone();
        got_sorted.sort();
        got_sorted.dedup();
        assert_eq!(got_sorted.len(), 23, "no duplicates");
        expected.sort();
        assert_eq!(got_sorted, expected);

        for v in &got {
            assert!(is_admissible_pair(&[4, 8, 11], v, 12));
        }
    }

    #[test]
    fn admissible_pinnacle_sets() {
        assert!(is_admissible_pinnacle_set(&[3, 5], 8));
        assert!(!is_admissible_pinnacle_set(&[2], 4));
        assert!(!is_admissible_pinnacle_set(&[3, 4], 8));
        assert!(is_admissible_pinnacle_set(&[], 1));
        assert!(!is_admissible_pinnacle_set(&[5], 4));
    }

    #[test]
    fn witness_construction() {
        let w = witness_permutation(&[], &[1], 3).unwrap();
        assert_eq!(w, Permutation::identity(3));

        let w = witness_permutation(&[4], &[1, 2], 4).unwrap();
        assert_eq!(w.pinnacle_set(), vec![4]);
        assert_eq!(w.vale_set(), vec![1, 2]);

        let w = witness_permutation(&[7, 8], &[1, 2, 5], 8).unwrap();
        assert_eq!(w.pinnacle_set(), vec![7, 8]);
        assert_eq!(w.vale_set(), vec![1, 2, 5]);

        assert!(witness_permutation(&[4], &[1, 5], 8).is_err());
    }

    #[test]
    fn value_set_round_trip() {
        assert_eq!(parse_value_set("4,8,11").unwrap(), vec![4, 8, 11]);
        assert_eq!(parse_value_set("11, 4, 8").unwrap(), vec![4, 8, 11]);
        assert_eq!(parse_value_set("").unwrap(), Vec::<u32>::new());
        assert_eq!(parse_value_set("  ").unwrap(), Vec::<u32>::new());
        assert!(parse_value_set("4,4").is_err());
        assert!(parse_value_set("4,x").is_err());
        assert!(parse_value_set("0,1").is_err());
        assert_eq!(format_value_set(&[4, 8, 11]), "4,8,11");
        assert_eq!(format_value_set(&[]), "");
    }

    #[test]
    fn colex_combination_order() {
        assert_eq!(
            combinations_colex(&[5, 6, 7], 2),
            vec![vec![5, 6], vec![5, 7], vec![6, 7]]
        );
        assert_eq!(combinations_colex(&[2, 3, 4], 1), vec![vec![2], vec![3], vec![4]]);
        assert_eq!(combinations_colex(&[2, 3], 0), vec![Vec::<u32>::new()]);
    }
}
