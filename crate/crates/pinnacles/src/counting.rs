//! Counting and generating the permutations with a prescribed pinnacle set.
//!
//! Two routes are provided. The naive route filters all of `S_n`. The
//! constructive route enumerates vale sets, builds the canonical
//! PV-arrangements for each admissible pair, distributes the remaining
//! values over the ascending runs to obtain the FS-minimal orbit
//! representatives, and expands each dual orbit; its cost is proportional
//! to its output. A closed product-sum formula counts without generating.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::action::for_each_in_orbit;
use crate::admissible::{is_admissible_pair, npv, vale_sets};
use crate::error::{Error, Result};
use crate::perm::{for_each_permutation, Permutation};
use crate::word;
use crate::DEFAULT_EXHAUSTIVE_LIMIT;

/// An alternating word of vales and pinnacles (odd length, vales at the
/// even 0-based positions, all letters distinct): the restriction of a
/// permutation to its pinnacle and vale values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PvArrangement {
    word: Vec<u32>,
}

impl PvArrangement {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        if word.len() % 2 == 0 {
            return Err(Error::InvalidArrangement(format!(
                "length {} is even",
                word.len()
            )));
        }
        if word.iter().any(|&v| v == 0) {
            return Err(Error::InvalidArrangement("letters start at 1".into()));
        }
        let mut sorted = word.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArrangement(
                "letters must be distinct".into(),
            ));
        }
        for i in 0..word.len() {
            let ok = if i % 2 == 0 {
                word::is_vale_at(&word, i)
            } else {
                word::is_pinnacle_at(&word, i)
            };
            if !ok {
                return Err(Error::InvalidArrangement(format!(
                    "position {i} breaks the vale/pinnacle alternation"
                )));
            }
        }
        Ok(PvArrangement { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(PvArrangement::new(word.clone()).is_ok());
        PvArrangement { word }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// The vales in order of appearance (the even positions).
    pub fn vales(&self) -> Vec<u32> {
        self.word.iter().copied().step_by(2).collect()
    }

    /// The pinnacles in order of appearance (the odd positions).
    pub fn pinnacles(&self) -> Vec<u32> {
        self.word.iter().copied().skip(1).step_by(2).collect()
    }

    /// Whether every pinnacle's smaller flanks have strictly ascending
    /// maxima, the normal form that FS-minimal permutations restrict to.
    pub fn is_canonical(&self) -> bool {
        (1..self.word.len()).step_by(2).all(|i| {
            let (l, r) = word::smaller_flanks(&self.word, i);
            word::max_or_zero(&self.word[l..i]) < word::max_or_zero(&self.word[i + 1..r])
        })
    }
}

/// Every canonical arrangement of the given pinnacle and vale sets, built
/// by wrapping the smallest pinnacle with an ordered pair of smaller vales
/// and letting it act as a vale for the remaining pinnacles. Errs when the
/// pair is not admissible.
pub fn canonical_arrangements(pinnacles: &[u32], vales: &[u32]) -> Result<Vec<PvArrangement>> {
    let mut p = pinnacles.to_vec();
    p.sort_unstable();
    let mut v = vales.to_vec();
    v.sort_unstable();
    let n = p.iter().chain(v.iter()).copied().max().unwrap_or(0) as usize;
    if !is_admissible_pair(&p, &v, n) {
        return Err(Error::InadmissiblePair);
    }
    Ok(arrangements_rec(&p, &v)
        .into_iter()
        .map(|w| {
            let arr = PvArrangement::from_word_unchecked(w);
            debug_assert!(arr.is_canonical());
            arr
        })
        .collect())
}

fn arrangements_rec(p: &[u32], v: &[u32]) -> Vec<Vec<u32>> {
    let Some((&p1, rest)) = p.split_first() else {
        return vec![vec![v[0]]];
    };
    let below: Vec<u32> = v.iter().copied().filter(|&x| x < p1).collect();
    let mut out = Vec::new();
    for i in 0..below.len() {
        for j in i + 1..below.len() {
            let (v1, v2) = (below[i], below[j]);
            let mut rest_v: Vec<u32> =
                v.iter().copied().filter(|&x| x != v1 && x != v2).collect();
            rest_v.push(p1);
            rest_v.sort_unstable();
            for w in arrangements_rec(rest, &rest_v) {
                let pos = word::position_of(&w, p1).expect("wrapped pinnacle stays in the word");
                let mut word = Vec::with_capacity(w.len() + 2);
                word.extend_from_slice(&w[..pos]);
                word.push(v1);
                word.push(p1);
                word.push(v2);
                word.extend_from_slice(&w[pos + 1..]);
                out.push(word);
            }
        }
    }
    out
}

/// How many canonical arrangements the pair admits: the product over
/// pinnacles `p` of `C(N(p), 2)`, zero when the pair is not admissible.
pub fn canonical_arrangement_count(pinnacles: &[u32], vales: &[u32]) -> BigUint {
    let mut count = BigUint::one();
    for &q in pinnacles {
        count *= choose2(npv(pinnacles, vales, q));
        if count.is_zero() {
            break;
        }
    }
    count
}

fn choose2(n: i64) -> u64 {
    if n >= 2 {
        (n as u64) * (n as u64 - 1) / 2
    } else {
        0
    }
}

/// Streams every FS-minimal permutation of `{1, .., n}` whose restriction
/// to its pinnacles and vales equals `arr`. Each remaining value `r` goes
/// into an ascending run whose vale is below `r` and whose pinnacle is
/// above it (or after the final vale); every combination of run choices is
/// visited once, the largest value varying fastest.
pub fn for_each_fs_minimal(
    arr: &PvArrangement,
    n: usize,
    mut f: impl FnMut(&Permutation),
) -> Result<()> {
    if !arr.is_canonical() {
        return Err(Error::NotCanonical);
    }
    if let Some(&big) = arr.word().iter().find(|&&v| v as usize > n) {
        return Err(Error::LetterOutOfRange { letter: big, n });
    }
    let vales = arr.vales();
    let pinnacles = arr.pinnacles();
    let l = pinnacles.len();
    let last_vale = *vales.last().expect("arrangements are nonempty");

    let mut in_word = vec![false; n + 1];
    for &v in arr.word() {
        in_word[v as usize] = true;
    }
    let mut fillers = Vec::new();
    let mut slots: Vec<Vec<usize>> = Vec::new();
    for r in 1..=n as u32 {
        if in_word[r as usize] {
            continue;
        }
        let mut s: Vec<usize> = (0..l)
            .filter(|&i| vales[i] < r && r < pinnacles[i])
            .collect();
        if r > last_vale {
            s.push(l);
        }
        if s.is_empty() {
            return Ok(());
        }
        fillers.push(r);
        slots.push(s);
    }

    let m = fillers.len();
    let mut digit = vec![0usize; m];
    let mut runs: Vec<Vec<u32>> = vec![Vec::new(); l + 1];
    'emit: loop {
        for run in &mut runs {
            run.clear();
        }
        for k in 0..m {
            runs[slots[k][digit[k]]].push(fillers[k]);
        }
        let mut out = Vec::with_capacity(n);
        for i in 0..l {
            out.push(vales[i]);
            out.extend_from_slice(&runs[i]);
            out.push(pinnacles[i]);
        }
        out.push(last_vale);
        out.extend_from_slice(&runs[l]);
        let p = Permutation::from_values_unchecked(out);
        debug_assert!(crate::minimal::is_fs_minimal(&p));
        f(&p);

        let mut k = m;
        while k > 0 {
            k -= 1;
            digit[k] += 1;
            if digit[k] < slots[k].len() {
                continue 'emit;
            }
            digit[k] = 0;
        }
        return Ok(());
    }
}

/// [`for_each_fs_minimal`] collected into a vector, in emission order.
pub fn fs_minimal_from_arrangement(arr: &PvArrangement, n: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for_each_fs_minimal(arr, n, |p| out.push(p.clone()))?;
    Ok(out)
}

/// The number of dual-action orbits in `{1, .., n}` with the given sorted
/// pinnacle and vale sets: the product over pinnacles of `C(N(p), 2)`
/// times the product over the remaining values of `N(r)`, taken in one
/// ascending merge scan.
pub fn orbit_term(pinnacles: &[u32], vales: &[u32], n: usize) -> BigUint {
    debug_assert!(pinnacles.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(vales.windows(2).all(|w| w[0] < w[1]));
    let mut term = BigUint::one();
    let (mut pi, mut vi) = (0usize, 0usize);
    for k in 1..=n as u32 {
        let seen = vi as i64 - pi as i64;
        if pi < pinnacles.len() && pinnacles[pi] == k {
            let c = choose2(seen);
            if c == 0 {
                return BigUint::zero();
            }
            term *= c;
            pi += 1;
        } else if vi < vales.len() && vales[vi] == k {
            vi += 1;
        } else {
            if seen <= 0 {
                return BigUint::zero();
            }
            term *= seen as u64;
        }
    }
    term
}

/// Number of dual-action orbits (equivalently FS-minimal permutations)
/// with the given pinnacle set in `{1, .., n}`; zero when none exist.
pub fn count_orbits(pinnacles: &[u32], n: usize) -> BigUint {
    let mut p = pinnacles.to_vec();
    p.sort_unstable();
    vale_sets(&p, n).iter().map(|v| orbit_term(&p, v, n)).sum()
}

/// Number of permutations of `{1, .., n}` with the given pinnacle set:
/// the orbit count times the common orbit size `2^(n - |P| - 1)`.
pub fn count_permutations(pinnacles: &[u32], n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let orbits = count_orbits(pinnacles, n);
    if orbits.is_zero() {
        return orbits;
    }
    orbits << (n - pinnacles.len() - 1)
}

/// Closed-form bracket for the count of an admissible set: `2^(n-|P|-1)`
/// from below and `|P|! * (|P|+1)! * S(n-|P|, |P|+1) * 2^(n-2|P|-1)` from
/// above, `S` the Stirling partition number. Both ends are sharp: the
/// lower is attained by `{3, 5, .., 2|P|+1}` and the upper by the top
/// `|P|` values. Returns `(0, 0)` when `n < 2|P|+1`, where no pinnacle
/// set of that size fits; for inadmissible sets of feasible size the
/// bracket is vacuous (their count is zero).
pub fn count_bounds(pinnacles: &[u32], n: usize) -> (BigUint, BigUint) {
    let k = pinnacles.len();
    if n < 2 * k + 1 {
        return (BigUint::zero(), BigUint::zero());
    }
    let lower = BigUint::one() << (n - k - 1);
    let upper =
        (factorial(k) * factorial(k + 1) * stirling2(n - k, k + 1)) << (n - 2 * k - 1);
    (lower, upper)
}

/// Stirling partition number `S(r, s)` via the standard triangle.
pub fn stirling2(r: usize, s: usize) -> BigUint {
    if s > r {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); s + 1];
    row[0] = BigUint::one();
    for step in 1..=r {
        for i in (1..=s.min(step)).rev() {
            let carried = std::mem::take(&mut row[i]);
            row[i] = carried * (i as u64) + &row[i - 1];
        }
        row[0] = BigUint::zero();
    }
    row.pop().expect("row has s + 1 entries")
}

/// `k!` as an arbitrary-precision integer.
pub fn factorial(k: usize) -> BigUint {
    let mut out = BigUint::one();
    for i in 2..=k as u64 {
        out *= i;
    }
    out
}

/// Filters all of `S_n` in lexicographic order for the target pinnacle
/// set; `limit` caps `n` before the factorial-sized scan starts.
pub fn for_each_naive(
    pinnacles: &[u32],
    n: usize,
    limit: usize,
    mut f: impl FnMut(&Permutation),
) -> Result<()> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let mut target = pinnacles.to_vec();
    target.sort_unstable();
    if n == 0 {
        return Ok(());
    }
    for_each_permutation(n, |p| {
        if p.pinnacle_set() == target {
            f(p);
        }
    });
    Ok(())
}

/// All permutations with the given pinnacle set via the naive scan, in
/// lexicographic order. `n` is capped by [`DEFAULT_EXHAUSTIVE_LIMIT`].
pub fn generate_naive(pinnacles: &[u32], n: usize) -> Result<Vec<Permutation>> {
    generate_naive_with_limit(pinnacles, n, DEFAULT_EXHAUSTIVE_LIMIT)
}

/// [`generate_naive`] with an explicit cap.
pub fn generate_naive_with_limit(
    pinnacles: &[u32],
    n: usize,
    limit: usize,
) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for_each_naive(pinnacles, n, limit, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Streams one FS-minimal representative per dual orbit with the given
/// pinnacle set, grouped by vale set and canonical arrangement.
pub fn for_each_fs_minimal_rep(pinnacles: &[u32], n: usize, mut f: impl FnMut(&Permutation)) {
    let mut p = pinnacles.to_vec();
    p.sort_unstable();
    for v in vale_sets(&p, n) {
        let arrs = canonical_arrangements(&p, &v).expect("enumerated vale sets are admissible");
        for arr in &arrs {
            for_each_fs_minimal(arr, n, &mut f).expect("arrangement letters lie in 1..=n");
        }
    }
}

/// The FS-minimal representatives with the given pinnacle set, sorted.
pub fn fs_minimal_reps(pinnacles: &[u32], n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_fs_minimal_rep(pinnacles, n, |p| out.push(p.clone()));
    out.sort();
    out
}

/// Streams every permutation of `{1, .., n}` with the given pinnacle set
/// by expanding the dual orbit of each FS-minimal representative. Orbits
/// of distinct representatives never overlap, so each permutation appears
/// exactly once (in no particular order).
pub fn for_each_constructive(pinnacles: &[u32], n: usize, mut f: impl FnMut(&Permutation)) {
    // Debug canary: overlapping or missing orbits would push the emission
    // total off the closed-form count.
    #[cfg(debug_assertions)]
    let mut emitted = 0u64;
    for_each_fs_minimal_rep(pinnacles, n, |rep| {
        for_each_in_orbit(rep, |p| {
            #[cfg(debug_assertions)]
            {
                emitted += 1;
            }
            f(p);
        });
    });
    #[cfg(debug_assertions)]
    debug_assert_eq!(
        BigUint::from(emitted),
        count_permutations(pinnacles, n),
        "orbit expansion must emit each permutation exactly once"
    );
}

/// All permutations with the given pinnacle set via the constructive
/// route, sorted; empty when the set is not admissible.
pub fn generate_constructive(pinnacles: &[u32], n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_constructive(pinnacles, n, |p| out.push(p.clone()));
    out.sort();
    out
}
