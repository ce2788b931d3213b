//! FS-minimal permutations: the canonical representative of each orbit of
//! the dual action.
//!
//! A permutation is *FS-minimal* when it has no double descents (so it
//! cannot open with a descent) and, for every pinnacle `q`, the
//! factorization at `q` of its restriction to pinnacles-and-vales has the
//! larger flanking maximum on the right. Every orbit contains exactly one
//! FS-minimal permutation.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::{for_each_permutation, Permutation};
use crate::word;
use crate::DEFAULT_EXHAUSTIVE_LIMIT;

/// Whether `p` is the FS-minimal representative of its orbit.
pub fn is_fs_minimal(p: &Permutation) -> bool {
    if p.has_double_descent() {
        return false;
    }
    let pinnacles = p.pinnacle_set();
    if pinnacles.is_empty() {
        return true;
    }
    let restricted = restrict_to_pv(p, &pinnacles);
    pinnacles.iter().all(|&q| flank_maxima_ascend(&restricted, q))
}

/// The unique FS-minimal permutation in the orbit of `p`.
///
/// First clears every letter parked on a descending run (each application
/// of the dual involution removes one descent), then flips the pinnacles
/// whose restricted factorization has its flank maxima reversed. Flipping
/// one pinnacle disturbs neither the other pinnacles' flank maxima nor the
/// descent count, so the loop settles after at most one pass per pinnacle.
pub fn to_fs_minimal(p: &Permutation) -> Permutation {
    let mut q = p.clone();
    while let Some(r) = descending_run_letter(&q) {
        let before = q.descent_count();
        q.apply_dual(r);
        debug_assert!(q.descent_count() < before);
    }
    let pinnacles = q.pinnacle_set();
    for _ in 0..=pinnacles.len() {
        let restricted = restrict_to_pv(&q, &pinnacles);
        match pinnacles
            .iter()
            .copied()
            .find(|&t| !flank_maxima_ascend(&restricted, t))
        {
            Some(t) => q.apply_dual(t),
            None => return q,
        }
    }
    unreachable!("each pinnacle needs at most one flip");
}

/// Tallies the FS-minimal permutations of `S_n` by pinnacle set, scanning
/// all of `S_n`; `n` is capped by [`DEFAULT_EXHAUSTIVE_LIMIT`].
pub fn fs_minimal_count_all(n: usize) -> Result<BTreeMap<Vec<u32>, u64>> {
    fs_minimal_count_all_with_limit(n, DEFAULT_EXHAUSTIVE_LIMIT)
}

/// [`fs_minimal_count_all`] with an explicit cap.
pub fn fs_minimal_count_all_with_limit(
    n: usize,
    limit: usize,
) -> Result<BTreeMap<Vec<u32>, u64>> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let mut counts = BTreeMap::new();
    for_each_permutation(n, |p| {
        if is_fs_minimal(p) {
            *counts.entry(p.pinnacle_set()).or_insert(0) += 1;
        }
    });
    Ok(counts)
}

fn restrict_to_pv(p: &Permutation, pinnacles: &[u32]) -> Vec<u32> {
    let mut keep = pinnacles.to_vec();
    keep.extend(p.vale_set());
    p.restrict(&keep)
}

/// `max(w2) < max(w4)` for the factorization of `w` at `q`, empty max 0.
fn flank_maxima_ascend(w: &[u32], q: u32) -> bool {
    let pos = word::position_of(w, q).expect("pinnacle occurs in the restriction");
    let (l, r) = word::smaller_flanks(w, pos);
    word::max_or_zero(&w[l..pos]) < word::max_or_zero(&w[pos + 1..r])
}

/// First letter with both neighbours descending across it, the left
/// boundary counting as +infinity. Such a letter is never a pinnacle or a
/// vale, and its left flank of smaller letters is empty.
fn descending_run_letter(p: &Permutation) -> Option<u32> {
    let v = p.values();
    (0..v.len()).find_map(|i| {
        let left_greater = i == 0 || v[i - 1] > v[i];
        let right_smaller = i + 1 < v.len() && v[i + 1] < v[i];
        (left_greater && right_smaller).then(|| v[i])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::dual_orbit;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn recognition_golden_cases() {
        assert!(is_fs_minimal(&p("1243")));
        assert!(!is_fs_minimal(&p("3421"))); // double descent 4 > 2 > 1
        assert!(!is_fs_minimal(&p("2143"))); // opens with a descent
        assert!(!is_fs_minimal(&p("3412"))); // flank maxima reversed at 4
        assert!(is_fs_minimal(&Permutation::identity(6)));
        assert!(is_fs_minimal(&Permutation::identity(1)));
    }

    #[test]
    fn table_of_minimal_representatives_for_n4() {
        let minimal: Vec<&str> = vec!["1234", "1324", "1243", "1342", "1423"];
        for_each_permutation(4, |q| {
            let expect = minimal.contains(&q.to_string().replace(',', "").as_str());
            assert_eq!(is_fs_minimal(q), expect, "{q}");
        });
    }

    #[test]
    fn canonicalization_lands_on_the_orbit_representative() {
        for s in ["1243", "2143", "3412", "3421"] {
            assert_eq!(to_fs_minimal(&p(s)), p("1243"));
        }
        for s in ["1342", "3142", "2413", "2431"] {
            assert_eq!(to_fs_minimal(&p(s)), p("1342"));
        }
        for s in ["1423", "1432", "2341", "3241"] {
            assert_eq!(to_fs_minimal(&p(s)), p("1423"));
        }
        assert_eq!(to_fs_minimal(&p("4321")), p("1234"));
    }

    #[test]
    fn canonicalization_is_idempotent_and_stays_in_the_orbit() {
        for_each_permutation(5, |q| {
            let m = to_fs_minimal(q);
            assert!(is_fs_minimal(&m), "{q} -> {m}");
            assert_eq!(to_fs_minimal(&m), m);
            assert_eq!(m.pinnacle_set(), q.pinnacle_set());
            assert!(dual_orbit(q).contains(&m), "{m} not in orbit of {q}");
        });
    }

    #[test]
    fn minimal_permutations_descend_only_at_peaks() {
        for_each_permutation(6, |q| {
            if is_fs_minimal(q) {
                let peaks = q.peak_set();
                let descents: Vec<usize> = (1..q.n())
                    .filter(|&i| q.values()[i - 1] > q.values()[i])
                    .collect();
                assert_eq!(descents, peaks, "{q}");
            }
        });
    }

    #[test]
    fn census_for_small_n() {
        let counts = fs_minimal_count_all(4).unwrap();
        let expected: BTreeMap<Vec<u32>, u64> =
            [(vec![], 1), (vec![3], 1), (vec![4], 3)].into_iter().collect();
        assert_eq!(counts, expected);

        let counts1 = fs_minimal_count_all(1).unwrap();
        assert_eq!(counts1, [(vec![], 1)].into_iter().collect());

        assert!(matches!(
            fs_minimal_count_all(11),
            Err(Error::LimitExceeded { n: 11, limit: 10 })
        ));
        assert!(matches!(
            fs_minimal_count_all_with_limit(5, 4),
            Err(Error::LimitExceeded { n: 5, limit: 4 })
        ));
        assert_eq!(
            fs_minimal_count_all_with_limit(4, 4).unwrap(),
            fs_minimal_count_all(4).unwrap()
        );
    }
}
