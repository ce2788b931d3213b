//! Cross-validation of the enumeration and counting machinery against
//! brute-force scans of the symmetric group.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{binom, catalan, subsets_of, ZIGZAG};
use num_bigint::BigUint;
use pinnacles::admissible::{
    compositions, gap_sets, is_admissible_pair, is_admissible_pinnacle_set, vale_sets,
    witness_permutation,
};
use pinnacles::counting::{
    canonical_arrangement_count, canonical_arrangements, count_bounds, count_orbits,
    count_permutations, fs_minimal_from_arrangement, generate_constructive,
    generate_naive_with_limit, orbit_term, PvArrangement,
};
use pinnacles::minimal::{fs_minimal_count_all, is_fs_minimal};
use pinnacles::for_each_permutation;

#[test]
fn vale_set_enumeration_matches_exhaustive_scan() {
    for n in 1..=8usize {
        let mut observed: BTreeMap<Vec<u32>, BTreeSet<Vec<u32>>> = BTreeMap::new();
        for_each_permutation(n, |p| {
            observed
                .entry(p.pinnacle_set())
                .or_default()
                .insert(p.vale_set());
        });
        for pset in subsets_of(3, n as u32) {
            let enumerated = vale_sets(&pset, n);
            let mut sorted = enumerated.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), enumerated.len(), "duplicates for P={pset:?}");
            let expected: Vec<Vec<u32>> = observed
                .get(&pset)
                .map(|s| s.iter().cloned().collect())
                .unwrap_or_default();
            assert_eq!(sorted, expected, "P={pset:?} n={n}");
            assert_eq!(is_admissible_pinnacle_set(&pset, n), !expected.is_empty());
        }
    }
}

#[test]
fn vale_set_count_matches_composition_sum() {
    for n in 1..=9usize {
        for pset in subsets_of(3, n as u32) {
            let sizes = gap_sets(&pset, n).sizes();
            let mut expected = 0u64;
            for c in compositions(pset.len()) {
                let mut product = 1u64;
                for (i, &t) in c.parts().iter().enumerate() {
                    product *= binom(sizes[i] as u64, t as u64);
                }
                expected += product;
            }
            assert_eq!(
                vale_sets(&pset, n).len() as u64,
                expected,
                "P={pset:?} n={n}"
            );
        }
    }
}

#[test]
fn closed_formula_matches_exhaustive_counts() {
    for n in 1..=9usize {
        let mut census: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for_each_permutation(n, |p| {
            *census.entry(p.pinnacle_set()).or_default() += 1;
        });
        let mut total = BigUint::from(0u32);
        for pset in subsets_of(3, n as u32) {
            let expected = census.get(&pset).copied().unwrap_or(0);
            let got = count_permutations(&pset, n);
            assert_eq!(got, BigUint::from(expected), "P={pset:?} n={n}");
            total += got;
        }
        let fact: u64 = (1..=n as u64).product();
        assert_eq!(total, BigUint::from(fact), "n={n}");
    }
}

#[test]
fn pair_admissibility_matches_existence() {
    for n in 1..=7usize {
        let mut realized: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
        for_each_permutation(n, |p| {
            realized.insert((p.pinnacle_set(), p.vale_set()));
        });
        for pset in subsets_of(3, n as u32) {
            let rest: Vec<u32> = (1..=n as u32).filter(|v| !pset.contains(v)).collect();
            for mask in 0u64..1 << rest.len() {
                if mask.count_ones() as usize != pset.len() + 1 {
                    continue;
                }
                let vset: Vec<u32> = (0..rest.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| rest[i])
                    .collect();
                let claimed = is_admissible_pair(&pset, &vset, n);
                let exists = realized.contains(&(pset.clone(), vset.clone()));
                assert_eq!(claimed, exists, "P={pset:?} V={vset:?} n={n}");
            }
        }
    }
}

#[test]
fn witnesses_have_the_prescribed_statistics() {
    for n in 1..=9usize {
        for pset in subsets_of(3, n as u32) {
            for vset in vale_sets(&pset, n) {
                let w = witness_permutation(&pset, &vset, n).unwrap();
                assert_eq!(w.pinnacle_set(), pset, "V={vset:?} n={n}");
                assert_eq!(w.vale_set(), vset, "P={pset:?} n={n}");
            }
        }
    }
}

#[test]
fn orbit_counts_match_the_minimal_census() {
    for n in 1..=8usize {
        let census = fs_minimal_count_all(n).unwrap();
        let mut total = 0u64;
        for pset in subsets_of(3, n as u32) {
            let expected = census.get(&pset).copied().unwrap_or(0);
            assert_eq!(
                count_orbits(&pset, n),
                BigUint::from(expected),
                "P={pset:?} n={n}"
            );
            total += expected;
        }
        assert_eq!(total, ZIGZAG[n], "n={n}");
    }
}

#[test]
fn orbit_terms_count_minimal_permutations_per_vale_set() {
    for n in 1..=7usize {
        let mut census: BTreeMap<(Vec<u32>, Vec<u32>), u64> = BTreeMap::new();
        for_each_permutation(n, |p| {
            if is_fs_minimal(p) {
                *census
                    .entry((p.pinnacle_set(), p.vale_set()))
                    .or_default() += 1;
            }
        });
        for pset in subsets_of(3, n as u32) {
            for vset in vale_sets(&pset, n) {
                let expected = census
                    .get(&(pset.clone(), vset.clone()))
                    .copied()
                    .unwrap_or(0);
                assert_eq!(
                    orbit_term(&pset, &vset, n),
                    BigUint::from(expected),
                    "P={pset:?} V={vset:?} n={n}"
                );
                let mut family_total = 0u64;
                for arr in canonical_arrangements(&pset, &vset).unwrap() {
                    family_total += fs_minimal_from_arrangement(&arr, n).unwrap().len() as u64;
                }
                assert_eq!(family_total, expected, "P={pset:?} V={vset:?} n={n}");
            }
        }
    }
}

#[test]
fn canonical_arrangements_match_brute_force_filter() {
    for n in 1..=7usize {
        for pset in subsets_of(3, n as u32) {
            for vset in vale_sets(&pset, n) {
                let mut union: Vec<u32> = pset.iter().chain(vset.iter()).copied().collect();
                union.sort_unstable();
                let mut brute: Vec<Vec<u32>> = Vec::new();
                for_each_permutation(union.len(), |idx| {
                    let word: Vec<u32> = idx
                        .values()
                        .iter()
                        .map(|&i| union[i as usize - 1])
                        .collect();
                    if let Ok(arr) = PvArrangement::new(word.clone()) {
                        let mut v = arr.vales();
                        v.sort_unstable();
                        let mut q = arr.pinnacles();
                        q.sort_unstable();
                        if v == vset && q == pset && arr.is_canonical() {
                            brute.push(word);
                        }
                    }
                });
                brute.sort();
                let mut produced: Vec<Vec<u32>> = canonical_arrangements(&pset, &vset)
                    .unwrap()
                    .iter()
                    .map(|a| a.word().to_vec())
                    .collect();
                produced.sort();
                assert_eq!(produced, brute, "P={pset:?} V={vset:?} n={n}");
                assert_eq!(
                    canonical_arrangement_count(&pset, &vset),
                    BigUint::from(brute.len() as u64),
                    "P={pset:?} V={vset:?}"
                );
            }
        }
    }
}

#[test]
fn bounds_bracket_every_admissible_count() {
    for n in 1..=10usize {
        for pset in subsets_of(3, n as u32) {
            let count = count_permutations(&pset, n);
            if is_admissible_pinnacle_set(&pset, n) {
                let (lo, hi) = count_bounds(&pset, n);
                assert!(
                    lo <= count && count <= hi,
                    "P={pset:?} n={n} lo={lo} count={count} hi={hi}"
                );
            } else {
                assert_eq!(count, BigUint::from(0u32), "P={pset:?} n={n}");
            }
        }
    }
}

#[test]
fn constructive_generation_matches_the_naive_filter() {
    for n in 1..=6usize {
        for pset in subsets_of(3, n as u32) {
            let naive = generate_naive_with_limit(&pset, n, 6).unwrap();
            let constructive = generate_constructive(&pset, n);
            assert_eq!(naive, constructive, "P={pset:?} n={n}");
        }
    }
}

#[test]
fn compositions_are_exactly_the_prefix_dominant_tuples() {
    for l in 0..=5usize {
        let base = l as u64 + 1;
        let mut brute: Vec<Vec<u32>> = Vec::new();
        for code in 0..base.pow(l as u32) {
            let mut c = code;
            let mut parts = Vec::with_capacity(l);
            for _ in 0..l {
                parts.push((c % base) as u32);
                c /= base;
            }
            if parts.iter().sum::<u32>() as usize != l {
                continue;
            }
            let mut prefix = 0u32;
            let mut dominant = true;
            for (i, &t) in parts.iter().enumerate() {
                prefix += t;
                if (prefix as usize) < i + 1 {
                    dominant = false;
                    break;
                }
            }
            if dominant {
                brute.push(parts);
            }
        }
        brute.sort();
        let produced: Vec<Vec<u32>> = compositions(l).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(produced, brute, "l={l}");
        assert_eq!(produced.len() as u64, catalan(l as u64), "l={l}");
    }
}
