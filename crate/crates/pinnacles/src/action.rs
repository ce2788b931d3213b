//! The classical and dual Foata-Strehl involutions and their orbits.
//!
//! Around any letter `x` the word splits as `w1 w2 x w4 w5`, with `w2` and
//! `w4` the maximal flanking runs of letters smaller than `x`. The dual
//! involution swaps `w2` and `w4`; the classical one swaps the analogous
//! runs of greater letters. Involutions at different letters commute, so
//! every subset of `{1, .., n}` acts, and the orbit of `p` has exactly
//! `2^(n - v)` elements where `v` counts the vales of `p`. Every orbit
//! element shares the pinnacle set of `p`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word;

/// Applies the dual involution at `x`, swapping the runs of smaller letters
/// flanking `x`. Fixes `p` exactly when `x` is a vale.
pub fn dual_fs(p: &Permutation, x: u32) -> Result<Permutation> {
    check_range(p, x)?;
    let mut q = p.clone();
    q.apply_dual(x);
    Ok(q)
}

/// Applies the classical involution at `x`, swapping the runs of greater
/// letters flanking `x`. Conjugate to [`dual_fs`] under
/// [`Permutation::w0_conjugate`].
pub fn classical_fs(p: &Permutation, x: u32) -> Result<Permutation> {
    check_range(p, x)?;
    let mut q = p.clone();
    q.apply_classical(x);
    Ok(q)
}

/// Dual involution on an arbitrary word of distinct letters; `x` must occur
/// in the word.
pub fn dual_fs_word(w: &[u32], x: u32) -> Result<Vec<u32>> {
    let pos = word::position_of(w, x).ok_or(Error::LetterNotInWord { letter: x })?;
    let mut out = w.to_vec();
    let (l, r) = word::smaller_flanks(&out, pos);
    word::swap_flanks(&mut out, l, pos, r);
    Ok(out)
}

/// Applies the dual involution once at every letter of `s`. The letters are
/// taken ascending, but commutativity makes the order immaterial; repeated
/// letters collapse to one application.
pub fn dual_fs_set(p: &Permutation, s: &[u32]) -> Result<Permutation> {
    let mut letters = s.to_vec();
    letters.sort_unstable();
    letters.dedup();
    for &x in &letters {
        check_range(p, x)?;
    }
    let mut q = p.clone();
    for &x in &letters {
        q.apply_dual(x);
    }
    Ok(q)
}

/// The orbit of `p` under the dual action, sorted lexicographically.
/// Breadth-first over single-letter applications with a visited set.
pub fn dual_orbit(p: &Permutation) -> Vec<Permutation> {
    let n = p.n() as u32;
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(p.clone());
    queue.push_back(p.clone());
    while let Some(cur) = queue.pop_front() {
        for x in 1..=n {
            let mut next = cur.clone();
            next.apply_dual(x);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut orbit: Vec<Permutation> = seen.into_iter().collect();
    orbit.sort();
    orbit
}

/// Streams the orbit of `rep` without materialising it: one involution per
/// step along a binary reflected Gray code over the non-vale letters, so
/// each of the `2^(n - v)` elements is visited exactly once.
pub fn for_each_in_orbit(rep: &Permutation, mut f: impl FnMut(&Permutation)) {
    let vales = rep.vale_set();
    let letters: Vec<u32> = (1..=rep.n() as u32)
        .filter(|x| vales.binary_search(x).is_err())
        .collect();
    let m = letters.len();
    assert!(m < 63, "orbit of 2^{m} elements is too large to enumerate");
    let mut cur = rep.clone();
    f(&cur);
    for k in 1u64..(1u64 << m) {
        let j = k.trailing_zeros() as usize;
        cur.apply_dual(letters[j]);
        f(&cur);
    }
}

/// The orbit of `rep` via the Gray-code expansion, sorted lexicographically;
/// equal to [`dual_orbit`] but touches each element exactly once.
pub fn orbit_expand(rep: &Permutation) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_in_orbit(rep, |q| out.push(q.clone()));
    out.sort();
    out
}

fn check_range(p: &Permutation, x: u32) -> Result<()> {
    if x == 0 || x as usize > p.n() {
        return Err(Error::LetterOutOfRange { letter: x, n: p.n() });
    }
    Ok(())
}
