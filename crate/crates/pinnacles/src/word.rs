//! Low-level scans over words (sequences of distinct letters).
//!
//! Positions are 0-based here; the public API layers the 1-based indexing of
//! one-line notation on top. Cells outside a word compare as +infinity.

pub(crate) fn position_of(word: &[u32], x: u32) -> Option<usize> {
    word.iter().position(|&v| v == x)
}

/// Bounds `(l, r)` of the maximal runs of letters smaller than `word[pos]`
/// flanking `pos`: `word[l..pos]` on the left and `word[pos + 1..r]` on the
/// right.
pub(crate) fn smaller_flanks(word: &[u32], pos: usize) -> (usize, usize) {
    let x = word[pos];
    let mut l = pos;
    while l > 0 && word[l - 1] < x {
        l -= 1;
    }
    let mut r = pos + 1;
    while r < word.len() && word[r] < x {
        r += 1;
    }
    (l, r)
}

/// Same as [`smaller_flanks`] but for the runs of letters greater than
/// `word[pos]`.
pub(crate) fn greater_flanks(word: &[u32], pos: usize) -> (usize, usize) {
    let x = word[pos];
    let mut l = pos;
    while l > 0 && word[l - 1] > x {
        l -= 1;
    }
    let mut r = pos + 1;
    while r < word.len() && word[r] > x {
        r += 1;
    }
    (l, r)
}

/// In-place flank swap: `w1 w2 x w4 w5` becomes `w1 w4 x w2 w5`, where
/// `w2 = word[l..pos]` and `w4 = word[pos + 1..r]`.
pub(crate) fn swap_flanks(word: &mut [u32], l: usize, pos: usize, r: usize) {
    let left_len = pos - l;
    let right_len = r - pos - 1;
    word[l..r].reverse();
    word[l..l + right_len].reverse();
    word[r - left_len..r].reverse();
}

pub(crate) fn is_pinnacle_at(word: &[u32], i: usize) -> bool {
    let v = word[i];
    let left_smaller = i > 0 && word[i - 1] < v;
    let right_smaller = i + 1 < word.len() && word[i + 1] < v;
    left_smaller && right_smaller
}

pub(crate) fn is_vale_at(word: &[u32], i: usize) -> bool {
    let v = word[i];
    let left_greater = i == 0 || word[i - 1] > v;
    let right_greater = i + 1 == word.len() || word[i + 1] > v;
    left_greater && right_greater
}

pub(crate) fn max_or_zero(word: &[u32]) -> u32 {
    word.iter().copied().max().unwrap_or(0)
}
