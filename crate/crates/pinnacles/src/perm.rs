//! One-line permutations of `{1, .., n}` and their peak/pinnacle statistics.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word;

/// A permutation of `{1, .., n}` in one-line notation.
///
/// Boundary cells count as +infinity, so the first and last letters are
/// never pinnacles, the first letter is a vale exactly when it sits below
/// its right neighbour, and symmetrically for the last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from one-line values, which must be a
    /// rearrangement of `1..=n` for some `n >= 1`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidPermutation("empty sequence".into()));
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeats")));
            }
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    /// The identity permutation `1 2 .. n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations need n >= 1");
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// 1-based positions `i` with `p(i-1) < p(i) > p(i+1)`.
    pub fn peak_set(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| word::is_pinnacle_at(&self.values, i))
            .map(|i| i + 1)
            .collect()
    }

    /// The values sitting at peaks, sorted ascending.
    pub fn pinnacle_set(&self) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.n())
            .filter(|&i| word::is_pinnacle_at(&self.values, i))
            .map(|i| self.values[i])
            .collect();
        out.sort_unstable();
        out
    }

    /// 1-based positions `i` with `p(i-1) > p(i) < p(i+1)`, boundaries
    /// counting as +infinity.
    pub fn valley_set(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| word::is_vale_at(&self.values, i))
            .map(|i| i + 1)
            .collect()
    }

    /// The values sitting at valleys, sorted ascending. Always contains 1,
    /// and always outnumbers the pinnacles by exactly one.
    pub fn vale_set(&self) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.n())
            .filter(|&i| word::is_vale_at(&self.values, i))
            .map(|i| self.values[i])
            .collect();
        out.sort_unstable();
        out
    }

    /// Number of interior descents `p(i) > p(i+1)`, `1 <= i < n`.
    pub fn descent_count(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Whether some letter sits strictly inside a descending run. The left
    /// boundary sentinel counts: a permutation that opens with a descent has
    /// a double descent at the front.
    pub fn has_double_descent(&self) -> bool {
        let v = &self.values;
        if v.len() >= 2 && v[0] > v[1] {
            return true;
        }
        v.windows(3).any(|w| w[0] > w[1] && w[1] > w[2])
    }

    /// Splits the word as `w1 w2 x w4 w5`, where `w2` and `w4` are the
    /// maximal runs of letters smaller than `x` immediately beside it.
    pub fn x_factorization(&self, x: u32) -> Result<XFactorization> {
        let pos = self.letter_position(x)?;
        let (l, r) = word::smaller_flanks(&self.values, pos);
        Ok(XFactorization {
            w1: self.values[..l].to_vec(),
            w2: self.values[l..pos].to_vec(),
            x,
            w4: self.values[pos + 1..r].to_vec(),
            w5: self.values[r..].to_vec(),
        })
    }

    /// The subsequence of letters belonging to `keep`, in order of
    /// appearance.
    pub fn restrict(&self, keep: &[u32]) -> Vec<u32> {
        let mut mask = vec![false; self.n() + 1];
        for &v in keep {
            if v >= 1 && (v as usize) <= self.n() {
                mask[v as usize] = true;
            }
        }
        self.values
            .iter()
            .copied()
            .filter(|&v| mask[v as usize])
            .collect()
    }

    /// Relabels every value `v` as `n - v + 1` (flips the plot upside down),
    /// exchanging the roles of pinnacles and vales.
    pub fn w0_conjugate(&self) -> Permutation {
        let n = self.n() as u32;
        Permutation {
            values: self.values.iter().map(|&v| n - v + 1).collect(),
        }
    }

    pub(crate) fn letter_position(&self, x: u32) -> Result<usize> {
        if x == 0 || x as usize > self.n() {
            return Err(Error::LetterOutOfRange {
                letter: x,
                n: self.n(),
            });
        }
        Ok(word::position_of(&self.values, x).expect("in-range letter occurs"))
    }

    pub(crate) fn apply_dual(&mut self, x: u32) {
        let pos = word::position_of(&self.values, x).expect("in-range letter occurs");
        let (l, r) = word::smaller_flanks(&self.values, pos);
        word::swap_flanks(&mut self.values, l, pos, r);
    }

    pub(crate) fn apply_classical(&mut self, x: u32) {
        let pos = word::position_of(&self.values, x).expect("in-range letter occurs");
        let (l, r) = word::greater_flanks(&self.values, pos);
        word::swap_flanks(&mut self.values, l, pos, r);
    }
}

impl fmt::Display for Permutation {
    /// Comma-separated one-line values, e.g. `1,5,2,6,4,3,8,7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts comma-separated values (`1,5,2,6,...`) or, for `n <= 9`, the
    /// compact digit string (`1526...`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad value {tok:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else if s.chars().all(|c| c.is_ascii_digit()) {
            s.chars().map(|c| c.to_digit(10).unwrap()).collect()
        } else {
            return Err(Error::Parse(format!("cannot parse permutation {s:?}")));
        };
        Permutation::new(values)
    }
}

/// The five-way split `w1 w2 x w4 w5` of a word around the letter `x`;
/// every letter of `w2` and `w4` is smaller than `x` and both runs are
/// maximal. `x` is a vale exactly when both are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XFactorization {
    pub w1: Vec<u32>,
    pub w2: Vec<u32>,
    pub x: u32,
    pub w4: Vec<u32>,
    pub w5: Vec<u32>,
}

impl XFactorization {
    /// Concatenates the five parts back into the source word.
    pub fn reassemble(&self) -> Vec<u32> {
        let mut out =
            Vec::with_capacity(self.w1.len() + self.w2.len() + 1 + self.w4.len() + self.w5.len());
        out.extend_from_slice(&self.w1);
        out.extend_from_slice(&self.w2);
        out.push(self.x);
        out.extend_from_slice(&self.w4);
        out.extend_from_slice(&self.w5);
        out
    }
}

/// Visits every permutation of `{1, .., n}` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation)) {
    if n == 0 {
        return;
    }
    let mut p = Permutation::identity(n);
    loop {
        f(&p);
        if !next_lex(&mut p.values) {
            break;
        }
    }
}

fn next_lex(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
