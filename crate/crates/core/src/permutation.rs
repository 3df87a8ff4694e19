//! Permutations in one-line notation and the surgery used to build patterns.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation, `n >= 1`.
///
/// Positions are zero-based throughout the library; letters are the values
/// `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    letters: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation, checking that `letters` is exactly `{1, ..., n}`.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::invalid("a permutation needs at least one letter"));
        }
        let n = letters.len();
        let mut seen = vec![false; n];
        for &l in &letters {
            let idx = l as usize;
            if idx == 0 || idx > n {
                return Err(Error::invalid(format!("letter {l} is outside 1..={n}")));
            }
            if seen[idx - 1] {
                return Err(Error::invalid(format!("letter {l} appears twice")));
            }
            seen[idx - 1] = true;
        }
        Ok(Permutation { letters })
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(letters.clone()).is_ok());
        Permutation { letters }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity needs n >= 1");
        Permutation {
            letters: (1..=n as u32).collect(),
        }
    }

    /// The decreasing permutation `n (n-1) ... 1`.
    pub fn decreasing(n: usize) -> Self {
        assert!(n >= 1, "decreasing needs n >= 1");
        Permutation {
            letters: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.letters
    }

    /// Inserts a new letter of value `rank` at `site`, shifting every
    /// letter `>= rank` up by one.
    ///
    /// Site `s` is the gap before zero-based position `s`: site 0 is the
    /// front, site `n` the back. The new letter lands at position `site`.
    pub fn insert_at_site(&self, site: usize, rank: u32) -> Result<Self> {
        let n = self.len();
        if site > n {
            return Err(Error::invalid(format!("site {site} is outside 0..={n}")));
        }
        if rank == 0 || rank as usize > n + 1 {
            return Err(Error::invalid(format!(
                "rank {rank} is outside 1..={}",
                n + 1
            )));
        }
        let mut letters = Vec::with_capacity(n + 1);
        letters.extend(
            self.letters
                .iter()
                .map(|&l| if l >= rank { l + 1 } else { l }),
        );
        letters.insert(site, rank);
        Ok(Permutation { letters })
    }

    /// Removes the letters at the given zero-based positions and
    /// re-normalizes what is left.
    pub fn delete_positions(&self, positions: &[usize]) -> Result<Self> {
        let n = self.len();
        let mut drop = vec![false; n];
        for &p in positions {
            if p >= n {
                return Err(Error::invalid(format!("position {p} is outside 0..{n}")));
            }
            drop[p] = true;
        }
        let kept: Vec<u32> = self
            .letters
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(&l, _)| l)
            .collect();
        if kept.is_empty() {
            return Err(Error::invalid("cannot delete every position"));
        }
        Ok(standardize(&kept))
    }

    /// The pattern formed by the letters at `positions` (in the given order).
    pub fn restrict(&self, positions: &[usize]) -> Self {
        let vals: Vec<u32> = positions.iter().map(|&p| self.letters[p]).collect();
        standardize(&vals)
    }

    /// Every permutation of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        assert!(n >= 1, "Permutation::all needs n >= 1");
        Permutations {
            current: Some((1..=n as u32).collect()),
            first: None,
        }
    }

    /// The permutations of `[n]` beginning with `first`, in lexicographic
    /// order. These shards partition `Permutation::all(n)`.
    pub fn all_with_first(n: usize, first: u32) -> Permutations {
        assert!(n >= 1 && first >= 1 && first as usize <= n);
        let mut start = Vec::with_capacity(n);
        start.push(first);
        start.extend((1..=n as u32).filter(|&l| l != first));
        Permutations {
            current: Some(start),
            first: Some(first),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_letters(&self.letters, |_| ""))
    }
}

/// Lexicographic iterator over permutations, optionally pinned to a first
/// letter.
#[derive(Clone, Debug)]
pub struct Permutations {
    current: Option<Vec<u32>>,
    first: Option<u32>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) && self.first.is_none_or(|f| succ[0] == f) {
            self.current = Some(succ);
        }
        Some(Permutation { letters: cur })
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
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

/// Replaces each value by its rank among `values` (smallest becomes 1).
///
/// Works for any totally comparable values: integers, floats, rationals.
/// Duplicates and incomparable values (NaN) are rejected.
pub fn normalize<T: PartialOrd>(values: &[T]) -> Result<Permutation> {
    if values.is_empty() {
        return Err(Error::invalid("cannot normalize an empty sequence"));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    let mut incomparable = false;
    order.sort_by(|&a, &b| {
        values[a].partial_cmp(&values[b]).unwrap_or_else(|| {
            incomparable = true;
            Ordering::Equal
        })
    });
    if incomparable {
        return Err(Error::invalid("values are not totally ordered"));
    }
    for w in order.windows(2) {
        if values[w[0]].partial_cmp(&values[w[1]]) != Some(Ordering::Less) {
            return Err(Error::invalid("values must be pairwise distinct"));
        }
    }
    let mut letters = vec![0u32; values.len()];
    for (rank, &idx) in order.iter().enumerate() {
        letters[idx] = rank as u32 + 1;
    }
    Ok(Permutation { letters })
}

/// Rank sequence of distinct integer values, without error plumbing.
pub(crate) fn standardize(values: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut letters = vec![0u32; values.len()];
    for (rank, &idx) in order.iter().enumerate() {
        letters[idx] = rank as u32 + 1;
    }
    Permutation::from_vec_unchecked(letters)
}
