//! Permutations in one-line notation and the statistics used throughout
//! the crate.
//!
//! Symbols are 1-based: a permutation of length `n` is a rearrangement of
//! `1..=n`. The empty permutation is valid.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A symbol of a permutation.
pub type Symbol = u32;

/// A permutation `π₁…πₙ` of `{1, …, n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    entries: Vec<Symbol>,
}

/// The set of descents `{i : πᵢ > πᵢ₊₁}` of a permutation, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DescentSet {
    positions: Vec<usize>,
}

/// One block of the connected-component decomposition.
///
/// `offset` is the number of symbols before the block, so the block's
/// values in the original permutation are `perm` shifted up by `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub offset: Symbol,
    pub perm: Permutation,
}

impl Component {
    /// The block as it appears inside the original permutation.
    pub fn shifted(&self) -> Vec<Symbol> {
        self.perm.entries.iter().map(|&v| v + self.offset).collect()
    }
}

impl Permutation {
    /// Builds a permutation, checking that `entries` is a rearrangement of
    /// `1..=entries.len()`.
    pub fn new(entries: Vec<Symbol>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let idx = v as usize;
            if v == 0 || idx > n {
                return Err(Error::NotAPermutation(format!(
                    "symbol {v} is outside 1..={n}"
                )));
            }
            if seen[idx] {
                return Err(Error::NotAPermutation(format!("symbol {v} repeated")));
            }
            seen[idx] = true;
        }
        Ok(Self { entries })
    }

    /// Caller guarantees `entries` is a permutation of `1..=len`.
    pub(crate) fn from_vec_unchecked(entries: Vec<Symbol>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn identity(n: usize) -> Self {
        Self { entries: (1..=n as Symbol).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.entries
    }

    /// `π(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> Symbol {
        self.entries[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v as usize - 1] = i as Symbol + 1;
        }
        Self { entries: inv }
    }

    pub fn reverse(&self) -> Self {
        Self { entries: self.entries.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Self {
        let top = self.len() as Symbol + 1;
        Self { entries: self.entries.iter().map(|&v| top - v).collect() }
    }

    pub fn reverse_complement(&self) -> Self {
        let top = self.len() as Symbol + 1;
        Self { entries: self.entries.iter().rev().map(|&v| top - v).collect() }
    }

    pub fn is_involution(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &v)| self.entries[v as usize - 1] as usize == i + 1)
    }

    /// `πᵢ < πᵢ₊₁` exactly when `i` is odd.
    pub fn is_alternating(&self) -> bool {
        zigzag(&self.entries, true)
    }

    /// `πᵢ > πᵢ₊₁` exactly when `i` is odd.
    pub fn is_reverse_alternating(&self) -> bool {
        zigzag(&self.entries, false)
    }

    pub fn descent_set(&self) -> DescentSet {
        DescentSet {
            positions: self
                .entries
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0] > w[1])
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }

    /// Left-to-right minima, as values in order of appearance.
    pub fn ltr_minima(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        let mut best = Symbol::MAX;
        for &v in &self.entries {
            if v < best {
                best = v;
                out.push(v);
            }
        }
        out
    }

    /// Right-to-left maxima, as values in order of appearance from the left.
    pub fn rtl_maxima(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        let mut best = 0;
        for &v in self.entries.iter().rev() {
            if v > best {
                best = v;
                out.push(v);
            }
        }
        out.reverse();
        out
    }

    /// Finest decomposition `π = w₁w₂…w_k` into blocks on consecutive
    /// value intervals.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut out = Vec::new();
        let mut start = 0usize;
        let mut max = 0;
        for (i, &v) in self.entries.iter().enumerate() {
            max = max.max(v);
            if max as usize == i + 1 {
                let offset = start as Symbol;
                let perm = self.entries[start..=i].iter().map(|&x| x - offset).collect();
                out.push(Component { offset, perm: Self { entries: perm } });
                start = i + 1;
            }
        }
        out
    }

    /// A single connected component. The empty permutation is not connected.
    pub fn is_connected(&self) -> bool {
        is_connected_slice(&self.entries)
    }

    /// Appends `other` shifted above every symbol of `self` (direct sum).
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let offset = self.len() as Symbol;
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|&v| v + offset));
        Self { entries }
    }
}

pub(crate) fn zigzag(entries: &[Symbol], starts_up: bool) -> bool {
    entries
        .windows(2)
        .enumerate()
        .all(|(i, w)| (w[0] < w[1]) == ((i % 2 == 0) == starts_up))
}

pub(crate) fn is_connected_slice(entries: &[Symbol]) -> bool {
    let n = entries.len();
    if n == 0 {
        return false;
    }
    let mut max = 0;
    for (i, &v) in entries[..n - 1].iter().enumerate() {
        max = max.max(v);
        if max as usize == i + 1 {
            return false;
        }
    }
    true
}

/// The unique permutation order-isomorphic to `word`.
pub fn standardize(word: &[Symbol]) -> Result<Permutation> {
    if word.contains(&0) {
        return Err(Error::NotAPermutation("symbol 0 is not allowed".into()));
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    if let Some(w) = order.windows(2).find(|w| word[w[0]] == word[w[1]]) {
        return Err(Error::NotAPermutation(format!(
            "cannot standardize: symbol {} repeated",
            word[w[0]]
        )));
    }
    let mut entries = vec![0; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        entries[i] = rank as Symbol + 1;
    }
    Ok(Permutation { entries })
}

impl DescentSet {
    pub fn from_positions(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        Self { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `[n-1] \ self`.
    pub fn complement_in(&self, n: usize) -> Self {
        Self { positions: (1..n).filter(|&i| !self.contains(i)).collect() }
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.positions.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses space-separated (or comma-separated) symbols, e.g. `"6 2 8 4 5 1"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<Symbol>()
                    .map_err(|_| Error::Parse(format!("bad symbol {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl TryFrom<Vec<Symbol>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<Symbol>) -> Result<Self> {
        Self::new(v)
    }
}

impl AsRef<[Symbol]> for Permutation {
    fn as_ref(&self) -> &[Symbol] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
        assert!("1 x 2".parse::<Permutation>().is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("1 2 3").inverse(), p("1 2 3"));
        assert_eq!(p("5 9 3 7 1 6 4 8 2").inverse(), p("5 9 3 7 1 6 4 8 2"));
        assert_eq!(p("2 3 1").inverse(), p("3 1 2"));
        // composing π with its inverse by hand
        let q = p("5 9 3 7 1 6 4 8 2");
        for i in 1..=9 {
            assert_eq!(q.at(q.at(i) as usize), i as Symbol);
        }
    }

    #[test]
    fn symmetries() {
        assert_eq!(p("1 2 3").reverse(), p("3 2 1"));
        assert_eq!(p("1 2 3").complement(), p("3 2 1"));
        assert_eq!(p("2 1 4 3").reverse_complement(), p("2 1 4 3"));
        assert_eq!(p("1 3 2").reverse_complement(), p("2 1 3"));
    }

    #[test]
    fn zigzag_predicates() {
        assert!(p("4 6 1 5 2 7 3").is_alternating());
        assert!(!p("4 6 1 5 2 7 3").is_reverse_alternating());
        assert!(p("5 3 7 2 6 1 4").is_reverse_alternating());
        assert!(p("1").is_alternating() && p("1").is_reverse_alternating());
        assert!(Permutation::identity(0).is_alternating());
        assert!(Permutation::identity(0).is_reverse_alternating());
    }

    #[test]
    fn descents() {
        assert_eq!(p("4 6 1 5 2 7 3").descent_set().positions(), &[2, 4, 6]);
        assert!(p("1 2 3 4").descent_set().is_empty());
        assert_eq!(p("3 2 1").descent_set().positions(), &[1, 2]);
        assert_eq!(p("3 2 1").descent_set().to_string(), "{1, 2}");
    }

    #[test]
    fn ltr_minima_and_rtl_maxima() {
        let q = p("7 9 4 3 5 6 1 10 2 8");
        assert_eq!(q.ltr_minima(), vec![7, 4, 3, 1]);
        assert_eq!(q.rtl_maxima(), vec![10, 8]);
        assert_eq!(p("1 2 3").ltr_minima(), vec![1]);
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&[5, 9, 7]).unwrap(), p("1 3 2"));
        assert_eq!(standardize(&[2, 1, 4, 3]).unwrap(), p("2 1 4 3"));
        assert_eq!(standardize(&[10, 6, 8, 2]).unwrap(), p("4 2 3 1"));
        assert!(standardize(&[3, 5, 3]).is_err());
        assert!(standardize(&[0, 5]).is_err());
    }

    #[test]
    fn components() {
        let c = p("3 4 2 1 5 7 8 6").connected_components();
        let perms: Vec<String> = c.iter().map(|c| c.perm.to_string()).collect();
        assert_eq!(perms, vec!["3 4 2 1", "1", "2 3 1"]);
        assert_eq!(c[2].shifted(), vec![7, 8, 6]);
        assert_eq!(c.iter().map(|c| c.offset).collect::<Vec<_>>(), vec![0, 4, 5]);

        assert_eq!(p("1 2 3").connected_components().len(), 3);
        let single = p("2 3 1").connected_components();
        assert_eq!(single.len(), 1);
        assert!(p("2 3 1").is_connected());
        assert!(!p("1 2").is_connected());
        assert!(p("1").is_connected());
        assert!(Permutation::identity(0).connected_components().is_empty());
    }

    #[test]
    fn text_round_trip() {
        let q = p("6 2 8 4 5 1 10 3 9 7");
        assert_eq!(q.to_string(), "6 2 8 4 5 1 10 3 9 7");
        assert_eq!("1,3,2".parse::<Permutation>().unwrap(), p("1 3 2"));
    }
}
