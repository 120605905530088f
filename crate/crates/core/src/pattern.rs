//! Classical pattern containment.
//!
//! Matching is a depth-first search over index choices. For every step `t`
//! of the pattern we precompute which earlier pattern entries bound the
//! value of the `t`-th match from below and above, so each candidate entry
//! is tested against at most two already-chosen entries.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Symbol};

/// A classical pattern `τ ∈ S_k`, `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    perm: Permutation,
    /// For step `t`, the earlier step holding the largest value below `τ_t`.
    below: Vec<Option<usize>>,
    /// For step `t`, the earlier step holding the smallest value above `τ_t`.
    above: Vec<Option<usize>>,
}

impl Pattern {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.is_empty() {
            return Err(Error::Parse("a pattern must have length at least 1".into()));
        }
        let tau = perm.as_slice();
        let mut below = Vec::with_capacity(tau.len());
        let mut above = Vec::with_capacity(tau.len());
        for t in 0..tau.len() {
            let lo = (0..t).filter(|&s| tau[s] < tau[t]).max_by_key(|&s| tau[s]);
            let hi = (0..t).filter(|&s| tau[s] > tau[t]).min_by_key(|&s| tau[s]);
            below.push(lo);
            above.push(hi);
        }
        Ok(Self { perm, below, above })
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Result<Self> {
        Self::new(Permutation::new(symbols.to_vec())?)
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.perm.inverse()).expect("inverse of a pattern is a pattern")
    }

    pub fn reverse_complement(&self) -> Self {
        Self::new(self.perm.reverse_complement()).expect("rc of a pattern is a pattern")
    }

    /// Does some subsequence of `word` (distinct symbols) standardize to
    /// this pattern?
    pub fn occurs_in(&self, word: &[Symbol]) -> bool {
        self.find_in(word).is_some()
    }

    /// The lexicographically smallest list of 0-based indices of an
    /// occurrence in `word`.
    pub fn find_in(&self, word: &[Symbol]) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(self.len());
        if self.search(word, 0, &mut chosen, None) {
            Some(chosen)
        } else {
            None
        }
    }

    /// Is there an occurrence using at least one index flagged in `fresh`?
    ///
    /// Used by the generators: an occurrence free of fresh entries was
    /// already ruled out by an earlier check.
    pub fn occurs_touching(&self, word: &[Symbol], fresh: &[bool]) -> bool {
        debug_assert_eq!(word.len(), fresh.len());
        // fresh_suffix[i]: some index >= i is fresh
        let mut fresh_suffix = vec![false; word.len() + 1];
        for i in (0..word.len()).rev() {
            fresh_suffix[i] = fresh[i] || fresh_suffix[i + 1];
        }
        let mut chosen = Vec::with_capacity(self.len());
        self.search(word, 0, &mut chosen, Some((fresh, &fresh_suffix, false)))
    }

    fn search(
        &self,
        word: &[Symbol],
        start: usize,
        chosen: &mut Vec<usize>,
        fresh: Option<(&[bool], &[bool], bool)>,
    ) -> bool {
        let t = chosen.len();
        let k = self.len();
        if t == k {
            return fresh.is_none_or(|(_, _, used)| used);
        }
        if let Some((_, suffix, used)) = fresh {
            if !used && !suffix[start] {
                return false;
            }
        }
        let lo = self.below[t].map(|s| word[chosen[s]]);
        let hi = self.above[t].map(|s| word[chosen[s]]);
        let last = word.len().saturating_sub(k - t - 1);
        for i in start..last {
            let v = word[i];
            if lo.is_some_and(|l| v < l) || hi.is_some_and(|h| v > h) {
                continue;
            }
            chosen.push(i);
            let next = fresh.map(|(f, s, used)| (f, s, used || f[i]));
            if self.search(word, i + 1, chosen, next) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Does `p` contain `t`?
pub fn contains(p: &Permutation, t: &Pattern) -> bool {
    t.occurs_in(p.as_slice())
}

pub fn avoids(p: &Permutation, t: &Pattern) -> bool {
    !contains(p, t)
}

pub fn avoids_all(p: &Permutation, ts: &[Pattern]) -> bool {
    ts.iter().all(|t| avoids(p, t))
}

/// Leftmost-lexicographic occurrence of `t` in `p`, as 1-based positions.
pub fn find_occurrence(p: &Permutation, t: &Pattern) -> Option<Vec<usize>> {
    t.find_in(p.as_slice()).map(|ix| ix.into_iter().map(|i| i + 1).collect())
}

/// Parses a comma-separated pattern list such as `"3421,4312"`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<Pattern>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

impl fmt::Display for Pattern {
    /// Compact digits when every symbol is at most 9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in self.perm.as_slice() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.perm)
        }
    }
}

/// Accepts compact digit strings (`"4321"`) or space-separated symbols.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let perm = if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
            let symbols = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
            Permutation::new(symbols)?
        } else {
            s.parse()?
        };
        Self::new(perm)
    }
}
