//! Exhaustive generation of permutation classes.
//!
//! Positions are filled left to right. For involution families, choosing
//! `π(i) = j` also fixes `π(j) = i`, so only unset positions branch and
//! the candidates are `i` itself or a later unset position. Zig-zag
//! constraints are checked on every new adjacency, and forbidden patterns
//! are checked on the partial word of all set positions every
//! `check_interval` decisions; each check only looks for occurrences that
//! touch an entry placed since the previous check.
//!
//! The tree is split after `split_depth` decisions into subtrees that run
//! on the rayon pool. Subtree results are merged in subtree order, so every
//! output is identical to a single-threaded run.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::{Pattern, parse_pattern_list};
use crate::perm::{Permutation, Symbol, is_connected_slice};

/// The base family of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// All permutations.
    S,
    /// Involutions.
    I,
    /// Alternating permutations.
    A,
    /// Reverse alternating permutations.
    RA,
    /// Alternating involutions.
    AI,
    /// Reverse alternating involutions.
    RAI,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::S, Family::I, Family::A, Family::RA, Family::AI, Family::RAI];

    pub fn is_involutive(self) -> bool {
        matches!(self, Family::I | Family::AI | Family::RAI)
    }

    /// `Some(true)` when position 1 must ascend, `Some(false)` when it
    /// must descend.
    fn starts_up(self) -> Option<bool> {
        match self {
            Family::A | Family::AI => Some(true),
            Family::RA | Family::RAI => Some(false),
            Family::S | Family::I => None,
        }
    }

    /// Does `p` belong to the family (patterns aside)?
    pub fn admits(self, p: &Permutation) -> bool {
        let inv_ok = !self.is_involutive() || p.is_involution();
        let zz_ok = match self.starts_up() {
            Some(true) => p.is_alternating(),
            Some(false) => p.is_reverse_alternating(),
            None => true,
        };
        inv_ok && zz_ok
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::I => "I",
            Family::A => "A",
            Family::RA => "RA",
            Family::AI => "AI",
            Family::RAI => "RAI",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(Family::S),
            "i" => Ok(Family::I),
            "a" => Ok(Family::A),
            "ra" => Ok(Family::RA),
            "ai" => Ok(Family::AI),
            "rai" => Ok(Family::RAI),
            _ => Err(Error::Parse(format!("unknown family {s:?} (expected s|i|a|ra|ai|rai)"))),
        }
    }
}

/// A class of permutations of length `n`: a family minus everything
/// containing one of the forbidden patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSpec {
    pub family: Family,
    pub forbidden: Vec<Pattern>,
    pub n: usize,
}

impl ClassSpec {
    pub fn new(family: Family, forbidden: Vec<Pattern>, n: usize) -> Self {
        Self { family, forbidden, n }
    }

    /// Convenience constructor from a pattern list such as `"3421,4312"`.
    pub fn parse(family: Family, patterns: &str, n: usize) -> Result<Self> {
        Ok(Self::new(family, parse_pattern_list(patterns)?, n))
    }

    pub fn with_len(&self, n: usize) -> Self {
        Self { n, ..self.clone() }
    }

    /// Membership test straight from the definitions.
    pub fn admits(&self, p: &Permutation) -> bool {
        p.len() == self.n
            && self.family.admits(p)
            && self.forbidden.iter().all(|t| !t.occurs_in(p.as_slice()))
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}(", self.family, self.n)?;
        for (k, t) in self.forbidden.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// Search configuration.
#[derive(Clone, Debug)]
pub struct Enumerator {
    /// Pattern checks happen every this many decisions (and at leaves).
    pub check_interval: usize,
    /// Decisions made before the tree is split across workers.
    pub split_depth: usize,
    /// Abandon the search after this instant.
    pub deadline: Option<Instant>,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self { check_interval: 2, split_depth: 2, deadline: None }
    }
}

#[derive(Clone)]
struct Node {
    /// 0 marks an unset position.
    vals: Vec<Symbol>,
    used: Vec<bool>,
    /// All positions before `pos` are set.
    pos: usize,
    decisions: usize,
    since_check: usize,
    fresh: Vec<usize>,
}

struct Search<'a> {
    spec: &'a ClassSpec,
    cfg: &'a Enumerator,
    cancelled: AtomicBool,
}

/// Work counter shared by one subtree walk.
struct Tick(u32);

impl<'a> Search<'a> {
    fn root(&self) -> Node {
        let n = self.spec.n;
        Node {
            vals: vec![0; n],
            used: vec![false; n + 1],
            pos: 0,
            decisions: 0,
            since_check: 0,
            fresh: Vec::new(),
        }
    }

    fn check_budget(&self, tick: &mut Tick) -> Result<()> {
        tick.0 = tick.0.wrapping_add(1);
        if tick.0.is_multiple_of(1024) {
            if self.cancelled.load(Ordering::Relaxed) {
                return Err(Error::Cancelled);
            }
            if self.cfg.deadline.is_some_and(|d| Instant::now() > d) {
                self.cancelled.store(true, Ordering::Relaxed);
                return Err(Error::Cancelled);
            }
        }
        Ok(())
    }

    /// Adjacency constraint between positions `a` and `a + 1`, when both set.
    fn pair_ok(&self, vals: &[Symbol], a: usize) -> bool {
        let Some(up) = self.spec.family.starts_up() else { return true };
        let (x, y) = (vals[a], vals[a + 1]);
        if x == 0 || y == 0 {
            return true;
        }
        (x < y) == (a.is_multiple_of(2) == up)
    }

    fn place(&self, node: &mut Node, at: usize, v: Symbol) -> bool {
        node.vals[at] = v;
        node.used[v as usize] = true;
        node.fresh.push(at);
        let n = self.spec.n;
        (at == 0 || self.pair_ok(&node.vals, at - 1)) && (at + 1 >= n || self.pair_ok(&node.vals, at))
    }

    /// Checks the forbidden patterns against occurrences that touch a
    /// fresh entry, then clears the fresh set.
    fn patterns_ok(&self, node: &mut Node) -> bool {
        node.since_check = 0;
        if self.spec.forbidden.is_empty() || node.fresh.is_empty() {
            node.fresh.clear();
            return true;
        }
        let mut word = Vec::with_capacity(self.spec.n);
        let mut flags = Vec::with_capacity(self.spec.n);
        let mut is_fresh = vec![false; self.spec.n];
        for &f in &node.fresh {
            is_fresh[f] = true;
        }
        for (i, &v) in node.vals.iter().enumerate() {
            if v != 0 {
                word.push(v);
                flags.push(is_fresh[i]);
            }
        }
        node.fresh.clear();
        self.spec.forbidden.iter().all(|t| !t.occurs_touching(&word, &flags))
    }

    fn children(&self, node: &Node) -> Vec<Node> {
        let n = self.spec.n;
        let i = node.pos;
        let mut out = Vec::new();
        let candidates: Vec<Symbol> = if self.spec.family.is_involutive() {
            // value i+1 is free exactly when position i is unset
            std::iter::once(i)
                .chain((i + 1..n).filter(|&j| node.vals[j] == 0))
                .map(|j| j as Symbol + 1)
                .collect()
        } else {
            (1..=n as Symbol).filter(|&v| !node.used[v as usize]).collect()
        };
        for v in candidates {
            let mut child = node.clone();
            let mut ok = self.place(&mut child, i, v);
            if ok && self.spec.family.is_involutive() && v as usize != i + 1 {
                ok = self.place(&mut child, v as usize - 1, i as Symbol + 1);
            }
            if !ok {
                continue;
            }
            child.decisions += 1;
            child.since_check += 1;
            if child.since_check >= self.cfg.check_interval.max(1) && !self.patterns_ok(&mut child) {
                continue;
            }
            child.pos = i + 1;
            while child.pos < n && child.vals[child.pos] != 0 {
                child.pos += 1;
            }
            out.push(child);
        }
        out
    }

    /// Depth-first walk calling `leaf` on every member, in lexicographic
    /// order.
    fn walk(&self, node: Node, tick: &mut Tick, leaf: &mut dyn FnMut(&[Symbol])) -> Result<()> {
        self.check_budget(tick)?;
        if node.pos == self.spec.n {
            let mut node = node;
            if self.patterns_ok(&mut node) {
                debug_assert!(self.spec.admits(&Permutation::from_vec_unchecked(node.vals.clone())));
                leaf(&node.vals);
            }
            return Ok(());
        }
        for child in self.children(&node) {
            self.walk(child, tick, leaf)?;
        }
        Ok(())
    }

    /// Nodes at decision depth `split_depth` (or earlier leaves), in order.
    fn frontier(&self) -> Vec<Node> {
        let mut out = Vec::new();
        let mut stack = vec![self.root()];
        while let Some(node) = stack.pop() {
            if node.pos == self.spec.n || node.decisions >= self.cfg.split_depth {
                out.push(node);
            } else {
                let mut kids = self.children(&node);
                kids.reverse();
                stack.extend(kids);
            }
        }
        out
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }

    /// Runs the search, folding each subtree into its own accumulator.
    /// Accumulators come back in subtree (hence lexicographic) order.
    pub fn fold_subtrees<A, I, F>(&self, spec: &ClassSpec, init: I, leaf: F) -> Result<Vec<A>>
    where
        A: Send,
        I: Fn() -> A + Sync,
        F: Fn(&mut A, &[Symbol]) + Sync,
    {
        let search = Search { spec, cfg: self, cancelled: AtomicBool::new(false) };
        let frontier = search.frontier();
        frontier
            .into_par_iter()
            .map(|node| {
                let mut acc = init();
                let mut tick = Tick(0);
                search.walk(node, &mut tick, &mut |w| leaf(&mut acc, w))?;
                Ok(acc)
            })
            .collect()
    }

    /// Calls `f` on every member in lexicographic order, single-threaded.
    pub fn for_each(&self, spec: &ClassSpec, mut f: impl FnMut(&Permutation)) -> Result<()> {
        let search = Search { spec, cfg: self, cancelled: AtomicBool::new(false) };
        let mut tick = Tick(0);
        search.walk(search.root(), &mut tick, &mut |w| {
            f(&Permutation::from_vec_unchecked(w.to_vec()))
        })
    }

    pub fn generate(&self, spec: &ClassSpec) -> Result<Vec<Permutation>> {
        let parts = self.fold_subtrees(spec, Vec::new, |acc, w| {
            acc.push(Permutation::from_vec_unchecked(w.to_vec()))
        })?;
        Ok(parts.into_iter().flatten().collect())
    }

    pub fn count(&self, spec: &ClassSpec) -> Result<u64> {
        let parts = self.fold_subtrees(spec, || 0u64, |acc, _| *acc += 1)?;
        Ok(parts.into_iter().sum())
    }

    /// Number of members with a single connected component.
    pub fn count_connected(&self, spec: &ClassSpec) -> Result<u64> {
        let parts = self.fold_subtrees(spec, || 0u64, |acc, w| {
            if is_connected_slice(w) {
                *acc += 1
            }
        })?;
        Ok(parts.into_iter().sum())
    }
}

/// All members of `spec` in lexicographic order.
pub fn generate(spec: &ClassSpec) -> Vec<Permutation> {
    Enumerator::default().generate(spec).expect("no deadline set")
}

pub fn count(spec: &ClassSpec) -> u64 {
    Enumerator::default().count(spec).expect("no deadline set")
}

pub fn count_connected(spec: &ClassSpec) -> u64 {
    Enumerator::default().count_connected(spec).expect("no deadline set")
}
