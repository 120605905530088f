//! The rank-based map `f : S_n(12…(k-1)k) → S_n(12…k(k-1))`.
//!
//! With `k = 3` this is the Simion-Schmidt bijection.

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::perm::{Permutation, Symbol};

/// For each entry, the length of the longest increasing subsequence ending
/// there.
pub fn rank_labels(p: &Permutation) -> Vec<usize> {
    let w = p.as_slice();
    let mut rank = vec![1usize; w.len()];
    for j in 0..w.len() {
        for i in 0..j {
            if w[i] < w[j] && rank[i] + 1 > rank[j] {
                rank[j] = rank[i] + 1;
            }
        }
    }
    rank
}

fn increasing(k: usize) -> Pattern {
    Pattern::from_symbols(&(1..=k as Symbol).collect::<Vec<_>>()).expect("identity pattern")
}

/// `12…(k-2) k (k-1)`.
fn increasing_with_last_swapped(k: usize) -> Pattern {
    let mut v: Vec<Symbol> = (1..=k as Symbol).collect();
    v.swap(k - 2, k - 1);
    Pattern::from_symbols(&v).expect("permutation pattern")
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::Domain(format!("k must be at least 3, got {k}")));
    }
    Ok(())
}

/// Keeps entries of rank below `k-1`; each rank-`(k-1)` position gets the
/// smallest unused rank-`(k-1)` value exceeding the nearest rank-`(k-2)`
/// entry to its left.
pub fn west_f(p: &Permutation, k: usize) -> Result<Permutation> {
    check_k(k)?;
    if increasing(k).occurs_in(p.as_slice()) {
        return Err(Error::Domain(format!("{p} contains the increasing pattern of length {k}")));
    }
    let w = p.as_slice();
    let rank = rank_labels(p);
    let top = k - 1;
    let mut pool: Vec<Symbol> = (0..w.len()).filter(|&j| rank[j] == top).map(|j| w[j]).collect();
    pool.sort_unstable();
    let mut out = w.to_vec();
    let mut bound: Symbol = 0;
    for j in 0..w.len() {
        if rank[j] == top - 1 {
            bound = w[j];
        } else if rank[j] == top {
            let idx = pool.iter().position(|&v| v > bound).ok_or_else(|| {
                Error::Invariant(format!("no rank-{top} value above {bound} left for position {}", j + 1))
            })?;
            out[j] = pool.remove(idx);
        }
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// Inverse of [`west_f`]: the entries of rank at least `k-1` are
/// rearranged into decreasing order.
pub fn west_f_inv(q: &Permutation, k: usize) -> Result<Permutation> {
    check_k(k)?;
    if increasing_with_last_swapped(k).occurs_in(q.as_slice()) {
        return Err(Error::Domain(format!(
            "{q} contains {}",
            increasing_with_last_swapped(k)
        )));
    }
    let w = q.as_slice();
    let rank = rank_labels(q);
    let slots: Vec<usize> = (0..w.len()).filter(|&j| rank[j] >= k - 1).collect();
    let mut vals: Vec<Symbol> = slots.iter().map(|&j| w[j]).collect();
    vals.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = w.to_vec();
    for (j, v) in slots.into_iter().zip(vals) {
        out[j] = v;
    }
    Ok(Permutation::from_vec_unchecked(out))
}
