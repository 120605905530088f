//! The active-dot swap between `AI_n(12τ, 12τ⁻¹)` and `AI_n(21τ, 21τ⁻¹)`.
//!
//! A permutation is drawn as dots `(i, π(i))`, column `i`, row `π(i)`,
//! rows counted from the bottom. A dot is active when it plays the 1 or 2
//! in an occurrence of `12τ`, `12τ⁻¹`, `21τ` or `21τ⁻¹`; the pair playing
//! the `12` (or `21`) is an active pair. `λ_π` is the union over active
//! pairs of the smallest rectangle anchored at `(1, 1)` containing both
//! dots.
//!
//! The swap keeps every inactive dot and replaces the active dots by the
//! symmetric partial rook placement on `λ_π` that occupies the same rows
//! and columns and contains no `21` inside `λ_π`. That placement is found
//! by exhaustive search, and the search fails loudly unless it is unique.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::perm::{Permutation, Symbol};

/// A Young diagram (French notation, anchored at `(1, 1)`) with dots.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RookDiagram {
    /// Height of columns `1, 2, …`, weakly decreasing, no trailing zeros.
    pub heights: Vec<usize>,
    /// `(column, row)` cells, at most one per row and column.
    pub dots: Vec<(usize, usize)>,
}

impl RookDiagram {
    /// Is the cell `(column, row)` (1-based) inside the diagram?
    pub fn contains_cell(&self, col: usize, row: usize) -> bool {
        col >= 1 && row >= 1 && self.heights.get(col - 1).is_some_and(|&h| row <= h)
    }

    pub fn cell_count(&self) -> usize {
        self.heights.iter().sum()
    }

    /// The diagram reflected in the main diagonal.
    pub fn conjugate_heights(&self) -> Vec<usize> {
        let rows = self.heights.first().copied().unwrap_or(0);
        (1..=rows).map(|r| self.heights.iter().take_while(|&&h| h >= r).count()).collect()
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate_heights() == self.heights
    }

    /// Do the dots, restricted to rectangles inside the diagram, avoid `21`?
    pub fn avoids_21(&self) -> bool {
        self.dots.iter().all(|&(c1, r1)| {
            self.dots.iter().all(|&(c2, r2)| !(c1 < c2 && r1 > r2 && self.contains_cell(c2, r1)))
        })
    }

    /// Do the dots, restricted to rectangles inside the diagram, avoid `12`?
    pub fn avoids_12(&self) -> bool {
        self.dots.iter().all(|&(c1, r1)| {
            self.dots.iter().all(|&(c2, r2)| !(c1 < c2 && r1 < r2 && self.contains_cell(c2, r2)))
        })
    }
}

/// The four patterns `12τ`, `(12τ)⁻¹`, `21τ`, `(21τ)⁻¹`, for `τ` a
/// permutation of `{3, …, m}` given in one-line notation.
fn tail_patterns(tail: &[Symbol]) -> Result<[Pattern; 4]> {
    let m = tail.len() + 2;
    let mut sorted = tail.to_vec();
    sorted.sort_unstable();
    if tail.is_empty() || sorted != (3..=m as Symbol).collect::<Vec<_>>() {
        return Err(Error::Parse(format!(
            "tail must be a nonempty permutation of 3..=m, got {tail:?}"
        )));
    }
    let with = |a: Symbol, b: Symbol| {
        let mut v = vec![a, b];
        v.extend_from_slice(tail);
        Pattern::from_symbols(&v).expect("valid pattern")
    };
    let p12 = with(1, 2);
    let p21 = with(2, 1);
    Ok([p12.inverse(), p12, p21.inverse(), p21])
}

/// Does some occurrence of `pat` start at positions `a < b` (0-based)?
fn pair_starts_occurrence(w: &[Symbol], a: usize, b: usize, pat: &Pattern) -> bool {
    let s = pat.perm().as_slice();
    let ascending = s[0] < s[1];
    if (w[a] < w[b]) != ascending {
        return false;
    }
    // the tail of every pattern here sits above both leading entries
    let floor = w[a].max(w[b]);
    let rest: Vec<Symbol> = w[b + 1..].iter().copied().filter(|&v| v > floor).collect();
    let tail = crate::perm::standardize(&s[2..]).expect("distinct symbols");
    Pattern::new(tail).expect("nonempty tail").occurs_in(&rest)
}

/// Active pairs as 0-based position pairs `(a, b)`, `a < b`.
fn active_pairs(p: &Permutation, tail: &[Symbol]) -> Result<Vec<(usize, usize)>> {
    let pats = tail_patterns(tail)?;
    let w = p.as_slice();
    let mut pairs = Vec::new();
    for b in 0..w.len() {
        for a in 0..b {
            if pats.iter().any(|t| pair_starts_occurrence(w, a, b, t)) {
                pairs.push((a, b));
            }
        }
    }
    Ok(pairs)
}

/// 1-based positions of the active dots.
pub fn active_dots(p: &Permutation, tail: &[Symbol]) -> Result<BTreeSet<usize>> {
    Ok(active_pairs(p, tail)?.into_iter().flat_map(|(a, b)| [a + 1, b + 1]).collect())
}

/// `λ_π` together with the active dots.
pub fn young_lambda(p: &Permutation, tail: &[Symbol]) -> Result<RookDiagram> {
    let w = p.as_slice();
    let pairs = active_pairs(p, tail)?;
    let mut heights = vec![0usize; w.len()];
    for &(a, b) in &pairs {
        let top = w[a].max(w[b]) as usize;
        for h in heights.iter_mut().take(b + 1) {
            *h = (*h).max(top);
        }
    }
    while heights.last() == Some(&0) {
        heights.pop();
    }
    let dots = active_dots(p, tail)?.into_iter().map(|i| (i, w[i - 1] as usize)).collect();
    Ok(RookDiagram { heights, dots })
}

/// Every symmetric partial rook placement on `shape` using exactly the rows
/// and columns in `support` and avoiding `21`, stopping after `limit`.
fn symmetric_21_avoiders(shape: &RookDiagram, support: &[usize], limit: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        shape: &RookDiagram,
        support: &[usize],
        mate: &mut Vec<Option<usize>>,
        limit: usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if out.len() >= limit {
            return;
        }
        let Some(i) = mate.iter().position(Option::is_none) else {
            let dots = support.iter().enumerate().map(|(k, &c)| (c, support[mate[k].unwrap()])).collect();
            out.push(dots);
            return;
        };
        for j in i..support.len() {
            if mate[j].is_some() {
                continue;
            }
            let (x, y) = (support[i], support[j]);
            if !shape.contains_cell(x, y) || !shape.contains_cell(y, x) {
                continue;
            }
            mate[i] = Some(j);
            mate[j] = Some(i);
            let placed: Vec<(usize, usize)> = support
                .iter()
                .enumerate()
                .filter_map(|(k, &c)| mate[k].map(|m| (c, support[m])))
                .collect();
            let partial = RookDiagram { heights: shape.heights.clone(), dots: placed };
            if partial.avoids_21() {
                rec(shape, support, mate, limit, out);
            }
            mate[i] = None;
            mate[j] = None;
        }
    }
    let mut out = Vec::new();
    let mut mate = vec![None; support.len()];
    rec(shape, support, &mut mate, limit, &mut out);
    out
}

/// `φ : AI_n(12τ, 12τ⁻¹) → AI_n(21τ, 21τ⁻¹)`.
///
/// Returns [`Error::Invariant`] if the replacement placement is not unique.
pub fn jaggard_swap(p: &Permutation, tail: &[Symbol]) -> Result<Permutation> {
    let pats = tail_patterns(tail)?;
    if !p.is_involution() || !p.is_alternating() {
        return Err(Error::Domain(format!("{p} is not an alternating involution")));
    }
    if let Some(t) = pats[..2].iter().find(|t| t.occurs_in(p.as_slice())) {
        return Err(Error::Domain(format!("{p} contains {t}")));
    }
    let lambda = young_lambda(p, tail)?;
    let support: Vec<usize> = lambda.dots.iter().map(|&(c, _)| c).collect();
    let found = symmetric_21_avoiders(&lambda, &support, 2);
    if found.len() != 1 {
        return Err(Error::Invariant(format!(
            "expected exactly one 21-avoiding symmetric placement for {p}, found {}",
            if found.is_empty() { "none" } else { "several" }
        )));
    }
    let mut out = p.as_slice().to_vec();
    for &(c, r) in &found[0] {
        out[c - 1] = r as Symbol;
    }
    Ok(Permutation::from_vec_unchecked(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let pi = p("5 9 3 7 1 6 4 8 2");
        let act = active_dots(&pi, &[4, 3, 5]).unwrap();
        assert_eq!(act.into_iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(jaggard_swap(&pi, &[4, 3, 5]).unwrap(), p("1 9 5 7 3 6 4 8 2"));
    }

    #[test]
    fn lambda_of_the_example() {
        let pi = p("5 9 3 7 1 6 4 8 2");
        let lam = young_lambda(&pi, &[4, 3, 5]).unwrap();
        assert!(lam.is_self_conjugate());
        assert!(lam.dots.iter().all(|&(c, r)| lam.contains_cell(c, r)));
        // independent recomputation: union of anchored rectangles, cell by cell
        let w = pi.as_slice();
        let mut cells = BTreeSet::new();
        for (a, b) in active_pairs(&pi, &[4, 3, 5]).unwrap() {
            for c in 1..=b + 1 {
                for r in 1..=w[a].max(w[b]) as usize {
                    cells.insert((c, r));
                }
            }
        }
        let from_heights: BTreeSet<_> = lam
            .heights
            .iter()
            .enumerate()
            .flat_map(|(c, &h)| (1..=h).map(move |r| (c + 1, r)))
            .collect();
        assert_eq!(cells, from_heights);
        assert_eq!(lam.heights, vec![5, 5, 5, 3, 3]);
    }

    #[test]
    fn empty_active_set_is_fixed() {
        let pi = p("3 2 1");
        assert!(active_dots(&pi, &[4, 3, 5]).unwrap().is_empty());
        let q = p("1 3 2 5 4");
        assert_eq!(jaggard_swap(&q, &[4, 3, 5]).unwrap(), q);
    }

    #[test]
    fn domain_checks() {
        assert!(jaggard_swap(&p("2 1"), &[3]).is_err());
        assert!(jaggard_swap(&p("1 2 4 3"), &[4, 3]).is_err());
        assert!(active_dots(&p("1 2"), &[4]).is_err());
    }
}
