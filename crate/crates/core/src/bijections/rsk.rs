//! Robinson-Schensted on involutions.
//!
//! For an involution the insertion and recording tableaux coincide, so only
//! one tableau is kept. The inverse runs reverse bumping with that tableau
//! playing both roles.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{DescentSet, Permutation, Symbol};

/// A standard Young tableau in English notation: rows strictly increase,
/// columns strictly increase, row lengths weakly decrease, entries are
/// `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct StandardTableau {
    rows: Vec<Vec<Symbol>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidWord(format!("not a standard tableau: {msg}")));
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return bad(format!("row {} is longer than the row above", r + 1));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > n || seen[v as usize] {
                    return bad(format!("entry {v} out of range or repeated"));
                }
                seen[v as usize] = true;
                if c > 0 && row[c - 1] >= v {
                    return bad(format!("row {} is not increasing", r + 1));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return bad(format!("column {} is not increasing", c + 1));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn transpose(&self) -> Self {
        let cols = self.num_cols();
        let rows = (0..cols)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        Self { rows }
    }

    fn row_of(&self) -> Vec<usize> {
        let mut at = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                at[v as usize] = r;
            }
        }
        at
    }

    /// `i` is a descent when `i + 1` sits in a strictly lower row than `i`.
    pub fn descent_set(&self) -> DescentSet {
        let at = self.row_of();
        DescentSet::from_positions((1..self.size()).filter(|&i| at[i + 1] > at[i]).collect())
    }
}

impl fmt::Display for StandardTableau {
    /// Rows separated by `" / "`, e.g. `"1 3 / 2 4"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, " / ")?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split_whitespace()
                    .map(|t| t.parse::<Symbol>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// Row insertion of `t`; the result is both insertion and recording tableau.
pub fn rsk(t: &Permutation) -> Result<StandardTableau> {
    if !t.is_involution() {
        return Err(Error::Domain(format!("{t} is not an involution")));
    }
    let mut rows: Vec<Vec<Symbol>> = Vec::new();
    for &v in t.as_slice() {
        let mut x = v;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let row = &mut rows[r];
            match row.iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut row[c], x);
                    r += 1;
                }
                None => {
                    row.push(x);
                    break;
                }
            }
        }
    }
    Ok(StandardTableau { rows })
}

/// The involution whose tableau is `tab`.
pub fn rsk_inv(tab: &StandardTableau) -> Permutation {
    let n = tab.size();
    let mut p = tab.rows.clone();
    let mut q = tab.rows.clone();
    let mut out = vec![0; n];
    for m in (1..=n as Symbol).rev() {
        let r = q
            .iter()
            .position(|row| row.last() == Some(&m))
            .expect("the largest remaining entry of a standard tableau is a corner");
        q[r].pop();
        let mut x = p[r].pop().expect("P and Q share a shape");
        for rr in (0..r).rev() {
            let row = &mut p[rr];
            let c = row.iter().rposition(|&y| y < x).expect("reverse bump target exists");
            x = std::mem::replace(&mut row[c], x);
        }
        if p[r].is_empty() {
            p.pop();
            q.pop();
        }
        out[m as usize - 1] = x;
    }
    Permutation::from_vec_unchecked(out)
}

/// `rsk_inv ∘ transpose ∘ rsk`: the involution with complementary descent
/// set.
pub fn descent_complement(t: &Permutation) -> Result<Permutation> {
    Ok(rsk_inv(&rsk(t)?.transpose()))
}
