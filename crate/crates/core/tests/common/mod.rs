//! Independent oracles: involutions built as matchings, patterns checked
//! by trying every subsequence.

#![allow(dead_code)]

use altinv::Family;

/// Does some length-`t.len()` subsequence of `w` have the shape of `t`?
pub fn naive_contains(w: &[u32], t: &[u32]) -> bool {
    fn rec(w: &[u32], t: &[u32], from: usize, chosen: &mut Vec<u32>) -> bool {
        if chosen.len() == t.len() {
            return true;
        }
        for i in from..w.len() {
            let k = chosen.len();
            let fits = (0..k).all(|j| (chosen[j] < w[i]) == (t[j] < t[k]));
            if fits {
                chosen.push(w[i]);
                if rec(w, t, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(w, t, 0, &mut Vec::new())
}

/// No proper prefix of length `k` is a permutation of `1..=k`.
pub fn naive_connected(w: &[u32]) -> bool {
    if w.is_empty() {
        return false;
    }
    let mut max = 0;
    for (k, &v) in w.iter().enumerate().take(w.len() - 1) {
        max = max.max(v);
        if max as usize == k + 1 {
            return false;
        }
    }
    true
}

fn zigzag_ok(w: &[u32], up_first: bool) -> bool {
    w.windows(2).enumerate().all(|(i, p)| {
        if p[0] == 0 || p[1] == 0 {
            return true;
        }
        (p[0] < p[1]) == ((i % 2 == 0) == up_first)
    })
}

/// Involutions of length `n` in the family, built by pairing the smallest
/// free point with itself or a later point.
pub fn involutions(family: Family, n: usize) -> Vec<Vec<u32>> {
    let shape = match family {
        Family::I => None,
        Family::AI => Some(true),
        Family::RAI => Some(false),
        other => panic!("{other} is not a family of involutions"),
    };
    fn rec(w: &mut Vec<u32>, shape: Option<bool>, out: &mut Vec<Vec<u32>>) {
        let Some(i) = w.iter().position(|&v| v == 0) else {
            out.push(w.clone());
            return;
        };
        for j in i..w.len() {
            if w[j] != 0 {
                continue;
            }
            w[i] = j as u32 + 1;
            w[j] = i as u32 + 1;
            if shape.is_none_or(|up| zigzag_ok(w, up)) {
                rec(w, shape, out);
            }
            w[i] = 0;
            w[j] = 0;
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], shape, &mut out);
    out.sort();
    out
}

fn digits(p: &str) -> Vec<u32> {
    p.chars().map(|c| c.to_digit(10).expect("digit pattern")).collect()
}

/// Members of `family_n` avoiding every pattern in the comma list.
pub fn oracle_members(family: Family, patterns: &str, n: usize) -> Vec<Vec<u32>> {
    let pats: Vec<Vec<u32>> = patterns.split(',').filter(|s| !s.is_empty()).map(digits).collect();
    involutions(family, n)
        .into_iter()
        .filter(|w| pats.iter().all(|t| !naive_contains(w, t)))
        .collect()
}

pub fn oracle_count(family: Family, patterns: &str, n: usize, connected: bool) -> u64 {
    oracle_members(family, patterns, n)
        .iter()
        .filter(|w| !connected || naive_connected(w))
        .count() as u64
}

pub fn motzkin(n: i64) -> i128 {
    if n < 0 {
        return 0;
    }
    // paths counted directly by height profile
    let n = n as usize;
    let mut ways = vec![0i128; n + 2];
    ways[0] = 1;
    for _ in 0..n {
        let mut next = vec![0i128; n + 2];
        for h in 0..=n {
            if ways[h] == 0 {
                continue;
            }
            next[h] += ways[h];
            next[h + 1] += ways[h];
            if h > 0 {
                next[h - 1] += ways[h];
            }
        }
        ways = next;
    }
    ways[0]
}
