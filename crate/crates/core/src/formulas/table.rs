//! Every counting statement the tool knows, keyed by an identifier.
//!
//! A statement is a list of cases; a case names a class (family, forbidden
//! patterns, admissible lengths) and the value it is claimed to have. Most
//! values are closed forms in the length; identities between two classes
//! are expressed with [`Formula::SameAs`] and resolved by brute force.

use std::sync::OnceLock;

use num_traits::Signed;

use super::gf::RationalGf;
use super::sequences::{fibonacci, motzkin, power_of_two};
use super::Count;
use crate::generate::Family;
use crate::pattern::{parse_pattern_list, Pattern};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Theorem,
    Conjecture,
    /// Values listed explicitly, no closed form.
    Fixture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Any,
}

impl Parity {
    pub fn admits(self, len: usize) -> bool {
        match self {
            Parity::Even => len.is_multiple_of(2),
            Parity::Odd => len % 2 == 1,
            Parity::Any => true,
        }
    }
}

/// What is being counted in a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Members,
    /// Members with a single connected component.
    Connected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    /// `(x⁵ − x³ + x) / (1 − 2x² − x⁶)`
    Odd4123,
    /// `(1 − x²) / (1 − 2x² − x⁶)`
    RaiEven4123,
    /// `1 + x⁴/(1 − x²) + (x⁵ − x³ + x)² / ((1 − 2x² − x⁶)(1 − x²))`
    AiEven4123,
}

/// The claimed value of a class at length `L`. Where a formula is stated
/// in terms of `n`, `shift` fixes the length as `L = 2n + shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Constant(u64),
    /// 1 if `L` is even or `L = 1`, else 0.
    OneIfEvenOrOne,
    /// 2 if `L` is even and `L ≥ 4`, else 1.
    TwoIfEvenFromFour,
    /// `M_{n + offset}`.
    Motzkin { shift: i64, offset: i64 },
    /// `M_n − M_{n−2}`.
    MotzkinDiff { shift: i64 },
    /// `M_{n+1} − 2M_{n−1} + M_{n−3}`.
    MotzkinSecondDiff { shift: i64 },
    /// `F_{L−1}`.
    FibonacciPred,
    /// `2^{n−1}`.
    PowerOfTwo { shift: i64 },
    /// `⌊5 · 2^{n−1} / 3⌋`.
    FiveThirds { shift: i64 },
    /// `⌊L / 4⌋`.
    QuarterFloor,
    /// Connected members of `RAI_L(4123, 2341)`.
    ConnectedRai4123,
    /// Connected members of `AI_L(4123, 2341)`.
    ConnectedAi4123,
    /// Coefficient of `x^L`.
    Series(Series),
    /// `values[(L − first) / step]`, absent past the end.
    Prefix { first: usize, step: usize, values: &'static [u64] },
    /// Equals the count of another class at length `L + len_delta`.
    SameAs { family: Family, patterns: String, len_delta: i64 },
}

fn half(len: usize, shift: i64) -> i64 {
    (len as i64 - shift) / 2
}

impl Formula {
    /// The value at length `len`, or `None` for [`Formula::SameAs`] and
    /// past the end of a prefix.
    pub fn eval<T: Count + Signed>(&self, len: usize) -> Option<T> {
        let from = |v: u64| T::from_u64(v).expect("small constant");
        let l = len as i64;
        Some(match self {
            Formula::Constant(c) => from(*c),
            Formula::OneIfEvenOrOne => from(u64::from(len.is_multiple_of(2) || len == 1)),
            Formula::TwoIfEvenFromFour => from(if len.is_multiple_of(2) && len >= 4 { 2 } else { 1 }),
            Formula::Motzkin { shift, offset } => motzkin(half(len, *shift) + offset),
            Formula::MotzkinDiff { shift } => {
                let n = half(len, *shift);
                motzkin::<T>(n) - motzkin(n - 2)
            }
            Formula::MotzkinSecondDiff { shift } => {
                let n = half(len, *shift);
                let two = T::one() + T::one();
                motzkin::<T>(n + 1) + motzkin(n - 3) - two * motzkin(n - 1)
            }
            Formula::FibonacciPred => fibonacci(l - 1),
            Formula::PowerOfTwo { shift } => {
                let n = half(len, *shift);
                if n < 1 {
                    return None;
                }
                power_of_two(n as u32 - 1)
            }
            Formula::FiveThirds { shift } => {
                let n = half(len, *shift);
                if n < 1 {
                    return None;
                }
                power_of_two::<T>(n as u32 - 1) * from(5) / from(3)
            }
            Formula::QuarterFloor => from(len as u64 / 4),
            Formula::ConnectedRai4123 => from(match len {
                0 | 3 => 0,
                2 | 4 => 1,
                _ if len % 2 == 1 => 1,
                _ => 2,
            }),
            Formula::ConnectedAi4123 => from(match len {
                1 => 1,
                0 | 2 | 3 => 0,
                _ => 1,
            }),
            Formula::Series(s) => series::<T>(*s).coefficients(len + 1).ok()?.pop()?,
            Formula::Prefix { first, step, values } => {
                if len < *first || !(len - first).is_multiple_of(*step) {
                    return None;
                }
                from(*values.get((len - first) / step)?)
            }
            Formula::SameAs { .. } => return None,
        })
    }
}

/// The rational generating function behind a [`Series`].
pub fn series<T: Count + Signed>(s: Series) -> RationalGf<T> {
    let g = |n: &[i64], d: &[i64]| RationalGf::<T>::from_i64(n, d).expect("nonzero constant term");
    let odd = g(&[0, 1, 0, -1, 0, 1], &[1, 0, -2, 0, 0, 0, -1]);
    match s {
        Series::Odd4123 => odd,
        Series::RaiEven4123 => g(&[1, 0, -1], &[1, 0, -2, 0, 0, 0, -1]),
        Series::AiEven4123 => {
            let one = RationalGf::one();
            let x4 = g(&[0, 0, 0, 0, 1], &[1, 0, -1]);
            let tail = g(&[0, 1, 0, -1, 0, 1], &[1, 0, -1]);
            &(&one + &x4) + &(&odd * &tail)
        }
    }
}

/// One class with its claimed value.
#[derive(Clone, Debug)]
pub struct Case {
    pub family: Family,
    /// Comma-separated pattern list, e.g. `"3421,4312"`.
    pub patterns: String,
    pub parity: Parity,
    pub min_len: usize,
    pub statistic: Statistic,
    pub formula: Formula,
}

impl Case {
    pub fn applies_to(&self, len: usize) -> bool {
        len >= self.min_len && self.parity.admits(len)
    }

    pub fn pattern_list(&self) -> Vec<Pattern> {
        parse_pattern_list(&self.patterns).expect("static pattern lists parse")
    }

    /// Short label such as `RAI_even(4321)`.
    pub fn label(&self) -> String {
        let par = match self.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Any => "n",
        };
        let conn = if self.statistic == Statistic::Connected { " connected" } else { "" };
        format!("{}_{}({}){}", self.family, par, self.patterns, conn)
    }
}

/// A counting statement and its cases.
#[derive(Clone, Debug)]
pub struct Theorem {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub cases: Vec<Case>,
}

fn case(family: Family, patterns: &str, parity: Parity, min_len: usize, formula: Formula) -> Case {
    Case { family, patterns: patterns.into(), parity, min_len, statistic: Statistic::Members, formula }
}

fn connected(family: Family, patterns: &str, parity: Parity, min_len: usize, formula: Formula) -> Case {
    Case { statistic: Statistic::Connected, ..case(family, patterns, parity, min_len, formula) }
}

fn thm(id: &str, statement: &str, status: Status, cases: Vec<Case>) -> Theorem {
    Theorem { id: id.into(), statement: statement.into(), status, cases }
}

fn same_as(family: Family, patterns: &str, len_delta: i64) -> Formula {
    Formula::SameAs { family, patterns: patterns.into(), len_delta }
}

const AI_EVEN_2431_PREFIX: &[u64] = &[1, 2, 5, 9, 17, 31, 59];

/// Tails `τ` on `{4, …, m}` for the 123τ / 321τ conjecture.
pub fn conjecture_three_tails(max_m: u32) -> Vec<Vec<u32>> {
    fn perms(items: &[u32]) -> Vec<Vec<u32>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let x = rest.remove(i);
            for mut p in perms(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    (5..=max_m).flat_map(|m| perms(&(4..=m).collect::<Vec<_>>())).collect()
}

fn build() -> Vec<Theorem> {
    use Family::{AI, RAI};
    use Formula as F;
    use Parity::{Any, Even, Odd};
    use Status::{Conjecture, Fixture, Theorem as T};

    let m = |shift, offset| F::Motzkin { shift, offset };
    let mut conj3 = Vec::new();
    for tail in conjecture_three_tails(6) {
        let t: String = tail.iter().map(|d| d.to_string()).collect();
        conj3.push(case(AI, &format!("123{t}"), Any, 0, same_as(AI, &format!("321{t}"), 0)));
    }

    vec![
        thm(
            "prop-len3",
            "|AI_n(123)| = |AI_n(213)| = |AI_n(231)| = |AI_n(312)| = |RAI_n(132)| = |RAI_n(231)| = |RAI_n(312)| = |RAI_n(321)| = 1; |AI_n(132)| = |RAI_n(213)| = 1 if n even or n = 1, else 0; |AI_n(321)| = |RAI_n(123)| = 2 if n even and n >= 4, else 1",
            T,
            vec![
                case(AI, "123", Any, 0, F::Constant(1)),
                case(AI, "213", Any, 0, F::Constant(1)),
                case(AI, "231", Any, 0, F::Constant(1)),
                case(AI, "312", Any, 0, F::Constant(1)),
                case(RAI, "132", Any, 0, F::Constant(1)),
                case(RAI, "231", Any, 0, F::Constant(1)),
                case(RAI, "312", Any, 0, F::Constant(1)),
                case(RAI, "321", Any, 0, F::Constant(1)),
                case(AI, "132", Any, 0, F::OneIfEvenOrOne),
                case(RAI, "213", Any, 0, F::OneIfEvenOrOne),
                case(AI, "321", Any, 0, F::TwoIfEvenFromFour),
                case(RAI, "123", Any, 0, F::TwoIfEvenFromFour),
            ],
        ),
        thm("thm-rai-4321-even", "|RAI_{2n}(4321)| = M_n", T, vec![case(RAI, "4321", Even, 0, m(0, 0))]),
        thm(
            "thm-rai-4321-odd",
            "|RAI_{2n-1}(4321)| = M_n - M_{n-2}",
            T,
            vec![case(RAI, "4321", Odd, 1, F::MotzkinDiff { shift: -1 })],
        ),
        thm(
            "thm-rs-complement",
            "|AI_n(1234)| = |RAI_n(4321)| and |RAI_n(1234)| = |AI_n(4321)|",
            T,
            vec![case(AI, "1234", Any, 0, same_as(RAI, "4321", 0)), case(RAI, "1234", Any, 0, same_as(AI, "4321", 0))],
        ),
        thm(
            "cor-1234",
            "|RAI_{2n}(4321)| = |AI_{2n}(1234)| = M_n; |RAI_{2n-1}(1234)| = |AI_{2n-1}(4321)| = |RAI_{2n-1}(4321)| = |AI_{2n-1}(1234)| = M_n - M_{n-2}",
            T,
            vec![
                case(RAI, "4321", Even, 0, m(0, 0)),
                case(AI, "1234", Even, 0, m(0, 0)),
                case(RAI, "1234", Odd, 1, F::MotzkinDiff { shift: -1 }),
                case(AI, "4321", Odd, 1, F::MotzkinDiff { shift: -1 }),
                case(RAI, "4321", Odd, 1, F::MotzkinDiff { shift: -1 }),
                case(AI, "1234", Odd, 1, F::MotzkinDiff { shift: -1 }),
            ],
        ),
        thm(
            "thm-1234-even",
            "|RAI_{2n}(1234)| = |AI_{2n}(4321)| = M_{n+1} - 2M_{n-1} + M_{n-3} (2n >= 4)",
            T,
            vec![
                case(RAI, "1234", Even, 4, F::MotzkinSecondDiff { shift: 0 }),
                case(AI, "4321", Even, 4, F::MotzkinSecondDiff { shift: 0 }),
            ],
        ),
        thm(
            "thm-3412",
            "|RAI_{2n}(3412)| = |AI_{2n+2}(3412)| = |AI_{2n+1}(3412)| = |RAI_{2n+1}(3412)| = M_n",
            T,
            vec![
                case(RAI, "3412", Even, 0, m(0, 0)),
                case(AI, "3412", Even, 2, m(2, 0)),
                case(AI, "3412", Odd, 1, m(1, 0)),
                case(RAI, "3412", Odd, 1, m(1, 0)),
            ],
        ),
        thm(
            "thm-1243-even",
            "|AI_{2n}(1243)| = |AI_{2n}(2143)| = |AI_{2n}(2134)| = M_n; |AI_{2n-1}(2134)| = |RAI_{2n-1}(1243)| = M_n - M_{n-2}",
            T,
            vec![
                case(AI, "1243", Even, 0, m(0, 0)),
                case(AI, "2143", Even, 0, m(0, 0)),
                case(AI, "2134", Even, 0, m(0, 0)),
                case(AI, "2134", Odd, 1, F::MotzkinDiff { shift: -1 }),
                case(RAI, "1243", Odd, 1, F::MotzkinDiff { shift: -1 }),
            ],
        ),
        thm(
            "thm-1243-odd",
            "|AI_{2n+1}(1243)| = |AI_{2n+1}(2143)| = |RAI_{2n+1}(2143)| = |RAI_{2n+1}(2134)| = M_n",
            T,
            vec![
                case(AI, "1243", Odd, 1, m(1, 0)),
                case(AI, "2143", Odd, 1, m(1, 0)),
                case(RAI, "2143", Odd, 1, m(1, 0)),
                case(RAI, "2134", Odd, 1, m(1, 0)),
            ],
        ),
        thm("thm-rai-2143-even", "|RAI_{2n}(2143)| = M_{n-1} (n >= 1)", T, vec![case(RAI, "2143", Even, 2, m(0, -1))]),
        thm(
            "thm-fib",
            "|AI_n(3421,4312)| = |RAI_n(3421,4312)| = F_{n-1} (n >= 2)",
            T,
            vec![
                case(AI, "3421,4312", Any, 2, F::FibonacciPred),
                case(RAI, "3421,4312", Any, 2, F::FibonacciPred),
            ],
        ),
        thm(
            "thm-pow2",
            "|RAI_{2n}(2431,4132)| = |RAI_{2n}(3241,4213)| = |RAI_{2n+1}(3241,4213)| = |AI_{2n+1}(2431,4132)| = 2^{n-1} (n >= 1)",
            T,
            vec![
                case(RAI, "2431,4132", Even, 2, F::PowerOfTwo { shift: 0 }),
                case(RAI, "3241,4213", Even, 2, F::PowerOfTwo { shift: 0 }),
                case(RAI, "3241,4213", Odd, 3, F::PowerOfTwo { shift: 1 }),
                case(AI, "2431,4132", Odd, 3, F::PowerOfTwo { shift: 1 }),
            ],
        ),
        thm(
            "thm-five-thirds",
            "|RAI_{2n+1}(2431,4132)| = |AI_{2n+1}(3241,4213)| = floor(5 * 2^{n-1} / 3) (n >= 1)",
            T,
            vec![
                case(RAI, "2431,4132", Odd, 3, F::FiveThirds { shift: 1 }),
                case(AI, "3241,4213", Odd, 3, F::FiveThirds { shift: 1 }),
            ],
        ),
        thm(
            "lem-connected-2431",
            "connected members of RAI_{2l+1}(4132,2431): floor((2l+1)/4) (2l+1 >= 3)",
            T,
            vec![connected(RAI, "4132,2431", Odd, 3, F::QuarterFloor)],
        ),
        thm(
            "lem-connected-4123",
            "connected members of RAI_n(4123,2341): 1 if n odd, n != 3; 2 if n even, n >= 6; 0 if n = 3; 1 if n = 2, 4. Of AI_n(4123,2341): 1 if n >= 4 or n = 1; 0 if n = 2, 3",
            T,
            vec![
                connected(RAI, "4123,2341", Any, 1, F::ConnectedRai4123),
                connected(AI, "4123,2341", Any, 1, F::ConnectedAi4123),
            ],
        ),
        thm(
            "thm-gf-4123",
            "sum |AI_{2n+1}(4123,2341)| x^{2n+1} = sum |RAI_{2n+1}(4123,2341)| x^{2n+1} = (x^5 - x^3 + x)/(1 - 2x^2 - x^6); sum |RAI_{2n}| x^{2n} = (1 - x^2)/(1 - 2x^2 - x^6); sum |AI_{2n}| x^{2n} = 1 + x^4/(1 - x^2) + (x^5 - x^3 + x)^2/((1 - 2x^2 - x^6)(1 - x^2))",
            T,
            vec![
                case(AI, "4123,2341", Odd, 1, F::Series(Series::Odd4123)),
                case(RAI, "4123,2341", Odd, 1, F::Series(Series::Odd4123)),
                case(RAI, "4123,2341", Even, 0, F::Series(Series::RaiEven4123)),
                case(AI, "4123,2341", Even, 0, F::Series(Series::AiEven4123)),
            ],
        ),
        thm(
            "thm-baxter",
            "|AI_{2n+1}(2413,3142)| = |RAI_{2n+1}(2413,3142)| = |RAI_{2n}(2413,3142)|",
            T,
            vec![
                case(AI, "2413,3142", Odd, 1, same_as(RAI, "2413,3142", -1)),
                case(RAI, "2413,3142", Odd, 1, same_as(RAI, "2413,3142", -1)),
            ],
        ),
        thm(
            "fix-ai-2431-even",
            "|AI_{2n}(2431,4132)| = |AI_{2n}(3241,4213)| opens 1, 2, 5, 9, 17, 31, 59 at 2n = 2, 4, ..., 14",
            Fixture,
            vec![
                case(AI, "2431,4132", Even, 2, F::Prefix { first: 2, step: 2, values: AI_EVEN_2431_PREFIX }),
                case(AI, "3241,4213", Even, 2, F::Prefix { first: 2, step: 2, values: AI_EVEN_2431_PREFIX }),
            ],
        ),
        thm(
            "conj-1",
            "|RAI_{2n}(1243)| = |RAI_{2n}(2134)| = M_n",
            Conjecture,
            vec![case(RAI, "1243", Even, 0, m(0, 0)), case(RAI, "2134", Even, 0, m(0, 0))],
        ),
        thm(
            "conj-2",
            "|AI_{2n}(1432)| = |AI_{2n}(3214)| = |RAI_{2n}(1432)| = |RAI_{2n}(3214)| = M_n; |AI_{2n+1}(1432)| = |RAI_{2n+1}(3214)| = M_n; |AI_{2n-1}(3214)| = |RAI_{2n-1}(1432)| = M_n - M_{n-2}",
            Conjecture,
            vec![
                case(AI, "1432", Even, 0, m(0, 0)),
                case(AI, "3214", Even, 0, m(0, 0)),
                case(RAI, "1432", Even, 0, m(0, 0)),
                case(RAI, "3214", Even, 0, m(0, 0)),
                case(AI, "1432", Odd, 1, m(1, 0)),
                case(RAI, "3214", Odd, 1, m(1, 0)),
                case(AI, "3214", Odd, 1, F::MotzkinDiff { shift: -1 }),
                case(RAI, "1432", Odd, 1, F::MotzkinDiff { shift: -1 }),
            ],
        ),
        thm("conj-3", "|AI_n(123τ)| = |AI_n(321τ)| for τ a permutation of {4, ..., m}", Conjecture, conj3),
    ]
}

/// All statements, in report order.
pub fn theorems() -> &'static [Theorem] {
    static TABLE: OnceLock<Vec<Theorem>> = OnceLock::new();
    TABLE.get_or_init(build)
}

pub fn theorem(id: &str) -> Option<&'static Theorem> {
    theorems().iter().find(|t| t.id == id)
}

/// Sorted one-line forms of `patterns`, closed under inverse when the
/// family consists of involutions (an involution avoids τ iff it avoids
/// τ⁻¹).
pub(crate) fn normalize(family: Family, patterns: &[Pattern]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = patterns.iter().map(|p| p.perm().clone()).collect();
    if family.is_involutive() {
        out.extend(patterns.iter().map(|p| p.perm().inverse()));
    }
    out.sort();
    out.dedup();
    out
}

/// Looks up a closed-form (or fixture) value for a class, skipping
/// conjectures unless asked.
pub fn lookup<T: Count + Signed>(
    family: Family,
    patterns: &[Pattern],
    len: usize,
    statistic: Statistic,
    include_conjectures: bool,
) -> Option<(T, &'static Theorem)> {
    let key = normalize(family, patterns);
    theorems()
        .iter()
        .filter(|t| include_conjectures || t.status != Status::Conjecture)
        .flat_map(|t| t.cases.iter().map(move |c| (t, c)))
        .filter(|(_, c)| {
            c.family == family
                && c.statistic == statistic
                && c.applies_to(len)
                && normalize(family, &c.pattern_list()) == key
        })
        .find_map(|(t, c)| c.formula.eval::<T>(len).map(|v| (v, t)))
}

/// The value the theorems give for `|family_len(patterns)|`, if any.
pub fn expected_count<T: Count + Signed>(family: Family, patterns: &[Pattern], len: usize) -> Option<T> {
    lookup(family, patterns, len, Statistic::Members, false).map(|(v, _)| v)
}

/// As [`expected_count`], for the number of connected members.
pub fn expected_connected_count<T: Count + Signed>(family: Family, patterns: &[Pattern], len: usize) -> Option<T> {
    lookup(family, patterns, len, Statistic::Connected, false).map(|(v, _)| v)
}
