//! Motzkin words and the maps between them and involutions.
//!
//! Both `phi` and `psi` read an involution as a word: an up step at each
//! excedance, a down step at each deficiency, a level step at each fixed
//! point. They differ in how a word is turned back into arcs: `phi_inv`
//! pairs the i-th up step with the i-th down step (non-nesting arcs, which
//! is what 4321-avoidance forces), while `psi_inv` pairs each down step
//! with the nearest open up step (non-crossing arcs, forced by
//! 3412-avoidance).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::perm::{Permutation, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    H,
    D,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::H => 'H',
            Step::D => 'D',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'U' => Some(Step::U),
            'H' => Some(Step::H),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

/// A word over `{U, H, D}` that returns to height 0 and never dips below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MotzkinWord {
    steps: Vec<Step>,
}

impl MotzkinWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += match s {
                Step::U => 1,
                Step::H => 0,
                Step::D => -1,
            };
            if h < 0 {
                return Err(Error::InvalidWord(format!(
                    "prefix of length {} goes below the axis",
                    i + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::InvalidWord(format!("ends at height {h}, not 0")));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every Motzkin word of length `n`, in lexicographic order of steps
    /// (`U < H < D`).
    pub fn all(n: usize) -> Vec<MotzkinWord> {
        fn rec(n: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<MotzkinWord>) {
            let left = n - cur.len();
            if left == 0 {
                if h == 0 {
                    out.push(MotzkinWord { steps: cur.clone() });
                }
                return;
            }
            if h > left {
                return;
            }
            for s in [Step::U, Step::H, Step::D] {
                let nh = match s {
                    Step::U => h + 1,
                    Step::H => h,
                    Step::D if h > 0 => h - 1,
                    Step::D => continue,
                };
                cur.push(s);
                rec(n, nh, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 0, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

/// Parses compact words such as `"UHUHHDUDHD"`; whitespace is ignored.
impl FromStr for MotzkinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Step::from_letter(c).ok_or_else(|| Error::Parse(format!("bad step {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

/// A two-step block of an even-length Motzkin word, restricted to the three
/// kinds produced by reverse alternating involutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diod {
    UH,
    HD,
    UD,
}

/// An even-length Motzkin word seen as a sequence of diods.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DiodWord {
    diods: Vec<Diod>,
}

impl DiodWord {
    /// Splits `word` into diods; fails on odd length or a diod other than
    /// `UH`, `HD`, `UD`.
    pub fn from_word(word: &MotzkinWord) -> Result<Self> {
        if !word.len().is_multiple_of(2) {
            return Err(Error::Domain(format!("word {word} has odd length")));
        }
        let diods = word
            .steps
            .chunks(2)
            .enumerate()
            .map(|(i, pair)| match pair {
                [Step::U, Step::H] => Ok(Diod::UH),
                [Step::H, Step::D] => Ok(Diod::HD),
                [Step::U, Step::D] => Ok(Diod::UD),
                _ => Err(Error::Domain(format!(
                    "diod {} of {word} is {}{}, not UH, HD or UD",
                    i + 1,
                    pair[0].letter(),
                    pair[1].letter()
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { diods })
    }

    pub fn diods(&self) -> &[Diod] {
        &self.diods
    }

    pub fn len(&self) -> usize {
        self.diods.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diods.is_empty()
    }

    pub fn to_word(&self) -> MotzkinWord {
        let steps = self
            .diods
            .iter()
            .flat_map(|d| match d {
                Diod::UH => [Step::U, Step::H],
                Diod::HD => [Step::H, Step::D],
                Diod::UD => [Step::U, Step::D],
            })
            .collect();
        MotzkinWord::new(steps).expect("diod words are Motzkin words by construction")
    }
}

impl fmt::Display for DiodWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.diods.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d:?}")?;
        }
        Ok(())
    }
}

impl FromStr for DiodWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word: MotzkinWord = s.parse()?;
        Self::from_word(&word)
    }
}

fn require_involution_avoiding(t: &Permutation, pattern: &str) -> Result<()> {
    if !t.is_involution() {
        return Err(Error::Domain(format!("{t} is not an involution")));
    }
    let pat: Pattern = pattern.parse().expect("static pattern");
    if pat.occurs_in(t.as_slice()) {
        return Err(Error::Domain(format!("{t} contains {pattern}")));
    }
    Ok(())
}

fn excedance_word(t: &Permutation) -> MotzkinWord {
    let steps = t
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &v)| match (v as usize).cmp(&(i + 1)) {
            std::cmp::Ordering::Greater => Step::U,
            std::cmp::Ordering::Equal => Step::H,
            std::cmp::Ordering::Less => Step::D,
        })
        .collect();
    MotzkinWord::new(steps).expect("the excedance word of an involution is a Motzkin word")
}

/// `I_n(4321) → 𝓜_n`.
pub fn phi(t: &Permutation) -> Result<MotzkinWord> {
    require_involution_avoiding(t, "4321")?;
    Ok(excedance_word(t))
}

/// Pairs the i-th up step with the i-th down step.
pub fn phi_inv(m: &MotzkinWord) -> Permutation {
    let ups = m.steps.iter().enumerate().filter(|(_, s)| **s == Step::U).map(|(i, _)| i);
    let downs = m.steps.iter().enumerate().filter(|(_, s)| **s == Step::D).map(|(i, _)| i);
    let mut vals: Vec<Symbol> = (1..=m.len() as Symbol).collect();
    for (a, b) in ups.zip(downs) {
        vals[a] = b as Symbol + 1;
        vals[b] = a as Symbol + 1;
    }
    Permutation::from_vec_unchecked(vals)
}

/// `I_n(3412) → 𝓜_n`.
pub fn psi(t: &Permutation) -> Result<MotzkinWord> {
    require_involution_avoiding(t, "3412")?;
    Ok(excedance_word(t))
}

/// Pairs each down step with the nearest unmatched up step to its left.
pub fn psi_inv(m: &MotzkinWord) -> Permutation {
    let mut vals: Vec<Symbol> = (1..=m.len() as Symbol).collect();
    let mut open = Vec::new();
    for (i, s) in m.steps.iter().enumerate() {
        match s {
            Step::U => open.push(i),
            Step::D => {
                let a = open.pop().expect("Motzkin words are balanced");
                vals[a] = i as Symbol + 1;
                vals[i] = a as Symbol + 1;
            }
            Step::H => {}
        }
    }
    Permutation::from_vec_unchecked(vals)
}

/// Contracts each diod to one step: `UH ↦ U`, `HD ↦ D`, `UD ↦ H`.
pub fn delta(m: &DiodWord) -> MotzkinWord {
    let steps = m
        .diods
        .iter()
        .map(|d| match d {
            Diod::UH => Step::U,
            Diod::HD => Step::D,
            Diod::UD => Step::H,
        })
        .collect();
    MotzkinWord::new(steps).expect("heights of a diod word at even positions stay >= 0")
}

pub fn delta_inv(s: &MotzkinWord) -> DiodWord {
    DiodWord {
        diods: s
            .steps
            .iter()
            .map(|st| match st {
                Step::U => Diod::UH,
                Step::D => Diod::HD,
                Step::H => Diod::UD,
            })
            .collect(),
    }
}

fn require_even_rai(t: &Permutation) -> Result<()> {
    if !t.len().is_multiple_of(2) || !t.is_reverse_alternating() {
        return Err(Error::Domain(format!(
            "{t} is not a reverse alternating involution of even length"
        )));
    }
    Ok(())
}

/// `RAI_{2n}(4321) → 𝓜_n`, i.e. `delta ∘ phi`.
pub fn hat_phi(t: &Permutation) -> Result<MotzkinWord> {
    require_even_rai(t)?;
    let word = phi(t)?;
    let diods = DiodWord::from_word(&word)
        .map_err(|e| Error::Invariant(format!("phi({t}) = {word} has an illegal diod: {e}")))?;
    Ok(delta(&diods))
}

pub fn hat_phi_inv(s: &MotzkinWord) -> Permutation {
    phi_inv(&delta_inv(s).to_word())
}

/// `RAI_{2n}(3412) → 𝓜_n`, i.e. `delta ∘ psi`.
pub fn hat_psi(t: &Permutation) -> Result<MotzkinWord> {
    require_even_rai(t)?;
    let word = psi(t)?;
    let diods = DiodWord::from_word(&word)
        .map_err(|e| Error::Invariant(format!("psi({t}) = {word} has an illegal diod: {e}")))?;
    Ok(delta(&diods))
}

pub fn hat_psi_inv(s: &MotzkinWord) -> Permutation {
    psi_inv(&delta_inv(s).to_word())
}
