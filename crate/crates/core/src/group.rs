//! Free products of cyclic groups.
//!
//! Elements are stored as reduced syllable sequences. Every canonical choice
//! made elsewhere in the crate (conjugacy representatives, orbit minima,
//! printing order) goes through the total order on [`Word`].

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Order of a cyclic factor or of a centralizer generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Infinite,
    Finite(u64),
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Infinite => f.write_str("inf"),
            Order::Finite(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorSpec {
    pub name: String,
    pub order: Order,
}

impl FactorSpec {
    pub fn infinite(name: impl Into<String>) -> Self {
        FactorSpec { name: name.into(), order: Order::Infinite }
    }

    pub fn finite(name: impl Into<String>, order: u64) -> Self {
        FactorSpec { name: name.into(), order: Order::Finite(order) }
    }
}

/// One maximal run `x^k` of a single factor generator inside a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub factor: usize,
    pub exp: i64,
}

impl Syllable {
    pub fn new(factor: usize, exp: i64) -> Self {
        Syllable { factor, exp }
    }

    /// 1 < -1 < 2 < -2 < ...; finite factors only carry positive exponents,
    /// so there this reduces to the natural order on 1..m-1.
    fn rank(&self) -> u64 {
        if self.exp > 0 {
            2 * self.exp as u64 - 1
        } else {
            2 * self.exp.unsigned_abs()
        }
    }
}

impl Ord for Syllable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factor
            .cmp(&other.factor)
            .then_with(|| self.rank().cmp(&other.rank()))
    }
}

impl PartialOrd for Syllable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A reduced word. The empty word is the identity.
///
/// Ordering is shortlex: fewer syllables first, then lexicographic on
/// `(factor index, exponent rank)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Syllable>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Caller guarantees the syllables are already reduced.
    pub(crate) fn from_reduced(syllables: Vec<Syllable>) -> Self {
        Word(syllables)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    /// Total number of generator letters, `sum |exp|`.
    pub fn letter_count(&self) -> u64 {
        self.0.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(first), Some(last)) => self.0.len() == 1 || first.factor != last.factor,
            _ => true,
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The total order used for every canonical choice.
pub fn word_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// `input = conjugator * canonical * conjugator^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub canonical: Word,
    pub conjugator: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerGen {
    pub generator: Word,
    pub order: Order,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    factors: Vec<FactorSpec>,
}

impl GroupPresentation {
    pub fn new(factors: Vec<FactorSpec>) -> Result<Self> {
        let mut seen = HashSet::new();
        for f in &factors {
            if !seen.insert(f.name.as_str()) {
                return Err(Error::DuplicateName(f.name.clone()));
            }
            if let Order::Finite(m) = f.order {
                if m < 2 {
                    return Err(Error::InvalidOrder { name: f.name.clone(), order: m });
                }
            }
        }
        Ok(GroupPresentation { factors })
    }

    pub fn trivial() -> Self {
        GroupPresentation { factors: Vec::new() }
    }

    /// Free group on the given generator names.
    pub fn free(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().map(|n| FactorSpec::infinite(*n)).collect())
    }

    pub fn factors(&self) -> &[FactorSpec] {
        &self.factors
    }

    pub fn factor_index(&self, name: &str) -> Option<usize> {
        self.factors.iter().position(|f| f.name == name)
    }

    pub fn factor_order(&self, index: usize) -> Order {
        self.factors[index].order
    }

    /// Word consisting of the single generator of the named factor.
    pub fn generator(&self, name: &str) -> Option<Word> {
        self.factor_index(name).map(|i| Word(vec![Syllable::new(i, 1)]))
    }

    fn reduce_exp(&self, factor: usize, exp: i64) -> i64 {
        match self.factors[factor].order {
            Order::Infinite => exp,
            Order::Finite(m) => exp.rem_euclid(m as i64),
        }
    }

    /// Appends one syllable to an already reduced stack.
    fn push(&self, stack: &mut Vec<Syllable>, factor: usize, exp: i64) {
        let exp = self.reduce_exp(factor, exp);
        if exp == 0 {
            return;
        }
        match stack.last_mut() {
            Some(top) if top.factor == factor => {
                let merged = self.reduce_exp(factor, top.exp + exp);
                if merged == 0 {
                    stack.pop();
                } else {
                    top.exp = merged;
                }
            }
            _ => stack.push(Syllable::new(factor, exp)),
        }
    }

    pub fn word_normalize(&self, raw: &[(usize, i64)]) -> Result<Word> {
        let mut stack = Vec::with_capacity(raw.len());
        for &(factor, exp) in raw {
            if factor >= self.factors.len() {
                return Err(Error::InvalidFactor(factor));
            }
            self.push(&mut stack, factor, exp);
        }
        Ok(Word(stack))
    }

    /// Checks that `w` is a reduced word over this presentation.
    pub fn check(&self, w: &Word) -> Result<()> {
        let mut prev = None;
        for s in &w.0 {
            if s.factor >= self.factors.len() {
                return Err(Error::InvalidFactor(s.factor));
            }
            let ok = s.exp != 0
                && self.reduce_exp(s.factor, s.exp) == s.exp
                && prev != Some(s.factor);
            if !ok {
                return Err(Error::Invalid(format!(
                    "word is not reduced over this presentation: {}",
                    self.show(w)
                )));
            }
            prev = Some(s.factor);
        }
        Ok(())
    }

    pub fn multiply(&self, u: &Word, v: &Word) -> Word {
        let mut stack = Vec::with_capacity(u.len() + v.len());
        stack.extend_from_slice(&u.0);
        for s in &v.0 {
            self.push(&mut stack, s.factor, s.exp);
        }
        Word(stack)
    }

    pub fn invert(&self, u: &Word) -> Word {
        Word(
            u.0.iter()
                .rev()
                .map(|s| Syllable::new(s.factor, self.reduce_exp(s.factor, -s.exp)))
                .collect(),
        )
    }

    pub fn power(&self, u: &Word, k: i64) -> Word {
        let base = if k < 0 { self.invert(u) } else { u.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| self.multiply(&acc, &base))
    }

    /// `tau * w * tau^-1`
    pub fn conjugate(&self, tau: &Word, w: &Word) -> Word {
        self.multiply(&self.multiply(tau, w), &self.invert(tau))
    }

    /// Returns `(core, conjugator)` with `w = conjugator * core * conjugator^-1`
    /// and `core` cyclically reduced.
    pub fn cyclic_reduce(&self, w: &Word) -> (Word, Word) {
        let s = &w.0;
        let (mut lo, mut hi) = (0usize, s.len());
        // peel inverse pairs from both ends
        while hi - lo >= 2 && s[lo].factor == s[hi - 1].factor {
            let (first, last) = (s[lo], s[hi - 1]);
            if self.reduce_exp(first.factor, first.exp + last.exp) != 0 {
                break;
            }
            lo += 1;
            hi -= 1;
        }
        let mut conjugator = Word(s[..lo].to_vec());
        let middle = &s[lo..hi];
        if middle.len() >= 3 && middle[0].factor == middle[middle.len() - 1].factor {
            // x u y with x, y in one factor: conjugate by x to get u (y x)
            let x = middle[0];
            let mut core = middle[1..].to_vec();
            let last = core.last_mut().expect("nonempty");
            last.exp = self.reduce_exp(x.factor, last.exp + x.exp);
            debug_assert!(last.exp != 0);
            conjugator.0.push(x);
            (Word(core), conjugator)
        } else {
            (Word(middle.to_vec()), conjugator)
        }
    }

    /// Canonical conjugacy representative: the smallest cyclic rotation of the
    /// cyclic reduction.
    pub fn conjugacy_rep(&self, w: &Word) -> ConjugacyData {
        let (core, peel) = self.cyclic_reduce(w);
        let n = core.len();
        if n <= 1 {
            return ConjugacyData { canonical: core, conjugator: peel };
        }
        let s = &core.0;
        let mut best = 0;
        let mut best_word: Vec<Syllable> = s.clone();
        let mut scratch = Vec::with_capacity(n);
        for i in 1..n {
            scratch.clear();
            scratch.extend_from_slice(&s[i..]);
            scratch.extend_from_slice(&s[..i]);
            if scratch < best_word {
                best = i;
                std::mem::swap(&mut best_word, &mut scratch);
            }
        }
        // rotation by i is p^-1 * core * p with p = s[..i]
        let prefix = Word(s[..best].to_vec());
        ConjugacyData {
            canonical: Word(best_word),
            conjugator: self.multiply(&peel, &prefix),
        }
    }

    pub fn are_conjugate(&self, u: &Word, v: &Word) -> bool {
        self.conjugacy_rep(u).canonical == self.conjugacy_rep(v).canonical
    }

    /// `w = z^d` with `d` maximal. `w` must be cyclically reduced.
    pub fn primitive_root(&self, w: &Word) -> Result<(Word, u64)> {
        debug_assert!(w.is_cyclically_reduced());
        let s = &w.0;
        match s.len() {
            0 => Err(Error::IdentityInput("primitive root")),
            1 => {
                let syl = s[0];
                let step = if syl.exp < 0 { -1 } else { 1 };
                Ok((Word(vec![Syllable::new(syl.factor, step)]), syl.exp.unsigned_abs()))
            }
            n => {
                let period = (1..=n)
                    .find(|&p| n % p == 0 && (0..n - p).all(|j| s[j] == s[j + p]))
                    .expect("n is always a period");
                Ok((Word(s[..period].to_vec()), (n / period) as u64))
            }
        }
    }

    /// Generator of the (cyclic) centralizer of a nontrivial cyclically
    /// reduced element.
    pub fn centralizer_generator(&self, w: &Word) -> Result<CentralizerGen> {
        match w.len() {
            0 => Err(Error::IdentityInput("centralizer generator")),
            1 => {
                let factor = w.0[0].factor;
                Ok(CentralizerGen {
                    generator: Word(vec![Syllable::new(factor, 1)]),
                    order: self.factors[factor].order,
                })
            }
            _ => {
                let (root, _) = self.primitive_root(w)?;
                Ok(CentralizerGen { generator: root, order: Order::Infinite })
            }
        }
    }

    pub fn show<'a>(&'a self, w: &'a Word) -> ShowWord<'a> {
        ShowWord { group: self, word: w }
    }
}

pub struct ShowWord<'a> {
    group: &'a GroupPresentation,
    word: &'a Word,
}

impl fmt::Display for ShowWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("1");
        }
        for (i, s) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            let name = &self.group.factors[s.factor].name;
            if s.exp == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{}", s.exp)?;
            }
        }
        Ok(())
    }
}
