//! Elements of `Wh_1(pi_1; Z_2 x pi_2)` and their canonical normal forms.
//!
//! The group is `(Z_2 x pi_2)[pi_1]` modulo `beta.[1]` and
//! `alpha.[g] - alpha^tau.[tau g tau^-1]`. Every class other than the
//! identity class contributes the coinvariants of `Z_2 x pi_2` under the
//! centralizer of its canonical representative, so a normal form is a sorted
//! map from canonical class words to orbit-canonical coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Word};
use crate::manifold::ManifoldData;
use crate::module::{act, mod_neg, mod_scale, orbit_canonical, ModuleElement};

/// An element of `Z/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2(bool);

impl Z2 {
    pub const ZERO: Z2 = Z2(false);
    pub const ONE: Z2 = Z2(true);

    pub fn new(v: i64) -> Self {
        Z2(v.rem_euclid(2) == 1)
    }

    pub fn is_zero(self) -> bool {
        !self.0
    }

    pub fn value(self) -> u8 {
        self.0 as u8
    }
}

impl Add for Z2 {
    type Output = Z2;

    fn add(self, rhs: Z2) -> Z2 {
        Z2(self.0 != rhs.0)
    }
}

impl Mul for Z2 {
    type Output = Z2;

    fn mul(self, rhs: Z2) -> Z2 {
        Z2(self.0 && rhs.0)
    }
}

impl AddAssign for Z2 {
    fn add_assign(&mut self, rhs: Z2) {
        *self = *self + rhs;
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A coefficient in `Z_2 x pi_2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WhCoeff {
    pub s: Z2,
    pub sigma: ModuleElement,
}

impl WhCoeff {
    pub fn new(s: Z2, sigma: ModuleElement) -> Self {
        WhCoeff { s, sigma }
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.sigma.is_zero()
    }

    fn add_assign(&mut self, s: Z2, sigma: &ModuleElement) {
        self.s += s;
        self.sigma.add_assign(sigma);
    }
}

/// `(s, sigma).[gamma]`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WhTerm {
    pub s: Z2,
    pub sigma: ModuleElement,
    pub gamma: Word,
}

impl WhTerm {
    pub fn new(s: Z2, sigma: ModuleElement, gamma: Word) -> Self {
        WhTerm { s, sigma, gamma }
    }
}

/// An unreduced formal sum of terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WhElement {
    pub terms: Vec<WhTerm>,
}

impl WhElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(s: Z2, sigma: ModuleElement, gamma: Word) -> Self {
        WhElement { terms: vec![WhTerm::new(s, sigma, gamma)] }
    }

    pub fn from_terms(terms: Vec<WhTerm>) -> Self {
        WhElement { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn check(&self, x: &ManifoldData) -> Result<()> {
        for t in &self.terms {
            x.check_word(&t.gamma)?;
            x.check_module(&t.sigma)?;
        }
        Ok(())
    }

    pub fn show<'a>(&'a self, group: &'a GroupPresentation) -> ShowWh<'a> {
        ShowWh { group, terms: TermSource::Element(self) }
    }
}

/// Canonical representative of an element of `Wh_1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WhNormalForm {
    entries: BTreeMap<Word, WhCoeff>,
}

impl WhNormalForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending order of their class words.
    pub fn entries(&self) -> impl Iterator<Item = (&Word, &WhCoeff)> {
        self.entries.iter()
    }

    pub fn get(&self, class: &Word) -> Option<&WhCoeff> {
        self.entries.get(class)
    }

    /// The normal form read back as a formal sum.
    pub fn to_element(&self) -> WhElement {
        WhElement {
            terms: self
                .entries
                .iter()
                .map(|(g, c)| WhTerm::new(c.s, c.sigma.clone(), g.clone()))
                .collect(),
        }
    }

    pub fn show<'a>(&'a self, group: &'a GroupPresentation) -> ShowWh<'a> {
        ShowWh { group, terms: TermSource::Normal(self) }
    }
}

pub fn wh_add(x: &WhElement, y: &WhElement) -> WhElement {
    let mut terms = x.terms.clone();
    terms.extend(y.terms.iter().cloned());
    WhElement { terms }
}

pub fn wh_neg(x: &WhElement) -> WhElement {
    WhElement {
        terms: x
            .terms
            .iter()
            .map(|t| WhTerm::new(t.s, mod_neg(&t.sigma), t.gamma.clone()))
            .collect(),
    }
}

/// Integer multiple of a formal sum.
pub fn wh_scale(n: i64, x: &WhElement) -> WhElement {
    WhElement {
        terms: x
            .terms
            .iter()
            .map(|t| WhTerm::new(Z2::new(n) * t.s, mod_scale(n, &t.sigma), t.gamma.clone()))
            .collect(),
    }
}

pub fn wh_normalize(x: &WhElement, manifold: &ManifoldData) -> Result<WhNormalForm> {
    x.check(manifold)?;
    Ok(normalize_terms(&x.terms, manifold.group()))
}

pub(crate) fn normalize_terms(terms: &[WhTerm], group: &GroupPresentation) -> WhNormalForm {
    let mut classes: BTreeMap<Word, WhCoeff> = BTreeMap::new();
    for t in terms {
        // beta.[1] = 0
        if t.gamma.is_identity() || (t.s.is_zero() && t.sigma.is_zero()) {
            continue;
        }
        let cd = group.conjugacy_rep(&t.gamma);
        if cd.canonical.is_identity() {
            continue;
        }
        // alpha'.[tau c tau^-1] = (alpha'^{tau^-1}).[c]
        let sigma = act(group, &group.invert(&cd.conjugator), &t.sigma);
        classes.entry(cd.canonical).or_default().add_assign(t.s, &sigma);
    }
    let mut entries = BTreeMap::new();
    for (class, mut coeff) in classes {
        let z = group
            .centralizer_generator(&class)
            .expect("canonical class is nontrivial");
        coeff.sigma = orbit_canonical(group, &coeff.sigma, &z);
        if !coeff.is_zero() {
            entries.insert(class, coeff);
        }
    }
    WhNormalForm { entries }
}

pub fn wh_equal(x: &WhElement, y: &WhElement, manifold: &ManifoldData) -> Result<bool> {
    Ok(wh_normalize(x, manifold)? == wh_normalize(y, manifold)?)
}

/// Termwise `(n, sigma)[g] -> (n + w2(sigma), -w1(g) sigma^{g^-1})[g^-1]`.
/// The result is left unnormalized.
pub fn involute(x: &WhElement, manifold: &ManifoldData) -> Result<WhElement> {
    x.check(manifold)?;
    let group = manifold.group();
    Ok(WhElement {
        terms: x
            .terms
            .iter()
            .map(|t| {
                let inv = group.invert(&t.gamma);
                let s = t.s + Z2::new(manifold.w2_eval(&t.sigma) as i64);
                let sigma = mod_scale(-(manifold.w1_eval(&t.gamma) as i64), &act(group, &inv, &t.sigma));
                WhTerm::new(s, sigma, inv)
            })
            .collect(),
    })
}

/// One application of a defining relation of `Wh_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Remove a term whose group element is the identity.
    KillIdentity { term: usize },
    /// Replace `alpha.[g]` by `alpha^tau.[tau g tau^-1]`.
    ConjugateTransport { term: usize, tau: Word },
}

pub fn apply_relation(x: &WhElement, relation: &Relation, manifold: &ManifoldData) -> Result<WhElement> {
    let group = manifold.group();
    let index = match relation {
        Relation::KillIdentity { term } | Relation::ConjugateTransport { term, .. } => *term,
    };
    if index >= x.terms.len() {
        return Err(Error::Inapplicable(format!(
            "term index {index} out of range for {} terms",
            x.terms.len()
        )));
    }
    let mut out = x.clone();
    match relation {
        Relation::KillIdentity { .. } => {
            if !x.terms[index].gamma.is_identity() {
                return Err(Error::Inapplicable(format!(
                    "term {index} is at [{}], not the identity class",
                    group.show(&x.terms[index].gamma)
                )));
            }
            out.terms.remove(index);
        }
        Relation::ConjugateTransport { tau, .. } => {
            manifold.check_word(tau)?;
            let t = &mut out.terms[index];
            t.sigma = act(group, tau, &t.sigma);
            t.gamma = group.conjugate(tau, &t.gamma);
        }
    }
    Ok(out)
}

enum TermSource<'a> {
    Element(&'a WhElement),
    Normal(&'a WhNormalForm),
}

pub struct ShowWh<'a> {
    group: &'a GroupPresentation,
    terms: TermSource<'a>,
}

impl fmt::Display for ShowWh<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Z2, &ModuleElement, &Word)> = match &self.terms {
            TermSource::Element(x) => x.terms.iter().map(|t| (t.s, &t.sigma, &t.gamma)).collect(),
            TermSource::Normal(n) => n.entries.iter().map(|(g, c)| (c.s, &c.sigma, g)).collect(),
        };
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, sigma, gamma)) in terms.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({s}, {})[{}]", sigma.show(self.group), self.group.show(gamma))?;
        }
        Ok(())
    }
}

/// Entrywise sum of two normal forms, renormalized.
pub fn normal_form_sum(x: &WhNormalForm, y: &WhNormalForm, manifold: &ManifoldData) -> Result<WhNormalForm> {
    wh_normalize(&wh_add(&x.to_element(), &y.to_element()), manifold)
}
