//! `pi_2` as a free module over the integral group ring of `pi_1`.
//!
//! Elements are finitely supported integer combinations of pairs
//! `(basis index, group element)`. The group acts on the left:
//! `act(tau, e_j @ g) = e_j @ (tau * g)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{CentralizerGen, GroupPresentation, Order, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleSpec {
    Zero,
    Free(usize),
}

impl ModuleSpec {
    pub fn new_free(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("free module must have rank at least 1".into()));
        }
        Ok(ModuleSpec::Free(rank))
    }

    pub fn rank(&self) -> usize {
        match self {
            ModuleSpec::Zero => 0,
            ModuleSpec::Free(r) => *r,
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Zero => f.write_str("zero"),
            ModuleSpec::Free(r) => write!(f, "free({r})"),
        }
    }
}

/// Sparse integer combination of `e_j @ g`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    terms: BTreeMap<(usize, Word), i64>,
}

fn add_coeff(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("module coefficient overflow")
}

impl ModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(index: usize, g: Word) -> Self {
        Self::term(1, index, g)
    }

    pub fn term(coeff: i64, index: usize, g: Word) -> Self {
        let mut x = Self::zero();
        x.add_term(coeff, index, g);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, usize, Word)>) -> Self {
        let mut x = Self::zero();
        for (c, j, g) in terms {
            x.add_term(c, j, g);
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: usize, g: &Word) -> i64 {
        // BTreeMap lookups need an owned key; cloning a short word is cheap
        self.terms.get(&(index, g.clone())).copied().unwrap_or(0)
    }

    /// Terms in canonical order: by basis index, then by word.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Word, i64)> {
        self.terms.iter().map(|((j, g), c)| (*j, g, *c))
    }

    pub fn add_term(&mut self, coeff: i64, index: usize, g: Word) {
        if coeff == 0 {
            return;
        }
        let key = (index, g);
        let total = add_coeff(self.terms.get(&key).copied().unwrap_or(0), coeff);
        if total == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, total);
        }
    }

    pub fn add_assign(&mut self, other: &ModuleElement) {
        for ((j, g), c) in &other.terms {
            self.add_term(*c, *j, g.clone());
        }
    }

    /// Checks basis indices against `spec` and words against `group`.
    pub fn check(&self, spec: ModuleSpec, group: &GroupPresentation) -> Result<()> {
        for (j, g) in self.terms.keys() {
            if *j >= spec.rank() {
                return Err(Error::BasisOutOfRange { index: *j, rank: spec.rank() });
            }
            group.check(g)?;
        }
        Ok(())
    }
}

pub fn mod_add(x: &ModuleElement, y: &ModuleElement) -> ModuleElement {
    let mut out = x.clone();
    out.add_assign(y);
    out
}

pub fn mod_neg(x: &ModuleElement) -> ModuleElement {
    mod_scale(-1, x)
}

pub fn mod_scale(n: i64, x: &ModuleElement) -> ModuleElement {
    if n == 0 {
        return ModuleElement::zero();
    }
    ModuleElement {
        terms: x
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.checked_mul(n).expect("module coefficient overflow")))
            .collect(),
    }
}

/// Left action `sigma^tau`.
pub fn act(group: &GroupPresentation, tau: &Word, sigma: &ModuleElement) -> ModuleElement {
    if tau.is_identity() {
        return sigma.clone();
    }
    ModuleElement::from_terms(
        sigma
            .terms
            .iter()
            .map(|((j, g), c)| (*c, *j, group.multiply(tau, g))),
    )
}

/// Smallest element of the orbit `{ z^k * g }`.
pub fn orbit_min(group: &GroupPresentation, z: &CentralizerGen, g: &Word) -> Word {
    match z.order {
        Order::Finite(m) => {
            let mut best = g.clone();
            let mut cur = g.clone();
            for _ in 1..m {
                cur = group.multiply(&z.generator, &cur);
                if cur < best {
                    best = cur.clone();
                }
            }
            best
        }
        Order::Infinite if z.generator.len() == 1 => {
            // z = x^{+-1} for a single factor generator x: the orbit minimum
            // strips a leading x-syllable if there is one
            let factor = z.generator.syllables()[0].factor;
            match g.syllables().first() {
                Some(first) if first.factor == factor => {
                    Word::from_reduced(g.syllables()[1..].to_vec())
                }
                _ => g.clone(),
            }
        }
        Order::Infinite => {
            // |z^k g| >= |k| |z| - |g| - 1, so only small |k| can beat g itself
            let zl = z.generator.len() as i64;
            let bound = (2 * g.len() as i64 + 2) / zl + 2;
            let zinv = group.invert(&z.generator);
            let mut best = g.clone();
            let (mut up, mut down) = (g.clone(), g.clone());
            for _ in 0..bound {
                up = group.multiply(&z.generator, &up);
                down = group.multiply(&zinv, &down);
                if up < best {
                    best = up.clone();
                }
                if down < best {
                    best = down.clone();
                }
            }
            best
        }
    }
}

/// Replaces every group coordinate by its orbit minimum under `<z>` and
/// merges the result. This is the coinvariant normal form for the
/// centralizer action.
pub fn orbit_canonical(
    group: &GroupPresentation,
    sigma: &ModuleElement,
    z: &CentralizerGen,
) -> ModuleElement {
    ModuleElement::from_terms(
        sigma
            .terms
            .iter()
            .map(|((j, g), c)| (*c, *j, orbit_min(group, z, g))),
    )
}

/// Display adapter using the presentation's generator names.
pub struct ShowModule<'a> {
    pub(crate) group: &'a GroupPresentation,
    pub(crate) elem: &'a ModuleElement,
}

impl ModuleElement {
    pub fn show<'a>(&'a self, group: &'a GroupPresentation) -> ShowModule<'a> {
        ShowModule { group, elem: self }
    }
}

impl fmt::Display for ShowModule<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return f.write_str("0");
        }
        for (i, (j, g, c)) in self.elem.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "(e{j} @ {})", self.group.show(g))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FactorSpec;

    fn fab() -> GroupPresentation {
        GroupPresentation::free(&["a", "b"]).unwrap()
    }

    fn w(g: &GroupPresentation, raw: &[(usize, i64)]) -> Word {
        g.word_normalize(raw).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let g = fab();
        let x = ModuleElement::basis(0, w(&g, &[(0, 1)]));
        assert!(mod_add(&x, &mod_neg(&x)).is_zero());
        let y = ModuleElement::term(2, 1, Word::identity());
        assert_eq!(mod_neg(&y), ModuleElement::term(-2, 1, Word::identity()));
        assert!(mod_scale(0, &x).is_zero());
    }

    #[test]
    fn action_examples() {
        let g = fab();
        let a = w(&g, &[(0, 1)]);
        let s = ModuleElement::basis(0, Word::identity());
        assert_eq!(act(&g, &a, &s), ModuleElement::basis(0, a.clone()));
        assert_eq!(act(&g, &Word::identity(), &s), s);
        assert_eq!(act(&g, &g.invert(&a), &act(&g, &a, &s)), s);
    }

    #[test]
    fn orbit_examples() {
        let g = fab();
        let a = w(&g, &[(0, 1)]);
        let za = CentralizerGen { generator: a.clone(), order: Order::Infinite };
        let s = ModuleElement::basis(0, w(&g, &[(0, 3)]));
        assert_eq!(orbit_canonical(&g, &s, &za), ModuleElement::basis(0, Word::identity()));

        let ab = w(&g, &[(0, 1), (1, 1)]);
        let zab = CentralizerGen { generator: ab, order: Order::Infinite };
        let s = ModuleElement::basis(0, w(&g, &[(0, 1), (1, 1), (0, 1)]));
        assert_eq!(orbit_canonical(&g, &s, &zab), ModuleElement::basis(0, a.clone()));

        let h = GroupPresentation::new(vec![FactorSpec::infinite("a"), FactorSpec::finite("b", 3)])
            .unwrap();
        let b = w(&h, &[(1, 1)]);
        let zb = CentralizerGen { generator: b, order: Order::Finite(3) };
        let s = ModuleElement::basis(0, w(&h, &[(1, 2)]));
        assert_eq!(orbit_canonical(&h, &s, &zb), ModuleElement::basis(0, Word::identity()));
    }

    /// Brute-force orbit minimum over a wide window of exponents.
    #[test]
    fn orbit_min_matches_wide_enumeration() {
        let g = fab();
        let zs = [
            w(&g, &[(0, 1), (1, 1)]),
            w(&g, &[(0, 2), (1, -1)]),
            w(&g, &[(0, 1), (1, 1), (0, 1), (1, 2)]),
        ];
        let gs = [
            Word::identity(),
            w(&g, &[(1, -1), (0, -1), (1, 3)]),
            w(&g, &[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1)]),
            w(&g, &[(1, -1), (0, -2), (1, 1), (0, 2)]),
        ];
        for z in &zs {
            let cg = CentralizerGen { generator: z.clone(), order: Order::Infinite };
            for x in &gs {
                let brute = (-30..=30)
                    .map(|k| g.multiply(&g.power(z, k), x))
                    .min()
                    .unwrap();
                assert_eq!(orbit_min(&g, &cg, x), brute);
            }
        }
    }

    #[test]
    fn display_and_check() {
        let g = fab();
        let x = ModuleElement::from_terms([
            (2, 0, w(&g, &[(0, 1), (1, 1)])),
            (-1, 1, Word::identity()),
        ]);
        assert_eq!(x.show(&g).to_string(), "2*(e0 @ a*b) - (e1 @ 1)");
        assert_eq!(ModuleElement::term(-1, 0, Word::identity()).show(&g).to_string(), "-(e0 @ 1)");
        assert!(x.check(ModuleSpec::Free(2), &g).is_ok());
        assert_eq!(
            x.check(ModuleSpec::Free(1), &g),
            Err(Error::BasisOutOfRange { index: 1, rank: 1 })
        );
        assert!(x.check(ModuleSpec::Zero, &g).is_err());
    }
}
