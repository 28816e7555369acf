//! Seeded random generation of words, module elements and Wh elements.
//!
//! All randomness in the crate goes through [`rng_from_seed`], a ChaCha8
//! stream seeded from a `u64`. ChaCha8 output is fixed by its algorithm, so a
//! given seed produces the same samples on every platform.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::{GroupPresentation, Order, Word};
use crate::manifold::ManifoldData;
use crate::module::{ModuleElement, ModuleSpec};
use crate::whitehead::{WhElement, WhTerm, Z2};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size limits for random elements.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_syllables: usize,
    pub max_exp: i64,
    pub max_module_terms: usize,
    pub max_coeff: i64,
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_syllables: 4, max_exp: 2, max_module_terms: 3, max_coeff: 3, max_terms: 5 }
    }
}

/// A random reduced word with at most `max_syllables` syllables.
pub fn random_word<R: Rng>(rng: &mut R, group: &GroupPresentation, max_syllables: usize, max_exp: i64) -> Word {
    let nf = group.factors().len();
    if nf == 0 {
        return Word::identity();
    }
    let len = rng.gen_range(0..=max_syllables);
    let mut raw = Vec::with_capacity(len);
    let mut prev = None;
    for _ in 0..len {
        if nf == 1 && prev.is_some() {
            break;
        }
        let factor = loop {
            let f = rng.gen_range(0..nf);
            if Some(f) != prev {
                break f;
            }
        };
        let exp = match group.factor_order(factor) {
            Order::Finite(m) => rng.gen_range(1..m as i64),
            Order::Infinite => {
                let e = rng.gen_range(1..=max_exp.max(1));
                if rng.gen_bool(0.5) {
                    e
                } else {
                    -e
                }
            }
        };
        raw.push((factor, exp));
        prev = Some(factor);
    }
    group.word_normalize(&raw).expect("factor indices in range")
}

pub fn random_module<R: Rng>(rng: &mut R, manifold: &ManifoldData, limits: &Limits) -> ModuleElement {
    let rank = manifold.module().rank();
    if rank == 0 {
        return ModuleElement::zero();
    }
    let n = rng.gen_range(0..=limits.max_module_terms);
    ModuleElement::from_terms((0..n).map(|_| {
        let c = loop {
            let c = rng.gen_range(-limits.max_coeff..=limits.max_coeff);
            if c != 0 {
                break c;
            }
        };
        let j = rng.gen_range(0..rank);
        (c, j, random_word(rng, manifold.group(), limits.max_syllables, limits.max_exp))
    }))
}

pub fn random_term<R: Rng>(rng: &mut R, manifold: &ManifoldData, limits: &Limits) -> WhTerm {
    WhTerm::new(
        Z2::new(rng.gen_range(0..2)),
        random_module(rng, manifold, limits),
        random_word(rng, manifold.group(), limits.max_syllables, limits.max_exp),
    )
}

pub fn random_wh<R: Rng>(rng: &mut R, manifold: &ManifoldData, limits: &Limits) -> WhElement {
    let n = rng.gen_range(0..=limits.max_terms);
    WhElement::from_terms((0..n).map(|_| random_term(rng, manifold, limits)).collect())
}

/// Random valid characteristic data: `-1` only on factors of infinite or even order.
pub fn random_manifold<R: Rng>(rng: &mut R, group: GroupPresentation, module: ModuleSpec) -> ManifoldData {
    let w1 = group
        .factors()
        .iter()
        .map(|f| match f.order {
            Order::Finite(m) if m % 2 == 1 => 1,
            _ if rng.gen_bool(0.5) => -1,
            _ => 1,
        })
        .collect();
    let w2 = (0..module.rank()).map(|_| rng.gen_range(0..2)).collect();
    ManifoldData::new(group, module, w1, w2).expect("generated data is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FactorSpec;

    #[test]
    fn words_are_reduced_and_bounded() {
        let g = GroupPresentation::new(vec![
            FactorSpec::infinite("a"),
            FactorSpec::finite("b", 3),
            FactorSpec::finite("c", 2),
        ])
        .unwrap();
        let mut rng = rng_from_seed(1);
        for _ in 0..500 {
            let w = random_word(&mut rng, &g, 6, 3);
            assert!(g.check(&w).is_ok());
            assert!(w.len() <= 6);
        }
    }

    #[test]
    fn seeded_output_is_reproducible() {
        let x = ManifoldData::trivial_w(GroupPresentation::free(&["a", "b"]).unwrap(), ModuleSpec::Free(2));
        let a = random_wh(&mut rng_from_seed(42), &x, &Limits::default());
        let b = random_wh(&mut rng_from_seed(42), &x, &Limits::default());
        assert_eq!(a, b);
    }

    #[test]
    fn random_manifolds_are_valid() {
        let g = GroupPresentation::new(vec![FactorSpec::infinite("a"), FactorSpec::finite("b", 3)]).unwrap();
        let mut rng = rng_from_seed(3);
        for _ in 0..50 {
            let x = random_manifold(&mut rng, g.clone(), ModuleSpec::Free(2));
            assert_eq!(x.w1()[1], 1);
        }
    }
}
