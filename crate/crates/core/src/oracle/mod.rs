//! Independent checks on the Wh normal form.
//!
//! * For `pi_1 = Z/m` the quotient defining `Wh_1` is a finitely generated
//!   abelian group given by an explicit relation lattice, so equality can
//!   be decided by integer linear algebra without any conjugacy machinery.
//! * For any supported group, [`random_relation_walk`] rewrites an element
//!   by sound relation moves; its output is equal to the input by
//!   construction.

pub mod lattice;
mod walk;

pub use walk::random_relation_walk;

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{FactorSpec, GroupPresentation, Word};
use crate::manifold::ManifoldData;
use crate::module::{ModuleElement, ModuleSpec};
use crate::sample::{random_term, random_wh, random_word, rng_from_seed, Limits};
use crate::whitehead::{apply_relation, wh_add, wh_equal, Relation, WhElement, WhTerm, Z2};
use lattice::Hermite;

/// `pi_1 = Z/m` generated by `t`, `pi_2` zero or free of rank `rank`, trivial `w`.
///
/// Ambient lattice: one block per group element `g = t^i`, each holding a
/// `Z_2` coordinate followed by `rank * m` integer coordinates `(j, h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteSetup {
    pub m: u64,
    pub rank: usize,
}

impl FiniteSetup {
    pub fn new(m: u64, rank: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invalid("group order must be at least 1".into()));
        }
        Ok(FiniteSetup { m, rank })
    }

    pub fn manifold(&self) -> ManifoldData {
        let group = if self.m == 1 {
            GroupPresentation::trivial()
        } else {
            GroupPresentation::new(vec![FactorSpec::finite("t", self.m)]).expect("m >= 2")
        };
        let module = if self.rank == 0 { ModuleSpec::Zero } else { ModuleSpec::Free(self.rank) };
        ManifoldData::trivial_w(group, module)
    }

    fn order(&self) -> usize {
        self.m as usize
    }

    fn block(&self) -> usize {
        1 + self.rank * self.order()
    }

    pub fn dimension(&self) -> usize {
        self.order() * self.block()
    }

    fn z2_coord(&self, g: usize) -> usize {
        g * self.block()
    }

    fn module_coord(&self, g: usize, j: usize, h: usize) -> usize {
        g * self.block() + 1 + j * self.order() + h
    }

    /// Exponent of `t` in `0..m`.
    fn element_index(&self, w: &Word) -> usize {
        match w.syllables() {
            [] => 0,
            [s] => s.exp.rem_euclid(self.m as i64) as usize,
            _ => unreachable!("words over Z/m have at most one syllable"),
        }
    }

    pub fn vectorize(&self, x: &WhElement) -> Result<Vec<i64>> {
        x.check(&self.manifold())?;
        let mut v = vec![0i64; self.dimension()];
        for t in &x.terms {
            let g = self.element_index(&t.gamma);
            v[self.z2_coord(g)] += t.s.value() as i64;
            for (j, h, c) in t.sigma.iter() {
                v[self.module_coord(g, j, self.element_index(h))] += c;
            }
        }
        Ok(v)
    }

    /// Generators of the relation subgroup.
    pub fn relation_rows(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        let dim = self.dimension();
        let unit = |k: usize| {
            let mut v = vec![0i64; dim];
            v[k] = 1;
            v
        };
        let mut rows = Vec::new();
        // beta.[1]
        for k in 0..self.block() {
            rows.push(unit(k));
        }
        // alpha.[g] - alpha^tau.[tau g tau^-1]; the group is abelian so the
        // class is g itself, and alpha^tau moves (j, h) to (j, tau + h).
        // The Z_2 coordinate is fixed by tau and contributes nothing.
        for g in 0..n {
            for tau in 1..n {
                for j in 0..self.rank {
                    for h in 0..n {
                        let mut v = vec![0i64; dim];
                        v[self.module_coord(g, j, h)] += 1;
                        v[self.module_coord(g, j, (h + tau) % n)] -= 1;
                        rows.push(v);
                    }
                }
            }
        }
        for g in 0..n {
            let mut v = vec![0i64; dim];
            v[self.z2_coord(g)] = 2;
            rows.push(v);
        }
        rows
    }
}

/// Relation lattice of a [`FiniteSetup`] in Hermite form, ready for repeated
/// membership queries.
#[derive(Clone, Debug)]
pub struct RelationLattice {
    setup: FiniteSetup,
    hermite: Hermite,
}

impl RelationLattice {
    pub fn new(setup: FiniteSetup) -> Self {
        let hermite = Hermite::new(setup.dimension(), &setup.relation_rows());
        RelationLattice { setup, hermite }
    }

    pub fn setup(&self) -> FiniteSetup {
        self.setup
    }

    pub fn hermite(&self) -> &Hermite {
        &self.hermite
    }

    pub fn equal(&self, x: &WhElement, y: &WhElement) -> Result<bool> {
        let vx = self.setup.vectorize(x)?;
        let vy = self.setup.vectorize(y)?;
        let diff: Vec<i64> = vx.iter().zip(&vy).map(|(a, b)| a - b).collect();
        Ok(self.hermite.contains(&diff))
    }
}

pub fn oracle_equal(x: &WhElement, y: &WhElement, setup: FiniteSetup) -> Result<bool> {
    RelationLattice::new(setup).equal(x, y)
}

/// Outcome of comparing `wh_equal` against the lattice oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementReport {
    pub trials: usize,
    pub agree: usize,
    /// How many pairs the oracle judged equal.
    pub equal_pairs: usize,
    pub disagreements: Vec<(WhElement, WhElement)>,
}

impl AgreementReport {
    pub fn all_agree(&self) -> bool {
        self.agree == self.trials
    }
}

/// A pair of elements to compare. Cycles through independent pairs, pairs
/// related by one relation move, and near misses that differ from such a
/// pair by one extra term.
fn sample_pair<R: Rng>(rng: &mut R, x: &ManifoldData, trial: usize) -> Result<(WhElement, WhElement)> {
    let limits = Limits { max_syllables: 1, max_exp: 1, max_module_terms: 3, max_coeff: 2, max_terms: 4 };
    let a = random_wh(rng, x, &limits);
    let b = match trial % 4 {
        0 => random_wh(rng, x, &limits),
        1 => one_relation_move(rng, &a, x)?,
        2 => {
            let moved = one_relation_move(rng, &a, x)?;
            wh_add(&moved, &WhElement::from_terms(vec![random_term(rng, x, &limits)]))
        }
        _ => {
            // differ by a coinvariant-trivial or a Z_2 unit term
            let moved = one_relation_move(rng, &a, x)?;
            let g = random_word(rng, x.group(), 1, 1);
            let extra = if x.module().rank() > 0 && rng.gen_bool(0.5) {
                let j = rng.gen_range(0..x.module().rank());
                let h1 = random_word(rng, x.group(), 1, 1);
                let h2 = random_word(rng, x.group(), 1, 1);
                let sigma = ModuleElement::from_terms([(1, j, h1), (-1, j, h2)]);
                WhTerm::new(Z2::ZERO, sigma, g)
            } else {
                WhTerm::new(Z2::ONE, ModuleElement::zero(), g)
            };
            wh_add(&moved, &WhElement::from_terms(vec![extra]))
        }
    };
    Ok((a, b))
}

fn one_relation_move<R: Rng>(rng: &mut R, a: &WhElement, x: &ManifoldData) -> Result<WhElement> {
    if a.is_empty() {
        return Ok(a.clone());
    }
    let term = rng.gen_range(0..a.len());
    let tau = random_word(rng, x.group(), 2, 2);
    apply_relation(a, &Relation::ConjugateTransport { term, tau }, x)
}

/// Runs `trials` randomized comparisons between `wh_equal` and the lattice
/// oracle over `Z/m` with a free module of the given rank.
pub fn agreement_run(setup: FiniteSetup, trials: usize, seed: u64) -> Result<AgreementReport> {
    let lattice = RelationLattice::new(setup);
    let manifold = setup.manifold();
    let mut rng = rng_from_seed(seed);
    let mut report = AgreementReport { trials, agree: 0, equal_pairs: 0, disagreements: Vec::new() };
    for trial in 0..trials {
        let (a, b) = sample_pair(&mut rng, &manifold, trial)?;
        let engine = wh_equal(&a, &b, &manifold)?;
        let oracle = lattice.equal(&a, &b)?;
        if oracle {
            report.equal_pairs += 1;
        }
        if engine == oracle {
            report.agree += 1;
        } else {
            report.disagreements.push((a, b));
        }
    }
    Ok(report)
}
