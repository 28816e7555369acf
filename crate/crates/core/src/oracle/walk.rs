use rand::Rng;

use crate::group::Word;
use crate::manifold::ManifoldData;
use crate::module::mod_add;
use crate::module::mod_neg;
use crate::sample::{random_module, random_word, rng_from_seed, Limits};
use crate::whitehead::{apply_relation, Relation, WhElement, WhTerm, Z2};

const TAU_SYLLABLES: usize = 3;

/// Rewrites `x` by `steps` random moves, each of which preserves the class
/// of `x` in `Wh_1`:
///
/// * conjugate-transport of a random term by a random short word,
/// * removal of an identity-class term,
/// * insertion of a random identity-class term,
/// * splitting one term into two at the same group element,
/// * merging two terms at the same group element,
/// * swapping two terms.
pub fn random_relation_walk(x: &WhElement, manifold: &ManifoldData, steps: usize, seed: u64) -> WhElement {
    let mut rng = rng_from_seed(seed);
    let limits = Limits { max_syllables: 2, max_exp: 2, max_module_terms: 2, max_coeff: 2, max_terms: 1 };
    let group = manifold.group();
    let mut cur = x.clone();
    for _ in 0..steps {
        let n = cur.len();
        match rng.gen_range(0..10) {
            0..=4 if n > 0 => {
                let term = rng.gen_range(0..n);
                let tau = random_word(&mut rng, group, TAU_SYLLABLES, 2);
                cur = apply_relation(&cur, &Relation::ConjugateTransport { term, tau }, manifold)
                    .expect("valid term index");
            }
            5 => {
                if let Some(term) = cur.terms.iter().position(|t| t.gamma.is_identity()) {
                    cur = apply_relation(&cur, &Relation::KillIdentity { term }, manifold)
                        .expect("identity-class term");
                }
            }
            6 => {
                let s = Z2::new(rng.gen_range(0..2));
                let sigma = random_module(&mut rng, manifold, &limits);
                let at = rng.gen_range(0..=n);
                cur.terms.insert(at, WhTerm::new(s, sigma, Word::identity()));
            }
            7 if n > 0 => {
                let i = rng.gen_range(0..n);
                let s1 = Z2::new(rng.gen_range(0..2));
                let sigma1 = random_module(&mut rng, manifold, &limits);
                let t = &mut cur.terms[i];
                let rest = WhTerm::new(t.s + s1, mod_add(&t.sigma, &mod_neg(&sigma1)), t.gamma.clone());
                let first = WhTerm::new(s1, sigma1, t.gamma.clone());
                *t = first;
                cur.terms.insert(i + 1, rest);
            }
            8 if n > 1 => {
                let i = rng.gen_range(0..n);
                if let Some(j) = (0..n).find(|&j| j != i && cur.terms[j].gamma == cur.terms[i].gamma) {
                    let other = cur.terms[j].clone();
                    let t = &mut cur.terms[i];
                    t.s += other.s;
                    t.sigma = mod_add(&t.sigma, &other.sigma);
                    cur.terms.remove(j);
                }
            }
            9 if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                cur.terms.swap(i, j);
            }
            _ => {}
        }
    }
    cur
}
