use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Order, Word};
use crate::module::{ModuleElement, ModuleSpec};

/// The algebraic data of a 4-manifold that the invariant depends on:
/// `pi_1`, `pi_2`, and the characteristic classes `w1`, `w2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ManifoldData {
    group: GroupPresentation,
    module: ModuleSpec,
    w1: Vec<i8>,
    w2: Vec<u8>,
}

impl ManifoldData {
    /// `w1[i]` is the sign of the generator of factor `i`, `w2[j]` the value on `e_j`.
    pub fn new(group: GroupPresentation, module: ModuleSpec, w1: Vec<i8>, w2: Vec<u8>) -> Result<Self> {
        if w1.len() != group.factors().len() {
            return Err(Error::InvalidCharacteristic(format!(
                "w1 has {} values for {} factors",
                w1.len(),
                group.factors().len()
            )));
        }
        if w2.len() != module.rank() {
            return Err(Error::InvalidCharacteristic(format!(
                "w2 has {} values for a module of rank {}",
                w2.len(),
                module.rank()
            )));
        }
        for (f, &sign) in group.factors().iter().zip(&w1) {
            match sign {
                1 => {}
                -1 => {
                    if let Order::Finite(m) = f.order {
                        if m % 2 == 1 {
                            return Err(Error::InvalidW1(f.name.clone()));
                        }
                    }
                }
                other => {
                    return Err(Error::InvalidCharacteristic(format!(
                        "w1 value {other} for `{}` is not +1 or -1",
                        f.name
                    )))
                }
            }
        }
        if let Some(bad) = w2.iter().find(|&&v| v > 1) {
            return Err(Error::InvalidCharacteristic(format!("w2 value {bad} is not 0 or 1")));
        }
        Ok(ManifoldData { group, module, w1, w2 })
    }

    /// Orientable, spin: `w1 = +1`, `w2 = 0`.
    pub fn trivial_w(group: GroupPresentation, module: ModuleSpec) -> Self {
        let w1 = vec![1; group.factors().len()];
        let w2 = vec![0; module.rank()];
        ManifoldData { group, module, w1, w2 }
    }

    pub fn group(&self) -> &GroupPresentation {
        &self.group
    }

    pub fn module(&self) -> ModuleSpec {
        self.module
    }

    pub fn w1(&self) -> &[i8] {
        &self.w1
    }

    pub fn w2(&self) -> &[u8] {
        &self.w2
    }

    /// The homomorphism `pi_1 -> {+1, -1}`.
    pub fn w1_eval(&self, w: &Word) -> i8 {
        let negative = w
            .syllables()
            .iter()
            .filter(|s| self.w1[s.factor] < 0 && s.exp % 2 != 0)
            .count();
        if negative % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Additive mod 2, ignores the group-ring coordinate.
    pub fn w2_eval(&self, sigma: &ModuleElement) -> u8 {
        sigma
            .iter()
            .filter(|(j, _, c)| self.w2[*j] == 1 && c % 2 != 0)
            .count() as u8
            % 2
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        self.group.check(w)
    }

    pub fn check_module(&self, sigma: &ModuleElement) -> Result<()> {
        sigma.check(self.module, &self.group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FactorSpec;

    fn z_z3() -> GroupPresentation {
        GroupPresentation::new(vec![FactorSpec::infinite("a"), FactorSpec::finite("b", 3)]).unwrap()
    }

    #[test]
    fn w1_examples() {
        let g = GroupPresentation::free(&["a", "b"]).unwrap();
        let x = ManifoldData::new(g.clone(), ModuleSpec::Zero, vec![-1, 1], vec![]).unwrap();
        let a2b = g.word_normalize(&[(0, 2), (1, 1)]).unwrap();
        assert_eq!(x.w1_eval(&a2b), 1);
        let aba = g.word_normalize(&[(0, 1), (1, 1), (0, 1)]).unwrap();
        assert_eq!(x.w1_eval(&aba), 1);
        let ab = g.word_normalize(&[(0, -1), (1, 1)]).unwrap();
        assert_eq!(x.w1_eval(&ab), -1);
        let y = ManifoldData::trivial_w(g.clone(), ModuleSpec::Zero);
        assert_eq!(y.w1_eval(&ab), 1);
    }

    #[test]
    fn w1_rejects_odd_order() {
        assert_eq!(
            ManifoldData::new(z_z3(), ModuleSpec::Zero, vec![1, -1], vec![]),
            Err(Error::InvalidW1("b".into()))
        );
        let g = GroupPresentation::new(vec![FactorSpec::finite("c", 4)]).unwrap();
        assert!(ManifoldData::new(g, ModuleSpec::Zero, vec![-1], vec![]).is_ok());
    }

    #[test]
    fn w2_examples() {
        let g = z_z3();
        let x = ManifoldData::new(g.clone(), ModuleSpec::Free(2), vec![1, 1], vec![1, 1]).unwrap();
        let ab = g.word_normalize(&[(0, 1), (1, 1)]).unwrap();
        assert_eq!(x.w2_eval(&ModuleElement::term(3, 0, ab)), 1);
        assert_eq!(x.w2_eval(&ModuleElement::zero()), 0);
        let s = ModuleElement::from_terms([
            (1, 0, Word::identity()),
            (1, 1, g.generator("a").unwrap()),
        ]);
        assert_eq!(x.w2_eval(&s), 0);
    }

    #[test]
    fn characteristic_lengths_checked() {
        assert!(ManifoldData::new(z_z3(), ModuleSpec::Free(1), vec![1], vec![0]).is_err());
        assert!(ManifoldData::new(z_z3(), ModuleSpec::Free(1), vec![1, 1], vec![]).is_err());
        assert!(ManifoldData::new(z_z3(), ModuleSpec::Free(1), vec![1, 1], vec![2]).is_err());
    }
}
