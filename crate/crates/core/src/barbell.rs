//! Combinatorial barbell descriptors and the evaluators of the second
//! pseudo-isotopy invariant.
//!
//! A half-unknotted barbell enters as the list of circles along which the
//! sphere `R_0` meets the 3-ball bounded by the unknotted sphere. Each circle
//! carries a path `delta` from the base point and the class of the disk it
//! cuts off. The invariant is
//!
//! ```text
//! theta = sum_i (0, D_i^{delta_i}) . [delta_i]
//! ```
//!
//! evaluated in normal form. The first invariant of these pseudo-isotopies
//! always vanishes and is not computed.

use crate::error::{Error, Result};
use crate::group::{FactorSpec, GroupPresentation, Word};
use crate::manifold::ManifoldData;
use crate::module::{act, ModuleElement, ModuleSpec};
use crate::whitehead::{involute, wh_neg, wh_normalize, WhElement, WhNormalForm, WhTerm, Z2};

/// One intersection circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circle {
    pub delta: Word,
    pub disk: ModuleElement,
}

impl Circle {
    pub fn new(delta: Word, disk: ModuleElement) -> Self {
        Circle { delta, disk }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BarbellDescriptor {
    pub circles: Vec<Circle>,
}

impl BarbellDescriptor {
    pub fn new(circles: Vec<Circle>) -> Self {
        BarbellDescriptor { circles }
    }

    pub fn check(&self, manifold: &ManifoldData) -> Result<()> {
        for c in &self.circles {
            manifold.check_word(&c.delta)?;
            manifold.check_module(&c.disk)?;
        }
        Ok(())
    }

    /// The unnormalized sum `sum_i (0, D_i^{delta_i}).[delta_i]`.
    pub fn theta_element(&self, manifold: &ManifoldData) -> Result<WhElement> {
        self.check(manifold)?;
        Ok(self.to_cerf(manifold)?.to_element())
    }

    /// Intersection data with `s_i = 0`, `beta_i* = D_i^{delta_i}`, `gamma_i* = delta_i`.
    pub fn to_cerf(&self, manifold: &ManifoldData) -> Result<CerfIntersectionData> {
        self.check(manifold)?;
        let group = manifold.group();
        Ok(CerfIntersectionData {
            entries: self
                .circles
                .iter()
                .map(|c| CerfEntry {
                    s: Z2::ZERO,
                    beta_star: act(group, &c.delta, &c.disk),
                    gamma_star: c.delta.clone(),
                })
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CerfEntry {
    pub s: Z2,
    pub beta_star: ModuleElement,
    pub gamma_star: Word,
}

/// Intersection data `(s_i, beta_i*, gamma_i*)` read off a Cerf diagram with a single eye.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CerfIntersectionData {
    pub entries: Vec<CerfEntry>,
}

impl CerfIntersectionData {
    pub fn to_element(&self) -> WhElement {
        WhElement::from_terms(
            self.entries
                .iter()
                .map(|e| WhTerm::new(e.s, e.beta_star.clone(), e.gamma_star.clone()))
                .collect(),
        )
    }

    pub fn from_element(x: &WhElement) -> Self {
        CerfIntersectionData {
            entries: x
                .terms
                .iter()
                .map(|t| CerfEntry {
                    s: t.s,
                    beta_star: t.sigma.clone(),
                    gamma_star: t.gamma.clone(),
                })
                .collect(),
        }
    }
}

pub fn theta(b: &BarbellDescriptor, manifold: &ManifoldData) -> Result<WhNormalForm> {
    wh_normalize(&b.theta_element(manifold)?, manifold)
}

pub fn theta_cerf(d: &CerfIntersectionData, manifold: &ManifoldData) -> Result<WhNormalForm> {
    wh_normalize(&d.to_element(), manifold)
}

/// `(0, sigma) . sum_i [gamma_i]` for a sphere disjoint from the ball, where
/// `sigma` is the sphere pulled back along the barbell arc and the `gamma_i`
/// are the initial segments of the arc ending at its crossings with the ball.
pub fn theta_special(sigma: &ModuleElement, gammas: &[Word], manifold: &ManifoldData) -> Result<WhNormalForm> {
    let x = WhElement::from_terms(
        gammas
            .iter()
            .map(|g| WhTerm::new(Z2::ZERO, sigma.clone(), g.clone()))
            .collect(),
    );
    wh_normalize(&x, manifold)
}

/// Invariant of the companion pseudo-isotopy: `-bar(theta)`.
pub fn theta_g(b: &BarbellDescriptor, manifold: &ManifoldData) -> Result<WhNormalForm> {
    let t = theta(b, manifold)?;
    wh_normalize(&wh_neg(&involute(&t.to_element(), manifold)?), manifold)
}

/// The barbell `delta_k` in `S^1 x D^3`: `pi_1 = Z(t)`, `pi_2 = 0`, one circle
/// at `t^(k-1)` bounding a null disk.
pub fn delta_k(k: i64) -> Result<(ManifoldData, BarbellDescriptor)> {
    if k < 1 {
        return Err(Error::Invalid(format!("delta_k needs k >= 1, got {k}")));
    }
    let group = GroupPresentation::new(vec![FactorSpec::infinite("t")])?;
    let delta = group.word_normalize(&[(0, k - 1)])?;
    let manifold = ManifoldData::trivial_w(group, ModuleSpec::Zero);
    Ok((manifold, BarbellDescriptor::new(vec![Circle::new(delta, ModuleElement::zero())])))
}

/// A one-circle descriptor with `theta = (0, sigma).[alpha]`.
pub fn realize(sigma: &ModuleElement, alpha: &Word, manifold: &ManifoldData) -> Result<BarbellDescriptor> {
    manifold.check_module(sigma)?;
    manifold.check_word(alpha)?;
    let group = manifold.group();
    let disk = act(group, &group.invert(alpha), sigma);
    Ok(BarbellDescriptor::new(vec![Circle::new(alpha.clone(), disk)]))
}

/// Appends the meridian circles produced by self-intersections of an
/// immersed barbell. Each bounds a null disk, so `theta` is unchanged.
pub fn add_meridian_terms(b: &BarbellDescriptor, n: usize, deltas: &[Word]) -> Result<BarbellDescriptor> {
    if deltas.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: deltas.len() });
    }
    let mut out = b.clone();
    out.circles
        .extend(deltas.iter().map(|d| Circle::new(d.clone(), ModuleElement::zero())));
    Ok(out)
}
