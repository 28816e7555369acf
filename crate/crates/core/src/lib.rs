//! Symbolic evaluation of the second pseudo-isotopy invariant of
//! half-unknotted barbell diffeomorphisms.
//!
//! The invariant takes values in `Wh_1(pi_1 M; Z_2 x pi_2 M)`. For `pi_1` a
//! free product of cyclic groups and `pi_2` a free `Z[pi_1]`-module this
//! group has an explicit normal form, computed by [`whitehead::wh_normalize`].
//! Barbells are described combinatorially by their intersection circles
//! (see [`barbell`]).
//!
//! Values are representatives in `Wh_1` itself; the further quotient by the
//! image of `K_3` is not modelled.

pub mod barbell;
pub mod cli;
pub mod error;
pub mod group;
pub mod manifold;
pub mod module;
pub mod oracle;
pub mod sample;
pub mod syntax;
pub mod whitehead;

pub use barbell::{
    add_meridian_terms, delta_k, realize, theta, theta_cerf, theta_g, theta_special, BarbellDescriptor,
    CerfEntry, CerfIntersectionData, Circle,
};
pub use error::{Error, Result};
pub use group::{word_compare, CentralizerGen, ConjugacyData, FactorSpec, GroupPresentation, Order, Syllable, Word};
pub use manifold::ManifoldData;
pub use module::{act, mod_add, mod_neg, mod_scale, orbit_canonical, ModuleElement, ModuleSpec};
pub use oracle::{oracle_equal, random_relation_walk, FiniteSetup, RelationLattice};
pub use syntax::{
    format_barbell, format_manifold, parse_barbell, parse_manifold, parse_module_elem, parse_wh, parse_word,
    parse_word_list,
};
pub use whitehead::{
    apply_relation, involute, wh_add, wh_equal, wh_neg, wh_normalize, Relation, WhCoeff, WhElement,
    WhNormalForm, WhTerm, Z2,
};
