use hwtheta::whitehead::{normal_form_sum, wh_scale};
use hwtheta::*;
use proptest::prelude::*;

fn groups() -> Vec<GroupPresentation> {
    let f = FactorSpec::infinite;
    let z = FactorSpec::finite;
    vec![
        GroupPresentation::new(vec![f("a"), f("b")]).unwrap(),
        GroupPresentation::new(vec![f("a"), z("b", 2)]).unwrap(),
        GroupPresentation::new(vec![f("a"), z("b", 3), z("c", 2)]).unwrap(),
        GroupPresentation::new(vec![z("a", 4), z("b", 3)]).unwrap(),
        GroupPresentation::new(vec![z("a", 6)]).unwrap(),
    ]
}

type Raw = Vec<(usize, i64)>;

fn raw_word(max: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec((0usize..3, prop_oneof![-4i64..=-1, 1i64..=4]), 0..max)
}

fn word(g: &GroupPresentation, raw: &Raw) -> Word {
    let n = g.factors().len();
    let raw: Raw = raw.iter().map(|&(f, e)| (f % n, e)).collect();
    g.word_normalize(&raw).unwrap()
}

type RawModule = Vec<(i64, usize, Raw)>;

fn raw_module() -> impl Strategy<Value = RawModule> {
    prop::collection::vec((-3i64..=3, 0usize..2, raw_word(5)), 0..4)
}

fn module(x: &ManifoldData, raw: &RawModule) -> ModuleElement {
    let rank = x.module().rank();
    if rank == 0 {
        return ModuleElement::zero();
    }
    ModuleElement::from_terms(raw.iter().map(|(c, j, w)| (*c, j % rank, word(x.group(), w))))
}

type RawWh = Vec<(bool, RawModule, Raw)>;

fn raw_wh() -> impl Strategy<Value = RawWh> {
    prop::collection::vec((any::<bool>(), raw_module(), raw_word(6)), 0..5)
}

fn wh(x: &ManifoldData, raw: &RawWh) -> WhElement {
    WhElement::from_terms(
        raw.iter()
            .map(|(s, m, g)| WhTerm::new(Z2::new(*s as i64), module(x, m), word(x.group(), g)))
            .collect(),
    )
}

/// Manifold over one of the sample groups with free(2) module and
/// characteristic data chosen by `bits`, forced valid on odd factors.
fn manifold(gi: usize, bits: u8) -> ManifoldData {
    let g = groups()[gi % groups().len()].clone();
    let w1 = g
        .factors()
        .iter()
        .enumerate()
        .map(|(i, f)| match f.order {
            Order::Finite(m) if m % 2 == 1 => 1,
            _ if bits >> i & 1 == 1 => -1,
            _ => 1,
        })
        .collect();
    let w2 = vec![bits >> 4 & 1, bits >> 5 & 1];
    ManifoldData::new(g, ModuleSpec::Free(2), w1, w2).unwrap()
}

fn nf(x: &WhElement, m: &ManifoldData) -> WhNormalForm {
    wh_normalize(x, m).unwrap()
}

fn fab1() -> ManifoldData {
    ManifoldData::trivial_w(GroupPresentation::free(&["a", "b"]).unwrap(), ModuleSpec::Free(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalize_word_is_idempotent(gi in 0usize..5, r in raw_word(12)) {
        let g = &groups()[gi];
        let w = word(g, &r);
        let again: Raw = w.syllables().iter().map(|s| (s.factor, s.exp)).collect();
        prop_assert_eq!(g.word_normalize(&again).unwrap(), w.clone());
        prop_assert!(g.check(&w).is_ok());
    }

    #[test]
    fn multiply_is_associative(gi in 0usize..5, a in raw_word(8), b in raw_word(8), c in raw_word(8)) {
        let g = &groups()[gi];
        let (u, v, w) = (word(g, &a), word(g, &b), word(g, &c));
        prop_assert_eq!(g.multiply(&g.multiply(&u, &v), &w), g.multiply(&u, &g.multiply(&v, &w)));
    }

    #[test]
    fn invert_is_an_involution(gi in 0usize..5, a in raw_word(10)) {
        let g = &groups()[gi];
        let u = word(g, &a);
        prop_assert_eq!(g.invert(&g.invert(&u)), u.clone());
        prop_assert!(g.multiply(&u, &g.invert(&u)).is_identity());
    }

    #[test]
    fn conjugacy_rep_reconstructs_input(gi in 0usize..5, a in raw_word(10)) {
        let g = &groups()[gi];
        let u = word(g, &a);
        let cd = g.conjugacy_rep(&u);
        let back = g.multiply(&g.multiply(&cd.conjugator, &cd.canonical), &g.invert(&cd.conjugator));
        prop_assert_eq!(back, u);
        prop_assert!(cd.canonical.is_cyclically_reduced());
    }

    #[test]
    fn conjugacy_rep_is_class_invariant(gi in 0usize..5, a in raw_word(10), t in raw_word(8)) {
        let g = &groups()[gi];
        let (u, tau) = (word(g, &a), word(g, &t));
        prop_assert_eq!(g.conjugacy_rep(&g.conjugate(&tau, &u)).canonical, g.conjugacy_rep(&u).canonical);
    }

    #[test]
    fn centralizer_generator_commutes(gi in 0usize..5, a in raw_word(10)) {
        let g = &groups()[gi];
        let c = g.conjugacy_rep(&word(g, &a)).canonical;
        prop_assume!(!c.is_identity());
        let z = g.centralizer_generator(&c).unwrap().generator;
        prop_assert_eq!(g.multiply(&z, &c), g.multiply(&c, &z));
    }

    #[test]
    fn word_order_is_total(gi in 0usize..5, a in raw_word(6), b in raw_word(6), c in raw_word(6)) {
        use std::cmp::Ordering::*;
        let g = &groups()[gi];
        let (u, v, w) = (word(g, &a), word(g, &b), word(g, &c));
        prop_assert_eq!(word_compare(&u, &v), word_compare(&v, &u).reverse());
        prop_assert_eq!(word_compare(&u, &v) == Equal, u == v);
        if word_compare(&u, &v) != Greater && word_compare(&v, &w) != Greater {
            prop_assert_ne!(word_compare(&u, &w), Greater);
        }
    }

    #[test]
    fn act_is_a_left_action(gi in 0usize..5, bits: u8, s in raw_module(), a in raw_word(6), b in raw_word(6)) {
        let x = manifold(gi, bits);
        let g = x.group();
        let (sigma, t1, t2) = (module(&x, &s), word(g, &a), word(g, &b));
        prop_assert_eq!(act(g, &t1, &act(g, &t2, &sigma)), act(g, &g.multiply(&t1, &t2), &sigma));
        prop_assert_eq!(act(g, &g.invert(&t1), &act(g, &t1, &sigma)), sigma.clone());
        prop_assert_eq!(act(g, &Word::identity(), &sigma), sigma);
    }

    #[test]
    fn module_addition_is_an_abelian_group(gi in 0usize..5, p in raw_module(), q in raw_module(), r in raw_module()) {
        let x = manifold(gi, 0);
        let (a, b, c) = (module(&x, &p), module(&x, &q), module(&x, &r));
        prop_assert_eq!(mod_add(&a, &b), mod_add(&b, &a));
        prop_assert_eq!(mod_add(&mod_add(&a, &b), &c), mod_add(&a, &mod_add(&b, &c)));
        prop_assert!(mod_add(&a, &mod_neg(&a)).is_zero());
        prop_assert_eq!(mod_add(&a, &ModuleElement::zero()), a.clone());
        prop_assert_eq!(mod_scale(2, &a), mod_add(&a, &a));
    }

    #[test]
    fn orbit_canonical_is_orbit_constant(gi in 0usize..5, s in raw_module(), c in raw_word(6), k in -6i64..=6) {
        let x = manifold(gi, 0);
        let g = x.group();
        let core = g.conjugacy_rep(&word(g, &c)).canonical;
        prop_assume!(!core.is_identity());
        let z = g.centralizer_generator(&core).unwrap();
        let sigma = module(&x, &s);
        let canon = orbit_canonical(g, &sigma, &z);
        prop_assert_eq!(orbit_canonical(g, &canon, &z), canon.clone());
        let moved = act(g, &g.power(&z.generator, k), &sigma);
        prop_assert_eq!(orbit_canonical(g, &moved, &z), canon);
    }

    #[test]
    fn w2_is_additive_and_action_invariant(gi in 0usize..5, bits: u8, p in raw_module(), q in raw_module(), t in raw_word(6)) {
        let x = manifold(gi, bits);
        let (a, b) = (module(&x, &p), module(&x, &q));
        prop_assert_eq!(x.w2_eval(&mod_add(&a, &b)), (x.w2_eval(&a) + x.w2_eval(&b)) % 2);
        prop_assert_eq!(x.w2_eval(&act(x.group(), &word(x.group(), &t), &a)), x.w2_eval(&a));
    }

    #[test]
    fn normalize_is_idempotent(gi in 0usize..5, bits: u8, r in raw_wh()) {
        let x = manifold(gi, bits);
        let n = nf(&wh(&x, &r), &x);
        prop_assert_eq!(nf(&n.to_element(), &x), n);
    }

    #[test]
    fn relations_preserve_normal_form(gi in 0usize..5, r in raw_wh(), idx in 0usize..5, t in raw_word(6)) {
        let x = manifold(gi, 0);
        let el = wh(&x, &r);
        prop_assume!(!el.is_empty());
        let term = idx % el.len();
        let tau = word(x.group(), &t);
        let moved = apply_relation(&el, &Relation::ConjugateTransport { term, tau }, &x).unwrap();
        prop_assert_eq!(nf(&moved, &x), nf(&el, &x));
        let killed = apply_relation(&el, &Relation::KillIdentity { term }, &x);
        if el.terms[term].gamma.is_identity() {
            prop_assert_eq!(nf(&killed.unwrap(), &x), nf(&el, &x));
        } else {
            prop_assert!(killed.is_err());
        }
    }

    #[test]
    fn involution_squares_to_identity(gi in 0usize..5, bits: u8, r in raw_wh()) {
        let x = manifold(gi, bits);
        let el = wh(&x, &r);
        let twice = involute(&involute(&el, &x).unwrap(), &x).unwrap();
        prop_assert_eq!(nf(&twice, &x), nf(&el, &x));
    }

    #[test]
    fn involution_respects_relations(gi in 0usize..5, bits: u8, r in raw_wh(), idx in 0usize..5, t in raw_word(6)) {
        let x = manifold(gi, bits);
        let el = wh(&x, &r);
        prop_assume!(!el.is_empty());
        let tau = word(x.group(), &t);
        let moved = apply_relation(&el, &Relation::ConjugateTransport { term: idx % el.len(), tau }, &x).unwrap();
        prop_assert_eq!(nf(&involute(&moved, &x).unwrap(), &x), nf(&involute(&el, &x).unwrap(), &x));
    }

    #[test]
    fn normalize_is_additive(gi in 0usize..5, bits: u8, p in raw_wh(), q in raw_wh()) {
        let x = manifold(gi, bits);
        let (a, b) = (wh(&x, &p), wh(&x, &q));
        let sum = nf(&wh_add(&a, &b), &x);
        prop_assert_eq!(normal_form_sum(&nf(&a, &x), &nf(&b, &x), &x).unwrap(), sum);
        prop_assert!(nf(&wh_add(&a, &wh_neg(&a)), &x).is_zero());
        prop_assert_eq!(nf(&wh_scale(3, &a), &x), nf(&wh_add(&a, &wh_add(&a, &a)), &x));
    }

    #[test]
    fn identity_class_is_annihilated(gi in 0usize..5, bits: u8, r in raw_wh()) {
        let x = manifold(gi, bits);
        let mut el = wh(&x, &r);
        for term in &mut el.terms {
            term.gamma = Word::identity();
        }
        prop_assert!(nf(&el, &x).is_zero());
    }

    #[test]
    fn realization_round_trip(s in raw_module(), a in raw_word(9)) {
        let x = fab1();
        let (sigma, alpha) = (module(&x, &s), word(x.group(), &a));
        let b = realize(&sigma, &alpha, &x).unwrap();
        let target = WhElement::single(Z2::ZERO, sigma, alpha);
        prop_assert!(wh_equal(&theta(&b, &x).unwrap().to_element(), &target, &x).unwrap());
    }

    #[test]
    fn meridians_do_not_change_theta(gi in 0usize..5, circles in prop::collection::vec((raw_word(6), raw_module()), 0..4),
                                     ds in prop::collection::vec(raw_word(6), 0..10)) {
        let x = manifold(gi, 0);
        let b = descriptor(&x, &circles);
        let deltas: Vec<Word> = ds.iter().map(|d| word(x.group(), d)).collect();
        let more = add_meridian_terms(&b, deltas.len(), &deltas).unwrap();
        prop_assert_eq!(theta(&more, &x).unwrap(), theta(&b, &x).unwrap());
    }

    #[test]
    fn theta_ignores_circle_order(gi in 0usize..5, circles in prop::collection::vec((raw_word(6), raw_module()), 0..5)
                                  .prop_flat_map(|v| (Just(v.clone()), Just(v).prop_shuffle()))) {
        let x = manifold(gi, 0);
        let (a, b) = (descriptor(&x, &circles.0), descriptor(&x, &circles.1));
        prop_assert_eq!(theta(&a, &x).unwrap(), theta(&b, &x).unwrap());
    }

    #[test]
    fn theta_matches_cerf_data(gi in 0usize..5, circles in prop::collection::vec((raw_word(6), raw_module()), 0..5)) {
        let x = manifold(gi, 0);
        let b = descriptor(&x, &circles);
        prop_assert_eq!(theta_cerf(&b.to_cerf(&x).unwrap(), &x).unwrap(), theta(&b, &x).unwrap());
    }

    #[test]
    fn companion_pairs_with_theta(gi in 0usize..5, bits: u8, circles in prop::collection::vec((raw_word(6), raw_module()), 0..5)) {
        let x = manifold(gi, bits);
        let b = descriptor(&x, &circles);
        let g = theta_g(&b, &x).unwrap();
        let lhs = nf(&involute(&g.to_element(), &x).unwrap(), &x);
        let rhs = nf(&wh_neg(&theta(&b, &x).unwrap().to_element()), &x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn independent_classes_stay_independent(coeffs in prop::collection::vec(-5i64..=5, 20)) {
        let x = fab1();
        let alphas = non_conjugate_words(&x);
        let mut sum = WhElement::zero();
        for (n, alpha) in coeffs.iter().zip(&alphas) {
            let b = realize(&ModuleElement::basis(0, Word::identity()), alpha, &x).unwrap();
            sum = wh_add(&sum, &wh_scale(*n, &theta(&b, &x).unwrap().to_element()));
        }
        prop_assert_eq!(nf(&sum, &x).is_zero(), coeffs.iter().all(|&c| c == 0));
    }

    #[test]
    fn walks_preserve_normal_form(gi in 0usize..5, bits: u8, r in raw_wh(), steps in 0usize..40, seed: u64) {
        let x = manifold(gi, bits);
        let el = wh(&x, &r);
        prop_assert_eq!(nf(&random_relation_walk(&el, &x, steps, seed), &x), nf(&el, &x));
    }

    #[test]
    fn printed_values_parse_back(gi in 0usize..5, bits: u8, r in raw_wh(), a in raw_word(8), s in raw_module()) {
        let x = manifold(gi, bits);
        let g = x.group();
        let w = word(g, &a);
        prop_assert_eq!(parse_word(&g.show(&w).to_string(), &x).unwrap(), w);
        let sigma = module(&x, &s);
        prop_assert_eq!(parse_module_elem(&sigma.show(g).to_string(), &x).unwrap(), sigma);
        let n = nf(&wh(&x, &r), &x);
        let text = n.show(g).to_string();
        let back = parse_wh(&text, &x).unwrap();
        prop_assert_eq!(nf(&back, &x).show(g).to_string(), text);
        prop_assert_eq!(parse_manifold(&format_manifold(&x)).unwrap(), x);
    }
}

fn descriptor(x: &ManifoldData, circles: &[(Raw, RawModule)]) -> BarbellDescriptor {
    BarbellDescriptor::new(
        circles
            .iter()
            .map(|(d, m)| Circle::new(word(x.group(), d), module(x, m)))
            .collect(),
    )
}

/// `a^i b^j` for distinct exponent pairs: cyclically reduced, pairwise
/// non-conjugate.
fn non_conjugate_words(x: &ManifoldData) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 1..=4 {
        for j in [-2, -1, 1, 2, 3] {
            out.push(x.group().word_normalize(&[(0, i), (1, j)]).unwrap());
        }
    }
    out
}

#[test]
fn sample_words_are_pairwise_non_conjugate() {
    let x = fab1();
    let ws = non_conjugate_words(&x);
    assert_eq!(ws.len(), 20);
    for (i, u) in ws.iter().enumerate() {
        for v in &ws[i + 1..] {
            assert!(!x.group().are_conjugate(u, v));
        }
    }
}
