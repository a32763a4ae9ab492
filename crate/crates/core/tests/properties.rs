use germwork_core::algebra::{convolution, f_iso, groupoid_span_check, AlgebraElement, Basis, Ring};
use germwork_core::category::{FiniteCategory, MAX_SLICES};
use germwork_core::constellation::{p_of, t_of};
use germwork_core::germs::{iota_embedding, universal_category};
use germwork_core::lattice::{set_of, FinSemilattice};
use germwork_core::pmap::{generate_in_pt, Closure, PartialMap};
use germwork_core::proper::{decompose_proper, petrich_reilly};
use germwork_core::{Axioms, UnarySemigroup};
use proptest::prelude::*;

fn partial_map(n: usize) -> impl Strategy<Value = PartialMap> {
    proptest::collection::vec(proptest::option::of(0..n), n).prop_map(move |m| PartialMap::new(n, m).unwrap())
}

fn injective_map(n: usize) -> impl Strategy<Value = PartialMap> {
    partial_map(n).prop_filter("injective", PartialMap::is_injective)
}

/// The restriction subsemigroup of `PT(3)` generated by up to three maps.
fn restriction_in_pt3() -> impl Strategy<Value = UnarySemigroup> {
    proptest::collection::vec(partial_map(3), 1..=3).prop_map(|gens| generate_in_pt(3, &gens, Closure::STAR).unwrap().0)
}

/// The inverse subsemigroup of `I(3)` generated by up to two partial bijections.
fn inverse_in_i3() -> impl Strategy<Value = UnarySemigroup> {
    proptest::collection::vec(injective_map(3), 1..=2).prop_map(|gens| {
        let mut all = gens.clone();
        for g in &gens {
            let mut inv = vec![None; 3];
            for x in g.domain() {
                inv[g.apply(x).unwrap()] = Some(x);
            }
            all.push(PartialMap::new(3, inv).unwrap());
        }
        generate_in_pt(3, &all, Closure::STAR).unwrap().0
    })
}

/// Meet-closed families of subsets of a 4-point set, as semilattices.
fn semilattice() -> impl Strategy<Value = FinSemilattice> {
    proptest::collection::vec(0u8..16, 1..=5).prop_map(|sets| {
        let mut family: Vec<u8> = sets;
        family.sort_unstable();
        family.dedup();
        loop {
            let mut grown = family.clone();
            for &a in &family {
                for &b in &family {
                    grown.push(a & b);
                }
            }
            grown.sort_unstable();
            grown.dedup();
            if grown.len() == family.len() {
                break;
            }
            family = grown;
        }
        let pos = |x: u8| family.iter().position(|&y| y == x).unwrap();
        let meet = family
            .iter()
            .map(|&a| family.iter().map(|&b| pos(a & b)).collect())
            .collect();
        FinSemilattice::from_meet_table(meet).unwrap()
    })
}

fn algebra_element(ring: Ring, n: usize) -> impl Strategy<Value = AlgebraElement> {
    proptest::collection::vec((0..n, -3i64..=3), 0..5).prop_map(move |terms| {
        AlgebraElement::from_terms(
            ring,
            Basis::Arrows(n),
            terms.into_iter().map(|(i, c)| (i, ring.from_i64(c))),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn generated_subsemigroups_are_restriction(s in restriction_in_pt3()) {
        prop_assert!(s.check_axioms(Axioms::Restriction).unwrap().is_pass());
        let order = s.natural_order().unwrap();
        prop_assert!(order.is_partial_order());
    }

    #[test]
    fn constellation_round_trip(s in restriction_in_pt3()) {
        let q = p_of(&s).unwrap();
        let t = t_of(&q).unwrap();
        prop_assert_eq!(t.mul_rows(), s.mul_rows());
        prop_assert_eq!(t.star_table(), s.star_table());
        prop_assert!(p_of(&t).unwrap().same_tables(&q));
    }

    #[test]
    fn universal_category_embeds(s in restriction_in_pt3()) {
        prop_assume!(s.has_local_units());
        let u = universal_category(&s).unwrap();
        prop_assert_eq!(u.category().arrow_count(), s.size());
        let emb = iota_embedding(&u).unwrap();
        prop_assert!(emb.injective && emb.morphism.is_pass());
    }

    #[test]
    fn algebra_isomorphism_over_z2(s in restriction_in_pt3()) {
        prop_assume!(s.has_local_units());
        let f = f_iso(&s, Ring::Zp(2)).unwrap();
        prop_assert!(f.is_pass());
    }

    #[test]
    fn inverse_subsemigroups_decompose_when_e_unitary(s in inverse_in_i3()) {
        prop_assert!(s.inverse_table().is_some());
        match decompose_proper(&s) {
            Ok(d) => {
                prop_assert!(d.product.clauses.is_pass());
                prop_assert!(petrich_reilly(&s).is_ok());
            }
            Err(_) => prop_assert!(!s.is_proper().unwrap()),
        }
    }

    #[test]
    fn semilattice_filters_and_ideals(e in semilattice()) {
        let filters = e.filters_exhaustive().unwrap();
        prop_assert_eq!(filters.len(), e.size());
        prop_assert!(filters.iter().all(|f| e.filter_generator(f).is_some()));
        for ideal in e.all_order_ideals().unwrap() {
            let u = e.order_ideal_psi_inv(&ideal).unwrap();
            prop_assert_eq!(e.order_ideal_psi(&u).unwrap().members, ideal.members);
        }
        if e.size() <= 6 {
            prop_assert_eq!(e.booleanization().unwrap().family.len(), 1 << e.size());
        }
    }

    #[test]
    fn convolution_is_associative_and_bilinear(
        f in algebra_element(Ring::Q, 9),
        g in algebra_element(Ring::Q, 9),
        h in algebra_element(Ring::Q, 9),
    ) {
        let c = FiniteCategory::pair_groupoid(3);
        let left = convolution(&c, &convolution(&c, &f, &g).unwrap(), &h).unwrap();
        let right = convolution(&c, &f, &convolution(&c, &g, &h).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let sum = convolution(&c, &f.add(&g).unwrap(), &h).unwrap();
        let parts = convolution(&c, &f, &h).unwrap().add(&convolution(&c, &g, &h).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn zero_coefficients_are_never_stored(f in algebra_element(Ring::Zp(3), 6)) {
        let z = f.sub(&f).unwrap();
        prop_assert!(z.is_zero());
        prop_assert!(f.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn slices_of_categories_form_boolean_semigroups(n in 1usize..=3) {
        let c = FiniteCategory::pair_groupoid(n);
        let s = c.slice_semigroup(MAX_SLICES).unwrap();
        s.verify_boolean().unwrap();
        prop_assert_eq!(s.slices.len(), (n + 1).pow(n as u32));
    }
}

#[test]
fn pair_groupoid_counts_match_formulae() {
    // Slices choose at most one arrow out of each object: (n + 1)^n.
    // Bislices are partial bijections: sum over k of C(n, k)^2 k!.
    let binom = |n: usize, k: usize| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
    let fact = |k: usize| (1..=k).product::<usize>();
    for n in 1..=4 {
        let c = FiniteCategory::pair_groupoid(n);
        let slices = c.enumerate_slices(MAX_SLICES).unwrap().len();
        let bislices = c.enumerate_bislices(MAX_SLICES).unwrap().len();
        assert_eq!(slices, (n + 1).pow(n as u32));
        assert_eq!(bislices, (0..=n).map(|k| binom(n, k).pow(2) * fact(k)).sum::<usize>());
    }
}

#[test]
fn spans_agree_on_pair_groupoids() {
    for n in 1..=3 {
        let sc = groupoid_span_check(&FiniteCategory::pair_groupoid(n), MAX_SLICES).unwrap();
        assert!(sc.spans_equal(), "n = {n}");
        assert_eq!(sc.slice_rank, n * n);
    }
}

#[test]
fn semilattice_of_four_subsets() {
    let e = FinSemilattice::from_meet_table(vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap();
    assert_eq!(e.d(1), set_of(3, [0, 1]));
}
