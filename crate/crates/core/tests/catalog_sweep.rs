use germwork_core::algebra::{f_iso, Ring};
use germwork_core::catalog::{catalog, SEMIGROUP_SWEEP};
use germwork_core::constellation::{p_of, t_of};
use germwork_core::germs::{iota_embedding, universal_category};
use germwork_core::proper::{decompose_proper, f_restriction_criterion, petrich_reilly};
use germwork_core::Error;

fn sweep() -> Vec<(&'static str, germwork_core::UnarySemigroup)> {
    SEMIGROUP_SWEEP
        .iter()
        .map(|&n| (n, catalog(n).unwrap().semigroup().unwrap()))
        .collect()
}

#[test]
fn universal_category_has_one_arrow_per_element() {
    for (name, s) in sweep() {
        let u = universal_category(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(u.category().arrow_count(), s.size(), "{name}");
        let emb = iota_embedding(&u).unwrap();
        assert!(emb.injective && emb.morphism.is_pass(), "{name}");
    }
}

#[test]
fn esn_round_trip() {
    for (name, s) in sweep() {
        let s = s.drop_plus();
        let q = p_of(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        let t = t_of(&q).unwrap();
        assert_eq!(t.mul_rows(), s.mul_rows(), "{name}");
        assert_eq!(t.star_table(), s.star_table(), "{name}");
        assert!(p_of(&t).unwrap().same_tables(&q), "{name}");
    }
}

#[test]
fn proper_entries_decompose() {
    for (name, s) in sweep() {
        match decompose_proper(&s) {
            Ok(d) => {
                assert!(d.product.clauses.is_pass(), "{name}");
                f_restriction_criterion(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
            }
            Err(Error::NotProper(..)) => assert!(!s.is_proper().unwrap(), "{name}"),
            Err(e) => panic!("{name}: {e}"),
        }
    }
}

#[test]
fn e_unitary_entries_satisfy_petrich_reilly() {
    for (name, s) in sweep() {
        if s.inverse_table().is_none() || !s.is_proper().unwrap() {
            continue;
        }
        petrich_reilly(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn algebra_isomorphism_over_three_rings() {
    for (name, s) in sweep() {
        for ring in [Ring::Q, Ring::Z, Ring::Zp(2)] {
            let f = f_iso(&s, ring).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(f.is_pass(), "{name} {ring}");
        }
    }
}
