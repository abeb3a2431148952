mod common;

use ccc_core::lambda::{arrows_equal, nf, normal_form, simplify, to_lambda};
use ccc_core::model::{interpret_finite, FiniteModel};
use ccc_core::poly::{instantiate, poly_equal};
use ccc_core::rewrite::{oracle_equal, random_walk, Verdict};
use ccc_core::surface::{parse_arrow, print_arrow, TermClass};
use ccc_core::{type_of, Arrow, Error};
use common::{default_sig, generator, sig_with_point};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(128)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn generated_terms_are_well_typed(seed: u64, depth in 0usize..=4) {
        let s = default_sig();
        let (f, ty) = generator(&s, seed, true).any_arrow(depth);
        prop_assert_eq!(type_of(&f, &s).unwrap(), ty);
    }

    #[test]
    fn normal_forms_are_stable(seed: u64, depth in 0usize..=4) {
        let s = default_sig();
        let (f, _) = generator(&s, seed, true).any_arrow(depth);
        let once = normal_form(&f, &s).unwrap();
        prop_assert_eq!(nf(&once).unwrap(), once.clone());
        // Reading back to an arrow loses nothing.
        let back = simplify(&f, &s).unwrap();
        prop_assert_eq!(normal_form(&back, &s).unwrap(), once);
    }

    #[test]
    fn normal_form_preserves_lambda_type(seed: u64) {
        let s = default_sig();
        let (f, _) = generator(&s, seed, true).any_arrow(3);
        let lam = to_lambda(&f, &s).unwrap();
        let n = nf(&lam).unwrap();
        let t1 = ccc_core::lambda::infer(&lam, &mut Vec::new()).unwrap();
        let t2 = ccc_core::lambda::infer(&n, &mut Vec::new()).unwrap();
        prop_assert_eq!(t1, t2);
    }

    #[test]
    fn equal_arrows_agree_in_finite_models(seed: u64, steps in 1usize..=6) {
        let s = default_sig();
        let mut g = generator(&s, seed, true);
        let (f, _) = g.any_arrow(3);
        let h = random_walk(&f, &s, steps, 2 * f.size() + 8, g.rng());
        prop_assert!(arrows_equal(&f, &h, &s).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xA5A5);
        for _ in 0..5 {
            let m = FiniteModel::random(&s, 3, &mut rng).unwrap();
            match (interpret_finite(&f, &s, &m), interpret_finite(&h, &s, &m)) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(Error::ModelTooLarge(_)), _) | (_, Err(Error::ModelTooLarge(_))) => {}
                (a, b) => panic!("interpretation failed: {a:?} {b:?}"),
            }
        }
    }

    #[test]
    fn oracle_proofs_are_sound(seed: u64) {
        let s = default_sig();
        let mut g = generator(&s, seed, true);
        let (f, ty) = g.any_arrow(2);
        let other = g.arrow(&ty.source, &ty.target, 2).unwrap_or_else(|| f.clone());
        if oracle_equal(&f, &other, &s, 3).unwrap() == Verdict::Proved {
            prop_assert!(arrows_equal(&f, &other, &s).unwrap());
        }
    }

    #[test]
    fn equality_is_a_congruence(seed: u64) {
        let s = default_sig();
        let mut g = generator(&s, seed, true);
        let (f, ty) = g.any_arrow(3);
        let f2 = random_walk(&f, &s, 3, 2 * f.size() + 8, g.rng());
        let (k, _) = g.arrow_from(&ty.target, 2);
        let (u, _) = g.arrow_into(&ty.source, 2);
        let (p, _) = g.arrow_from(&ty.source, 2);
        prop_assert!(arrows_equal(&Arrow::comp(k.clone(), f.clone()), &Arrow::comp(k, f2.clone()), &s).unwrap());
        prop_assert!(arrows_equal(&Arrow::comp(f.clone(), u.clone()), &Arrow::comp(f2.clone(), u), &s).unwrap());
        prop_assert!(arrows_equal(&Arrow::pair(f.clone(), p.clone()), &Arrow::pair(f2.clone(), p), &s).unwrap());
        if let Some((a, c)) = ty.source.as_prod() {
            prop_assert!(arrows_equal(
                &Arrow::curry(a.clone(), c.clone(), f),
                &Arrow::curry(a.clone(), c.clone(), f2),
                &s,
            ).unwrap());
        }
    }

    #[test]
    fn print_then_parse_is_identity(seed: u64, depth in 0usize..=5) {
        let s = default_sig();
        let (f, ty) = generator(&s, seed, true).any_arrow(depth);
        let parsed = parse_arrow(&print_arrow(&f), &s).unwrap();
        prop_assert_eq!(&parsed.term, &f);
        prop_assert_eq!(parsed.ty, ty);
        let class = if f.mentions_indeterminate() { TermClass::Poly } else { TermClass::Plain };
        prop_assert_eq!(parsed.class, class);
    }

    #[test]
    fn instantiation_respects_equality(seed: u64) {
        let s = sig_with_point();
        let mut g = generator(&s, seed, true);
        let (f, _) = g.any_arrow(3);
        let f2 = random_walk(&f, &s, 4, 2 * f.size() + 8, g.rng());
        prop_assert!(poly_equal(&f, &f2, &s).unwrap());
        g.set_indeterminate(false);
        let depth = g.rng().gen_range(0..=2);
        let point = g
            .arrow(&ccc_core::Object::Terminal, &ccc_core::Object::atom("D"), depth)
            .unwrap();
        let a = instantiate(&f, &point, &s).unwrap();
        let b = instantiate(&f2, &point, &s).unwrap();
        prop_assert!(!a.mentions_indeterminate());
        prop_assert!(arrows_equal(&a, &b, &s).unwrap());
    }
}
