use deformed_hurwitz::hurwitz::{is_palindromic, lambda_structure, Family};
use deformed_hurwitz::symgroup::Permutation;
use deformed_hurwitz::weingarten::{orthogonality_residual, sw_character, sw_orthogonality_table};
use num_traits::Zero;
use proptest::prelude::*;

fn arb_perm(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..k).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_parts() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..5, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn order_of_parts_is_irrelevant(parts in arb_parts(), g in 0u32..2, rot in 0usize..3) {
        let mut other = parts.clone();
        let len = other.len();
        other.rotate_left(rot % len);
        other.reverse();
        for f in [Family::Monotone, Family::Dessin] {
            prop_assert_eq!(f.value(g, &parts), f.value(g, &other));
        }
    }

    #[test]
    fn dessin_palindromic(parts in arb_parts(), g in 0u32..2) {
        let d = parts.iter().sum::<usize>() as i64 + 1 - 2 * g as i64 - parts.len() as i64;
        let p = Family::Dessin.value(g, &parts);
        if d < 1 {
            prop_assert!(p.is_zero());
        } else {
            // symmetric under t^b -> t^(V-b), V the vertex count
            prop_assert_eq!(p.degree(), Some(d as usize));
            prop_assert!(is_palindromic(&p, d as usize + 1));
        }
    }

    #[test]
    fn monotone_lambda_structure(parts in arb_parts(), g in 0u32..2) {
        let d = parts.iter().sum::<usize>();
        prop_assume!(d >= 2);
        let p = Family::Monotone.value(g, &parts);
        prop_assert!(lambda_structure(&p, d).all(), "{:?}", p);
    }

    #[test]
    fn weingarten_conjugation(s in arb_perm(4), c in arb_perm(4)) {
        let conj = c.compose(&s).compose(&c.inverse());
        prop_assert_eq!(sw_character(&s).unwrap(), sw_character(&conj).unwrap());
        let w = |p: &Permutation| sw_character(p).unwrap();
        prop_assert!(orthogonality_residual(&s, &w).is_zero());
    }
}

#[test]
fn weingarten_methods_agree() {
    for k in 0..=5 {
        let t = sw_orthogonality_table(k).unwrap();
        for cls in t.classes() {
            let p = cls.class_rep();
            assert_eq!(t.get(&p), &sw_character(&p).unwrap(), "k={k} {cls:?}");
        }
    }
}
