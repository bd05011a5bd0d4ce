use proptest::prelude::*;

use slicecheck::auxiliary::{yasuhara_realize, RealizeTarget};
use slicecheck::genus::ruberman_genus;
use slicecheck::homology::{HomologyClass, IntersectionForm};
use slicecheck::knot::{torus2_signature, RootOfUnity};
use slicecheck::obstructions::{my_trichotomy, Trichotomy};

fn pairings(m: [[i64; 3]; 2], form: &IntersectionForm) -> (i64, i64, i64) {
    let col = |i: usize| HomologyClass::pair(m[0][i], m[1][i]);
    (
        form.pairing(&col(0), &col(1)).unwrap(),
        form.pairing(&col(0), &col(2)).unwrap(),
        form.pairing(&col(1), &col(2)).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn realize_s2xs2(a in -60i64..60, b in -60i64..60, c in -60i64..60) {
        prop_assume!(a != 0 || b != 0);
        let m = yasuhara_realize(a, b, c, RealizeTarget::S2xS2).unwrap();
        prop_assert_eq!(pairings(m, &IntersectionForm::hyperbolic()), (a, b, c));
    }

    #[test]
    fn realize_cp2bcp2(a in -60i64..60, b in -60i64..60, c in -60i64..60) {
        let m = yasuhara_realize(a, b, c, RealizeTarget::Cp2bCp2).unwrap();
        prop_assert_eq!(pairings(m, &IntersectionForm::cp2_bcp2()), (a, b, c));
    }
}

proptest! {
    #[test]
    fn genus_symmetries(a in -30i64..=30, b in -30i64..=30) {
        let g = ruberman_genus(&HomologyClass::pair(a, b));
        prop_assert_eq!(g, ruberman_genus(&HomologyClass::pair(-a, b)));
        prop_assert_eq!(g, ruberman_genus(&HomologyClass::pair(a, -b)));
        prop_assert_eq!(g, ruberman_genus(&HomologyClass::pair(b, a)));
        if a.abs() == b.abs() {
            prop_assert_eq!(g, 0);
        }
    }

    #[test]
    fn torus_mirror_and_conjugation(k in 1i64..10, m in 2i64..40, r in 1i64..40) {
        prop_assume!(r < m);
        let q = 2 * k + 1;
        let w = RootOfUnity::new(r, m).unwrap();
        let s = torus2_signature(q, w).unwrap();
        prop_assert_eq!(torus2_signature(-q, w).unwrap(), -s);
        prop_assert_eq!(torus2_signature(q, w.conj()).unwrap(), s);
        prop_assert!(s.abs() <= q - 1);
    }

    #[test]
    fn trichotomy_total(a in 0u8..2, b in 0u8..2, c in 0u8..2, d in 0u8..2) {
        let t = my_trichotomy((a, b), (c, d));
        prop_assert_eq!(t == Trichotomy::ViolatesHypothesis, (a * d + b * c) % 2 == 1);
    }
}
