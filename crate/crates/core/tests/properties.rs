mod common;

use proptest::prelude::*;
use tgrs::analysis::{
    k_minor_det, min_distance_oracle, self_dual_matrix, self_dual_structural,
    subset_sum_witness_with, subset_sum_witnesses, OracleBudget, SubsetSearch,
};
use tgrs::constructions::{construct_t36, BuildOptions, T36Params};
use tgrs::{CaseTag, Field, Matrix, Poly, TgrsCode};

use common::*;

fn field(choice: usize) -> Field {
    let (p, s) = [(13, 1), (3, 2), (7, 2), (5, 3), (65537, 1), (3, 7)][choice % 6];
    Field::new(p, s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(choice in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(choice);
        let q = f.order();
        let (a, b, c) = (f.from_index(a % q), f.from_index(b % q), f.from_index(c % q));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.pow(q as u128), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn sqrt_is_canonical(choice in 0usize..6, a in any::<u64>()) {
        let f = field(choice);
        let a = f.from_index(a % f.order());
        match a.sqrt() {
            Some(r) => {
                prop_assert_eq!(r.square(), a.clone());
                prop_assert!(r <= -r.clone());
                prop_assert!(a.is_square());
            }
            None => prop_assert!(!a.is_square()),
        }
    }

    #[test]
    fn divmod_reconstructs(seed in any::<u64>(), df in 0usize..12, dg in 0usize..6) {
        let mut rng = rng(seed);
        let f = Field::new(7, 2).unwrap();
        let num = Poly::new(&f, (0..=df).map(|_| random_nonzero(&mut rng, &f)).collect()).unwrap();
        let den = Poly::new(&f, (0..=dg).map(|_| random_nonzero(&mut rng, &f)).collect()).unwrap();
        let (quo, rem) = num.divmod(&den).unwrap();
        prop_assert_eq!(&(&quo * &den) + &rem, num);
        prop_assert!(rem.degree().is_none_or(|d| d < dg));
    }

    #[test]
    fn split_roots_match_scan(seed in any::<u64>(), planted in 1usize..6) {
        // F_65537 is above the exhaustive-scan limit, so roots_in splits.
        let mut rng = rng(seed);
        let f = Field::prime(65537).unwrap();
        let roots = distinct_points(&mut rng, &f, planted);
        let noise = Poly::new(&f, (0..4).map(|_| random_nonzero(&mut rng, &f)).collect()).unwrap();
        let poly = &Poly::from_roots(&f, &roots) * &noise;
        let found = poly.roots_in(&f).unwrap();
        let scanned: Vec<_> = (0..f.order())
            .map(|i| f.from_index(i))
            .filter(|x| poly.eval(x).unwrap().is_zero())
            .collect();
        prop_assert_eq!(found, scanned);
    }

    #[test]
    fn twisted_minor_identity(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let q = [13u64, 17, 25, 27, 31][seed as usize % 5];
        let f = field_of_order(q);
        let k = 1 + seed as usize % 5;
        let pts = distinct_points(&mut rng, &f, k);
        let eta = random_nonzero(&mut rng, &f);
        let rows: Vec<Vec<_>> = (0..k)
            .map(|i| {
                pts.iter()
                    .map(|x| if i + 1 < k { x.pow(i as u128) } else { x.pow(i as u128) + &eta * &x.pow(k as u128) })
                    .collect()
            })
            .collect();
        let det = Matrix::from_rows(&f, rows).unwrap().determinant().unwrap();
        let mut expected = f.one() + &eta * &sum(&pts);
        for t in 0..k {
            for s in 0..t {
                expected = expected * (&pts[t] - &pts[s]);
            }
        }
        prop_assert_eq!(&det, &expected);
        prop_assert_eq!(k_minor_det(&pts, &eta).unwrap(), expected);
    }

    #[test]
    fn lagrange_weights_match_derivative(seed in any::<u64>(), n in 2usize..12) {
        let mut rng = rng(seed);
        let f = Field::new(5, 2).unwrap();
        let alpha = distinct_points(&mut rng, &f, n);
        prop_assert_eq!(tgrs::lagrange_weights(&alpha).unwrap(), weights_by_derivative(&alpha));
    }

    #[test]
    fn search_strategies_agree(seed in any::<u64>(), n in 4usize..23) {
        let mut rng = rng(seed);
        let f = Field::prime(31).unwrap();
        let alpha: Vec<_> = (0..n).map(|_| f.from_index(rand::Rng::gen_range(&mut rng, 0..31))).collect();
        let k = 1 + seed as usize % (n - 1);
        let target = random_nonzero(&mut rng, &f);
        let a = subset_sum_witness_with(&alpha, k, &target, SubsetSearch::Enumerate).unwrap();
        let b = subset_sum_witness_with(&alpha, k, &target, SubsetSearch::MeetInTheMiddle).unwrap();
        prop_assert_eq!(&a, &b);
        if n <= 16 {
            let all = subset_sum_witnesses(&alpha, k, &target).unwrap();
            prop_assert_eq!(a, all.first().cloned());
        }
    }

    #[test]
    fn self_duality_tests_agree(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = field_of_order([13u64, 17, 19, 23, 25, 29][seed as usize % 6]);
        let k = 3 + seed as usize % 3;
        let want = [CaseTag::Generic, CaseTag::ZeroSum, CaseTag::Singular][(seed / 7) as usize % 3];
        let (alpha, mut eta) = points_and_twist(&mut rng, &f, 2 * k, want);
        let a = sum(&alpha);
        // Half the generic draws get the self-dual twist -2/a.
        if want == CaseTag::Generic && seed % 2 == 0 && !(f.from_u64(2)).is_zero() {
            eta = -f.from_u64(2) * a.inv().unwrap();
        }
        let code = half_rate_with_square_weights(&f, &alpha, &eta);
        let structural = self_dual_structural(&code).unwrap().self_dual;
        prop_assert_eq!(structural, self_dual_matrix(&code));
        prop_assert_eq!(structural, gram_is_zero(&code));
        // Random multipliers almost never give a self-dual code; both tests
        // must still agree.
        let v = (0..2 * k).map(|_| random_nonzero(&mut rng, code.field())).collect();
        let noisy = TgrsCode::new(code.field(), code.alpha().to_vec(), v, k, code.eta().clone()).unwrap();
        prop_assert_eq!(self_dual_structural(&noisy).unwrap().self_dual, self_dual_matrix(&noisy));
    }

    #[test]
    fn oracle_matches_codeword_enumeration(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let want = [CaseTag::Generic, CaseTag::ZeroSum, CaseTag::Singular][seed as usize % 3];
        let code = random_code(&mut rng, 13, 7, want);
        prop_assume!(code.field().order().pow(code.k() as u32) <= 3000);
        let oracle = min_distance_oracle(&code, OracleBudget::default()).unwrap();
        prop_assert_eq!(oracle, min_weight_exhaustive(&code));
    }
}

#[test]
fn t36_builds_agree_structurally() {
    for (q, n) in [(29u64, 6usize), (31, 14), (37, 8), (43, 6), (53, 12)] {
        for j in [0, 1, 3] {
            let c = construct_t36(
                &T36Params {
                    q,
                    beta: "2".into(),
                    n,
                    j,
                },
                &BuildOptions::default(),
            )
            .unwrap();
            assert!(self_dual_structural(&c.code).unwrap().self_dual);
            assert!(self_dual_matrix(&c.code));
            assert!(gram_is_zero(&c.code));
        }
    }
}
