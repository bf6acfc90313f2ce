use num_rational::BigRational;
use proptest::prelude::*;

use grigorchuk::norm::{norm, norm_approx, norm_of_letters, splitting_bound_failures, weight};
use grigorchuk::words::{reduce, Letter};
use grigorchuk::Norm;

fn letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..max)
}

fn small() -> impl Strategy<Value = Norm> {
    (-20i64..20, -20i64..20, -20i64..20).prop_map(|(a, b, c)| Norm::from_ints(a, b, c))
}

proptest! {
    #[test]
    fn field_operations_match_floats(x in small(), y in small()) {
        let (fx, fy) = (x.to_f64(), y.to_f64());
        prop_assert!(((x.clone() + y.clone()).to_f64() - (fx + fy)).abs() < 1e-9);
        prop_assert!(((x.clone() * y.clone()).to_f64() - fx * fy).abs() < 1e-8);
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x.partial_cmp(&y), fx.partial_cmp(&fy));
        }
    }

    #[test]
    fn ring_axioms(x in small(), y in small(), z in small()) {
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(x.clone() - x.clone(), Norm::zero());
    }

    #[test]
    fn norm_is_additive(x in letters(40), y in letters(40)) {
        let mut xy = x.clone();
        xy.extend(&y);
        prop_assert_eq!(
            norm_of_letters::<BigRational>(&xy),
            norm_of_letters::<BigRational>(&x) + norm_of_letters(&y)
        );
    }

    #[test]
    fn reduction_does_not_increase_norm(x in letters(60)) {
        let reduced = reduce(x.iter().copied());
        prop_assert!(norm::<BigRational>(&reduced) <= norm_of_letters(&x));
    }

    #[test]
    fn norm_is_between_length_multiples(x in letters(60)) {
        let n = norm_of_letters::<BigRational>(&x);
        let len = BigRational::from_integer((x.len() as i64).into());
        let lightest = weight::<BigRational>(Letter::D).scale(&len);
        let heaviest = weight::<BigRational>(Letter::B).scale(&len);
        prop_assert!(lightest <= n && n <= heaviest);
            }

    #[test]
    fn float_norm_tracks_exact_norm(x in letters(200)) {
        let w = reduce(x);
        let exact = norm::<BigRational>(&w).to_f64();
        prop_assert!((exact - norm_approx::<f64>(&w)).abs() < 1e-9 * (1.0 + exact));
    }

    #[test]
    fn splitting_bounds(x in letters(300)) {
        let w = reduce(x);
        prop_assert!(splitting_bound_failures(&w).is_empty(), "{}", w);
    }
}
