use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grigorchuk::words::{cyclic_normalize, inverse, reduce, reduced_words_up_to, Letter, Parity};
use grigorchuk::Word;

fn letter() -> impl Strategy<Value = Letter> {
    prop::sample::select(Letter::ALL.to_vec())
}

fn letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(), 0..max)
}

fn star_product(x: Letter, y: Letter) -> Option<Letter> {
    Letter::STARS.into_iter().find(|&t| t != x && t != y && x != y && !x.is_a() && !y.is_a())
}

/// Positions where a rewriting rule applies.
fn redexes(w: &[Letter]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i] == w[i + 1] || star_product(w[i], w[i + 1]).is_some())
        .collect()
}

/// Rewrites at random positions until no rule applies; returns the normal form and the step count.
fn rewrite_randomly(mut w: Vec<Letter>, rng: &mut ChaCha8Rng) -> (Vec<Letter>, usize) {
    let mut steps = 0;
    loop {
        let r = redexes(&w);
        if r.is_empty() {
            return (w, steps);
        }
        let i = r[rng.gen_range(0..r.len())];
        if w[i] == w[i + 1] {
            w.drain(i..i + 2);
        } else {
            let t = star_product(w[i], w[i + 1]).unwrap();
            w.splice(i..i + 2, [t]);
        }
        steps += 1;
    }
}

#[test]
fn random_rewriting_reaches_the_same_normal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut steps = 0;
    while steps < 100_000 {
        let len = rng.gen_range(0..80);
        let w: Vec<Letter> = (0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect();
        let (normal, n) = rewrite_randomly(w.clone(), &mut rng);
        assert_eq!(normal, reduce(w.iter().copied()).letters());
        steps += n;
    }
}

#[test]
fn reduced_words_are_irreducible() {
    for w in reduced_words_up_to(8) {
        assert!(redexes(w.letters()).is_empty(), "{w}");
        assert_eq!(reduce(w.letters().iter().copied()), w);
    }
}

proptest! {
    #[test]
    fn reduction_is_idempotent(ls in letters(60)) {
        let w = reduce(ls);
        prop_assert_eq!(reduce(w.letters().iter().copied()), w);
    }

    #[test]
    fn product_with_inverse_is_identity(ls in letters(60)) {
        let w = reduce(ls);
        prop_assert!(w.mul(&inverse(&w)).is_empty());
        prop_assert_eq!(inverse(&inverse(&w)), w);
    }

    #[test]
    fn multiplication_is_associative(x in letters(20), y in letters(20), z in letters(20)) {
        let (x, y, z) = (reduce(x), reduce(y), reduce(z));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn parity_is_multiplicative(x in letters(40), y in letters(40)) {
        let (x, y) = (reduce(x), reduce(y));
        let expected = if x.a_parity() == y.a_parity() { Parity::Even } else { Parity::Odd };
        prop_assert_eq!(x.mul(&y).a_parity(), expected);
    }

    #[test]
    fn text_round_trip(ls in letters(40)) {
        let w = reduce(ls);
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn cyclic_normalization(ls in letters(60)) {
        let w = reduce(ls);
        prop_assume!(!w.is_empty() && w.a_parity() == Parity::Even);
        let (normal, g) = cyclic_normalize(&w).unwrap();
        prop_assert_eq!(&w.conjugate_by(&g), &normal);
        prop_assert!(normal.len() <= w.len());
        let starts_a = normal.first() == Some(Letter::A);
        let ends_a = normal.last() == Some(Letter::A);
        prop_assert!(normal.len() == 1 || (starts_a && !ends_a), "{} -> {}", w, normal);
    }
}
