//! Weighted length.
//!
//! Weights: `γ_a = α² + α − 1`, `γ_b = 2`, `γ_c = α² − α + 1`, `γ_d = −α² + α + 1`.
//! They satisfy the triangle inequality on `{b, c, d}` and make the first
//! level splitting contract by a factor close to `α`.

use num_rational::BigRational;
use num_traits::Float;

use crate::algebraic::{AlgebraicValue, Scalar};
use crate::words::{Letter, LetterCounts, Parity, Word};

/// Exact weight of a single letter.
pub fn weight<T: Scalar>(l: Letter) -> AlgebraicValue<T> {
    match l {
        Letter::A => AlgebraicValue::from_ints(-1, 1, 1),
        Letter::B => AlgebraicValue::from_ints(2, 0, 0),
        Letter::C => AlgebraicValue::from_ints(1, -1, 1),
        Letter::D => AlgebraicValue::from_ints(1, 1, -1),
    }
}

fn from_counts<T: Scalar>(counts: LetterCounts) -> AlgebraicValue<T> {
    let n = |k: usize| i64::try_from(k).expect("letter count fits in i64");
    let (a, b, c, d) = (n(counts.a), n(counts.b), n(counts.c), n(counts.d));
    AlgebraicValue::from_ints(-a + 2 * b + c + d, a - c + d, a + c - d)
}

/// `‖w‖`, the exact weighted length of a reduced word.
pub fn norm<T: Scalar>(w: &Word) -> AlgebraicValue<T> {
    from_counts(w.counts())
}

/// Weighted length of an arbitrary (possibly unreduced) letter sequence.
pub fn norm_of_letters<T: Scalar>(letters: &[Letter]) -> AlgebraicValue<T> {
    from_counts(LetterCounts::of_letters(letters))
}

/// Floating point view of the weight, for display and benchmarks.
pub fn weight_approx<F: Float>(l: Letter) -> F {
    let alpha = crate::algebraic::alpha_approx::<F>();
    let one = F::one();
    match l {
        Letter::A => alpha * alpha + alpha - one,
        Letter::B => one + one,
        Letter::C => alpha * alpha - alpha + one,
        Letter::D => -alpha * alpha + alpha + one,
    }
}

pub fn norm_approx<F: Float>(w: &Word) -> F {
    w.letters()
        .iter()
        .fold(F::zero(), |acc, &l| acc + weight_approx::<F>(l))
}

/// Which splitting-norm bound applies to an even reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `*a*a…*a` or `a*a*…a*`: `α(‖w₀‖ + ‖w₁‖) ≤ ‖w‖`
    Mixed,
    /// `*a*…*`: `α(‖w₀‖ + ‖w₁‖) ≤ ‖w‖ + ‖a‖`
    StarEnds,
    /// `a*a…*a`: `α(‖w₀‖ + ‖w₁‖) ≤ ‖w‖ − ‖a‖`
    AEnds,
}

pub fn shape(w: &Word) -> Option<Shape> {
    match (w.first()?.is_a(), w.last()?.is_a()) {
        (true, true) => Some(Shape::AEnds),
        (false, false) => Some(Shape::StarEnds),
        _ => Some(Shape::Mixed),
    }
}

/// Names of the splitting-norm bounds that fail for `w`, checked exactly.
///
/// Even words are checked against their shape bound; every word against
/// `α(‖w₀‖ + ‖w₁‖) ≤ ‖w‖ + ‖a‖` (sections of `wa` for odd words) and the
/// contraction ratios 1.03 once `‖w‖ ≥ 9` and 1.22 once `‖w‖ ≥ 200`.
pub fn splitting_bound_failures(w: &Word) -> Vec<&'static str> {
    type N = AlgebraicValue<BigRational>;
    let int = |k: i64| BigRational::from_integer(k.into());
    let pair = crate::splitting::sections(w);
    let whole: N = norm(w);
    let parts: N = norm::<BigRational>(&pair.left) + norm(&pair.right);
    let lhs = N::alpha() * parts.clone();
    let a: N = weight(Letter::A);
    let mut failed = Vec::new();
    if w.a_parity() == Parity::Even {
        let bound = match shape(w) {
            None | Some(Shape::Mixed) => whole.clone(),
            Some(Shape::StarEnds) => whole.clone() + a.clone(),
            Some(Shape::AEnds) => whole.clone() - a.clone(),
        };
        if lhs > bound {
            failed.push("shape bound");
        }
    }
    if lhs > whole.clone() + a {
        failed.push("combined bound");
    }
    let scaled = |k: i64, x: &N| x.scale(&int(k));
    if whole >= N::from_ints(9, 0, 0) && scaled(100, &whole) < scaled(103, &parts) {
        failed.push("ratio 1.03");
    }
    if whole >= N::from_ints(200, 0, 0) && scaled(100, &whole) < scaled(122, &parts) {
        failed.push("ratio 1.22");
    }
    failed
}
