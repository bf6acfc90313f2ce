//! Exact arithmetic in the cubic field `ℚ(α)`, `α` the real root of `2x³ − x² − x − 1`.
//!
//! Values are stored as `c0 + c1·α + c2·α²` over any exact scalar `T`
//! (`BigRational` by default). Ordering is decided by refining an isolating
//! interval for `α`; equality is coefficient-wise, which is sound because the
//! minimal polynomial is irreducible of degree 3 (see
//! [`minimal_polynomial_is_irreducible`]).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// Exact coefficient type.
pub trait Scalar:
    Clone + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Clone + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display
{
}

/// Numerators/denominator of the initial isolating interval `[1.233751, 1.233752]`.
const ALPHA_LO: i64 = 1_233_751;
const ALPHA_HI: i64 = 1_233_752;
const ALPHA_DEN: i64 = 1_000_000;

/// Hard stop for bisection; a nonzero value would need to be below `2⁻²⁰⁰` to get here.
const MAX_BISECTIONS: usize = 200;

fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("scalar type represents small integers")
}

/// `2t³ − t² − t − 1`.
fn minimal_polynomial<T: Scalar>(t: &T) -> T {
    let t2 = t.clone() * t.clone();
    let t3 = t2.clone() * t.clone();
    int::<T>(2) * t3 - t2 - t.clone() - T::one()
}

/// Rational root test for `2x³ − x² − x − 1`: a cubic with no rational root is irreducible over ℚ.
pub fn minimal_polynomial_is_irreducible() -> bool {
    use num_rational::Rational64;
    // candidates ±p/q with p | 1 and q | 2
    let candidates = [
        Rational64::new(1, 1),
        Rational64::new(-1, 1),
        Rational64::new(1, 2),
        Rational64::new(-1, 2),
    ];
    candidates
        .iter()
        .all(|r| !minimal_polynomial(r).is_zero())
}

/// Floating point approximation of `α` (Newton iteration from 1.2337).
pub fn alpha_approx<F: Float>() -> F {
    let two = F::one() + F::one();
    let three = two + F::one();
    let mut x = F::from(1.2337).expect("float");
    for _ in 0..8 {
        let f = two * x * x * x - x * x - x - F::one();
        let df = three * two * x * x - two * x - F::one();
        x = x - f / df;
    }
    x
}

/// An element `c0 + c1·α + c2·α²` of `ℚ(α)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicValue<T> {
    coeffs: [T; 3],
}

impl<T: Scalar> AlgebraicValue<T> {
    pub fn new(c0: T, c1: T, c2: T) -> Self {
        AlgebraicValue { coeffs: [c0, c1, c2] }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        Self::new(int(c0), int(c1), int(c2))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }

    pub fn from_scalar(c: T) -> Self {
        Self::new(c, T::zero(), T::zero())
    }

    /// The generator `α`.
    pub fn alpha() -> Self {
        Self::from_ints(0, 1, 0)
    }

    pub fn coefficients(&self) -> &[T; 3] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: &T) -> Self {
        let [c0, c1, c2] = &self.coeffs;
        Self::new(c0.clone() * k.clone(), c1.clone() * k.clone(), c2.clone() * k.clone())
    }

    /// Sign of the real number this value denotes.
    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let den = int::<T>(ALPHA_DEN);
        let mut lo = int::<T>(ALPHA_LO) / den.clone();
        let mut hi = int::<T>(ALPHA_HI) / den;
        let two = int::<T>(2);
        for _ in 0..MAX_BISECTIONS {
            let (low, high) = self.enclose(&lo, &hi);
            if low > T::zero() {
                return Ordering::Greater;
            }
            if high < T::zero() {
                return Ordering::Less;
            }
            let mid = (lo.clone() + hi.clone()) / two.clone();
            // the minimal polynomial is increasing through α
            if minimal_polynomial(&mid) > T::zero() {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        panic!("sign of {self} not resolved after {MAX_BISECTIONS} bisections");
    }

    /// Interval enclosure of `c0 + c1·t + c2·t²` for `t ∈ [lo, hi]`, `0 < lo`.
    fn enclose(&self, lo: &T, hi: &T) -> (T, T) {
        let [c0, c1, c2] = &self.coeffs;
        let span = |k: &T, x: T, y: T| {
            let (p, q) = (k.clone() * x, k.clone() * y);
            if p <= q {
                (p, q)
            } else {
                (q, p)
            }
        };
        let (l1, h1) = span(c1, lo.clone(), hi.clone());
        let (l2, h2) = span(c2, lo.clone() * lo.clone(), hi.clone() * hi.clone());
        (c0.clone() + l1 + l2, c0.clone() + h1 + h2)
    }

    pub fn to_float<F: Float>(&self) -> F {
        let alpha = alpha_approx::<F>();
        let [c0, c1, c2] = &self.coeffs;
        let cast = |c: &T| F::from(c.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan);
        cast(c0) + cast(c1) * alpha + cast(c2) * alpha * alpha
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float::<f64>()
    }
}

/// Exact comparison of two field elements.
pub fn compare_norm<T: Scalar>(x: &AlgebraicValue<T>, y: &AlgebraicValue<T>) -> Ordering {
    (x.clone() - y.clone()).signum()
}

impl<T: Scalar> PartialOrd for AlgebraicValue<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(compare_norm(self, other))
    }
}

impl<T: Scalar + Eq> Ord for AlgebraicValue<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_norm(self, other)
    }
}

impl<T: Scalar> Add for AlgebraicValue<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2] = self.coeffs;
        let [b0, b1, b2] = rhs.coeffs;
        Self::new(a0 + b0, a1 + b1, a2 + b2)
    }
}

impl<T: Scalar> AddAssign for AlgebraicValue<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.clone() + rhs;
    }
}

impl<T: Scalar> Neg for AlgebraicValue<T> {
    type Output = Self;

    fn neg(self) -> Self {
        let [a0, a1, a2] = self.coeffs;
        Self::new(-a0, -a1, -a2)
    }
}

impl<T: Scalar> Sub for AlgebraicValue<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for AlgebraicValue<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let a = &self.coeffs;
        let b = &rhs.coeffs;
        // raw product coefficients of 1, α, α², α³, α⁴
        let mut raw: [T; 5] = [T::zero(), T::zero(), T::zero(), T::zero(), T::zero()];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                raw[i + j] = raw[i + j].clone() + ai.clone() * bj.clone();
            }
        }
        // α⁴ = (1 + 3α + 3α²)/4 and α³ = (1 + α + α²)/2
        let two = int::<T>(2);
        let four = int::<T>(4);
        let three = int::<T>(3);
        let q4 = raw[4].clone() / four;
        let q3 = raw[3].clone() / two;
        Self::new(
            raw[0].clone() + q3.clone() + q4.clone(),
            raw[1].clone() + q3.clone() + three.clone() * q4.clone(),
            raw[2].clone() + q3 + three * q4,
        )
    }
}

impl<T: Scalar> fmt::Display for AlgebraicValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c0, c1, c2] = &self.coeffs;
        write!(f, "{} + {}α + {}α²", c0, c1, c2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    type V = AlgebraicValue<BigRational>;

    #[test]
    fn irreducible() {
        assert!(minimal_polynomial_is_irreducible());
    }

    #[test]
    fn alpha_satisfies_its_polynomial() {
        let a = V::alpha();
        let cubic = a.clone() * a.clone() * a.clone();
        let lhs = cubic.scale(&BigRational::from_i64(2).unwrap());
        let rhs = a.clone() * a.clone() + a + V::from_ints(1, 0, 0);
        assert_eq!(lhs, rhs);
        let x: f64 = alpha_approx();
        assert!((x - 1.233_751_7).abs() < 1e-6);
        assert!(1.233751 < x && x < 1.233752);
    }

    #[test]
    fn multiplication_is_commutative_and_associative() {
        let x = V::from_ints(1, -2, 3);
        let y = V::from_ints(-4, 0, 5);
        let z = V::from_ints(2, 7, -1);
        assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        assert_eq!(
            (x.clone() * y.clone()) * z.clone(),
            x.clone() * (y.clone() * z.clone())
        );
        let fx = x.to_f64() * y.to_f64();
        assert!(((x * y).to_f64() - fx).abs() < 1e-9);
    }

    #[test]
    fn signs() {
        assert_eq!(V::alpha().signum(), Ordering::Greater);
        assert_eq!(V::zero().signum(), Ordering::Equal);
        // α − 1.233751 > 0 and α − 1.233752 < 0
        let lo = BigRational::new(1_233_751.into(), 1_000_000.into());
        let hi = BigRational::new(1_233_752.into(), 1_000_000.into());
        assert_eq!((V::alpha() - V::from_scalar(lo)).signum(), Ordering::Greater);
        assert_eq!((V::alpha() - V::from_scalar(hi)).signum(), Ordering::Less);
    }

    #[test]
    fn near_zero_values_need_bisection() {
        // 1.2337517 is within 1e-7 of α
        let close = BigRational::new(12_337_517.into(), 10_000_000.into());
        let x: f64 = alpha_approx();
        let expected = if x > 1.233_751_7 { Ordering::Greater } else { Ordering::Less };
        assert_eq!((V::alpha() - V::from_scalar(close)).signum(), expected);
    }

    #[test]
    fn generic_over_small_rationals() {
        type S = AlgebraicValue<Rational64>;
        let x = S::from_ints(-1, 1, 1);
        assert_eq!(x.partial_cmp(&S::from_ints(2, 0, 0)), Some(Ordering::Less));
        let v: f32 = x.to_float();
        assert!((v - 1.7559).abs() < 1e-3);
    }
}
