//! Coefficient rings for formal linear combinations.
//!
//! The symbolic engine runs over [`Scalar`], the exact Gaussian rationals
//! `Q(i)`. Every structure constant that appears in the relations and Hopf
//! structure maps is an integer or a half-integer, so exactness makes
//! equality of normal forms decidable. The same machinery also accepts
//! floating-point complex coefficients, which is occasionally handy for
//! feeding numeric data through the rewriting engine.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// Exact Gaussian rational `re + im·i`.
pub type Scalar = Complex<BigRational>;

/// A commutative coefficient field containing `i`.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    fn from_integer(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_integer(num) / Self::from_integer(den)
    }

    fn imaginary_unit() -> Self;

    /// Nearest double-precision complex value.
    fn to_c64(&self) -> Complex<f64>;

    /// True when the value is a strictly negative real number.
    fn is_negative_real(&self) -> bool;

    /// Render in the expression grammar (parenthesised when non-real).
    fn render(&self) -> String;
}

impl<T> Coefficient for Complex<T>
where
    T: Clone + Num + Signed + Neg<Output = T> + FromPrimitive + ToPrimitive + Display + Debug + Send + Sync + 'static,
{
    fn from_integer(n: i64) -> Self {
        Complex::new(T::from_i64(n).expect("integer fits coefficient type"), T::zero())
    }

    fn imaginary_unit() -> Self {
        Complex::new(T::zero(), T::one())
    }

    fn to_c64(&self) -> Complex<f64> {
        Complex::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }

    fn render(&self) -> String {
        let imag = |v: &T| {
            if v.is_one() {
                "i".to_string()
            } else if (-v.clone()).is_one() {
                "-i".to_string()
            } else {
                format!("{v} i")
            }
        };
        if self.im.is_zero() {
            format!("{}", self.re)
        } else if self.re.is_zero() {
            format!("({})", imag(&self.im))
        } else if self.im.is_negative() {
            let mag = -self.im.clone();
            let tail = if mag.is_one() { "i".to_string() } else { format!("{mag} i") };
            format!("({} - {})", self.re, tail)
        } else {
            let tail = if self.im.is_one() { "i".to_string() } else { format!("{} i", self.im) };
            format!("({} + {})", self.re, tail)
        }
    }
}

/// Exact rational `num/den` as a [`Scalar`].
pub fn rational(num: i64, den: i64) -> Scalar {
    Scalar::from_ratio(num, den)
}

/// Exact integer as a [`Scalar`].
pub fn integer(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_canonical() {
        let a = rational(3, 6) - rational(1, 2);
        assert!(a.is_zero());
        assert_eq!(a, Scalar::zero());
        assert_eq!(rational(2, 4), rational(-1, -2));
    }

    #[test]
    fn rendering() {
        assert_eq!(integer(-1).render(), "-1");
        assert_eq!(rational(1, 2).render(), "1/2");
        assert_eq!(Scalar::imaginary_unit().render(), "(i)");
        assert_eq!((integer(1) - Scalar::imaginary_unit() * integer(2)).render(), "(1 - 2 i)");
        assert_eq!((rational(1, 2) + Scalar::imaginary_unit()).render(), "(1/2 + i)");
    }

    #[test]
    fn gaussian_division_is_exact() {
        let i = Scalar::imaginary_unit();
        let a = integer(3) + i.clone() * integer(4);
        let b = integer(1) - i * integer(2);
        assert_eq!((a.clone() * b.clone()) / b, a);
    }

    #[test]
    fn float_coefficients_share_the_trait() {
        let half = Complex::<f64>::from_ratio(1, 2);
        assert_eq!(half, Complex::new(0.5, 0.0));
        assert!(Complex::<f64>::from_integer(-2).is_negative_real());
    }
}
