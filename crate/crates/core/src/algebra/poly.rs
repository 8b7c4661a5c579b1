use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Univariate polynomial in `x` with exact rational coefficients.
///
/// Coefficients are stored densely in ascending powers. The highest stored
/// coefficient is never zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x - c`
    pub fn x_minus(c: &Rational) -> Self {
        Self::from_coeffs(vec![-c, Rational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.canonicalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
        self.canonicalize();
    }

    /// Coefficients rendered as `p/q` strings, ascending powers.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, crate::Error> {
        let coeffs = items
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<Rational>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || i == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Poly::from_coeffs(Vec::<Rational>::deserialize(
            deserializer,
        )?))
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, 1]) + p(&[-1, 1]), p(&[0, 2]));
        assert_eq!(Poly::zero() + p(&[3, 0, 1]), p(&[3, 0, 1]));
        let z = p(&[0, 0, 1]) + p(&[0, 0, -1]);
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[-1, 1]) * p(&[1, 1]), p(&[-1, 0, 1]));
        assert!((p(&[2, 3]) * Poly::zero()).is_zero());
        assert_eq!(p(&[-2, 1]) * p(&[-2, 1]), p(&[4, -4, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-1, 0, 1]).eval(&Rational::zero()), Rational::from(-1));
        assert_eq!(p(&[-1, 0, 1]).eval(&Rational::one()), Rational::zero());
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(p(&[3, 2]).eval(&half), Rational::from(4));
        assert_eq!(Poly::zero().eval(&half), Rational::zero());
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let q = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(Poly::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(p(&[0, -3, 0, 1]).to_string(), "x^3 - 3x");
        assert_eq!(Poly::zero().to_string(), "0");
        let q = Poly::from_coeffs(vec![
            Rational::new(1, 2).unwrap(),
            Rational::new(-2, 3).unwrap(),
        ]);
        assert_eq!(q.to_string(), "-(2/3)x + 1/2");
    }

    #[test]
    fn string_round_trip() {
        let q = Poly::from_coeffs(vec![
            Rational::new(-1, 3).unwrap(),
            Rational::zero(),
            Rational::from(5),
        ]);
        let s = q.to_strings();
        assert_eq!(s, vec!["-1/3", "0", "5"]);
        assert_eq!(Poly::from_strings(&s).unwrap(), q);
    }
}
