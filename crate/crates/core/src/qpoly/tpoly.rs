use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::LaurentPoly;

/// A polynomial in `t` whose coefficients are Laurent polynomials in `q`.
///
/// Dense by `t`-degree with trailing zeros trimmed; the zero polynomial has
/// no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct TPoly {
    coeffs: Vec<LaurentPoly>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(LaurentPoly::one(), 1)
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^d`.
    pub fn monomial(c: LaurentPoly, d: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    /// `c0 + c1*t + ...`, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> LaurentPoly {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Applies `f` to every `q`-coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

/// `t`-terms in ascending degree, each coefficient parenthesised, e.g.
/// `(1 + q) + (2)*t + (q^-1)*t^3`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_t_terms(f, &self.coeffs)?;
        if self.is_zero() {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Writes `Σ c_d t^d`. Coefficients with several terms are parenthesised
/// and unit coefficients are dropped, e.g. `1 + (1 + q)*t + q*t^2 + t^3`.
pub(crate) fn write_t_terms(f: &mut fmt::Formatter<'_>, coeffs: &[LaurentPoly]) -> fmt::Result {
    let mut first = true;
    for (d, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        let coeff = if c.num_terms() > 1 {
            format!("({c})")
        } else {
            c.to_string()
        };
        match d {
            0 => f.write_str(&coeff)?,
            _ if c.is_one() => f.write_str("t")?,
            _ => write!(f, "{coeff}*t")?,
        }
        if d > 1 {
            write!(f, "^{d}")?;
        }
    }
    Ok(())
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<TPoly> for TPoly {
            type Output = TPoly;
            fn $method(self, rhs: TPoly) -> TPoly {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&TPoly> for TPoly {
            type Output = TPoly;
            fn $method(self, rhs: &TPoly) -> TPoly {
                (&self).$method(rhs)
            }
        }
        impl $Trait<TPoly> for &TPoly {
            type Output = TPoly;
            fn $method(self, rhs: TPoly) -> TPoly {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::iter::Sum for TPoly {
    fn sum<I: Iterator<Item = TPoly>>(iter: I) -> Self {
        iter.fold(TPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for TPoly {
    fn product<I: Iterator<Item = TPoly>>(iter: I) -> Self {
        iter.fold(TPoly::one(), |acc, x| acc * x)
    }
}
