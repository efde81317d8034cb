use std::fmt;

use super::{LaurentPoly, QPolyError, TPoly};

/// A formal power series in `t` truncated at a fixed order `M`: exactly the
/// coefficients of `t^0 .. t^{M-1}` are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_tpoly(&TPoly::one(), order)
    }

    /// Truncates a polynomial in `t` to the given order.
    pub fn from_tpoly(p: &TPoly, order: usize) -> Self {
        Self {
            coeffs: (0..order).map(|d| p.coeff(d)).collect(),
        }
    }

    /// Takes the first `order` coefficients produced by `f(m)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> LaurentPoly) -> Self {
        Self {
            coeffs: (0..order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, m: usize) -> &LaurentPoly {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Re-truncates to a lower (or equal) order.
    pub fn truncated(&self, order: usize) -> Result<Self, QPolyError> {
        if order > self.order() {
            return Err(QPolyError::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    fn check_order(&self, other: &TSeries) -> Result<(), QPolyError> {
        if self.order() != other.order() {
            return Err(QPolyError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TSeries) -> Result<TSeries, QPolyError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &TSeries) -> Result<TSeries, QPolyError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &TSeries) -> Result<TSeries, QPolyError> {
        self.check_order(other)?;
        let m = self.order();
        let mut out = vec![LaurentPoly::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..m - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies every coefficient by a `q`-polynomial.
    pub fn scale(&self, c: &LaurentPoly) -> TSeries {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse of a series whose constant term is exactly 1.
    pub fn inverse(&self) -> Result<TSeries, QPolyError> {
        let m = self.order();
        if m == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(QPolyError::InvalidParams(format!(
                "series inverse needs constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        let mut inv: Vec<LaurentPoly> = Vec::with_capacity(m);
        inv.push(LaurentPoly::one());
        for k in 1..m {
            let mut acc = LaurentPoly::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &inv[k - j];
                }
            }
            inv.push(-acc);
        }
        Ok(Self { coeffs: inv })
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::tpoly::write_t_terms(f, &self.coeffs)?;
        if self.coeffs.iter().all(LaurentPoly::is_zero) {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

/// Expands `numer / (f_1 * ... * f_j)` as a power series in `t` to the given
/// order by iterated exact inversion of each factor. Every factor must have
/// constant term 1.
pub fn series_from_rational(numer: &TPoly, denom_factors: &[TPoly], order: usize) -> Result<TSeries, QPolyError> {
    let mut acc = TSeries::from_tpoly(numer, order);
    for factor in denom_factors {
        if !factor.coeff(0).is_one() {
            return Err(QPolyError::InvalidParams(format!(
                "denominator factor {factor} does not have constant term 1"
            )));
        }
        let inv = TSeries::from_tpoly(factor, order).inverse()?;
        acc = acc.mul(&inv)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn one_minus(c: &str) -> TPoly {
        &TPoly::one() - &TPoly::monomial(lp(c), 1)
    }

    #[test]
    fn geometric_series() {
        let s = series_from_rational(&TPoly::one(), &[one_minus("1")], 3).unwrap();
        assert_eq!(s.coeffs(), &[lp("1"), lp("1"), lp("1")]);
    }

    #[test]
    fn product_of_two_geometric_series() {
        let s = series_from_rational(&TPoly::one(), &[one_minus("1"), one_minus("q")], 2).unwrap();
        assert_eq!(s.coeffs(), &[lp("1"), lp("1 + q")]);
    }

    #[test]
    fn shifted_numerator() {
        let s = series_from_rational(&TPoly::t(), &[one_minus("1")], 2).unwrap();
        assert_eq!(s.coeffs(), &[lp("0"), lp("1")]);
    }

    #[test]
    fn rejects_bad_constant_term() {
        let f = &TPoly::constant(lp("2")) - &TPoly::t();
        assert!(matches!(
            series_from_rational(&TPoly::one(), &[f], 4),
            Err(QPolyError::InvalidParams(_))
        ));
    }

    #[test]
    fn mixing_orders_is_an_error() {
        let a = TSeries::one(3);
        let b = TSeries::one(4);
        assert_eq!(a.mul(&b), Err(QPolyError::OrderMismatch { left: 3, right: 4 }));
        assert!(a.add(&b).is_err());
        assert!(a.truncated(5).is_err());
    }

    #[test]
    fn rendering_marks_truncation() {
        let s = series_from_rational(&TPoly::one(), &[one_minus("q")], 3).unwrap();
        assert_eq!(s.to_string(), "1 + q*t + q^2*t^2 + O(t^3)");
        assert_eq!(TSeries::zero(2).to_string(), "0 + O(t^2)");
    }
}
