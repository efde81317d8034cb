use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::QPolyError;

/// An exact Laurent polynomial in `q` with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept sparse, keyed by exponent, and never store a zero
/// coefficient, so structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// Dense coefficients starting at exponent 0: `coeffs[i]` is the
    /// coefficient of `q^i`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone().into())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `q = 1`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces `q` by `q^r`.
    pub fn subst_q_power(&self, r: u32) -> Self {
        assert!(r >= 1, "subst_q_power requires r >= 1");
        let r = i64::from(r);
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * r, c.clone())).collect(),
        }
    }

    /// Exact quotient `self / den`, failing unless the division leaves no
    /// remainder over integer Laurent polynomials.
    pub fn div_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly, QPolyError> {
        let (Some(den_lo), Some(den_hi)) = (den.min_exponent(), den.max_exponent()) else {
            return Err(QPolyError::DivisionByZero);
        };
        let (Some(num_lo), Some(_)) = (self.min_exponent(), self.max_exponent()) else {
            return Ok(Self::zero());
        };
        let lead = den.terms[&den_hi].clone();
        let floor = num_lo - den_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(hi) = rem.max_exponent() {
            let e = hi - den_hi;
            if e < floor {
                return Err(QPolyError::NotDivisible);
            }
            let (c, r) = rem.terms[&hi].div_rem(&lead);
            if !r.is_zero() {
                return Err(QPolyError::NotDivisible);
            }
            for (de, dc) in den.terms() {
                rem.add_term(de + e, -(dc * &c));
            }
            quot.add_term(e, c);
        }
        Ok(quot)
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn mul_ref(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let (Some(a_lo), Some(a_hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Self::zero();
        };
        let (Some(b_lo), Some(b_hi)) = (rhs.min_exponent(), rhs.max_exponent()) else {
            return Self::zero();
        };
        let lo = a_lo + b_lo;
        let width = (a_hi + b_hi - lo + 1) as usize;
        let mut dense = vec![BigInt::zero(); width];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        Self {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Canonical text: ascending exponents, `" + "`/`" - "` separators, unit
/// coefficients elided away from the constant term, e.g.
/// `1 + 2*q + q^3` or `q^-2 - q`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = QPolyError;

    /// Parses the canonical text grammar produced by `Display`. Whitespace
    /// around operators is optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| QPolyError::Parse(format!("{msg} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let bytes = compact.as_bytes();
        let mut out = LaurentPoly::zero();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            match bytes[pos] {
                b'+' if pos > 0 => pos += 1,
                b'-' => {
                    sign = -sign;
                    pos += 1;
                }
                _ if pos > 0 => return Err(bad("expected '+' or '-'")),
                _ => {}
            }
            // term runs until the next '+' or '-' that is not an exponent sign
            let start = pos;
            while pos < bytes.len() {
                let b = bytes[pos];
                if (b == b'+' || b == b'-') && pos > start && bytes[pos - 1] != b'^' {
                    break;
                }
                pos += 1;
            }
            let term = &compact[start..pos];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coeff, rest) = match term.find('q') {
                None => (term, None),
                Some(qi) => {
                    let head = &term[..qi];
                    let head = head.strip_suffix('*').unwrap_or(head);
                    if head.is_empty() && qi > 0 {
                        return Err(bad("dangling '*'"));
                    }
                    (head, Some(&term[qi + 1..]))
                }
            };
            let c: BigInt = if coeff.is_empty() {
                BigInt::one()
            } else {
                coeff.parse().map_err(|_| bad("invalid coefficient"))?
            };
            let e: i64 = match rest {
                None => 0,
                Some("") => 1,
                Some(r) => r
                    .strip_prefix('^')
                    .ok_or_else(|| bad("expected '^'"))?
                    .parse()
                    .map_err(|_| bad("invalid exponent"))?,
            };
            out.add_term(e, sign * c);
        }
        Ok(out)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.mul_ref(rhs);
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $assign:ident) => {
        impl $Trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $Trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $Trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $Trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_ref(&rhs)
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Mul<LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_ref(&rhs)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn zero_is_empty_and_renders_as_zero() {
        let z = LaurentPoly::zero();
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
        assert_eq!(z.to_string(), "0");
        assert_eq!(p("q - q"), z);
    }

    #[test]
    fn canonical_rendering() {
        let x = LaurentPoly::from_terms([(0, 1), (1, 2), (3, 1)]);
        assert_eq!(x.to_string(), "1 + 2*q + q^3");
        let y = LaurentPoly::from_terms([(-2, 1), (1, -1), (2, -3)]);
        assert_eq!(y.to_string(), "q^-2 - q - 3*q^2");
        assert_eq!(LaurentPoly::monomial(-1, 4).to_string(), "-q^4");
        assert_eq!(LaurentPoly::constant(-7).to_string(), "-7");
    }

    #[test]
    fn parse_accepts_canonical_and_loose_forms() {
        assert_eq!(p("1 + 2*q + q^3"), LaurentPoly::from_terms([(0, 1), (1, 2), (3, 1)]));
        assert_eq!(p("q^-2-q"), LaurentPoly::from_terms([(-2, 1), (1, -1)]));
        assert_eq!(p("-3*q^-1 + 5"), LaurentPoly::from_terms([(-1, -3), (0, 5)]));
        assert_eq!(p("0"), LaurentPoly::zero());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("1 + + q".parse::<LaurentPoly>().is_err());
        assert!("2*".parse::<LaurentPoly>().is_err());
        assert!("q^x".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn evaluation_at_one_sums_coefficients() {
        assert_eq!(p("q^-3 + 4*q - 2*q^7").eval_at_one(), BigInt::from(3));
    }

    #[test]
    fn subst_scales_exponents() {
        assert_eq!(p("1 + q").subst_q_power(2), p("1 + q^2"));
        assert_eq!(p("q^-1 + q").subst_q_power(3), p("q^-3 + q^3"));
    }

    #[test]
    fn exact_division() {
        let a = p("1 + q");
        assert_eq!((&a * &a).div_exact(&a).unwrap(), a);
        assert_eq!(p("q^3 + q^4").div_exact(&p("q")).unwrap(), p("q^2 + q^3"));
        assert_eq!(p("1 + q + q^2").div_exact(&a), Err(QPolyError::NotDivisible));
        assert_eq!(p("2 + 2*q").div_exact(&p("2")).unwrap(), a);
        assert_eq!(p("1 + q").div_exact(&p("2")), Err(QPolyError::NotDivisible));
        assert_eq!(a.div_exact(&LaurentPoly::zero()), Err(QPolyError::DivisionByZero));
        assert_eq!(LaurentPoly::zero().div_exact(&a).unwrap(), LaurentPoly::zero());
        // Laurent shifts on both sides
        let num = p("q^-3 - q^2");
        let den = p("q^-1 - q^-2");
        let quot = num.div_exact(&den).unwrap();
        assert_eq!(&quot * &den, num);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = p("1 + q^-1");
        let mut acc = LaurentPoly::one();
        for e in 0..6 {
            assert_eq!(a.pow(e), acc);
            acc = &acc * &a;
        }
    }
}
