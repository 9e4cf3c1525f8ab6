//! Dense univariate polynomials in `q` with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::scalar::Rational;

/// Coefficients in ascending powers; never has a trailing zero, so the zero
/// polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Integer polynomial in `q`.
pub type PolyQ = Poly<BigInt>;
/// Rational polynomial (used for the Fuss–Catalan and plane-tree identities).
pub type RatPoly = Poly<BigRational>;

pub trait Coeff:
    Clone + Zero + One + PartialEq + for<'a> Add<&'a Self, Output = Self> + for<'a> Mul<&'a Self, Output = Self> + Neg<Output = Self>
{
}

impl Coeff for BigInt {}
impl Coeff for BigRational {}

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `a + b·q`
    pub fn linear(a: C, b: C) -> Self {
        Poly::new(vec![a, b])
    }

    /// The variable `q`.
    pub fn var() -> Self {
        Poly::linear(C::zero(), C::one())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, k: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// Product of a list of polynomials.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self
    where
        C: 'a,
    {
        factors.into_iter().fold(Poly::one(), |acc, f| &acc * f)
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        self + &(-o)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: Poly<C>) -> Poly<C> {
        &self + &o
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: Poly<C>) -> Poly<C> {
        &self * &o
    }
}

impl<C: Coeff> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

impl PolyQ {
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `a + b·q` with small integer coefficients.
    pub fn lin(a: i64, b: i64) -> Self {
        Poly::linear(BigInt::from(a), BigInt::from(b))
    }

    pub fn eval_rational(&self, q0: &Rational) -> Rational {
        self.to_rational().eval(q0)
    }

    pub fn to_rational(&self) -> RatPoly {
        Poly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<PolyQ> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Poly::new(out))
    }

    /// `{"coeffs":[c0,c1,...]}`, ascending in q. Coefficients outside the i64
    /// range are emitted as decimal strings.
    pub fn to_json(&self) -> Value {
        json!({ "coeffs": self.coeff_values() })
    }

    pub fn coeff_values(&self) -> Vec<Value> {
        self.coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(x) => json!(x),
                None => json!(c.to_string()),
            })
            .collect()
    }

    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl RatPoly {
    /// The integer polynomial with the same coefficients, if all are integers.
    pub fn to_integer(&self) -> Option<PolyQ> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    pub fn lin_rat(a: BigRational, b: BigRational) -> Self {
        Poly::linear(a, b)
    }
}

impl<C: Coeff + fmt::Display + Signed> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    write!(f, "q")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::rat;

    #[test]
    fn ring_operations() {
        let p = &PolyQ::lin(2, 1) * &PolyQ::lin(3, 2);
        assert_eq!(p, PolyQ::from_ints(&[6, 7, 2]));
        assert_eq!(&p * &PolyQ::one(), p);
        assert_eq!(PolyQ::lin(2, 2).eval_rational(&rat(1, 1)), rat(4, 1));
        assert_eq!(&p - &p, PolyQ::zero());
        assert!(PolyQ::from_ints(&[1, 0, 0]).coeffs().len() == 1);
    }

    #[test]
    fn display_and_json() {
        assert_eq!(PolyQ::from_ints(&[6, 8, 2]).to_string(), "6 + 8q + 2q^2");
        assert_eq!(PolyQ::from_ints(&[0, -1]).to_string(), "-q");
        assert_eq!(PolyQ::from_ints(&[2, 1]).to_json().to_string(), r#"{"coeffs":[2,1]}"#);
        assert_eq!(PolyQ::zero().to_json().to_string(), r#"{"coeffs":[]}"#);
    }

    #[test]
    fn composition() {
        // (1 + m) with m = 1 - q  ->  2 - q
        let p = PolyQ::lin(1, 1);
        assert_eq!(p.compose(&PolyQ::lin(1, -1)), PolyQ::lin(2, -1));
    }

    #[test]
    fn exact_division() {
        let p = PolyQ::from_ints(&[4, 6]);
        assert_eq!(p.div_exact(&BigInt::from(2)), Some(PolyQ::from_ints(&[2, 3])));
        assert_eq!(p.div_exact(&BigInt::from(4)), None);
    }
}
