//! Field elements: rationals and the quadratic field Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An element `a + b·√5` of Q(√5).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt5 {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt5 { a, b }
    }

    pub fn zero() -> Self {
        QuadExt5::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        QuadExt5::new(Rational::one(), Rational::zero())
    }

    /// The golden ratio (1+√5)/2.
    pub fn golden() -> Self {
        QuadExt5::new(rat(1, 2), rat(1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        QuadExt5::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat(5, 1) * &self.b * &self.b
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(sqrt 5)");
        let n = self.norm();
        let c = self.conjugate();
        QuadExt5::new(c.a / &n, c.b / &n)
    }

    /// Exact sign of the real number `a + b√5`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with 5b²
        let lhs = &self.a * &self.a;
        let rhs = rat(5, 1) * &self.b * &self.b;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &QuadExt5 {
    type Output = QuadExt5;
    fn add(self, o: &QuadExt5) -> QuadExt5 {
        QuadExt5::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &QuadExt5 {
    type Output = QuadExt5;
    fn sub(self, o: &QuadExt5) -> QuadExt5 {
        QuadExt5::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &QuadExt5 {
    type Output = QuadExt5;
    fn mul(self, o: &QuadExt5) -> QuadExt5 {
        QuadExt5::new(
            &self.a * &o.a + rat(5, 1) * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for &QuadExt5 {
    type Output = QuadExt5;
    fn neg(self) -> QuadExt5 {
        QuadExt5::new(-self.a.clone(), -self.b.clone())
    }
}

impl fmt::Display for QuadExt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt5", self.b)
        } else {
            write!(f, "{}+{}*sqrt5", self.a, self.b)
        }
    }
}

/// Which field a [`Scalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Sqrt5,
}

impl FieldTag {
    /// The wider of two tags; Q embeds in Q(√5).
    pub fn join(self, other: FieldTag) -> FieldTag {
        self.max(other)
    }
}

/// A field element tagged with its field. Arithmetic never mixes tags.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Quad(QuadExt5),
}

impl Scalar {
    pub fn zero(tag: FieldTag) -> Scalar {
        match tag {
            FieldTag::Rational => Scalar::Rat(Rational::zero()),
            FieldTag::Sqrt5 => Scalar::Quad(QuadExt5::zero()),
        }
    }

    pub fn one(tag: FieldTag) -> Scalar {
        Scalar::from_int(tag, 1)
    }

    pub fn from_int(tag: FieldTag, k: i64) -> Scalar {
        Scalar::from_rational(tag, rat(k, 1))
    }

    pub fn from_rational(tag: FieldTag, r: Rational) -> Scalar {
        match tag {
            FieldTag::Rational => Scalar::Rat(r),
            FieldTag::Sqrt5 => Scalar::Quad(QuadExt5::new(r, Rational::zero())),
        }
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Rat(_) => FieldTag::Rational,
            Scalar::Quad(_) => FieldTag::Sqrt5,
        }
    }

    /// Re-tags a rational value into a wider field. Panics when narrowing.
    pub fn promote(&self, tag: FieldTag) -> Scalar {
        match (self, tag) {
            (Scalar::Rat(r), FieldTag::Sqrt5) => Scalar::Quad(QuadExt5::new(r.clone(), Rational::zero())),
            (s, t) if s.tag() == t => s.clone(),
            _ => panic!("cannot narrow a Q(sqrt 5) scalar to Q"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Quad(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.tag())
    }

    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rat(r) => sign_of(r),
            Scalar::Quad(q) => q.signum(),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Quad(q) => Scalar::Quad(q.inv()),
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv()
    }

    /// The rational value, if the element has no √5 part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Quad(q) if q.b.is_zero() => Some(q.a.clone()),
            Scalar::Quad(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Quad(q) => q.to_f64(),
        }
    }

    pub fn cmp_value(&self, other: &Scalar) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

fn mixed() -> ! {
    panic!("arithmetic on scalars from different fields")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Quad(x), Scalar::Quad(y)) => Scalar::Quad(x + y),
            _ => mixed(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (Scalar::Quad(x), Scalar::Quad(y)) => Scalar::Quad(x - y),
            _ => mixed(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Quad(x), Scalar::Quad(y)) => Scalar::Quad(x * y),
            _ => mixed(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(x) => Scalar::Rat(-x.clone()),
            Scalar::Quad(x) => Scalar::Quad(-x),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Quad(q) => write!(f, "{q}"),
        }
    }
}
