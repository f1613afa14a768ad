use alloc::format;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{is_squarefree, rational_from_int, Rational};
use crate::error::{Error, Result};

/// An element `a + b·√d` of the quadratic field `Q(√d)` with exact rational
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElement {
    d: i64,
    a: Rational,
    b: Rational,
}

/// Operation selector for [`QuadElement::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Mul,
    Conj,
    Norm,
    Trace,
}

/// Result of a [`QuadOp`]: field elements for the ring operations, rationals
/// for norm and trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadValue {
    Element(QuadElement),
    Rational(Rational),
}

impl QuadElement {
    pub fn new(d: i64, a: Rational, b: Rational) -> Result<Self> {
        if d == 1 || !is_squarefree(d) {
            return Err(Error::Domain(format!("field parameter {d} is not a squarefree integer other than 0, 1")));
        }
        Ok(QuadElement { d, a, b })
    }

    pub fn from_ints(d: i64, a: i64, b: i64) -> Result<Self> {
        Self::new(d, rational_from_int(a), rational_from_int(b))
    }

    pub fn from_rational(d: i64, a: Rational) -> Result<Self> {
        Self::new(d, a, Rational::zero())
    }

    pub fn zero(d: i64) -> Result<Self> {
        Self::from_ints(d, 0, 0)
    }

    pub fn one(d: i64) -> Result<Self> {
        Self::from_ints(d, 1, 0)
    }

    /// `√d` itself.
    pub fn sqrt_d(d: i64) -> Result<Self> {
        Self::from_ints(d, 0, 1)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Rational coordinate.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `√d`.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::ParameterMismatch(format!(
                "elements of Q(√{}) and Q(√{}) cannot be combined",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadElement { d: self.d, a: &self.a + &other.a, b: &self.b + &other.b })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadElement { d: self.d, a: &self.a - &other.a, b: &self.b - &other.b })
    }

    pub fn neg(&self) -> Self {
        QuadElement { d: self.d, a: -&self.a, b: -&self.b }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = rational_from_int(self.d);
        Ok(QuadElement {
            d: self.d,
            a: &self.a * &other.a + d * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
        })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadElement { d: self.d, a: &self.a * k, b: &self.b * k }
    }

    /// The nontrivial automorphism `a + b√d ↦ a − b√d`.
    pub fn conj(&self) -> Self {
        QuadElement { d: self.d, a: self.a.clone(), b: -&self.b }
    }

    /// `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rational_from_int(self.d) * &self.b * &self.b
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::Domain("zero has no inverse".into()));
        }
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QuadElement { d: self.d, a: Rational::one(), b: Rational::zero() };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// True when both coordinates are integers (membership in `Z[√d]`).
    pub fn has_integer_coordinates(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Membership in the ring of integers of `Q(√d)`: the trace and norm are
    /// rational integers.
    pub fn is_algebraic_integer(&self) -> bool {
        self.trace().is_integer() && self.norm().is_integer()
    }

    /// Sign of the real number `a + b√d` under the embedding `√d > 0`.
    /// Only meaningful for real fields.
    pub fn real_sign(&self) -> Result<Ordering> {
        if self.d < 0 {
            return Err(Error::Domain(format!("Q(√{}) has no real embedding", self.d)));
        }
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sa == sb || sb == Ordering::Equal {
            return Ok(sa);
        }
        if sa == Ordering::Equal {
            return Ok(sb);
        }
        // opposite signs: compare a² with d·b²
        let lhs = &self.a * &self.a;
        let rhs = rational_from_int(self.d) * &self.b * &self.b;
        Ok(match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        })
    }

    /// Compare two elements of the same real field as real numbers.
    pub fn cmp_real(&self, other: &Self) -> Result<Ordering> {
        self.sub(other)?.real_sign()
    }

    /// Dispatch form of the field operations.
    pub fn apply(op: QuadOp, x: &Self, y: Option<&Self>) -> Result<QuadValue> {
        let need = || y.ok_or_else(|| Error::Domain(format!("{op:?} needs a second operand")));
        Ok(match op {
            QuadOp::Add => QuadValue::Element(x.add(need()?)?),
            QuadOp::Mul => QuadValue::Element(x.mul(need()?)?),
            QuadOp::Conj => QuadValue::Element(x.conj()),
            QuadOp::Norm => QuadValue::Rational(x.norm()),
            QuadOp::Trace => QuadValue::Rational(x.trace()),
        })
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = format!("√{}", self.d);
        let coeff = |b: &Rational| -> alloc::string::String {
            if b.abs().is_one() { root.clone() } else { format!("{}{}", b.abs(), root) }
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{}", coeff(&self.b))
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {}", self.a, coeff(&self.b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(d: i64, a: i64, b: i64) -> QuadElement {
        QuadElement::from_ints(d, a, b).unwrap()
    }

    #[test]
    fn norms_and_conjugates() {
        assert_eq!(el(10, 4, -1).norm(), rational_from_int(6));
        assert_eq!(el(10, 0, 1).norm(), rational_from_int(-10));
        assert_eq!(el(10, 7, 0).conj(), el(10, 7, 0));
        assert_eq!(el(10, 4, -1).trace(), rational_from_int(8));
        assert_eq!(el(-5, 1, 1).norm(), rational_from_int(6));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(QuadElement::from_ints(1, 0, 0).is_err());
        assert!(QuadElement::from_ints(0, 0, 0).is_err());
        assert!(QuadElement::from_ints(12, 0, 0).is_err());
        let err = el(10, 1, 1).mul(&el(2, 1, 1)).unwrap_err();
        assert!(matches!(err, Error::ParameterMismatch(_)));
        assert!(QuadElement::apply(QuadOp::Add, &el(10, 1, 0), Some(&el(-5, 1, 0))).is_err());
    }

    #[test]
    fn apply_dispatch() {
        let x = el(10, 4, -1);
        assert_eq!(QuadElement::apply(QuadOp::Norm, &x, None).unwrap(), QuadValue::Rational(rational_from_int(6)));
        assert_eq!(
            QuadElement::apply(QuadOp::Mul, &x, Some(&x.conj())).unwrap(),
            QuadValue::Element(el(10, 6, 0))
        );
        assert!(QuadElement::apply(QuadOp::Mul, &x, None).is_err());
    }

    #[test]
    fn real_ordering() {
        assert_eq!(el(10, 3, 1).real_sign().unwrap(), Ordering::Greater);
        assert_eq!(el(10, 3, -1).real_sign().unwrap(), Ordering::Less);
        assert_eq!(el(10, -4, 1).real_sign().unwrap(), Ordering::Less);
        assert_eq!(el(10, 4, -1).real_sign().unwrap(), Ordering::Greater);
        assert!(el(-5, 1, 1).real_sign().is_err());
        assert_eq!(el(10, 3, 1).inverse().unwrap(), el(10, -3, 1));
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", el(10, 4, -1)), "4 - √10");
        assert_eq!(alloc::format!("{}", el(10, 0, 2)), "2√10");
    }

    fn elem(d: i64) -> impl Strategy<Value = QuadElement> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(move |(an, ad, bn, bd)| {
            QuadElement::new(d, Rational::new(an.into(), ad.into()), Rational::new(bn.into(), bd.into())).unwrap()
        })
    }

    fn field_pair() -> impl Strategy<Value = (QuadElement, QuadElement)> {
        prop::sample::select(alloc::vec![10i64, 2, 3, 5, -5, -1, 13, -163])
            .prop_flat_map(|d| (elem(d), elem(d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn norm_is_multiplicative((x, y) in field_pair()) {
            prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
        }

        #[test]
        fn conjugation_is_ring_automorphism((x, y) in field_pair()) {
            prop_assert_eq!(x.add(&y).unwrap().conj(), x.conj().add(&y.conj()).unwrap());
            prop_assert_eq!(x.mul(&y).unwrap().conj(), x.conj().mul(&y.conj()).unwrap());
            prop_assert_eq!(x.conj().conj(), x);
        }
    }
}
