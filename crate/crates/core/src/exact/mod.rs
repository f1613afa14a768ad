//! Exact arithmetic: big integers and rationals, quadratic-field elements,
//! integer polynomials with resultants and discriminants, and the bounded
//! quartic factorizer.

mod factor;
mod poly;
mod quad;

pub use factor::{factor_quartic, QuarticFactorization};
pub use poly::{determinant, discriminant, poly_resultant, resultant, ExactRing, IntPoly};
pub use quad::{QuadElement, QuadOp, QuadValue};

use alloc::format;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

/// Exact rational square test: `q = r²` for some rational `r`.
pub fn is_rational_square(q: &Rational) -> bool {
    if q.is_negative() {
        return false;
    }
    if q.is_zero() {
        return true;
    }
    is_integer_square(q.numer()) && is_integer_square(q.denom())
}

pub fn is_integer_square(n: &Integer) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Integer square root, floor of `√n` for `n ≥ 0`.
pub fn isqrt(n: &Integer) -> Integer {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    n.sqrt()
}

pub fn is_squarefree(n: i64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Positive divisors of a nonzero integer, ascending.
pub(crate) fn positive_divisors(n: &Integer) -> Result<Vec<Integer>> {
    let m = n
        .abs()
        .to_u64()
        .ok_or_else(|| Error::Resource(format!("divisor enumeration of {n} exceeds 64 bits")))?;
    if m == 0 {
        return Err(Error::Domain("divisors of zero".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= m {
        if m % k == 0 {
            small.push(Integer::from(k));
            if k * k != m {
                large.push(Integer::from(m / k));
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub(crate) fn rational_from_int(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_squares() {
        assert!(is_rational_square(&q(9, 4)));
        assert!(!is_rational_square(&q(-1, 1)));
        assert!(!is_rational_square(&q(10, 1)));
        assert!(is_rational_square(&q(0, 1)));
        assert!(!is_rational_square(&q(2, 9)));
        assert!(is_rational_square(&q(18, 8)));
    }

    #[test]
    fn squarefree_and_primes() {
        assert!(is_squarefree(10));
        assert!(is_squarefree(-5));
        assert!(!is_squarefree(12));
        assert!(!is_squarefree(-4));
        assert!(!is_squarefree(0));
        assert!(is_prime(17) && is_prime(19) && !is_prime(1) && !is_prime(289));
        assert_eq!(prime_divisors(276), [2, 3, 23]);
    }

    #[test]
    fn divisors_listed_in_order() {
        let d: Vec<i64> = positive_divisors(&Integer::from(-289))
            .unwrap()
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(d, [1, 17, 289]);
        assert!(positive_divisors(&Integer::zero()).is_err());
    }

    proptest::proptest! {
        #[test]
        fn square_of_rational_is_square(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = q(n, d);
            proptest::prop_assert!(is_rational_square(&(&r * &r)));
        }
    }
}
