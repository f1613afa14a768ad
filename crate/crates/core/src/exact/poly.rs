use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over `Z`, constant term first.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Integer::one(), 1)
    }

    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Integer {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Integer::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    /// `f(−x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Integer {
        self.coeffs.iter().fold(Integer::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, normalised to a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// `lc(g)^(deg f − deg g + 1) · f mod g`.
    pub fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.degree().expect("pseudo-remainder by zero");
        let lg = g.leading();
        let mut r = self.clone();
        let Some(df) = r.degree() else { return r };
        if df < dg {
            return r;
        }
        let mut steps = df - dg + 1;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let shift = Self::monomial(r.leading(), dr - dg);
            r = &r.scale(&lg) - &(&shift * g);
            steps -= 1;
        }
        r.scale(&num_traits::pow(lg, steps))
    }

    /// Exact quotient `self / g` in `Z[x]`, or `None` when `g` does not divide.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        let dg = g.degree()?;
        let lg = g.leading();
        let mut r = self.clone();
        let mut q = vec![Integer::zero(); self.coeffs.len().saturating_sub(dg)];
        while let Some(dr) = r.degree() {
            if dr < dg {
                return None;
            }
            let (c, rem) = r.leading().div_rem(&lg);
            if !rem.is_zero() {
                return None;
            }
            let shift = Self::monomial(c.clone(), dr - dg);
            q[dr - dg] = c;
            r = &r - &(&shift * g);
        }
        Some(Self::new(q))
    }

    /// Greatest common divisor in `Z[x]`, positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    /// Product of the distinct irreducible factors: `f / gcd(f, f′)`, made
    /// primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(0) => Self::one(),
            Some(_) => {
                let g = self.gcd(&self.derivative());
                self.div_exact(&g).expect("gcd divides").primitive_part()
            }
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if !abs.is_one() || k == 0 {
                out.push_str(&alloc::format!("{abs}"));
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&alloc::format!("x^{k}")),
            }
        }
        f.write_str(&out)
    }
}

/// An integral domain with exact division, enough for fraction-free
/// elimination.
pub trait ExactRing: Clone {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / other`, where the division is known to be exact.
    fn exact_div(&self, other: &Self) -> Self;
}

impl ExactRing for Integer {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(Zero::is_zero(&r), "inexact integer division");
        q
    }
}

impl ExactRing for IntPoly {
    fn zero_elem() -> Self {
        IntPoly::zero()
    }
    fn one_elem() -> Self {
        IntPoly::one()
    }
    fn vanishes(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        self.div_exact(other).expect("inexact polynomial division")
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one_elem();
    }
    let mut negate = false;
    let mut prev: Option<R> = None;
    for k in 0..n - 1 {
        if m[k][k].vanishes() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].vanishes()) else {
                return R::zero_elem();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = match &prev {
                    Some(p) => t.exact_div(p),
                    None => t,
                };
            }
            m[i][k] = R::zero_elem();
        }
        prev = Some(m[k][k].clone());
    }
    let det = m[n - 1][n - 1].clone();
    if negate { det.negated() } else { det }
}

/// Resultant of two coefficient vectors (constant term first, no trailing
/// zeros) as the Sylvester determinant.
pub(crate) fn sylvester_resultant<R: ExactRing>(f: &[R], g: &[R]) -> R {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero_elem(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero_elem(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows)
}

/// Resultant over `Z[x]`: polynomials in `y` whose coefficients are
/// integer polynomials in `x`, constant term first.
pub fn poly_resultant(f: &[IntPoly], g: &[IntPoly]) -> IntPoly {
    sylvester_resultant(f, g)
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<Integer> {
    if f.vanishes() || g.vanishes() {
        return Err(Error::Domain("resultant with the zero polynomial".into()));
    }
    Ok(sylvester_resultant(f.coeffs(), g.coeffs()))
}

/// `disc(f) = (−1)^(n(n−1)/2) · Res(f, f′) / lc(f)`.
pub fn discriminant(f: &IntPoly) -> Result<Rational> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::Domain("discriminant of a constant polynomial".into())),
    };
    let res = resultant(f, &f.derivative())?;
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -Integer::one() } else { Integer::one() };
    Ok(Rational::new(sign * res, f.leading()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn p17() -> IntPoly {
        p(&[289, -136, 40, -8, 1])
    }

    #[test]
    fn ring_basics() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p17().derivative(), p(&[-136, 80, -24, 4]));
        assert_eq!(p17().eval(&0.into()), 289.into());
        assert_eq!(p(&[0, 0, 0]), IntPoly::zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(
            p(&[-1, 0, 1]).eval_rational(&Rational::new(1.into(), 2.into())),
            Rational::new((-3).into(), 4.into())
        );
    }

    #[test]
    fn display_form() {
        assert_eq!(alloc::format!("{}", p17()), "x^4 - 8x^3 + 40x^2 - 136x + 289");
        assert_eq!(alloc::format!("{}", p(&[-1, 0, -1])), "-x^2 - 1");
        assert_eq!(alloc::format!("{}", IntPoly::zero()), "0");
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[1, 0, 1])).unwrap(), 5.into());
        assert_eq!(resultant(&p(&[-10, 0, 1]), &p(&[-10, 0, 1])).unwrap(), 0.into());
        assert!(resultant(&IntPoly::zero(), &p(&[1, 1])).is_err());
        assert_eq!(resultant(&p(&[3]), &p(&[1, 1])).unwrap(), 3.into());
    }

    #[test]
    fn discriminant_examples() {
        // x² − bx + c → b² − 4c
        assert_eq!(discriminant(&p(&[6, -5, 1])).unwrap(), Rational::from_integer(1.into()));
        assert_eq!(discriminant(&p(&[6, -1, 1])).unwrap(), Rational::from_integer((-23).into()));
        assert_eq!(discriminant(&p(&[-6, 11, -6, 1])).unwrap(), Rational::from_integer(4.into()));
        assert!(discriminant(&p(&[7])).is_err());
        // non-monic: disc(2x² + 3x + 1) = 9 − 8
        assert_eq!(discriminant(&p(&[1, 3, 2])).unwrap(), Rational::from_integer(1.into()));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[1, 0, 1]);
        let b = p(&[-2, 1]);
        let f = &(&a * &a) * &b;
        assert_eq!(f.squarefree_part(), &a * &b);
        assert_eq!(f.gcd(&f.derivative()), a);
        assert_eq!(p(&[4, 8]).gcd(&p(&[6, 12])), p(&[2, 4]));
        assert_eq!(f.div_exact(&b).unwrap(), &a * &a);
        assert!(f.div_exact(&p(&[1, 1])).is_none());
        assert!(p(&[1, 2]).div_exact(&p(&[0, 2])).is_none());
    }

    #[test]
    fn bareiss_needs_row_swap() {
        let m: Vec<Vec<Integer>> = [[0, 1, 2], [3, 4, 5], [6, 7, 9]]
            .iter()
            .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
            .collect();
        // expansion along the first row: −1·(27 − 30) + 2·(21 − 24)
        assert_eq!(determinant(m), Integer::from(-3));
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..10, 1..=max_deg + 1)
            .prop_map(|c| IntPoly::from_i64s(&c))
            .prop_filter("nonzero", |f| !f.is_zero())
    }

    proptest! {
        #[test]
        fn resultant_swap_sign(f in small_poly(4), g in small_poly(4)) {
            let m = f.degree().unwrap();
            let n = g.degree().unwrap();
            let mut rg = resultant(&g, &f).unwrap();
            if (m * n) % 2 == 1 {
                rg = -rg;
            }
            prop_assert_eq!(resultant(&f, &g).unwrap(), rg);
        }

        #[test]
        fn resultant_against_root_product(roots in prop::collection::vec(-6i64..7, 1..4), g in small_poly(3)) {
            // Res(∏(x − rᵢ), g) = ∏ g(rᵢ)
            let f = roots.iter().fold(IntPoly::one(), |acc, &r| &acc * &p(&[-r, 1]));
            let expect = roots.iter().fold(Integer::one(), |acc, &r| acc * g.eval(&r.into()));
            prop_assert_eq!(resultant(&f, &g).unwrap(), expect);
        }

        #[test]
        fn discriminant_against_root_differences(roots in prop::collection::vec(-8i64..9, 1..=4)) {
            let f = roots.iter().fold(IntPoly::one(), |acc, &r| &acc * &p(&[-r, 1]));
            let mut expect = Integer::one();
            for i in 0..roots.len() {
                for j in i + 1..roots.len() {
                    let d = Integer::from(roots[i] - roots[j]);
                    expect *= &d * &d;
                }
            }
            prop_assert_eq!(discriminant(&f).unwrap(), Rational::from_integer(expect));
        }

        #[test]
        fn gcd_divides_both(f in small_poly(3), g in small_poly(3), h in small_poly(2)) {
            let a = &f * &h;
            let b = &g * &h;
            let d = a.gcd(&b);
            prop_assert!(a.div_exact(&d).is_some());
            prop_assert!(b.div_exact(&d).is_some());
            prop_assert!(d.div_exact(&h.primitive_part()).is_some());
        }
    }
}
