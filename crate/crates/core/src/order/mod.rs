//! Maximal orders of quadratic fields: fundamental units, fractional ideals,
//! principality and class groups.

mod class_group;
mod forms;
mod ideal;

pub use class_group::{class_group, ClassGroup, DEFAULT_DISC_BOUND};
pub use forms::{class_of, is_principal, IdealClass, Principality};
pub use ideal::FracIdeal;

use alloc::format;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_squarefree, isqrt, rational_from_int, Integer, QuadElement, Rational};

/// The maximal order `Z[ω]` of `Q(√d)`.
///
/// `ω = √d` when `d ≢ 1 (mod 4)` and `ω = (1 + √d)/2` otherwise, so that
/// `ω² = t·ω + n` with `(t, n) = (0, d)` or `(1, (d − 1)/4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadOrder {
    d: i64,
    disc: i64,
}

impl QuadOrder {
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    pub fn is_real(&self) -> bool {
        self.d > 0
    }

    /// Trace of `ω`.
    pub(crate) fn t(&self) -> Integer {
        if self.d.rem_euclid(4) == 1 { Integer::one() } else { Integer::zero() }
    }

    /// `ω² − t·ω`.
    pub(crate) fn n(&self) -> Integer {
        if self.d.rem_euclid(4) == 1 { Integer::from((self.d - 1) / 4) } else { Integer::from(self.d) }
    }

    /// `N(x + y·ω) = x² + t·x·y − n·y²`.
    pub(crate) fn norm_coords(&self, x: &Integer, y: &Integer) -> Integer {
        x * x + self.t() * x * y - self.n() * y * y
    }

    pub(crate) fn mul_coords(&self, p: &(Integer, Integer), q: &(Integer, Integer)) -> (Integer, Integer) {
        let yy = &p.1 * &q.1;
        (&p.0 * &q.0 + self.n() * &yy, &p.0 * &q.1 + &p.1 * &q.0 + self.t() * yy)
    }

    /// The generator `ω` as a field element.
    pub fn omega(&self) -> QuadElement {
        self.element(&Rational::zero(), &Rational::one())
    }

    /// `x + y·ω`.
    pub fn element(&self, x: &Rational, y: &Rational) -> QuadElement {
        let el = if self.t().is_zero() {
            QuadElement::new(self.d, x.clone(), y.clone())
        } else {
            let half = Rational::new(Integer::one(), Integer::from(2));
            QuadElement::new(self.d, x + y * &half, y * half)
        };
        el.expect("order parameter is validated")
    }

    pub(crate) fn element_int(&self, p: &(Integer, Integer)) -> QuadElement {
        self.element(&Rational::from_integer(p.0.clone()), &Rational::from_integer(p.1.clone()))
    }

    /// Coordinates of `α` in the basis `(1, ω)`.
    pub fn coords(&self, alpha: &QuadElement) -> Result<(Rational, Rational)> {
        if alpha.d() != self.d {
            return Err(Error::ParameterMismatch(format!(
                "element of Q(√{}) used with an order of Q(√{})",
                alpha.d(),
                self.d
            )));
        }
        Ok(if self.t().is_zero() {
            (alpha.a().clone(), alpha.b().clone())
        } else {
            // √d = 2ω − 1
            (alpha.a() - alpha.b(), alpha.b() * rational_from_int(2))
        })
    }

    pub fn contains(&self, alpha: &QuadElement) -> Result<bool> {
        let (x, y) = self.coords(alpha)?;
        Ok(x.is_integer() && y.is_integer())
    }

    pub(crate) fn check_same(&self, other: &QuadOrder) -> Result<()> {
        if self != other {
            return Err(Error::ParameterMismatch(format!("orders of Q(√{}) and Q(√{})", self.d, other.d)));
        }
        Ok(())
    }
}

impl fmt::Display for QuadOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t().is_zero() {
            write!(f, "Z[√{}]", self.d)
        } else {
            write!(f, "Z[(1+√{})/2]", self.d)
        }
    }
}

/// The maximal order of `Q(√d)`.
pub fn maximal_order(d: i64) -> Result<QuadOrder> {
    if d == 0 || d == 1 || !is_squarefree(d) {
        return Err(Error::Domain(format!("{d} is not a squarefree integer other than 0, 1")));
    }
    let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    Ok(QuadOrder { d, disc })
}

/// `⌊(p + √d)/q⌋` for `q ≠ 0` and nonsquare `d > 0`.
fn floor_quadratic(p: &Integer, q: &Integer, s: &Integer) -> Integer {
    if q.is_positive() {
        (p + s).div_floor(q)
    } else {
        // (p + √d)/q = (−p − √d)/|q| and −√d lies strictly inside (−s − 1, −s)
        (-p - s - Integer::one()).div_floor(&q.abs())
    }
}

/// Smallest unit `ε > 1` of a real quadratic maximal order, from the
/// continued-fraction expansion of `ω`.
pub fn fundamental_unit(order: &QuadOrder) -> Result<QuadElement> {
    if !order.is_real() {
        return Err(Error::Domain(format!("{order} is imaginary and has no fundamental unit")));
    }
    let d = Integer::from(order.d);
    let s = isqrt(&d);
    // ω = (p0 + √d)/q0
    let (p0, q0) = if order.t().is_zero() {
        (Integer::zero(), Integer::one())
    } else {
        (Integer::one(), Integer::from(2))
    };
    let (mut p, mut q) = (p0, q0.clone());
    // convergents h/k
    let (mut h_prev, mut h) = (Integer::zero(), Integer::one());
    let (mut k_prev, mut k) = (Integer::one(), Integer::zero());
    let omega_bar = order.omega().conj();
    loop {
        let a = floor_quadratic(&p, &q, &s);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = core::mem::replace(&mut h, h_next);
        k_prev = core::mem::replace(&mut k, k_next);
        p = &a * &q - &p;
        q = (&d - &p * &p) / &q;
        if q == q0 {
            // the complete quotient is ω + m again: h − k·ω̄ is a unit
            let eps = QuadElement::from_rational(order.d, Rational::from_integer(h.clone()))?
                .sub(&omega_bar.scale(&Rational::from_integer(k.clone())))?;
            if eps.norm().abs().is_one() {
                return Ok(eps);
            }
        }
    }
}
