//! Binary quadratic forms attached to ideal bases, reduction, and the
//! principality and class-equivalence tests built on them.
//!
//! A primitive ideal `Z·a + Z·(b + ω)` with basis `(β₁, β₂)` carries the form
//! `N(x·β₁ + y·β₂)/a = a·x² + (2b + t)·x·y + c·y²` of discriminant `D`.
//! Reduction steps are unimodular changes of basis, so the ideal basis is
//! carried along and a generator falls out when the principal form appears.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{FracIdeal, QuadOrder};
use crate::error::Result;
use crate::exact::{isqrt, Integer, QuadElement};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Form {
    a: Integer,
    b: Integer,
    c: Integer,
}

type Coords = (Integer, Integer);

#[derive(Debug, Clone)]
struct Tracked {
    form: Form,
    basis: [Coords; 2],
}

fn lin(p: &Coords, k: &Integer, q: &Coords) -> Coords {
    (&p.0 + k * &q.0, &p.1 + k * &q.1)
}

impl Tracked {
    fn of_primitive(ideal: &FracIdeal) -> Tracked {
        let o = ideal.order();
        let (a, b) = (ideal.a().clone(), ideal.b().clone());
        let c = o.norm_coords(&b, &Integer::one()) / &a;
        Tracked {
            form: Form { b: Integer::from(2) * &b + o.t(), a: a.clone(), c },
            basis: [(a, Integer::zero()), (b, Integer::one())],
        }
    }

    // β₂ ← β₂ + k·β₁ : (a, b, c) ↦ (a, b + 2ak, ak² + bk + c)
    fn translate(&mut self, k: &Integer) {
        let Form { a, b, c } = &self.form;
        self.form = Form {
            a: a.clone(),
            b: b + Integer::from(2) * a * k,
            c: a * k * k + b * k + c,
        };
        self.basis[1] = lin(&self.basis[1], k, &self.basis[0]);
    }

    // (β₁, β₂) ← (β₂, −β₁) : (a, b, c) ↦ (c, −b, a)
    fn swap(&mut self) {
        let Form { a, b, c } = &self.form;
        self.form = Form { a: c.clone(), b: -b, c: a.clone() };
        let [b1, b2] = core::mem::take(&mut self.basis);
        self.basis = [b2, (-b1.0, -b1.1)];
    }
}

/// Gauss reduction of a positive definite form.
fn reduce_definite(t: &mut Tracked) {
    loop {
        let a = t.form.a.clone();
        if t.form.b <= -&a || t.form.b > a {
            let two_a = Integer::from(2) * &a;
            let k = (&a - &t.form.b).div_floor(&two_a);
            t.translate(&k);
        }
        if t.form.a > t.form.c || (t.form.a == t.form.c && t.form.b.is_negative()) {
            t.swap();
            continue;
        }
        break;
    }
}

struct Indefinite {
    disc: Integer,
    root: Integer,
}

impl Indefinite {
    fn new(order: &QuadOrder) -> Self {
        let disc = Integer::from(order.discriminant());
        let root = isqrt(&disc);
        Indefinite { disc, root }
    }

    /// `0 < b < √D` and `√D − b < 2|a| < √D + b`.
    fn is_reduced(&self, f: &Form) -> bool {
        let two_a = Integer::from(2) * f.a.abs();
        f.b.is_positive()
            && f.b <= self.root
            && (&two_a + &f.b) * (&two_a + &f.b) > self.disc
            && &two_a - &f.b <= self.root
    }

    // r ≡ bb (mod 2|c|), normalised into (−|c|, |c|] when |c| > √D and
    // into (√D − 2|c|, √D) otherwise.
    fn normalise(&self, bb: &Integer, c: &Integer) -> Integer {
        let m = Integer::from(2) * c.abs();
        if c * c > self.disc {
            let r = bb.mod_floor(&m);
            if r > c.abs() { r - m } else { r }
        } else {
            &self.root - (&self.root - bb).mod_floor(&m)
        }
    }

    // ρ: (β₁, β₂) ← (β₂, −β₁ + s·β₂), (a, b, c) ↦ (c, b', (b'² − D)/4c)
    fn rho(&self, t: &mut Tracked) {
        let Form { b, c, .. } = &t.form;
        let b_new = self.normalise(&-b, c);
        let s = (&b_new + b) / (Integer::from(2) * c);
        let c_new = (&b_new * &b_new - &self.disc) / (Integer::from(4) * c);
        t.form = Form { a: c.clone(), b: b_new, c: c_new };
        let [b1, b2] = core::mem::take(&mut t.basis);
        let neg_b1 = (-b1.0, -b1.1);
        t.basis = [b2.clone(), lin(&neg_b1, &s, &b2)];
    }

    fn reduce(&self, t: &mut Tracked) {
        while !self.is_reduced(&t.form) {
            self.rho(t);
        }
    }

    /// Reduce, then walk the full cycle of reduced forms.
    fn cycle(&self, mut t: Tracked) -> Vec<Tracked> {
        self.reduce(&mut t);
        let start = t.form.clone();
        let mut out = Vec::new();
        loop {
            out.push(t.clone());
            self.rho(&mut t);
            if t.form == start {
                return out;
            }
        }
    }
}

/// Outcome of [`is_principal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Principality {
    /// `I = (generator)`.
    Principal { generator: QuadElement },
    NonPrincipal,
}

impl Principality {
    pub fn is_principal(&self) -> bool {
        matches!(self, Principality::Principal { .. })
    }

    pub fn generator(&self) -> Option<&QuadElement> {
        match self {
            Principality::Principal { generator } => Some(generator),
            Principality::NonPrincipal => None,
        }
    }
}

/// Decide whether `I` is principal; when it is, return a generator.
///
/// Imaginary orders reduce the attached form and compare with the principal
/// form. Real orders walk the reduction cycle and look for a form with
/// leading coefficient `±1`, whose first basis vector then has norm `±N(I)`.
pub fn is_principal(ideal: &FracIdeal) -> Principality {
    let order = ideal.order();
    let to_generator = |p: &Coords| order.element_int(p).scale(ideal.scale());
    let t = Tracked::of_primitive(ideal);
    let hit = if order.is_real() {
        Indefinite::new(&order)
            .cycle(t)
            .into_iter()
            .find(|t| t.form.a.abs().is_one())
    } else {
        let mut t = t;
        reduce_definite(&mut t);
        t.form.a.is_one().then_some(t)
    };
    match hit {
        Some(t) => {
            let mut generator = to_generator(&t.basis[0]);
            if generator.real_sign() == Ok(core::cmp::Ordering::Less) {
                generator = generator.neg();
            }
            debug_assert_eq!(FracIdeal::principal(order, &generator).as_ref(), Ok(ideal));
            Principality::Principal { generator }
        }
        None => Principality::NonPrincipal,
    }
}

/// An element of the class group, stored as a canonical primitive ideal.
///
/// Imaginary orders use the ideal of the unique reduced form. Real orders
/// take the smallest `(a, b)` among the ideals of the reduced forms in the
/// cycles of `f` and `−f(x, −y)`, which together make up the wide class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealClass {
    order: QuadOrder,
    a: Integer,
    b: Integer,
}

impl IdealClass {
    pub fn identity(order: QuadOrder) -> Self {
        IdealClass { order, a: Integer::one(), b: Integer::zero() }
    }

    pub fn order(&self) -> QuadOrder {
        self.order
    }

    pub fn representative(&self) -> FracIdeal {
        FracIdeal::new(self.order, self.a.clone(), self.b.clone(), Integer::one())
            .expect("canonical representatives are ideals")
    }

    pub fn is_trivial(&self) -> bool {
        self.a.is_one()
    }

    pub fn mul(&self, other: &IdealClass) -> Result<IdealClass> {
        Ok(class_of(&self.representative().mul(&other.representative())?))
    }

    pub fn inverse(&self) -> IdealClass {
        class_of(&self.representative().conj())
    }

    pub fn pow(&self, e: u64) -> IdealClass {
        let mut acc = IdealClass::identity(self.order);
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Multiplicative order in the class group.
    pub fn multiplicative_order(&self) -> u64 {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_trivial() {
            acc = acc.mul(self).expect("same order");
            k += 1;
        }
        k
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative())
    }
}

fn ideal_of_form(order: &QuadOrder, f: &Form) -> (Integer, Integer) {
    let a = f.a.abs();
    let b = ((&f.b - order.t()) / Integer::from(2)).mod_floor(&a);
    (a, b)
}

/// The class of `I` in the class group of its order.
pub fn class_of(ideal: &FracIdeal) -> IdealClass {
    let order = ideal.order();
    let t = Tracked::of_primitive(ideal);
    let (a, b) = if order.is_real() {
        let ind = Indefinite::new(&order);
        let mut mirrored = t.clone();
        mirrored.form = Form { a: -&t.form.a, b: t.form.b.clone(), c: -&t.form.c };
        ind.cycle(t)
            .iter()
            .chain(ind.cycle(mirrored).iter())
            .map(|t| ideal_of_form(&order, &t.form))
            .min()
            .expect("cycles are nonempty")
    } else {
        let mut t = t;
        reduce_definite(&mut t);
        ideal_of_form(&order, &t.form)
    };
    IdealClass { order, a, b }
}
