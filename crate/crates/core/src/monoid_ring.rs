//! Integer monoid rings `Z[M]` over two commutative monoids: isomorphism
//! classes of abelian varieties built on a fixed base (under product), and
//! free commutative monoids on named generators.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Integer;
use crate::order::QuadOrder;
use crate::steinitz::{tensor_av, AVClass, BaseTag, ModuleClass};

/// Which monoid a ring element lives over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monoid {
    /// Classes `M ⊗_O A` for the given base `A` and `O = End(A)`.
    AbelianVarieties { base: BaseTag, order: QuadOrder },
    /// Free commutative monoid on string generators.
    Free,
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monoid::AbelianVarieties { base, order } => write!(f, "AV({base}, {order})"),
            Monoid::Free => f.write_str("free monoid"),
        }
    }
}

/// A monomial `g₁^e₁ ⋯ gₖ^eₖ`, exponents positive.
///
/// Ordered lexicographically on exponent vectors with generators sorted by
/// name, which is compatible with multiplication.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn generator(name: &str) -> Self {
        Monomial([(name.into(), 1)].into_iter().collect())
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0.get(name).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (g, e) in &other.0 {
            *out.entry(g.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let names: alloc::collections::BTreeSet<&String> = self.0.keys().chain(other.0.keys()).collect();
        names
            .into_iter()
            .map(|g| self.exponent(g).cmp(&other.exponent(g)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if *e == 1 { write!(f, "{g}")? } else { write!(f, "{g}^{e}")? }
        }
        Ok(())
    }
}

/// A basis element of a monoid ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidElem {
    Av(AVClass),
    Free(Monomial),
}

impl MonoidElem {
    pub fn monoid(&self) -> Monoid {
        match self {
            MonoidElem::Av(x) => Monoid::AbelianVarieties { base: x.base().clone(), order: x.module().order() },
            MonoidElem::Free(_) => Monoid::Free,
        }
    }

    pub fn identity(monoid: &Monoid) -> MonoidElem {
        match monoid {
            Monoid::AbelianVarieties { base, order } => MonoidElem::Av(tensor_av(&ModuleClass::zero(*order), base)),
            Monoid::Free => MonoidElem::Free(Monomial::one()),
        }
    }

    pub fn mul(&self, other: &MonoidElem) -> Result<MonoidElem> {
        match (self, other) {
            (MonoidElem::Av(x), MonoidElem::Av(y)) => Ok(MonoidElem::Av(x.product(y)?)),
            (MonoidElem::Free(x), MonoidElem::Free(y)) => Ok(MonoidElem::Free(x.mul(y))),
            _ => Err(mismatch(&self.monoid(), &other.monoid())),
        }
    }
}

impl fmt::Display for MonoidElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidElem::Av(x) => write!(f, "{}", x.module()),
            MonoidElem::Free(m) => write!(f, "{m}"),
        }
    }
}

fn mismatch(a: &Monoid, b: &Monoid) -> Error {
    Error::ParameterMismatch(format!("elements of Z[{a}] and Z[{b}] cannot be combined"))
}

/// `Σ n_m·e_m` with nonzero coefficients, kept in a sorted map so that equal
/// elements have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidRingElement {
    monoid: Monoid,
    terms: BTreeMap<MonoidElem, Integer>,
}

/// Operation selector for [`MonoidRingElement::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Neg,
    Mul,
    Eq,
    IsZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingValue {
    Element(MonoidRingElement),
    Bool(bool),
}

impl MonoidRingElement {
    pub fn zero(monoid: Monoid) -> Self {
        MonoidRingElement { monoid, terms: BTreeMap::new() }
    }

    pub fn one(monoid: Monoid) -> Self {
        Self::basis(MonoidElem::identity(&monoid))
    }

    /// `e_m`.
    pub fn basis(m: MonoidElem) -> Self {
        Self::from_terms(m.monoid(), [(m, Integer::one())]).expect("single term")
    }

    pub fn from_terms(monoid: Monoid, terms: impl IntoIterator<Item = (MonoidElem, Integer)>) -> Result<Self> {
        let mut out = Self::zero(monoid);
        for (m, n) in terms {
            if m.monoid() != out.monoid {
                return Err(mismatch(&out.monoid, &m.monoid()));
            }
            out.accumulate(m, n);
        }
        Ok(out)
    }

    fn accumulate(&mut self, m: MonoidElem, n: Integer) {
        let slot = self.terms.entry(m.clone()).or_insert_with(Integer::zero);
        *slot += n;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonoidElem, &Integer)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &MonoidElem) -> Integer {
        self.terms.get(m).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest basis element with nonzero coefficient.
    pub fn leading(&self) -> Option<(&MonoidElem, &Integer)> {
        self.terms.iter().next_back()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.monoid != other.monoid {
            return Err(mismatch(&self.monoid, &other.monoid));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, n) in &other.terms {
            out.accumulate(m.clone(), n.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        MonoidRingElement {
            monoid: self.monoid.clone(),
            terms: self.terms.iter().map(|(m, n)| (m.clone(), -n)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.monoid.clone());
        for (m1, n1) in &self.terms {
            for (m2, n2) in &other.terms {
                out.accumulate(m1.mul(m2)?, n1 * n2);
            }
        }
        Ok(out)
    }

    /// Equality that refuses to compare elements of different rings.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.terms == other.terms)
    }

    pub fn apply(op: RingOp, x: &Self, y: Option<&Self>) -> Result<RingValue> {
        let need = || y.ok_or_else(|| Error::Domain(format!("{op:?} needs a second operand")));
        Ok(match op {
            RingOp::Add => RingValue::Element(x.add(need()?)?),
            RingOp::Neg => RingValue::Element(x.neg()),
            RingOp::Mul => RingValue::Element(x.mul(need()?)?),
            RingOp::Eq => RingValue::Bool(x.equals(need()?)?),
            RingOp::IsZero => RingValue::Bool(x.is_zero()),
        })
    }
}

impl fmt::Display for MonoidRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, n)) in self.terms.iter().enumerate() {
            let sign = if n.is_negative() { "-" } else { "+" };
            match (i, n.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let k = n.abs();
            if !k.is_one() {
                write!(f, "{k}·")?;
            }
            write!(f, "e{m}")?;
        }
        Ok(())
    }
}

/// One factor of a formal product of varieties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormalFactor {
    Abelian(AVClass),
    /// `Pⁿ`.
    ProjectiveSpace(u32),
    Other(String),
}

/// Basis element of `Z[AV]` for the Albanese variety of a product.
///
/// Projective spaces have trivial Albanese variety, abelian varieties are
/// their own, and the Albanese functor commutes with products.
pub fn albanese_image(base: &BaseTag, order: QuadOrder, factors: &[FormalFactor]) -> Result<MonoidRingElement> {
    let mut acc = tensor_av(&ModuleClass::zero(order), base);
    for f in factors {
        match f {
            FormalFactor::Abelian(x) => acc = acc.product(x)?,
            FormalFactor::ProjectiveSpace(_) => {}
            FormalFactor::Other(name) => {
                return Err(Error::Domain(format!("no Albanese rule for the factor {name}")));
            }
        }
    }
    Ok(MonoidRingElement::basis(MonoidElem::Av(acc)))
}

/// Outcome of [`zero_divisor_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroDivisorOutcome {
    Witness { x: MonoidRingElement, y: MonoidRingElement, product: MonoidRingElement },
    Refused(String),
}

impl ZeroDivisorOutcome {
    pub fn is_witness(&self) -> bool {
        matches!(self, ZeroDivisorOutcome::Witness { .. })
    }
}

/// Confirm that `x ≠ 0`, `y ≠ 0` and `x·y = 0`.
pub fn zero_divisor_witness(x: &MonoidRingElement, y: &MonoidRingElement) -> ZeroDivisorOutcome {
    if x.is_zero() {
        return ZeroDivisorOutcome::Refused("first factor is zero".into());
    }
    if y.is_zero() {
        return ZeroDivisorOutcome::Refused("second factor is zero".into());
    }
    match x.mul(y) {
        Err(e) => ZeroDivisorOutcome::Refused(format!("{e}")),
        Ok(p) if !p.is_zero() => ZeroDivisorOutcome::Refused(format!("product is nonzero: {p}")),
        Ok(p) => ZeroDivisorOutcome::Witness { x: x.clone(), y: y.clone(), product: p },
    }
}

/// `[A] ± [B]` style elements: `Σ sign·e_{T(M)}`.
pub fn av_combination(base: &BaseTag, terms: &[(ModuleClass, i64)]) -> Result<MonoidRingElement> {
    let order = terms
        .first()
        .map(|(m, _)| m.order())
        .ok_or_else(|| Error::Domain("empty combination has no ring".into()))?;
    MonoidRingElement::from_terms(
        Monoid::AbelianVarieties { base: base.clone(), order },
        terms.iter().map(|(m, n)| (MonoidElem::Av(tensor_av(m, base)), Integer::from(*n))),
    )
}

/// Terms of a free-monoid element, for building test data.
pub fn free_element(terms: &[(&[(&str, u32)], i64)]) -> MonoidRingElement {
    let built: Vec<(MonoidElem, Integer)> = terms
        .iter()
        .map(|(mono, n)| {
            let m = mono
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(g, e)| (String::from(*g), *e))
                .collect();
            (MonoidElem::Free(Monomial(m)), Integer::from(*n))
        })
        .collect();
    MonoidRingElement::from_terms(Monoid::Free, built).expect("all free")
}
