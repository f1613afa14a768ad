use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::QuadOrder;
use crate::error::{Error, Result};
use crate::exact::{Integer, QuadElement, Rational};

/// A nonzero fractional ideal `s · (Z·a + Z·(b + ω))` of a quadratic maximal
/// order.
///
/// The scale `s` is a positive rational, `a > 0`, `0 ≤ b < a`, and `a`
/// divides `N(b + ω)`. The triple is unique per ideal, so derived equality is
/// ideal equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FracIdeal {
    order: QuadOrder,
    scale: Rational,
    a: Integer,
    b: Integer,
}

impl FracIdeal {
    /// `(1/q) · (Z·a + Z·(b + ω))`; `b` is reduced modulo `a`.
    pub fn new(order: QuadOrder, a: Integer, b: Integer, q: Integer) -> Result<Self> {
        if !a.is_positive() || !q.is_positive() {
            return Err(Error::Domain(format!("ideal needs a > 0 and q > 0, got a = {a}, q = {q}")));
        }
        let b = b.mod_floor(&a);
        if !order.norm_coords(&b, &Integer::one()).is_multiple_of(&a) {
            return Err(Error::Domain(format!(
                "Z·{a} + Z·({b} + ω) is not an ideal of {order}: {a} does not divide N({b} + ω)"
            )));
        }
        Ok(FracIdeal { order, scale: Rational::new(Integer::one(), q), a, b })
    }

    /// The unit ideal `O`.
    pub fn unit(order: QuadOrder) -> Self {
        FracIdeal { order, scale: Rational::one(), a: Integer::one(), b: Integer::zero() }
    }

    /// The principal ideal `α·O`.
    pub fn principal(order: QuadOrder, alpha: &QuadElement) -> Result<Self> {
        Self::generated_by(order, core::slice::from_ref(alpha))
    }

    /// The `O`-module generated by the given elements.
    pub fn generated_by(order: QuadOrder, gens: &[QuadElement]) -> Result<Self> {
        let mut coords = Vec::with_capacity(gens.len());
        for g in gens {
            coords.push(order.coords(g)?);
        }
        from_rational_module_generators(order, coords)
    }

    pub fn order(&self) -> QuadOrder {
        self.order
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }

    pub fn b(&self) -> &Integer {
        &self.b
    }

    /// Denominator of the scale.
    pub fn q(&self) -> &Integer {
        self.scale.denom()
    }

    pub fn is_integral(&self) -> bool {
        self.scale.is_integer()
    }

    /// The primitive lattice `Z·a + Z·(b + ω)` with scale one.
    pub fn primitive_part(&self) -> FracIdeal {
        FracIdeal { scale: Rational::one(), ..self.clone() }
    }

    /// Absolute norm `s² · a`.
    pub fn norm(&self) -> Rational {
        &self.scale * &self.scale * Rational::from_integer(self.a.clone())
    }

    pub fn mul(&self, other: &FracIdeal) -> Result<FracIdeal> {
        self.order.check_same(&other.order)?;
        let o = &self.order;
        let mine = [(self.a.clone(), Integer::zero()), (self.b.clone(), Integer::one())];
        let theirs = [(other.a.clone(), Integer::zero()), (other.b.clone(), Integer::one())];
        let mut gens = Vec::with_capacity(4);
        for p in &mine {
            for q in &theirs {
                gens.push(o.mul_coords(p, q));
            }
        }
        let (n, u0, g) = hnf2(gens);
        let mut out = primitive_from_hnf(*o, n, u0, g);
        out.scale = &out.scale * &self.scale * &other.scale;
        Ok(out)
    }

    /// `α · I`.
    pub fn mul_element(&self, alpha: &QuadElement) -> Result<FracIdeal> {
        self.mul(&FracIdeal::principal(self.order, alpha)?)
    }

    /// Galois conjugate ideal; `I · conj(I) = (N(I))`.
    pub fn conj(&self) -> FracIdeal {
        let b = (-&self.b - self.order.t()).mod_floor(&self.a);
        FracIdeal { b, ..self.clone() }
    }

    /// `I⁻¹ = conj(I) / N(I)`.
    pub fn inverse(&self) -> FracIdeal {
        let mut inv = self.conj();
        inv.scale = &inv.scale / self.norm();
        inv
    }

    pub fn pow(&self, e: u32) -> FracIdeal {
        let mut acc = FracIdeal::unit(self.order);
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    pub fn contains(&self, alpha: &QuadElement) -> Result<bool> {
        let (x, y) = self.order.coords(alpha)?;
        let (x, y) = (x / &self.scale, y / &self.scale);
        if !x.is_integer() || !y.is_integer() {
            return Ok(false);
        }
        let r = x.to_integer() - y.to_integer() * &self.b;
        Ok(r.is_multiple_of(&self.a))
    }

    /// The Z-basis `(s·a, s·(b + ω))` as field elements.
    pub fn z_basis(&self) -> [QuadElement; 2] {
        let s = &self.scale;
        [
            self.order.element(&(Rational::from_integer(self.a.clone()) * s), &Rational::zero()),
            self.order.element(&(Rational::from_integer(self.b.clone()) * s), s),
        ]
    }
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_one() {
            return write!(f, "({})", self.scale);
        }
        let omega = if self.order.t().is_zero() { format!("√{}", self.order.d()) } else { "ω".into() };
        let gen2 = if self.b.is_zero() { omega } else { format!("{} + {omega}", self.b) };
        if self.scale.is_one() {
            write!(f, "({}, {gen2})", self.a)
        } else {
            write!(f, "{}·({}, {gen2})", self.scale, self.a)
        }
    }
}

fn from_rational_module_generators(order: QuadOrder, gens: Vec<(Rational, Rational)>) -> Result<FracIdeal> {
    if gens.iter().all(|(x, y)| x.is_zero() && y.is_zero()) {
        return Err(Error::Domain("the zero ideal is not a fractional ideal".into()));
    }
    let lcm = gens
        .iter()
        .fold(Integer::one(), |l, (x, y)| l.lcm(x.denom()).lcm(y.denom()));
    let omega = (Integer::zero(), Integer::one());
    let mut zgens = Vec::with_capacity(2 * gens.len());
    for (x, y) in &gens {
        let p = ((x * Rational::from_integer(lcm.clone())).to_integer(), (y * Rational::from_integer(lcm.clone())).to_integer());
        zgens.push(order.mul_coords(&p, &omega));
        zgens.push(p);
    }
    let (n, u0, g) = hnf2(zgens);
    let mut out = primitive_from_hnf(order, n, u0, g);
    out.scale /= Rational::from_integer(lcm);
    Ok(out)
}

// An O-submodule Z·n + Z·(u0 + g·ω) of O has g | n and g | u0; its
// primitive part is Z·(n/g) + Z·(u0/g + ω).
fn primitive_from_hnf(order: QuadOrder, n: Integer, u0: Integer, g: Integer) -> FracIdeal {
    debug_assert!(n.is_multiple_of(&g) && u0.is_multiple_of(&g));
    let a = &n / &g;
    let b = (&u0 / &g).mod_floor(&a);
    debug_assert!(order.norm_coords(&b, &Integer::one()).is_multiple_of(&a));
    FracIdeal { order, scale: Rational::from_integer(g), a, b }
}

/// Hermite normal form of a full-rank lattice in `Z²` given by generators
/// `(u, v)`: returns `(n, u0, g)` with lattice `Z·(n, 0) + Z·(u0, g)`,
/// `n > 0`, `g > 0`, `0 ≤ u0 < n`.
pub(crate) fn hnf2(gens: Vec<(Integer, Integer)>) -> (Integer, Integer, Integer) {
    let mut pivot: Option<(Integer, Integer)> = None;
    let mut n = Integer::zero();
    for (x, y) in gens {
        if y.is_zero() {
            n = n.gcd(&x);
            continue;
        }
        pivot = Some(match pivot {
            None => (x, y),
            Some((u, v)) => {
                let e = v.extended_gcd(&y);
                let g = e.gcd;
                let merged = (&e.x * &u + &e.y * &x, g.clone());
                let eliminated = (&y / &g) * &u - (&v / &g) * &x;
                n = n.gcd(&eliminated);
                merged
            }
        });
    }
    let (mut u0, mut g) = pivot.expect("lattice has full rank");
    if g.is_negative() {
        u0 = -u0;
        g = -g;
    }
    assert!(!n.is_zero(), "lattice has full rank");
    (n.clone(), u0.mod_floor(&n), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational_from_int;
    use crate::order::maximal_order;
    use proptest::prelude::*;

    fn z10() -> QuadOrder {
        maximal_order(10).unwrap()
    }

    fn ideal(o: QuadOrder, a: i64, b: i64) -> FracIdeal {
        FracIdeal::new(o, a.into(), b.into(), 1.into()).unwrap()
    }

    #[test]
    fn ramified_prime_squares_to_two() {
        let p2 = ideal(z10(), 2, 0);
        let two = FracIdeal::principal(z10(), &QuadElement::from_ints(10, 2, 0).unwrap()).unwrap();
        assert_eq!(p2.mul(&p2).unwrap(), two);
        assert_eq!(two.scale(), &rational_from_int(2));
        assert_eq!(two.a(), &Integer::one());
    }

    #[test]
    fn identity_and_norms() {
        let i = ideal(z10(), 3, 1);
        assert_eq!(i.mul(&FracIdeal::unit(z10())).unwrap(), i);
        assert_eq!(i.norm(), rational_from_int(3));
        assert_eq!(i.mul(&i.inverse()).unwrap(), FracIdeal::unit(z10()));
        assert_eq!(i.mul(&i.conj()).unwrap().norm(), rational_from_int(9));
        let half = FracIdeal::new(z10(), 2.into(), 0.into(), 2.into()).unwrap();
        assert_eq!(half.norm(), Rational::new(1.into(), 2.into()));
        assert!(!half.is_integral());
    }

    #[test]
    fn rejects_non_ideals_and_mixing() {
        assert!(FracIdeal::new(z10(), 3.into(), 0.into(), 1.into()).is_err());
        assert!(FracIdeal::new(z10(), 0.into(), 0.into(), 1.into()).is_err());
        assert!(FracIdeal::new(z10(), 2.into(), 0.into(), 0.into()).is_err());
        let other = FracIdeal::unit(maximal_order(-5).unwrap());
        assert!(matches!(ideal(z10(), 2, 0).mul(&other), Err(Error::ParameterMismatch(_))));
        assert!(FracIdeal::generated_by(z10(), &[QuadElement::zero(10).unwrap()]).is_err());
    }

    #[test]
    fn membership() {
        let i = ideal(z10(), 3, 1);
        assert!(i.contains(&QuadElement::from_ints(10, 1, 1).unwrap()).unwrap());
        assert!(i.contains(&QuadElement::from_ints(10, 3, 0).unwrap()).unwrap());
        assert!(!i.contains(&QuadElement::from_ints(10, 1, 0).unwrap()).unwrap());
        let o5 = maximal_order(5).unwrap();
        let p = ideal(o5, 5, 2);
        for g in p.z_basis() {
            assert!(p.contains(&g).unwrap());
        }
    }

    #[test]
    fn hnf_of_generators() {
        let g = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| (Integer::from(x), Integer::from(y))).collect();
        assert_eq!(hnf2(g(&[(4, 0), (1, 2), (3, 4)])), (Integer::from(1), Integer::from(0), Integer::from(2)));
        assert_eq!(hnf2(g(&[(8, 0), (3, 2)])), (Integer::from(8), Integer::from(3), Integer::from(2)));
        assert_eq!(hnf2(g(&[(6, 0), (0, -3), (5, 3)])), (Integer::from(1), Integer::from(0), Integer::from(3)));
    }

    fn order_strategy() -> impl Strategy<Value = QuadOrder> {
        prop::sample::select(alloc::vec![10i64, -5, 5, 2, -23, 13, 79, -3, -1, 30])
            .prop_map(|d| maximal_order(d).unwrap())
    }

    // random ideal: α·(p, r) for a small prime ideal and a random element α
    fn ideal_in(o: QuadOrder) -> impl Strategy<Value = FracIdeal> {
        (1i64..40, -20i64..20, -20i64..20, 1i64..5).prop_filter_map("zero or no ideal", move |(a, x, y, q)| {
            let b = (0..a).find(|&b| o.norm_coords(&b.into(), &Integer::one()).is_multiple_of(&a.into()))?;
            if x == 0 && y == 0 {
                return None;
            }
            let alpha = o.element(&Rational::new(x.into(), q.into()), &rational_from_int(y));
            FracIdeal::new(o, a.into(), b.into(), 1.into()).ok()?.mul_element(&alpha).ok()
        })
    }

    fn ideal_pair() -> impl Strategy<Value = (FracIdeal, FracIdeal)> {
        order_strategy().prop_flat_map(|o| (ideal_in(o), ideal_in(o)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn norm_is_multiplicative((i, j) in ideal_pair()) {
            prop_assert_eq!(i.mul(&j).unwrap().norm(), i.norm() * j.norm());
        }

        #[test]
        fn multiplication_commutes_and_contains_products((i, j) in ideal_pair()) {
            let ij = i.mul(&j).unwrap();
            prop_assert_eq!(&ij, &j.mul(&i).unwrap());
            for x in i.z_basis() {
                for y in j.z_basis() {
                    prop_assert!(ij.contains(&x.mul(&y).unwrap()).unwrap());
                }
            }
        }

        #[test]
        fn principal_norm_is_element_norm(o in order_strategy(), x in -30i64..30, y in -30i64..30) {
            prop_assume!(x != 0 || y != 0);
            let alpha = o.element(&rational_from_int(x), &rational_from_int(y));
            let i = FracIdeal::principal(o, &alpha).unwrap();
            prop_assert_eq!(i.norm(), alpha.norm().abs());
        }
    }
}
