use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::One;

use super::{class_of, FracIdeal, IdealClass, QuadOrder};
use crate::error::{Error, Result};
use crate::exact::{is_prime, Integer};

/// Largest `|disc|` accepted by [`class_group`] unless the caller overrides it.
pub const DEFAULT_DISC_BOUND: u64 = 1_000_000;

// π² > 98696/10000, so this rational bound never undercounts Minkowski primes
const PI_SQUARED_LOWER: (u64, u64) = (98_696, 10_000);

/// The class group of a quadratic maximal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup {
    pub order: QuadOrder,
    /// Invariant factors `n₁ ≥ n₂ ≥ …` with `n_{i+1} | n_i`; empty when trivial.
    pub factors: Vec<u64>,
    /// One class per factor; class `i` has order `factors[i]` and together
    /// they generate the group.
    pub generators: Vec<IdealClass>,
    /// Primes up to the Minkowski bound that were used as generators.
    pub minkowski_primes: Vec<u64>,
    /// Every class, ascending by canonical representative.
    pub classes: Vec<IdealClass>,
}

impl ClassGroup {
    pub fn class_number(&self) -> u64 {
        self.factors.iter().product()
    }
}

fn minkowski_primes(order: &QuadOrder) -> Vec<u64> {
    let disc = order.discriminant().unsigned_abs();
    let within = |p: u64| -> bool {
        if order.is_real() {
            // p ≤ √D / 2
            4 * p * p <= disc
        } else {
            // p ≤ (2/π)·√|D|
            (p * p) as u128 * PI_SQUARED_LOWER.0 as u128 <= 4 * disc as u128 * PI_SQUARED_LOWER.1 as u128
        }
    };
    (2u64..).take_while(|&p| within(p)).filter(|&p| is_prime(p)).collect()
}

/// The prime ideals `(p, b + ω)` above a rational prime; empty when `p` is inert.
pub(crate) fn primes_above(order: &QuadOrder, p: u64) -> Vec<FracIdeal> {
    let pz = Integer::from(p);
    (0..p)
        .map(Integer::from)
        .filter(|b| order.norm_coords(b, &Integer::one()).is_multiple_of(&pz))
        .map(|b| FracIdeal::new(*order, pz.clone(), b, Integer::one()).expect("p divides N(b + ω)"))
        .collect()
}

/// Class group of `order`, by closing the classes of the prime ideals below
/// the Minkowski bound under multiplication.
pub fn class_group(order: &QuadOrder, disc_bound: u64) -> Result<ClassGroup> {
    let disc = order.discriminant().unsigned_abs();
    if disc > disc_bound {
        return Err(Error::Resource(format!("|disc| = {disc} exceeds the configured bound {disc_bound}")));
    }
    let primes = minkowski_primes(order);
    let mut gens: Vec<IdealClass> = Vec::new();
    for &p in &primes {
        for ideal in primes_above(order, p) {
            let c = class_of(&ideal);
            if !c.is_trivial() && !gens.contains(&c) {
                gens.push(c);
            }
        }
    }

    let identity = IdealClass::identity(*order);
    let mut seen: BTreeSet<IdealClass> = BTreeSet::from([identity.clone()]);
    let mut frontier = vec![identity.clone()];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.mul(g)?;
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let classes: Vec<IdealClass> = seen.into_iter().collect();
    let (factors, generators) = invariant_factors(&classes, &identity)?;
    Ok(ClassGroup { order: *order, factors, generators, minkowski_primes: primes, classes })
}

// Greedy decomposition: an element of maximal order in G/H generates a
// direct summand; lift it to an element of the same order in G.
fn invariant_factors(classes: &[IdealClass], identity: &IdealClass) -> Result<(Vec<u64>, Vec<IdealClass>)> {
    let h = classes.len();
    let mut subgroup: BTreeSet<IdealClass> = BTreeSet::from([identity.clone()]);
    let mut factors = Vec::new();
    let mut generators = Vec::new();
    // memoise products with a fixed element to keep the quotient walk cheap
    let mut table: BTreeMap<(IdealClass, IdealClass), IdealClass> = BTreeMap::new();
    let mut mul = |x: &IdealClass, y: &IdealClass| -> Result<IdealClass> {
        let key = if x <= y { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
        if let Some(z) = table.get(&key) {
            return Ok(z.clone());
        }
        let z = x.mul(y)?;
        table.insert(key, z.clone());
        Ok(z)
    };

    while subgroup.len() < h {
        let mut best: Option<(u64, IdealClass)> = None;
        for g in classes.iter().filter(|g| !subgroup.contains(*g)) {
            let mut k = 1u64;
            let mut acc = g.clone();
            while !subgroup.contains(&acc) {
                acc = mul(&acc, g)?;
                k += 1;
            }
            if best.as_ref().is_none_or(|(bk, _)| k > *bk) {
                best = Some((k, g.clone()));
            }
        }
        let (k, g) = best.expect("a class outside the subgroup exists");
        let mut lifted = None;
        for s in &subgroup {
            let cand = mul(&g, s)?;
            if cand.multiplicative_order() == k {
                lifted = Some(cand);
                break;
            }
        }
        let g = lifted.expect("a direct summand complement exists");
        let mut grown = BTreeSet::new();
        let mut power = identity.clone();
        for _ in 0..k {
            for s in &subgroup {
                grown.insert(mul(s, &power)?);
            }
            power = mul(&power, &g)?;
        }
        subgroup = grown;
        factors.push(k);
        generators.push(g);
    }
    Ok((factors, generators))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::maximal_order;

    fn group(d: i64) -> ClassGroup {
        class_group(&maximal_order(d).unwrap(), DEFAULT_DISC_BOUND).unwrap()
    }

    #[test]
    fn class_number_two_for_sqrt10() {
        let g = group(10);
        assert_eq!(g.factors, [2]);
        assert_eq!(g.class_number(), 2);
        assert_eq!(g.minkowski_primes, [2, 3]);
        assert_eq!(g.generators[0].representative().a(), &Integer::from(2));
    }

    #[test]
    fn small_examples() {
        let g = group(2);
        assert!(g.factors.is_empty());
        assert!(g.minkowski_primes.is_empty());
        assert_eq!(g.class_number(), 1);
        assert_eq!(group(-5).factors, [2]);
        assert_eq!(group(-1).class_number(), 1);
        assert_eq!(group(-23).factors, [3]);
        assert_eq!(group(79).factors, [3]);
        // Q(√−21): Z/2 × Z/2; Q(√−56·…) style non-cyclic check
        assert_eq!(group(-21).factors, [2, 2]);
        assert_eq!(group(-14).factors, [4]);
    }

    #[test]
    fn resource_bound() {
        let o = maximal_order(-1_000_003).unwrap();
        assert!(matches!(class_group(&o, DEFAULT_DISC_BOUND), Err(Error::Resource(_))));
        assert!(class_group(&maximal_order(10).unwrap(), 39).is_err());
    }

    #[test]
    fn generators_have_stated_orders() {
        for d in [-21, -14, -65, -30, 130, 210] {
            let g = group(d);
            for (c, &k) in g.generators.iter().zip(&g.factors) {
                assert_eq!(c.multiplicative_order(), k, "d = {d}");
            }
            for w in g.factors.windows(2) {
                assert_eq!(w[0] % w[1], 0, "d = {d}");
            }
            assert_eq!(g.classes.len() as u64, g.class_number());
        }
    }
}
