use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{is_integer_square, positive_divisors, Integer, IntPoly};
use crate::error::{Error, Result};

/// Outcome of [`factor_quartic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuarticFactorization {
    /// Irreducible over `Q`; the record lists everything that was ruled out.
    Irreducible {
        /// Integer candidates for a root (all `±` divisors of the constant term).
        roots_tested: Vec<Integer>,
        /// Constant-term pairs `(b, e)` with `b·e = f(0)` tried for a split
        /// `(x² + ax + b)(x² + cx + e)`.
        pairs_tested: Vec<(Integer, Integer)>,
    },
    /// Irreducible monic factors with multiplicity; their product is the input.
    Factors(Vec<IntPoly>),
}

impl QuarticFactorization {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, QuarticFactorization::Irreducible { .. })
    }
}

/// Factor a monic integer quartic by the rational-root test followed by an
/// exhaustive search over monic quadratic pairs.
pub fn factor_quartic(f: &IntPoly) -> Result<QuarticFactorization> {
    if f.degree() != Some(4) {
        return Err(Error::Domain(alloc::format!("expected a quartic, got degree {:?}", f.degree())));
    }
    if !f.is_monic() {
        return Err(Error::Domain("quartic factorization needs a monic polynomial".into()));
    }

    let mut factors = Vec::new();
    let mut rest = f.clone();
    let mut roots_tested = Vec::new();
    while rest.degree().is_some_and(|d| d >= 1) {
        match integer_root(&rest, &mut roots_tested)? {
            Some(r) => {
                let lin = IntPoly::new(vec![-r, Integer::one()]);
                rest = rest.div_exact(&lin).expect("root gives a factor");
                factors.push(lin);
            }
            None => break,
        }
    }

    match rest.degree() {
        Some(0) => {}
        Some(4) => match quadratic_split(&rest)? {
            Ok((g, h)) => {
                factors.push(g);
                factors.push(h);
            }
            Err(pairs_tested) => {
                return Ok(QuarticFactorization::Irreducible { roots_tested, pairs_tested });
            }
        },
        // no rational root left, degree 1..=3 is irreducible
        _ => factors.push(rest),
    }
    factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    Ok(QuarticFactorization::Factors(factors))
}

fn integer_root(f: &IntPoly, tested: &mut Vec<Integer>) -> Result<Option<Integer>> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        tested.push(Integer::zero());
        return Ok(Some(Integer::zero()));
    }
    for d in positive_divisors(&c0)? {
        for r in [d.clone(), -d] {
            tested.push(r.clone());
            if f.eval(&r).is_zero() {
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

type Split = core::result::Result<(IntPoly, IntPoly), Vec<(Integer, Integer)>>;

// x⁴ + f3x³ + f2x² + f1x + f0 = (x² + ax + b)(x² + cx + e):
//   a + c = f3,  b + e + ac = f2,  ae + bc = f1,  be = f0
fn quadratic_split(f: &IntPoly) -> Result<Split> {
    let (f0, f1, f2, f3) = (f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3));
    let mut tried = Vec::new();
    for d in positive_divisors(&f0)? {
        for b in [d.clone(), -d.clone()] {
            let e = &f0 / &b;
            tried.push((b.clone(), e.clone()));
            for a in linear_candidates(&b, &e, &f1, &f2, &f3) {
                let c = &f3 - &a;
                if &b + &e + &a * &c == f2 && &a * &e + &b * &c == f1 {
                    let g = IntPoly::new(vec![b.clone(), a, Integer::one()]);
                    let h = IntPoly::new(vec![e.clone(), c, Integer::one()]);
                    return Ok(Ok((g, h)));
                }
            }
        }
    }
    Ok(Err(tried))
}

fn linear_candidates(b: &Integer, e: &Integer, f1: &Integer, f2: &Integer, f3: &Integer) -> Vec<Integer> {
    if b != e {
        // a(e − b) = f1 − b·f3
        let (q, r) = (f1 - b * f3).div_rem(&(e - b));
        return if r.is_zero() { vec![q] } else { vec![] };
    }
    if f1 != &(b * f3) {
        return vec![];
    }
    // a² − f3·a + (f2 − 2b) = 0
    let disc = f3 * f3 - Integer::from(4) * (f2 - Integer::from(2) * b);
    if !is_integer_square(&disc) {
        return vec![];
    }
    let s = disc.sqrt();
    [f3 + &s, f3 - &s]
        .into_iter()
        .filter(|t| t.is_even())
        .map(|t| t / 2)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn product(fs: &[IntPoly]) -> IntPoly {
        fs.iter().fold(IntPoly::one(), |acc, g| &acc * g)
    }

    #[test]
    fn sophie_germain() {
        let f = p(&[4, 0, 0, 0, 1]);
        let QuarticFactorization::Factors(fs) = factor_quartic(&f).unwrap() else { panic!("x⁴+4 splits") };
        assert_eq!(fs, [p(&[2, -2, 1]), p(&[2, 2, 1])]);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn frobenius_quartic_at_17_is_irreducible() {
        let r = factor_quartic(&p(&[289, -136, 40, -8, 1])).unwrap();
        let QuarticFactorization::Irreducible { roots_tested, pairs_tested } = r else { panic!() };
        assert_eq!(roots_tested.len(), 6);
        assert_eq!(pairs_tested.len(), 6);
    }

    #[test]
    fn perfect_square_and_linear_factors() {
        let sq = &p(&[1, 0, 1]) * &p(&[1, 0, 1]);
        assert_eq!(factor_quartic(&sq).unwrap(), QuarticFactorization::Factors(vec![p(&[1, 0, 1]), p(&[1, 0, 1])]));

        let f = &(&p(&[-1, 1]) * &p(&[0, 1])) * &p(&[2, 0, 1]);
        let QuarticFactorization::Factors(fs) = factor_quartic(&f).unwrap() else { panic!() };
        assert_eq!(fs, [p(&[-1, 1]), p(&[0, 1]), p(&[2, 0, 1])]);

        let g = &p(&[3, 1]) * &p(&[2, 0, 0, 1]);
        let QuarticFactorization::Factors(gs) = factor_quartic(&g).unwrap() else { panic!() };
        assert_eq!(gs, [p(&[3, 1]), p(&[2, 0, 0, 1])]);
    }

    #[test]
    fn input_validation() {
        assert!(factor_quartic(&p(&[1, 0, 0, 1])).is_err());
        assert!(factor_quartic(&p(&[1, 0, 0, 0, 2])).is_err());
        assert!(factor_quartic(&p(&[4, 0, 2, 0, 1])).unwrap().is_irreducible());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn recovers_products_of_quadratics(a in -12i64..13, b in -12i64..13, c in -12i64..13, e in -12i64..13) {
            let f = &p(&[b, a, 1]) * &p(&[e, c, 1]);
            match factor_quartic(&f).unwrap() {
                QuarticFactorization::Factors(fs) => {
                    prop_assert_eq!(product(&fs), f);
                    prop_assert!(fs.len() >= 2);
                    prop_assert!(fs.iter().all(|g| g.is_monic()));
                }
                QuarticFactorization::Irreducible { .. } => prop_assert!(false, "product reported irreducible"),
            }
        }
    }
}
