//! Frobenius characteristic polynomials of abelian surfaces of GL₂-type over
//! finite fields, and the tests that pin down the geometric endomorphism
//! algebra: Weil shape, ordinarity, stability of `Q(π^d)`, field
//! distinctness, and the final endomorphism-ring deduction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{
    discriminant, factor_quartic, is_prime, is_rational_square, prime_divisors, Integer, IntPoly, QuadElement,
    Rational,
};
use crate::order::{maximal_order, QuadOrder};

/// Default bound on the powers `π^d` checked by [`endomorphism_stability`].
///
/// A drop in degree makes `π^d / conj(π^d)` a root of unity in a quartic
/// field; its order `n` has `φ(n) ≤ 4`, hence `n ≤ 12`.
pub const DEFAULT_STABILITY_BOUND: u32 = 12;

/// Hecke data of a weight-2 newform with quadratic coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewformDatum {
    pub level: u64,
    pub hecke_field_d: i64,
    pub expected_dim: u32,
    /// `p ↦ a_p`, ascending in `p`.
    pub eigenvalues: BTreeMap<u64, QuadElement>,
}

impl NewformDatum {
    /// Validates good reduction at every eigenvalue prime, membership of
    /// each `a_p` in `Q(√d)`, and the Weil bound. `expected_dim` is left for
    /// the caller to compare against [`Self::hecke_degree`].
    pub fn new(
        level: u64,
        hecke_field_d: i64,
        expected_dim: u32,
        eigenvalues: impl IntoIterator<Item = (u64, QuadElement)>,
    ) -> Result<Self> {
        if level == 0 {
            return Err(Error::Domain("level must be positive".into()));
        }
        let order = maximal_order(hecke_field_d)?;
        if !order.is_real() {
            return Err(Error::Domain(format!("Hecke field Q(√{hecke_field_d}) is not real")));
        }
        let mut map = BTreeMap::new();
        for (p, a) in eigenvalues {
            if !is_prime(p) {
                return Err(Error::Domain(format!("eigenvalue index {p} is not prime")));
            }
            if level.is_multiple_of(p) {
                return Err(Error::Domain(format!("p = {p} divides the level {level}: no good reduction")));
            }
            if a.d() != hecke_field_d {
                return Err(Error::ParameterMismatch(format!(
                    "a_{p} lies in Q(√{}) but the Hecke field is Q(√{hecke_field_d})",
                    a.d()
                )));
            }
            check_eigenvalue(&a, p)?;
            if map.insert(p, a).is_some() {
                return Err(Error::Domain(format!("duplicate eigenvalue for p = {p}")));
            }
        }
        Ok(NewformDatum { level, hecke_field_d, expected_dim, eigenvalues: map })
    }

    pub fn bad_primes(&self) -> Vec<u64> {
        prime_divisors(self.level)
    }

    /// `[Q(√d) : Q]`.
    pub fn hecke_degree(&self) -> u32 {
        2
    }

    pub fn hecke_order(&self) -> QuadOrder {
        maximal_order(self.hecke_field_d).expect("validated on construction")
    }
}

/// Both real embeddings of `a` lie in `[−2√p, 2√p]`, decided exactly.
///
/// With `T = tr(a)`, `N = N(a)`, the roots of `y² − T·y + N` are in
/// `[−B, B]`, `B = 2√p`, iff `T² ≤ 4B²`, `4p + N ≥ 0` and
/// `(4p + N)² ≥ 4p·T²`.
pub fn satisfies_weil_bound(a: &QuadElement, p: u64) -> Result<bool> {
    if a.d() < 0 {
        return Err(Error::Domain(format!("Q(√{}) has no real embeddings", a.d())));
    }
    Ok(roots_within_weil_interval(&a.trace(), &a.norm(), p))
}

fn roots_within_weil_interval(trace: &Rational, norm: &Rational, p: u64) -> bool {
    let p = Rational::from_integer(p.into());
    let four = Rational::from_integer(4.into());
    let s = &four * &p + norm;
    trace * trace <= Rational::from_integer(16.into()) * &p
        && !s.is_negative()
        && &s * &s >= four * p * trace * trace
}

fn check_eigenvalue(a: &QuadElement, p: u64) -> Result<()> {
    if !a.is_algebraic_integer() {
        return Err(Error::InvalidEigenvalue(format!("a_{p} = {a} is not an algebraic integer")));
    }
    if !satisfies_weil_bound(a, p)? {
        return Err(Error::InvalidEigenvalue(format!("a_{p} = {a} violates |a_p| ≤ 2√{p} in some real embedding")));
    }
    Ok(())
}

/// A monic quartic `x⁴ + c₃x³ + c₂x² + c₁x + c₀` with `c₀ = p²` and
/// `c₁ = p·c₃`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeilQuartic {
    p: u64,
    poly: IntPoly,
}

impl WeilQuartic {
    pub fn new(p: u64, poly: IntPoly) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        let pz = Integer::from(p);
        if poly.degree() != Some(4) || !poly.is_monic() {
            return Err(Error::Domain(format!("{poly} is not a monic quartic")));
        }
        if poly.coeff(0) != &pz * &pz || poly.coeff(1) != &pz * poly.coeff(3) {
            return Err(Error::Domain(format!("{poly} does not have Weil shape for p = {p}")));
        }
        Ok(WeilQuartic { p, poly })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> Integer {
        self.poly.coeff(k)
    }

    /// The roots lie on `|x| = √p`: the real quadratic `y² + c₃y + (c₂ − 2p)`
    /// satisfied by `y = x + p/x` has real roots in `[−2√p, 2√p]`.
    pub fn roots_on_circle(&self) -> bool {
        let trace = -Rational::from_integer(self.coeff(3));
        let norm = Rational::from_integer(self.coeff(2) - Integer::from(2 * self.p));
        let disc = &trace * &trace - Rational::from_integer(4.into()) * &norm;
        !disc.is_negative() && roots_within_weil_interval(&trace, &norm, self.p)
    }

    /// Ordinary iff the middle coefficient is prime to `p`.
    pub fn is_ordinary(&self) -> bool {
        self.coeff(2).gcd(&Integer::from(self.p)).is_one()
    }

    pub fn is_irreducible(&self) -> bool {
        factor_quartic(&self.poly).is_ok_and(|f| f.is_irreducible())
    }
}

// (x² − a·x + p)(x² − ā·x + p) with coefficients in Q(√d), lowest degree first
fn norm_form_product(a: &QuadElement, p: u64) -> Result<Vec<QuadElement>> {
    let d = a.d();
    let pp = QuadElement::from_rational(d, Rational::from_integer(p.into()))?;
    let one = QuadElement::one(d)?;
    let f = [pp.clone(), a.neg(), one.clone()];
    let g = [pp, a.conj().neg(), one];
    let mut out = vec![QuadElement::zero(d)?; 5];
    for (i, x) in f.iter().enumerate() {
        for (j, y) in g.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Ok(out)
}

/// Characteristic polynomial of Frobenius on the reduction at `p` of the
/// abelian surface attached to a newform with eigenvalue `a_p`:
/// the norm from `Q(√d)` to `Q` of `x² − a_p·x + p`.
pub fn frobenius_charpoly(a_p: &QuadElement, p: u64) -> Result<WeilQuartic> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if a_p.d() < 0 {
        return Err(Error::Domain(format!("Hecke field Q(√{}) is not real", a_p.d())));
    }
    check_eigenvalue(a_p, p)?;
    let coeffs = norm_form_product(a_p, p)?
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_rational());
            c.a().is_integer().then(|| c.a().to_integer())
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidEigenvalue(format!("norm form of a_{p} = {a_p} is not integral")))?;
    WeilQuartic::new(p, IntPoly::new(coeffs))
}

/// `Res_y(f(y), x − y^d)`: the characteristic polynomial of `π^d` for a root
/// `π` of the monic polynomial `f`.
pub fn power_charpoly(f: &IntPoly, d: u32) -> IntPoly {
    let lifted: Vec<IntPoly> = f.coeffs().iter().map(|c| IntPoly::constant(c.clone())).collect();
    let mut g = vec![IntPoly::zero(); d as usize + 1];
    g[0] = IntPoly::x();
    g[d as usize] = IntPoly::constant(-Integer::one());
    crate::exact::poly_resultant(&lifted, &g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityOutcome {
    /// `Q(π^d) = Q(π)` for every `2 ≤ d ≤ bound`.
    Stable,
    /// `π^power` generates a proper subfield.
    UnstableAt { power: u32, minimal_polynomial: IntPoly },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub bound: u32,
    pub outcome: StabilityOutcome,
    /// `(d, deg minpoly(π^d))` for every power examined.
    pub degrees: Vec<(u32, usize)>,
}

impl StabilityReport {
    pub fn is_stable(&self) -> bool {
        self.outcome == StabilityOutcome::Stable
    }
}

/// Check that `π^d` still has degree four for `d = 2..=bound`.
///
/// The minimal polynomial of `π^d` is the squarefree part of its
/// characteristic polynomial, which is a power of it when `P` is irreducible.
pub fn endomorphism_stability(quartic: &WeilQuartic, bound: u32) -> Result<StabilityReport> {
    if !quartic.is_irreducible() {
        return Err(Error::Precondition(format!("{} is reducible: the reduction is not simple", quartic.poly)));
    }
    let mut degrees = Vec::new();
    for d in 2..=bound {
        let minpoly = power_charpoly(&quartic.poly, d).squarefree_part();
        let deg = minpoly.degree().unwrap_or(0);
        degrees.push((d, deg));
        if deg < 4 {
            return Ok(StabilityReport {
                bound,
                outcome: StabilityOutcome::UnstableAt { power: d, minimal_polynomial: minpoly },
                degrees,
            });
        }
    }
    Ok(StabilityReport { bound, outcome: StabilityOutcome::Stable, degrees })
}

/// One-sided comparison of the quartic fields `Q[x]/(P₁)` and `Q[x]/(P₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldComparison {
    pub first: WeilQuartic,
    pub second: WeilQuartic,
    pub disc_first: Rational,
    pub disc_second: Rational,
    pub ratio: Rational,
    /// The ratio is not a rational square, so the fields differ.
    pub distinct: bool,
}

/// Isomorphic number fields have discriminants in the same square class, so a
/// non-square ratio of polynomial discriminants proves the fields distinct.
/// A square ratio proves nothing and is reported as inconclusive.
pub fn distinct_fields_certificate(p1: &WeilQuartic, p2: &WeilQuartic) -> Result<FieldComparison> {
    for q in [p1, p2] {
        if !q.is_irreducible() {
            return Err(Error::Precondition(format!("{} is reducible", q.poly)));
        }
    }
    let disc_first = discriminant(&p1.poly)?;
    let disc_second = discriminant(&p2.poly)?;
    let ratio = &disc_first / &disc_second;
    Ok(FieldComparison {
        first: p1.clone(),
        second: p2.clone(),
        distinct: !is_rational_square(&ratio),
        disc_first,
        disc_second,
        ratio,
    })
}

/// Everything computed about one reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub quartic: WeilQuartic,
    pub irreducible: bool,
    pub roots_on_circle: bool,
    pub ordinary: bool,
    /// `None` when stability was not (or could not be) established.
    pub stability: Option<StabilityReport>,
}

impl ReductionCertificate {
    pub fn compute(quartic: &WeilQuartic, bound: u32) -> ReductionCertificate {
        let irreducible = quartic.is_irreducible();
        ReductionCertificate {
            quartic: quartic.clone(),
            irreducible,
            roots_on_circle: quartic.roots_on_circle(),
            ordinary: quartic.is_ordinary(),
            stability: if irreducible { endomorphism_stability(quartic, bound).ok() } else { None },
        }
    }

    fn gaps(&self) -> Vec<String> {
        let p = self.quartic.p;
        let mut out = Vec::new();
        if !self.irreducible {
            out.push(format!("P_{p} is not irreducible"));
        }
        if !self.roots_on_circle {
            out.push(format!("P_{p} is not a Weil polynomial"));
        }
        if !self.ordinary {
            out.push(format!("P_{p} is not ordinary"));
        }
        match &self.stability {
            None => out.push(format!("no stability certificate for P_{p}")),
            Some(r) if !r.is_stable() => out.push(format!("P_{p} is unstable: {:?}", r.outcome)),
            Some(_) => {}
        }
        out
    }
}

/// How a hypothesis of the deduction is supported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Support {
    Computed(String),
    Assumed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub statement: String,
    pub support: Support,
}

/// Conclusion `End(A) = O` for the maximal order `O` of `Q(√d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndomorphismDeduction {
    pub order: QuadOrder,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: String,
}

/// Combine the two reduction certificates and the field-distinctness
/// certificate into the statement `End(A) = maximal order of Q(√d)`.
///
/// `End ⊗ Q` embeds into both quartic fields; they differ, so its dimension
/// is at most two. It contains `Q(√d)` through the Hecke action, so it is
/// exactly `Q(√d)`, and `End` is an order containing the maximal one.
pub fn deduce_endomorphism_ring(
    known_subring_d: i64,
    first: &ReductionCertificate,
    second: &ReductionCertificate,
    fields: &FieldComparison,
) -> Result<EndomorphismDeduction> {
    let order = maximal_order(known_subring_d)?;
    if !order.is_real() {
        return Err(Error::Domain(format!("Q(√{known_subring_d}) is not a real quadratic field")));
    }
    let mut gaps: Vec<String> = first.gaps().into_iter().chain(second.gaps()).collect();
    if first.quartic.p == second.quartic.p {
        gaps.push(format!("both certificates are for the same prime {}", first.quartic.p));
    }
    let matches = (fields.first == first.quartic && fields.second == second.quartic)
        || (fields.first == second.quartic && fields.second == first.quartic);
    if !matches {
        gaps.push("the field comparison is not about the two certified quartics".into());
    } else if !fields.distinct {
        gaps.push(format!("field distinctness inconclusive: discriminant ratio {} is a square", fields.ratio));
    }
    if !gaps.is_empty() {
        return Err(Error::DeductionRefused(gaps.join("; ")));
    }

    let mut hypotheses = Vec::new();
    for cert in [first, second] {
        let p = cert.quartic.p;
        let bound = cert.stability.as_ref().map_or(0, |s| s.bound);
        hypotheses.push(Hypothesis {
            statement: format!("the reduction at {p} is a simple ordinary abelian surface with End ⊗ Q = Q[x]/(P_{p})"),
            support: Support::Computed(format!(
                "P_{p} = {} irreducible, Weil polynomial, gcd(c2, {p}) = 1, Q(π^d) = Q(π) for d ≤ {bound}",
                cert.quartic.poly
            )),
        });
        hypotheses.push(Hypothesis {
            statement: format!("End(A_k̄) injects into the geometric endomorphism ring of the reduction at {p}"),
            support: Support::Assumed("good reduction at p and specialisation of endomorphisms".into()),
        });
    }
    hypotheses.push(Hypothesis {
        statement: format!("Q[x]/(P_{}) and Q[x]/(P_{}) are distinct quartic fields", first.quartic.p, second.quartic.p),
        support: Support::Computed(format!("discriminant ratio {} is not a rational square", fields.ratio)),
    });
    hypotheses.push(Hypothesis {
        statement: format!("{order} ⊆ End(A_k̄)"),
        support: Support::Assumed("Hecke operators act on A through the coefficient ring".into()),
    });
    Ok(EndomorphismDeduction {
        order,
        hypotheses,
        conclusion: format!("dim_Q End(A_k̄) ⊗ Q ≤ 2 and ⊇ Q(√{known_subring_d}), hence End(A_k̄) = {order}"),
    })
}
