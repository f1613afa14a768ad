//! The ten checks behind `kzero verify`, run in dependency order.

use std::collections::BTreeMap;

use kzero_core::monoid_ring::{av_combination, free_element, zero_divisor_witness, ZeroDivisorOutcome};
use kzero_core::order::{Principality, DEFAULT_DISC_BOUND};
use kzero_core::steinitz::{tensor_av, BaseTag, ModuleClass};
use kzero_core::weil::{
    deduce_endomorphism_ring, distinct_fields_certificate, frobenius_charpoly, ReductionCertificate, StabilityOutcome,
    Support, WeilQuartic,
};
use kzero_core::{class_group, class_of, is_principal};

use crate::certificate::{Certificate, Check, Citation, Provenance, Verdict};
use crate::input::Dataset;

struct Draft {
    index: usize,
    name: &'static str,
    claim: String,
    anchor: &'static str,
    inputs: BTreeMap<String, String>,
    outputs: BTreeMap<String, String>,
}

impl Draft {
    fn new(index: usize, name: &'static str, claim: impl Into<String>, anchor: &'static str) -> Draft {
        Draft { index, name, claim: claim.into(), anchor, inputs: BTreeMap::new(), outputs: BTreeMap::new() }
    }

    fn input(&mut self, k: impl Into<String>, v: impl ToString) -> &mut Self {
        self.inputs.insert(k.into(), v.to_string());
        self
    }

    fn output(&mut self, k: impl Into<String>, v: impl ToString) -> &mut Self {
        self.outputs.insert(k.into(), v.to_string());
        self
    }

    fn finish(self, ok: bool) -> Check {
        Check {
            index: self.index,
            name: self.name.into(),
            claim: self.claim,
            anchor: self.anchor.into(),
            inputs: self.inputs,
            outputs: self.outputs,
            verdict: Verdict::from_bool(ok),
            provenance: Provenance::Computed,
        }
    }
}

fn citations(data: &Dataset) -> Vec<Citation> {
    let [p1, p2] = data.primes;
    let cite = |s: String, used: &[&str]| Citation { statement: s, used_by: used.iter().map(|u| u.to_string()).collect() };
    vec![
        cite(
            format!("the newform of level {} has an attached abelian surface A over Q with Z[a_n] ⊆ End(A)", data.raw.level),
            &["deduce_endomorphism_ring", "steinitz", "zero_divisor"],
        ),
        cite(format!("A has good reduction at {p1} and {p2} (neither divides the level)"), &["frobenius_charpoly"]),
        cite(
            "Eichler–Shimura: a_p is the trace of Frobenius on a Hecke-stable factor, so P_p = N(x² − a_p x + p)".into(),
            &["frobenius_charpoly"],
        ),
        cite(
            "End of A over the algebraic closure injects into End of each reduction, preserving End ⊗ Q".into(),
            &["deduce_endomorphism_ring"],
        ),
        cite(
            "M ↦ M ⊗_O A is fully faithful on finite-rank projective O-modules; only its injectivity on classes is used".into(),
            &["steinitz"],
        ),
        cite(
            "K₀(V) → K₀(V over k̄) → Z[SB] → Z[AV] are ring homomorphisms (stable birational classes, then Albanese)".into(),
            &["zero_divisor"],
        ),
    ]
}

/// Run every check on `data`, using `bound` for the stability test.
pub fn run_certificate(data: &Dataset, bound: u32) -> Certificate {
    let order = data.datum.hecke_order();
    let [p1, p2] = data.primes;
    let mut checks = Vec::new();

    let mut c = Draft::new(1, "class_group", format!("the class group of {order} has order 2"), "the class number of Q(√10) is 2");
    c.input("order", order).input("discriminant", order.discriminant());
    let ok = match class_group(&order, DEFAULT_DISC_BOUND) {
        Ok(g) => {
            let structure: Vec<String> = g.factors.iter().map(|n| format!("Z/{n}")).collect();
            c.output("class_number", g.class_number())
                .output("structure", if structure.is_empty() { "trivial".into() } else { structure.join(" × ") })
                .output("minkowski_primes", format!("{:?}", g.minkowski_primes));
            g.class_number() == 2
        }
        Err(e) => {
            c.output("error", e);
            false
        }
    };
    checks.push(c.finish(ok));

    let ideal = &data.ideal;
    let cls = class_of(ideal);
    let mut c = Draft::new(2, "nonprincipal_ideal", "I is not principal and I² is principal", "Z[√10] has a nonprincipal ideal I with I² principal");
    c.input("ideal", ideal).input("norm", ideal.norm());
    let principality = is_principal(ideal);
    match &principality {
        Principality::Principal { generator } => c.output("principality", format!("principal, generated by {generator}")),
        Principality::NonPrincipal => c.output("principality", "nonprincipal"),
    };
    let square = cls.pow(2);
    c.output("class", &cls).output("class_squared_trivial", square.is_trivial());
    checks.push(c.finish(!principality.is_principal() && square.is_trivial()));

    let mut c = Draft::new(
        3,
        "frobenius_charpoly",
        format!("P_p = N(x² − a_p x + p) for p = {p1}, {p2}, and P_{p1} matches the published polynomial"),
        "P_17 = x^4 - 8x^3 + 40x^2 - 136x + 289",
    );
    let mut quartics: Vec<Option<WeilQuartic>> = Vec::new();
    for p in [p1, p2] {
        c.input(format!("a_{p}"), data.eigenvalue(p));
        match frobenius_charpoly(data.eigenvalue(p), p) {
            Ok(w) => {
                c.output(format!("P_{p}"), w.poly());
                quartics.push(Some(w));
            }
            Err(e) => {
                c.output(format!("P_{p}"), format!("error: {e}"));
                quartics.push(None);
            }
        }
    }
    let golden_ok = match (&data.paper_charpoly, &quartics[0]) {
        (Some(g), Some(w)) => {
            c.input("published_P", g).output("matches_published", w.poly() == g);
            w.poly() == g
        }
        (Some(g), None) => {
            c.input("published_P", g).output("matches_published", false);
            false
        }
        (None, _) => {
            c.output("matches_published", "no published polynomial supplied");
            true
        }
    };
    checks.push(c.finish(golden_ok && quartics.iter().all(Option::is_some)));

    let mut c = Draft::new(
        4,
        "weil_shape_ordinary",
        "each P_p is irreducible, a Weil polynomial, and ordinary (gcd(c₂, p) = 1)",
        "gcd(40, 17) = 1 and gcd(32, 19) = 1: both reductions are simple and ordinary",
    );
    let mut ok = true;
    for w in &quartics {
        let Some(w) = w else {
            ok = false;
            continue;
        };
        let p = w.p();
        let (irr, circle, ord) = (w.is_irreducible(), w.roots_on_circle(), w.is_ordinary());
        c.output(format!("P_{p}.irreducible"), irr)
            .output(format!("P_{p}.roots_on_circle"), circle)
            .output(format!("P_{p}.ordinary"), format!("gcd({}, {p}) = {}", w.coeff(2), num_integer_gcd(&w.coeff(2), p)));
        ok &= irr && circle && ord;
    }
    checks.push(c.finish(ok));

    let mut c = Draft::new(
        5,
        "endomorphism_stability",
        format!("Q(π^d) = Q(π) for 2 ≤ d ≤ {bound} at each prime, so End ⊗ Q of the reduction is Q[x]/(P_p) geometrically"),
        "roots of unity in a quartic field have order n with φ(n) ≤ 4, so n ≤ 12",
    );
    c.input("bound", bound);
    let certs: Vec<Option<ReductionCertificate>> =
        quartics.iter().map(|w| w.as_ref().map(|w| ReductionCertificate::compute(w, bound))).collect();
    let mut ok = true;
    for (p, cert) in [p1, p2].iter().zip(&certs) {
        let text = match cert.as_ref().and_then(|r| r.stability.as_ref()) {
            None => {
                ok = false;
                "not established".to_string()
            }
            Some(r) => match &r.outcome {
                StabilityOutcome::Stable => "stable".into(),
                StabilityOutcome::UnstableAt { power, minimal_polynomial } => {
                    ok = false;
                    format!("unstable at d = {power}, minimal polynomial {minimal_polynomial}")
                }
            },
        };
        c.output(format!("P_{p}"), text);
    }
    checks.push(c.finish(ok));

    let mut c = Draft::new(
        6,
        "distinct_fields",
        format!("Q[x]/(P_{p1}) and Q[x]/(P_{p2}) are different quartic fields"),
        "the two Frobenius fields are not isomorphic",
    );
    let fields = match (&quartics[0], &quartics[1]) {
        (Some(a), Some(b)) => match distinct_fields_certificate(a, b) {
            Ok(f) => {
                c.output(format!("disc(P_{p1})"), &f.disc_first)
                    .output(format!("disc(P_{p2})"), &f.disc_second)
                    .output("ratio", &f.ratio)
                    .output("ratio_is_square", !f.distinct);
                Some(f)
            }
            Err(e) => {
                c.output("error", e);
                None
            }
        },
        _ => {
            c.output("error", "characteristic polynomials unavailable");
            None
        }
    };
    checks.push(c.finish(fields.as_ref().is_some_and(|f| f.distinct)));

    let mut c = Draft::new(
        7,
        "deduce_endomorphism_ring",
        format!("End(A over k̄) = {order}"),
        "End(A_k̄) = Z[√10]",
    );
    c.input("known_subring", order);
    let ok = match (&certs[0], &certs[1], &fields) {
        (Some(a), Some(b), Some(f)) => match deduce_endomorphism_ring(order.d(), a, b, f) {
            Ok(ded) => {
                for (i, h) in ded.hypotheses.iter().enumerate() {
                    let how = match &h.support {
                        Support::Computed(s) => format!("computed: {s}"),
                        Support::Assumed(s) => format!("assumed: {s}"),
                    };
                    c.output(format!("hypothesis_{}", i + 1), format!("{} [{how}]", h.statement));
                }
                c.output("conclusion", ded.conclusion);
                true
            }
            Err(e) => {
                c.output("refused", e);
                false
            }
        },
        _ => {
            c.output("refused", "earlier certificates are missing");
            false
        }
    };
    checks.push(c.finish(ok));

    let base = BaseTag("A".into());
    let triv1 = ModuleClass::free(order, 1);
    let i1 = ModuleClass::of_ideal(cls.clone());
    let mut c = Draft::new(
        8,
        "steinitz",
        "O ⊕ O ≅ I ⊕ I, hence A × A ≅ B × B for B = I ⊗_O A, while A ≇ B",
        "A × A ≃ B × B but A and B are not isomorphic over k̄",
    );
    c.input("[I]", &cls);
    let sum = i1.direct_sum(&i1).expect("same order");
    let (ta, tb) = (tensor_av(&triv1, &base), tensor_av(&i1, &base));
    let squares_equal = ta.product(&ta).expect("same base") == tb.product(&tb).expect("same base");
    c.output("(1,[I]) ⊕ (1,[I])", &sum)
        .output("A × A ≅ B × B", squares_equal)
        .output("A ≅ B", ta == tb);
    checks.push(c.finish(sum == ModuleClass::free(order, 2) && squares_equal && ta != tb));

    let mut c = Draft::new(9, "dimension", "dim A = [Q(√d) : Q] = 2", "A is an abelian surface: dim A = [Q(√10):Q] = 2");
    c.input("expected_dim", data.datum.expected_dim).output("hecke_degree", data.datum.hecke_degree());
    checks.push(c.finish(data.datum.expected_dim == data.datum.hecke_degree()));

    let mut c = Draft::new(
        10,
        "zero_divisor",
        "([A] + [B])([A] − [B]) = 0 with both factors nonzero in Z[AV]",
        "([A]+[B])([A]−[B]) = 0 while [A]+[B] and [A]−[B] are nonzero",
    );
    let x = av_combination(&base, &[(triv1.clone(), 1), (i1.clone(), 1)]).expect("one ring");
    let y = av_combination(&base, &[(triv1, 1), (i1, -1)]).expect("one ring");
    c.input("x", &x).input("y", &y);
    let ok = match zero_divisor_witness(&x, &y) {
        ZeroDivisorOutcome::Witness { product, .. } => {
            c.output("x·y", product);
            true
        }
        ZeroDivisorOutcome::Refused(why) => {
            c.output("refused", why);
            false
        }
    };
    // the same shape over a free monoid must not collapse
    let g = free_element(&[(&[("g", 1)], 1), (&[("h", 1)], 1)]);
    let h = free_element(&[(&[("g", 1)], 1), (&[("h", 1)], -1)]);
    let control = zero_divisor_witness(&g, &h);
    c.output("free_monoid_control", if control.is_witness() { "witness (unexpected)" } else { "refused" });
    checks.push(c.finish(ok && !control.is_witness()));

    Certificate::new(checks, citations(data))
}

fn num_integer_gcd(c: &kzero_core::Integer, p: u64) -> kzero_core::Integer {
    num_integer::Integer::gcd(c, &kzero_core::Integer::from(p))
}
