//! The fixed verification run: worked examples, the oracle sweep over the
//! non-monomial ideals `I_a = (t^4 - a t^5, t^6)`, and every law over the
//! semigroups with conductor at most [`LAW_CONDUCTOR`].
//!
//! Item ids and their order are part of the output contract; new checks get
//! new ids at the end.

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::census;
use crate::error::Error;
use crate::ideal::SemigroupIdeal;
use crate::laws::{self, LawCheck};
use crate::semigroup::NumericalSemigroup;
use crate::{Rational, RationalAlgebra, RationalIdeal, RationalPolynomial};

/// Conductor bound for the exhaustive law sweeps.
pub const LAW_CONDUCTOR: i64 = 12;

/// Parameter values `a` for the ideals `I_a = (t^4 - a t^5, t^6)`.
pub const PARAMETER_SWEEP: [(i64, i64); 5] = [(0, 1), (1, 1), (2, 1), (-1, 1), (1, 2)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportItem {
    pub id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub details: Value,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub items: Vec<ReportItem>,
    pub summary: Summary,
    pub tool_version: String,
    pub timestamp: String,
}

impl VerificationReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn item(&self, id: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.id == id)
    }
}

fn sgp(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).expect("fixture generators")
}

fn set(h: &NumericalSemigroup, text: &str) -> SemigroupIdeal {
    SemigroupIdeal::from_tail_notation(h, text).expect("fixture ideal")
}

fn strings(ideals: &[SemigroupIdeal]) -> Vec<String> {
    ideals.iter().map(ToString::to_string).collect()
}

/// Pass with `details`, or fail with the mismatch.
type Outcome = std::result::Result<Value, Value>;

fn expect_eq<T: PartialEq + Serialize>(what: &str, expected: T, actual: T) -> Outcome {
    if expected == actual {
        Ok(json!({ what: actual }))
    } else {
        Err(json!({ "check": what, "expected": expected, "actual": actual }))
    }
}

/// Passes when every check passes; otherwise reports the first mismatch.
fn all_of(checks: Vec<Outcome>) -> Outcome {
    checks
        .into_iter()
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Value::Array)
}

macro_rules! checks {
    ($($e:expr),* $(,)?) => {
        all_of(vec![$($e),*])
    };
}

struct Builder {
    items: Vec<ReportItem>,
}

impl Builder {
    fn push(&mut self, id: &str, anchor: &str, outcome: Outcome) {
        let (status, details) = match outcome {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        self.items.push(ReportItem {
            id: id.to_string(),
            paper_anchor: anchor.to_string(),
            status,
            details,
        });
    }

    fn skip(&mut self, id: &str, anchor: &str, reason: &str) {
        self.items.push(ReportItem {
            id: id.to_string(),
            paper_anchor: anchor.to_string(),
            status: Status::Skipped,
            details: json!({ "reason": reason }),
        });
    }

    fn law(&mut self, id: &str, anchor: &str, law: LawCheck) {
        let details = json!({
            "law": law.name,
            "cases": law.cases,
            "failures": law.failures,
            "counterexamples": law.counterexamples,
        });
        self.push(
            id,
            anchor,
            if law.holds() {
                Ok(details)
            } else {
                Err(details)
            },
        );
    }
}

fn hypersurface_example() -> Outcome {
    let h = sgp(&[3, 5]);
    let j = SemigroupIdeal::from_generators(&h, &[5, 12]).expect("nonempty");
    let m = SemigroupIdeal::maximal(&h);
    checks![
        expect_eq("J", "{5,8,10->}".to_string(), j.to_string()),
        expect_eq("tr(J)", m.to_string(), j.trace().to_string()),
        expect_eq("(5+H)-J", m.to_string(), j.principal_colon().to_string()),
        expect_eq("M stable", false, m.is_stable()),
        expect_eq("H-J", "{-2,0,1,3->}".to_string(), j.dual().to_string()),
    ]
}

fn four_five_six_census() -> Outcome {
    let h = sgp(&[4, 5, 6]);
    let bound = LAW_CONDUCTOR;
    let traces = census::trace_ideals(&h, bound).map_err(|e| json!(e.to_string()))?;
    let stable = census::stable_trace_ideals(&h, bound).map_err(|e| json!(e.to_string()))?;
    let expected_traces = [
        "{0,4,5,6,8->}",
        "{4,5,6,8->}",
        "{4,6,8->}",
        "{5,6,8->}",
        "{6,8->}",
        "{8->}",
    ];
    let expected_stable = ["{0,4,5,6,8->}", "{4,6,8->}", "{6,8->}", "{8->}"];
    let sorted = |mut v: Vec<String>| {
        v.sort();
        v
    };
    checks![
        expect_eq(
            "trace ideals",
            sorted(expected_traces.map(String::from).to_vec()),
            sorted(strings(&traces)),
        ),
        expect_eq(
            "stable trace ideals",
            sorted(expected_stable.map(String::from).to_vec()),
            sorted(strings(&stable)),
        ),
    ]
}

fn four_five_six_fiber() -> Outcome {
    let h = sgp(&[4, 5, 6]);
    let fiber = census::trace_fiber(&h, 4, LAW_CONDUCTOR).map_err(|e| json!(e.to_string()))?;
    let mut got = strings(&fiber.ideals());
    got.sort();
    checks![
        expect_eq(
            "fiber over M",
            vec!["{4,5,6,8->}".to_string(), "{4,6,8->}".to_string()],
            got
        ),
        expect_eq(
            "stable members minimal",
            true,
            fiber.stable_members_are_minimal()
        ),
    ]
}

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `I_a` is a stable trace ideal whose integral closure is the maximal ideal.
pub fn parameter_ideal_check(a: &Rational) -> Outcome {
    let err =
        |e: Error| json!({ "error": e.to_string(), "precisionFailure": e.is_precision_failure() });
    let one = rational(1, 1);
    let gens = vec![
        RationalPolynomial::monomial(one.clone(), 4),
        RationalPolynomial::monomial(one.clone(), 5),
        RationalPolynomial::monomial(one.clone(), 6),
    ];
    let algebra = Arc::new(RationalAlgebra::build(gens, 40).map_err(err)?);
    let generator = RationalPolynomial::from_terms([(4, one.clone()), (5, -a.clone())]);
    let ideal = RationalIdeal::from_generators(
        &algebra,
        &[generator.clone(), RationalPolynomial::monomial(one, 6)],
    )
    .map_err(err)?;
    let maximal = RationalIdeal::from_generators(&algebra, algebra.generators()).map_err(err)?;
    let h = algebra.value_semigroup().clone();
    let is_trace = ideal.is_trace_ideal().map_err(err)?;
    let is_stable = ideal.is_stable().map_err(err)?;
    let closure_is_maximal = ideal
        .integral_closure()
        .map_err(err)?
        .same_ideal(&maximal)
        .map_err(err)?;
    let values = ideal.valuation_set().to_string();
    let details = json!({
        "generators": [generator.to_string(), "t^6"],
        "valuationSet": values,
        "traceIdeal": is_trace,
        "stable": is_stable,
        "closureIsMaximal": closure_is_maximal,
    });
    if is_trace && is_stable && closure_is_maximal && values == set(&h, "{4,6,8->}").to_string() {
        Ok(details)
    } else {
        Err(details)
    }
}

fn arf_examples() -> Outcome {
    let mut family = Vec::new();
    for e in 2..=5i64 {
        for n in 1..=3i64 {
            let gens: Vec<i64> = std::iter::once(e)
                .chain((1..e).map(|i| n * e + i))
                .collect();
            let h = sgp(&gens);
            if !h.is_arf() {
                return Err(json!({ "notArf": h.to_string() }));
            }
            family.push(h.to_string());
        }
    }
    checks![
        expect_eq("<2,3> arf", true, sgp(&[2, 3]).is_arf()),
        expect_eq("<4,5,6> arf", false, sgp(&[4, 5, 6]).is_arf()),
        Ok(json!({ "arfFamily": family })),
    ]
}

fn flavor_fixtures() -> Outcome {
    let flags =
        |gens: &[i64]| serde_json::to_value(sgp(gens).gorenstein_flavors()).expect("plain struct");
    checks![
        expect_eq(
            "<3,4,5>",
            json!({"gorenstein": false, "nearlyGorenstein": true, "almostGorenstein": true, "minimalMultiplicity": true, "arf": true}),
            flags(&[3, 4, 5]),
        ),
        expect_eq(
            "<3,5>",
            json!({"gorenstein": true, "nearlyGorenstein": true, "almostGorenstein": true, "minimalMultiplicity": false, "arf": false}),
            flags(&[3, 5]),
        ),
        expect_eq(
            "<3,7,8>",
            json!({"gorenstein": false, "nearlyGorenstein": false, "almostGorenstein": false, "minimalMultiplicity": true, "arf": true}),
            flags(&[3, 7, 8]),
        ),
    ]
}

fn conductor_trace_fixtures() -> Outcome {
    let witness = |gens: &[i64]| {
        let h = sgp(gens);
        let k = h.canonical_ideal();
        let c = SemigroupIdeal::conductor_ideal(&h);
        json!({
            "traceIsConductor": k.trace() == c,
            "squareIsConductor": k.product(&k).expect("same ring").isomorphic(&c),
            "traceIsMaximal": k.trace() == SemigroupIdeal::maximal(&h),
        })
    };
    checks![
        expect_eq(
            "<3,7,8>",
            json!({"traceIsConductor": true, "squareIsConductor": true, "traceIsMaximal": false}),
            witness(&[3, 7, 8]),
        ),
        expect_eq(
            "<4,5,6,7>",
            json!({"traceIsConductor": true, "squareIsConductor": true, "traceIsMaximal": true}),
            witness(&[4, 5, 6, 7]),
        ),
    ]
}

/// Runs every check. Deterministic apart from the timestamp.
pub fn run() -> VerificationReport {
    let mut b = Builder { items: Vec::new() };

    b.push(
        "example.hypersurface-trace",
        "k[[t^3,t^5]], J=(t^5,t^12): tr(J) = (t^5):J = m, m not stable",
        hypersurface_example(),
    );
    b.push(
        "example.four-five-six-census",
        "k[[t^4,t^5,t^6]]: six monomial trace ideals, four stable",
        four_five_six_census(),
    );
    b.push(
        "example.four-five-six-fiber",
        "k[[t^4,t^5,t^6]]: T(m) = {m} ∪ {I_a}",
        four_five_six_fiber(),
    );
    for (n, d) in PARAMETER_SWEEP {
        let a = rational(n, d);
        b.push(
            &format!("example.four-five-six-parameter.a={a}"),
            "I_a = (t^4 - a t^5, t^6) is a stable trace ideal with closure m",
            parameter_ideal_check(&a),
        );
    }
    b.skip(
        "example.four-five-six-fiber-completeness",
        "T(m) = {m} ∪ {I_a} is complete",
        "membership verified, completeness external",
    );
    b.push(
        "example.arf-families",
        "multiplicity 2 and <e, ne+1, ..., ne+e-1> are Arf",
        arf_examples(),
    );
    b.push(
        "example.gorenstein-flavors",
        "nearly Gorenstein: tr(K) ⊇ m; almost Gorenstein: (x):K ⊇ m",
        flavor_fixtures(),
    );
    b.push(
        "example.conductor-trace",
        "tr(K) = C iff K^2 ≅ C",
        conductor_trace_fixtures(),
    );

    for gens in [&[3, 5][..], &[4, 5, 6], &[3, 4, 5]] {
        let h = sgp(gens);
        b.law(
            &format!("oracle.equivalence.{h}"),
            "tr(I) = I((x):I):x agrees with E + (H - E) on monomial ideals",
            laws::oracle_agrees_with_semigroup_engine(&h),
        );
    }

    let hs = laws::universe(LAW_CONDUCTOR);
    let anchors: &[(&str, &str)] = &[
        (
            "arf-iff-integrally-closed-ideals-stable",
            "Arf: every integrally closed regular ideal is stable",
        ),
        (
            "arf-closure-extensive-idempotent",
            "Arf closure is a closure operator",
        ),
        ("canonical-double-dual", "K - (K - E) = E"),
        (
            "gorenstein-flavor-implications",
            "Gorenstein implies nearly and almost Gorenstein",
        ),
        (
            "minimal-multiplicity-nearly-iff-almost",
            "minimal multiplicity: nearly Gorenstein iff almost Gorenstein",
        ),
        ("colon-correctness", "E - F is the largest Z with Z + F ⊆ E"),
        (
            "trace-idempotent-dual-is-endomorphisms",
            "tr(tr I) = tr I; I trace implies I* = End(I)",
        ),
        (
            "stable-trace-equivalences",
            "trace I: stable iff I = (x):I iff I ≅ I* iff I ≅ End(I) iff I ≅ I^2",
        ),
        (
            "stable-trace-is-principal-colon",
            "tr(J) stable implies tr(J) = (x):J",
        ),
        (
            "principal-colon-converse-counterexample",
            "tr(J) = (x):J does not force tr(J) stable",
        ),
        (
            "stable-ideal-trace",
            "I stable implies tr(I) ≅ I* and tr(I) = (x):I",
        ),
        ("blowup-conductor-in-trace", "b(I) ⊆ tr(I)"),
        (
            "reflexive-stability-criteria",
            "I reflexive: stable iff b(I) = tr(I) iff tr(I) ≅ I*",
        ),
        (
            "stable-trace-reflexive-criteria",
            "tr(I) stable: reflexive iff I ≅ tr(I) iff self-dual",
        ),
        (
            "reflexive-trace-stability",
            "I reflexive: tr(I) stable iff I stable and self-dual",
        ),
        (
            "stable-trace-hom-identities",
            "Hom(I,J) ≅ Hom(J,I) ≅ tr(IJ) ≅ I ∩ J",
        ),
        (
            "closure-of-trace-is-trace",
            "I trace implies closure(I) trace",
        ),
        (
            "stable-trace-rigidity",
            "I ⊆ J ⊆ closure(I), J stable trace implies I = J",
        ),
        (
            "trace-fiber-structure",
            "T(J) = {J} if J is stable; stable members are minimal",
        ),
        (
            "arf-iff-trace-ideals-stable",
            "Arf iff every regular trace ideal is stable",
        ),
        (
            "arf-trace-ideals-integrally-closed",
            "Arf: trace ideals = integrally closed ideals containing C",
        ),
        (
            "arf-hom-identity",
            "Arf, I, J integrally closed ⊇ C: Hom(I,J) ≅ I ∩ J",
        ),
        (
            "conductor-trace-criteria",
            "tr(I) = C iff I* ≅ C iff IK ≅ C",
        ),
    ];
    let results = laws::all_laws(&hs);
    for law in results {
        let anchor = anchors
            .iter()
            .find(|(name, _)| *name == law.name)
            .map_or("", |(_, a)| a);
        b.law(&format!("law.{}", law.name), anchor, law);
    }

    let items = b.items;
    let count = |s: Status| items.iter().filter(|i| i.status == s).count();
    let summary = Summary {
        total: items.len(),
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        skipped: count(Status::Skipped),
    };
    VerificationReport {
        items,
        summary,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: chrono::Utc::now().to_rfc3339(),
    }
}
