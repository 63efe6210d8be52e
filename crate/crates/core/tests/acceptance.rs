//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one pass/fail line; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use trace_forge::census;
use trace_forge::laws;
use trace_forge::report::{parameter_ideal_check, PARAMETER_SWEEP};
use trace_forge::{NumericalSemigroup, Rational, SemigroupIdeal};

const BOUND: i64 = 12;

type Check = Result<String, String>;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn sgp(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

fn set(h: &NumericalSemigroup, text: &str) -> SemigroupIdeal {
    SemigroupIdeal::from_tail_notation(h, text).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn sorted_strings(ideals: &[SemigroupIdeal]) -> Vec<String> {
    let mut v: Vec<String> = ideals.iter().map(ToString::to_string).collect();
    v.sort();
    v
}

fn hypersurface_example() -> Check {
    let h = sgp(&[3, 5]);
    let j = SemigroupIdeal::from_generators(&h, &[5, 12]).unwrap();
    let m = SemigroupIdeal::maximal(&h);
    ensure(j.trace() == m, || format!("tr(J) = {}", j.trace()))?;
    ensure(j.principal_colon() == m, || {
        format!("(5+H)-J = {}", j.principal_colon())
    })?;
    ensure(!m.is_stable(), || "M is stable".into())?;
    Ok(format!("tr(J) = (5+H)-J = {m}, M not stable"))
}

fn four_five_six_example() -> Check {
    let h = sgp(&[4, 5, 6]);
    let traces = census::trace_ideals(&h, BOUND).unwrap();
    let stable = census::stable_trace_ideals(&h, BOUND).unwrap();
    let expected_stable = ["{0,4,5,6,8->}", "{4,6,8->}", "{6,8->}", "{8->}"];
    ensure(traces.len() == 6, || {
        format!("{} trace ideals", traces.len())
    })?;
    ensure(
        sorted_strings(&stable) == sorted_strings(&expected_stable.map(|s| set(&h, s))),
        || format!("stable trace ideals {:?}", sorted_strings(&stable)),
    )?;
    let fiber = census::trace_fiber(&h, 4, BOUND).unwrap();
    let expected_fiber = [SemigroupIdeal::maximal(&h), set(&h, "{4,6,8->}")];
    ensure(
        sorted_strings(&fiber.ideals()) == sorted_strings(&expected_fiber),
        || format!("fiber over M {:?}", sorted_strings(&fiber.ideals())),
    )?;
    for (n, d) in PARAMETER_SWEEP {
        let a = Rational::new(n.into(), d.into());
        parameter_ideal_check(&a).map_err(|e| format!("I_a at a={a}: {e}"))?;
    }
    Ok("6 trace ideals, 4 stable, T(M) = {M, {4,6,8->}}, I_a stable trace with closure M for 5 values of a".into())
}

fn arf_suite(hs: &[NumericalSemigroup]) -> Check {
    ensure(sgp(&[2, 3]).is_arf(), || "<2,3> not Arf".into())?;
    for e in 2..=5i64 {
        for n in 1..=3i64 {
            let gens: Vec<i64> = std::iter::once(e)
                .chain((1..e).map(|i| n * e + i))
                .collect();
            ensure(sgp(&gens).is_arf(), || format!("{:?} not Arf", gens))?;
        }
    }
    // Tallied separately so a failure shows which direction breaks.
    let mut stable_leg = Vec::new();
    let mut forward = Vec::new();
    let mut converse = Vec::new();
    for h in hs {
        let traces = census::trace_ideals(h, BOUND).unwrap();
        let all_stable = traces.iter().all(SemigroupIdeal::is_stable);
        let coincide = laws::trace_ideals_are_integrally_closed(h, BOUND);
        if h.is_arf() != all_stable {
            stable_leg.push(h.to_string());
        }
        if h.is_arf() && !coincide {
            forward.push(h.to_string());
        }
        if !h.is_arf() && coincide {
            converse.push(h.to_string());
        }
    }
    let summary = format!(
        "{} semigroups; arf <=> all trace stable: {} exceptions; arf => trace = integrally closed: {} exceptions; \
         trace = integrally closed => arf: {} exceptions",
        hs.len(),
        stable_leg.len(),
        forward.len(),
        converse.len()
    );
    if stable_leg.is_empty() && forward.is_empty() && converse.is_empty() {
        Ok(summary)
    } else {
        let first: Vec<String> = stable_leg
            .iter()
            .chain(&forward)
            .chain(&converse)
            .take(3)
            .cloned()
            .collect();
        Err(format!("{summary} (first: {})", first.join(", ")))
    }
}

fn hom_identity_suite(hs: &[NumericalSemigroup]) -> Check {
    let mut pairs = 0;
    for h in hs {
        let stable = census::stable_trace_ideals(h, BOUND).unwrap();
        for e in &stable {
            for f in &stable {
                let both = e.intersect(f).unwrap();
                if !(both.is_trace_ideal() && both.is_stable()) {
                    continue;
                }
                pairs += 1;
                let fe = f.difference(e).unwrap();
                let ef = e.difference(f).unwrap();
                let tr = e.product(f).unwrap().trace();
                ensure(fe.isomorphic(&ef), || format!("{h}: F-E={fe}, E-F={ef}"))?;
                ensure(fe.isomorphic(&tr), || {
                    format!("{h}: F-E={fe}, tr(E+F)={tr}")
                })?;
                ensure(tr.isomorphic(&both), || {
                    format!("{h}: tr(E+F)={tr}, E∩F={both}")
                })?;
            }
        }
    }
    Ok(format!("{pairs} pairs, zero exceptions"))
}

fn closure_suite(hs: &[NumericalSemigroup]) -> Check {
    let mut traces_seen = 0;
    let mut fibers = 0;
    for h in hs {
        for e in census::trace_ideals(h, BOUND).unwrap() {
            traces_seen += 1;
            let closure = e.integral_closure().unwrap();
            ensure(closure.is_trace_ideal(), || {
                format!("{h}: closure of {e} is {closure}")
            })?;
        }
        for m in h.elements_below(h.conductor() + 1) {
            fibers += 1;
            let fiber = census::trace_fiber(h, m, BOUND).unwrap();
            let members = fiber.ideals();
            for s in fiber.members.iter().filter(|x| x.stable) {
                let minimal = members
                    .iter()
                    .all(|other| other == &s.ideal || !other.is_subset(&s.ideal));
                ensure(minimal, || {
                    format!("{h}: stable {} not minimal in fiber over {m}", s.ideal)
                })?;
            }
            let em = SemigroupIdeal::above(h, m);
            if em.is_stable() {
                ensure(members == vec![em.clone()], || {
                    format!("{h}: stable {em} has fiber {:?}", sorted_strings(&members))
                })?;
            }
        }
    }
    Ok(format!("{traces_seen} trace ideals, {fibers} fibers"))
}

fn gorenstein_suite(hs: &[NumericalSemigroup]) -> Check {
    let mut minimal = 0;
    for h in hs {
        let f = h.gorenstein_flavors();
        if f.minimal_multiplicity {
            minimal += 1;
            ensure(f.nearly_gorenstein == f.almost_gorenstein, || {
                format!("{h}: {f:?}")
            })?;
        }
        let k = h.canonical_ideal();
        let c = SemigroupIdeal::conductor_ideal(h);
        let lhs = k.trace() == c;
        let rhs = k.product(&k).unwrap().isomorphic(&c);
        ensure(lhs == rhs, || {
            format!("{h}: tr(K)=C is {lhs}, K+K≅C is {rhs}")
        })?;
    }
    let f = sgp(&[3, 4, 5]).gorenstein_flavors();
    ensure(f.nearly_gorenstein && f.almost_gorenstein, || {
        format!("<3,4,5>: {f:?}")
    })?;
    for gens in [&[3, 7, 8][..], &[4, 5, 6, 7]] {
        let h = sgp(gens);
        let k = h.canonical_ideal();
        let c = SemigroupIdeal::conductor_ideal(&h);
        ensure(k.trace() == c, || format!("{h}: tr(K) = {}", k.trace()))?;
        ensure(k.product(&k).unwrap().isomorphic(&c), || {
            format!("{h}: K+K not ≅ C")
        })?;
    }
    let f = sgp(&[3, 7, 8]).gorenstein_flavors();
    ensure(!f.nearly_gorenstein && !f.almost_gorenstein, || {
        format!("<3,7,8>: {f:?}")
    })?;
    let h = sgp(&[4, 5, 6, 7]);
    ensure(
        SemigroupIdeal::maximal(&h) == SemigroupIdeal::conductor_ideal(&h),
        || "<4,5,6,7>: M differs from C".into(),
    )?;
    Ok(format!(
        "{minimal} minimal-multiplicity semigroups, fixtures match"
    ))
}

fn oracle_equivalence() -> Check {
    let mut cases = 0;
    for gens in [&[3, 5][..], &[4, 5, 6], &[3, 4, 5]] {
        let law = laws::oracle_agrees_with_semigroup_engine(&sgp(gens));
        ensure(law.holds(), || format!("{:?}", law.counterexamples))?;
        cases += law.cases;
    }
    Ok(format!(
        "{cases} ideal/precision cases agree at N = 4c+4 and 4c+12"
    ))
}

fn property_suites(hs: &[NumericalSemigroup]) -> Check {
    let checks = [
        laws::arf_by_integrally_closed_ideals(hs),
        laws::arf_closure_is_a_closure(hs),
        laws::canonical_duality(hs),
        laws::gorenstein_flavor_implications(hs),
        laws::minimal_multiplicity_nearly_iff_almost(hs),
        laws::colon_correctness(hs),
        laws::trace_idempotent(hs),
        laws::stable_trace_equivalences(hs),
        laws::stable_trace_is_principal_colon(hs),
        laws::principal_colon_converse_fails(),
        laws::stable_ideal_trace(hs),
        laws::blowup_conductor_in_trace(hs),
        laws::reflexive_stability_criteria(hs),
        laws::stable_trace_reflexive_criteria(hs),
        laws::reflexive_trace_stability(hs),
    ];
    let cases: usize = checks.iter().map(|l| l.cases).sum();
    for law in &checks {
        ensure(law.holds(), || {
            format!("{}: {:?}", law.name, law.counterexamples)
        })?;
        ensure(law.cases > 0, || format!("{} examined nothing", law.name))?;
    }
    Ok(format!("{} laws, {cases} cases", checks.len()))
}

fn main() -> ExitCode {
    let hs = laws::universe(BOUND);
    let criteria: Vec<Criterion> = vec![
        (
            "hypersurface example over <3,5>",
            Box::new(hypersurface_example),
        ),
        (
            "census, fiber and I_a over <4,5,6>",
            Box::new(four_five_six_example),
        ),
        ("Arf suite, conductor <= 12", Box::new(|| arf_suite(&hs))),
        (
            "Hom identities, conductor <= 12",
            Box::new(|| hom_identity_suite(&hs)),
        ),
        (
            "closure and fiber suite, conductor <= 12",
            Box::new(|| closure_suite(&hs)),
        ),
        (
            "canonical ideal suite, conductor <= 12",
            Box::new(|| gorenstein_suite(&hs)),
        ),
        ("oracle equivalence", Box::new(oracle_equivalence)),
        (
            "property suites, conductor <= 12",
            Box::new(|| property_suites(&hs)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
