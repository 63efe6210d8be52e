//! Exhaustive lists of ideals containing the conductor, and the trace fibers
//! `T(E_m)` over integrally closed ideals.
//!
//! Every regular monomial trace ideal contains the conductor ideal, so
//! filtering the conductor-containing ideals by the trace test finds them all.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_CENSUS_BOUND: i64 = 30;
pub const CENSUS_BOUND_VAR: &str = "TRACE_FORGE_CENSUS_BOUND";

/// The census bound, overridable through `TRACE_FORGE_CENSUS_BOUND`.
pub fn census_bound() -> i64 {
    std::env::var(CENSUS_BOUND_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CENSUS_BOUND)
}

fn check_bound(h: &NumericalSemigroup, bound: i64) -> Result<()> {
    if h.conductor() > bound {
        Err(Error::BoundExceeded {
            conductor: h.conductor(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// Subsets `S` of `pool` (ascending) such that `z in S` forces every
/// `z + d` in the pool with `d` in `steps`. Candidates are decided from the top
/// down so that all required elements are already fixed.
fn closed_subsets(pool: &[i64], steps: impl Fn(i64) -> bool) -> Vec<Vec<bool>> {
    fn go(
        pool: &[i64],
        steps: &dyn Fn(i64) -> bool,
        idx: usize,
        chosen: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
    ) {
        if idx == 0 {
            out.push(chosen.clone());
            return;
        }
        let i = idx - 1;
        chosen[i] = false;
        go(pool, steps, i, chosen, out);
        let allowed = (i + 1..pool.len()).all(|j| chosen[j] || !steps(pool[j] - pool[i]));
        if allowed {
            chosen[i] = true;
            go(pool, steps, i, chosen, out);
            chosen[i] = false;
        }
    }
    let mut out = Vec::new();
    let mut chosen = vec![false; pool.len()];
    go(pool, &steps, pool.len(), &mut chosen, &mut out);
    out
}

/// All integral ideals `E` with `conductor ⊆ E ⊆ H`, sorted by minimum and
/// then by window.
pub fn conductor_ideals(h: &NumericalSemigroup, bound: i64) -> Result<Vec<SemigroupIdeal>> {
    check_bound(h, bound)?;
    let c = h.conductor();
    let pool: Vec<i64> = h.elements_below(c).collect();
    let mut ideals: Vec<SemigroupIdeal> = closed_subsets(&pool, |d| h.contains(d))
        .into_iter()
        .map(|chosen| {
            SemigroupIdeal::from_fn(h, 0, c, |z| {
                pool.iter().zip(&chosen).any(|(&p, &on)| on && p == z)
            })
        })
        .collect();
    sort_ideals(&mut ideals);
    Ok(ideals)
}

/// Relative ideals with minimum 0, one per isomorphism class of regular
/// fractional ideals: `H ⊆ E ⊆ N`.
pub fn relative_ideal_classes(h: &NumericalSemigroup, bound: i64) -> Result<Vec<SemigroupIdeal>> {
    check_bound(h, bound)?;
    let gaps = h.gaps();
    let mut ideals: Vec<SemigroupIdeal> = closed_subsets(&gaps, |d| h.contains(d))
        .into_iter()
        .map(|chosen| {
            SemigroupIdeal::from_fn(h, 0, h.conductor(), |z| {
                h.contains(z) || gaps.iter().zip(&chosen).any(|(&g, &on)| on && g == z)
            })
        })
        .collect();
    sort_ideals(&mut ideals);
    Ok(ideals)
}

fn sort_ideals(ideals: &mut [SemigroupIdeal]) {
    ideals.sort_by(|a, b| (a.min_element(), b.window()).cmp(&(b.min_element(), a.window())));
}

pub fn trace_ideals(h: &NumericalSemigroup, bound: i64) -> Result<Vec<SemigroupIdeal>> {
    Ok(conductor_ideals(h, bound)?
        .into_iter()
        .filter(SemigroupIdeal::is_trace_ideal)
        .collect())
}

pub fn stable_trace_ideals(h: &NumericalSemigroup, bound: i64) -> Result<Vec<SemigroupIdeal>> {
    Ok(trace_ideals(h, bound)?
        .into_iter()
        .filter(SemigroupIdeal::is_stable)
        .collect())
}

/// The integrally closed ideals containing the conductor: `E_m` for
/// `m in H`, `m <= conductor`.
pub fn integrally_closed_ideals(h: &NumericalSemigroup, bound: i64) -> Result<Vec<SemigroupIdeal>> {
    check_bound(h, bound)?;
    Ok(h.elements_below(h.conductor() + 1)
        .map(|m| SemigroupIdeal::above(h, m))
        .collect())
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FiberMember {
    #[serde(serialize_with = "serialize_display")]
    pub ideal: SemigroupIdeal,
    pub stable: bool,
}

/// The monomial part of `T(E_m)`: trace ideals whose integral closure is
/// `E_m`. Non-monomial members are not represented, so no completeness claim
/// is made for the full fiber.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceFiber {
    #[serde(serialize_with = "serialize_display")]
    pub closure: SemigroupIdeal,
    pub closure_stable: bool,
    pub members: Vec<FiberMember>,
    pub monomial_only: bool,
}

fn serialize_display<S: serde::Serializer>(
    ideal: &SemigroupIdeal,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(ideal)
}

impl TraceFiber {
    pub fn ideals(&self) -> Vec<SemigroupIdeal> {
        self.members.iter().map(|m| m.ideal.clone()).collect()
    }

    /// A stable closure makes the fiber the singleton of the closure.
    pub fn stable_closure_is_alone(&self) -> bool {
        !self.closure_stable || (self.members.len() == 1 && self.members[0].ideal == self.closure)
    }

    /// No stable member strictly contains another member.
    pub fn stable_members_are_minimal(&self) -> bool {
        self.members.iter().filter(|m| m.stable).all(|s| {
            self.members
                .iter()
                .all(|o| o.ideal == s.ideal || !o.ideal.is_subset(&s.ideal))
        })
    }
}

/// `T(E_m)` restricted to monomial ideals. For `m` past the conductor the
/// closure does not contain the conductor ideal and the fiber is empty.
pub fn trace_fiber(h: &NumericalSemigroup, m: i64, bound: i64) -> Result<TraceFiber> {
    if !h.contains(m) {
        return Err(Error::NotMember(m));
    }
    let closure = SemigroupIdeal::above(h, m);
    let members = if m > h.conductor() {
        Vec::new()
    } else {
        trace_ideals(h, bound)?
            .into_iter()
            .filter(|e| e.min_element() == m)
            .map(|ideal| FiberMember {
                stable: ideal.is_stable(),
                ideal,
            })
            .collect()
    };
    Ok(TraceFiber {
        closure_stable: closure.is_stable(),
        closure,
        members,
        monomial_only: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn strings(ideals: &[SemigroupIdeal]) -> Vec<String> {
        let mut v: Vec<String> = ideals.iter().map(|e| e.to_string()).collect();
        v.sort();
        v
    }

    /// Brute force: every subset of `H ∩ [0, c)` checked for closure.
    fn brute_conductor_ideals(h: &NumericalSemigroup) -> Vec<String> {
        let c = h.conductor();
        let pool: Vec<i64> = h.elements_below(c).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << pool.len()) {
            let member = |z: i64| {
                z >= c
                    || pool
                        .iter()
                        .enumerate()
                        .any(|(i, &p)| p == z && mask >> i & 1 == 1)
            };
            let closed = pool
                .iter()
                .all(|&s| !member(s) || h.elements_below(c).all(|d| member(s + d)));
            if closed {
                out.push(SemigroupIdeal::from_fn(h, 0, c, member).to_string());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn census_matches_brute_force() {
        for h in NumericalSemigroup::enumerate(10) {
            let fast = strings(&conductor_ideals(&h, 30).unwrap());
            assert_eq!(fast, brute_conductor_ideals(&h), "{h}");
        }
    }

    #[test]
    fn three_four_five() {
        let h = sgp(&[3, 4, 5]);
        let t = trace_ideals(&h, 30).unwrap();
        assert_eq!(strings(&t), vec!["{0,3->}", "{3->}"]);
        assert!(t.iter().all(SemigroupIdeal::is_stable));
    }

    #[test]
    fn naturals() {
        let h = NumericalSemigroup::naturals();
        assert_eq!(strings(&trace_ideals(&h, 30).unwrap()), vec!["{0->}"]);
        assert_eq!(conductor_ideals(&h, 30).unwrap().len(), 1);
    }

    #[test]
    fn four_five_six() {
        let h = sgp(&[4, 5, 6]);
        assert_eq!(conductor_ideals(&h, 30).unwrap().len(), 9);
        let mut expected = vec![
            "{0,4,5,6,8->}",
            "{4,5,6,8->}",
            "{6,8->}",
            "{4,6,8->}",
            "{5,6,8->}",
            "{8->}",
        ];
        expected.sort();
        assert_eq!(strings(&trace_ideals(&h, 30).unwrap()), expected);
        let mut stable = vec!["{0,4,5,6,8->}", "{6,8->}", "{4,6,8->}", "{8->}"];
        stable.sort();
        assert_eq!(strings(&stable_trace_ideals(&h, 30).unwrap()), stable);
    }

    #[test]
    fn bound_is_enforced() {
        let h = sgp(&[5, 7]);
        assert_eq!(
            conductor_ideals(&h, 10).unwrap_err(),
            Error::BoundExceeded {
                conductor: 24,
                bound: 10
            }
        );
    }

    #[test]
    fn fibers() {
        let h = sgp(&[4, 5, 6]);
        let fiber = trace_fiber(&h, 4, 30).unwrap();
        assert_eq!(strings(&fiber.ideals()), vec!["{4,5,6,8->}", "{4,6,8->}"]);
        assert!(fiber.stable_members_are_minimal());
        assert!(!fiber.closure_stable);

        let h = sgp(&[3, 4, 5]);
        let fiber = trace_fiber(&h, 3, 30).unwrap();
        assert_eq!(strings(&fiber.ideals()), vec!["{3->}"]);
        assert!(fiber.closure_stable && fiber.stable_closure_is_alone());

        for h in [sgp(&[3, 5]), sgp(&[4, 5, 6]), sgp(&[2, 3])] {
            let fiber = trace_fiber(&h, h.conductor(), 30).unwrap();
            assert_eq!(fiber.ideals(), vec![SemigroupIdeal::conductor_ideal(&h)]);
        }
        assert_eq!(trace_fiber(&h, 2, 30).unwrap_err(), Error::NotMember(2));
        assert!(trace_fiber(&h, 7, 30).unwrap().members.is_empty());
    }

    #[test]
    fn integrally_closed_list() {
        let h = sgp(&[4, 5, 6]);
        let ic = integrally_closed_ideals(&h, 30).unwrap();
        assert_eq!(strings(&ic), {
            let mut v = vec![
                "{0,4,5,6,8->}",
                "{4,5,6,8->}",
                "{5,6,8->}",
                "{6,8->}",
                "{8->}",
            ];
            v.sort();
            v
        });
    }
}
