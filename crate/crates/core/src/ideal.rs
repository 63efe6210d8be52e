//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal `E` is a subset of the integers, bounded below, with
//! `E + H ⊆ E`. It is the set of valuations of a regular monomial fractional
//! ideal of `k[[t^H]]`, and the ring operations become set operations:
//! products are Minkowski sums, colons `(I : J)` are differences
//! `E - F = {z : z + F ⊆ E}`, and isomorphism is translation.
//!
//! Every ideal contains all integers from `min + conductor` on, so a window
//! of `conductor + 1` bits determines it. Each binary operation below states
//! the exact window it evaluates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemigroupIdeal {
    over: NumericalSemigroup,
    min: i64,
    /// Membership on `[min, min + conductor]`.
    window: Vec<bool>,
    generators: Vec<i64>,
}

impl SemigroupIdeal {
    /// Builds the ideal whose members in `[lo, hi)` are given by `member` and
    /// which contains every integer from `hi` on. The caller guarantees that
    /// the result is closed under adding `H`.
    pub(crate) fn from_fn(
        over: &NumericalSemigroup,
        lo: i64,
        hi: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let ideal = Self::from_fn_unchecked(over, lo, hi, member);
        debug_assert!(ideal.is_closed(), "not an ideal: {ideal}");
        ideal
    }

    fn from_fn_unchecked(
        over: &NumericalSemigroup,
        lo: i64,
        hi: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let is_member = |z: i64| z >= hi || (z >= lo && member(z));
        let min = (lo..hi).find(|&z| is_member(z)).unwrap_or(hi.max(lo));
        let c = over.conductor();
        let window: Vec<bool> = (min..=min + c).map(is_member).collect();
        let mut ideal = Self {
            over: over.clone(),
            min,
            window,
            generators: Vec::new(),
        };
        ideal.generators = ideal.compute_generators();
        ideal
    }

    /// `E = ∪ (g + H)` over the given generators.
    pub fn from_generators(over: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        let lo = *gens.iter().min().ok_or(Error::EmptyInput)?;
        let hi = lo + over.conductor();
        Ok(Self::from_fn(over, lo, hi, |z| {
            gens.iter().any(|&g| over.contains(z - g))
        }))
    }

    /// Parses the tail notation `{5,8,10->}`: listed members plus a tail.
    /// The set must be closed under adding `H`.
    pub fn from_tail_notation(over: &NumericalSemigroup, text: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad ideal set `{text}`"));
        let body = text
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(err)?;
        let mut listed = Vec::new();
        let mut tail = None;
        for part in body.split(',').map(str::trim) {
            if tail.is_some() {
                return Err(err());
            }
            if let Some(k) = part.strip_suffix("->") {
                tail = Some(k.trim().parse::<i64>().map_err(|_| err())?);
            } else {
                listed.push(part.parse::<i64>().map_err(|_| err())?);
            }
        }
        let tail = tail.ok_or_else(err)?;
        let lo = listed.iter().copied().chain([tail]).min().unwrap();
        let ideal = Self::from_fn_unchecked(over, lo, tail, |z| listed.contains(&z));
        let consistent = (lo..tail + over.conductor() + over.multiplicity())
            .all(|z| ideal.contains(z) == (z >= tail || listed.contains(&z)));
        if !consistent || !ideal.is_closed() {
            return Err(Error::NotClosed(format!(
                "`{text}` is not an ideal over {over}"
            )));
        }
        Ok(ideal)
    }

    /// The ring itself.
    pub fn whole(over: &NumericalSemigroup) -> Self {
        Self::from_fn(over, 0, over.conductor(), |z| over.contains(z))
    }

    /// `H \ {0}`; for the naturals this is `{1->}`.
    pub fn maximal(over: &NumericalSemigroup) -> Self {
        let c = over.conductor().max(1);
        Self::from_fn(over, 1, c, |z| over.contains(z))
    }

    /// The conductor ideal `{conductor->}`.
    pub fn conductor_ideal(over: &NumericalSemigroup) -> Self {
        let c = over.conductor();
        Self::from_fn(over, c, c, |_| false)
    }

    /// `{h in H : h >= m}`, the integrally closed ideal with minimum `m`.
    pub fn above(over: &NumericalSemigroup, m: i64) -> Self {
        let m = m.max(0);
        Self::from_fn(over, m, m + over.conductor(), |z| over.contains(z))
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.over
    }

    pub fn min_element(&self) -> i64 {
        self.min
    }

    /// Members not of the form `e + h` with `e` a member and `h` a nonzero
    /// element of `H`.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn window(&self) -> &[bool] {
        &self.window
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            false
        } else {
            let offset = (z - self.min) as usize;
            offset >= self.window.len() || self.window[offset]
        }
    }

    /// Smallest `k` such that every integer `>= k` is a member.
    pub fn tail_start(&self) -> i64 {
        let top = self.min + self.over.conductor();
        (self.min..=top)
            .rev()
            .find(|&z| !self.contains(z))
            .map_or(self.min, |z| z + 1)
    }

    /// Members in `[min, bound)`.
    pub fn elements_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (self.min..bound).filter(move |&z| self.contains(z))
    }

    fn compute_generators(&self) -> Vec<i64> {
        let top = self.min + self.over.conductor() + self.over.multiplicity();
        (self.min..top)
            .filter(|&z| self.contains(z))
            .filter(|&z| !(1..=z - self.min).any(|h| self.over.contains(h) && self.contains(z - h)))
            .collect()
    }

    fn is_closed(&self) -> bool {
        let top = self.min + self.over.conductor();
        self.elements_below(top).all(|e| {
            self.over
                .elements_below(top - e + 1)
                .all(|h| self.contains(e + h))
        })
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.over == other.over {
            Ok(())
        } else {
            Err(Error::MixedSemigroups)
        }
    }

    pub fn translate(&self, k: i64) -> Self {
        Self {
            over: self.over.clone(),
            min: self.min + k,
            window: self.window.clone(),
            generators: self.generators.iter().map(|g| g + k).collect(),
        }
    }

    /// Translate so that the minimum is 0.
    pub fn normalized(&self) -> Self {
        self.translate(-self.min)
    }

    /// Isomorphism of fractional ideals: equality up to translation.
    pub fn isomorphic(&self, other: &Self) -> bool {
        self.over == other.over && self.window == other.window
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.min < other.min {
            return false;
        }
        let top = self.min.max(other.min) + self.over.conductor();
        self.elements_below(top).all(|z| other.contains(z))
    }

    /// Contained in the ring.
    pub fn is_integral(&self) -> bool {
        self.min >= 0
            && self
                .elements_below(self.over.conductor())
                .all(|z| self.over.contains(z))
    }

    /// `E + F`, evaluated on `[minE + minF, minE + minF + conductor)`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.sum_unchecked(other))
    }

    fn sum_unchecked(&self, other: &Self) -> Self {
        let lo = self.min + other.min;
        let hi = lo + self.over.conductor();
        Self::from_fn(&self.over, lo, hi, |z| {
            self.elements_below(z - other.min + 1)
                .any(|e| other.contains(z - e))
        })
    }

    /// The `n`-fold sum `E + ... + E`; `n = 0` gives the ring.
    pub fn power(&self, n: usize) -> Self {
        (0..n).fold(Self::whole(&self.over), |acc, _| acc.sum_unchecked(self))
    }

    /// `E - F = {z : z + F ⊆ E}`, evaluated on
    /// `[minE - minF, minE - minF + conductor)`; everything above is a member.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.difference_unchecked(other))
    }

    fn difference_unchecked(&self, other: &Self) -> Self {
        let lo = self.min - other.min;
        let hi = lo + self.over.conductor();
        Self::from_fn(&self.over, lo, hi, |z| {
            other.generators.iter().all(|&f| self.contains(z + f))
        })
    }

    /// `H - E`, the dual `Hom(E, R)`.
    pub fn dual(&self) -> Self {
        Self::whole(&self.over).difference_unchecked(self)
    }

    /// `E - E`, the endomorphism ring of `E`.
    pub fn endomorphisms(&self) -> Self {
        self.difference_unchecked(self)
    }

    /// `E + (H - E)`; always integral and invariant under translation.
    pub fn trace(&self) -> Self {
        self.sum_unchecked(&self.dual())
    }

    pub fn is_trace_ideal(&self) -> bool {
        self.is_integral() && self.trace() == *self
    }

    /// `E + E = minE + E`. For a monomial ideal the only possible reduction
    /// is the element of least valuation.
    pub fn is_stable(&self) -> bool {
        self.sum_unchecked(self) == self.translate(self.min)
    }

    /// `(minE + H) - E`, the colon `(x) : E` by the least-valuation element.
    pub fn principal_colon(&self) -> Self {
        Self::from_generators(&self.over, &[self.min])
            .expect("one generator")
            .difference_unchecked(self)
    }

    /// `{h in H : h >= minE}`; the valuation criterion for one-branch rings.
    pub fn integral_closure(&self) -> Result<Self> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok(Self::above(&self.over, self.min))
    }

    pub fn is_integrally_closed(&self) -> bool {
        self.integral_closure()
            .is_ok_and(|closure| closure == *self)
    }

    /// `B(E) = ∪ (nE - n minE)`. The sets increase with `n` and stop
    /// growing as soon as two consecutive ones agree.
    pub fn blowup(&self) -> Self {
        let step = self.normalized();
        let mut current = step.clone();
        loop {
            let next = current.sum_unchecked(&step);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// `b(E) = H - B(E)`, the conductor of the blow-up into the ring.
    pub fn blowup_conductor(&self) -> Self {
        Self::whole(&self.over).difference_unchecked(&self.blowup())
    }

    /// `H - (H - E) = E`.
    pub fn is_reflexive(&self) -> bool {
        self.dual().dual() == *self
    }

    pub fn is_self_dual(&self) -> bool {
        self.isomorphic(&self.dual())
    }

    /// Smallest `n` in `1..=max(conductor, 1)` with `x + nE = (n+1)E`, if any.
    pub fn reduction_exponent(&self, x: i64) -> Result<Option<usize>> {
        if !self.contains(x) {
            return Err(Error::NotMember(x));
        }
        let bound = self.over.conductor().max(1) as usize;
        let mut power = self.clone();
        for n in 1..=bound {
            let next = power.sum_unchecked(self);
            if power.translate(x) == next {
                return Ok(Some(n));
            }
            power = next;
        }
        Ok(None)
    }

    pub fn is_reduction(&self, x: i64) -> Result<bool> {
        Ok(self.reduction_exponent(x)?.is_some())
    }

    /// Set intersection, evaluated on `[max(minE, minF), max + conductor)`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let lo = self.min.max(other.min);
        let hi = lo + self.over.conductor();
        Ok(Self::from_fn(&self.over, lo, hi, |z| {
            self.contains(z) && other.contains(z)
        }))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            semigroup: self.over.minimal_generators().to_vec(),
            min_element: self.min,
            minimal_generators: self.generators.clone(),
            window: self.window.iter().map(|&b| u8::from(b)).collect(),
        }
    }
}

impl fmt::Display for SemigroupIdeal {
    /// Tail notation: the members below the tail, then `k->`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tail = self.tail_start();
        let mut parts: Vec<String> = self.elements_below(tail).map(|z| z.to_string()).collect();
        parts.push(format!("{tail}->"));
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.over)
    }
}

/// Wire format of a relative ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealJson {
    pub semigroup: Vec<i64>,
    pub min_element: i64,
    pub minimal_generators: Vec<i64>,
    pub window: Vec<u8>,
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<SemigroupIdeal> {
        let over = NumericalSemigroup::from_generators(&self.semigroup)?;
        let ideal = SemigroupIdeal::from_generators(&over, &self.minimal_generators)?;
        if ideal.to_json() != *self {
            return Err(Error::Parse("window disagrees with the generators".into()));
        }
        Ok(ideal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn ideal(h: &NumericalSemigroup, gens: &[i64]) -> SemigroupIdeal {
        SemigroupIdeal::from_generators(h, gens).unwrap()
    }

    fn set(h: &NumericalSemigroup, text: &str) -> SemigroupIdeal {
        SemigroupIdeal::from_tail_notation(h, text).unwrap()
    }

    #[test]
    fn construction() {
        let h = sgp(&[3, 5]);
        let j = ideal(&h, &[5, 12]);
        assert_eq!(j.to_string(), "{5,8,10->}");
        assert_eq!(j.minimal_generators(), &[5, 12]);
        assert_eq!(ideal(&h, &[0]), SemigroupIdeal::whole(&h));

        let h = sgp(&[4, 5, 6]);
        let e = ideal(&h, &[4, 6]);
        assert_eq!(e.to_string(), "{4,6,8->}");
        assert_eq!(e.minimal_generators(), &[4, 6]);
        assert_eq!(
            SemigroupIdeal::from_generators(&h, &[]),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn tail_notation_parsing() {
        let h = sgp(&[3, 5]);
        let j = ideal(&h, &[5, 12]);
        assert_eq!(set(&h, "{5,8,10,11,12->}"), j);
        assert_eq!(set(&h, " {5, 8, 10->} "), j);
        assert!(SemigroupIdeal::from_tail_notation(&h, "{5,9->}").is_err());
        assert!(SemigroupIdeal::from_tail_notation(&h, "5,8").is_err());
        assert!(SemigroupIdeal::from_tail_notation(&h, "{5->,8}").is_err());
    }

    #[test]
    fn products() {
        let h = sgp(&[3, 5]);
        let m = SemigroupIdeal::maximal(&h);
        assert_eq!(m.to_string(), "{3,5,6,8->}");
        assert_eq!(m.product(&m).unwrap().to_string(), "{6,8->}");
        let e = ideal(&h, &[5, 12]);
        assert_eq!(e.product(&SemigroupIdeal::whole(&h)).unwrap(), e);

        let h = sgp(&[4, 5, 6]);
        let e = set(&h, "{4,6,8->}");
        assert_eq!(e.product(&e).unwrap().to_string(), "{8,10,12->}");
        assert_eq!(e.power(0), SemigroupIdeal::whole(&h));
        assert_eq!(e.power(2), e.product(&e).unwrap());
    }

    #[test]
    fn mixed_semigroups_rejected() {
        let a = SemigroupIdeal::whole(&sgp(&[3, 5]));
        let b = SemigroupIdeal::whole(&sgp(&[3, 4, 5]));
        assert_eq!(a.product(&b), Err(Error::MixedSemigroups));
        assert_eq!(a.difference(&b), Err(Error::MixedSemigroups));
        assert_eq!(a.intersect(&b), Err(Error::MixedSemigroups));
    }

    #[test]
    fn differences() {
        let h = sgp(&[3, 5]);
        let j = ideal(&h, &[5, 12]);
        let dual = j.dual();
        assert_eq!(dual.to_string(), "{-2,0,1,3->}");
        assert_eq!(dual.minimal_generators(), &[-2, 0]);
        assert_eq!(
            SemigroupIdeal::whole(&h).endomorphisms(),
            SemigroupIdeal::whole(&h)
        );

        let h = sgp(&[4, 5, 6]);
        let e = set(&h, "{4,6,8->}");
        assert_eq!(e.endomorphisms().to_string(), "{0,2,4->}");
        assert_eq!(e.endomorphisms(), e.translate(-4));
    }

    #[test]
    fn traces() {
        let h = sgp(&[3, 5]);
        let j = ideal(&h, &[5, 12]);
        let m = SemigroupIdeal::maximal(&h);
        assert_eq!(j.trace(), m);
        assert!(m.is_trace_ideal());
        assert_eq!(SemigroupIdeal::whole(&h).trace(), SemigroupIdeal::whole(&h));

        let h = sgp(&[4, 5, 6]);
        let e = set(&h, "{5,6,8->}");
        assert_eq!(e.dual().to_string(), "{0,3->}");
        assert_eq!(e.trace(), e);
        let principal = ideal(&h, &[4]);
        assert!(!principal.is_trace_ideal());
        assert_eq!(principal.trace(), SemigroupIdeal::whole(&h));
        assert_eq!(principal.dual().to_string(), "{-4,0,1,2,4->}");
        assert_eq!(principal.translate(-4).dual(), SemigroupIdeal::whole(&h));
    }

    #[test]
    fn trace_of_translate_is_unchanged() {
        let h = sgp(&[4, 5, 6]);
        let e = set(&h, "{5,6,8->}");
        assert_eq!(e.translate(-11).trace(), e.trace());
        assert_eq!(e.translate(3).trace(), e.trace());
    }

    #[test]
    fn conductor_ideal_is_trace_everywhere() {
        for h in NumericalSemigroup::enumerate(9) {
            assert!(SemigroupIdeal::conductor_ideal(&h).is_trace_ideal(), "{h}");
        }
    }

    #[test]
    fn stability() {
        let h = sgp(&[3, 5]);
        assert!(!SemigroupIdeal::maximal(&h).is_stable());
        let h = sgp(&[4, 5, 6]);
        assert!(set(&h, "{4,6,8->}").is_stable());
        assert!(!set(&h, "{5,6,8->}").is_stable());
    }

    #[test]
    fn integral_closures() {
        let h = sgp(&[4, 5, 6]);
        let e = set(&h, "{4,6,8->}");
        assert_eq!(e.integral_closure().unwrap(), SemigroupIdeal::maximal(&h));
        assert_eq!(
            SemigroupIdeal::maximal(&h).integral_closure().unwrap(),
            SemigroupIdeal::maximal(&h)
        );
        let h = sgp(&[3, 5]);
        let j = ideal(&h, &[5, 12]);
        assert_eq!(j.integral_closure().unwrap().to_string(), "{5,6,8->}");
        assert_eq!(j.dual().integral_closure(), Err(Error::NotIntegral));
        assert!(!j.is_integrally_closed());
    }

    #[test]
    fn blowups() {
        let h = sgp(&[3, 5]);
        let m = SemigroupIdeal::maximal(&h);
        assert_eq!(m.blowup().to_string(), "{0,2->}");
        assert_eq!(m.blowup_conductor().to_string(), "{6,8->}");

        let h = sgp(&[4, 5, 6]);
        let m = SemigroupIdeal::maximal(&h);
        assert_eq!(m.blowup().to_string(), "{0->}");
        assert_eq!(m.blowup_conductor(), SemigroupIdeal::conductor_ideal(&h));
        let e = set(&h, "{4,6,8->}");
        assert_eq!(e.blowup(), e.endomorphisms());
        assert_eq!(e.blowup_conductor(), e);
    }

    #[test]
    fn reflexivity() {
        let h = sgp(&[3, 5]);
        let m = SemigroupIdeal::maximal(&h);
        assert_eq!(m.dual().to_string(), "{0,3,5->}");
        assert!(m.is_reflexive());
        let r = SemigroupIdeal::whole(&h);
        assert!(r.is_reflexive() && r.is_self_dual());

        let h = sgp(&[4, 5, 6]);
        assert!(set(&h, "{4,6,8->}").is_self_dual());
    }

    #[test]
    fn reductions() {
        let h = sgp(&[4, 5, 6]);
        let m = SemigroupIdeal::maximal(&h);
        assert_eq!(m.reduction_exponent(4).unwrap(), Some(2));
        assert_eq!(m.reduction_exponent(5).unwrap(), None);
        assert_eq!(m.reduction_exponent(7), Err(Error::NotMember(7)));
        let e = set(&h, "{4,6,8->}");
        assert_eq!(e.reduction_exponent(4).unwrap(), Some(1));
    }

    #[test]
    fn intersections() {
        let h = sgp(&[4, 5, 6]);
        let a = set(&h, "{4,6,8->}");
        let b = set(&h, "{5,6,8->}");
        assert_eq!(a.intersect(&b).unwrap().to_string(), "{6,8->}");
        assert_eq!(a.intersect(&SemigroupIdeal::whole(&h)).unwrap(), a);
        for h in NumericalSemigroup::enumerate(8)
            .into_iter()
            .filter(|h| !h.is_naturals())
        {
            let c = SemigroupIdeal::conductor_ideal(&h);
            assert_eq!(SemigroupIdeal::maximal(&h).intersect(&c).unwrap(), c, "{h}");
        }
    }

    #[test]
    fn json_round_trip() {
        let h = sgp(&[3, 5]);
        let j = ideal(&h, &[5, 12]);
        let json = serde_json::to_string(&j.to_json()).unwrap();
        assert!(json.contains("\"minElement\":5"));
        let back: IdealJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_ideal().unwrap(), j);
    }
}
