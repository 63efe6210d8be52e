//! Numerical semigroups: cofinite submonoids of the naturals.
//!
//! A semigroup `H` stands for the ring `k[[t^h : h in H]]`. Its maximal ideal
//! is `H \ {0}`, its conductor ideal is `{z >= conductor}` and its integral
//! closure is all of the naturals. Every query below the conductor is a table
//! lookup.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::SemigroupIdeal;

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    generators: Vec<i64>,
    frobenius: i64,
    multiplicity: i64,
    /// Membership on `[0, conductor]`.
    small: Vec<bool>,
}

/// A numerical semigroup. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    inner: Arc<Inner>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, with minimal generators recomputed.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let gcd = gens.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::GcdNotOne { gcd });
        }

        // Apery set with respect to the smallest generator: shortest paths on
        // the residues modulo m, each generator being an edge of its own weight.
        let m = *gens.iter().min().unwrap();
        let mu = m as usize;
        let mut apery = vec![i64::MAX; mu];
        apery[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, 0usize)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > apery[r] {
                continue;
            }
            for &g in gens {
                let next = (r + g as usize) % mu;
                if d + g < apery[next] {
                    apery[next] = d + g;
                    heap.push(Reverse((d + g, next)));
                }
            }
        }
        let frobenius = apery.iter().max().copied().unwrap() - m;
        let conductor = frobenius + 1;
        let small = (0..=conductor)
            .map(|z| apery[(z % m) as usize] <= z)
            .collect();
        Ok(Self::from_table(small, frobenius))
    }

    /// The semigroup whose members below `limit` are those with `member(z)`
    /// and which contains every integer from `limit` on.
    pub fn from_membership(limit: i64, member: impl Fn(i64) -> bool) -> Result<Self> {
        let limit = limit.max(0);
        let is_member = |z: i64| z == 0 || z >= limit || member(z);
        let frobenius = (0..limit).rev().find(|&z| !is_member(z)).unwrap_or(-1);
        let small: Vec<bool> = (0..=frobenius + 1).map(is_member).collect();
        for x in 1..=frobenius {
            if !small[x as usize] {
                continue;
            }
            for y in x..=frobenius - x {
                if small[y as usize] && !small[(x + y) as usize] {
                    return Err(Error::NotClosed(format!(
                        "{x} + {y} = {} is missing",
                        x + y
                    )));
                }
            }
        }
        Ok(Self::from_table(small, frobenius))
    }

    /// The semigroup with the given gap set.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        if gaps.iter().any(|&g| g <= 0) {
            return Err(Error::NotClosed("gaps must be positive".into()));
        }
        let limit = gaps.iter().max().map_or(0, |g| g + 1);
        Self::from_membership(limit, |z| !gaps.contains(&z))
    }

    /// The naturals: the semigroup of a discrete valuation ring.
    pub fn naturals() -> Self {
        Self::from_table(vec![true], -1)
    }

    fn from_table(small: Vec<bool>, frobenius: i64) -> Self {
        let conductor = frobenius + 1;
        let contains = |z: i64| z >= conductor || (z >= 0 && small[z as usize]);
        let multiplicity = (1..).find(|&z| contains(z)).unwrap();
        let generators = (1..=(conductor + multiplicity - 1).max(multiplicity))
            .filter(|&z| contains(z) && !(1..=z / 2).any(|a| contains(a) && contains(z - a)))
            .collect();
        Self {
            inner: Arc::new(Inner {
                generators,
                frobenius,
                multiplicity,
                small,
            }),
        }
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.inner.generators
    }

    /// Largest gap, `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.inner.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.inner.frobenius + 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.inner.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.inner.generators.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.inner.frobenius < 0
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z >= self.conductor() {
            true
        } else {
            self.inner.small[z as usize]
        }
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..self.conductor())
            .filter(|&z| !self.contains(z))
            .collect()
    }

    pub fn genus(&self) -> usize {
        self.gaps().len()
    }

    /// Members in `[0, bound)`, ascending.
    pub fn elements_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..bound.max(0)).filter(move |&z| self.contains(z))
    }

    /// True iff `x + y - z` is a member for all members `x >= y >= z`.
    ///
    /// Only `x` below the conductor needs checking: otherwise `x + y - z >= x`
    /// already lies past the conductor.
    pub fn is_arf(&self) -> bool {
        let below: Vec<i64> = self.elements_below(self.conductor()).collect();
        below.iter().enumerate().all(|(i, &x)| {
            below[..=i]
                .iter()
                .enumerate()
                .all(|(j, &y)| below[..=j].iter().all(|&z| self.contains(x + y - z)))
        })
    }

    /// The smallest Arf semigroup containing `self`, obtained by adding
    /// `x + y - z` for violating triples until none remain.
    pub fn arf_closure(&self) -> Self {
        let c = self.conductor().max(0);
        let mut member: Vec<bool> = (0..c).map(|z| self.contains(z)).collect();
        let contains = |member: &[bool], z: i64| z >= c || (z >= 0 && member[z as usize]);
        loop {
            let below: Vec<i64> = (0..c).filter(|&z| member[z as usize]).collect();
            let mut added = false;
            for (i, &x) in below.iter().enumerate() {
                for (j, &y) in below[..=i].iter().enumerate() {
                    for &z in &below[..=j] {
                        let w = x + y - z;
                        if !contains(&member, w) {
                            member[w as usize] = true;
                            added = true;
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
        Self::from_membership(c, |z| member[z as usize])
            .expect("an Arf-saturated set is additively closed")
    }

    /// The standard canonical ideal `{z : frobenius - z not in H}`; its
    /// minimum is 0 and it contains `H`.
    pub fn canonical_ideal(&self) -> SemigroupIdeal {
        let f = self.frobenius();
        SemigroupIdeal::from_fn(self, 0, self.conductor(), |z| !self.contains(f - z))
    }

    pub fn gorenstein_flavors(&self) -> GorensteinFlavors {
        let ring = SemigroupIdeal::whole(self);
        let maximal = SemigroupIdeal::maximal(self);
        let canonical = self.canonical_ideal();
        let colon = canonical.dual();
        GorensteinFlavors {
            gorenstein: canonical.isomorphic(&ring),
            nearly_gorenstein: maximal.is_subset(&canonical.trace()),
            almost_gorenstein: maximal.is_subset(&colon.translate(canonical.min_element())),
            minimal_multiplicity: self.multiplicity() == self.embedding_dimension() as i64,
            arf: self.is_arf(),
        }
    }

    /// Every numerical semigroup with conductor at most `max_conductor`,
    /// walked down the tree obtained by removing generators beyond the
    /// Frobenius number.
    pub fn enumerate(max_conductor: i64) -> Vec<Self> {
        let mut out = Vec::new();
        let mut stack = vec![Self::naturals()];
        while let Some(h) = stack.pop() {
            for &g in h.minimal_generators() {
                if g > h.frobenius() && g < max_conductor {
                    let child = Self::from_membership(g + 1, |z| z != g && h.contains(z))
                        .expect("removing a generator keeps closure");
                    stack.push(child);
                }
            }
            out.push(h);
        }
        out.sort_by(|a, b| {
            (a.conductor(), a.minimal_generators()).cmp(&(b.conductor(), b.minimal_generators()))
        });
        out
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .minimal_generators()
            .iter()
            .map(i64::to_string)
            .collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// Ring-classification flags derived from the canonical ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GorensteinFlavors {
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub almost_gorenstein: bool,
    pub minimal_multiplicity: bool,
    pub arf: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// Closure of the generators under addition, bounded by `limit`.
    fn brute_members(gens: &[i64], limit: i64) -> Vec<bool> {
        let mut member = vec![false; limit as usize];
        member[0] = true;
        for z in 1..limit {
            member[z as usize] = gens.iter().any(|&g| g <= z && member[(z - g) as usize]);
        }
        member
    }

    #[test]
    fn three_five() {
        let h = sgp(&[3, 5]);
        assert_eq!(h.gaps(), vec![1, 2, 4, 7]);
        assert_eq!(h.frobenius(), 7);
        assert_eq!(h.conductor(), 8);
        assert_eq!(h.minimal_generators(), &[3, 5]);
        assert!(!h.contains(7));
        assert!(h.contains(0));
        assert!(!h.contains(-3));
    }

    #[test]
    fn naturals() {
        let h = sgp(&[1]);
        assert_eq!(h.frobenius(), -1);
        assert_eq!(h.conductor(), 0);
        assert_eq!(h, NumericalSemigroup::naturals());
        assert!(h.is_arf());
        assert_eq!(h.minimal_generators(), &[1]);
    }

    #[test]
    fn four_five_six() {
        let h = sgp(&[4, 5, 6]);
        assert_eq!(h.gaps(), vec![1, 2, 3, 7]);
        assert_eq!(h.frobenius(), 7);
        assert_eq!(h.multiplicity(), 4);
        assert!(h.contains(11));
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let h = sgp(&[6, 3, 5, 10]);
        assert_eq!(h.minimal_generators(), &[3, 5]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 1]),
            Err(Error::NonPositiveGenerator(0))
        );
        assert!(matches!(
            NumericalSemigroup::from_gaps(&[1, 4]),
            Err(Error::NotClosed(_))
        ));
    }

    #[test]
    fn membership_matches_brute_force() {
        for gens in [
            vec![3, 5],
            vec![4, 5, 6],
            vec![5, 7, 9],
            vec![6, 10, 15],
            vec![2, 9],
        ] {
            let h = sgp(&gens);
            let brute = brute_members(&gens, 80);
            for z in 0..80 {
                assert_eq!(h.contains(z), brute[z as usize], "{gens:?} at {z}");
            }
        }
    }

    #[test]
    fn arf_examples() {
        assert!(sgp(&[2, 3]).is_arf());
        assert!(sgp(&[4, 5, 6, 7]).is_arf());
        assert!(!sgp(&[4, 5, 6]).is_arf());
        assert!(!sgp(&[3, 5]).is_arf());
        assert!(sgp(&[3, 4, 5]).is_arf());
    }

    #[test]
    fn arf_closure_examples() {
        assert_eq!(sgp(&[2, 3]).arf_closure(), sgp(&[2, 3]));
        assert_eq!(sgp(&[4, 5, 6]).arf_closure(), sgp(&[4, 5, 6, 7]));
        assert_eq!(sgp(&[3, 5]).arf_closure(), sgp(&[3, 5, 7]));
    }

    #[test]
    fn canonical_ideals() {
        let k = sgp(&[3, 4, 5]).canonical_ideal();
        assert_eq!(k.to_string(), "{0,1,3->}");
        let k = sgp(&[4, 5, 6, 7]).canonical_ideal();
        assert_eq!(k.to_string(), "{0,1,2,4->}");
        let h = sgp(&[3, 5]);
        assert_eq!(h.canonical_ideal(), SemigroupIdeal::whole(&h));
    }

    #[test]
    fn flavor_fixtures() {
        let f = sgp(&[3, 4, 5]).gorenstein_flavors();
        assert_eq!(
            f,
            GorensteinFlavors {
                gorenstein: false,
                nearly_gorenstein: true,
                almost_gorenstein: true,
                minimal_multiplicity: true,
                arf: true
            }
        );
        let f = sgp(&[3, 5]).gorenstein_flavors();
        assert_eq!(
            f,
            GorensteinFlavors {
                gorenstein: true,
                nearly_gorenstein: true,
                almost_gorenstein: true,
                minimal_multiplicity: false,
                arf: false
            }
        );
        let f = sgp(&[3, 7, 8]).gorenstein_flavors();
        assert_eq!(
            f,
            GorensteinFlavors {
                gorenstein: false,
                nearly_gorenstein: false,
                almost_gorenstein: false,
                minimal_multiplicity: true,
                arf: true
            }
        );
        let json = serde_json::to_value(f).unwrap();
        for key in [
            "gorenstein",
            "nearlyGorenstein",
            "almostGorenstein",
            "minimalMultiplicity",
            "arf",
        ] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn enumeration_counts_by_frobenius() {
        // Semigroups with Frobenius number 1..=11, a well-known sequence.
        let expected = [1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51];
        let all = NumericalSemigroup::enumerate(12);
        assert_eq!(all.iter().filter(|h| h.is_naturals()).count(), 1);
        for (f, &n) in (1..=11).zip(expected.iter()) {
            assert_eq!(
                all.iter().filter(|h| h.frobenius() == f).count(),
                n,
                "F = {f}"
            );
        }
        assert_eq!(all.len(), 1 + expected.iter().sum::<usize>());
    }

    /// Arf closure through multiplicity sequences:
    /// `Arf<n1, ..., np> = {0} ∪ (n1 + Arf<n1, n2 - n1, ..., np - n1>)`.
    fn arf_by_multiplicities(gens: &[i64], limit: i64) -> Vec<bool> {
        let h = sgp(gens);
        let gens = h.minimal_generators();
        if gens[0] == 1 {
            return vec![true; limit as usize];
        }
        let n1 = gens[0];
        let next: Vec<i64> = std::iter::once(n1)
            .chain(gens[1..].iter().map(|g| g - n1))
            .collect();
        let rest = arf_by_multiplicities(&next, limit);
        (0..limit)
            .map(|z| z == 0 || (z >= n1 && rest[(z - n1) as usize]))
            .collect()
    }

    #[test]
    fn arf_closure_matches_multiplicity_sequences() {
        for h in NumericalSemigroup::enumerate(12) {
            let limit = 2 * h.conductor() + 2;
            let expected = arf_by_multiplicities(h.minimal_generators(), limit);
            let closure = h.arf_closure();
            for z in 0..limit {
                assert_eq!(closure.contains(z), expected[z as usize], "{h} at {z}");
            }
        }
    }
}
