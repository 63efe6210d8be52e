use crate::error::{Error, Result};
use crate::oracle::polynomial::series;
use crate::oracle::{Echelon, ExactField, Polynomial};
use crate::semigroup::NumericalSemigroup;

/// The image modulo `t^N` of the complete subalgebra of `k[[t]]` generated
/// by finitely many polynomials of positive order.
///
/// The basis holds exactly one element per valuation in the value
/// semigroup below `N`.
#[derive(Clone, Debug)]
pub struct TruncatedSubalgebra<T> {
    precision: usize,
    generators: Vec<Polynomial<T>>,
    basis: Echelon<T>,
    semigroup: NumericalSemigroup,
}

impl<T: ExactField> TruncatedSubalgebra<T> {
    /// Closes `{1}` under multiplication by the generators modulo `t^N`.
    /// Fails unless `N >= 4c + 4` for the conductor `c` of the value
    /// semigroup.
    pub fn build(generators: Vec<Polynomial<T>>, precision: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(g) = generators.iter().find(|g| g.order().is_none_or(|o| o == 0)) {
            return Err(Error::Parse(format!(
                "algebra generator `{g}` must have positive order"
            )));
        }
        let n = precision;
        let dense: Vec<Vec<T>> = generators.iter().map(|g| g.to_dense(n)).collect();

        let mut basis = Echelon::new(n);
        let mut one = vec![T::zero(); n];
        if n > 0 {
            one[0] = T::one();
        }
        let mut queue: Vec<Vec<T>> = basis.insert(one).into_iter().collect();
        while let Some(row) = queue.pop() {
            for g in &dense {
                if let Some(new) = basis.insert(series::mul(&row, g, n)) {
                    queue.push(new);
                }
            }
        }

        let values: Vec<i64> = basis.pivots().iter().skip(1).map(|&p| p as i64).collect();
        let semigroup = if values.is_empty() {
            return Err(Error::GcdNotOne { gcd: 0 });
        } else {
            NumericalSemigroup::from_generators(&values)?
        };
        let c = semigroup.conductor().max(0) as usize;
        let required = 4 * c + 4;
        if n < required {
            return Err(Error::PrecisionTooLow {
                required,
                actual: n,
            });
        }
        let consistent = (0..n).all(|k| basis.has_pivot(k) == semigroup.contains(k as i64));
        if !consistent {
            return Err(Error::SaturationCheckFailed(
                "leading exponents disagree with the value semigroup".into(),
            ));
        }
        Ok(Self {
            precision: n,
            generators,
            basis,
            semigroup,
        })
    }

    /// Builds with the smallest admissible precision: starting low, rebuild
    /// at `4c + 4 + extra` once the conductor `c` is known.
    pub fn build_auto(generators: Vec<Polynomial<T>>, extra: usize) -> Result<Self> {
        let mut n = 16;
        loop {
            match Self::build(generators.clone(), n) {
                Ok(a) if n >= 4 * a.conductor() + 4 + extra => return Ok(a),
                Ok(a) => n = 4 * a.conductor() + 4 + extra,
                Err(Error::PrecisionTooLow { required, .. }) if required + extra > n => {
                    n = required + extra
                }
                Err(Error::GcdNotOne { .. } | Error::SaturationCheckFailed(_)) if n < 512 => n *= 2,
                Err(e) => return Err(e),
            }
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn generators(&self) -> &[Polynomial<T>] {
        &self.generators
    }

    pub fn basis(&self) -> &Echelon<T> {
        &self.basis
    }

    pub fn value_semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn conductor(&self) -> usize {
        self.semigroup.conductor().max(0) as usize
    }

    /// The basis element of valuation `k`, if `k` is a value below `N`.
    pub fn basis_element(&self, k: usize) -> Option<&[T]> {
        let i = self.basis.pivots().binary_search(&k).ok()?;
        Some(&self.basis.rows()[i])
    }

    /// Membership of a series known modulo `t^len`, `len <= N`.
    pub fn contains_truncated(&self, v: &[T], len: usize) -> bool {
        let len = len.min(self.precision);
        let e = self.basis.truncated(len);
        let w: Vec<T> = v.iter().take(len).cloned().collect();
        e.contains(&w)
    }

    pub fn contains(&self, p: &Polynomial<T>) -> bool {
        self.contains_truncated(&p.to_dense(self.precision), self.precision)
    }

    /// Coordinates of `v mod t^len` off the value set: zero iff `v` lies in
    /// the algebra modulo `t^len`.
    pub(crate) fn residue(&self, v: &[T], len: usize) -> Vec<T> {
        let len = len.min(self.precision);
        let e = self.basis.truncated(len);
        let mut w: Vec<T> = (0..len)
            .map(|i| v.get(i).cloned().unwrap_or_else(T::zero))
            .collect();
        e.reduce(&mut w);
        w
    }
}
