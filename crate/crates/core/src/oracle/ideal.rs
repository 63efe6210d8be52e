use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::SemigroupIdeal;
use crate::oracle::polynomial::series;
use crate::oracle::{nullspace, Echelon, ExactField, Polynomial, TruncatedSubalgebra};

/// A nonzero ideal of a [`TruncatedSubalgebra`], stored as its image modulo
/// `t^g` in reduced echelon form, where `g` is the guaranteed precision.
///
/// Invariant: `g >= v + c` and the image contains `t^k` for every
/// `v + c <= k < g`, where `v` is the least valuation and `c` the conductor.
/// Together these pin down the whole ideal.
#[derive(Clone, Debug)]
pub struct SubspaceIdeal<T> {
    algebra: Arc<TruncatedSubalgebra<T>>,
    rows: Echelon<T>,
}

impl<T: ExactField> SubspaceIdeal<T> {
    /// The ideal generated by `gens`, certified up to `N - maxdeg(gens)`.
    pub fn from_generators(
        algebra: &Arc<TruncatedSubalgebra<T>>,
        gens: &[Polynomial<T>],
    ) -> Result<Self> {
        let gens: Vec<&Polynomial<T>> = gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(g) = gens.iter().find(|g| !algebra.contains(g)) {
            return Err(Error::NotInAlgebra(g.to_string()));
        }
        let n = algebra.precision();
        let c = algebra.conductor();
        let max_degree = gens.iter().filter_map(|g| g.degree()).max().unwrap();
        let precision = n.saturating_sub(max_degree);
        if precision < 3 * c || max_degree >= n {
            return Err(Error::PrecisionTooLow {
                required: 3 * c + max_degree,
                actual: n,
            });
        }
        let v0 = gens.iter().filter_map(|g| g.order()).min().unwrap();
        let low_basis: Vec<&[T]> = (0..c).filter_map(|k| algebra.basis_element(k)).collect();
        let rows = gens.iter().flat_map(|g| {
            let dense = g.to_dense(precision);
            low_basis
                .iter()
                .map(move |b| series::mul(&dense, b, precision))
                .collect::<Vec<_>>()
        });
        Self::assemble(algebra, rows, v0 + c, precision)
    }

    /// The unit ideal.
    pub fn whole(algebra: &Arc<TruncatedSubalgebra<T>>) -> Self {
        let rows = algebra.basis().rows().to_vec();
        Self::assemble(algebra, rows, algebra.conductor(), algebra.precision())
            .expect("the algebra is saturated above its conductor")
    }

    /// Span of `rows` plus every `t^k` with `saturated_from <= k < precision`,
    /// then certified.
    fn assemble(
        algebra: &Arc<TruncatedSubalgebra<T>>,
        rows: impl IntoIterator<Item = Vec<T>>,
        saturated_from: usize,
        precision: usize,
    ) -> Result<Self> {
        let mut echelon = Echelon::new(precision);
        for k in saturated_from..precision {
            let mut v = vec![T::zero(); precision];
            v[k] = T::one();
            echelon.insert(v);
        }
        for row in rows {
            echelon.insert(row);
        }
        let ideal = Self {
            algebra: Arc::clone(algebra),
            rows: echelon,
        };
        ideal.certify()?;
        Ok(ideal)
    }

    fn certify(&self) -> Result<()> {
        let Some(&v) = self.rows.pivots().first() else {
            return Err(Error::EmptyInput);
        };
        let c = self.algebra.conductor();
        let g = self.precision();
        if g < v + c {
            return Err(Error::PrecisionTooLow {
                required: v + c,
                actual: g,
            });
        }
        if let Some(k) = (v + c..g).find(|&k| !self.rows.has_pivot(k)) {
            return Err(Error::SaturationCheckFailed(format!(
                "valuation {k} missing above {v} + conductor {c}"
            )));
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<TruncatedSubalgebra<T>> {
        &self.algebra
    }

    pub fn precision(&self) -> usize {
        self.rows.len()
    }

    pub fn min_valuation(&self) -> usize {
        self.rows.pivots()[0]
    }

    pub fn rows(&self) -> &Echelon<T> {
        &self.rows
    }

    /// The echelon row of least valuation, an element of the ideal.
    pub fn least_element(&self) -> Polynomial<T> {
        Polynomial::from_dense(&self.rows.rows()[0])
    }

    /// Rows of valuation below `v + c`; with the saturated tail they span
    /// the ideal.
    fn low_rows(&self) -> impl Iterator<Item = &Vec<T>> {
        let bound = self.min_valuation() + self.algebra.conductor();
        self.rows
            .rows()
            .iter()
            .zip(self.rows.pivots())
            .take_while(move |(_, &p)| p < bound)
            .map(|(r, _)| r)
    }

    /// The echelon rows below `v + c` as polynomials, truncated at the
    /// guaranteed precision. Together with `t^k` for `k >= v + c` they
    /// generate the ideal.
    pub fn low_generators(&self) -> Vec<Polynomial<T>> {
        self.low_rows().map(|r| Polynomial::from_dense(r)).collect()
    }

    pub fn contains(&self, p: &Polynomial<T>) -> bool {
        p.order().is_none_or(|v| v >= self.precision())
            || self.rows.contains(&p.to_dense(self.precision()))
    }

    /// Leading exponents: the valuation set as a relative ideal over the
    /// value semigroup.
    pub fn valuation_set(&self) -> SemigroupIdeal {
        let v = self.min_valuation() as i64;
        let g = self.precision() as i64;
        SemigroupIdeal::from_fn(self.algebra.value_semigroup(), v, g, |z| {
            self.rows.has_pivot(z as usize)
        })
    }

    /// The product ideal, certified up to `min(g1 + v2, g2 + v1)`.
    pub fn multiply(&self, other: &Self) -> Self {
        let (v1, v2) = (self.min_valuation(), other.min_valuation());
        let precision = (self.precision() + v2).min(other.precision() + v1);
        let rows: Vec<Vec<T>> = self
            .low_rows()
            .flat_map(|a| other.low_rows().map(move |b| series::mul(a, b, precision)))
            .collect();
        Self::assemble(
            &self.algebra,
            rows,
            v1 + v2 + self.algebra.conductor(),
            precision,
        )
        .expect("products of certified ideals are certified")
    }

    /// `x * I` for `x` known modulo `t^x_precision`.
    fn scale(&self, x: &[T], x_precision: usize) -> Self {
        let vx = series::valuation(x).expect("nonzero multiplier");
        let precision = (self.precision() + vx).min(x_precision + self.min_valuation());
        let rows: Vec<Vec<T>> = self
            .low_rows()
            .map(|a| series::mul(a, x, precision))
            .collect();
        Self::assemble(
            &self.algebra,
            rows,
            vx + self.min_valuation() + self.algebra.conductor(),
            precision,
        )
        .expect("multiples of certified ideals are certified")
    }

    /// Equality of ideals, decided once both images reach `v + c`.
    pub fn same_ideal(&self, other: &Self) -> Result<bool> {
        let p = self.precision().min(other.precision());
        let (v1, v2) = (self.min_valuation(), other.min_valuation());
        if v1 != v2 {
            return if v1.min(v2) < p {
                Ok(false)
            } else {
                Err(Error::PrecisionTooLow {
                    required: v1.min(v2) + 1,
                    actual: p,
                })
            };
        }
        let required = v1 + self.algebra.conductor();
        if p < required {
            return Err(Error::PrecisionTooLow {
                required,
                actual: p,
            });
        }
        Ok(self.rows.truncated(p) == other.rows.truncated(p))
    }

    /// `(x) :_R I = {r in R : r I ⊆ xR}` for an element `x` of least
    /// valuation. Unknowns are the algebra basis elements below the
    /// conductor; everything of valuation at least the conductor belongs to
    /// the colon automatically, which is re-checked at runtime.
    pub fn colon_in_ring(&self, x: &Polynomial<T>) -> Result<Self> {
        let v0 = self.min_valuation();
        if x.order() != Some(v0) {
            return Err(Error::NotMinimalValuation { expected: v0 });
        }
        if !self.contains(x) {
            return Err(Error::NotInIdeal(x.to_string()));
        }
        let algebra = &self.algebra;
        let n = algebra.precision();
        let c = algebra.conductor();
        let work = self.precision().min(n);
        if work < v0 + c {
            return Err(Error::PrecisionTooLow {
                required: v0 + c,
                actual: work,
            });
        }
        let quotient_len = work - v0;
        let x_dense = x.to_dense(work);
        let low_rows: Vec<&Vec<T>> = self.low_rows().collect();

        // residue of (b * a) / x off the value set, for every row a
        let obstruction = |b: &[T]| -> Vec<T> {
            low_rows
                .iter()
                .flat_map(|a| {
                    let y = series::mul(b, a, work);
                    let q = series::divide(&y, &x_dense, quotient_len);
                    algebra.residue(&q, quotient_len)
                })
                .collect()
        };

        let unknowns: Vec<&[T]> = (0..c).filter_map(|k| algebra.basis_element(k)).collect();
        let columns: Vec<Vec<T>> = unknowns.iter().map(|b| obstruction(b)).collect();
        let equations = columns.first().map_or(0, Vec::len);
        let matrix: Vec<Vec<T>> = (0..equations)
            .map(|i| columns.iter().map(|col| col[i].clone()).collect())
            .collect();
        let kernel = nullspace(&matrix, unknowns.len());

        let m = algebra.value_semigroup().multiplicity() as usize;
        for k in c..(c + m).min(n) {
            let mut monomial = vec![T::zero(); work];
            monomial[k] = T::one();
            if obstruction(&monomial).iter().any(|r| !r.is_zero()) {
                return Err(Error::SaturationCheckFailed(format!(
                    "t^{k} does not multiply the ideal into (x)"
                )));
            }
        }

        let rows = kernel.iter().map(|alpha| {
            let mut r = vec![T::zero(); n];
            for (coef, b) in alpha.iter().zip(&unknowns) {
                if coef.is_zero() {
                    continue;
                }
                for (ri, bi) in r.iter_mut().zip(b.iter()) {
                    *ri = ri.clone() + coef.clone() * bi.clone();
                }
            }
            r
        });
        Self::assemble(algebra, rows.collect::<Vec<_>>(), c, n)
    }

    /// `tr(I) = I((x) :_R I) :_R x` with `x` the least element; the final
    /// colon is exact division since `I((x):I) ⊆ xR`.
    pub fn trace(&self) -> Result<Self> {
        let x = self.least_element();
        let colon = self.colon_in_ring(&x)?;
        let product = self.multiply(&colon);
        let v0 = self.min_valuation();
        let n = self.algebra.precision();
        let precision = (product.precision() - v0).min(n);
        let x_dense = x.to_dense(precision + v0);
        let mut quotients = Vec::new();
        for row in product.low_rows() {
            let q = series::divide(row, &x_dense, precision);
            if self
                .algebra
                .residue(&q, precision)
                .iter()
                .any(|r| !r.is_zero())
            {
                return Err(Error::SaturationCheckFailed(
                    "quotient by x left the algebra".into(),
                ));
            }
            quotients.push(q);
        }
        let saturated_from = colon.min_valuation() + self.algebra.conductor();
        Self::assemble(&self.algebra, quotients, saturated_from, precision)
    }

    pub fn is_trace_ideal(&self) -> Result<bool> {
        self.trace()?.same_ideal(self)
    }

    /// `I^2 = xI` for the least element `x`. Before a negative answer is
    /// trusted, `x` is confirmed to be a reduction: `x I^n = I^(n+1)` for
    /// some `n <= c + 1`.
    pub fn is_stable(&self) -> Result<bool> {
        let x = self.rows.rows()[0].clone();
        let g = self.precision();
        let square = self.multiply(self);
        if square.same_ideal(&self.scale(&x, g))? {
            return Ok(true);
        }
        let bound = self.algebra.conductor() + 1;
        let mut power = square;
        for _ in 2..=bound {
            let next = power.multiply(self);
            if next.same_ideal(&power.scale(&x, g))? {
                return Ok(false);
            }
            power = next;
        }
        Err(Error::SaturationCheckFailed(format!(
            "least element is not a reduction within {bound} powers"
        )))
    }

    /// `{r in R : v(r) >= v(I)}`, the valuation criterion for one-branch
    /// rings.
    pub fn integral_closure(&self) -> Result<Self> {
        let v0 = self.min_valuation();
        let rows: Vec<Vec<T>> = self
            .algebra
            .basis()
            .rows()
            .iter()
            .zip(self.algebra.basis().pivots())
            .filter(|(_, &p)| p >= v0)
            .map(|(r, _)| r.clone())
            .collect();
        Self::assemble(
            &self.algebra,
            rows,
            self.algebra.precision(),
            self.algebra.precision(),
        )
    }
}
