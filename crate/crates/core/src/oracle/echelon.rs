use crate::oracle::ExactField;

/// A subspace of `k^len` kept in reduced echelon form with respect to the
/// *lowest* nonzero index, so that each pivot is the valuation of its row.
/// Rows are monic at their pivot and vanish at every other pivot, which
/// makes the form canonical: two spans are equal iff their rows are.
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<T> {
    len: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: ExactField> Echelon<T> {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(len: usize, rows: impl IntoIterator<Item = Vec<T>>) -> Self {
        let mut e = Self::new(len);
        for row in rows {
            e.insert(row);
        }
        e
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// Pivot positions, ascending.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn has_pivot(&self, k: usize) -> bool {
        self.pivots.binary_search(&k).is_ok()
    }

    /// Clears every pivot coordinate of `v`; what remains is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, v: &mut [T]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if p >= v.len() || v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x = x.clone() - c.clone() * r.clone();
                }
            }
        }
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = self.fit(v);
        self.reduce(&mut w);
        w.iter().all(T::is_zero)
    }

    fn fit(&self, v: &[T]) -> Vec<T> {
        (0..self.len)
            .map(|i| v.get(i).cloned().unwrap_or_else(T::zero))
            .collect()
    }

    /// Adds `v` to the span; returns the new reduced row, if any.
    pub fn insert(&mut self, v: Vec<T>) -> Option<Vec<T>> {
        let mut w = self.fit(&v);
        self.reduce(&mut w);
        let p = w.iter().position(|c| !c.is_zero())?;
        let lead = w[p].clone();
        for x in w.iter_mut().skip(p) {
            *x = x.clone() / lead.clone();
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&w).skip(p) {
                if !r.is_zero() {
                    *x = x.clone() - c.clone() * r.clone();
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w.clone());
        Some(w)
    }

    /// The image of the span in `k^len` for a shorter `len`. Truncating a
    /// reduced form keeps it reduced; rows whose pivot falls off vanish.
    pub fn truncated(&self, len: usize) -> Self {
        if len >= self.len {
            return self.clone();
        }
        let keep = self.pivots.partition_point(|&p| p < len);
        Self {
            len,
            rows: self.rows[..keep]
                .iter()
                .map(|r| r[..len].to_vec())
                .collect(),
            pivots: self.pivots[..keep].to_vec(),
        }
    }
}

/// A basis of `{a : sum_j a_j * column_j = 0}` where `matrix[i][j]` is the
/// coefficient of unknown `j` in equation `i`.
pub fn nullspace<T: ExactField>(matrix: &[Vec<T>], unknowns: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = matrix.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let lead = rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - c.clone() * p.clone();
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (0..unknowns)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![T::zero(); unknowns];
            v[free] = T::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -rows[i][free].clone();
            }
            v
        })
        .collect()
}
