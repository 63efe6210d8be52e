use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::oracle::ExactField;

/// A polynomial in `t` with exact coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    terms: BTreeMap<usize, T>,
}

impl<T: ExactField> Polynomial<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(coefficient: T, degree: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coefficient);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, T)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, degree: usize, coefficient: T) {
        let entry = self.terms.entry(degree).or_insert_with(T::zero);
        *entry = entry.clone() + coefficient;
        if entry.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Order at `t`: the lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Coefficients of `t^0 .. t^(len-1)`.
    pub fn to_dense(&self, len: usize) -> Vec<T> {
        let mut v = vec![T::zero(); len];
        for (&k, c) in self.terms.range(..len) {
            v[k] = c.clone();
        }
        v
    }

    pub fn from_dense(coefficients: &[T]) -> Self {
        Self::from_terms(coefficients.iter().cloned().enumerate())
    }
}

impl<T: ExactField> std::str::FromStr for Polynomial<T> {
    type Err = Error;

    /// Signed sums of terms `c*t^k`, `c*t`, `t^k`, `t` or `c`, where `c` is
    /// a rational such as `3` or `-3/2`: `"t^4 - 1*t^5"`, `"-3/2*t^2 + t"`.
    fn from_str(text: &str) -> Result<Self> {
        let err = |why: &str| Error::Parse(format!("bad polynomial `{text}`: {why}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty"));
        }

        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        for (i, ch) in compact.char_indices() {
            if ch == '+' || ch == '-' {
                if i > start {
                    pieces.push((negative, &compact[start..i]));
                } else if i > 0 {
                    return Err(err("dangling sign"));
                }
                negative = ch == '-';
                start = i + 1;
            }
        }
        if start >= compact.len() {
            return Err(err("trailing sign"));
        }
        pieces.push((negative, &compact[start..]));

        let mut poly = Self::zero();
        for (negative, term) in pieces {
            let (coefficient, degree) = match term.find('t') {
                Some(pos) => {
                    let prefix = &term[..pos];
                    let coefficient = match prefix {
                        "" => T::one(),
                        _ => {
                            let c = prefix
                                .strip_suffix('*')
                                .ok_or_else(|| err("expected `*`"))?;
                            c.parse::<T>().map_err(|_| err("bad coefficient"))?
                        }
                    };
                    let degree = match &term[pos + 1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .and_then(|k| k.parse::<usize>().ok())
                            .ok_or_else(|| err("bad exponent"))?,
                    };
                    (coefficient, degree)
                }
                None => (term.parse::<T>().map_err(|_| err("bad constant"))?, 0),
            };
            poly.add_term(degree, if negative { -coefficient } else { coefficient });
        }
        Ok(poly)
    }
}

/// Comma-separated polynomials, e.g. `"t^4 - t^5, t^6"`.
pub fn parse_polynomial_list<T: ExactField>(text: &str) -> Result<Vec<Polynomial<T>>> {
    text.split(',').map(str::parse).collect()
}

impl<T: ExactField> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&k, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let power = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            match (magnitude.as_str(), k) {
                (m, 0) => write!(f, "{m}")?,
                ("1", _) => write!(f, "{power}")?,
                (m, _) => write!(f, "{m}*{power}")?,
            }
        }
        Ok(())
    }
}

/// Dense truncated series arithmetic on coefficient vectors.
pub(crate) mod series {
    use crate::oracle::ExactField;

    pub fn valuation<T: ExactField>(a: &[T]) -> Option<usize> {
        a.iter().position(|c| !c.is_zero())
    }

    /// `a * b mod t^len`.
    pub fn mul<T: ExactField>(a: &[T], b: &[T], len: usize) -> Vec<T> {
        let mut out = vec![T::zero(); len];
        let Some(va) = valuation(a) else { return out };
        let Some(vb) = valuation(b) else { return out };
        for i in va..a.len().min(len) {
            if a[i].is_zero() {
                continue;
            }
            for j in vb..b.len().min(len - i.min(len)) {
                if !b[j].is_zero() {
                    out[i + j] = out[i + j].clone() + a[i].clone() * b[j].clone();
                }
            }
        }
        out
    }

    /// The quotient `y / x mod t^len` by coefficient elimination, which
    /// expands `1 / unit` as a finite geometric series. Requires
    /// `valuation(y) >= valuation(x)`; `y` must be known modulo
    /// `t^(len + valuation(x))`.
    pub fn divide<T: ExactField>(y: &[T], x: &[T], len: usize) -> Vec<T> {
        let v = valuation(x).expect("division by zero series");
        let mut rest: Vec<T> = (0..len + v)
            .map(|i| y.get(i).cloned().unwrap_or_else(T::zero))
            .collect();
        assert!(
            rest[..v].iter().all(T::is_zero),
            "dividend has smaller valuation than divisor"
        );
        let lead = x[v].clone();
        let mut quotient = vec![T::zero(); len];
        for k in 0..len {
            let c = rest[k + v].clone();
            if c.is_zero() {
                continue;
            }
            let q = c / lead.clone();
            for (j, xj) in x.iter().enumerate().skip(v) {
                let idx = k + j;
                if idx >= rest.len() {
                    break;
                }
                if !xj.is_zero() {
                    rest[idx] = rest[idx].clone() - q.clone() * xj.clone();
                }
            }
            quotient[k] = q;
        }
        quotient
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn poly(s: &str) -> Polynomial<Rational> {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parsing() {
        let p = poly("t^4 - 1*t^5");
        assert_eq!(p, Polynomial::from_terms([(4, r(1, 1)), (5, r(-1, 1))]));
        assert_eq!(p.to_string(), "t^4 - t^5");
        assert_eq!(poly("-3/2*t^2 + t").to_string(), "t - 3/2*t^2");
        assert_eq!(poly("1").to_string(), "1");
        assert_eq!(poly("2 + t - 2").to_string(), "t");
        assert_eq!(poly("t^3 - t^3").to_string(), "0");
        assert_eq!(poly(" -t ").order(), Some(1));
        for bad in ["", "t^", "3t", "t^4 -", "+-t", "x^2", "1/0*t"] {
            assert!(bad.parse::<Polynomial<Rational>>().is_err(), "{bad}");
        }
    }

    #[test]
    fn list_parsing() {
        let gens: Vec<Polynomial<Rational>> = parse_polynomial_list("t^4 - t^5, t^6").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[1].degree(), Some(6));
    }

    #[test]
    fn display_round_trip() {
        for s in ["t^4 - t^5", "-t + 1/2*t^3", "7", "-2 - t^9"] {
            let p = poly(s);
            assert_eq!(poly(&p.to_string()), p);
        }
    }

    #[test]
    fn geometric_division() {
        // t^12 / (t^4 - a t^5) = t^8 (1 + a t + a^2 t^2 + ...)
        let a = r(1, 2);
        let x = Polynomial::from_terms([(4, r(1, 1)), (5, -a.clone())]).to_dense(30);
        let y = Polynomial::monomial(r(1, 1), 12).to_dense(30);
        let q = series::divide(&y, &x, 26);
        for (k, c) in q.iter().enumerate() {
            let expected = if k >= 8 {
                num_traits::Pow::pow(&a, (k - 8) as u32)
            } else {
                r(0, 1)
            };
            assert_eq!(*c, expected, "t^{k}");
        }
        assert_eq!(series::mul(&q, &x, 26), y[..26].to_vec());
    }
}
