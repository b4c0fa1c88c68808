//! Exponents in Z[sigma_y, sigma_y^{-1}]: Laurent polynomials in the shift
//! operator with integer coefficients, as used in sigma-factorizations
//! p^alpha = prod_i sigma_y^i(p)^{k_i}.

use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial in sigma_y over Z; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OpExponent {
    terms: BTreeMap<i64, i64>,
}

impl OpExponent {
    pub fn zero() -> Self {
        OpExponent::default()
    }

    pub fn one() -> Self {
        OpExponent::single(0, 1)
    }

    /// k * sigma^i
    pub fn single(i: i64, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if k != 0 {
            terms.insert(i, k);
        }
        OpExponent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &OpExponent) -> OpExponent {
        let mut terms = self.terms.clone();
        for (i, k) in &rhs.terms {
            let v = terms.get(i).copied().unwrap_or(0) + k;
            if v == 0 {
                terms.remove(i);
            } else {
                terms.insert(*i, v);
            }
        }
        OpExponent { terms }
    }

    pub fn add_term(&mut self, i: i64, k: i64) {
        let v = self.terms.get(&i).copied().unwrap_or(0) + k;
        if v == 0 {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, v);
        }
    }

    pub fn neg(&self) -> OpExponent {
        OpExponent {
            terms: self.terms.iter().map(|(i, k)| (*i, -k)).collect(),
        }
    }

    /// Multiply by sigma^j: shifts every exponent position by j.
    pub fn shifted(&self, j: i64) -> OpExponent {
        OpExponent {
            terms: self.terms.iter().map(|(i, k)| (i + j, *k)).collect(),
        }
    }

    /// Head degree (largest sigma-power present); None for zero.
    pub fn hdeg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Tail degree (smallest sigma-power present); None for zero.
    pub fn tdeg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, i: i64) -> i64 {
        self.terms.get(&i).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &i64)> {
        self.terms.iter()
    }

    /// All coefficients nonnegative (membership in N[sigma, sigma^{-1}]).
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|k| *k >= 0)
    }

    /// Sum of coefficients.
    pub fn weight(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Debug for OpExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, k) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", k)?,
                1 => write!(f, "{}*s", k)?,
                _ => write!(f, "{}*s^{}", k, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_accessors() {
        let a = OpExponent::single(-1, 1).add(&OpExponent::single(0, 2));
        assert_eq!(a.hdeg(), Some(0));
        assert_eq!(a.tdeg(), Some(-1));
        assert_eq!(OpExponent::zero().hdeg(), None);
    }

    #[test]
    fn cancellation() {
        let a = OpExponent::single(2, 3);
        let b = OpExponent::single(2, -3);
        assert!(a.add(&b).is_zero());
    }
}
