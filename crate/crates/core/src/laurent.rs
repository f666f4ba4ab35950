//! Laurent polynomials with exact rational coefficients.
//!
//! These carry the step polynomials `H(x)` and `V(y)` and serve as the
//! coefficient ring of the bivariate series `B(x;t)` and `log B(x;t)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::rat::{rat_int, Rat};

/// Finite map from integer exponent to nonzero rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, rat_int(1))
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// Collect `(exponent, weight)` pairs; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Term-wise derivative d/dy.
    pub fn derivative(&self) -> Self {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e - 1, c * rat_int(e))),
        )
    }

    /// Keep only exponents >= 1.
    pub fn positive_part(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .range(1..)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Keep only exponents <= 0; complement of [`Self::positive_part`].
    pub fn nonpositive_part(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .range(..1)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Substitute y -> 1/y (negate all exponents). Bridge reversal.
    pub fn reversed(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval_rat(&self, y: &Rat) -> Rat {
        assert!(!y.is_zero() || self.min_exp().map_or(true, |e| e >= 0));
        let mut acc = Rat::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow::pow(y.clone(), e as usize)
            } else {
                num_traits::pow::pow(y.clone(), (-e) as usize).recip()
            };
            acc += c * p;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at y = 1.
    pub fn eval_at_one(&self) -> Rat {
        self.terms.values().sum()
    }

    pub fn all_coeffs_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*y", c)?,
                _ => write!(f, "{}*y^{}", c, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn units(exps: &[i64]) -> LaurentPoly {
        LaurentPoly::from_terms(exps.iter().map(|&e| (e, rat_int(1))))
    }

    #[test]
    fn arithmetic_keeps_terms_reduced() {
        let h = units(&[-1, 1]);
        let sq = h.mul(&h); // y^-2 + 2 + y^2
        assert_eq!(sq.coeff(0), rat_int(2));
        assert_eq!(sq.coeff(-2), rat_int(1));
        assert_eq!(sq.num_terms(), 3);
        let diff = sq.sub(&sq);
        assert!(diff.is_zero());
        // cancellation removes stored zeros
        let c = h.sub(&units(&[1]));
        assert_eq!(c.num_terms(), 1);
        assert_eq!(c.min_exp(), Some(-1));
    }

    #[test]
    fn derivative_and_eval() {
        // V = y^-2 + y + y^2, V' = -2 y^-3 + 1 + 2 y
        let v = units(&[-2, 1, 2]);
        let d = v.derivative();
        assert_eq!(d.coeff(-3), rat_int(-2));
        assert_eq!(d.coeff(0), rat_int(1));
        assert_eq!(d.coeff(1), rat_int(2));
        let val = v.eval_rat(&rat(1, 2));
        // 4 + 1/2 + 1/4 = 19/4
        assert_eq!(val, rat(19, 4));
        assert_eq!(v.eval_at_one(), rat_int(3));
    }

    #[test]
    fn positive_part_is_projection() {
        let a = units(&[-2, 0, 1, 3]);
        let pos = a.positive_part();
        assert_eq!(pos.min_exp(), Some(1));
        assert_eq!(pos.positive_part(), pos);
        assert_eq!(pos.add(&a.nonpositive_part()), a);
    }

    #[test]
    fn reversal_negates_exponents() {
        let v = units(&[-2, 1, 2]);
        let r = v.reversed();
        assert_eq!(r.min_exp(), Some(-2));
        assert_eq!(r.max_exp(), Some(2));
        assert_eq!(r.coeff(-1), rat_int(1));
        assert_eq!(r.coeff(1), rat_int(0));
    }
}
