//! Sparse Laurent polynomials in one variable `v` with exact coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};
use smallvec::SmallVec;

/// Exact coefficient ring for [`LaurentPoly`].
///
/// Blanket-implemented for every type with ring arithmetic, so `i64`, `i128`
/// and `num_bigint::BigInt` all qualify.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + FromStr
    + Eq
    + std::hash::Hash
    + PartialOrd
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
}

impl<T> Coefficient for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + FromStr
        + Eq
        + std::hash::Hash
        + PartialOrd
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + Send
        + Sync
        + 'static
{
}

type Terms<C> = SmallVec<[(i32, C); 4]>;

/// A Laurent polynomial `sum c_k v^k`, stored as exponent-sorted nonzero terms.
///
/// The empty term list is the zero polynomial, whose degree is `None`
/// (standing in for minus infinity).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C = i64> {
    terms: Terms<C>,
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: SmallVec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `coeff * v^exp`.
    pub fn monomial(exp: i32, coeff: C) -> Self {
        let mut terms = SmallVec::new();
        if !coeff.is_zero() {
            terms.push((exp, coeff));
        }
        Self { terms }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(exp, C::one())
    }

    /// `v + v^-1`.
    pub fn quantum_two() -> Self {
        Self::from_terms([(-1, C::one()), (1, C::one())])
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(iter: I) -> Self {
        let mut raw: Vec<(i32, C)> = iter.into_iter().collect();
        raw.sort_by_key(|t| t.0);
        let mut terms: Terms<C> = SmallVec::new();
        for (e, c) in raw {
            match terms.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|t| !t.1.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Lowest exponent, `None` for zero.
    pub fn min_degree(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn coeff(&self, exp: i32) -> C {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (i32, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| (-e, c.clone()))
                .collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.len() == self.bar().terms.len()
            && self
                .terms
                .iter()
                .zip(self.terms.iter().rev())
                .all(|(a, b)| a.0 == -b.0 && a.1 == b.1)
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (*e, x.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self += sign * v^shift * other`, with `sign` either `1` or `-1`.
    fn merge(&mut self, other: &Self, shift: i32, negate: bool) {
        if other.is_zero() {
            return;
        }
        let mut out: Terms<C> = SmallVec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.drain(..).peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => x.0.cmp(&(y.0 + shift)),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap()),
                Ordering::Greater => {
                    let (e, c) = b.next().unwrap();
                    out.push((e + shift, if negate { -c.clone() } else { c.clone() }));
                }
                Ordering::Equal => {
                    let (e, mut c) = a.next().unwrap();
                    let (_, d) = b.next().unwrap();
                    if negate {
                        c -= d;
                    } else {
                        c += d;
                    }
                    if !c.is_zero() {
                        out.push((e, c));
                    }
                }
            }
        }
        drop(a);
        self.terms = out;
    }

    /// `self += v^shift * other`.
    pub fn add_shifted(&mut self, other: &Self, shift: i32) {
        self.merge(other, shift, false);
    }

    /// `self -= v^shift * other`.
    pub fn sub_shifted(&mut self, other: &Self, shift: i32) {
        self.merge(other, shift, true);
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        if c.is_one() {
            self.merge(other, 0, false);
        } else if (-c.clone()).is_one() {
            self.merge(other, 0, true);
        } else if !c.is_zero() {
            self.merge(&other.scale(c), 0, false);
        }
    }

    /// `self += other * (v + v^-1)`.
    pub fn add_times_quantum_two(&mut self, other: &Self) {
        self.merge(other, 1, false);
        self.merge(other, -1, false);
    }

    /// True when every coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|t| t.1 > C::zero())
    }

    /// Evaluation at `v = 1`.
    pub fn sum_coefficients(&self) -> C {
        let mut s = C::zero();
        for (_, c) in &self.terms {
            s += c;
        }
        s
    }
}

impl<C: Coefficient> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        out.add_shifted(rhs, 0);
        out
    }
}

impl<C: Coefficient> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        out.sub_shifted(rhs, 0);
        out
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (e, c) in &small.terms {
            if c.is_one() {
                out.add_shifted(big, *e);
            } else {
                out.add_shifted(&big.scale(c), *e);
            }
        }
        out
    }
}

impl<C: Coefficient> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        self.add_shifted(rhs, 0);
    }
}

impl<C: Coefficient> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        self.sub_shifted(rhs, 0);
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    /// Ascending exponents, e.g. `v^-1 + 2 + v^3`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = *c < C::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{abs}")?,
                1 if unit => f.write_str("v")?,
                1 => write!(f, "{abs}v")?,
                k if unit => write!(f, "v^{k}")?,
                k => write!(f, "{abs}v^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = LaurentPoly<i64>;

    #[test]
    fn zero_has_no_terms_and_no_degree() {
        let z = P::zero();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.to_string(), "0");
        let c = &P::v_pow(2) - &P::v_pow(2);
        assert!(c.is_zero());
    }

    #[test]
    fn display_matches_expected_forms() {
        let p = P::from_terms([(1, 1), (3, 1)]);
        assert_eq!(p.to_string(), "v + v^3");
        assert_eq!(P::quantum_two().to_string(), "v^-1 + v");
        assert_eq!(P::from_terms([(-1, 1), (1, -1)]).to_string(), "v^-1 - v");
        assert_eq!(P::from_terms([(0, 2), (2, -3)]).to_string(), "2 - 3v^2");
    }

    #[test]
    fn quadratic_relation_scalar() {
        // (v + v^-1)^2 = v^-2 + 2 + v^2
        let q = P::quantum_two();
        assert_eq!(&q * &q, P::from_terms([(-2, 1), (0, 2), (2, 1)]));
    }

    #[test]
    fn bigint_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::<BigInt>::monomial(2, big.clone());
        let sq = &p * &p;
        assert_eq!(sq.coeff(4), &big * &big);
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-6i32..6, -5i64..5), 0..6).prop_map(P::from_terms)
    }

    proptest! {
        #[test]
        fn no_zero_terms_and_sorted(a in arb_poly(), b in arb_poly()) {
            for p in [&a + &b, &a - &b, &a * &b] {
                let t: Vec<_> = p.terms().collect();
                prop_assert!(t.iter().all(|(_, c)| **c != 0));
                prop_assert!(t.windows(2).all(|w| w[0].0 < w[1].0));
            }
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }
    }
}
