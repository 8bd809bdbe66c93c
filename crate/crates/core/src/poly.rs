//! Exact univariate polynomials and rational functions over Q.
//!
//! Carrier for `det(I - t*g)` factors and Molien series.  Coefficients are
//! ascending; the zero polynomial is the empty coefficient list.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactPoly {
    coeffs: Vec<Rational>,
}

impl ExactPoly {
    /// Normalizes by trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(rational::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::rat_int(c)).collect())
    }

    /// `1 - t^d`.
    pub fn one_minus_power(d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[0] = Rational::one();
        coeffs[d] = -Rational::one();
        ExactPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && rational::is_one(&self.coeffs[0])
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        ExactPoly::new(out)
    }

    pub fn sub(&self, other: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        ExactPoly::new(out)
    }

    pub fn neg(&self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &ExactPoly) -> ExactPoly {
        if self.is_zero() || other.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if rational::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: returns `(q, r)` with `self = q*div + r` and
    /// `deg r < deg div`. Panics if `div` is zero.
    pub fn divrem(&self, div: &ExactPoly) -> (ExactPoly, ExactPoly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        let lead = div.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / &lead;
            for (j, c) in div.coeffs.iter().enumerate() {
                let v = &rem[k + j] - &(c * &f);
                rem[k + j] = v;
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(rational::is_zero) {
                rem.pop();
            }
        }
        (ExactPoly::new(quot), ExactPoly::new(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(a: &ExactPoly, b: &ExactPoly) -> ExactPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> ExactPoly {
        match self.coeffs.last() {
            None => ExactPoly::zero(),
            Some(lead) => {
                let inv = Rational::one() / lead;
                self.scale(&inv)
            }
        }
    }
}

impl core::fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if rational::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*t", c)?,
                _ => write!(f, "{}*t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

/// A rational function `num/den` with `den != 0`, kept reduced (gcd 1) and
/// normalized so that `den(0) = 1` whenever `den(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    num: ExactPoly,
    den: ExactPoly,
}

impl RationalFn {
    pub fn new(num: ExactPoly, den: ExactPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RationalFn { num, den };
        rf.reduce();
        rf
    }

    pub fn zero() -> Self {
        RationalFn {
            num: ExactPoly::zero(),
            den: ExactPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn {
            num: ExactPoly::one(),
            den: ExactPoly::one(),
        }
    }

    pub fn num(&self) -> &ExactPoly {
        &self.num
    }

    pub fn den(&self) -> &ExactPoly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = ExactPoly::one();
            return;
        }
        let g = ExactPoly::gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.divrem(&g).0;
            self.den = self.den.divrem(&g).0;
        }
        let c0 = self.den.coeff(0);
        let scale = if rational::is_zero(&c0) {
            Rational::one() / self.den.coeffs().last().unwrap()
        } else {
            Rational::one() / &c0
        };
        self.num = self.num.scale(&scale);
        self.den = self.den.scale(&scale);
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &ExactPoly) -> RationalFn {
        RationalFn::new(self.num.mul(p), self.den.clone())
    }

    pub fn scale(&self, c: &Rational) -> RationalFn {
        RationalFn::new(self.num.scale(c), self.den.clone())
    }

    /// Cross-multiplied equality (identical as rational functions).
    pub fn eq_as_fn(&self, other: &RationalFn) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// First `n` power-series coefficients. Requires `den(0) != 0`.
    pub fn series_prefix(&self, n: usize) -> Vec<Rational> {
        let d0 = self.den.coeff(0);
        assert!(
            !rational::is_zero(&d0),
            "series expansion needs den(0) != 0"
        );
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.num.coeff(k);
            for i in 1..=k {
                let b = self.den.coeff(i);
                if rational::is_zero(&b) {
                    continue;
                }
                acc -= b * &out[k - i];
            }
            out.push(acc / &d0);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn divrem_and_gcd() {
        // (1 - t^4) = (1 - t^2)(1 + t^2)
        let a = ExactPoly::one_minus_power(4);
        let b = ExactPoly::one_minus_power(2);
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, ExactPoly::from_i64(&[1, 0, 1]));
        let g = ExactPoly::gcd(&a, &b);
        // gcd is monic: t^2 - 1 up to the sign normalization
        assert_eq!(g, ExactPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn series_of_geometric() {
        // 1/(1-t) = 1 + t + t^2 + ...
        let f = RationalFn::new(ExactPoly::one(), ExactPoly::one_minus_power(1));
        assert_eq!(f.series_prefix(4), vec![rat_int(1); 4]);
        // 1/(1-t)^2 = 1 + 2t + 3t^2 + ...
        let g = f.mul(&f);
        assert_eq!(
            g.series_prefix(4),
            vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4)]
        );
    }

    #[test]
    fn rational_fn_reduces() {
        // (1-t^2)/(1-t) = 1+t
        let f = RationalFn::new(ExactPoly::one_minus_power(2), ExactPoly::one_minus_power(1));
        assert_eq!(f.num(), &ExactPoly::from_i64(&[1, 1]));
        assert!(f.den().is_one());
        // normalization keeps den(0) = 1
        let h = RationalFn::new(
            ExactPoly::from_i64(&[1]),
            ExactPoly::from_i64(&[2, 0, -2]),
        );
        assert_eq!(h.den().coeff(0), rat_int(1));
        assert_eq!(h.num().coeff(0), rat(1, 2));
    }

    #[test]
    fn add_fractions() {
        // 1/(1-t) + 1/(1+t) = 2/(1-t^2)
        let a = RationalFn::new(ExactPoly::one(), ExactPoly::from_i64(&[1, -1]));
        let b = RationalFn::new(ExactPoly::one(), ExactPoly::from_i64(&[1, 1]));
        let s = a.add(&b);
        let expect = RationalFn::new(ExactPoly::from_i64(&[2]), ExactPoly::one_minus_power(2));
        assert!(s.eq_as_fn(&expect));
        assert_eq!(s, expect);
    }
}
