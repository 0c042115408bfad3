//! Exact univariate polynomials over the integers and rationals, ascending
//! coefficient order. Only the operations the rest of the crate needs:
//! arithmetic, exact division, gcd/lcm over the rationals, evaluation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Integer polynomial; `c[i]` multiplies `y^i`, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { c: vec![] }
    }

    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `y^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly { c }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_one())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.c.len().max(other.c.len());
        let c = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(c)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.c.len().max(other.c.len());
        let c = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::from_coeffs(c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    /// Multiply by `y^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        IntPoly { c }
    }

    /// Exact division; `None` if `other` does not divide `self` over the
    /// rationals with an integer quotient. `other` must have an invertible
    /// leading coefficient direction (monic or +-1 handled exactly; general
    /// leading coefficients work whenever every elimination step divides).
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.c.len() < other.c.len() {
            return None;
        }
        let mut rem = self.c.clone();
        let n = self.c.len() - other.c.len() + 1;
        let mut q = vec![BigInt::zero(); n];
        let lead = other.c.last().unwrap();
        for i in (0..n).rev() {
            let top = rem[i + other.c.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return None;
            }
            let f = top / lead;
            for (j, b) in other.c.iter().enumerate() {
                rem[i + j] -= &f * b;
            }
            q[i] = f;
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        other.div_exact(self).is_some()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.c.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    pub fn to_rational(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.c
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "y")?;
                    } else {
                        write!(f, "y^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Rational polynomial, used for minimal-polynomial searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    c: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { c: vec![] }
    }

    pub fn one() -> Self {
        RatPoly { c: vec![BigRational::one()] }
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RatPoly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.c.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.c.last().unwrap().clone();
        Self::from_coeffs(self.c.iter().map(|x| x / &lead).collect())
    }

    pub fn div_rem(&self, other: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!other.is_zero());
        if self.c.len() < other.c.len() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.c.clone();
        let n = self.c.len() - other.c.len() + 1;
        let mut q = vec![BigRational::zero(); n];
        let lead = other.c.last().unwrap();
        for i in (0..n).rev() {
            let f = &rem[i + other.c.len() - 1] / lead;
            if f.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                let sub = &f * b;
                rem[i + j] -= sub;
            }
            q[i] = f;
        }
        (Self::from_coeffs(q), Self::from_coeffs(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic lcm.
    pub fn lcm(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, r) = self.mul(other).div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Convert to an integer polynomial when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        let mut c = Vec::with_capacity(self.c.len());
        for x in &self.c {
            if !x.is_integer() {
                return None;
            }
            c.push(x.to_integer());
        }
        Some(IntPoly::from_coeffs(c))
    }
}
