//! Exact elements of the cyclotomic field Q(zeta_m), represented in the
//! power basis `zeta^0 .. zeta^(phi(m)-1)` reduced modulo the m-th
//! cyclotomic polynomial. The reduced form is canonical, so equality is
//! coefficient-wise and no tolerances exist anywhere.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::poly::IntPoly;

pub fn euler_phi(m: usize) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The m-th cyclotomic polynomial, by exact division of `y^m - 1` by the
/// product of the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_poly(m: usize) -> IntPoly {
    assert!(m >= 1);
    let mut num = {
        let mut c = vec![BigInt::zero(); m + 1];
        c[0] = -BigInt::one();
        c[m] = BigInt::one();
        IntPoly::from_coeffs(c)
    };
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = num.div_exact(&phi_d).expect("cyclotomic division is exact");
        }
    }
    num
}

struct CycloCtx {
    phi: usize,
    /// `red[t]` expresses `zeta^(phi + t)` in the power basis, for
    /// `t < phi - 1` (enough to reduce degree-(2 phi - 2) products).
    red: Vec<Vec<BigInt>>,
}

fn ctx(m: usize) -> Arc<CycloCtx> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(m)
        .or_insert_with(|| {
            let phi = euler_phi(m);
            let cyc = cyclotomic_poly(m);
            debug_assert_eq!(cyc.degree(), phi);
            // zeta^phi = -(lower coefficients); extend by multiplying by zeta
            let base: Vec<BigInt> = (0..phi).map(|i| -cyc.coeff(i)).collect();
            let mut red = Vec::with_capacity(phi.max(1));
            red.push(base);
            for t in 1..phi.saturating_sub(1) {
                let prev = &red[t - 1];
                let mut next = vec![BigInt::zero(); phi];
                // multiply by zeta: shift, then fold the overflow term
                let carry = prev[phi - 1].clone();
                for i in 1..phi {
                    next[i] = prev[i - 1].clone();
                }
                if !carry.is_zero() {
                    for i in 0..phi {
                        let add = &carry * &red[0][i];
                        next[i] += add;
                    }
                }
                red.push(next);
            }
            Arc::new(CycloCtx { phi, red })
        })
        .clone()
}

/// An exact element of Q(zeta_m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloNumber {
    conductor: usize,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    pub fn zero(m: usize) -> Self {
        let phi = ctx(m).phi;
        CycloNumber { conductor: m, coeffs: vec![BigRational::zero(); phi] }
    }

    pub fn one(m: usize) -> Self {
        Self::from_rational(m, BigRational::one())
    }

    pub fn from_rational(m: usize, q: BigRational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(m: usize, v: i64) -> Self {
        Self::from_rational(m, BigRational::from_integer(BigInt::from(v)))
    }

    /// `zeta_m^k` (k may be any integer; reduced mod m).
    pub fn root_power(m: usize, k: i64) -> Self {
        let c = ctx(m);
        let k = k.rem_euclid(m as i64) as usize;
        let mut z = Self::zero(m);
        if k < c.phi {
            z.coeffs[k] = BigRational::one();
            return z;
        }
        // reduce y^k mod Phi_m through the precomputed rows; k < m <= 2 phi
        // does not hold in general, so reduce iteratively
        let mut acc = vec![BigRational::zero(); c.phi];
        acc[0] = BigRational::one();
        for _ in 0..k {
            acc = shift_reduce(&c, acc);
        }
        z.coeffs = acc;
        z
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `Some(q)` when the value is rational, i.e. lies in the `zeta^0`
    /// coordinate of the reduced basis.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    pub fn add(&self, other: &CycloNumber) -> CycloNumber {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        CycloNumber {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CycloNumber) -> CycloNumber {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        CycloNumber {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    pub fn mul(&self, other: &CycloNumber) -> CycloNumber {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let c = ctx(self.conductor);
        let phi = c.phi;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out = vec![BigRational::zero(); phi];
        out.clone_from_slice(&prod[..phi]);
        for t in 0..phi.saturating_sub(1) {
            let c_t = &prod[phi + t];
            if c_t.is_zero() {
                continue;
            }
            for i in 0..phi {
                if !c.red[t][i].is_zero() {
                    out[i] += c_t * BigRational::from_integer(c.red[t][i].clone());
                }
            }
        }
        CycloNumber { conductor: self.conductor, coeffs: out }
    }

    /// Complex conjugation `zeta -> zeta^-1`.
    pub fn conj(&self) -> CycloNumber {
        let m = self.conductor;
        let mut acc = CycloNumber::zero(m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc = acc.add(&CycloNumber::root_power(m, -(i as i64)).scale(a));
            }
        }
        acc
    }

    /// Render as `[c0,c1,...]@zeta_m`, integers bare and rationals `p/q`.
    pub fn render(&self) -> String {
        let body: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect();
        format!("[{}]@zeta_{}", body.join(","), self.conductor)
    }
}

fn shift_reduce(c: &CycloCtx, v: Vec<BigRational>) -> Vec<BigRational> {
    let phi = c.phi;
    let mut next = vec![BigRational::zero(); phi];
    let carry = v[phi - 1].clone();
    for i in 1..phi {
        next[i] = v[i - 1].clone();
    }
    if !carry.is_zero() {
        for i in 0..phi {
            if !c.red[0][i].is_zero() {
                next[i] += &carry * BigRational::from_integer(c.red[0][i].clone());
            }
        }
    }
    next
}

/// Evaluate an integer polynomial at a cyclotomic number.
pub fn eval_int_poly(p: &IntPoly, x: &CycloNumber) -> CycloNumber {
    let m = x.conductor();
    let mut acc = CycloNumber::zero(m);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x);
        if !c.is_zero() {
            acc = acc.add(&CycloNumber::from_rational(
                m,
                BigRational::from_integer(c.clone()),
            ));
        }
    }
    acc
}

/// Polynomial with cyclotomic coefficients, ascending; used to multiply out
/// products of linear factors when matching spectra against characteristic
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloPoly {
    conductor: usize,
    c: Vec<CycloNumber>,
}

impl CycloPoly {
    pub fn one(m: usize) -> Self {
        CycloPoly { conductor: m, c: vec![CycloNumber::one(m)] }
    }

    /// Multiply by `(y - root)^mult`.
    pub fn mul_linear_power(&mut self, root: &CycloNumber, mult: usize) {
        assert_eq!(self.conductor, root.conductor());
        for _ in 0..mult {
            let mut next = vec![CycloNumber::zero(self.conductor); self.c.len() + 1];
            for (i, a) in self.c.iter().enumerate() {
                next[i + 1] = next[i + 1].add(a);
                next[i] = next[i].sub(&a.mul(root));
            }
            self.c = next;
        }
    }

    /// Equality against an integer polynomial.
    pub fn equals_int(&self, p: &IntPoly) -> bool {
        if self.c.len() != p.coeffs().len().max(1) {
            return self.c.len() == p.coeffs().len();
        }
        self.c.iter().enumerate().all(|(i, a)| {
            match a.as_rational() {
                Some(q) => q == BigRational::from_integer(p.coeff(i)),
                None => false,
            }
        })
    }
}
