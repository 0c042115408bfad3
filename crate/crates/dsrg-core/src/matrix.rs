//! Dense integer matrices with exact characteristic and minimal polynomials.
//!
//! The characteristic polynomial is computed by the Faddeev-LeVerrier
//! recurrence over big integers (every division is by an integer and exact);
//! the minimal polynomial by incremental Krylov annihilators over the
//! rationals. No floating point.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::poly::{IntPoly, RatPoly};

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn all_ones(n: usize) -> Self {
        IntMatrix { n, a: vec![1; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        IntMatrix { n, a }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        IntMatrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        IntMatrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix { n: self.n, a: self.a.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let v = self.get(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += v * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }
}

fn big_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            let aik = &a[i][k];
            for j in 0..n {
                if !b[k][j].is_zero() {
                    let prod = aik * &b[k][j];
                    out[i][j] += prod;
                }
            }
        }
    }
    out
}

/// Characteristic polynomial `det(yI - A)`, monic of degree `n`, by the
/// Faddeev-LeVerrier recurrence. All divisions are exact.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    let n = m.dim();
    if n == 0 {
        return IntPoly::one();
    }
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_1 = A; c_{n-k} = -tr(M_k)/k; M_{k+1} = A (M_k + c_{n-k} I)
    let mut mk = a.clone();
    for k in 1..=n {
        let tr: BigInt = (0..n).map(|i| mk[i][i].clone()).sum();
        let (c, rem) = num::integer::div_rem(-tr, BigInt::from(k));
        assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = c.clone();
        if k < n {
            for i in 0..n {
                mk[i][i] += &c;
            }
            mk = big_mul(&a, &mk);
        }
    }
    IntPoly::from_coeffs(coeffs)
}

/// Minimal polynomial: the least-degree monic annihilator, integer
/// coefficients (it divides the characteristic polynomial).
pub fn min_poly(m: &IntMatrix) -> IntPoly {
    let n = m.dim();
    if n == 0 {
        return IntPoly::one();
    }
    let mut acc = RatPoly::one();
    for start in 0..n {
        if acc.degree() == n {
            break;
        }
        // v = acc(A) e_start, evaluated by Horner
        let mut v = vec![BigRational::zero(); n];
        for idx in (0..acc.coeffs().len()).rev() {
            v = apply(m, &v);
            v[start] += acc.coeff(idx);
        }
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        // minimal q with q(A) v = 0, via incremental row reduction of the
        // Krylov sequence; rows carry their expression in powers of A
        let mut rows: Vec<(Vec<BigRational>, Vec<BigRational>)> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut cur = v.clone();
        let mut power = 0usize;
        loop {
            // coords: cur = sum coords[j] * (A^j v) over the reduced basis
            let mut vec_part = cur.clone();
            let mut combo = vec![BigRational::zero(); power + 1];
            combo[power] = BigRational::one();
            for (row, (rv, rc)) in rows.iter().enumerate() {
                let p = pivots[row];
                if vec_part[p].is_zero() {
                    continue;
                }
                let f = vec_part[p].clone();
                for i in 0..n {
                    let sub = &f * &rv[i];
                    vec_part[i] -= sub;
                }
                for (i, c) in rc.iter().enumerate() {
                    let sub = &f * c;
                    combo[i] -= sub;
                }
            }
            match vec_part.iter().position(|x| !x.is_zero()) {
                Some(p) => {
                    let lead = vec_part[p].clone();
                    let rv: Vec<BigRational> = vec_part.iter().map(|x| x / &lead).collect();
                    let mut rc: Vec<BigRational> = combo.iter().map(|x| x / &lead).collect();
                    rc.resize(power + 1, BigRational::zero());
                    rows.push((rv, rc));
                    pivots.push(p);
                    cur = apply(m, &cur);
                    power += 1;
                }
                None => {
                    // dependency: 0 = sum combo[j] (A^j v), combo[power] = 1,
                    // so combo itself is the monic annihilator of v
                    let q = RatPoly::from_coeffs(combo).monic();
                    acc = acc.mul(&q).monic();
                    break;
                }
            }
        }
    }
    let out = acc
        .to_int()
        .expect("minimal polynomial of an integer matrix has integer coefficients");
    debug_assert!(poly_apply_is_zero(m, &out));
    out
}

fn apply(m: &IntMatrix, v: &[BigRational]) -> Vec<BigRational> {
    let n = m.dim();
    let mut out = vec![BigRational::zero(); n];
    for i in 0..n {
        let mut acc = BigRational::zero();
        for j in 0..n {
            let c = m.get(i, j);
            if c != 0 {
                acc += v[j].clone() * BigRational::from_integer(BigInt::from(c));
            }
        }
        out[i] = acc;
    }
    out
}

fn poly_apply_is_zero(m: &IntMatrix, p: &IntPoly) -> bool {
    let n = m.dim();
    for start in 0..n {
        let mut v = vec![BigRational::zero(); n];
        for idx in (0..p.coeffs().len()).rev() {
            v = apply(m, &v);
            v[start] += BigRational::from_integer(p.coeff(idx));
        }
        if v.iter().any(|x| !x.is_zero()) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// cofactor-expansion determinant of `yI - A`, the independent route
    fn char_poly_cofactor(m: &IntMatrix) -> IntPoly {
        fn det(rows: &[Vec<IntPoly>]) -> IntPoly {
            let n = rows.len();
            if n == 0 {
                return IntPoly::one();
            }
            if n == 1 {
                return rows[0][0].clone();
            }
            let mut acc = IntPoly::zero();
            for (j, entry) in rows[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<IntPoly>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = entry.mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        let n = m.dim();
        let rows: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut p = IntPoly::from_i64s(&[-m.get(i, j)]);
                        if i == j {
                            p = p.add(&IntPoly::monomial(1));
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        det(&rows)
    }

    #[test]
    fn char_poly_small_cases() {
        let z = IntMatrix::zeros(4);
        assert_eq!(char_poly(&z), IntPoly::monomial(4));
        assert_eq!(min_poly(&z), IntPoly::monomial(1));

        let m = IntMatrix::from_fn(2, |i, j| [[2, 1], [0, 3]][i][j]);
        assert_eq!(char_poly(&m), IntPoly::from_i64s(&[6, -5, 1]));

        // J - I on 3 points: (y-2)(y+1)^2
        let m = IntMatrix::from_fn(3, |i, j| if i == j { 0 } else { 1 });
        assert_eq!(char_poly(&m), IntPoly::from_i64s(&[-2, -3, 0, 1]));
        assert_eq!(min_poly(&m), IntPoly::from_i64s(&[-2, -1, 1])); // (y-2)(y+1)
    }

    #[test]
    fn char_poly_matches_cofactor_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for n in 1..=5 {
            for _ in 0..8 {
                let m = IntMatrix::from_fn(n, |_, _| rng.gen_range(-3..=3));
                assert_eq!(char_poly(&m), char_poly_cofactor(&m), "dim {n}");
            }
        }
    }

    #[test]
    fn min_poly_divides_char_poly() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(23);
        for n in 1..=6 {
            for _ in 0..6 {
                let m = IntMatrix::from_fn(n, |_, _| rng.gen_range(-2..=2));
                let cp = char_poly(&m);
                let mp = min_poly(&m);
                assert!(mp.is_monic());
                assert!(mp.divides(&cp));
            }
        }
    }

    #[test]
    fn min_poly_diag_repeats() {
        // diag(1,1,2): min poly (y-1)(y-2)
        let m = IntMatrix::from_fn(3, |i, j| if i == j { [1, 1, 2][i] } else { 0 });
        assert_eq!(min_poly(&m), IntPoly::from_i64s(&[2, -3, 1]));
    }
}
