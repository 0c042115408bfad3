//! Exact integer group-ring arithmetic Z[G]: formal sums with convolution
//! product, multisets, the centrality test, the conjugation-averaging (flat)
//! operator, and the abelian inversion formula.

use crate::chartab;
use crate::cyclo::CycloNumber;
use crate::group::{Group, SemidirectAction};
use crate::{Error, Result};

/// Formal integer combination of group elements; dense coefficients indexed
/// by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    group: Group,
    coeffs: Vec<i64>,
}

impl RingElement {
    pub fn zero(group: Group) -> Self {
        let n = group.order();
        RingElement { group, coeffs: vec![0; n] }
    }

    pub fn from_coeffs(group: Group, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), group.order(), "coefficient vector length");
        RingElement { group, coeffs }
    }

    /// The multiplicative unit `e`.
    pub fn unit(group: Group) -> Self {
        let mut z = Self::zero(group);
        z.coeffs[0] = 1;
        z
    }

    /// Single group element as a ring element.
    pub fn element(group: Group, g: usize) -> Self {
        let mut z = Self::zero(group);
        z.coeffs[g] = 1;
        z
    }

    /// Sum of all elements of the group.
    pub fn group_sum(group: Group) -> Self {
        let n = group.order();
        RingElement { group, coeffs: vec![1; n] }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> i64 {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(g, _)| g)
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_group(other)?;
        Ok(RingElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check_group(other)?;
        Ok(RingElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: i64) -> RingElement {
        RingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Convolution product: the coefficient of `g` in the result is
    /// `sum over g' g'' = g of a_{g'} b_{g''}`. Iterates supports and
    /// accumulates densely.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_group(other)?;
        let g = &self.group;
        let mut out = vec![0i64; g.order()];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb != 0 {
                    out[g.mul(a, b)] += ca * cb;
                }
            }
        }
        Ok(RingElement { group: self.group.clone(), coeffs: out })
    }

    /// Image under `g -> g^-1` (coefficients transported to inverses).
    pub fn inverse_map(&self) -> RingElement {
        let g = &self.group;
        let mut out = vec![0i64; g.order()];
        for (a, &c) in self.coeffs.iter().enumerate() {
            out[g.inverse(a)] = c;
        }
        RingElement { group: self.group.clone(), coeffs: out }
    }

    /// Centrality: structurally, the coefficients are constant on every
    /// conjugacy class.
    pub fn is_central(&self) -> bool {
        let classes = self.group.conjugacy_classes();
        classes.iter().all(|class| {
            let c0 = self.coeffs[class[0]];
            class.iter().all(|&g| self.coeffs[g] == c0)
        })
    }

    /// Commutation cross-check: the element commutes with the ring image of
    /// every generator. Agrees with `is_central`; kept separate so tests can
    /// compare the two routes.
    pub fn commutes_with_generators(&self) -> bool {
        for gen in self.group.generators() {
            let g = RingElement::element(self.group.clone(), gen);
            let left = g.mul(self).unwrap();
            let right = self.mul(&g).unwrap();
            if left != right {
                return false;
            }
        }
        true
    }

    /// A generator witnessing non-centrality, if any.
    pub fn non_central_witness(&self) -> Option<usize> {
        self.group.generators().into_iter().find(|&gen| {
            let g = RingElement::element(self.group.clone(), gen);
            g.mul(self).unwrap() != self.mul(&g).unwrap()
        })
    }

    fn check_group(&self, other: &RingElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::IncompatibleOperands(
                "ring elements over different groups".into(),
            ));
        }
        Ok(())
    }
}

/// Multiset of group elements with nonnegative multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiset {
    group: Group,
    mult: Vec<u32>,
}

impl Multiset {
    pub fn empty(group: Group) -> Self {
        let n = group.order();
        Multiset { group, mult: vec![0; n] }
    }

    pub fn from_set(group: Group, set: &[usize]) -> Self {
        let mut m = Self::empty(group);
        for &g in set {
            assert!(m.mult[g] == 0, "duplicate element in plain set");
            m.mult[g] = 1;
        }
        m
    }

    pub fn from_multiplicities(group: Group, mult: Vec<u32>) -> Self {
        assert_eq!(mult.len(), group.order());
        Multiset { group, mult }
    }

    pub fn from_pairs(group: Group, pairs: &[(usize, u32)]) -> Self {
        let mut m = Self::empty(group);
        for &(g, c) in pairs {
            m.mult[g] += c;
        }
        m
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn multiplicity(&self, g: usize) -> u32 {
        self.mult[g]
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// Total size counted with multiplicity.
    pub fn total(&self) -> usize {
        self.mult.iter().map(|&c| c as usize).sum()
    }

    pub fn is_plain_set(&self) -> bool {
        self.mult.iter().all(|&c| c <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(g, _)| g)
            .collect()
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &Multiset) -> Result<Multiset> {
        if self.group != other.group {
            return Err(Error::IncompatibleOperands(
                "multisets over different groups".into(),
            ));
        }
        Ok(Multiset {
            group: self.group.clone(),
            mult: self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect(),
        })
    }

    /// Scalar multiplication: multiplicities scale by `n`.
    pub fn scalar_mul(&self, n: u32) -> Multiset {
        Multiset {
            group: self.group.clone(),
            mult: self.mult.iter().map(|&c| c * n).collect(),
        }
    }

    pub fn literal(&self) -> String {
        self.group.multiset_literal(&self.mult)
    }
}

/// The sum-of-elements bridge: multiplicities become coefficients.
pub fn sum_of(s: &Multiset) -> RingElement {
    RingElement {
        group: s.group().clone(),
        coeffs: s.multiplicities().iter().map(|&c| c as i64).collect(),
    }
}

pub fn sum_of_set(group: Group, set: &[usize]) -> RingElement {
    sum_of(&Multiset::from_set(group, set))
}

/// The conjugation-averaging operator: for `N1` a subset of the normal
/// factor, the multiset with `sum = sum over h in H of h N1-bar h^-1`,
/// computed inside `N` through the action. Total multiplicity `|H| |N1|`.
pub fn flat(action: &SemidirectAction, n1: &[usize]) -> Result<Multiset> {
    let m = action.normal().order();
    let mut seen = vec![false; m];
    for &n in n1 {
        if n >= m {
            return Err(Error::InvalidSubset(format!(
                "element index {n} outside the normal factor"
            )));
        }
        if seen[n] {
            return Err(Error::InvalidSubset("duplicate element in N1".into()));
        }
        seen[n] = true;
    }
    let mut mult = vec![0u32; m];
    for h in 0..action.acting().order() {
        for &n in n1 {
            mult[action.apply(h, n)] += 1;
        }
    }
    Ok(Multiset::from_multiplicities(action.normal().clone(), mult))
}

/// Recover the coefficient of `g` in an element of Z[G] for abelian G via
/// characters: `(1/|G|) sum over chi of chi(A) conj(chi(g))`, evaluated in
/// exact cyclotomic arithmetic and reduced to an integer.
pub fn invert_coefficients(a: &RingElement, g: usize) -> Result<i64> {
    let group = a.group();
    let chars = chartab::abelian_characters(group)?;
    let m = chars.conductor();
    let order = group.order();
    let mut acc = CycloNumber::zero(m);
    for i in 0..order {
        // chi_i(A) * conj(chi_i(g))
        let mut chi_a = CycloNumber::zero(m);
        for (el, &c) in a.coeffs().iter().enumerate() {
            if c != 0 {
                chi_a = chi_a.add(&chars.value(i, el).scale(&num::BigRational::from_integer(
                    num::BigInt::from(c),
                )));
            }
        }
        acc = acc.add(&chi_a.mul(&chars.value(i, g).conj()));
    }
    let total = acc
        .as_rational()
        .ok_or_else(|| Error::InvalidInput("inversion sum is not rational".into()))?;
    let scaled = total / num::BigRational::from_integer(num::BigInt::from(order as i64));
    if !scaled.is_integer() {
        return Err(Error::InvalidInput("inversion sum is not integral".into()));
    }
    let v = i64::try_from(&scaled.to_integer())
        .map_err(|_| Error::InvalidInput("coefficient overflows i64".into()))?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    #[test]
    fn sum_of_examples() {
        let d3 = make_dihedral(3).unwrap();
        let empty = sum_of(&Multiset::empty(d3.clone()));
        assert!(empty.is_zero());

        let s = sum_of_set(d3.clone(), &[1, 4]); // {x, x a}
        assert_eq!(s.coeff(1), 1);
        assert_eq!(s.coeff(4), 1);
        assert_eq!(s.coeffs().iter().sum::<i64>(), 2);

        let c4 = make_cyclic(4).unwrap();
        let m = Multiset::from_pairs(c4, &[(2, 2)]); // {x^2, x^2}
        assert_eq!(sum_of(&m).coeff(2), 2);
    }

    #[test]
    fn multiset_laws() {
        let c6 = make_cyclic(6).unwrap();
        let a = Multiset::from_pairs(c6.clone(), &[(1, 2), (3, 1)]);
        let b = Multiset::from_pairs(c6.clone(), &[(1, 1), (5, 4)]);
        let u = a.union(&b).unwrap();
        assert_eq!(u.multiplicity(1), 3);
        assert_eq!(u.multiplicity(5), 4);
        assert_eq!(
            sum_of(&u),
            sum_of(&a).add(&sum_of(&b)).unwrap()
        );
        assert_eq!(sum_of(&a.scalar_mul(3)), sum_of(&a).scale(3));
        assert_eq!(a.scalar_mul(3).total(), 9);
    }

    #[test]
    fn unit_and_convolution() {
        let c3 = make_cyclic(3).unwrap();
        let e = RingElement::unit(c3.clone());
        let b = RingElement::from_coeffs(c3.clone(), vec![2, -1, 5]);
        assert_eq!(e.mul(&b).unwrap(), b);
        assert_eq!(b.mul(&e).unwrap(), b);

        // (x + x^2)^2 = 2e + x + x^2
        let s = sum_of_set(c3.clone(), &[1, 2]);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coeffs(), &[2, 1, 1]);
    }

    #[test]
    fn dihedral_expansion_pattern() {
        // (X-bar + Y-bar a)^2 = X^2 + Y Y^(-1) + Y (X + X^(-1)) a
        // with X = Y = {x} in D3
        let d3 = make_dihedral(3).unwrap();
        let x = sum_of_set(d3.clone(), &[1]);
        let a = RingElement::element(d3.clone(), 3);
        let ya = sum_of_set(d3.clone(), &[1]).mul(&a).unwrap();
        let s = x.add(&ya).unwrap();
        let lhs = s.mul(&s).unwrap();

        let xinv = x.inverse_map();
        let rhs = x
            .mul(&x)
            .unwrap()
            .add(&x.mul(&xinv).unwrap())
            .unwrap()
            .add(&x.mul(&x.add(&xinv).unwrap()).unwrap().mul(&a).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn group_mismatch_rejected() {
        let a = RingElement::unit(make_cyclic(3).unwrap());
        let b = RingElement::unit(make_cyclic(4).unwrap());
        assert!(matches!(a.mul(&b), Err(Error::IncompatibleOperands(_))));
    }

    #[test]
    fn centrality_examples() {
        let d3 = make_dihedral(3).unwrap();
        assert!(RingElement::group_sum(d3.clone()).is_central());
        assert!(sum_of_set(d3.clone(), &[1, 2]).is_central());
        assert!(!sum_of_set(d3.clone(), &[1]).is_central());
        // class sums are central for every tested group
        for g in [make_dihedral(4).unwrap(), make_dihedral(6).unwrap()] {
            for class in g.conjugacy_classes().iter() {
                assert!(sum_of_set(g.clone(), class).is_central());
            }
        }
    }

    #[test]
    fn centrality_agrees_with_commutation() {
        use rand::{Rng, SeedableRng};
        let d6 = make_dihedral(6).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        for _ in 0..1000 {
            let coeffs: Vec<i64> = (0..12).map(|_| rng.gen_range(-5..=5)).collect();
            let a = RingElement::from_coeffs(d6.clone(), coeffs);
            assert_eq!(a.is_central(), a.commutes_with_generators());
        }
    }

    #[test]
    fn associativity_random_triples() {
        use rand::{Rng, SeedableRng};
        let d4 = make_dihedral(4).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let mk = |rng: &mut rand::rngs::StdRng| {
                RingElement::from_coeffs(
                    d4.clone(),
                    (0..8).map(|_| rng.gen_range(-4..=4)).collect(),
                )
            };
            let (a, b, c) = (mk(&mut rng), mk(&mut rng), mk(&mut rng));
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn flat_examples() {
        // D8 = C4 x| C2 under inversion
        let c4 = make_cyclic(4).unwrap();
        let c2 = make_cyclic_named(2, "a").unwrap();
        let image: Vec<u32> = (0..4).map(|i| ((4 - i) % 4) as u32).collect();
        let beta = Automorphism::new(c4.clone(), image).unwrap();
        let act = SemidirectAction::from_cyclic_power(c4.clone(), c2, &beta).unwrap();

        let f = flat(&act, &[2]).unwrap();
        assert_eq!(f.multiplicities(), &[0, 0, 2, 0]); // {x^2, x^2}
        let f = flat(&act, &[1, 2, 3]).unwrap();
        assert_eq!(f.multiplicities(), &[0, 2, 2, 2]);
        assert_eq!(f.total(), 6);

        // trivial action: |H| copies of N1
        let triv = SemidirectAction::trivial(
            make_cyclic(5).unwrap(),
            make_cyclic_named(3, "b").unwrap(),
        );
        let f = flat(&triv, &[1, 4]).unwrap();
        assert_eq!(f.multiplicities(), &[0, 3, 0, 0, 3]);

        assert!(flat(&act, &[9]).is_err());
        assert!(flat(&act, &[1, 1]).is_err());
    }

    #[test]
    fn flat_is_action_invariant() {
        let act = crate::group::testutil::order60_action();
        let f = flat(&act, &[5, 1, 2]).unwrap();
        for h in 0..act.acting().order() {
            for n in 0..15 {
                assert_eq!(f.multiplicity(n), f.multiplicity(act.apply(h, n)));
            }
        }
    }

    #[test]
    fn inversion_formula_examples() {
        let c4 = make_cyclic(4).unwrap();
        let gbar = RingElement::group_sum(c4.clone());
        assert_eq!(invert_coefficients(&gbar, 0).unwrap(), 1);

        let c3 = make_cyclic(3).unwrap();
        let s = sum_of_set(c3.clone(), &[1]);
        assert_eq!(invert_coefficients(&s, 1).unwrap(), 1);
        assert_eq!(invert_coefficients(&s, 2).unwrap(), 0);

        let two_x2 = RingElement::from_coeffs(c4.clone(), vec![0, 0, 2, 0]);
        assert_eq!(invert_coefficients(&two_x2, 2).unwrap(), 2);

        let d3 = make_dihedral(3).unwrap();
        let a = RingElement::unit(d3);
        assert!(matches!(
            invert_coefficients(&a, 0),
            Err(Error::UnsupportedGroup(_))
        ));
    }

    #[test]
    fn inversion_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for n in 1..=12 {
            let cn = make_cyclic(n).unwrap();
            let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
            let a = RingElement::from_coeffs(cn.clone(), coeffs.clone());
            for g in 0..n {
                assert_eq!(invert_coefficients(&a, g).unwrap(), coeffs[g], "C{n} at {g}");
            }
        }
        // a direct product too
        let p = make_product(&[2, 3]).unwrap();
        let coeffs: Vec<i64> = (0..6).map(|_| rng.gen_range(-5..=5)).collect();
        let a = RingElement::from_coeffs(p.clone(), coeffs.clone());
        for g in 0..6 {
            assert_eq!(invert_coefficients(&a, g).unwrap(), coeffs[g]);
        }
    }
}
