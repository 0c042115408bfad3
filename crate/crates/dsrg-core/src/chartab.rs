//! Exact character theory for cyclic, dihedral, and direct products of
//! cyclic groups: character tables over cyclotomic fields, the orthogonality
//! identities, primitive central idempotents, and eigenvalues of Cayley
//! graphs with central connection sets.

use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::cayley::CayleySpec;
use crate::cyclo::{CycloNumber, CycloPoly};
use crate::group::{Group, GroupKind};
use crate::ring::{sum_of, RingElement};
use crate::{Error, Result};

/// Exact character table. Rows are irreducible characters (principal first),
/// columns the conjugacy classes in the group's deterministic order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Group,
    conductor: usize,
    classes: Arc<Vec<Vec<usize>>>,
    degrees: Vec<usize>,
    values: Vec<Vec<CycloNumber>>,
}

impl CharacterTable {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn num_characters(&self) -> usize {
        self.values.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn value(&self, character: usize, class: usize) -> &CycloNumber {
        &self.values[character][class]
    }

    pub fn value_at_element(&self, character: usize, g: usize) -> &CycloNumber {
        let class = self
            .classes
            .iter()
            .position(|c| c.binary_search(&g).is_ok())
            .expect("classes cover the group");
        &self.values[character][class]
    }

    /// Linear extension of a character to a ring element:
    /// `chi(A) = sum a_g chi(g)`.
    pub fn extend(&self, character: usize, a: &RingElement) -> CycloNumber {
        let mut acc = CycloNumber::zero(self.conductor);
        for (g, &c) in a.coeffs().iter().enumerate() {
            if c != 0 {
                acc = acc.add(
                    &self
                        .value_at_element(character, g)
                        .scale(&BigRational::from_integer(BigInt::from(c))),
                );
            }
        }
        acc
    }
}

fn zeta(m: usize, num: i64) -> CycloNumber {
    CycloNumber::root_power(m, num)
}

/// Exact character table for cyclic, dihedral, or direct products of cyclic
/// groups. Other kinds are rejected.
pub fn character_table(group: &Group) -> Result<CharacterTable> {
    let classes = group.conjugacy_classes();
    match group.kind() {
        GroupKind::Cyclic { n, .. } => {
            let n = *n;
            let m = n;
            let mut values = Vec::with_capacity(n);
            for j in 0..n {
                // chi_j(x^i) = zeta_n^(i j); classes are singletons {i}
                let row = classes
                    .iter()
                    .map(|c| zeta(m, (j * c[0]) as i64))
                    .collect();
                values.push(row);
            }
            Ok(CharacterTable {
                group: group.clone(),
                conductor: m,
                classes,
                degrees: vec![1; n],
                values,
            })
        }
        GroupKind::Product { orders } => {
            let m = orders.iter().fold(1usize, |acc, &o| num::integer::lcm(acc, o));
            let order = group.order();
            let decompose = |mut g: usize| -> Vec<usize> {
                let mut radix = order;
                orders
                    .iter()
                    .map(|&o| {
                        radix /= o;
                        let c = g / radix;
                        g %= radix;
                        c
                    })
                    .collect()
            };
            let mut values = Vec::with_capacity(order);
            for jidx in 0..order {
                let js = decompose(jidx);
                let row = classes
                    .iter()
                    .map(|c| {
                        let is = decompose(c[0]);
                        let mut expo: i64 = 0;
                        for ((&j, &i), &o) in js.iter().zip(&is).zip(orders) {
                            expo += (m / o) as i64 * (j as i64) * (i as i64);
                        }
                        zeta(m, expo)
                    })
                    .collect();
                values.push(row);
            }
            Ok(CharacterTable {
                group: group.clone(),
                conductor: m,
                classes,
                degrees: vec![1; order],
                values,
            })
        }
        GroupKind::Dihedral { n } => {
            let n = *n;
            let m = num::integer::lcm(n, 2);
            let step = (m / n) as i64;
            let order = 2 * n;
            let mut values: Vec<Vec<CycloNumber>> = Vec::new();
            let mut degrees = Vec::new();
            // rep < n: rotation x^rep; rep >= n: reflection x^(rep-n) a
            let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
            // principal and sign characters
            values.push(reps.iter().map(|_| CycloNumber::one(m)).collect());
            degrees.push(1);
            values.push(
                reps.iter()
                    .map(|&rep| CycloNumber::from_integer(m, if rep < n { 1 } else { -1 }))
                    .collect(),
            );
            degrees.push(1);
            if n % 2 == 0 {
                // chi(x) = -1 variants
                for on_a in [1i64, -1] {
                    values.push(
                        reps.iter()
                            .map(|&rep| {
                                let (i, j) =
                                    if rep < n { (rep, 0usize) } else { (rep - n, 1) };
                                let mut v = if i % 2 == 0 { 1 } else { -1 };
                                if j == 1 && on_a == -1 {
                                    v = -v;
                                }
                                CycloNumber::from_integer(m, v)
                            })
                            .collect(),
                    );
                    degrees.push(1);
                }
            }
            let two_dim_count = if n % 2 == 0 { n / 2 - 1 } else { (n - 1) / 2 };
            for h in 1..=two_dim_count {
                values.push(
                    reps.iter()
                        .map(|&rep| {
                            if rep < n {
                                let e = (h * rep) as i64;
                                zeta(m, step * e).add(&zeta(m, -step * e))
                            } else {
                                CycloNumber::zero(m)
                            }
                        })
                        .collect(),
                );
                degrees.push(2);
            }
            debug_assert_eq!(values.len(), classes.len());
            debug_assert_eq!(
                degrees.iter().map(|d| d * d).sum::<usize>(),
                order
            );
            Ok(CharacterTable {
                group: group.clone(),
                conductor: m,
                classes,
                degrees,
                values,
            })
        }
        other => Err(Error::UnsupportedGroup(format!(
            "character tables cover cyclic, dihedral, and cyclic products; got {other:?}"
        ))),
    }
}

/// Both matrix orthogonality identities, checked exactly:
/// `X D1 conj(X)^T = |G| I` and `conj(X)^T X = |G| D1^-1`.
pub fn verify_orthogonality(table: &CharacterTable) -> bool {
    let r = table.num_characters();
    let order = table.group().order() as i64;
    let m = table.conductor();
    let class_sizes: Vec<i64> = table.classes().iter().map(|c| c.len() as i64).collect();
    // first: sum over classes of chi_i(g) conj(chi_j(g)) |C| = |G| delta_ij
    for i in 0..r {
        for j in 0..r {
            let mut acc = CycloNumber::zero(m);
            for (h, &sz) in class_sizes.iter().enumerate() {
                let term = table.value(i, h).mul(&table.value(j, h).conj());
                acc = acc.add(&term.scale(&BigRational::from_integer(BigInt::from(sz))));
            }
            let expect = if i == j { order } else { 0 };
            if acc.as_rational() != Some(BigRational::from_integer(BigInt::from(expect))) {
                return false;
            }
        }
    }
    // second: sum over characters of conj(chi(g_i)) chi(g_j) = |G|/|C_i| delta_ij
    for i in 0..r {
        for j in 0..r {
            let mut acc = CycloNumber::zero(m);
            for h in 0..r {
                acc = acc.add(&table.value(h, i).conj().mul(table.value(h, j)));
            }
            let expect = if i == j {
                BigRational::new(BigInt::from(order), BigInt::from(class_sizes[i]))
            } else {
                BigRational::zero()
            };
            if acc.as_rational() != Some(expect) {
                return false;
            }
        }
    }
    true
}

/// Group-ring element with cyclotomic coefficients, for idempotent checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElem {
    group: Group,
    conductor: usize,
    coeffs: Vec<CycloNumber>,
}

impl CycloElem {
    pub fn zero(group: Group, conductor: usize) -> Self {
        let n = group.order();
        CycloElem {
            group,
            conductor,
            coeffs: vec![CycloNumber::zero(conductor); n],
        }
    }

    pub fn unit(group: Group, conductor: usize) -> Self {
        let mut z = Self::zero(group, conductor);
        z.coeffs[0] = CycloNumber::one(conductor);
        z
    }

    pub fn coeff(&self, g: usize) -> &CycloNumber {
        &self.coeffs[g]
    }

    pub fn add(&self, other: &CycloElem) -> CycloElem {
        assert_eq!(self.group, other.group);
        CycloElem {
            group: self.group.clone(),
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &CycloElem) -> CycloElem {
        assert_eq!(self.group, other.group);
        let g = &self.group;
        let mut out = vec![CycloNumber::zero(self.conductor); g.order()];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    let t = g.mul(a, b);
                    out[t] = out[t].add(&ca.mul(cb));
                }
            }
        }
        CycloElem {
            group: self.group.clone(),
            conductor: self.conductor,
            coeffs: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// The complete family of primitive central idempotents
/// `e_i = (n_i / |G|) sum over g of conj(chi_i(g)) g`.
pub fn central_idempotents(group: &Group) -> Result<Vec<CycloElem>> {
    let table = character_table(group)?;
    let m = table.conductor();
    let order = group.order();
    let scale = |deg: usize| BigRational::new(BigInt::from(deg), BigInt::from(order));
    let mut out = Vec::with_capacity(table.num_characters());
    for i in 0..table.num_characters() {
        let f = scale(table.degrees()[i]);
        let mut e = CycloElem::zero(group.clone(), m);
        for g in 0..order {
            e.coeffs[g] = table.value_at_element(i, g).conj().scale(&f);
        }
        out.push(e);
    }
    Ok(out)
}

/// One eigenvalue with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub value: CycloNumber,
    pub multiplicity: usize,
}

/// Eigenvalues of a Cayley graph whose connection-set sum is central:
/// `lambda_i = (1/n_i) sum over s in S of chi_i(s)` with multiplicity
/// `n_i^2`, one entry per irreducible character (coincident values are not
/// merged).
pub fn central_spectrum(spec: &CayleySpec) -> Result<Vec<SpectrumEntry>> {
    if !spec.connection().is_plain_set() {
        return Err(Error::UnsupportedMultigraph(
            "central spectrum needs a plain connection set".into(),
        ));
    }
    let group = spec.group();
    let sbar = sum_of(spec.connection());
    if !sbar.is_central() {
        let witness = sbar
            .non_central_witness()
            .map(|g| group.display_element(g))
            .unwrap_or_else(|| "?".into());
        return Err(Error::Precondition(format!(
            "connection-set sum is not central: it does not commute with {witness}"
        )));
    }
    let table = character_table(group)?;
    let m = table.conductor();
    let mut out = Vec::new();
    for i in 0..table.num_characters() {
        let deg = table.degrees()[i];
        let mut acc = CycloNumber::zero(m);
        for s in spec.connection().support() {
            acc = acc.add(table.value_at_element(i, s));
        }
        let lambda = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(deg)));
        out.push(SpectrumEntry { value: lambda, multiplicity: deg * deg });
    }
    Ok(out)
}

/// Eigenvalues of a Cayley graph over an abelian group: one per linear
/// character, multiplicity 1.
pub fn abelian_spectrum(spec: &CayleySpec) -> Result<Vec<SpectrumEntry>> {
    let group = spec.group();
    if !group.is_abelian() {
        return Err(Error::UnsupportedGroup(
            "abelian spectrum needs an abelian group".into(),
        ));
    }
    let chars = abelian_characters(group)?;
    let m = chars.conductor();
    let mut out = Vec::new();
    for i in 0..group.order() {
        let mut acc = CycloNumber::zero(m);
        for s in spec.connection().support() {
            let c = spec.connection().multiplicity(s) as i64;
            acc = acc.add(&chars.value(i, s).scale(&BigRational::from_integer(BigInt::from(c))));
        }
        out.push(SpectrumEntry { value: acc, multiplicity: 1 });
    }
    Ok(out)
}

/// Linear characters of an abelian group, indexed `[character][element]`.
pub struct AbelianCharacters {
    conductor: usize,
    values: Vec<Vec<CycloNumber>>,
}

impl AbelianCharacters {
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn value(&self, character: usize, g: usize) -> &CycloNumber {
        &self.values[character][g]
    }
}

/// Full set of linear characters for a supported abelian group (cyclic,
/// cyclic product, or dihedral of order <= 4).
pub fn abelian_characters(group: &Group) -> Result<AbelianCharacters> {
    if !group.is_abelian() {
        return Err(Error::UnsupportedGroup(
            "inversion through characters needs an abelian group".into(),
        ));
    }
    let table = character_table(group)?;
    if table.degrees().iter().any(|&d| d != 1) {
        return Err(Error::UnsupportedGroup(
            "abelian group with non-linear characters (table bug)".into(),
        ));
    }
    let order = group.order();
    let values = (0..order)
        .map(|i| {
            (0..order)
                .map(|g| table.value_at_element(i, g).clone())
                .collect()
        })
        .collect();
    Ok(AbelianCharacters { conductor: table.conductor(), values })
}

/// Check that the per-character spectrum matches the characteristic
/// polynomial of the adjacency matrix exactly: the product of
/// `(y - lambda_i)^(n_i^2)` must equal `char_poly(A)`.
pub fn spectrum_matches_char_poly(spec: &CayleySpec, entries: &[SpectrumEntry]) -> bool {
    let a = crate::cayley::adjacency(spec);
    let cp = crate::matrix::char_poly(&a);
    let m = entries
        .first()
        .map(|e| e.value.conductor())
        .unwrap_or(1);
    let mut prod = CycloPoly::one(m);
    for e in entries {
        prod.mul_linear_power(&e.value, e.multiplicity);
    }
    prod.equals_int(&cp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    #[test]
    fn cyclic_table_values() {
        let c3 = make_cyclic(3).unwrap();
        let t = character_table(&c3).unwrap();
        assert_eq!(t.num_characters(), 3);
        assert_eq!(t.conductor(), 3);
        // chi_1(x) = zeta_3
        assert_eq!(*t.value_at_element(1, 1), CycloNumber::root_power(3, 1));
        assert!(verify_orthogonality(&t));
    }

    #[test]
    fn dihedral_table_degrees() {
        let d3 = make_dihedral(3).unwrap();
        let t = character_table(&d3).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<usize>(), 6);
        assert!(verify_orthogonality(&t));
    }

    #[test]
    fn klein_table_is_plus_minus_one() {
        let v4 = make_product(&[2, 2]).unwrap();
        let t = character_table(&v4).unwrap();
        assert_eq!(t.num_characters(), 4);
        for i in 0..4 {
            for j in 0..4 {
                let v = t.value(i, j).as_integer().unwrap();
                assert!(v == BigInt::from(1) || v == BigInt::from(-1));
            }
        }
        assert!(verify_orthogonality(&t));
    }

    #[test]
    fn orthogonality_all_supported_tables() {
        for n in 1..=12 {
            let t = character_table(&make_cyclic(n).unwrap()).unwrap();
            assert!(verify_orthogonality(&t), "C{n}");
        }
        for n in 1..=8 {
            let t = character_table(&make_dihedral(n).unwrap()).unwrap();
            assert!(verify_orthogonality(&t), "D{n}");
        }
        let t = character_table(&make_product(&[3, 5]).unwrap()).unwrap();
        assert!(verify_orthogonality(&t));
        let t = character_table(&make_product(&[2, 2, 3]).unwrap()).unwrap();
        assert!(verify_orthogonality(&t));
    }

    #[test]
    fn perturbed_table_fails_orthogonality() {
        let c4 = make_cyclic(4).unwrap();
        let mut t = character_table(&c4).unwrap();
        t.values.swap(1, 3);
        // swapping rows keeps row orthogonality but mislabels columns of the
        // second identity only when values change; perturb one value instead
        t.values[1][1] = CycloNumber::from_integer(t.conductor, 5);
        assert!(!verify_orthogonality(&t));
    }

    #[test]
    fn unsupported_group_rejected() {
        let g = make_semidirect(SemidirectAction::trivial(
            make_cyclic(3).unwrap(),
            make_cyclic_named(2, "b").unwrap(),
        ));
        assert!(matches!(
            character_table(&g),
            Err(Error::UnsupportedGroup(_))
        ));
    }

    #[test]
    fn idempotent_suite() {
        for group in [
            make_cyclic(3).unwrap(),
            make_cyclic(4).unwrap(),
            make_cyclic(6).unwrap(),
            make_dihedral(3).unwrap(),
            make_dihedral(4).unwrap(),
        ] {
            let es = central_idempotents(&group).unwrap();
            let m = es[0].conductor;
            let unit = CycloElem::unit(group.clone(), m);
            let mut total = CycloElem::zero(group.clone(), m);
            for (i, ei) in es.iter().enumerate() {
                assert_eq!(ei.mul(ei), *ei, "e_{i}^2 = e_{i}");
                for (j, ej) in es.iter().enumerate() {
                    if i != j {
                        assert!(ei.mul(ej).is_zero(), "e_{i} e_{j} = 0");
                    }
                }
                total = total.add(ei);
            }
            assert_eq!(total, unit, "sum of idempotents is the unit");
        }
    }

    #[test]
    fn trivial_idempotent_is_group_sum() {
        let d3 = make_dihedral(3).unwrap();
        let es = central_idempotents(&d3).unwrap();
        let m = es[0].conductor;
        let sixth = BigRational::new(BigInt::one(), BigInt::from(6));
        for g in 0..6 {
            assert_eq!(
                *es[0].coeff(g),
                CycloNumber::one(m).scale(&sixth)
            );
        }
    }

    #[test]
    fn central_spectrum_examples() {
        // D3, S = {x, x^2}: eigenvalues 2, 2, -1 with multiplicities 1, 1, 4
        let d3 = make_dihedral(3).unwrap();
        let spec = CayleySpec::from_set(d3.clone(), &[1, 2]).unwrap();
        let entries = central_spectrum(&spec).unwrap();
        let m = entries[0].value.conductor();
        assert_eq!(entries.len(), 3);
        assert_eq!(entries[0].value, CycloNumber::from_integer(m, 2));
        assert_eq!(entries[0].multiplicity, 1);
        assert_eq!(entries[1].value, CycloNumber::from_integer(m, 2));
        assert_eq!(entries[1].multiplicity, 1);
        assert_eq!(entries[2].value, CycloNumber::from_integer(m, -1));
        assert_eq!(entries[2].multiplicity, 4);
        assert!(spectrum_matches_char_poly(&spec, &entries));

        // S = G \ {e}: principal eigenvalue |G| - 1, all others -1
        let all: Vec<usize> = (1..6).collect();
        let spec = CayleySpec::from_set(d3.clone(), &all).unwrap();
        let entries = central_spectrum(&spec).unwrap();
        assert_eq!(entries[0].value, CycloNumber::from_integer(m, 5));
        for e in &entries[1..] {
            assert_eq!(e.value, CycloNumber::from_integer(m, -1));
        }

        // non-central set rejected with a witness
        let spec = CayleySpec::from_set(d3, &[1]).unwrap();
        assert!(matches!(
            central_spectrum(&spec),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn abelian_spectrum_examples() {
        let c4 = make_cyclic(4).unwrap();
        let spec = CayleySpec::from_set(c4.clone(), &[1, 3]).unwrap();
        let entries = abelian_spectrum(&spec).unwrap();
        let m = entries[0].value.conductor();
        let expected = [2i64, 0, -2, 0];
        for (e, want) in entries.iter().zip(expected) {
            assert_eq!(e.value, CycloNumber::from_integer(m, want));
            assert_eq!(e.multiplicity, 1);
        }

        let c3 = make_cyclic(3).unwrap();
        let spec = CayleySpec::from_set(c3, &[1, 2]).unwrap();
        let entries = abelian_spectrum(&spec).unwrap();
        let m = entries[0].value.conductor();
        assert_eq!(entries[0].value, CycloNumber::from_integer(m, 2));
        assert_eq!(entries[1].value, CycloNumber::from_integer(m, -1));
        assert_eq!(entries[2].value, CycloNumber::from_integer(m, -1));

        // C_n with S = {x}: lambda_j = zeta^j
        let c5 = make_cyclic(5).unwrap();
        let spec = CayleySpec::from_set(c5, &[1]).unwrap();
        let entries = abelian_spectrum(&spec).unwrap();
        for (j, e) in entries.iter().enumerate() {
            assert_eq!(e.value, CycloNumber::root_power(5, j as i64));
        }

        let d3 = make_dihedral(3).unwrap();
        let spec = CayleySpec::from_set(d3, &[1]).unwrap();
        assert!(matches!(
            abelian_spectrum(&spec),
            Err(Error::UnsupportedGroup(_))
        ));
    }

    #[test]
    fn inverse_closed_class_unions_have_real_spectra() {
        for group in [make_dihedral(4).unwrap(), make_dihedral(5).unwrap()] {
            let classes = group.conjugacy_classes();
            // unions of inverse-closed nontrivial classes
            let nontrivial: Vec<&Vec<usize>> = classes.iter().skip(1).collect();
            for mask in 1u32..(1 << nontrivial.len()) {
                let mut s: Vec<usize> = Vec::new();
                for (i, class) in nontrivial.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        s.extend_from_slice(class);
                    }
                }
                let inverse_closed = s
                    .iter()
                    .all(|&g| s.contains(&group.inverse(g)));
                if !inverse_closed {
                    continue;
                }
                let spec = CayleySpec::from_set(group.clone(), &s).unwrap();
                for e in central_spectrum(&spec).unwrap() {
                    assert_eq!(e.value, e.value.conj(), "self-conjugate eigenvalue");
                }
            }
        }
    }
}
