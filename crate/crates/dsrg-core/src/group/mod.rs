//! Finite-group engine: cyclic, dihedral, direct-product, semidirect, and
//! table-backed groups with dense element indexing, conjugacy classes,
//! normalizers, automorphisms, and H-orbit machinery.
//!
//! Elements are indices in `0..order`, with the identity always at index 0.
//! Products are computed by a per-kind formula, so no multiplication table is
//! stored except for explicitly table-backed groups.

mod parse;

use std::sync::{Arc, OnceLock};

use crate::{Error, Result};

/// Shared handle to an immutable finite group.
pub type Group = Arc<FiniteGroup>;

/// Structural description of a group. Two groups compare equal when they have
/// the same construction data, which makes elements of independently built
/// copies interchangeable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    /// Cyclic of order `n` generated by `gen` (element `i` is `gen^i`).
    Cyclic { n: usize, gen: String },
    /// Dihedral of order `2n`: element `j*n + i` is `x^i a^j` with
    /// `x^n = a^2 = e` and `a x = x^-1 a`.
    Dihedral { n: usize },
    /// Direct product of cyclic factors with generators `a1, a2, ...`;
    /// indices are mixed-radix, first factor most significant.
    Product { orders: Vec<usize> },
    /// Semidirect product `N x| H`; element `n_idx * |H| + h_idx` is the
    /// pair `(n, h)`.
    Semidirect { action: Arc<SemidirectAction> },
    /// Explicit multiplication table. `labels` name the elements (used by
    /// the `g<label>` token grammar); `labels[0]` is the identity.
    Table { labels: Vec<u64>, mul: Vec<u32>, tag: String },
}

#[derive(Debug)]
pub struct FiniteGroup {
    kind: GroupKind,
    order: usize,
    inv: Vec<u32>,
    classes: OnceLock<Arc<Vec<Vec<usize>>>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}
impl Eq for FiniteGroup {}

fn build(kind: GroupKind, order: usize) -> FiniteGroup {
    let mut g = FiniteGroup {
        kind,
        order,
        inv: Vec::new(),
        classes: OnceLock::new(),
    };
    let mut inv = vec![u32::MAX; order];
    for a in 0..order {
        if inv[a] != u32::MAX {
            continue;
        }
        let b = g.inverse_by_formula(a);
        inv[a] = b as u32;
        inv[b] = a as u32;
    }
    g.inv = inv;
    g
}

/// Cyclic group of order `n` with generator token `x`.
pub fn make_cyclic(n: usize) -> Result<Group> {
    make_cyclic_named(n, "x")
}

/// Cyclic group with a custom generator token (the acting factor of a
/// semidirect product conventionally uses `b`).
pub fn make_cyclic_named(n: usize, gen: &str) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidOrder("cyclic group needs order >= 1".into()));
    }
    Ok(Arc::new(build(
        GroupKind::Cyclic { n, gen: gen.to_string() },
        n,
    )))
}

/// Dihedral group of order `2n` with presentation `x^n = a^2 = e`,
/// `a x = x^-1 a`.
pub fn make_dihedral(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidOrder("dihedral group needs order >= 1".into()));
    }
    Ok(Arc::new(build(GroupKind::Dihedral { n }, 2 * n)))
}

/// Direct product of cyclic groups with generators `a1, a2, ...`.
pub fn make_product(orders: &[usize]) -> Result<Group> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(Error::InvalidOrder(
            "product needs at least one factor, all of positive order".into(),
        ));
    }
    let order = orders.iter().product();
    Ok(Arc::new(build(
        GroupKind::Product { orders: orders.to_vec() },
        order,
    )))
}

/// Semidirect product `N x| H` for a validated action.
pub fn make_semidirect(action: SemidirectAction) -> Group {
    let order = action.normal.order() * action.acting.order();
    Arc::new(build(
        GroupKind::Semidirect { action: Arc::new(action) },
        order,
    ))
}

/// Subgroup of the multiplicative units modulo `modulus`, given as a list of
/// residues. Elements display as `g<residue>`. The residues must be closed
/// under multiplication and contain 1.
pub fn make_units_subgroup(modulus: u64, residues: &[u64]) -> Result<Group> {
    if residues.is_empty() {
        return Err(Error::InvalidOrder("empty residue list".into()));
    }
    let mut labels: Vec<u64> = residues.to_vec();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() != residues.len() {
        return Err(Error::InvalidInput("duplicate residues".into()));
    }
    if labels[0] != 1 {
        return Err(Error::InvalidInput(
            "residue subgroup must contain 1 as its least element".into(),
        ));
    }
    let n = labels.len();
    let pos = |r: u64| -> Result<usize> {
        labels
            .binary_search(&r)
            .map_err(|_| Error::InvalidInput(format!("residues not closed: {r} missing")))
    };
    let mut mul = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let r = (labels[i] * labels[j]) % modulus;
            mul[i * n + j] = pos(r)? as u32;
        }
    }
    Ok(Arc::new(build(
        GroupKind::Table { labels, mul, tag: format!("units mod {modulus}") },
        n,
    )))
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.kind {
            GroupKind::Cyclic { n, .. } => (a + b) % n,
            GroupKind::Dihedral { n } => {
                let (ja, ea) = (a / n, a % n);
                let (jb, eb) = (b / n, b % n);
                let e = if ja == 1 { (ea + n - eb) % n } else { (ea + eb) % n };
                ((ja + jb) % 2) * n + e
            }
            GroupKind::Product { orders } => {
                let mut out = 0;
                let (mut ra, mut rb) = (a, b);
                // mixed-radix componentwise addition, first factor most significant
                let mut radix = self.order;
                for &m in orders {
                    radix /= m;
                    let ca = ra / radix;
                    let cb = rb / radix;
                    ra %= radix;
                    rb %= radix;
                    out = out * m + (ca + cb) % m;
                }
                out
            }
            GroupKind::Semidirect { action } => {
                let d = action.acting.order();
                let (na, ha) = (a / d, a % d);
                let (nb, hb) = (b / d, b % d);
                let n2 = action.normal.mul(na, action.apply(ha, nb));
                let h2 = action.acting.mul(ha, hb);
                n2 * d + h2
            }
            GroupKind::Table { mul, .. } => mul[a * self.order + b] as usize,
        }
    }

    fn inverse_by_formula(&self, a: usize) -> usize {
        match &self.kind {
            GroupKind::Cyclic { n, .. } => (n - a) % n,
            GroupKind::Dihedral { n } => {
                let (j, e) = (a / n, a % n);
                if j == 1 {
                    a
                } else {
                    (n - e) % n
                }
            }
            GroupKind::Product { orders } => {
                let mut out = 0;
                let mut r = a;
                let mut radix = self.order;
                for &m in orders {
                    radix /= m;
                    let c = r / radix;
                    r %= radix;
                    out = out * m + (m - c) % m;
                }
                out
            }
            GroupKind::Semidirect { action } => {
                let d = action.acting.order();
                let (n, h) = (a / d, a % d);
                let hinv = action.acting.inverse(h);
                let ninv = action.apply(hinv, action.normal.inverse(n));
                ninv * d + hinv
            }
            GroupKind::Table { .. } => {
                // linear scan; cached in `inv` afterwards
                for b in 0..self.order {
                    if self.mul(a, b) == 0 {
                        return b;
                    }
                }
                unreachable!("table group has no inverse for element {a}")
            }
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let (mut base, mut k) = if k < 0 {
            (self.inverse(g), (-k) as u64)
        } else {
            (g, k as u64)
        };
        let mut acc = 0usize;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Exponent of the group: lcm of all element orders.
    pub fn exponent(&self) -> usize {
        let mut e: usize = 1;
        for g in self.elements() {
            e = num::integer::lcm(e, self.element_order(g));
        }
        e
    }

    /// A generating set, used by centrality checks and parsing.
    pub fn generators(&self) -> Vec<usize> {
        match &self.kind {
            GroupKind::Cyclic { n, .. } => {
                if *n > 1 {
                    vec![1]
                } else {
                    vec![]
                }
            }
            GroupKind::Dihedral { n } => {
                if *n > 1 {
                    vec![1, *n]
                } else {
                    vec![*n]
                }
            }
            GroupKind::Product { orders } => {
                let mut gens = Vec::new();
                let mut radix = self.order;
                for &m in orders {
                    radix /= m;
                    if m > 1 {
                        gens.push(radix);
                    }
                }
                gens
            }
            GroupKind::Semidirect { action } => {
                let d = action.acting.order();
                let mut gens: Vec<usize> =
                    action.normal.generators().iter().map(|&n| n * d).collect();
                gens.extend(action.acting.generators());
                gens
            }
            GroupKind::Table { .. } => (1..self.order).collect(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes as disjoint sorted element sets covering the group.
    /// The identity class `{e}` comes first; the rest are ordered by
    /// (size, least element index).
    pub fn conjugacy_classes(&self) -> Arc<Vec<Vec<usize>>> {
        self.classes
            .get_or_init(|| {
                let n = self.order;
                let mut seen = vec![false; n];
                let mut classes: Vec<Vec<usize>> = Vec::new();
                for g in 0..n {
                    if seen[g] {
                        continue;
                    }
                    let mut class = Vec::new();
                    for h in 0..n {
                        let c = self.mul(self.mul(h, g), self.inverse(h));
                        if !seen[c] {
                            seen[c] = true;
                            class.push(c);
                        }
                    }
                    class.sort_unstable();
                    classes.push(class);
                }
                classes.sort_by_key(|c| (c[0] != 0, c.len(), c[0]));
                Arc::new(classes)
            })
            .clone()
    }

    /// Index of the conjugacy class containing `g`.
    pub fn class_of(&self, g: usize) -> usize {
        let classes = self.conjugacy_classes();
        classes
            .iter()
            .position(|c| c.binary_search(&g).is_ok())
            .expect("classes cover the group")
    }

    /// Normalizer `N_G(M) = { g : g M g^-1 = M }` of an element set.
    pub fn normalizer(&self, m: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        for &x in m {
            member[x] = true;
        }
        let mut out = Vec::new();
        'g: for g in self.elements() {
            let ginv = self.inverse(g);
            for &x in m {
                if !member[self.mul(self.mul(g, x), ginv)] {
                    continue 'g;
                }
            }
            out.push(g);
        }
        out
    }

    /// `(n_idx, h_idx)` decomposition for semidirect groups.
    pub fn semidirect_parts(&self, g: usize) -> Option<(usize, usize)> {
        match &self.kind {
            GroupKind::Semidirect { action } => {
                let d = action.acting.order();
                Some((g / d, g % d))
            }
            _ => None,
        }
    }

    /// Embedding of the normal factor: `n` as the pair `(n, e)`.
    pub fn embed_normal(&self, n_idx: usize) -> Option<usize> {
        match &self.kind {
            GroupKind::Semidirect { action } => Some(n_idx * action.acting.order()),
            _ => None,
        }
    }

    /// Embedding of the acting factor: `h` as the pair `(e, h)`.
    pub fn embed_acting(&self, h_idx: usize) -> Option<usize> {
        match &self.kind {
            GroupKind::Semidirect { .. } => Some(h_idx),
            _ => None,
        }
    }

    pub fn semidirect_action(&self) -> Option<&Arc<SemidirectAction>> {
        match &self.kind {
            GroupKind::Semidirect { action } => Some(action),
            _ => None,
        }
    }
}

/// A verified automorphism of a group, stored as its full image map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    group: Group,
    image: Vec<u32>,
}

impl Automorphism {
    /// Validates that `image` is a bijective homomorphism.
    pub fn new(group: Group, image: Vec<u32>) -> Result<Self> {
        let n = group.order();
        if image.len() != n {
            return Err(Error::InvalidAction(format!(
                "image map has {} entries for a group of order {n}",
                image.len()
            )));
        }
        let mut seen = vec![false; n];
        for &y in &image {
            let y = y as usize;
            if y >= n || seen[y] {
                return Err(Error::InvalidAction(
                    "image map is not a bijection".into(),
                ));
            }
            seen[y] = true;
        }
        for a in 0..n {
            for b in 0..n {
                let lhs = image[group.mul(a, b)] as usize;
                let rhs = group.mul(image[a] as usize, image[b] as usize);
                if lhs != rhs {
                    return Err(Error::InvalidAction(format!(
                        "image is not multiplicative on the pair ({}, {})",
                        group.display_element(a),
                        group.display_element(b)
                    )));
                }
            }
        }
        Ok(Automorphism { group, image })
    }

    pub fn identity(group: Group) -> Self {
        let image = (0..group.order() as u32).collect();
        Automorphism { group, image }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn apply(&self, g: usize) -> usize {
        self.image[g] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &y)| i == y as usize)
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let image = (0..self.group.order())
            .map(|g| self.image[other.image[g] as usize])
            .collect();
        Automorphism { group: self.group.clone(), image }
    }
}

/// The automorphism of `D_n` sending `x -> x^s` and `a -> x^s' a`.
/// Requires `gcd(s, n) = 1`.
pub fn dihedral_automorphism(n: usize, s: usize, s_shift: usize) -> Result<Automorphism> {
    if n == 0 || s >= n || s_shift >= n {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= s, s' < n; got s={s}, s'={s_shift}, n={n}"
        )));
    }
    if num::integer::gcd(s, n) != 1 {
        return Err(Error::InvalidParameter(format!(
            "gcd(s, n) must be 1; gcd({s}, {n}) != 1"
        )));
    }
    let group = make_dihedral(n)?;
    let mut image = vec![0u32; 2 * n];
    for j in 0..2usize {
        for i in 0..n {
            // x^i a^j -> x^(s i + j s') a^j
            let e = (s * i + j * s_shift) % n;
            image[j * n + i] = (j * n + e) as u32;
        }
    }
    // the formula is a homomorphism by construction; keep the full check for
    // the small n this is used at
    Automorphism::new(group, image)
}

/// A homomorphism `theta : H -> Aut(N)`, stored as one full image map per
/// element of `H`. Validated eagerly on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectAction {
    normal: Group,
    acting: Group,
    theta: Vec<Vec<u32>>,
}

impl SemidirectAction {
    pub fn new(normal: Group, acting: Group, theta: Vec<Vec<u32>>) -> Result<Self> {
        let m = normal.order();
        let d = acting.order();
        if theta.len() != d {
            return Err(Error::InvalidAction(format!(
                "theta has {} maps for |H| = {d}",
                theta.len()
            )));
        }
        for (h, map) in theta.iter().enumerate() {
            if map.len() != m {
                return Err(Error::InvalidAction(format!(
                    "theta({}) has {} entries for |N| = {m}",
                    acting.display_element(h),
                    map.len()
                )));
            }
            Automorphism::new(normal.clone(), map.clone()).map_err(|e| {
                Error::InvalidAction(format!(
                    "theta({}) is not an automorphism: {e}",
                    acting.display_element(h)
                ))
            })?;
        }
        for (i, y) in theta[0].iter().enumerate() {
            if *y as usize != i {
                return Err(Error::InvalidAction(
                    "theta(identity) is not the identity automorphism".into(),
                ));
            }
        }
        for h1 in 0..d {
            for h2 in 0..d {
                let h12 = acting.mul(h1, h2);
                for n in 0..m {
                    let lhs = theta[h12][n];
                    let rhs = theta[h1][theta[h2][n] as usize];
                    if lhs != rhs {
                        return Err(Error::InvalidAction(format!(
                            "theta is not a homomorphism on the pair ({}, {})",
                            acting.display_element(h1),
                            acting.display_element(h2)
                        )));
                    }
                }
            }
        }
        Ok(SemidirectAction { normal, acting, theta })
    }

    /// Trivial action: the degenerate semidirect product is the direct
    /// product of `normal` and `acting`.
    pub fn trivial(normal: Group, acting: Group) -> Self {
        let map: Vec<u32> = (0..normal.order() as u32).collect();
        let theta = vec![map; acting.order()];
        SemidirectAction { normal, acting, theta }
    }

    /// Action of a cyclic group of order `q` through powers of one
    /// automorphism `beta` of `N`; requires `beta^q = id`.
    pub fn from_cyclic_power(normal: Group, acting: Group, beta: &Automorphism) -> Result<Self> {
        let q = acting.order();
        if !matches!(acting.kind(), GroupKind::Cyclic { .. }) {
            return Err(Error::InvalidAction(
                "power action needs a cyclic acting group".into(),
            ));
        }
        if beta.group() != &normal {
            return Err(Error::IncompatibleOperands(
                "automorphism is not over the normal factor".into(),
            ));
        }
        let mut theta = Vec::with_capacity(q);
        let mut cur = Automorphism::identity(normal.clone());
        for _ in 0..q {
            theta.push(cur.image.clone());
            cur = beta.compose(&cur);
        }
        if !cur.is_identity() {
            return Err(Error::InvalidAction(format!(
                "automorphism order does not divide |H| = {q}"
            )));
        }
        Ok(SemidirectAction { normal, acting, theta })
    }

    /// Natural action of a residue subgroup of the units modulo `m` on the
    /// cyclic group of order `m`: the residue `s` sends `x^i` to `x^(s i)`.
    pub fn units_on_cyclic(modulus: u64, residues: &[u64]) -> Result<Self> {
        let normal = make_cyclic(modulus as usize)?;
        let acting = make_units_subgroup(modulus, residues)?;
        let labels = match acting.kind() {
            GroupKind::Table { labels, .. } => labels.clone(),
            _ => unreachable!(),
        };
        let theta = labels
            .iter()
            .map(|&s| {
                (0..modulus)
                    .map(|i| ((s * i) % modulus) as u32)
                    .collect::<Vec<u32>>()
            })
            .collect();
        SemidirectAction::new(normal, acting, theta)
    }

    pub fn normal(&self) -> &Group {
        &self.normal
    }

    pub fn acting(&self) -> &Group {
        &self.acting
    }

    /// `theta(h)(n)`.
    pub fn apply(&self, h: usize, n: usize) -> usize {
        self.theta[h][n] as usize
    }
}

/// Orbits of `N` under the action `h . n = theta(h)(n)`. The trivial orbit
/// `{e}` is listed first; the rest are sorted by (size, least element).
pub fn h_orbits(action: &SemidirectAction) -> Vec<Vec<usize>> {
    let m = action.normal.order();
    let d = action.acting.order();
    let mut seen = vec![false; m];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for n in 0..m {
        if seen[n] {
            continue;
        }
        let mut orbit = Vec::new();
        for h in 0..d {
            let y = action.apply(h, n);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits.sort_by_key(|o| (o[0] != 0, o.len(), o[0]));
    orbits
}

/// True iff every nontrivial H-orbit of `N` has exactly `q` elements.
pub fn q_orbit_condition(action: &SemidirectAction, q: usize) -> bool {
    h_orbits(action).iter().skip(1).all(|o| o.len() == q)
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    /// theta(b): a1 -> a1^2, a2 -> a2^2 on C3 x C5, with H = C4.
    pub(crate) fn order60_action() -> SemidirectAction {
        let n = make_product(&[3, 5]).unwrap();
        let c4 = make_cyclic_named(4, "b").unwrap();
        let image: Vec<u32> = (0..15)
            .map(|g| {
                let (i, j) = (g / 5, g % 5);
                (((2 * i) % 3) * 5 + (2 * j) % 5) as u32
            })
            .collect();
        let beta = Automorphism::new(n.clone(), image).unwrap();
        SemidirectAction::from_cyclic_power(n, c4, &beta).unwrap()
    }

    /// C_n x| C_2 with the acting generator inverting rotations.
    pub(crate) fn inversion_action(n: usize) -> SemidirectAction {
        let cn = make_cyclic(n).unwrap();
        let c2 = make_cyclic_named(2, "a").unwrap();
        let image: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
        let beta = Automorphism::new(cn.clone(), image).unwrap();
        SemidirectAction::from_cyclic_power(cn, c2, &beta).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testutil::{inversion_action, order60_action};
    use super::*;

    fn exhaustive_axioms(g: &FiniteGroup) {
        let n = g.order();
        assert!(n <= 256, "exhaustive check reserved for order <= 256");
        for a in 0..n {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(g.inverse(a), a), 0);
            assert_eq!(g.mul(a, g.inverse(a)), 0);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn cyclic_basics() {
        assert!(make_cyclic(0).is_err());
        let c1 = make_cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.identity(), 0);

        let c6 = make_cyclic(6).unwrap();
        assert_eq!(c6.mul(2, 5), 1); // x^2 * x^5 = x^1
        assert_eq!(c6.inverse(4), 2); // (x^4)^-1 = x^2
    }

    #[test]
    fn dihedral_relations() {
        assert!(make_dihedral(0).is_err());
        let d3 = make_dihedral(3).unwrap();
        let x = 1;
        let a = 3;
        // a * x = x^2 * a
        assert_eq!(d3.mul(a, x), d3.mul(d3.pow(x, 2), a));
        // reflections are involutions: (x a)^2 = e
        let xa = d3.mul(x, a);
        assert_eq!(d3.mul(xa, xa), 0);

        let d4 = make_dihedral(4).unwrap();
        // x^2 * (x^3 a) = x^1 a
        let x3a = d4.mul(d4.pow(1, 3), 4);
        let expect = d4.mul(1, 4);
        assert_eq!(d4.mul(d4.pow(1, 2), x3a), expect);
    }

    #[test]
    fn axioms_small_orders() {
        for n in 1..=16 {
            exhaustive_axioms(&make_cyclic(n).unwrap());
        }
        for n in 1..=8 {
            exhaustive_axioms(&make_dihedral(n).unwrap());
        }
        exhaustive_axioms(&make_product(&[3, 5]).unwrap());
        exhaustive_axioms(&make_dihedral(128).unwrap()); // order 256
    }

    #[test]
    fn semidirect_matches_dihedral() {
        // C_n x| C_2 under inversion is D_n via (x^i, a^j) |-> x^i a^j
        for n in 1..=32 {
            let act = inversion_action(n);
            let g = make_semidirect(act);
            let d = make_dihedral(n).unwrap();
            let map = |pair: usize| -> usize {
                let (ni, hj) = g.semidirect_parts(pair).unwrap();
                hj * n + ni
            };
            for a in 0..2 * n {
                for b in 0..2 * n {
                    assert_eq!(map(g.mul(a, b)), d.mul(map(a), map(b)));
                }
            }
        }
    }

    #[test]
    fn semidirect_order60_relation() {
        let g = make_semidirect(order60_action());
        assert_eq!(g.order(), 60);
        let b = g.embed_acting(1).unwrap();
        let a1 = g.embed_normal(5).unwrap(); // a1 = (1,0) -> index 5 in C3 x C5
        let a1sq = g.embed_normal(10).unwrap();
        // b * a1 = a1^2 * b
        assert_eq!(g.mul(b, a1), g.mul(a1sq, b));
    }

    #[test]
    fn invalid_action_rejected() {
        // squaring is not an automorphism of C4
        let c4 = make_cyclic(4).unwrap();
        let c2 = make_cyclic_named(2, "b").unwrap();
        let image: Vec<u32> = (0..4).map(|i| ((2 * i) % 4) as u32).collect();
        let err = Automorphism::new(c4.clone(), image.clone()).unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
        let theta = vec![(0..4u32).collect::<Vec<u32>>(), image];
        let err = SemidirectAction::new(c4, c2, theta).unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
    }

    #[test]
    fn conjugacy_classes_examples() {
        let c6 = make_cyclic(6).unwrap();
        assert_eq!(c6.conjugacy_classes().len(), 6);

        let d3 = make_dihedral(3).unwrap();
        let classes = d3.conjugacy_classes();
        assert_eq!(*classes, vec![vec![0], vec![1, 2], vec![3, 4, 5]]);

        let d4 = make_dihedral(4).unwrap();
        let classes = d4.conjugacy_classes();
        // {e}, {x^2}, {x, x^3}, {a, x^2 a}, {x a, x^3 a}
        assert_eq!(
            *classes,
            vec![vec![0], vec![2], vec![1, 3], vec![4, 6], vec![5, 7]]
        );
    }

    #[test]
    fn class_structure_invariants() {
        for g in [
            make_dihedral(5).unwrap(),
            make_dihedral(6).unwrap(),
            make_semidirect(order60_action()),
        ] {
            let classes = g.conjugacy_classes();
            let total: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(total, g.order());
            // closure under conjugation by generators
            for class in classes.iter() {
                for &h in &g.generators() {
                    for &c in class {
                        let conj = g.mul(g.mul(h, c), g.inverse(h));
                        assert!(class.binary_search(&conj).is_ok());
                    }
                }
                // inverse of a class is a class
                let mut invv: Vec<usize> = class.iter().map(|&c| g.inverse(c)).collect();
                invv.sort_unstable();
                assert!(classes.iter().any(|d| *d == invv));
            }
        }
    }

    #[test]
    fn normalizer_examples() {
        let d6 = make_dihedral(6).unwrap();
        let all: Vec<usize> = d6.elements().collect();
        assert_eq!(d6.normalizer(&all), all);
        // x^3 is central in D6
        assert_eq!(d6.normalizer(&[3]), all);

        let d4 = make_dihedral(4).unwrap();
        assert_eq!(d4.normalizer(&[1]), vec![0, 1, 2, 3]);
    }

    #[test]
    fn normalizer_is_subgroup() {
        let d5 = make_dihedral(5).unwrap();
        for m in [vec![1], vec![1, 4], vec![5], vec![1, 5, 7]] {
            let nz = d5.normalizer(&m);
            for &a in &nz {
                assert!(nz.binary_search(&d5.inverse(a)).is_ok());
                for &b in &nz {
                    assert!(nz.binary_search(&d5.mul(a, b)).is_ok());
                }
            }
        }
    }

    #[test]
    fn orbits_order60() {
        let act = order60_action();
        let orbits = h_orbits(&act);
        // indices in C3 x C5: a1 = 5, a2 = 1
        assert_eq!(
            orbits,
            vec![
                vec![0],
                vec![5, 10],          // {a1, a1^2}
                vec![1, 2, 3, 4],     // {a2, a2^2, a2^3, a2^4}
                vec![6, 9, 12, 13],   // {a1 a2, a1 a2^4, a1^2 a2^2, a1^2 a2^3}
                vec![7, 8, 11, 14],   // {a1 a2^2, a1 a2^3, a1^2 a2, a1^2 a2^4}
            ]
        );
        assert!(!q_orbit_condition(&act, 4));
    }

    #[test]
    fn orbits_trivial_and_squaring() {
        let triv = SemidirectAction::trivial(
            make_cyclic(5).unwrap(),
            make_cyclic_named(3, "b").unwrap(),
        );
        assert!(h_orbits(&triv).iter().all(|o| o.len() == 1));

        // C5 x| C4 by squaring: single nontrivial orbit of length 4
        let c5 = make_cyclic(5).unwrap();
        let c4 = make_cyclic_named(4, "b").unwrap();
        let image: Vec<u32> = (0..5).map(|i| ((2 * i) % 5) as u32).collect();
        let beta = Automorphism::new(c5.clone(), image).unwrap();
        let act = SemidirectAction::from_cyclic_power(c5, c4, &beta).unwrap();
        assert_eq!(h_orbits(&act), vec![vec![0], vec![1, 2, 3, 4]]);
        assert!(q_orbit_condition(&act, 4));
        assert!(!q_orbit_condition(&act, 2));
    }

    #[test]
    fn h_orbit_partition_closure() {
        let act = order60_action();
        let orbits = h_orbits(&act);
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        assert_eq!(total, act.normal().order());
        for o in &orbits {
            for h in 0..act.acting().order() {
                for &n in o {
                    assert!(o.binary_search(&act.apply(h, n)).is_ok());
                }
            }
        }
    }

    #[test]
    fn dihedral_automorphisms() {
        let id = dihedral_automorphism(5, 1, 0).unwrap();
        assert!(id.is_identity());

        let g = dihedral_automorphism(3, 2, 0).unwrap();
        let d3 = make_dihedral(3).unwrap();
        assert_eq!(g.apply(1), 2); // x -> x^2
        assert_eq!(g.apply(d3.mul(1, 3)), d3.mul(2, 3)); // x a -> x^2 a

        assert!(matches!(
            dihedral_automorphism(4, 2, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn units_subgroup_table() {
        // squares mod 7: {1, 2, 4}
        let g = make_units_subgroup(7, &[1, 2, 4]).unwrap();
        exhaustive_axioms(&g);
        assert_eq!(g.order(), 3);
        assert!(make_units_subgroup(7, &[1, 2]).is_err()); // not closed
    }
}
