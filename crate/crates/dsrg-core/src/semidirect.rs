//! Semidirect-product DSRG constructions: the q-orbit construction, its
//! generalization through the conjugation-averaged connection multiset, the
//! two orbit-subset corollaries, and the necessary condition the averaged
//! multiset must satisfy in the normal factor.

use serde::Serialize;

use crate::cayley::{is_dsrg_groupring, CayleySpec, DsrgCertificate};
use crate::group::{h_orbits, make_semidirect, q_orbit_condition, GroupKind, SemidirectAction};
use crate::params::{classify, spectrum_of, DsrgParams};
use crate::ring::{flat, sum_of, Multiset, RingElement};
use crate::{Error, Result};

/// A recipe: an action, a subset of the normal factor, and the closed-form
/// parameters the realized Cayley graph must certify with.
#[derive(Debug, Clone)]
pub struct SemidirectRecipe {
    pub action: SemidirectAction,
    pub n1: Vec<usize>,
    pub expected: DsrgParams,
    pub provenance: String,
}

impl SemidirectRecipe {
    /// Realize the connection set `N1 x H` over the semidirect group.
    pub fn cayley_spec(&self) -> Result<CayleySpec> {
        let g = make_semidirect(self.action.clone());
        let d = self.action.acting().order();
        let mut set = Vec::with_capacity(self.n1.len() * d);
        for &n in &self.n1 {
            for h in 0..d {
                set.push(g.embed_normal(n).unwrap() + h);
            }
        }
        CayleySpec::from_set(g, &set)
    }

    /// Certify through the group ring and insist on the expected parameters.
    pub fn certify(&self) -> Result<DsrgCertificate> {
        let cert = is_dsrg_groupring(&self.cayley_spec()?)?;
        if cert.params != Some(self.expected) {
            return Err(Error::TheoremViolation(format!(
                "recipe {} expected {} but certified {:?}",
                self.provenance, self.expected, cert.params
            )));
        }
        Ok(cert)
    }
}

/// The q-orbit construction: `H` cyclic of order `q`, every nontrivial orbit
/// of size exactly `q`, and one representative per nontrivial orbit. The
/// realized graph has parameters `(mq, m-1, (m-1)/q, (m-1)/q - 1, (m-1)/q)`.
pub fn duval_iourinski(
    action: &SemidirectAction,
    q: usize,
    representatives: &[usize],
) -> Result<SemidirectRecipe> {
    if !matches!(action.acting().kind(), GroupKind::Cyclic { .. })
        || action.acting().order() != q
    {
        return Err(Error::Precondition(format!(
            "H must be cyclic of order q = {q}"
        )));
    }
    if !q_orbit_condition(action, q) {
        return Err(Error::Precondition(format!(
            "the action does not satisfy the {q}-orbit condition"
        )));
    }
    let orbits = h_orbits(action);
    let nontrivial = &orbits[1..];
    if representatives.len() != nontrivial.len() {
        return Err(Error::InvalidParameter(format!(
            "need exactly one representative per nontrivial orbit ({} orbits, {} given)",
            nontrivial.len(),
            representatives.len()
        )));
    }
    let mut hit = vec![false; nontrivial.len()];
    for &r in representatives {
        match nontrivial.iter().position(|o| o.binary_search(&r).is_ok()) {
            Some(i) if !hit[i] => hit[i] = true,
            Some(_) => {
                return Err(Error::InvalidParameter(
                    "two representatives in the same orbit".into(),
                ))
            }
            None => {
                return Err(Error::InvalidParameter(format!(
                    "representative index {r} is not in a nontrivial orbit"
                )))
            }
        }
    }
    let m = action.normal().order() as i64;
    let q_i = q as i64;
    let expected = DsrgParams::new(
        m * q_i,
        m - 1,
        (m - 1) / q_i,
        (m - 1) / q_i - 1,
        (m - 1) / q_i,
    );
    Ok(SemidirectRecipe {
        action: action.clone(),
        n1: representatives.to_vec(),
        expected,
        provenance: format!("q-orbit construction, q = {q}"),
    })
}

/// Outcome of the general construction: either a recipe or an explanation of
/// why the averaged multiset fails the required shape.
#[derive(Debug, Clone)]
pub enum GeneralOutcome {
    Recipe(SemidirectRecipe),
    Rejected(String),
}

/// General construction: if the averaged connection multiset satisfies
/// `N1-flat-bar = x1 N-bar + x2 e` with `d > x1 > 0 > x2`, the graph
/// `C(N x| H, N1 x H)` is a DSRG with parameters
/// `(md, x1 m + x2, x1 k / d, x2 + x1 k / d, x1 k / d)` where `k = x1 m +
/// x2`.
pub fn general_semidirect(action: &SemidirectAction, n1: &[usize]) -> Result<GeneralOutcome> {
    let f = flat(action, n1)?;
    let m = action.normal().order();
    let d = action.acting().order() as i64;
    // off-identity multiplicity must be one constant x1
    let x1 = if m > 1 { f.multiplicity(1) as i64 } else { 0 };
    for g in 1..m {
        if f.multiplicity(g) as i64 != x1 {
            return Ok(GeneralOutcome::Rejected(format!(
                "averaged multiset is not constant off the identity: {} vs {} at {}",
                x1,
                f.multiplicity(g),
                action.normal().display_element(g)
            )));
        }
    }
    let x2 = f.multiplicity(0) as i64 - x1;
    if !(x1 > 0) {
        return Ok(GeneralOutcome::Rejected(format!(
            "need x1 > 0; averaged multiset gives x1 = {x1}"
        )));
    }
    if x1 >= d {
        return Ok(GeneralOutcome::Rejected(format!(
            "need x1 < |H| = {d}; averaged multiset gives x1 = {x1}"
        )));
    }
    if x2 >= 0 {
        return Ok(GeneralOutcome::Rejected(format!(
            "need x2 < 0; averaged multiset gives x2 = {x2}"
        )));
    }
    let m_i = m as i64;
    let k = x1 * m_i + x2;
    debug_assert_eq!(k, d * n1.len() as i64);
    debug_assert_eq!((x1 * k) % d, 0);
    let mu = x1 * k / d;
    let expected = DsrgParams::new(m_i * d, k, mu, x2 + mu, mu);
    Ok(GeneralOutcome::Recipe(SemidirectRecipe {
        action: action.clone(),
        n1: n1.to_vec(),
        expected,
        provenance: format!("general semidirect construction, x1 = {x1}, x2 = {x2}"),
    }))
}

/// Orbit-subset corollary under the q-orbit condition: take the `r`
/// least elements of every nontrivial orbit (`r < q`); parameters
/// `(mq, (m-1)r, (m-1)r^2/q, (m-1)r^2/q - r, (m-1)r^2/q)`.
pub fn orbit_subset_corollary(
    action: &SemidirectAction,
    q: usize,
    r: usize,
) -> Result<SemidirectRecipe> {
    if r >= q {
        return Err(Error::InvalidParameter(format!("need r < q; got r = {r}, q = {q}")));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("need r >= 1".into()));
    }
    if !q_orbit_condition(action, q) || action.acting().order() != q {
        return Err(Error::Precondition(format!(
            "the action does not satisfy the {q}-orbit condition with |H| = {q}"
        )));
    }
    let orbits = h_orbits(action);
    let mut n1 = Vec::new();
    for orbit in &orbits[1..] {
        n1.extend_from_slice(&orbit[..r]);
    }
    let m = action.normal().order() as i64;
    let (q_i, r_i) = (q as i64, r as i64);
    let mu = (m - 1) * r_i * r_i / q_i;
    debug_assert_eq!((m - 1) * r_i * r_i % q_i, 0);
    let expected = DsrgParams::new(m * q_i, (m - 1) * r_i, mu, mu - r_i, mu);
    Ok(SemidirectRecipe {
        action: action.clone(),
        n1,
        expected,
        provenance: format!("orbit-subset corollary, q = {q}, r = {r}"),
    })
}

/// Divisible-orbits corollary: with nontrivial orbit sizes
/// `d_2 <= ... <= d_s` all divisible by `d_2 > 1`, take `r d_i / d_2`
/// least elements from orbit `i` for any `r < d_2`.
pub fn divisible_orbits_corollary(action: &SemidirectAction, r: usize) -> Result<SemidirectRecipe> {
    let orbits = h_orbits(action);
    if orbits.len() < 2 {
        return Err(Error::Precondition("no nontrivial orbits".into()));
    }
    let d2 = orbits[1].len();
    if d2 <= 1 {
        return Err(Error::Precondition(
            "smallest nontrivial orbit must have size > 1".into(),
        ));
    }
    for o in &orbits[1..] {
        if o.len() % d2 != 0 {
            return Err(Error::Precondition(format!(
                "orbit size {} is not divisible by the smallest nontrivial size {d2}",
                o.len()
            )));
        }
    }
    if r == 0 || r >= d2 {
        return Err(Error::InvalidParameter(format!(
            "need 0 < r < d2 = {d2}; got r = {r}"
        )));
    }
    let mut n1 = Vec::new();
    for o in &orbits[1..] {
        n1.extend_from_slice(&o[..r * o.len() / d2]);
    }
    let m = action.normal().order() as i64;
    let h = action.acting().order() as i64;
    let (r_i, d2_i) = (r as i64, d2 as i64);
    let x1 = r_i * h / d2_i;
    debug_assert_eq!(r_i * h % d2_i, 0, "|H| is divisible by every orbit size");
    let k = x1 * m - x1;
    let mu = x1 * x1 * (m - 1) / h;
    debug_assert_eq!(x1 * x1 * (m - 1) % h, 0);
    let expected = DsrgParams::new(m * h, k, mu, mu - x1, mu);
    Ok(SemidirectRecipe {
        action: action.clone(),
        n1,
        expected,
        provenance: format!("divisible-orbits corollary, r = {r}"),
    })
}

/// Which branch of the necessary condition the averaged multiset satisfies
/// for a claimed parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MultigraphCondition {
    /// `N1-flat-bar = ((k - sigma)/m) N-bar + sigma e`
    Case1,
    /// `N1-flat-bar^2 = sigma N1-flat-bar + (k (k - sigma)/m) N-bar`
    Case2,
    /// neither identity holds: the claimed DSRG cannot have this shape
    Violated,
}

/// Check the necessary condition on the multigraph carried by the averaged
/// multiset, against claimed genuine parameters.
pub fn multigraph_necessary_condition(
    action: &SemidirectAction,
    n1: &[usize],
    claimed: &DsrgParams,
) -> Result<MultigraphCondition> {
    if !classify(claimed).is_genuine() {
        return Err(Error::InvalidParams(format!(
            "claimed parameters {claimed} are not genuine"
        )));
    }
    let spectrum = spectrum_of(claimed)?;
    let sigma = spectrum.sigma;
    let k = claimed.k;
    let m = action.normal().order() as i64;
    let fbar = sum_of(&flat(action, n1)?);
    let nbar = RingElement::group_sum(action.normal().clone());
    let e = RingElement::unit(action.normal().clone());

    // case 1 needs (k - sigma)/m integral
    if (k - sigma) % m == 0 {
        let rhs = nbar.scale((k - sigma) / m).add(&e.scale(sigma))?;
        if fbar == rhs {
            return Ok(MultigraphCondition::Case1);
        }
    }
    if (k * (k - sigma)) % m == 0 {
        let sq = fbar.mul(&fbar)?;
        let rhs = fbar.scale(sigma).add(&nbar.scale(k * (k - sigma) / m))?;
        if sq == rhs {
            return Ok(MultigraphCondition::Case2);
        }
    }
    Ok(MultigraphCondition::Violated)
}

/// Sylow p-subgroup of the multiplicative units modulo `m`, by order
/// filtering: the residues whose multiplicative order is a power of `p`.
pub fn sylow_subgroup_of_units(modulus: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for r in 1..modulus {
        if num::integer::gcd(r, modulus) != 1 {
            continue;
        }
        let mut ord = 1u64;
        let mut acc = r;
        while acc != 1 {
            acc = (acc * r) % modulus;
            ord += 1;
        }
        // power of p?
        let mut o = ord;
        while o % p == 0 {
            o /= p;
        }
        if o == 1 {
            out.push(r);
        }
    }
    out
}

/// The averaged multiset as a multiset value (exposed for the CLI).
pub fn flat_multiset(action: &SemidirectAction, n1: &[usize]) -> Result<Multiset> {
    flat(action, n1)
}
