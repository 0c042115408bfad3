//! Structural obstructions that rule out a genuine DSRG before any
//! verification: central connection sets (their spectra are forced real on a
//! directed graph), and decompositions into an inverse-closed part plus an
//! antisymmetric part inside its normalizer.

use serde::Serialize;

use crate::cayley::CayleySpec;
use crate::group::Group;
use crate::ring::sum_of;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionKind {
    Central,
    NormalizerDecomposition,
    AbelianGroup,
}

/// Witness data: the class decomposition for central obstructions, or the
/// `(M, T)` split for normalizer decompositions. Element tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ObstructionWitness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetric_part: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antisymmetric_part: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub witness: ObstructionWitness,
    pub explanation: String,
}

fn tokens(group: &Group, set: &[usize]) -> Vec<String> {
    set.iter().map(|&g| group.display_element(g)).collect()
}

/// Obstruction when the connection-set sum is central (equivalently, S is a
/// union of conjugacy classes): such a Cayley graph is never a genuine DSRG.
/// Empty sets report no obstruction.
pub fn central_obstruction(spec: &CayleySpec) -> Result<Option<Obstruction>> {
    if !spec.connection().is_plain_set() {
        return Err(Error::UnsupportedMultigraph(
            "obstructions are defined for plain connection sets".into(),
        ));
    }
    let support = spec.connection().support();
    if support.is_empty() {
        return Ok(None);
    }
    let sbar = sum_of(spec.connection());
    if !sbar.is_central() {
        return Ok(None);
    }
    let group = spec.group();
    let classes: Vec<Vec<String>> = group
        .conjugacy_classes()
        .iter()
        .filter(|c| spec.connection().multiplicity(c[0]) > 0)
        .map(|c| tokens(group, c))
        .collect();
    let (kind, explanation) = if group.is_abelian() {
        (
            ObstructionKind::AbelianGroup,
            "the group is abelian, so every connection set is a union of \
             conjugacy classes and its eigenvalues are forced to behave like \
             an undirected graph's"
                .to_string(),
        )
    } else {
        (
            ObstructionKind::Central,
            "the connection set is a union of conjugacy classes; its Cayley \
             graph has real spectrum on every character block, which a \
             genuine directed strongly regular graph cannot satisfy"
                .to_string(),
        )
    };
    Ok(Some(Obstruction {
        kind,
        witness: ObstructionWitness { classes: Some(classes), ..Default::default() },
        explanation,
    }))
}

/// Obstruction for `S = C_max + T` where `C_max` is the union of all
/// conjugacy classes fully contained in `S` and the remainder `T` is
/// antisymmetric (this covers the pure-central case `T` empty).
pub fn normalizer_obstruction(spec: &CayleySpec) -> Result<Option<Obstruction>> {
    if !spec.connection().is_plain_set() {
        return Err(Error::UnsupportedMultigraph(
            "obstructions are defined for plain connection sets".into(),
        ));
    }
    let support = spec.connection().support();
    if support.is_empty() {
        return Ok(None);
    }
    let group = spec.group();
    let mut central: Vec<usize> = Vec::new();
    for class in group.conjugacy_classes().iter().skip(1) {
        if class
            .iter()
            .all(|&g| spec.connection().multiplicity(g) > 0)
        {
            central.extend_from_slice(class);
        }
    }
    central.sort_unstable();
    let t_part: Vec<usize> = support
        .iter()
        .copied()
        .filter(|g| central.binary_search(g).is_err())
        .collect();
    let antisymmetric = t_part
        .iter()
        .all(|&g| t_part.binary_search(&group.inverse(g)).is_err());
    if !antisymmetric {
        return Ok(None);
    }
    Ok(Some(Obstruction {
        kind: ObstructionKind::NormalizerDecomposition,
        witness: ObstructionWitness {
            symmetric_part: Some(tokens(group, &central)),
            antisymmetric_part: Some(tokens(group, &t_part)),
            ..Default::default()
        },
        explanation: "the connection set splits into a union of conjugacy \
                      classes plus an antisymmetric remainder; the two parts \
                      commute as matrices, so a non-real eigenvalue of the \
                      antisymmetric part survives into the whole graph"
            .to_string(),
    }))
}

/// Outcome of checking a user-supplied `(M, T)` witness against the general
/// normalizer hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum ExplicitCheck {
    Obstructed { obstruction: Obstruction, set: Vec<String> },
    Rejected { reason: String },
}

/// Verify the hypotheses `M = M^(-1)`, `T` antisymmetric, and
/// `T` inside `N_G(M) \ (M + {e})`; on success the set `S = M + T` is
/// obstructed.
pub fn explicit_normalizer_check(group: &Group, m: &[usize], t: &[usize]) -> ExplicitCheck {
    let mut m_sorted = m.to_vec();
    m_sorted.sort_unstable();
    m_sorted.dedup();
    let mut t_sorted = t.to_vec();
    t_sorted.sort_unstable();
    t_sorted.dedup();
    if m_sorted.binary_search(&group.identity()).is_ok() {
        return ExplicitCheck::Rejected { reason: "M contains the identity".into() };
    }
    for &g in &m_sorted {
        if m_sorted.binary_search(&group.inverse(g)).is_err() {
            return ExplicitCheck::Rejected {
                reason: format!(
                    "M is not inverse-closed: {} lacks its inverse",
                    group.display_element(g)
                ),
            };
        }
    }
    for &g in &t_sorted {
        if t_sorted.binary_search(&group.inverse(g)).is_ok() {
            return ExplicitCheck::Rejected {
                reason: format!(
                    "T is not antisymmetric: {} and its inverse both occur",
                    group.display_element(g)
                ),
            };
        }
    }
    let normalizer = group.normalizer(&m_sorted);
    for &g in &t_sorted {
        if normalizer.binary_search(&g).is_err() {
            return ExplicitCheck::Rejected {
                reason: format!(
                    "T is not inside the normalizer of M: {} fails",
                    group.display_element(g)
                ),
            };
        }
        if m_sorted.binary_search(&g).is_ok() || g == group.identity() {
            return ExplicitCheck::Rejected {
                reason: format!(
                    "T must avoid M and the identity: {} fails",
                    group.display_element(g)
                ),
            };
        }
    }
    let mut set = m_sorted.clone();
    set.extend_from_slice(&t_sorted);
    set.sort_unstable();
    ExplicitCheck::Obstructed {
        obstruction: Obstruction {
            kind: ObstructionKind::NormalizerDecomposition,
            witness: ObstructionWitness {
                symmetric_part: Some(tokens(group, &m_sorted)),
                antisymmetric_part: Some(tokens(group, &t_sorted)),
                ..Default::default()
            },
            explanation: "M is inverse-closed and T is an antisymmetric \
                          subset of its normalizer, so the adjacency matrices \
                          of M and T commute and the graph keeps a non-real \
                          eigenvalue unless T is empty, in which case it is \
                          undirected"
                .to_string(),
        },
        set: tokens(group, &set),
    }
}
