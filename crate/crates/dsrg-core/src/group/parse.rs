//! Element token grammar: canonical display and whitespace-insensitive
//! parsing.
//!
//! Canonical forms: `e` for the identity; `x^3` in cyclic groups; `x^3`,
//! `x^3*a`, `a` in dihedral groups; `a1^2*a2^4` in direct products;
//! `(x^2|b^1)` pairs in semidirect products; `g<label>` in table-backed
//! groups. Display always writes explicit exponents (`x^1`, `b^1`) and omits
//! trivial factors; parsing also accepts bare generators (`x`, `x*a`) and
//! negative exponents.

use super::{FiniteGroup, GroupKind};
use crate::{Error, Result};

impl FiniteGroup {
    /// Canonical token for an element.
    pub fn display_element(&self, g: usize) -> String {
        assert!(g < self.order(), "element index out of range");
        match &self.kind {
            GroupKind::Cyclic { gen, .. } => {
                if g == 0 {
                    "e".into()
                } else {
                    format!("{gen}^{g}")
                }
            }
            GroupKind::Dihedral { n } => {
                let (j, i) = (g / n, g % n);
                match (i, j) {
                    (0, 0) => "e".into(),
                    (0, 1) => "a".into(),
                    (_, 0) => format!("x^{i}"),
                    (_, _) => format!("x^{i}*a"),
                }
            }
            GroupKind::Product { orders } => {
                let mut parts = Vec::new();
                let mut r = g;
                let mut radix = self.order();
                for (k, &m) in orders.iter().enumerate() {
                    radix /= m;
                    let c = r / radix;
                    r %= radix;
                    if c > 0 {
                        parts.push(format!("a{}^{}", k + 1, c));
                    }
                }
                if parts.is_empty() {
                    "e".into()
                } else {
                    parts.join("*")
                }
            }
            GroupKind::Semidirect { action } => {
                let d = action.acting().order();
                let (n, h) = (g / d, g % d);
                format!(
                    "({}|{})",
                    action.normal().display_element(n),
                    action.acting().display_element(h)
                )
            }
            GroupKind::Table { labels, .. } => format!("g{}", labels[g]),
        }
    }

    /// Parse a single element token. Inverse of `display_element` on
    /// canonical forms; accepts whitespace, omitted `^1`, and negative
    /// exponents.
    pub fn parse_element(&self, token: &str) -> Result<usize> {
        let s: String = token.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty element token".into()));
        }
        if s == "e" {
            return Ok(self.identity());
        }
        if let GroupKind::Semidirect { action } = &self.kind {
            let inner = s
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| {
                    Error::Parse(format!("semidirect element must be a (n|h) pair: {token}"))
                })?;
            let (ntok, htok) = inner.split_once('|').ok_or_else(|| {
                Error::Parse(format!("missing | separator in pair token: {token}"))
            })?;
            let n = action.normal().parse_element(ntok)?;
            let h = action.acting().parse_element(htok)?;
            return Ok(n * action.acting().order() + h);
        }
        if let GroupKind::Table { labels, .. } = &self.kind {
            let label: u64 = s
                .strip_prefix('g')
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("expected g<label> token: {token}")))?;
            return labels
                .binary_search(&label)
                .map_err(|_| Error::Parse(format!("no element with label {label}")));
        }
        // product of powered generator factors
        let mut acc = self.identity();
        for factor in s.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in token: {token}")));
            }
            let (name, exp) = match factor.split_once('^') {
                Some((name, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in factor: {factor}")))?;
                    (name, exp)
                }
                None => (factor, 1),
            };
            let gen = self.generator_by_name(name).ok_or_else(|| {
                Error::Parse(format!("unknown generator `{name}` in token: {token}"))
            })?;
            acc = self.mul(acc, self.pow(gen, exp));
        }
        Ok(acc)
    }

    fn generator_by_name(&self, name: &str) -> Option<usize> {
        match &self.kind {
            GroupKind::Cyclic { n, gen } => {
                if name == gen || (gen == "x" && name == "a") {
                    // cyclic groups also accept `a` as an alias so that
                    // prose like `b: a -> a^2` parses against C_n
                    if *n > 1 {
                        Some(1)
                    } else {
                        Some(0)
                    }
                } else if name == "e" {
                    Some(0)
                } else {
                    None
                }
            }
            GroupKind::Dihedral { n } => match name {
                "x" => Some(1 % *n),
                "a" => Some(*n),
                "e" => Some(0),
                _ => None,
            },
            GroupKind::Product { orders } => {
                let idx: usize = name.strip_prefix('a').and_then(|t| t.parse().ok())?;
                if idx == 0 || idx > orders.len() {
                    return None;
                }
                let radix: usize = orders[idx..].iter().product();
                Some(radix)
            }
            _ => None,
        }
    }

    /// Parse a set/multiset literal `{tok, tok*3, ...}` over this group.
    /// A trailing `*<integer>` on an item is a multiplicity; `{}` is empty.
    /// Returns element/multiplicity pairs in order of first appearance
    /// (repeated elements accumulate).
    pub fn parse_multiset_literal(&self, literal: &str) -> Result<Vec<(usize, u32)>> {
        let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("set literal must be braced: {literal}")))?;
        let mut mult = vec![0u32; self.order()];
        let mut order_seen: Vec<usize> = Vec::new();
        if !inner.is_empty() {
            for item in inner.split(',') {
                let (tok, count) = match item.rsplit_once('*') {
                    Some((head, tail)) => match tail.parse::<u32>() {
                        Ok(c) => (head, c),
                        Err(_) => (item, 1),
                    },
                    None => (item, 1),
                };
                if count == 0 {
                    return Err(Error::Parse(format!("zero multiplicity in item: {item}")));
                }
                let g = self.parse_element(tok)?;
                if mult[g] == 0 {
                    order_seen.push(g);
                }
                mult[g] += count;
            }
        }
        Ok(order_seen.into_iter().map(|g| (g, mult[g])).collect())
    }

    /// Render a multiset as a canonical literal, elements in index order,
    /// with `*k` suffixes for multiplicities above 1.
    pub fn multiset_literal(&self, mult: &[u32]) -> String {
        let mut parts = Vec::new();
        for (g, &c) in mult.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(self.display_element(g)),
                _ => parts.push(format!("{}*{c}", self.display_element(g))),
            }
        }
        format!("{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use crate::group::*;

    #[test]
    fn display_canonical_forms() {
        let c6 = make_cyclic(6).unwrap();
        assert_eq!(c6.display_element(0), "e");
        assert_eq!(c6.display_element(1), "x^1");
        assert_eq!(c6.display_element(3), "x^3");

        let d4 = make_dihedral(4).unwrap();
        assert_eq!(d4.display_element(0), "e");
        assert_eq!(d4.display_element(3), "x^3");
        assert_eq!(d4.display_element(4), "a");
        assert_eq!(d4.display_element(7), "x^3*a");

        let p = make_product(&[3, 5]).unwrap();
        assert_eq!(p.display_element(0), "e");
        assert_eq!(p.display_element(14), "a1^2*a2^4");
        assert_eq!(p.display_element(3), "a2^3");

        let g = make_semidirect(SemidirectAction::trivial(
            make_cyclic(3).unwrap(),
            make_cyclic_named(2, "b").unwrap(),
        ));
        assert_eq!(g.display_element(0), "(e|e)");
        assert_eq!(g.display_element(5), "(x^2|b^1)");
    }

    #[test]
    fn parse_round_trip_all_kinds() {
        let groups = vec![
            make_cyclic(7).unwrap(),
            make_dihedral(5).unwrap(),
            make_product(&[2, 3, 4]).unwrap(),
            make_semidirect(SemidirectAction::trivial(
                make_product(&[3, 5]).unwrap(),
                make_cyclic_named(4, "b").unwrap(),
            )),
            make_units_subgroup(7, &[1, 2, 4]).unwrap(),
        ];
        for g in groups {
            for el in g.elements() {
                let tok = g.display_element(el);
                assert_eq!(g.parse_element(&tok).unwrap(), el, "token {tok}");
            }
        }
    }

    #[test]
    fn parse_accepts_loose_forms() {
        let d3 = make_dihedral(3).unwrap();
        assert_eq!(d3.parse_element("x").unwrap(), 1);
        assert_eq!(d3.parse_element(" x * a ").unwrap(), 4);
        assert_eq!(d3.parse_element("x^-1").unwrap(), 2);
        assert_eq!(d3.parse_element("a*x").unwrap(), d3.mul(3, 1));
        assert!(d3.parse_element("y^2").is_err());
    }

    #[test]
    fn multiset_literals() {
        let c4 = make_cyclic(4).unwrap();
        let items = c4.parse_multiset_literal("{x^2*2}").unwrap();
        assert_eq!(items, vec![(2, 2)]);
        let items = c4.parse_multiset_literal("{}").unwrap();
        assert!(items.is_empty());

        let d3 = make_dihedral(3).unwrap();
        let items = d3.parse_multiset_literal("{x, x*a}").unwrap();
        assert_eq!(items, vec![(1, 1), (4, 1)]);
        assert_eq!(
            d3.multiset_literal(&[0, 1, 0, 0, 2, 0]),
            "{x^1, x^1*a*2}"
        );
    }
}
