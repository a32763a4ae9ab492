//! Partial self-maps of `{0, …, n-1}` and the semigroups they generate.
//!
//! Products act right to left: `(st)(x) = s(t(x))`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::UnarySemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    ground: usize,
    map: Vec<Option<usize>>,
}

impl PartialMap {
    pub fn new(ground: usize, map: Vec<Option<usize>>) -> Result<Self> {
        if map.len() != ground {
            return Err(Error::SizeMismatch(format!(
                "partial map has {} entries on a ground set of {ground}",
                map.len()
            )));
        }
        if let Some(v) = map.iter().flatten().find(|&&v| v >= ground) {
            return Err(Error::SizeMismatch(format!("image point {v} outside ground set")));
        }
        Ok(PartialMap { ground, map })
    }

    pub fn identity(ground: usize) -> Self {
        PartialMap {
            ground,
            map: (0..ground).map(Some).collect(),
        }
    }

    pub fn empty(ground: usize) -> Self {
        PartialMap {
            ground,
            map: vec![None; ground],
        }
    }

    /// Identity restricted to the points where `keep` holds.
    pub fn identity_on(ground: usize, keep: impl Fn(usize) -> bool) -> Self {
        PartialMap {
            ground,
            map: (0..ground).map(|x| keep(x).then_some(x)).collect(),
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn entries(&self) -> &[Option<usize>] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map[x]
    }

    pub fn is_defined(&self, x: usize) -> bool {
        self.map[x].is_some()
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ground).filter(|&x| self.map[x].is_some())
    }

    pub fn in_image(&self, y: usize) -> bool {
        self.map.contains(&Some(y))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &PartialMap) -> PartialMap {
        PartialMap {
            ground: self.ground,
            map: other.map.iter().map(|y| y.and_then(|y| self.map[y])).collect(),
        }
    }

    /// Identity on the domain.
    pub fn dom_identity(&self) -> PartialMap {
        PartialMap::identity_on(self.ground, |x| self.is_defined(x))
    }

    /// Identity on the image.
    pub fn ran_identity(&self) -> PartialMap {
        PartialMap::identity_on(self.ground, |x| self.in_image(x))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.ground];
        self.map
            .iter()
            .flatten()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// Whether `self` is `other` restricted to a subset of its domain.
    pub fn is_restriction_of(&self, other: &PartialMap) -> bool {
        self.map.iter().zip(&other.map).all(|(a, b)| a.is_none() || a == b)
    }

    /// Compact form: one character per point, `-` where undefined.
    pub fn code(&self) -> String {
        self.map
            .iter()
            .map(|v| match v {
                None => '-'.to_string(),
                Some(y) => y.to_string(),
            })
            .collect::<Vec<_>>()
            .join(if self.ground > 10 { "," } else { "" })
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Closure {
    pub star: bool,
    pub plus: bool,
}

impl Closure {
    pub const STAR: Closure = Closure {
        star: true,
        plus: false,
    };
    pub const STAR_PLUS: Closure = Closure { star: true, plus: true };
}

/// Closes `generators` under composition and the requested unary operations.
/// Elements are numbered in order of discovery, generators first.
pub fn generate_in_pt(
    ground: usize,
    generators: &[PartialMap],
    close: Closure,
) -> Result<(UnarySemigroup, Vec<PartialMap>)> {
    if generators.is_empty() {
        return Err(Error::Invalid("no generators".into()));
    }
    if let Some(g) = generators.iter().find(|g| g.ground != ground) {
        return Err(Error::SizeMismatch(format!(
            "generator on {} points, expected {ground}",
            g.ground
        )));
    }
    let mut elems: Vec<PartialMap> = Vec::new();
    let mut index: HashMap<PartialMap, usize> = HashMap::new();
    let mut add = |m: PartialMap, elems: &mut Vec<PartialMap>| {
        if !index.contains_key(&m) {
            index.insert(m.clone(), elems.len());
            elems.push(m);
        }
    };
    for g in generators {
        add(g.clone(), &mut elems);
    }
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i].clone();
        if close.star {
            add(x.dom_identity(), &mut elems);
        }
        if close.plus {
            add(x.ran_identity(), &mut elems);
        }
        for j in 0..=i {
            let y = elems[j].clone();
            add(x.after(&y), &mut elems);
            add(y.after(&x), &mut elems);
        }
        i += 1;
    }
    let s = semigroup_of_maps(&elems, close)?;
    Ok((s, elems))
}

/// The semigroup on a list of maps closed under composition.
pub fn semigroup_of_maps(maps: &[PartialMap], close: Closure) -> Result<UnarySemigroup> {
    let index: HashMap<&PartialMap, usize> = maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let lookup = |m: &PartialMap| {
        index
            .get(m)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("maps not closed: {m} missing")))
    };
    let mul = maps
        .iter()
        .map(|a| maps.iter().map(|b| lookup(&a.after(b))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let star = if close.star {
        Some(
            maps.iter()
                .map(|m| lookup(&m.dom_identity()))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let plus = if close.plus {
        Some(
            maps.iter()
                .map(|m| lookup(&m.ran_identity()))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    UnarySemigroup::build_from_table(mul, star, plus)?.with_labels(maps.iter().map(PartialMap::code).collect())
}

/// Every partial map on `n` points, in lexicographic order of the image
/// vector with "undefined" first.
pub fn all_partial_maps(n: usize) -> Vec<PartialMap> {
    let total = (n + 1).pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut map = vec![None; n];
            for x in (0..n).rev() {
                let digit = code % (n + 1);
                code /= n + 1;
                map[x] = digit.checked_sub(1);
            }
            PartialMap { ground: n, map }
        })
        .collect()
}

/// `PT(n)` with `*` and `+`, together with its maps.
pub fn full_pt(n: usize) -> Result<(UnarySemigroup, Vec<PartialMap>)> {
    let maps = all_partial_maps(n);
    Ok((semigroup_of_maps(&maps, Closure::STAR_PLUS)?, maps))
}

/// `I(n)`: the injective partial maps.
pub fn symmetric_inverse(n: usize) -> Result<(UnarySemigroup, Vec<PartialMap>)> {
    let maps: Vec<_> = all_partial_maps(n)
        .into_iter()
        .filter(PartialMap::is_injective)
        .collect();
    Ok((semigroup_of_maps(&maps, Closure::STAR_PLUS)?, maps))
}

/// All binary relations on `n` points. Bit `out * n + inp` records that the
/// relation sends `inp` to `out`; products act right to left as for maps.
/// `ρ*` is the identity on the points with an output, `ρ⁺` on the points
/// that are outputs.
pub fn binary_relations(n: usize) -> Result<UnarySemigroup> {
    if n * n > 16 {
        return Err(Error::TooLarge {
            what: "relation monoid",
            count: 1 << (n * n),
            limit: 1 << 16,
        });
    }
    let total = 1usize << (n * n);
    let has = |r: usize, out: usize, inp: usize| r >> (out * n + inp) & 1 == 1;
    let compose = |r: usize, s: usize| {
        let mut out = 0;
        for z in 0..n {
            for x in 0..n {
                if (0..n).any(|y| has(r, z, y) && has(s, y, x)) {
                    out |= 1 << (z * n + x);
                }
            }
        }
        out
    };
    let diag = |keep: &dyn Fn(usize) -> bool| (0..n).filter(|&x| keep(x)).fold(0, |acc, x| acc | 1 << (x * n + x));
    let mul = (0..total)
        .map(|r| (0..total).map(|s| compose(r, s)).collect())
        .collect();
    let star = (0..total).map(|r| diag(&|x| (0..n).any(|y| has(r, y, x)))).collect();
    let plus = (0..total).map(|r| diag(&|x| (0..n).any(|y| has(r, x, y)))).collect();
    let labels = (0..total)
        .map(|r| {
            let pairs: Vec<String> = (0..n)
                .flat_map(|inp| (0..n).map(move |out| (inp, out)))
                .filter(|&(inp, out)| has(r, out, inp))
                .map(|(inp, out)| format!("{inp}>{out}"))
                .collect();
            format!("{{{}}}", pairs.join(","))
        })
        .collect();
    UnarySemigroup::build_from_table(mul, Some(star), Some(plus))?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(v: &[Option<usize>]) -> PartialMap {
        PartialMap::new(v.len(), v.to_vec()).unwrap()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let g = pm(&[Some(1), None]);
        let f = pm(&[Some(0), None]);
        assert_eq!(f.after(&g), PartialMap::empty(2));
        assert_eq!(g.after(&f), g);
    }

    #[test]
    fn pt2_order_nine() {
        let (s, maps) = full_pt(2).unwrap();
        assert_eq!(s.size(), 9);
        assert_eq!(maps[0], PartialMap::empty(2));
        assert_eq!(s.projections().len(), 4);
    }

    #[test]
    fn generating_all_of_pt2() {
        let (s, _) = generate_in_pt(2, &all_partial_maps(2), Closure::STAR).unwrap();
        assert_eq!(s.size(), 9);
    }

    #[test]
    fn generated_without_identity() {
        let f = pm(&[Some(0), None]);
        let g = pm(&[Some(1), None]);
        let (s, maps) = generate_in_pt(2, &[f.clone(), g.clone()], Closure::STAR).unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(maps, vec![f, g, PartialMap::empty(2)]);
        assert!(!s.has_local_units());
    }

    #[test]
    fn identity_alone_is_trivial() {
        let (s, _) = generate_in_pt(2, &[PartialMap::identity(2)], Closure::STAR).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn malformed_generators() {
        assert!(PartialMap::new(2, vec![Some(2), None]).is_err());
        assert!(generate_in_pt(2, &[], Closure::STAR).is_err());
        assert!(generate_in_pt(3, &[PartialMap::identity(2)], Closure::STAR).is_err());
    }

    #[test]
    fn symmetric_inverse_orders() {
        assert_eq!(symmetric_inverse(2).unwrap().0.size(), 7);
        assert_eq!(symmetric_inverse(3).unwrap().0.size(), 34);
    }

    #[test]
    fn relations_on_two_points() {
        let r = binary_relations(2).unwrap();
        assert_eq!(r.size(), 16);
        assert_eq!(r.label(0), "{}");
    }
}
