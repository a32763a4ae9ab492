//! Finite semigroups with optional `*` and `+` operations, stored as dense tables.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ElementId;

/// Exhaustive checks refuse carriers above this size unless forced.
pub const MAX_EXHAUSTIVE: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Signature {
    Plain,
    Star,
    StarPlus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnarySemigroup {
    size: usize,
    mul: Vec<ElementId>,
    star: Option<Vec<ElementId>>,
    plus: Option<Vec<ElementId>>,
    labels: Option<Vec<String>>,
    force: bool,
}

/// A failed law together with the elements that break it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<ElementId>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<ElementId>) -> Self {
        Violation {
            law: law.into(),
            witness,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.law, self.witness)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }
}

impl From<Option<Violation>> for Verdict {
    fn from(v: Option<Violation>) -> Self {
        v.map_or(Verdict::Pass, Verdict::Fail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axioms {
    Ehresmann,
    Restriction,
    CoEhresmann,
    Corestriction,
    BiEhresmann,
    Birestriction,
    Range,
    Inverse,
}

impl Axioms {
    pub const ALL: [Axioms; 8] = [
        Axioms::Ehresmann,
        Axioms::Restriction,
        Axioms::CoEhresmann,
        Axioms::Corestriction,
        Axioms::BiEhresmann,
        Axioms::Birestriction,
        Axioms::Range,
        Axioms::Inverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axioms::Ehresmann => "ehresmann",
            Axioms::Restriction => "restriction",
            Axioms::CoEhresmann => "coehresmann",
            Axioms::Corestriction => "corestriction",
            Axioms::BiEhresmann => "biehresmann",
            Axioms::Birestriction => "birestriction",
            Axioms::Range => "range",
            Axioms::Inverse => "inverse",
        }
    }

    fn required(self) -> Signature {
        match self {
            Axioms::Inverse => Signature::Plain,
            Axioms::Ehresmann | Axioms::Restriction => Signature::Star,
            _ => Signature::StarPlus,
        }
    }
}

impl FromStr for Axioms {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axioms::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown axiom family {s:?}")))
    }
}

impl fmt::Display for Axioms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_unary_table(name: &str, table: &[ElementId], n: usize) -> Result<()> {
    if table.len() != n {
        return Err(Error::SizeMismatch(format!(
            "{name} has {} entries, expected {n}",
            table.len()
        )));
    }
    if let Some(bad) = table.iter().find(|&&v| v >= n) {
        return Err(Error::SizeMismatch(format!("{name} entry {bad} out of range")));
    }
    Ok(())
}

impl UnarySemigroup {
    /// Builds a semigroup from a Cayley table and verifies associativity.
    pub fn build_from_table(
        mul: Vec<Vec<ElementId>>,
        star: Option<Vec<ElementId>>,
        plus: Option<Vec<ElementId>>,
    ) -> Result<Self> {
        Self::build(mul, star, plus, false)
    }

    /// As [`build_from_table`](Self::build_from_table) but without the size guard.
    pub fn build_forced(
        mul: Vec<Vec<ElementId>>,
        star: Option<Vec<ElementId>>,
        plus: Option<Vec<ElementId>>,
    ) -> Result<Self> {
        Self::build(mul, star, plus, true)
    }

    fn build(
        mul: Vec<Vec<ElementId>>,
        star: Option<Vec<ElementId>>,
        plus: Option<Vec<ElementId>>,
        force: bool,
    ) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::SizeMismatch("empty carrier".into()));
        }
        if let Some(row) = mul.iter().position(|r| r.len() != n) {
            return Err(Error::SizeMismatch(format!("mul row {row} has wrong length")));
        }
        if plus.is_some() && star.is_none() {
            return Err(Error::SizeMismatch("plus given without star".into()));
        }
        let flat: Vec<ElementId> = mul.into_iter().flatten().collect();
        if let Some(bad) = flat.iter().find(|&&v| v >= n) {
            return Err(Error::SizeMismatch(format!("mul entry {bad} out of range")));
        }
        if let Some(s) = &star {
            check_unary_table("star", s, n)?;
        }
        if let Some(p) = &plus {
            check_unary_table("plus", p, n)?;
        }
        let s = UnarySemigroup {
            size: n,
            mul: flat,
            star,
            plus,
            labels: None,
            force,
        };
        s.guard("associativity check")?;
        if let Some((a, b, c)) = s.first_non_associative() {
            return Err(Error::NonAssociative { a, b, c });
        }
        Ok(s)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::SizeMismatch(format!(
                "{} labels for {} elements",
                labels.len(),
                self.size
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Lifts the size guard on exhaustive checks.
    pub fn forced(mut self) -> Self {
        self.force = true;
        self
    }

    pub fn is_forced(&self) -> bool {
        self.force
    }

    pub fn guard(&self, what: &'static str) -> Result<()> {
        if !self.force && self.size > MAX_EXHAUSTIVE {
            return Err(Error::TooLarge {
                what,
                count: self.size,
                limit: MAX_EXHAUSTIVE,
            });
        }
        Ok(())
    }

    fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.size
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a * self.size + b]
    }

    /// Panics if the semigroup carries no star table.
    #[inline]
    pub fn star(&self, a: ElementId) -> ElementId {
        self.star.as_ref().expect("semigroup has no star")[a]
    }

    /// Panics if the semigroup carries no plus table.
    #[inline]
    pub fn plus(&self, a: ElementId) -> ElementId {
        self.plus.as_ref().expect("semigroup has no plus")[a]
    }

    pub fn star_table(&self) -> Option<&[ElementId]> {
        self.star.as_deref()
    }

    pub fn plus_table(&self) -> Option<&[ElementId]> {
        self.plus.as_deref()
    }

    pub fn mul_rows(&self) -> Vec<Vec<ElementId>> {
        self.mul.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: ElementId) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<ElementId> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn signature(&self) -> Signature {
        match (&self.star, &self.plus) {
            (None, _) => Signature::Plain,
            (Some(_), None) => Signature::Star,
            (Some(_), Some(_)) => Signature::StarPlus,
        }
    }

    pub fn require(&self, sig: Signature, what: &'static str) -> Result<()> {
        if self.signature() < sig {
            return Err(Error::SignatureTooWeak(what));
        }
        Ok(())
    }

    /// Replaces the plus table, keeping multiplication and star.
    pub fn with_plus(&self, plus: Vec<ElementId>) -> Result<Self> {
        self.require(Signature::Star, "plus table")?;
        check_unary_table("plus", &plus, self.size)?;
        let mut s = self.clone();
        s.plus = Some(plus);
        Ok(s)
    }

    pub fn with_star(&self, star: Vec<ElementId>) -> Result<Self> {
        check_unary_table("star", &star, self.size)?;
        let mut s = self.clone();
        s.star = Some(star);
        Ok(s)
    }

    pub fn drop_plus(&self) -> Self {
        let mut s = self.clone();
        s.plus = None;
        s
    }

    /// Renumbers elements: new element `i` is old element `order[i]`.
    pub fn permuted(&self, order: &[ElementId]) -> Result<Self> {
        let n = self.size;
        let mut inv = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || inv[old] != usize::MAX {
                return Err(Error::Invalid("not a permutation".into()));
            }
            inv[old] = new;
        }
        if order.len() != n {
            return Err(Error::Invalid("not a permutation".into()));
        }
        let mul = (0..n)
            .map(|a| (0..n).map(|b| inv[self.mul(order[a], order[b])]).collect())
            .collect();
        let map = |t: &Vec<ElementId>| order.iter().map(|&o| inv[t[o]]).collect::<Vec<_>>();
        let mut s = UnarySemigroup::build(
            mul,
            self.star.as_ref().map(map),
            self.plus.as_ref().map(map),
            self.force,
        )?;
        if let Some(l) = &self.labels {
            s.labels = Some(order.iter().map(|&o| l[o].clone()).collect());
        }
        Ok(s)
    }

    /// Elements `e` with `e* = e`, in index order.
    pub fn projections(&self) -> Vec<ElementId> {
        self.elements().filter(|&a| self.star(a) == a).collect()
    }

    pub fn is_projection(&self, a: ElementId) -> bool {
        self.star(a) == a
    }

    /// Checks that the projections form a commutative idempotent subsemigroup.
    pub fn verify_projections(&self) -> Result<()> {
        let p = self.projections();
        for &e in &p {
            if self.mul(e, e) != e {
                return Err(Error::Internal(format!("projection {e} is not idempotent")));
            }
            for &f in &p {
                let ef = self.mul(e, f);
                if ef != self.mul(f, e) || !self.is_projection(ef) {
                    return Err(Error::Internal(format!("projections {e},{f} do not commute")));
                }
            }
        }
        Ok(())
    }

    /// The two-sided identity, if any.
    pub fn identity(&self) -> Option<ElementId> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// The two-sided zero, if any.
    pub fn zero(&self) -> Option<ElementId> {
        self.elements()
            .find(|&z| self.elements().all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// Fails with the first violated restriction law.
    pub fn require_restriction(&self) -> Result<()> {
        match self.check_axioms(Axioms::Restriction)? {
            Verdict::Pass => Ok(()),
            Verdict::Fail(v) => Err(Error::NotRestriction(v.to_string())),
        }
    }

    pub fn check_axioms(&self, which: Axioms) -> Result<Verdict> {
        self.require(which.required(), which.name())?;
        self.guard("axiom check")?;
        Ok(match which {
            Axioms::Inverse => self.inverse_violation(),
            _ => self.law_violation(&laws_for(which)),
        }
        .into())
    }

    fn law_violation(&self, laws: &[Law]) -> Option<Violation> {
        for x in self.elements() {
            for law in laws {
                if let Law::Unary(name, f) = law {
                    if !f(self, x) {
                        return Some(Violation::new(*name, vec![x]));
                    }
                }
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                for law in laws {
                    if let Law::Binary(name, f) = law {
                        if !f(self, x, y) {
                            return Some(Violation::new(*name, vec![x, y]));
                        }
                    }
                }
            }
        }
        None
    }

    /// All `b` with `aba = a` and `bab = b`.
    pub fn inverses_of(&self, a: ElementId) -> Vec<ElementId> {
        self.elements()
            .filter(|&b| self.mul(self.mul(a, b), a) == a && self.mul(self.mul(b, a), b) == b)
            .collect()
    }

    fn inverse_violation(&self) -> Option<Violation> {
        self.elements().find_map(|a| {
            let inv = self.inverses_of(a);
            (inv.len() != 1).then(|| {
                let law = if inv.is_empty() {
                    "inverse exists"
                } else {
                    "inverse is unique"
                };
                Violation::new(law, std::iter::once(a).chain(inv).collect())
            })
        })
    }

    /// Inverse table when every element has exactly one inverse.
    pub fn inverse_table(&self) -> Option<Vec<ElementId>> {
        self.elements()
            .map(|a| match self.inverses_of(a).as_slice() {
                [b] => Some(*b),
                _ => None,
            })
            .collect()
    }

    /// For an inverse semigroup, sets `a* = a⁻¹a` and `a⁺ = aa⁻¹`.
    pub fn with_inverse_operations(&self) -> Result<Self> {
        let inv = self
            .inverse_table()
            .ok_or(Error::Invalid("not an inverse semigroup".into()))?;
        let star = self.elements().map(|a| self.mul(inv[a], a)).collect();
        let plus = self.elements().map(|a| self.mul(a, inv[a])).collect();
        let mut s = self.clone();
        s.star = Some(star);
        s.plus = Some(plus);
        Ok(s)
    }

    /// Some projection `e` with `es = s`, if one exists for every `s`; otherwise
    /// the first element lacking one.
    pub fn first_without_local_unit(&self) -> Option<ElementId> {
        let p = self.projections();
        self.elements().find(|&s| !p.iter().any(|&e| self.mul(e, s) == s))
    }

    pub fn has_local_units(&self) -> bool {
        self.first_without_local_unit().is_none()
    }

    pub fn require_local_units(&self) -> Result<()> {
        match self.first_without_local_unit() {
            Some(s) => Err(Error::NoLocalUnits(s)),
            None => Ok(()),
        }
    }

    /// `S¹`: returns `self` unchanged if it already has an identity.
    pub fn adjoin_identity(&self) -> Result<Self> {
        if self.identity().is_some() {
            return Ok(self.clone());
        }
        let n = self.size;
        let one = n;
        let mul = (0..=n)
            .map(|a| {
                (0..=n)
                    .map(|b| match (a == one, b == one) {
                        (true, _) => b,
                        (false, true) => a,
                        _ => self.mul(a, b),
                    })
                    .collect()
            })
            .collect();
        let extend = |t: &Vec<ElementId>| {
            let mut t = t.clone();
            t.push(one);
            t
        };
        let mut s = UnarySemigroup::build(
            mul,
            self.star.as_ref().map(extend),
            self.plus.as_ref().map(extend),
            self.force,
        )?;
        if let Some(l) = &self.labels {
            let mut l = l.clone();
            l.push("1".into());
            s.labels = Some(l);
        }
        Ok(s)
    }

    /// Whether `map` from `self` into `other` preserves product and star.
    pub fn first_morphism_failure(&self, other: &UnarySemigroup, map: &[ElementId]) -> Option<Violation> {
        for a in self.elements() {
            if self.star.is_some() && other.star.is_some() && map[self.star(a)] != other.star(map[a]) {
                return Some(Violation::new("preserves star", vec![a]));
            }
            if self.plus.is_some() && other.plus.is_some() && map[self.plus(a)] != other.plus(map[a]) {
                return Some(Violation::new("preserves plus", vec![a]));
            }
            for b in self.elements() {
                if map[self.mul(a, b)] != other.mul(map[a], map[b]) {
                    return Some(Violation::new("preserves product", vec![a, b]));
                }
            }
        }
        None
    }

    /// Whether `map` is a bijective (·,*)-morphism onto `other`.
    pub fn is_isomorphism(&self, other: &UnarySemigroup, map: &[ElementId]) -> bool {
        if self.size != other.size || map.len() != self.size {
            return false;
        }
        let mut seen = vec![false; other.size];
        for &m in map {
            if m >= other.size || std::mem::replace(&mut seen[m], true) {
                return false;
            }
        }
        self.first_morphism_failure(other, map).is_none()
    }

    /// An isomorphism onto `other` preserving product and star, found by
    /// backtracking over elements with matching invariants.
    pub fn find_isomorphism(&self, other: &UnarySemigroup) -> Option<Vec<ElementId>> {
        if self.size != other.size || self.star.is_some() != other.star.is_some() {
            return None;
        }
        let profile = |s: &UnarySemigroup, a: ElementId| {
            (
                s.mul(a, a) == a,
                s.star.is_some() && s.star(a) == a,
                s.elements().filter(|&b| s.mul(b, a) == a).count(),
                s.elements().filter(|&b| s.mul(a, b) == a).count(),
                s.elements().filter(|&b| s.mul(a, b) == b).count(),
            )
        };
        let mine: Vec<_> = self.elements().map(|a| profile(self, a)).collect();
        let theirs: Vec<_> = other.elements().map(|a| profile(other, a)).collect();
        let mut map = vec![usize::MAX; self.size];
        let mut used = vec![false; self.size];
        self.extend_isomorphism(other, &mine, &theirs, 0, &mut map, &mut used)
            .then_some(map)
    }

    fn extend_isomorphism<P: PartialEq>(
        &self,
        other: &UnarySemigroup,
        mine: &[P],
        theirs: &[P],
        a: ElementId,
        map: &mut [ElementId],
        used: &mut [bool],
    ) -> bool {
        if a == self.size {
            return self.first_morphism_failure(other, map).is_none();
        }
        for img in other.elements() {
            if used[img] || mine[a] != theirs[img] {
                continue;
            }
            map[a] = img;
            let consistent = (0..=a).all(|b| {
                let fits = |x: ElementId, y: ElementId| map[x] == usize::MAX || map[x] == y;
                let mut ok =
                    fits(self.mul(a, b), other.mul(img, map[b])) && fits(self.mul(b, a), other.mul(map[b], img));
                if self.star.is_some() {
                    ok &= fits(self.star(b), other.star(map[b]));
                }
                ok
            });
            if consistent {
                used[img] = true;
                if self.extend_isomorphism(other, mine, theirs, a + 1, map, used) {
                    return true;
                }
                used[img] = false;
            }
            map[a] = usize::MAX;
        }
        false
    }
}

enum Law {
    Unary(&'static str, fn(&UnarySemigroup, ElementId) -> bool),
    Binary(&'static str, fn(&UnarySemigroup, ElementId, ElementId) -> bool),
}

fn ehresmann_laws() -> Vec<Law> {
    vec![
        Law::Unary("x x* = x", |s, x| s.mul(x, s.star(x)) == x),
        Law::Binary("x* y* = y* x*", |s, x, y| {
            s.mul(s.star(x), s.star(y)) == s.mul(s.star(y), s.star(x))
        }),
        Law::Binary("x* y* = (x* y*)*", |s, x, y| {
            let p = s.mul(s.star(x), s.star(y));
            p == s.star(p)
        }),
        Law::Binary("(xy)* = (x* y)*", |s, x, y| {
            s.star(s.mul(x, y)) == s.star(s.mul(s.star(x), y))
        }),
    ]
}

fn coehresmann_laws() -> Vec<Law> {
    vec![
        Law::Unary("x+ x = x", |s, x| s.mul(s.plus(x), x) == x),
        Law::Binary("x+ y+ = y+ x+", |s, x, y| {
            s.mul(s.plus(x), s.plus(y)) == s.mul(s.plus(y), s.plus(x))
        }),
        Law::Binary("x+ y+ = (x+ y+)+", |s, x, y| {
            let p = s.mul(s.plus(x), s.plus(y));
            p == s.plus(p)
        }),
        Law::Binary("(xy)+ = (x y+)+", |s, x, y| {
            s.plus(s.mul(x, y)) == s.plus(s.mul(x, s.plus(y)))
        }),
    ]
}

fn linking_laws() -> Vec<Law> {
    vec![
        Law::Unary("(x+)* = x+", |s, x| s.star(s.plus(x)) == s.plus(x)),
        Law::Unary("(x*)+ = x*", |s, x| s.plus(s.star(x)) == s.star(x)),
    ]
}

fn restriction_law() -> Law {
    Law::Binary("x* y = y (xy)*", |s, x, y| {
        s.mul(s.star(x), y) == s.mul(y, s.star(s.mul(x, y)))
    })
}

fn corestriction_law() -> Law {
    Law::Binary("x y+ = (xy)+ x", |s, x, y| {
        s.mul(x, s.plus(y)) == s.mul(s.plus(s.mul(x, y)), x)
    })
}

fn laws_for(which: Axioms) -> Vec<Law> {
    let mut laws = Vec::new();
    let bi = |laws: &mut Vec<Law>| {
        laws.extend(ehresmann_laws());
        laws.extend(coehresmann_laws());
        laws.extend(linking_laws());
    };
    match which {
        Axioms::Ehresmann => laws.extend(ehresmann_laws()),
        Axioms::Restriction => {
            laws.extend(ehresmann_laws());
            laws.push(restriction_law());
        }
        Axioms::CoEhresmann => laws.extend(coehresmann_laws()),
        Axioms::Corestriction => {
            laws.extend(coehresmann_laws());
            laws.push(corestriction_law());
        }
        Axioms::BiEhresmann => bi(&mut laws),
        Axioms::Birestriction => {
            bi(&mut laws);
            laws.push(restriction_law());
            laws.push(corestriction_law());
        }
        Axioms::Range => {
            bi(&mut laws);
            laws.push(restriction_law());
        }
        Axioms::Inverse => {}
    }
    laws
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> UnarySemigroup {
        UnarySemigroup::build_from_table(vec![vec![0, 0], vec![0, 1]], Some(vec![0, 1]), None).unwrap()
    }

    #[test]
    fn trivial_monoid_is_restriction() {
        let s = UnarySemigroup::build_from_table(vec![vec![0]], Some(vec![0]), None).unwrap();
        assert!(s.check_axioms(Axioms::Restriction).unwrap().is_pass());
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn isomorphism_search() {
        let s = crate::pmap::full_pt(2).unwrap().0.drop_plus();
        let t = s.permuted(&[8, 3, 5, 0, 7, 1, 6, 2, 4]).unwrap();
        let map = s.find_isomorphism(&t).unwrap();
        assert!(s.is_isomorphism(&t, &map));
        let i2 = crate::pmap::symmetric_inverse(2).unwrap().0.drop_plus();
        assert!(s.find_isomorphism(&chain2()).is_none());
        assert!(i2
            .find_isomorphism(&i2.permuted(&[6, 5, 4, 3, 2, 1, 0]).unwrap())
            .is_some());
    }

    #[test]
    fn semilattice_with_identity_star() {
        let s = chain2();
        assert!(s.check_axioms(Axioms::Restriction).unwrap().is_pass());
        assert_eq!(s.projections(), vec![0, 1]);
    }

    #[test]
    fn non_associative_table_reports_first_triple() {
        // 0·1 = 1, 1·1 = 0, everything else 0.
        let err = UnarySemigroup::build_from_table(vec![vec![0, 1], vec![0, 0]], None, None).unwrap_err();
        assert_eq!(err, Error::NonAssociative { a: 1, b: 0, c: 1 });
    }

    #[test]
    fn size_mismatch() {
        let err = UnarySemigroup::build_from_table(vec![vec![0], vec![0, 1]], None, None).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch(_)));
        let err = UnarySemigroup::build_from_table(vec![vec![0]], Some(vec![0, 0]), None).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch(_)));
    }

    #[test]
    fn range_check_needs_plus() {
        let err = chain2().check_axioms(Axioms::Range).unwrap_err();
        assert_eq!(err, Error::SignatureTooWeak("range"));
    }

    #[test]
    fn adjoin_identity_only_when_missing() {
        let s = chain2();
        assert_eq!(s.adjoin_identity().unwrap().size(), 2);
        let z = UnarySemigroup::build_from_table(vec![vec![0]], Some(vec![0]), None).unwrap();
        assert_eq!(z.adjoin_identity().unwrap().size(), 1);
    }

    #[test]
    fn permuted_round_trip() {
        let s = chain2().with_labels(vec!["0".into(), "1".into()]).unwrap();
        let p = s.permuted(&[1, 0]).unwrap();
        assert_eq!(p.mul(0, 1), 1);
        assert_eq!(p.label(0), "1");
        assert_eq!(p.permuted(&[1, 0]).unwrap(), s);
    }
}
