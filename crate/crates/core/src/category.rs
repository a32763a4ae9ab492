//! Finite categories given by tables, their slices, and the slice semigroups.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::semigroup::{Axioms, UnarySemigroup, Verdict, Violation};

pub type ArrowId = usize;

/// A set of arrows on which `dom` is injective.
pub type Slice = FixedBitSet;

/// Default cap on the number of enumerated slices.
pub const MAX_SLICES: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    dom: Vec<ArrowId>,
    ran: Vec<ArrowId>,
    comp: Vec<Option<ArrowId>>,
    labels: Vec<String>,
}

impl FiniteCategory {
    /// Builds a category from `dom`, `ran` and the list of defined products
    /// `(x, y, xy)`, then verifies the category axioms.
    pub fn new(
        dom: Vec<ArrowId>,
        ran: Vec<ArrowId>,
        products: &[(ArrowId, ArrowId, ArrowId)],
        labels: Vec<String>,
    ) -> Result<Self> {
        let n = dom.len();
        if ran.len() != n || labels.len() != n {
            return Err(Error::SizeMismatch("dom, ran and labels differ in length".into()));
        }
        if dom.iter().chain(&ran).any(|&u| u >= n) {
            return Err(Error::SizeMismatch("unit index out of range".into()));
        }
        let mut comp = vec![None; n * n];
        for &(x, y, xy) in products {
            if x >= n || y >= n || xy >= n {
                return Err(Error::SizeMismatch("product entry out of range".into()));
            }
            if comp[x * n + y].replace(xy).is_some() {
                return Err(Error::Invalid(format!("product of {x},{y} given twice")));
            }
        }
        let c = FiniteCategory { dom, ran, comp, labels };
        if let Some(v) = c.axiom_violation() {
            return Err(Error::Invalid(format!("category axiom fails: {v}")));
        }
        Ok(c)
    }

    /// The category with `n` objects and one arrow between any two of them.
    /// Arrow `i * n + j` goes from object `j` to object `i`.
    pub fn pair_groupoid(n: usize) -> Self {
        let idx = |i: usize, j: usize| i * n + j;
        let mut dom = Vec::new();
        let mut ran = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                dom.push(idx(j, j));
                ran.push(idx(i, i));
                labels.push(format!("{i}<-{j}"));
            }
        }
        let products: Vec<_> = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (idx(i, j), idx(j, k), idx(i, k)))))
            .collect();
        FiniteCategory::new(dom, ran, &products, labels).expect("pair groupoid")
    }

    /// Only identity arrows.
    pub fn discrete(n: usize) -> Self {
        let products: Vec<_> = (0..n).map(|u| (u, u, u)).collect();
        FiniteCategory::new(
            (0..n).collect(),
            (0..n).collect(),
            &products,
            (0..n).map(|u| u.to_string()).collect(),
        )
        .expect("discrete category")
    }

    pub fn arrow_count(&self) -> usize {
        self.dom.len()
    }

    pub fn dom(&self, x: ArrowId) -> ArrowId {
        self.dom[x]
    }

    pub fn ran(&self, x: ArrowId) -> ArrowId {
        self.ran[x]
    }

    pub fn label(&self, x: ArrowId) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.arrow_count() {
            return Err(Error::SizeMismatch("label count".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn compose(&self, x: ArrowId, y: ArrowId) -> Option<ArrowId> {
        self.comp[x * self.arrow_count() + y]
    }

    /// Defined products `(x, y, xy)` in index order.
    pub fn products(&self) -> Vec<(ArrowId, ArrowId, ArrowId)> {
        let n = self.arrow_count();
        (0..n)
            .flat_map(|x| (0..n).filter_map(move |y| self.compose(x, y).map(|xy| (x, y, xy))))
            .collect()
    }

    pub fn is_unit(&self, x: ArrowId) -> bool {
        self.dom[x] == x
    }

    pub fn units(&self) -> Vec<ArrowId> {
        (0..self.arrow_count()).filter(|&x| self.is_unit(x)).collect()
    }

    /// First failure of the category axioms, checked exhaustively.
    pub fn axiom_violation(&self) -> Option<Violation> {
        let n = self.arrow_count();
        for x in 0..n {
            for u in [self.dom[x], self.ran[x]] {
                if self.dom[u] != u || self.ran[u] != u {
                    return Some(Violation::new("dom and ran are units", vec![x]));
                }
            }
            if self.compose(self.ran[x], x) != Some(x) || self.compose(x, self.dom[x]) != Some(x) {
                return Some(Violation::new("ran(x) x = x = x dom(x)", vec![x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let defined = self.dom[x] == self.ran[y];
                match self.compose(x, y) {
                    Some(_) if !defined => return Some(Violation::new("xy defined iff dom x = ran y", vec![x, y])),
                    None if defined => return Some(Violation::new("xy defined iff dom x = ran y", vec![x, y])),
                    Some(xy) if self.dom[xy] != self.dom[y] || self.ran[xy] != self.ran[x] => {
                        return Some(Violation::new("dom(xy) = dom y, ran(xy) = ran x", vec![x, y]))
                    }
                    _ => {}
                }
            }
        }
        for (x, y, xy) in self.products() {
            for z in 0..n {
                if let Some(yz) = self.compose(y, z) {
                    if self.compose(xy, z) != self.compose(x, yz) {
                        return Some(Violation::new("(xy)z = x(yz)", vec![x, y, z]));
                    }
                }
            }
        }
        None
    }

    pub fn inverse_of(&self, x: ArrowId) -> Option<ArrowId> {
        (0..self.arrow_count())
            .find(|&y| self.compose(x, y) == Some(self.ran[x]) && self.compose(y, x) == Some(self.dom[x]))
    }

    pub fn first_non_invertible(&self) -> Option<ArrowId> {
        (0..self.arrow_count()).find(|&x| self.inverse_of(x).is_none())
    }

    pub fn is_groupoid(&self) -> bool {
        self.first_non_invertible().is_none()
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.arrow_count())
    }

    pub fn set_of(&self, arrows: impl IntoIterator<Item = ArrowId>) -> FixedBitSet {
        let mut s = self.empty_set();
        s.extend(arrows);
        s
    }

    pub fn is_slice(&self, u: &FixedBitSet) -> bool {
        u.len() == self.arrow_count() && injective(u.ones().map(|x| self.dom[x]))
    }

    pub fn is_bislice(&self, u: &FixedBitSet) -> bool {
        self.is_slice(u) && injective(u.ones().map(|x| self.ran[x]))
    }

    fn require_slice(&self, u: &FixedBitSet) -> Result<()> {
        if !self.is_slice(u) {
            return Err(Error::NotASlice(format!("{:?}", u.ones().collect::<Vec<_>>())));
        }
        Ok(())
    }

    /// `UV = {xy : x ∈ U, y ∈ V, dom x = ran y}`. Each arrow of the product
    /// has a unique such factorization, which is checked.
    pub fn slice_product(&self, u: &Slice, v: &Slice) -> Result<Slice> {
        self.require_slice(u)?;
        self.require_slice(v)?;
        let mut out = self.empty_set();
        for y in v.ones() {
            for x in u.ones() {
                if let Some(xy) = self.compose(x, y) {
                    if out.put(xy) {
                        return Err(Error::Internal(format!("arrow {xy} factors twice in UV")));
                    }
                }
            }
        }
        if !self.is_slice(&out) {
            return Err(Error::Internal("product of slices is not a slice".into()));
        }
        Ok(out)
    }

    /// `U* = dom(U)`, a set of units.
    pub fn slice_star(&self, u: &Slice) -> Slice {
        self.set_of(u.ones().map(|x| self.dom[x]))
    }

    /// `U⁺ = ran(U)`, a set of units.
    pub fn slice_ran(&self, u: &Slice) -> Slice {
        self.set_of(u.ones().map(|x| self.ran[x]))
    }

    /// Arrows grouped by domain, one bucket per unit in unit order.
    fn dom_buckets(&self) -> Vec<Vec<ArrowId>> {
        self.units()
            .into_iter()
            .map(|u| (0..self.arrow_count()).filter(|&x| self.dom[x] == u).collect())
            .collect()
    }

    /// Number of slices, or `None` on overflow.
    pub fn slice_count(&self) -> Option<usize> {
        self.dom_buckets()
            .iter()
            .try_fold(1usize, |acc, b| acc.checked_mul(b.len() + 1))
    }

    /// Every slice, sorted by arrow indices. A slice chooses at most one
    /// arrow from each domain bucket.
    pub fn enumerate_slices(&self, limit: usize) -> Result<Vec<Slice>> {
        let count = self.slice_count().unwrap_or(usize::MAX);
        if count > limit {
            return Err(Error::TooLarge {
                what: "slice enumeration",
                count,
                limit,
            });
        }
        let mut out = vec![self.empty_set()];
        for bucket in self.dom_buckets() {
            let mut next = Vec::with_capacity(out.len() * (bucket.len() + 1));
            for s in &out {
                next.push(s.clone());
                for &x in &bucket {
                    let mut t = s.clone();
                    t.insert(x);
                    next.push(t);
                }
            }
            out = next;
        }
        out.sort_by(|a, b| a.ones().cmp(b.ones()));
        Ok(out)
    }

    pub fn enumerate_bislices(&self, limit: usize) -> Result<Vec<Slice>> {
        Ok(self
            .enumerate_slices(limit)?
            .into_iter()
            .filter(|u| self.is_bislice(u))
            .collect())
    }

    /// The semigroup of all slices, with `*` the domain and `+` the range.
    pub fn slice_semigroup(&self, limit: usize) -> Result<SliceSemigroup> {
        let slices = self.enumerate_slices(limit)?;
        SliceSemigroup::from_family(self, slices)
    }

    pub fn bislice_semigroup(&self, limit: usize) -> Result<SliceSemigroup> {
        let slices = self.enumerate_bislices(limit)?;
        SliceSemigroup::from_family(self, slices)
    }

    /// Whether `map` is a functor into `other`, with a witness on failure.
    pub fn functor_violation(&self, other: &FiniteCategory, map: &[ArrowId]) -> Option<Violation> {
        for x in 0..self.arrow_count() {
            if map[self.dom[x]] != other.dom(map[x]) || map[self.ran[x]] != other.ran(map[x]) {
                return Some(Violation::new("functor preserves dom and ran", vec![x]));
            }
        }
        for (x, y, xy) in self.products() {
            if other.compose(map[x], map[y]) != Some(map[xy]) {
                return Some(Violation::new("functor preserves products", vec![x, y]));
            }
        }
        None
    }

    /// Bijective functor whose inverse is also a functor.
    pub fn isomorphism_violation(&self, other: &FiniteCategory, map: &[ArrowId]) -> Option<Violation> {
        let n = self.arrow_count();
        if other.arrow_count() != n || map.len() != n {
            return Some(Violation::new("same number of arrows", vec![]));
        }
        let mut inv = vec![usize::MAX; n];
        for (x, &fx) in map.iter().enumerate() {
            if fx >= n || inv[fx] != usize::MAX {
                return Some(Violation::new("bijective on arrows", vec![x]));
            }
            inv[fx] = x;
        }
        self.functor_violation(other, map).or_else(|| {
            other
                .functor_violation(self, &inv)
                .map(|v| Violation::new(format!("inverse {}", v.law), v.witness))
        })
    }

    /// Graphviz source: one node per unit, one edge per arrow from its domain
    /// to its range.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
        for u in self.units() {
            let _ = writeln!(out, "  n{u} [label=\"{}\"];", escape(&self.labels[u]));
        }
        for x in 0..self.arrow_count() {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                self.dom[x],
                self.ran[x],
                escape(&self.labels[x])
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn injective(it: impl Iterator<Item = usize>) -> bool {
    let mut seen = std::collections::HashSet::new();
    it.into_iter().all(|v| seen.insert(v))
}

/// A family of slices closed under product and domain, with its
/// multiplication table. The range operation is included when the family is
/// closed under it.
#[derive(Clone, Debug)]
pub struct SliceSemigroup {
    pub semigroup: UnarySemigroup,
    pub slices: Vec<Slice>,
    index: HashMap<Slice, usize>,
}

impl SliceSemigroup {
    pub fn from_family(c: &FiniteCategory, slices: Vec<Slice>) -> Result<Self> {
        let index: HashMap<Slice, usize> = slices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        if index.len() != slices.len() {
            return Err(Error::Invalid("repeated slice in family".into()));
        }
        let find = |s: &Slice| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::Invalid("family of slices is not closed".into()))
        };
        let n = slices.len();
        if n > crate::semigroup::MAX_EXHAUSTIVE {
            return Err(Error::TooLarge {
                what: "slice semigroup table",
                count: n,
                limit: crate::semigroup::MAX_EXHAUSTIVE,
            });
        }
        let mut mul = vec![vec![0; n]; n];
        for (i, u) in slices.iter().enumerate() {
            for (j, v) in slices.iter().enumerate() {
                mul[i][j] = find(&c.slice_product(u, v)?)?;
            }
        }
        let star = slices.iter().map(|u| find(&c.slice_star(u))).collect::<Result<_>>()?;
        let plus: Option<Vec<usize>> = slices.iter().map(|u| index.get(&c.slice_ran(u)).copied()).collect();
        let labels = slices
            .iter()
            .map(|u| {
                let names: Vec<&str> = u.ones().map(|x| c.label(x)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        let semigroup = UnarySemigroup::build_from_table(mul, Some(star), plus)?.with_labels(labels)?;
        Ok(SliceSemigroup {
            semigroup,
            slices,
            index,
        })
    }

    pub fn index_of(&self, s: &Slice) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Restriction axioms and the Boolean restriction axioms.
    pub fn verify_boolean(&self) -> Result<()> {
        if let Verdict::Fail(v) = self.semigroup.check_axioms(Axioms::Restriction)? {
            return Err(Error::Internal(format!("slice semigroup not restriction: {v}")));
        }
        if let Verdict::Fail(v) = self.semigroup.check_boolean_restriction()? {
            return Err(Error::Internal(format!("slice semigroup not boolean: {v}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arrow_category() {
        let c = FiniteCategory::discrete(1);
        let s = c.slice_semigroup(MAX_SLICES).unwrap();
        assert_eq!(s.slices.len(), 2);
        s.verify_boolean().unwrap();
    }

    #[test]
    fn pair_groupoid_counts() {
        let c = FiniteCategory::pair_groupoid(2);
        assert!(c.is_groupoid());
        assert_eq!(c.enumerate_slices(MAX_SLICES).unwrap().len(), 9);
        assert_eq!(c.enumerate_bislices(MAX_SLICES).unwrap().len(), 7);
    }

    #[test]
    fn slice_product_of_singletons() {
        let c = FiniteCategory::pair_groupoid(2);
        // 0<-1 after 1<-0 is 0<-0.
        let x = c.set_of([1]);
        let y = c.set_of([2]);
        assert_eq!(c.slice_product(&x, &y).unwrap(), c.set_of([0]));
        assert_eq!(c.slice_product(&x, &x).unwrap(), c.empty_set());
        let u = c.set_of([1, 2]);
        assert_eq!(c.slice_product(&u, &c.slice_star(&u)).unwrap(), u);
    }

    #[test]
    fn not_a_slice() {
        let c = FiniteCategory::pair_groupoid(2);
        // 0<-0 and 1<-0 share a domain.
        let bad = c.set_of([0, 2]);
        assert!(matches!(c.slice_product(&bad, &bad), Err(Error::NotASlice(_))));
    }

    #[test]
    fn guard_applies() {
        let c = FiniteCategory::pair_groupoid(3);
        assert!(matches!(c.enumerate_slices(10), Err(Error::TooLarge { count: 64, .. })));
    }

    #[test]
    fn broken_category_rejected() {
        let err = FiniteCategory::new(
            vec![0, 0],
            vec![0, 0],
            &[(0, 0, 0), (0, 1, 1), (1, 0, 1)],
            vec!["a".into(), "b".into()],
        );
        assert!(err.is_err());
    }

    #[test]
    fn dot_has_one_edge_per_arrow() {
        let dot = FiniteCategory::pair_groupoid(2).to_dot("pg");
        assert_eq!(dot.matches("->").count(), 4);
        assert_eq!(dot.matches("[label=").count(), 6);
    }
}
