//! Natural order, compatibility, the congruence σ and the predicates built on them.

use crate::error::{Error, Result};
use crate::relation::{ElementRelation, RelationKind};
use crate::semigroup::{Signature, UnarySemigroup};
use crate::ElementId;

impl UnarySemigroup {
    /// `s ≤ t` iff `s = t s*`.
    pub fn natural_order(&self) -> Result<ElementRelation> {
        self.require(Signature::Star, "natural order")?;
        self.guard("natural order")?;
        Ok(ElementRelation::from_fn(RelationKind::Order, self.size(), |s, t| {
            s == self.mul(t, self.star(s))
        }))
    }

    /// Re-checks the basic facts about `≤`: it is a partial order, `s ≤ t`
    /// forces `s* ≤ t*`, it is compatible with multiplication, and on
    /// projections it reads `e ≤ f` iff `e = ef`.
    pub fn verify_order_properties(&self, order: &ElementRelation) -> Result<()> {
        if !order.is_partial_order() {
            return Err(Error::Internal("natural order is not a partial order".into()));
        }
        for (s, t) in order.pairs() {
            if !order.contains(self.star(s), self.star(t)) {
                return Err(Error::Internal(format!("{s} <= {t} but stars are not ordered")));
            }
            for u in self.elements() {
                if !order.contains(self.mul(s, u), self.mul(t, u)) || !order.contains(self.mul(u, s), self.mul(u, t)) {
                    return Err(Error::Internal(format!(
                        "order not compatible with product at {s} <= {t}, {u}"
                    )));
                }
            }
        }
        let p = self.projections();
        for &e in &p {
            for &f in &p {
                if order.contains(e, f) != (e == self.mul(e, f)) {
                    return Err(Error::Internal(format!("projection order wrong at {e}, {f}")));
                }
            }
        }
        Ok(())
    }

    /// `s ⌣ t` iff `s t* = t s*`.
    pub fn compatibility(&self) -> Result<ElementRelation> {
        self.require(Signature::Star, "compatibility")?;
        self.guard("compatibility")?;
        Ok(ElementRelation::from_fn(
            RelationKind::Compatibility,
            self.size(),
            |s, t| self.mul(s, self.star(t)) == self.mul(t, self.star(s)),
        ))
    }

    /// Meet of pairwise compatible elements, checked against a search for the
    /// greatest lower bound.
    pub fn meet_of_compatible(&self, elems: &[ElementId]) -> Result<ElementId> {
        self.require(Signature::Star, "meet")?;
        let first = *elems
            .first()
            .ok_or_else(|| Error::Invalid("meet of no elements".into()))?;
        for (i, &s) in elems.iter().enumerate() {
            for &t in &elems[i + 1..] {
                if self.mul(s, self.star(t)) != self.mul(t, self.star(s)) {
                    return Err(Error::NotCompatible(s, t));
                }
            }
        }
        let e = elems
            .iter()
            .skip(1)
            .fold(self.star(first), |acc, &s| self.mul(acc, self.star(s)));
        let meet = self.mul(first, e);

        let order = self.natural_order()?;
        let lower: Vec<ElementId> = self
            .elements()
            .filter(|&c| elems.iter().all(|&s| order.contains(c, s)))
            .collect();
        if !lower.contains(&meet) || !lower.iter().all(|&c| order.contains(c, meet)) {
            return Err(Error::Internal(format!("{meet} is not the meet of {elems:?}")));
        }
        Ok(meet)
    }

    /// `a σ b` iff `a` and `b` have a common lower bound.
    pub fn sigma(&self) -> Result<ElementRelation> {
        let down = self.natural_order()?.transpose();
        Ok(ElementRelation::from_fn(RelationKind::Sigma, self.size(), |a, b| {
            !down.row(a).is_disjoint(down.row(b))
        }))
    }

    /// The least congruence (for `·` and `*`) identifying all projections,
    /// computed by closing generating pairs under translations.
    pub fn sigma_by_closure(&self) -> Result<ElementRelation> {
        self.require(Signature::Star, "sigma")?;
        self.guard("sigma closure")?;
        let n = self.size();
        let mut uf = UnionFind::new(n);
        let mut queue = Vec::new();
        let p = self.projections();
        for w in p.windows(2) {
            if uf.union(w[0], w[1]) {
                queue.push((w[0], w[1]));
            }
        }
        while let Some((a, b)) = queue.pop() {
            let mut push = |x: usize, y: usize, uf: &mut UnionFind| {
                if uf.union(x, y) {
                    queue.push((x, y));
                }
            };
            push(self.star(a), self.star(b), &mut uf);
            for c in 0..n {
                push(self.mul(a, c), self.mul(b, c), &mut uf);
                push(self.mul(c, a), self.mul(c, b), &mut uf);
            }
        }
        let root: Vec<usize> = (0..n).map(|a| uf.find(a)).collect();
        Ok(ElementRelation::from_fn(RelationKind::Sigma, n, |a, b| {
            root[a] == root[b]
        }))
    }

    /// σ, cross-checked against the closure computation.
    pub fn sigma_checked(&self) -> Result<ElementRelation> {
        let sigma = self.sigma()?;
        let oracle = self.sigma_by_closure()?;
        if !sigma.same_pairs(&oracle) {
            return Err(Error::Internal(
                "sigma from lower bounds disagrees with the least congruence".into(),
            ));
        }
        Ok(sigma)
    }

    /// First pair `s < t` (by index) with `s σ t`, `s* = t*` and `s ≠ t`.
    pub fn first_improper_pair(&self) -> Result<Option<(ElementId, ElementId)>> {
        let sigma = self.sigma()?;
        Ok(sigma
            .pairs()
            .into_iter()
            .find(|&(s, t)| s < t && self.star(s) == self.star(t)))
    }

    /// Proper by definition: `s σ t` and `s* = t*` imply `s = t`.
    pub fn is_proper(&self) -> Result<bool> {
        Ok(self.first_improper_pair()?.is_none())
    }

    /// Proper via the characterization `⌣ = σ`.
    pub fn check_proper_via_compat(&self) -> Result<bool> {
        Ok(self.compatibility()?.same_pairs(&self.sigma()?))
    }

    /// Both characterizations of properness, which must agree.
    pub fn proper_verdict(&self) -> Result<bool> {
        let by_def = self.is_proper()?;
        if by_def != self.check_proper_via_compat()? {
            return Err(Error::Internal("the two properness tests disagree".into()));
        }
        Ok(by_def)
    }

    pub fn require_proper(&self) -> Result<()> {
        match self.first_improper_pair()? {
            Some((s, t)) => Err(Error::NotProper(s, t)),
            None => Ok(()),
        }
    }

    /// `S/σ` and the quotient map. Classes are numbered by least member.
    pub fn quotient_by_sigma(&self) -> Result<(UnarySemigroup, Vec<usize>)> {
        let class = self.sigma_checked()?.classes();
        let k = class.iter().max().map_or(0, |m| m + 1);
        let mut rep = vec![usize::MAX; k];
        for (a, &c) in class.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = a;
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                if class[self.mul(a, b)] != class[self.mul(rep[class[a]], rep[class[b]])] {
                    return Err(Error::Internal("sigma is not a congruence".into()));
                }
            }
        }
        let mul = (0..k)
            .map(|c| (0..k).map(|d| class[self.mul(rep[c], rep[d])]).collect())
            .collect();
        let star = (0..k).map(|c| class[self.star(rep[c])]).collect();
        let plus = self.plus_table().map(|p| (0..k).map(|c| class[p[rep[c]]]).collect());
        let mut q = UnarySemigroup::build_from_table(mul, Some(star), plus)?;
        if let Some(labels) = self.labels() {
            q = q.with_labels(rep.iter().map(|&r| format!("[{}]", labels[r])).collect())?;
        }
        if q.projections().len() != 1 {
            return Err(Error::Internal("quotient has more than one projection".into()));
        }
        Ok((q, class))
    }

    /// Whether every σ-class has a maximum element.
    pub fn is_f_restriction(&self) -> Result<bool> {
        Ok(self.sigma_class_maxima()?.iter().all(Option::is_some))
    }

    /// Maximum of each σ-class, by class index.
    pub fn sigma_class_maxima(&self) -> Result<Vec<Option<ElementId>>> {
        let order = self.natural_order()?;
        let class = self.sigma_checked()?.classes();
        let k = class.iter().max().map_or(0, |m| m + 1);
        Ok((0..k)
            .map(|c| {
                let members: Vec<_> = self.elements().filter(|&a| class[a] == c).collect();
                members
                    .iter()
                    .copied()
                    .find(|&m| members.iter().all(|&a| order.contains(a, m)))
            })
            .collect())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut a = a;
        while self.parent[a] != r {
            let next = self.parent[a];
            self.parent[a] = r;
            a = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
