//! Constellations: partial products with right identities, and the passage
//! between inductive constellations and restriction semigroups.

use crate::category::{FiniteCategory, Slice, SliceSemigroup};
use crate::error::{Error, Result};
use crate::relation::{ElementRelation, RelationKind};
use crate::semigroup::{Axioms, Signature, UnarySemigroup, Verdict, Violation};
use crate::ElementId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constellation {
    size: usize,
    product: Vec<Option<ElementId>>,
    star: Vec<ElementId>,
    order: ElementRelation,
    /// `(s, e) ↦ s|_e`, indexed `s * size + e`.
    restriction: Vec<Option<ElementId>>,
    /// `(e, s) ↦ _e|s`, indexed `e * size + s`.
    corestriction: Vec<Option<ElementId>>,
    labels: Option<Vec<String>>,
}

impl Constellation {
    /// Derives the restriction and corestriction tables from the order.
    pub fn from_parts(
        product: Vec<Vec<Option<ElementId>>>,
        star: Vec<ElementId>,
        order: ElementRelation,
    ) -> Result<Self> {
        let n = product.len();
        if product.iter().any(|r| r.len() != n) || star.len() != n || order.size() != n {
            return Err(Error::SizeMismatch("constellation tables disagree".into()));
        }
        if product.iter().flatten().flatten().chain(&star).any(|&v| v >= n) {
            return Err(Error::SizeMismatch("constellation entry out of range".into()));
        }
        let mut q = Constellation {
            size: n,
            product: product.into_iter().flatten().collect(),
            star,
            order,
            restriction: vec![None; n * n],
            corestriction: vec![None; n * n],
            labels: None,
        };
        let p = q.projections();
        for s in 0..n {
            for &e in &p {
                q.restriction[s * n + e] = q.search_restriction(s, e);
                q.corestriction[e * n + s] = q.search_corestriction(e, s);
            }
        }
        Ok(q)
    }

    /// Uses the given restriction and corestriction tables as they are.
    pub fn with_tables(
        mut self,
        restriction: Vec<Vec<Option<ElementId>>>,
        corestriction: Vec<Vec<Option<ElementId>>>,
    ) -> Result<Self> {
        let n = self.size;
        if restriction.len() != n
            || corestriction.len() != n
            || restriction.iter().chain(&corestriction).any(|r| r.len() != n)
        {
            return Err(Error::SizeMismatch("restriction tables must be square".into()));
        }
        self.restriction = restriction.into_iter().flatten().collect();
        self.corestriction = corestriction.into_iter().flatten().collect();
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Self {
        self.labels = labels;
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn product(&self, s: ElementId, t: ElementId) -> Option<ElementId> {
        self.product[s * self.size + t]
    }

    pub fn star(&self, s: ElementId) -> ElementId {
        self.star[s]
    }

    pub fn leq(&self, s: ElementId, t: ElementId) -> bool {
        self.order.contains(s, t)
    }

    pub fn order(&self) -> &ElementRelation {
        &self.order
    }

    pub fn restriction(&self, s: ElementId, e: ElementId) -> Option<ElementId> {
        self.restriction[s * self.size + e]
    }

    pub fn corestriction(&self, e: ElementId, s: ElementId) -> Option<ElementId> {
        self.corestriction[e * self.size + s]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn product_rows(&self) -> Vec<Vec<Option<ElementId>>> {
        self.product.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn star_table(&self) -> &[ElementId] {
        &self.star
    }

    pub fn restriction_rows(&self) -> Vec<Vec<Option<ElementId>>> {
        self.restriction.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn corestriction_rows(&self) -> Vec<Vec<Option<ElementId>>> {
        self.corestriction.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// `P(Q) = {s* : s ∈ Q}`, sorted.
    pub fn projections(&self) -> Vec<ElementId> {
        let mut p = self.star.clone();
        p.sort_unstable();
        p.dedup();
        p
    }

    fn search_restriction(&self, s: ElementId, e: ElementId) -> Option<ElementId> {
        if !self.leq(e, self.star[s]) {
            return None;
        }
        let mut hits = (0..self.size).filter(|&t| self.leq(t, s) && self.star[t] == e);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    fn search_corestriction(&self, e: ElementId, s: ElementId) -> Option<ElementId> {
        let below: Vec<ElementId> = (0..self.size)
            .filter(|&t| self.leq(t, s) && self.product(e, t).is_some())
            .collect();
        below.iter().copied().find(|&m| below.iter().all(|&t| self.leq(t, m)))
    }

    /// Table equality, ignoring labels.
    pub fn same_tables(&self, other: &Constellation) -> bool {
        self.size == other.size
            && self.product == other.product
            && self.star == other.star
            && self.order.same_pairs(&other.order)
            && self.restriction == other.restriction
            && self.corestriction == other.corestriction
    }

    /// (Q1)–(Q4). Right identities of `s` are sought among the elements `e`
    /// with `e·x = x` whenever `e·x` is defined.
    pub fn check_constellation(&self) -> Verdict {
        let n = self.size;
        for s in 0..n {
            for t in 0..n {
                let Some(st) = self.product(s, t) else { continue };
                for u in 0..n {
                    if let Some(stu) = self.product(st, u) {
                        let rhs = self.product(t, u).and_then(|tu| self.product(s, tu));
                        if rhs != Some(stu) {
                            return Verdict::Fail(Violation::new("Q1", vec![s, t, u]));
                        }
                    }
                    if self.product(t, u).is_some() && self.product(st, u).is_none() {
                        return Verdict::Fail(Violation::new("Q2", vec![s, t, u]));
                    }
                }
            }
        }
        let identity: Vec<bool> = (0..n)
            .map(|e| (0..n).all(|x| self.product(e, x).is_none_or(|v| v == x)))
            .collect();
        for s in 0..n {
            let ids: Vec<ElementId> = (0..n)
                .filter(|&e| identity[e] && self.product(s, e) == Some(s))
                .collect();
            if ids != [self.star[s]] {
                return Verdict::Fail(Violation::new("Q3", std::iter::once(s).chain(ids).collect()));
            }
        }
        for s in 0..n {
            for t in 0..n {
                if let Some(v) = self.product(self.star[s], t) {
                    if v != t {
                        return Verdict::Fail(Violation::new("Q4", vec![s, t]));
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// (Q1)–(Q4), (O1)–(O6) and (I).
    pub fn check_inductive(&self) -> Verdict {
        if let Verdict::Fail(v) = self.check_constellation() {
            return Verdict::Fail(v);
        }
        self.ordered_violation().into()
    }

    fn ordered_violation(&self) -> Option<Violation> {
        let n = self.size;
        let fail = |law: &str, w: Vec<ElementId>| Some(Violation::new(law, w));
        if !self.order.is_partial_order() {
            return fail("order is a partial order", vec![]);
        }
        for s in 0..n {
            for u in 0..n {
                let Some(su) = self.product(s, u) else { continue };
                for t in self.order.row(s).ones() {
                    for v in self.order.row(u).ones() {
                        if let Some(tv) = self.product(t, v) {
                            if !self.leq(su, tv) {
                                return fail("O1", vec![s, t, u, v]);
                            }
                        }
                    }
                }
            }
        }
        for (s, t) in self.order.pairs() {
            if !self.leq(self.star[s], self.star[t]) {
                return fail("O2", vec![s, t]);
            }
        }
        let p = self.projections();
        for s in 0..n {
            for &e in &p {
                let expected = self.search_restriction(s, e);
                if self.leq(e, self.star[s]) && expected.is_none() {
                    return fail("O3", vec![s, e]);
                }
                if self.restriction(s, e) != expected {
                    return fail("O3", vec![s, e]);
                }
            }
        }
        for &e in &p {
            for s in 0..n {
                let expected = self.search_corestriction(e, s);
                if expected.is_none() || self.corestriction(e, s) != expected {
                    return fail("O4", vec![e, s]);
                }
            }
        }
        for s in 0..n {
            for t in 0..n {
                let Some(st) = self.product(s, t) else { continue };
                for &e in &p {
                    let lhs = self.star[self.corestriction(e, st).unwrap()];
                    let f = self.star[self.corestriction(e, s).unwrap()];
                    let rhs = self.star[self.corestriction(f, t).unwrap()];
                    if lhs != rhs {
                        return fail("O5", vec![s, t, e]);
                    }
                }
            }
        }
        for &e in &p {
            for &f in &p {
                if let Some(r) = self.restriction(e, f) {
                    if Some(r) != self.corestriction(f, e) {
                        return fail("O6", vec![e, f]);
                    }
                }
            }
        }
        for &e in &p {
            for &f in &p {
                let m = self.corestriction(f, e).unwrap();
                let lower: Vec<_> = p
                    .iter()
                    .copied()
                    .filter(|&g| self.leq(g, e) && self.leq(g, f))
                    .collect();
                if !p.contains(&m) || !lower.contains(&m) || !lower.iter().all(|&g| self.leq(g, m)) {
                    return fail("I", vec![e, f]);
                }
            }
        }
        None
    }
}

/// The inductive constellation of a restriction semigroup: `s ∘ t = st`
/// when `s* t = t`, with the natural order, `s|_e = se` and `_e|s = es`.
pub fn p_of(s: &UnarySemigroup) -> Result<Constellation> {
    s.require(Signature::Star, "constellation")?;
    s.require_restriction()?;
    let n = s.size();
    let product = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| (s.mul(s.star(a), b) == b).then(|| s.mul(a, b)))
                .collect()
        })
        .collect();
    let order = s.natural_order()?;
    let q = Constellation::from_parts(product, s.star_table().unwrap().to_vec(), order)?
        .with_labels(s.labels().map(<[String]>::to_vec));
    for a in 0..n {
        for e in s.projections() {
            if q.leq(e, s.star(a)) && q.restriction(a, e) != Some(s.mul(a, e)) {
                return Err(Error::Internal(format!("restriction of {a} to {e} is not {a}{e}")));
            }
            if q.corestriction(e, a) != Some(s.mul(e, a)) {
                return Err(Error::Internal(format!("corestriction of {a} by {e} is not {e}{a}")));
            }
        }
    }
    if let Verdict::Fail(v) = q.check_inductive() {
        return Err(Error::Internal(format!(
            "constellation of a restriction semigroup fails {v}"
        )));
    }
    Ok(q)
}

/// The restriction semigroup of an inductive constellation under the
/// pseudoproduct `s ⊗ t = s · _{s*}|t`.
pub fn t_of(q: &Constellation) -> Result<UnarySemigroup> {
    if let Verdict::Fail(v) = q.check_inductive() {
        return Err(Error::NotInductive(v.to_string()));
    }
    let n = q.size();
    let mut mul = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let c = q.corestriction(q.star(a), b).unwrap();
            mul[a][b] = q
                .product(a, c)
                .ok_or_else(|| Error::Internal(format!("pseudoproduct of {a},{b} undefined")))?;
        }
    }
    let mut s = UnarySemigroup::build_from_table(mul, Some(q.star_table().to_vec()), None)?;
    if let Some(l) = q.labels() {
        s = s.with_labels(l.to_vec())?;
    }
    if let Verdict::Fail(v) = s.check_axioms(Axioms::Restriction)? {
        return Err(Error::Internal(format!("pseudoproduct is not restriction: {v}")));
    }
    Ok(s)
}

/// The constellation of a family of slices, defined at set level, compared
/// with the constellation of the semigroup the family forms.
#[derive(Clone, Debug)]
pub struct SliceConstellation {
    pub constellation: Constellation,
    pub semigroup: SliceSemigroup,
    /// Agreement of the set-level tables with the semigroup-level ones.
    pub clauses: Verdict,
}

pub fn slice_constellation(c: &FiniteCategory, family: Vec<Slice>) -> Result<SliceConstellation> {
    let sg = SliceSemigroup::from_family(c, family)?;
    let slices = &sg.slices;
    let n = slices.len();
    let find = |s: &Slice| {
        sg.index_of(s)
            .ok_or_else(|| Error::Invalid("family not closed under restriction".into()))
    };
    let product = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let ran = c.slice_ran(&slices[j]);
                    if ran.is_subset(&c.slice_star(&slices[i])) {
                        c.slice_product(&slices[i], &slices[j]).and_then(|p| find(&p)).map(Some)
                    } else {
                        Ok(None)
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let star = (0..n)
        .map(|i| find(&c.slice_star(&slices[i])))
        .collect::<Result<Vec<_>>>()?;
    let order = ElementRelation::from_fn(RelationKind::Order, n, |i, j| slices[i].is_subset(&slices[j]));
    let mut restriction = vec![vec![None; n]; n];
    let mut corestriction = vec![vec![None; n]; n];
    let proj: Vec<usize> = {
        let mut p = star.clone();
        p.sort_unstable();
        p.dedup();
        p
    };
    for s in 0..n {
        for &e in &proj {
            let units = &slices[e];
            if units.is_subset(&slices[star[s]]) {
                let r = c.set_of(slices[s].ones().filter(|&x| units.contains(c.dom(x))));
                restriction[s][e] = Some(find(&r)?);
            }
            let co = c.set_of(slices[s].ones().filter(|&x| units.contains(c.ran(x))));
            corestriction[e][s] = Some(find(&co)?);
        }
    }
    let q = Constellation::from_parts(product, star, order)?
        .with_tables(restriction, corestriction)?
        .with_labels(sg.semigroup.labels().map(<[String]>::to_vec));
    let from_semigroup = p_of(&sg.semigroup)?;
    let clauses = slice_clause_violation(&q, &from_semigroup).into();
    Ok(SliceConstellation {
        constellation: q,
        semigroup: sg,
        clauses,
    })
}

fn slice_clause_violation(set_level: &Constellation, algebraic: &Constellation) -> Option<Violation> {
    let n = set_level.size();
    for s in 0..n {
        for t in 0..n {
            if set_level.product(s, t) != algebraic.product(s, t) {
                return Some(Violation::new("composable iff dom(s) contains ran(t)", vec![s, t]));
            }
            if set_level.leq(s, t) != algebraic.leq(s, t) {
                return Some(Violation::new("order is inclusion", vec![s, t]));
            }
        }
    }
    for s in 0..n {
        for e in algebraic.projections() {
            if set_level.restriction(s, e) != algebraic.restriction(s, e) {
                return Some(Violation::new("s|e = se", vec![s, e]));
            }
            if set_level.corestriction(e, s) != algebraic.corestriction(e, s) {
                return Some(Violation::new("e|s = es", vec![e, s]));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiantReport {
    pub radiant: bool,
    pub strong: bool,
    pub isomorphism: bool,
    /// First failed condition, if any.
    pub failure: Option<Violation>,
}

/// Checks the four radiant conditions, then the strong forms of the first
/// and third.
pub fn check_radiant(rho: &[ElementId], q: &Constellation, r: &Constellation) -> Result<RadiantReport> {
    if rho.len() != q.size() || rho.iter().any(|&x| x >= r.size()) {
        return Err(Error::SizeMismatch("map does not fit the constellations".into()));
    }
    let n = q.size();
    let mut failure = None;
    let mut note = |v: Violation| {
        if failure.is_none() {
            failure = Some(v);
        }
    };
    let mut radiant = true;
    for s in 0..n {
        for t in 0..n {
            if let Some(st) = q.product(s, t) {
                if r.product(rho[s], rho[t]) != Some(rho[st]) {
                    radiant = false;
                    note(Violation::new("(1) preserves products", vec![s, t]));
                }
            }
            if q.leq(s, t) && !r.leq(rho[s], rho[t]) {
                radiant = false;
                note(Violation::new("(3) monotone", vec![s, t]));
            }
        }
        if rho[q.star(s)] != r.star(rho[s]) {
            radiant = false;
            note(Violation::new("(2) preserves star", vec![s]));
        }
        for e in q.projections() {
            let lhs = q.corestriction(e, s).map(|c| rho[c]);
            if lhs != r.corestriction(rho[e], rho[s]) {
                radiant = false;
                note(Violation::new("(4) preserves corestriction", vec![e, s]));
            }
        }
    }
    let mut strong = radiant;
    if radiant {
        for s in 0..n {
            for t in 0..n {
                if q.product(s, t).is_none() && r.product(rho[s], rho[t]).is_some() {
                    strong = false;
                    note(Violation::new("(1') reflects products", vec![s, t]));
                }
                if !q.leq(s, t) && r.leq(rho[s], rho[t]) {
                    strong = false;
                    note(Violation::new("(3') reflects order", vec![s, t]));
                }
            }
        }
    }
    let mut image = rho.to_vec();
    image.sort_unstable();
    image.dedup();
    let bijective = image.len() == n && n == r.size();
    Ok(RadiantReport {
        radiant,
        strong,
        isomorphism: strong && bijective,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::full_pt;

    fn two_identities() -> Constellation {
        let product = vec![
            vec![None, Some(0), Some(0)],
            vec![None, Some(1), Some(2)],
            vec![None, Some(1), Some(2)],
        ];
        let order = ElementRelation::from_fn(RelationKind::Order, 3, |a, b| a == b);
        Constellation::from_parts(product, vec![1, 1, 2], order).unwrap()
    }

    #[test]
    fn trivial_round_trip() {
        let s = UnarySemigroup::build_from_table(vec![vec![0]], Some(vec![0]), None).unwrap();
        let q = p_of(&s).unwrap();
        assert!(q.check_inductive().is_pass());
        assert_eq!(t_of(&q).unwrap(), s);
    }

    #[test]
    fn pt2_round_trips() {
        let s = full_pt(2).unwrap().0.drop_plus();
        let q = p_of(&s).unwrap();
        let t = t_of(&q).unwrap();
        assert_eq!(t.mul_rows(), s.mul_rows());
        assert!(p_of(&t).unwrap().same_tables(&q));
    }

    #[test]
    fn two_right_identities() {
        let q = two_identities();
        let v = q.check_constellation();
        assert_eq!(v.violation().unwrap().law, "Q3");
        assert_eq!(v.violation().unwrap().witness, vec![0, 1, 2]);
    }

    #[test]
    fn non_inductive_rejected() {
        let q = two_identities();
        assert!(matches!(t_of(&q), Err(Error::NotInductive(_))));
    }

    #[test]
    fn identity_is_isomorphism() {
        let s = full_pt(2).unwrap().0.drop_plus();
        let q = p_of(&s).unwrap();
        let id: Vec<_> = (0..q.size()).collect();
        let r = check_radiant(&id, &q, &q).unwrap();
        assert!(r.isomorphism);
    }

    #[test]
    fn semilattice_products() {
        let mul = (0..3).map(|a| (0..3).map(|b| a.min(b)).collect()).collect();
        let s = UnarySemigroup::build_from_table(mul, Some(vec![0, 1, 2]), None).unwrap();
        let q = p_of(&s).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(q.product(a, b).is_some(), b <= a);
            }
        }
    }
}
