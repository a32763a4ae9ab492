//! Actions on finite sets, categories of germs and the universal category.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::category::{ArrowId, FiniteCategory, Slice, SliceSemigroup};
use crate::error::{Error, Result};
use crate::lattice::{set_difference, FinSemilattice};
use crate::pmap::PartialMap;
use crate::relation::ElementRelation;
use crate::semigroup::{Axioms, Signature, UnarySemigroup, Verdict, Violation};
use crate::ElementId;

/// A (·,*)-morphism from a semigroup into the partial maps of `0..space`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionAction {
    pub semigroup: UnarySemigroup,
    pub space: usize,
    pub theta: Vec<PartialMap>,
}

impl RestrictionAction {
    pub fn new(semigroup: UnarySemigroup, space: usize, theta: Vec<PartialMap>) -> Result<Self> {
        semigroup.require(Signature::Star, "action")?;
        if theta.len() != semigroup.size() {
            return Err(Error::SizeMismatch(format!(
                "{} maps for {} elements",
                theta.len(),
                semigroup.size()
            )));
        }
        if theta.iter().any(|t| t.ground() != space) {
            return Err(Error::SizeMismatch("map on the wrong ground set".into()));
        }
        Ok(RestrictionAction {
            semigroup,
            space,
            theta,
        })
    }

    /// Each element acts as its own partial map.
    pub fn tautological(semigroup: UnarySemigroup, maps: Vec<PartialMap>) -> Result<Self> {
        let space = maps.first().map_or(0, PartialMap::ground);
        Self::new(semigroup, space, maps)
    }

    pub fn defined(&self, s: ElementId, x: usize) -> bool {
        self.theta[s].is_defined(x)
    }

    pub fn act(&self, s: ElementId, x: usize) -> Option<usize> {
        self.theta[s].apply(x)
    }

    /// Morphism law, star law and non-degeneracy. Witnesses list elements
    /// followed by the offending point.
    pub fn check_action(&self) -> Verdict {
        let s = &self.semigroup;
        for a in s.elements() {
            let expected = self.theta[a].dom_identity();
            if let Some(x) = (0..self.space).find(|&x| self.theta[s.star(a)].apply(x) != expected.apply(x)) {
                return Verdict::Fail(Violation::new("theta(s*) = identity on dom theta(s)", vec![a, x]));
            }
        }
        for a in s.elements() {
            for b in s.elements() {
                let composed = self.theta[a].after(&self.theta[b]);
                let ab = s.mul(a, b);
                if let Some(x) = (0..self.space).find(|&x| self.theta[ab].apply(x) != composed.apply(x)) {
                    return Verdict::Fail(Violation::new("theta(st) = theta(s) theta(t)", vec![a, b, x]));
                }
            }
        }
        let p = s.projections();
        if let Some(x) = (0..self.space).find(|&x| !p.iter().any(|&e| self.defined(e, x))) {
            return Verdict::Fail(Violation::new("non-degenerate", vec![x]));
        }
        Verdict::Pass
    }

    fn require_valid(&self) -> Result<()> {
        match self.check_action() {
            Verdict::Pass => Ok(()),
            Verdict::Fail(v) => Err(Error::InvalidAction(v.to_string())),
        }
    }
}

/// The action of a semigroup with local units on the spectrum of its
/// projections. Point `i` is the filter generated by projection `points[i]`.
#[derive(Clone, Debug)]
pub struct SpectralAction {
    pub action: RestrictionAction,
    pub points: Vec<ElementId>,
    pub semilattice: FinSemilattice,
}

impl SpectralAction {
    pub fn point_of(&self, e: ElementId) -> Option<usize> {
        self.points.binary_search(&e).ok()
    }
}

/// `β_s(e↑) = f↑` where `f` is the least projection `h` with `(hs)* ≥ e`,
/// defined for `e ≤ s*`.
pub fn spectral_action(s: &UnarySemigroup) -> Result<SpectralAction> {
    s.require(Signature::Star, "spectral action")?;
    s.require_restriction()?;
    s.require_local_units()?;
    let (e, points) = FinSemilattice::of_projections(s)?;
    let k = points.len();
    let pos = |x: ElementId| points.binary_search(&x).expect("projection");
    let mut theta = Vec::with_capacity(s.size());
    for a in s.elements() {
        let star = pos(s.star(a));
        let mut map = vec![None; k];
        for i in 0..k {
            if !e.leq(i, star) {
                continue;
            }
            let hits: Vec<usize> = (0..k).filter(|&h| e.leq(i, pos(s.star(s.mul(points[h], a))))).collect();
            let least = hits
                .iter()
                .copied()
                .find(|&f| hits.iter().all(|&h| e.leq(f, h)))
                .ok_or_else(|| Error::Internal(format!("no least projection for {a} at point {i}")))?;
            let hits_set = crate::lattice::set_of(k, hits.iter().copied());
            if hits_set != e.up(least) {
                return Err(Error::Internal(format!(
                    "image of point {i} under {a} is not principal"
                )));
            }
            map[i] = Some(least);
        }
        theta.push(PartialMap::new(k, map)?);
    }
    let action = RestrictionAction::new(s.clone(), k, theta)?;
    action.require_valid()?;
    Ok(SpectralAction {
        action,
        points,
        semilattice: e,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Germ {
    pub elem: ElementId,
    pub point: usize,
}

#[derive(Clone, Debug)]
pub struct GermCategory {
    pub category: FiniteCategory,
    /// Canonical representative of each arrow.
    pub germs: Vec<Germ>,
    /// The unit arrow sitting over each point of the space.
    pub point_unit: Vec<ArrowId>,
    index: HashMap<Germ, ArrowId>,
    canon: HashMap<(ElementId, usize), Germ>,
}

impl GermCategory {
    pub fn arrow_count(&self) -> usize {
        self.germs.len()
    }

    /// The arrow `[s, x]`, if `x` lies in the domain of `θ_s`.
    pub fn arrow(&self, s: ElementId, x: usize) -> Option<ArrowId> {
        self.canon.get(&(s, x)).map(|g| self.index[g])
    }

    pub fn canonical(&self, s: ElementId, x: usize) -> Option<Germ> {
        self.canon.get(&(s, x)).copied()
    }
}

fn least_in(order: &ElementRelation, set: &[ElementId]) -> Option<ElementId> {
    set.iter().copied().find(|&m| set.iter().all(|&a| order.contains(m, a)))
}

/// The category of germs of a valid action, with every construction step
/// checked against the definition of germ equivalence.
pub fn germ_category(action: &RestrictionAction) -> Result<GermCategory> {
    action.require_valid()?;
    let s = &action.semigroup;
    s.guard("germ category")?;
    let order = s.natural_order()?;
    let down = order.transpose();

    let mut canon: HashMap<(ElementId, usize), Germ> = HashMap::new();
    for a in s.elements() {
        for x in 0..action.space {
            if !action.defined(a, x) {
                continue;
            }
            let below: Vec<ElementId> = down.row(a).ones().filter(|&u| action.defined(u, x)).collect();
            let m = least_in(&order, &below)
                .ok_or_else(|| Error::Internal(format!("no least germ representative below ({a},{x})")))?;
            canon.insert((a, x), Germ { elem: m, point: x });
        }
    }

    for x in 0..action.space {
        let here: Vec<ElementId> = s.elements().filter(|&a| action.defined(a, x)).collect();
        for &a in &here {
            for &b in &here {
                let by_definition = down
                    .row(a)
                    .ones()
                    .any(|u| down.row(b).contains(u) && action.defined(u, x));
                if by_definition != (canon[&(a, x)] == canon[&(b, x)]) {
                    return Err(Error::Internal(format!("germ equality wrong for ({a},{x}), ({b},{x})")));
                }
            }
        }
    }

    let mut germs: Vec<Germ> = canon.values().copied().collect();
    germs.sort();
    germs.dedup();
    let index: HashMap<Germ, ArrowId> = germs.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    let arrow = |a: ElementId, x: usize| index[&canon[&(a, x)]];

    let p = s.projections();
    let mut point_unit = Vec::with_capacity(action.space);
    for y in 0..action.space {
        let units: Vec<ArrowId> = p
            .iter()
            .filter(|&&e| action.defined(e, y))
            .map(|&e| arrow(e, y))
            .collect();
        if units.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Internal(format!("projections disagree over point {y}")));
        }
        point_unit.push(units[0]);
    }

    let dom: Vec<ArrowId> = germs.iter().map(|g| arrow(s.star(g.elem), g.point)).collect();
    let ran: Vec<ArrowId> = germs
        .iter()
        .map(|g| point_unit[action.act(g.elem, g.point).expect("germ point in domain")])
        .collect();

    let mut products = Vec::new();
    let mut product_of = HashMap::new();
    for (i, g) in germs.iter().enumerate() {
        for (j, h) in germs.iter().enumerate() {
            if action.act(h.elem, h.point) == Some(g.point) {
                let k = arrow(s.mul(g.elem, h.elem), h.point);
                products.push((i, j, k));
                product_of.insert((i, j), k);
            }
        }
    }
    for y in 0..action.space {
        for t in s.elements().filter(|&t| action.defined(t, y)) {
            let x = action.act(t, y).unwrap();
            for a in s.elements().filter(|&a| action.defined(a, x)) {
                let expected = arrow(s.mul(a, t), y);
                let (i, j) = (arrow(a, x), arrow(t, y));
                if product_of.get(&(i, j)) != Some(&expected) {
                    return Err(Error::Internal(format!(
                        "product of germs depends on representatives at ({a},{x}),({t},{y})"
                    )));
                }
            }
        }
    }

    let labels = germs
        .iter()
        .map(|g| format!("[{},{}]", s.label(g.elem), g.point))
        .collect();
    let category = FiniteCategory::new(dom, ran, &products, labels)?;

    let mut units = point_unit.clone();
    units.sort_unstable();
    units.dedup();
    if units.len() != action.space || units != category.units() {
        return Err(Error::Internal("units are not in bijection with the space".into()));
    }

    Ok(GermCategory {
        category,
        germs,
        point_unit,
        index,
        canon: canon.into_iter().collect(),
    })
}

/// The germ category of the spectral action, where arrow `i` is the germ
/// `[s, (s*)↑]` of element `i`.
#[derive(Clone, Debug)]
pub struct UniversalCategory {
    pub germs: GermCategory,
    pub spectral: SpectralAction,
}

impl UniversalCategory {
    pub fn category(&self) -> &FiniteCategory {
        &self.germs.category
    }

    pub fn semigroup(&self) -> &UnarySemigroup {
        &self.spectral.action.semigroup
    }

    /// `ι(s) = {[t, (t*)↑] : t ≤ s}` as a set of arrows.
    pub fn iota(&self, s: ElementId) -> Slice {
        self.category().set_of(
            self.spectral.action.theta[s]
                .domain()
                .map(|y| self.germs.arrow(s, y).unwrap()),
        )
    }

    /// Elements whose arrows form the slice `w`.
    pub fn elements_of(&self, w: &Slice) -> Vec<ElementId> {
        w.ones().collect()
    }
}

pub fn universal_category(s: &UnarySemigroup) -> Result<UniversalCategory> {
    let spectral = spectral_action(s)?;
    let germs = germ_category(&spectral.action)?;
    let n = s.size();
    if germs.arrow_count() != n {
        return Err(Error::Internal(format!(
            "universal category has {} arrows for {n} elements",
            germs.arrow_count()
        )));
    }
    for a in s.elements() {
        let x = spectral.point_of(s.star(a)).unwrap();
        if germs.germs[a] != (Germ { elem: a, point: x }) {
            return Err(Error::Internal(format!("arrow {a} is not the germ of element {a}")));
        }
    }
    for a in s.elements() {
        for b in s.elements() {
            for (x, &e) in spectral.points.iter().enumerate() {
                let (Some(ga), Some(gb)) = (germs.canonical(a, x), germs.canonical(b, x)) else {
                    continue;
                };
                if ga
                    != (Germ {
                        elem: s.mul(a, e),
                        point: x,
                    })
                    || (ga == gb) != (s.mul(a, e) == s.mul(b, e))
                {
                    return Err(Error::Internal(format!(
                        "spectral germ equality fails for {a},{b} at {e}"
                    )));
                }
            }
        }
    }
    Ok(UniversalCategory { germs, spectral })
}

#[derive(Clone, Debug)]
pub struct ThetaEmbedding {
    /// `Θ(s) = {[s, x] : x ∈ dom θ_s}`.
    pub slices: Vec<Slice>,
    pub morphism: Verdict,
    pub injective: bool,
}

pub fn theta_embedding(action: &RestrictionAction, gc: &GermCategory) -> Result<ThetaEmbedding> {
    let s = &action.semigroup;
    let c = &gc.category;
    let slices: Vec<Slice> = s
        .elements()
        .map(|a| c.set_of(action.theta[a].domain().map(|x| gc.arrow(a, x).unwrap())))
        .collect();
    if let Some(a) = slices.iter().position(|u| !c.is_slice(u)) {
        return Err(Error::Internal(format!("Theta({a}) is not a slice")));
    }
    let mut morphism = Verdict::Pass;
    'outer: for a in s.elements() {
        if c.slice_star(&slices[a]) != slices[s.star(a)] {
            morphism = Verdict::Fail(Violation::new("Theta(s*) = Theta(s)*", vec![a]));
            break;
        }
        for b in s.elements() {
            if c.slice_product(&slices[a], &slices[b])? != slices[s.mul(a, b)] {
                morphism = Verdict::Fail(Violation::new("Theta(st) = Theta(s)Theta(t)", vec![a, b]));
                break 'outer;
            }
        }
    }
    let mut sorted = slices.clone();
    sorted.sort();
    sorted.dedup();
    let injective = sorted.len() == slices.len();
    Ok(ThetaEmbedding {
        slices,
        morphism,
        injective,
    })
}

/// ι for a semigroup with local units, checked against `{t : t ≤ s}`.
pub fn iota_embedding(u: &UniversalCategory) -> Result<ThetaEmbedding> {
    let emb = theta_embedding(&u.spectral.action, &u.germs)?;
    let order = u.semigroup().natural_order()?;
    for (a, slice) in emb.slices.iter().enumerate() {
        let below = u
            .category()
            .set_of(u.semigroup().elements().filter(|&t| order.contains(t, a)));
        if slice != &below || slice != &u.iota(a) {
            return Err(Error::Internal(format!(
                "iota({a}) is not the set of elements below it"
            )));
        }
    }
    Ok(emb)
}

/// For a range semigroup: `ran(Θ(s)) = Θ(s⁺)` for every `s`.
pub fn theta_preserves_plus(action: &RestrictionAction, emb: &ThetaEmbedding, gc: &GermCategory) -> Result<Verdict> {
    let s = &action.semigroup;
    s.require(Signature::StarPlus, "plus preservation")?;
    for a in s.elements() {
        if gc.category.slice_ran(&emb.slices[a]) != emb.slices[s.plus(a)] {
            return Ok(Verdict::Fail(Violation::new("ran(Theta(s)) = Theta(s+)", vec![a])));
        }
    }
    Ok(Verdict::Pass)
}

#[derive(Clone, Debug)]
pub struct RangeOplus {
    /// `s⊕`: the least projection `e` with `(es)* ≥ s*`.
    pub table: Vec<ElementId>,
    /// Range axioms for `(S, ·, *, ⊕)`.
    pub verdict: Verdict,
}

pub fn range_oplus(s: &UnarySemigroup) -> Result<RangeOplus> {
    let spectral = spectral_action(s)?;
    let order = s.natural_order()?;
    let p = s.projections();
    let mut table = Vec::with_capacity(s.size());
    for a in s.elements() {
        let hits: Vec<ElementId> = p
            .iter()
            .copied()
            .filter(|&e| order.contains(s.star(a), s.star(s.mul(e, a))))
            .collect();
        let least = least_in(&order, &hits).ok_or_else(|| Error::Internal(format!("no least projection for {a}")))?;
        let x = spectral.point_of(s.star(a)).unwrap();
        if spectral.action.act(a, x).map(|y| spectral.points[y]) != Some(least) {
            return Err(Error::Internal(format!(
                "oplus of {a} disagrees with the spectral action"
            )));
        }
        table.push(least);
    }
    let extended = s.with_plus(table.clone())?;
    let verdict = extended.check_axioms(Axioms::Range)?;
    Ok(RangeOplus { table, verdict })
}

/// Whether `ran(ι(s))` is `ι(e)` for some projection `e`, for every `s`.
pub fn iota_ranges_are_projections(u: &UniversalCategory) -> bool {
    let c = u.category();
    let s = u.semigroup();
    let p = s.projections();
    s.elements().all(|a| {
        let r = c.slice_ran(&u.iota(a));
        p.iter().any(|&e| u.iota(e) == r)
    })
}

/// Arrows `S`, `dom s = s*`, `ran s = s⁺`, and `st` defined when `s* = t⁺`.
pub fn underlying_category(s: &UnarySemigroup) -> Result<FiniteCategory> {
    s.require(Signature::StarPlus, "underlying category")?;
    if let Verdict::Fail(v) = s.check_axioms(Axioms::Range)? {
        return Err(Error::NotRange(v.to_string()));
    }
    let products: Vec<_> = s
        .elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| s.star(a) == s.plus(b))
        .map(|(a, b)| (a, b, s.mul(a, b)))
        .collect();
    let labels = s.elements().map(|a| s.label(a)).collect();
    FiniteCategory::new(
        s.star_table().unwrap().to_vec(),
        s.plus_table().unwrap().to_vec(),
        &products,
        labels,
    )
}

/// Checks that `s ↦ [s, (s*)↑]` is an isomorphism from the underlying
/// category onto the universal category.
pub fn underlying_matches_universal(s: &UnarySemigroup) -> Result<Verdict> {
    let under = underlying_category(s)?;
    let u = universal_category(&s.drop_plus())?;
    let map: Vec<ArrowId> = s.elements().collect();
    Ok(under.isomorphism_violation(u.category(), &map).into())
}

/// The extension of `α: S → slices of D` to the slices of the universal
/// category of `S`.
#[derive(Clone, Debug)]
pub struct BooleanizationExtension {
    pub universal: UniversalCategory,
    pub booleanization: SliceSemigroup,
    /// `psi[i]` is the image of slice `i` of the universal category.
    pub psi: Vec<Slice>,
}

pub fn booleanization_extend(
    s: &UnarySemigroup,
    target: &FiniteCategory,
    alpha: &[Slice],
    slice_limit: usize,
) -> Result<BooleanizationExtension> {
    if alpha.len() != s.size() {
        return Err(Error::SizeMismatch("alpha must have one slice per element".into()));
    }
    if let Some(a) = alpha.iter().position(|u| !target.is_slice(u)) {
        return Err(Error::NotASlice(format!("alpha({a})")));
    }
    for a in s.elements() {
        if target.slice_star(&alpha[a]) != alpha[s.star(a)] {
            return Err(Error::NotMorphism(format!("alpha({a}*) != alpha({a})*")));
        }
        for b in s.elements() {
            if target.slice_product(&alpha[a], &alpha[b])? != alpha[s.mul(a, b)] {
                return Err(Error::NotMorphism(format!("alpha({a}{b}) != alpha({a})alpha({b})")));
            }
        }
    }
    let p = s.projections();
    let covered = p.iter().fold(target.empty_set(), |acc, &e| &acc | &alpha[e]);
    if covered != target.set_of(target.units()) {
        return Err(Error::DegenerateOnProjections);
    }

    let universal = universal_category(s)?;
    let booleanization = universal.category().slice_semigroup(slice_limit)?;
    let order = s.natural_order()?;
    let union = |sets: &mut dyn Iterator<Item = FixedBitSet>| sets.fold(target.empty_set(), |acc, x| &acc | &x);

    let mut psi = Vec::with_capacity(booleanization.slices.len());
    for w in &booleanization.slices {
        let members = universal.elements_of(w);
        let by_atoms = union(&mut members.iter().map(|&t| {
            let st = s.star(t);
            p.iter()
                .filter(|&&f| f != st && order.contains(f, st))
                .fold(alpha[t].clone(), |acc, &f| set_difference(&acc, &alpha[s.mul(t, f)]))
        }));
        let by_cover = union(&mut members.iter().map(|&t| {
            let st = s.star(t);
            p.iter()
                .filter(|&&f| order.contains(f, st) && !w.contains(s.mul(t, f)))
                .fold(alpha[t].clone(), |acc, &f| set_difference(&acc, &alpha[s.mul(t, f)]))
        }));
        if by_atoms != by_cover {
            return Err(Error::Internal(format!("decompositions of slice {members:?} disagree")));
        }
        psi.push(by_atoms);
    }

    let ext = BooleanizationExtension {
        universal,
        booleanization,
        psi,
    };
    ext.verify(s, target, alpha)?;
    Ok(ext)
}

impl BooleanizationExtension {
    fn verify(&self, s: &UnarySemigroup, target: &FiniteCategory, alpha: &[Slice]) -> Result<()> {
        let b = &self.booleanization.semigroup;
        let fail = |what: String| Err(Error::Internal(what));
        if let Some(i) = self.psi.iter().position(|u| !target.is_slice(u)) {
            return fail(format!("psi of slice {i} is not a slice"));
        }
        for a in s.elements() {
            let i = self.booleanization.index_of(&self.universal.iota(a)).unwrap();
            if self.psi[i] != alpha[a] {
                return fail(format!("alpha({a}) != psi(iota({a}))"));
            }
        }
        for i in b.elements() {
            if self.psi[b.star(i)] != target.slice_star(&self.psi[i]) {
                return fail(format!("psi does not preserve star at {i}"));
            }
            for j in b.elements() {
                if self.psi[b.mul(i, j)] != target.slice_product(&self.psi[i], &self.psi[j])? {
                    return fail(format!("psi does not preserve the product at {i},{j}"));
                }
            }
        }
        let proj = b.projections();
        let c = self.universal.category();
        for &e in &proj {
            for &f in &proj {
                let (se, sf) = (&self.booleanization.slices[e], &self.booleanization.slices[f]);
                let idx = |x: &Slice| self.booleanization.index_of(x).unwrap();
                let (pe, pf) = (&self.psi[e], &self.psi[f]);
                if self.psi[idx(&(se | sf))] != pe | pf
                    || self.psi[idx(&(se & sf))] != pe & pf
                    || self.psi[idx(&set_difference(se, sf))] != set_difference(pe, pf)
                {
                    return fail(format!("psi is not a lattice morphism at {e},{f}"));
                }
            }
        }
        let empty = self.booleanization.index_of(&c.empty_set()).unwrap();
        if self.psi[empty].count_ones(..) != 0 {
            return fail("psi does not fix the empty slice".into());
        }
        let covered = proj.iter().fold(target.empty_set(), |acc, &e| &acc | &self.psi[e]);
        if covered != target.set_of(target.units()) {
            return fail("psi is degenerate on projections".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::{generate_in_pt, symmetric_inverse, Closure};

    fn two_point_maps() -> (UnarySemigroup, Vec<PartialMap>) {
        let f = PartialMap::new(2, vec![Some(0), None]).unwrap();
        let g = PartialMap::new(2, vec![Some(1), None]).unwrap();
        let (s, maps) = generate_in_pt(2, &[f, g, PartialMap::identity(2)], Closure::STAR).unwrap();
        // Discovery order is f, g, 1, ∅.
        let s = s.permuted(&[3, 0, 1, 2]).unwrap();
        let maps = [3, 0, 1, 2].iter().map(|&i| maps[i].clone()).collect();
        (
            s.with_labels(vec!["∅".into(), "f".into(), "g".into(), "1".into()])
                .unwrap(),
            maps,
        )
    }

    #[test]
    fn oplus_on_four_element_example() {
        let (s, _) = two_point_maps();
        let r = range_oplus(&s).unwrap();
        assert_eq!(r.table, vec![0, 1, 3, 3]);
        assert!(!r.verdict.is_pass());
    }

    #[test]
    fn universal_has_one_arrow_per_element() {
        let (s, _) = two_point_maps();
        let u = universal_category(&s).unwrap();
        assert_eq!(u.category().arrow_count(), 4);
        assert_eq!(u.category().units().len(), 3);
    }

    #[test]
    fn tautological_action_of_inverse_monoid_gives_groupoid() {
        let (s, maps) = symmetric_inverse(2).unwrap();
        let a = RestrictionAction::tautological(s.drop_plus(), maps).unwrap();
        let gc = germ_category(&a).unwrap();
        assert!(gc.category.is_groupoid());
        assert_eq!(gc.category.units().len(), 2);
        // Germs at a point of the identity and the transposition differ.
        assert_eq!(gc.arrow_count(), 4);
    }

    #[test]
    fn broken_action_is_reported() {
        let (s, mut maps) = two_point_maps();
        maps[2] = PartialMap::new(2, vec![Some(0), None]).unwrap();
        let a = RestrictionAction::tautological(s, maps).unwrap();
        let v = a.check_action();
        assert!(!v.is_pass());
    }

    #[test]
    fn collapsing_action_is_not_injective() {
        let s = FinSemilattice::chain(2).as_semigroup().unwrap();
        let a = RestrictionAction::new(s, 1, vec![PartialMap::identity(1); 2]).unwrap();
        let gc = germ_category(&a).unwrap();
        let emb = theta_embedding(&a, &gc).unwrap();
        assert!(emb.morphism.is_pass());
        assert!(!emb.injective);
    }

    #[test]
    fn no_local_units() {
        let f = PartialMap::new(2, vec![Some(0), None]).unwrap();
        let g = PartialMap::new(2, vec![Some(1), None]).unwrap();
        let (s, _) = generate_in_pt(2, &[f, g], Closure::STAR).unwrap();
        assert!(matches!(universal_category(&s), Err(Error::NoLocalUnits(1))));
    }
}
