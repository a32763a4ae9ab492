//! Proper restriction semigroups and partial actions of their maximal
//! reduced quotients.

use fixedbitset::FixedBitSet;

use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::germs::{germ_category, spectral_action, RestrictionAction, SpectralAction};
use crate::lattice::{set_of, OpenSet, OrderIdeal};
use crate::pmap::PartialMap;
use crate::semigroup::{Axioms, Signature, UnarySemigroup, Verdict, Violation};
use crate::ElementId;

/// A premorphism from a monoid into the partial maps of `0..space`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidPartialAction {
    pub monoid: UnarySemigroup,
    pub space: usize,
    pub alpha: Vec<PartialMap>,
}

impl MonoidPartialAction {
    pub fn new(monoid: UnarySemigroup, space: usize, alpha: Vec<PartialMap>) -> Result<Self> {
        if alpha.len() != monoid.size() {
            return Err(Error::SizeMismatch(format!(
                "{} maps for {} monoid elements",
                alpha.len(),
                monoid.size()
            )));
        }
        if alpha.iter().any(|a| a.ground() != space) {
            return Err(Error::SizeMismatch("map on the wrong ground set".into()));
        }
        let a = MonoidPartialAction { monoid, space, alpha };
        if let Verdict::Fail(v) = a.check() {
            return Err(Error::InvalidAction(v.to_string()));
        }
        Ok(a)
    }

    pub fn identity_element(&self) -> ElementId {
        self.monoid.identity().expect("validated monoid")
    }

    /// `α_1 = id` and `α_s α_t ≤ α_{st}`.
    pub fn check(&self) -> Verdict {
        let Some(one) = self.monoid.identity() else {
            return Verdict::Fail(Violation::new("monoid has an identity", vec![]));
        };
        if self.alpha[one] != PartialMap::identity(self.space) {
            return Verdict::Fail(Violation::new("alpha(1) = identity", vec![one]));
        }
        for s in self.monoid.elements() {
            for t in self.monoid.elements() {
                let composed = self.alpha[s].after(&self.alpha[t]);
                if !composed.is_restriction_of(&self.alpha[self.monoid.mul(s, t)]) {
                    return Verdict::Fail(Violation::new("alpha(s) alpha(t) <= alpha(st)", vec![s, t]));
                }
            }
        }
        Verdict::Pass
    }

    pub fn domain_set(&self, t: ElementId) -> OpenSet {
        set_of(self.space, self.alpha[t].domain())
    }

    pub fn image_set(&self, t: ElementId, set: &FixedBitSet) -> FixedBitSet {
        set_of(self.space, set.ones().filter_map(|x| self.alpha[t].apply(x)))
    }

    pub fn preimage_set(&self, t: ElementId, set: &FixedBitSet) -> FixedBitSet {
        set_of(
            self.space,
            (0..self.space).filter(|&x| self.alpha[t].apply(x).is_some_and(|y| set.contains(y))),
        )
    }

    /// The transformation category: arrows `(t, x)` with `x` in the domain
    /// of `α_t`, sorted by `(t, x)`; `(s, α_t(x)) (t, x) = (st, x)`.
    pub fn transformation_category(&self) -> Result<(FiniteCategory, Vec<(ElementId, usize)>)> {
        let one = self.identity_element();
        let arrows: Vec<(ElementId, usize)> = self
            .monoid
            .elements()
            .flat_map(|t| self.alpha[t].domain().map(move |x| (t, x)))
            .collect();
        let index = |t: ElementId, x: usize| arrows.binary_search(&(t, x)).ok();
        let unit = |x: usize| index(one, x).expect("identity is total");
        let dom = arrows.iter().map(|&(_, x)| unit(x)).collect();
        let ran = arrows
            .iter()
            .map(|&(t, x)| unit(self.alpha[t].apply(x).unwrap()))
            .collect();
        let mut products = Vec::new();
        for (j, &(t, x)) in arrows.iter().enumerate() {
            let y = self.alpha[t].apply(x).unwrap();
            for s in self.monoid.elements().filter(|&s| self.alpha[s].is_defined(y)) {
                let k = index(self.monoid.mul(s, t), x)
                    .ok_or_else(|| Error::Internal(format!("premorphism fails at ({s},{t},{x})")))?;
                products.push((index(s, y).unwrap(), j, k));
            }
        }
        let labels = arrows
            .iter()
            .map(|&(t, x)| format!("({},{x})", self.monoid.label(t)))
            .collect();
        Ok((FiniteCategory::new(dom, ran, &products, labels)?, arrows))
    }

    /// (P1) and (P2) with respect to `family`.
    pub fn proper_verdict(&self, family: &[OpenSet]) -> Verdict {
        match self.check_proper(family) {
            Ok(()) => Verdict::Pass,
            Err(Error::P1Violation { t }) => Verdict::Fail(Violation::new("P1", vec![t])),
            Err(Error::P2Violation { t, e, f }) => Verdict::Fail(Violation::new("P2", vec![t, e, f])),
            Err(e) => Verdict::Fail(Violation::new(e.to_string(), vec![])),
        }
    }

    /// Checks that `family` is a meet-subsemilattice of the subsets of the
    /// space, then (P1) and (P2). Witnesses index into `family`.
    pub fn check_proper(&self, family: &[OpenSet]) -> Result<()> {
        check_family(self.space, family)?;
        for t in self.monoid.elements() {
            let dom = self.domain_set(t);
            let covered = family
                .iter()
                .filter(|e| e.is_subset(&dom))
                .fold(FixedBitSet::with_capacity(self.space), |acc, e| &acc | e);
            if covered != dom {
                return Err(Error::P1Violation { t });
            }
        }
        for t in self.monoid.elements() {
            let dom = self.domain_set(t);
            for (e, eset) in family.iter().enumerate().filter(|(_, e)| e.is_subset(&dom)) {
                for (f, fset) in family.iter().enumerate() {
                    let pre = &self.preimage_set(t, fset) & eset;
                    if !family.contains(&pre) {
                        return Err(Error::P2Violation { t, e, f });
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_family(space: usize, family: &[OpenSet]) -> Result<()> {
    if family.iter().any(|e| e.len() != space) {
        return Err(Error::SizeMismatch("distinguished set on the wrong ground set".into()));
    }
    for (i, a) in family.iter().enumerate() {
        if family[..i].contains(a) {
            return Err(Error::Invalid(format!("distinguished set {i} repeated")));
        }
        for b in family {
            if !family.contains(&(a & b)) {
                return Err(Error::Invalid(
                    "distinguished sets not closed under intersection".into(),
                ));
            }
        }
    }
    Ok(())
}

/// The partial action of `S/σ` induced by an action of a proper `S`, with
/// the quotient map.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub action: MonoidPartialAction,
    pub class: Vec<usize>,
}

/// `θ̄_t(x) = θ_u(x)` for any `u` in the class `t` with `x` in the domain of
/// `θ_u`. All choices of `u` are compared.
pub fn induced_partial_action(action: &RestrictionAction) -> Result<InducedAction> {
    action.semigroup.require_proper()?;
    match induce(action)? {
        Ok(induced) => Ok(induced),
        Err(v) => Err(Error::Internal(format!(
            "induced action of a proper semigroup conflicts: {v}"
        ))),
    }
}

/// The first pair of representatives that disagree at a point, witnessed as
/// `[u, v, x]`, when the induced action is built without a properness check.
pub fn induced_conflict(action: &RestrictionAction) -> Result<Option<Violation>> {
    Ok(induce(action)?.err())
}

fn induce(action: &RestrictionAction) -> Result<std::result::Result<InducedAction, Violation>> {
    if let Verdict::Fail(v) = action.check_action() {
        return Err(Error::InvalidAction(v.to_string()));
    }
    let s = &action.semigroup;
    let (t, class) = s.quotient_by_sigma()?;
    let mut alpha = Vec::with_capacity(t.size());
    for c in t.elements() {
        let mut map: Vec<Option<(usize, ElementId)>> = vec![None; action.space];
        for u in s.elements().filter(|&u| class[u] == c) {
            for x in action.theta[u].domain() {
                let y = action.act(u, x).unwrap();
                match map[x] {
                    Some((z, v)) if z != y => return Ok(Err(Violation::new("representatives agree", vec![v, u, x]))),
                    Some(_) => {}
                    None => map[x] = Some((y, u)),
                }
            }
        }
        alpha.push(PartialMap::new(
            action.space,
            map.into_iter().map(|m| m.map(|(y, _)| y)).collect(),
        )?);
    }
    let action = MonoidPartialAction::new(t, action.space, alpha)?;
    Ok(Ok(InducedAction { action, class }))
}

/// The functor `(t, x) ↦ [u, x]` from the transformation category of the
/// induced action onto the germ category, verified to be an isomorphism.
#[derive(Clone, Debug)]
pub struct GermIsomorphism {
    pub induced: InducedAction,
    pub transformation: FiniteCategory,
    pub germs: FiniteCategory,
    pub map: Vec<usize>,
}

pub fn check_germ_iso(action: &RestrictionAction) -> Result<GermIsomorphism> {
    let induced = induced_partial_action(action)?;
    let gc = germ_category(action)?;
    let (transformation, arrows) = induced.action.transformation_category()?;
    let s = &action.semigroup;
    let map = arrows
        .iter()
        .map(|&(t, x)| {
            let u = s
                .elements()
                .find(|&u| induced.class[u] == t && action.defined(u, x))
                .ok_or_else(|| Error::Internal(format!("no representative of class {t} at {x}")))?;
            Ok(gc.arrow(u, x).unwrap())
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(v) = transformation.isomorphism_violation(&gc.category, &map) {
        return Err(Error::Internal(format!(
            "transformation category is not isomorphic to the germs: {v}"
        )));
    }
    Ok(GermIsomorphism {
        induced,
        transformation,
        germs: gc.category,
        map,
    })
}

/// The restriction semigroup of pairs `(t, e)` with `e ⊆ dom α_t`.
#[derive(Clone, Debug)]
pub struct ActionProduct {
    pub semigroup: UnarySemigroup,
    /// `(monoid element, index into family)` for each element.
    pub pairs: Vec<(ElementId, usize)>,
    pub family: Vec<OpenSet>,
    /// The five structural properties of the construction.
    pub clauses: Verdict,
}

impl ActionProduct {
    pub fn index_of(&self, t: ElementId, e: usize) -> Option<ElementId> {
        self.pairs.binary_search(&(t, e)).ok()
    }
}

/// `(s, e)(t, f) = (st, α_t⁻¹(e) ∩ f)` and `(s, e)* = (1, e)`.
pub fn partial_action_product(action: &MonoidPartialAction, family: &[OpenSet]) -> Result<ActionProduct> {
    if let Err(e) = action.check_proper(family) {
        return Err(Error::NotProperAction(e.to_string()));
    }
    let t = &action.monoid;
    let one = action.identity_element();
    let pairs: Vec<(ElementId, usize)> = t
        .elements()
        .flat_map(|m| {
            let dom = action.domain_set(m);
            family
                .iter()
                .enumerate()
                .filter(move |(_, e)| e.is_subset(&dom))
                .map(move |(i, _)| (m, i))
        })
        .collect();
    let index = |m: ElementId, set: &OpenSet| {
        family
            .iter()
            .position(|e| e == set)
            .and_then(|i| pairs.binary_search(&(m, i)).ok())
            .ok_or_else(|| Error::Internal(format!("product pair ({m}, {set:?}) missing")))
    };
    let mut mul = vec![vec![0; pairs.len()]; pairs.len()];
    for (a, &(s, e)) in pairs.iter().enumerate() {
        for (b, &(u, f)) in pairs.iter().enumerate() {
            let set = &action.preimage_set(u, &family[e]) & &family[f];
            mul[a][b] = index(t.mul(s, u), &set)?;
        }
    }
    let star = pairs
        .iter()
        .map(|&(_, e)| index(one, &family[e]))
        .collect::<Result<Vec<_>>>()?;
    let labels = pairs
        .iter()
        .map(|&(m, e)| format!("({},{})", t.label(m), set_label(&family[e])))
        .collect();
    let semigroup = UnarySemigroup::build_from_table(mul, Some(star), None)?.with_labels(labels)?;
    let mut product = ActionProduct {
        semigroup,
        pairs,
        family: family.to_vec(),
        clauses: Verdict::Pass,
    };
    product.clauses = product_clauses(&product, action)?.into();
    Ok(product)
}

fn set_label(set: &FixedBitSet) -> String {
    let items: Vec<String> = set.ones().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn product_clauses(p: &ActionProduct, action: &MonoidPartialAction) -> Result<Option<Violation>> {
    let s = &p.semigroup;
    let one = action.identity_element();
    if let Verdict::Fail(v) = s.check_axioms(Axioms::Restriction)? {
        return Ok(Some(Violation::new(format!("(1) restriction: {}", v.law), v.witness)));
    }
    let proj: Vec<ElementId> = (0..p.family.len()).map(|e| p.index_of(one, e).unwrap()).collect();
    let mut sorted = proj.clone();
    sorted.sort_unstable();
    if sorted != s.projections() {
        return Ok(Some(Violation::new("(2) projections are (1, e)", vec![])));
    }
    for (e, ea) in p.family.iter().enumerate() {
        for (f, fa) in p.family.iter().enumerate() {
            let meet = p.family.iter().position(|g| *g == (ea & fa)).unwrap();
            if s.mul(proj[e], proj[f]) != proj[meet] {
                return Ok(Some(Violation::new("(2) e -> (1, e) preserves meets", vec![e, f])));
            }
        }
    }
    let order = s.natural_order()?;
    for (a, &(m, e)) in p.pairs.iter().enumerate() {
        for (b, &(n, f)) in p.pairs.iter().enumerate() {
            if order.contains(a, b) != (m == n && p.family[e].is_subset(&p.family[f])) {
                return Ok(Some(Violation::new("(3) order", vec![a, b])));
            }
        }
    }
    let sigma = s.sigma_checked()?;
    for (a, &(m, _)) in p.pairs.iter().enumerate() {
        for (b, &(n, _)) in p.pairs.iter().enumerate() {
            if sigma.contains(a, b) != (m == n) {
                return Ok(Some(Violation::new(
                    "(4) sigma is equality of first components",
                    vec![a, b],
                )));
            }
        }
    }
    if let Some((a, b)) = s.first_improper_pair()? {
        return Ok(Some(Violation::new("(5) proper", vec![a, b])));
    }
    Ok(None)
}

/// `S ≅ S/σ ⋉ ι(P(S))` under the induced spectral action.
#[derive(Clone, Debug)]
pub struct ProperDecomposition {
    pub spectral: SpectralAction,
    pub induced: InducedAction,
    pub product: ActionProduct,
    /// `s ↦ ([s]σ, D_{s*})`.
    pub psi: Vec<ElementId>,
    /// For each product element `(t, D_e)`, some `u` in class `t` with
    /// `D_{u*} = D_e`.
    pub surjectivity_witness: Vec<ElementId>,
    /// `Ψ(dom β̄_t)` for each class `t`, as projection point indices.
    pub domain_ideals: Vec<OrderIdeal>,
}

pub fn decompose_proper(s: &UnarySemigroup) -> Result<ProperDecomposition> {
    s.require(Signature::Star, "decomposition")?;
    s.require_local_units()?;
    s.require_proper()?;
    let spectral = spectral_action(s)?;
    let induced = induced_partial_action(&spectral.action)?;
    let lat = &spectral.semilattice;
    let family: Vec<OpenSet> = (0..lat.size()).map(|e| lat.d(e)).collect();
    let product = partial_action_product(&induced.action, &family)?;
    if let Verdict::Fail(v) = &product.clauses {
        return Err(Error::Internal(format!("partial action product fails {v}")));
    }
    let point = |e: ElementId| spectral.point_of(e).expect("projection");
    let psi: Vec<ElementId> = s
        .elements()
        .map(|a| product.index_of(induced.class[a], point(s.star(a))))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Internal("psi leaves the product".into()))?;
    let surjectivity_witness = product
        .pairs
        .iter()
        .map(|&(t, e)| {
            s.elements()
                .find(|&u| induced.class[u] == t && point(s.star(u)) == e)
                .ok_or_else(|| Error::Internal(format!("no element of class {t} with domain point {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if !s.is_isomorphism(&product.semigroup, &psi) {
        let v = s.first_morphism_failure(&product.semigroup, &psi);
        return Err(Error::Internal(format!("psi is not an isomorphism: {v:?}")));
    }
    let domain_ideals = induced
        .action
        .monoid
        .elements()
        .map(|t| lat.order_ideal_psi(&induced.action.domain_set(t)))
        .collect::<Result<Vec<_>>>()?;
    for (t, ideal) in domain_ideals.iter().enumerate() {
        let expected = set_of(
            lat.size(),
            (0..lat.size()).filter(|&e| {
                s.elements()
                    .any(|u| induced.class[u] == t && lat.leq(e, point(s.star(u))))
            }),
        );
        if ideal.members != expected {
            return Err(Error::Internal(format!(
                "domain ideal of class {t} is not generated by its stars"
            )));
        }
    }
    Ok(ProperDecomposition {
        spectral,
        induced,
        product,
        psi,
        surjectivity_witness,
        domain_ideals,
    })
}

/// Whether every domain ideal of the induced spectral action is principal,
/// cross-checked against the existence of σ-class maxima.
pub fn f_restriction_criterion(s: &UnarySemigroup) -> Result<bool> {
    let d = decompose_proper(s)?;
    let lat = &d.spectral.semilattice;
    let by_ideals = d.domain_ideals.iter().all(|i| lat.ideal_generator(i).is_some());
    let by_maxima = s.is_f_restriction()?;
    if by_ideals != by_maxima {
        return Err(Error::Internal(format!(
            "principal domain ideals ({by_ideals}) disagree with class maxima ({by_maxima})"
        )));
    }
    Ok(by_ideals)
}

/// The underlying partial action `ψ` of an E-unitary inverse semigroup and
/// the products built from it and from the spectral action.
#[derive(Clone, Debug)]
pub struct PetrichReilly {
    pub decomposition: ProperDecomposition,
    /// `S/σ ⋉_ψ E(S)` with pairs `(class, idempotent)`.
    pub product: UnarySemigroup,
    pub pairs: Vec<(ElementId, ElementId)>,
    /// `s ↦ ([s]σ, s*)`.
    pub to_product: Vec<ElementId>,
    /// `(t, e) ↦ (t, D_e)` into the spectral product.
    pub gamma: Vec<ElementId>,
}

pub fn petrich_reilly(s: &UnarySemigroup) -> Result<PetrichReilly> {
    let inv = s
        .inverse_table()
        .ok_or_else(|| Error::NotEUnitary("not an inverse semigroup".into()))?;
    let s = &s.with_inverse_operations()?;
    if let Some((a, b)) = s.first_improper_pair()? {
        return Err(Error::NotEUnitary(format!(
            "{} and {} are sigma-related with equal stars",
            s.label(a),
            s.label(b)
        )));
    }
    let d = decompose_proper(s)?;
    let class = &d.induced.class;
    let t = &d.induced.action.monoid;
    let idem = s.projections();
    let leq = |e: ElementId, f: ElementId| s.mul(e, f) == e;

    // psi[c][e] = u e u⁻¹ for u in class c with e ≤ u*.
    let mut psi: Vec<Vec<Option<ElementId>>> = vec![vec![None; s.size()]; t.size()];
    for u in s.elements() {
        for &e in idem.iter().filter(|&&e| leq(e, s.star(u))) {
            let image = s.mul(s.mul(u, e), inv[u]);
            match psi[class[u]][e] {
                Some(v) if v != image => {
                    return Err(Error::Internal(format!(
                        "psi of class {} at {e} is not well defined",
                        class[u]
                    )))
                }
                _ => psi[class[u]][e] = Some(image),
            }
        }
    }
    let pairs: Vec<(ElementId, ElementId)> = {
        let psi = &psi;
        t.elements()
            .flat_map(|c| idem.iter().filter(move |&&e| psi[c][e].is_some()).map(move |&e| (c, e)))
            .collect()
    };
    let pos = |c: ElementId, e: ElementId| pairs.binary_search(&(c, e)).ok();
    let psi_inv = |c: ElementId, g: ElementId| idem.iter().copied().find(|&e| psi[c][e] == Some(g));
    let mut mul = vec![vec![0; pairs.len()]; pairs.len()];
    for (a, &(c1, e)) in pairs.iter().enumerate() {
        for (b, &(c2, f)) in pairs.iter().enumerate() {
            let g = s.mul(psi[c2][f].unwrap(), e);
            let h = psi_inv(c2, g).ok_or_else(|| Error::Internal(format!("{g} outside the range of psi")))?;
            mul[a][b] = pos(t.mul(c1, c2), h).ok_or_else(|| Error::Internal("product pair missing".into()))?;
        }
    }
    let labels = pairs
        .iter()
        .map(|&(c, e)| format!("({},{})", t.label(c), s.label(e)))
        .collect();
    let product = UnarySemigroup::build_from_table(mul, None, None)?
        .with_labels(labels)?
        .with_inverse_operations()?;

    let to_product: Vec<ElementId> = s.elements().map(|a| pos(class[a], s.star(a)).unwrap()).collect();
    if !s.is_isomorphism(&product, &to_product) {
        return Err(Error::Internal("s -> ([s], s*) is not an isomorphism".into()));
    }

    let sp = |e: ElementId| d.spectral.point_of(e).expect("projection");
    let gamma: Vec<ElementId> = pairs
        .iter()
        .map(|&(c, e)| d.product.index_of(c, sp(e)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Internal("gamma leaves the spectral product".into()))?;
    if !product.is_isomorphism(&d.product.semigroup, &gamma) {
        return Err(Error::Internal("gamma is not an isomorphism".into()));
    }

    let lat = &d.spectral.semilattice;
    let beta = &d.induced.action;
    for c in t.elements() {
        let dom = beta.domain_set(c);
        let ran = beta.image_set(c, &dom);
        for &e in &idem {
            let de = lat.d(sp(e));
            if psi[c][e].is_some() != de.is_subset(&dom) {
                return Err(Error::Internal(format!(
                    "domain of psi and beta differ for class {c} at {e}"
                )));
            }
            let in_range = psi[c].contains(&Some(e));
            if in_range != de.is_subset(&ran) {
                return Err(Error::Internal(format!(
                    "range of psi and beta differ for class {c} at {e}"
                )));
            }
            if let Some(g) = psi[c][e] {
                if beta.image_set(c, &de) != lat.d(sp(g)) {
                    return Err(Error::Internal(format!("beta(D_e) != D_psi(e) for class {c} at {e}")));
                }
            }
            if in_range {
                let back = psi_inv(c, e).unwrap();
                if &beta.preimage_set(c, &de) & &dom != lat.d(sp(back)) {
                    return Err(Error::Internal(format!(
                        "beta^-1(D_e) != D_psi^-1(e) for class {c} at {e}"
                    )));
                }
            }
        }
    }

    Ok(PetrichReilly {
        decomposition: d,
        product,
        pairs,
        to_product,
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::symmetric_inverse;

    fn cyclic(m: usize) -> UnarySemigroup {
        let mul = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        UnarySemigroup::build_from_table(mul, Some(vec![0; m]), None).unwrap()
    }

    #[test]
    fn group_decomposes_to_itself() {
        let g = cyclic(3);
        let d = decompose_proper(&g).unwrap();
        assert_eq!(d.product.semigroup.size(), 3);
        assert!(d.product.clauses.is_pass());
        assert!(f_restriction_criterion(&g).unwrap());
        let pr = petrich_reilly(&g).unwrap();
        assert_eq!(pr.product.size(), 3);
    }

    #[test]
    fn symmetric_inverse_is_not_proper() {
        let (s, maps) = symmetric_inverse(2).unwrap();
        let a = RestrictionAction::tautological(s.drop_plus(), maps).unwrap();
        assert!(matches!(induced_partial_action(&a), Err(Error::NotProper(..))));
        assert!(induced_conflict(&a).unwrap().is_some());
        assert!(matches!(petrich_reilly(&s), Err(Error::NotEUnitary(_))));
    }

    #[test]
    fn p1_violation() {
        let t = cyclic(1);
        let alpha = vec![PartialMap::identity(2)];
        let a = MonoidPartialAction::new(t, 2, alpha).unwrap();
        let family = vec![set_of(2, [0])];
        assert!(matches!(a.check_proper(&family), Err(Error::P1Violation { t: 0 })));
    }

    #[test]
    fn trivial_monoid_product_is_the_family() {
        let t = cyclic(1);
        let a = MonoidPartialAction::new(t, 2, vec![PartialMap::identity(2)]).unwrap();
        let family = vec![set_of(2, []), set_of(2, [0]), set_of(2, [0, 1])];
        let p = partial_action_product(&a, &family).unwrap();
        assert_eq!(p.semigroup.size(), 3);
        assert!(p.clauses.is_pass());
    }

    #[test]
    fn premorphism_law_enforced() {
        let t = cyclic(2);
        let collapse = PartialMap::new(2, vec![Some(0), Some(0)]).unwrap();
        let bad = MonoidPartialAction::new(t, 2, vec![PartialMap::identity(2), collapse]);
        assert!(matches!(bad, Err(Error::InvalidAction(_))));
    }
}
