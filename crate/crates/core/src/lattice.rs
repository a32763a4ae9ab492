//! Finite meet-semilattices, their spectra and Booleanizations.
//!
//! Filters of a finite semilattice are principal, so a spectrum point is stored
//! as the index of the generator of its filter. The spectrum is discrete and an
//! open set is any subset of points; `D_e` is the set of points below `e`.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::relation::{ElementRelation, RelationKind};
use crate::semigroup::UnarySemigroup;
use crate::ElementId;

/// A set of spectrum points, indexed by filter generator.
pub type OpenSet = FixedBitSet;

/// Largest semilattice whose generated Boolean algebra is built explicitly.
pub const MAX_BOOLEANIZE: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSemilattice {
    size: usize,
    meet: Vec<ElementId>,
    order: ElementRelation,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filter {
    pub members: FixedBitSet,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderIdeal {
    pub members: FixedBitSet,
}

impl OrderIdeal {
    pub fn elements(&self) -> Vec<ElementId> {
        self.members.ones().collect()
    }
}

pub fn set_of(n: usize, items: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.extend(items);
    s
}

impl FinSemilattice {
    pub fn from_meet_table(meet: Vec<Vec<ElementId>>) -> Result<Self> {
        let n = meet.len();
        if n == 0 || meet.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch("meet table must be square and nonempty".into()));
        }
        if meet.iter().flatten().any(|&v| v >= n) {
            return Err(Error::SizeMismatch("meet entry out of range".into()));
        }
        let m = |a: usize, b: usize| meet[a][b];
        for a in 0..n {
            if m(a, a) != a {
                return Err(Error::Invalid(format!("meet is not idempotent at {a}")));
            }
            for b in 0..n {
                if m(a, b) != m(b, a) {
                    return Err(Error::Invalid(format!("meet is not commutative at {a},{b}")));
                }
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }
        let order = ElementRelation::from_fn(RelationKind::Order, n, |a, b| m(a, b) == a);
        Ok(FinSemilattice {
            size: n,
            meet: meet.into_iter().flatten().collect(),
            order,
        })
    }

    /// The projections of `s`, with the list of their indices in `s`.
    pub fn of_projections(s: &UnarySemigroup) -> Result<(Self, Vec<ElementId>)> {
        let p = s.projections();
        let pos = |x: ElementId| p.binary_search(&x).ok();
        let meet = p
            .iter()
            .map(|&e| {
                p.iter()
                    .map(|&f| {
                        pos(s.mul(e, f))
                            .ok_or_else(|| Error::Internal(format!("product of projections {e},{f} is not one")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((FinSemilattice::from_meet_table(meet)?, p))
    }

    /// `0 < 1 < … < k-1`.
    pub fn chain(k: usize) -> Self {
        Self::from_meet_table((0..k).map(|a| (0..k).map(|b| a.min(b)).collect()).collect())
            .expect("chain is a semilattice")
    }

    /// A bottom `0` with `k` pairwise incomparable atoms `1..=k` above it.
    pub fn antichain(k: usize) -> Self {
        let meet = (0..=k)
            .map(|a| (0..=k).map(|b| if a == b { a } else { 0 }).collect())
            .collect();
        Self::from_meet_table(meet).expect("antichain with bottom is a semilattice")
    }

    /// The free semilattice on `n` generators: nonempty subsets of generators,
    /// numbered by bitmask minus one, with meet given by union.
    pub fn free(n: usize) -> Self {
        let k = (1usize << n) - 1;
        let meet = (0..k)
            .map(|a| (0..k).map(|b| ((a + 1) | (b + 1)) - 1).collect())
            .collect();
        Self::from_meet_table(meet).expect("free semilattice")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet[a * self.size + b]
    }

    pub fn meet_rows(&self) -> Vec<Vec<ElementId>> {
        self.meet.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.order.contains(a, b)
    }

    pub fn order(&self) -> &ElementRelation {
        &self.order
    }

    pub fn up(&self, e: ElementId) -> FixedBitSet {
        self.order.row(e).clone()
    }

    pub fn down(&self, e: ElementId) -> FixedBitSet {
        set_of(self.size, (0..self.size).filter(|&f| self.leq(f, e)))
    }

    pub fn top(&self) -> Option<ElementId> {
        (0..self.size).find(|&t| (0..self.size).all(|e| self.leq(e, t)))
    }

    /// The semilattice as a restriction semigroup with `*` the identity map.
    pub fn as_semigroup(&self) -> Result<UnarySemigroup> {
        UnarySemigroup::build_from_table(self.meet_rows(), Some((0..self.size).collect()), None)
    }

    fn is_filter(&self, set: &FixedBitSet) -> bool {
        if set.count_ones(..) == 0 {
            return false;
        }
        set.ones()
            .all(|a| self.order.row(a).is_subset(set) && set.ones().all(|b| set.contains(self.meet(a, b))))
    }

    /// The filters `e↑`, each checked to be a filter with minimum `e`.
    pub fn filters(&self) -> Result<Vec<Filter>> {
        (0..self.size)
            .map(|e| {
                let members = self.up(e);
                if !self.is_filter(&members) || !members.ones().all(|f| self.leq(e, f)) {
                    return Err(Error::Internal(format!("{e} does not generate a filter")));
                }
                Ok(Filter { members })
            })
            .collect()
    }

    /// Every filter, found by testing all subsets.
    pub fn filters_exhaustive(&self) -> Result<Vec<Filter>> {
        self.subsets("filter enumeration")?
            .filter(|s| self.is_filter(s))
            .map(|members| Ok(Filter { members }))
            .collect()
    }

    /// The minimum of a filter, if it has one.
    pub fn filter_generator(&self, f: &Filter) -> Option<ElementId> {
        f.members.ones().find(|&g| f.members.ones().all(|h| self.leq(g, h)))
    }

    fn subsets(&self, what: &'static str) -> Result<impl Iterator<Item = FixedBitSet> + '_> {
        if self.size > 20 {
            return Err(Error::TooLarge {
                what,
                count: self.size,
                limit: 20,
            });
        }
        let n = self.size;
        Ok((0u32..1 << n).map(move |mask| set_of(n, (0..n).filter(|&i| mask >> i & 1 == 1))))
    }

    /// `D_e`: the points whose generator lies below `e`.
    pub fn d(&self, e: ElementId) -> OpenSet {
        self.down(e)
    }

    /// `D_e` minus `D_f` for each `f` in `fs`.
    pub fn basic_open(&self, e: ElementId, fs: &[ElementId]) -> Result<OpenSet> {
        let mut set = self.d(e);
        for &f in fs {
            if !self.leq(f, e) {
                return Err(Error::NotBelow { e, f });
            }
            set.difference_with(&self.d(f));
        }
        Ok(set)
    }

    /// Elements strictly below `e` with nothing strictly between.
    pub fn lower_covers(&self, e: ElementId) -> Vec<ElementId> {
        let below: Vec<_> = (0..self.size).filter(|&f| f != e && self.leq(f, e)).collect();
        below
            .iter()
            .copied()
            .filter(|&f| !below.iter().any(|&g| g != f && self.leq(f, g)))
            .collect()
    }

    /// Closes `{D_e}` under union, intersection and relative complement.
    pub fn booleanization(&self) -> Result<Booleanization> {
        if self.size > MAX_BOOLEANIZE {
            return Err(Error::TooLarge {
                what: "booleanization",
                count: self.size,
                limit: MAX_BOOLEANIZE,
            });
        }
        let iota: Vec<OpenSet> = (0..self.size).map(|e| self.d(e)).collect();
        let mut family: BTreeSet<OpenSet> = iota.iter().cloned().collect();
        let mut pending: Vec<OpenSet> = family.iter().cloned().collect();
        while let Some(a) = pending.pop() {
            let current: Vec<OpenSet> = family.iter().cloned().collect();
            for b in current {
                let ops = [&a | &b, &a & &b, set_difference(&a, &b), set_difference(&b, &a)];
                for c in ops {
                    if family.insert(c.clone()) {
                        pending.push(c);
                    }
                }
            }
        }
        if family.len() != 1 << self.size {
            return Err(Error::Internal(format!(
                "generated algebra has {} members, expected {}",
                family.len(),
                1usize << self.size
            )));
        }
        for e in 0..self.size {
            for f in 0..self.size {
                if (e != f && iota[e] == iota[f]) || iota[self.meet(e, f)] != &iota[e] & &iota[f] {
                    return Err(Error::Internal(format!("iota fails at {e},{f}")));
                }
            }
        }
        Ok(Booleanization {
            family: family.into_iter().collect(),
            iota,
        })
    }

    /// All subsets of the spectrum, the members of the generated algebra.
    pub fn all_open_sets(&self) -> Result<Vec<OpenSet>> {
        Ok(self.subsets("open set enumeration")?.collect())
    }

    fn is_down_closed(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|e| self.down(e).is_subset(set))
    }

    /// `Ψ(U) = {f : D_f ⊆ U}` for `U` a union of sets `D_e`.
    pub fn order_ideal_psi(&self, u: &OpenSet) -> Result<OrderIdeal> {
        let union = (0..self.size)
            .filter(|&e| self.d(e).is_subset(u))
            .fold(FixedBitSet::with_capacity(self.size), |acc, e| &acc | &self.d(e));
        if &union != u {
            return Err(Error::Invalid("open set is not a union of basic sets".into()));
        }
        Ok(OrderIdeal {
            members: set_of(self.size, (0..self.size).filter(|&f| self.d(f).is_subset(u))),
        })
    }

    /// `Ψ⁻¹(I) = ⋃_{e ∈ I} D_e`.
    pub fn order_ideal_psi_inv(&self, ideal: &OrderIdeal) -> Result<OpenSet> {
        if !self.is_down_closed(&ideal.members) {
            return Err(Error::Invalid("not an order ideal".into()));
        }
        Ok(ideal
            .members
            .ones()
            .fold(FixedBitSet::with_capacity(self.size), |acc, e| &acc | &self.d(e)))
    }

    pub fn principal_ideal(&self, e: ElementId) -> OrderIdeal {
        OrderIdeal { members: self.down(e) }
    }

    /// The generator of an ideal of the form `e↓`.
    pub fn ideal_generator(&self, ideal: &OrderIdeal) -> Option<ElementId> {
        ideal
            .members
            .ones()
            .find(|&g| ideal.members.ones().all(|h| self.leq(h, g)))
    }

    pub fn all_order_ideals(&self) -> Result<Vec<OrderIdeal>> {
        Ok(self
            .subsets("order ideal enumeration")?
            .filter(|s| self.is_down_closed(s))
            .map(|members| OrderIdeal { members })
            .collect())
    }

    /// Extends a meet-morphism into the Boolean algebra of subsets of
    /// `target_points` to a morphism on all open sets of the spectrum.
    pub fn extend_to_gba_morphism(&self, alpha: &[FixedBitSet], target_points: usize) -> Result<GbaMorphism> {
        if alpha.len() != self.size || alpha.iter().any(|a| a.len() != target_points) {
            return Err(Error::SizeMismatch("alpha does not match E and B".into()));
        }
        for e in 0..self.size {
            for f in 0..self.size {
                if alpha[self.meet(e, f)] != &alpha[e] & &alpha[f] {
                    return Err(Error::NotMeetMorphism(e, f));
                }
            }
        }
        let cover = alpha
            .iter()
            .fold(FixedBitSet::with_capacity(target_points), |acc, a| &acc | a);
        if cover.count_ones(..) != target_points {
            return Err(Error::Degenerate);
        }
        let atom_images = (0..self.size)
            .map(|p| {
                let below: Vec<_> = (0..self.size).filter(|&q| q != p && self.leq(q, p)).collect();
                below
                    .iter()
                    .fold(alpha[p].clone(), |acc, &q| set_difference(&acc, &alpha[q]))
            })
            .collect();
        let psi = GbaMorphism {
            alpha: alpha.to_vec(),
            atom_images,
            target_points,
        };
        psi.verify(self)?;
        Ok(psi)
    }
}

pub fn set_difference(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut d = a.clone();
    d.difference_with(b);
    d
}

#[derive(Clone, Debug)]
pub struct Booleanization {
    /// Members of the generated algebra, sorted.
    pub family: Vec<OpenSet>,
    /// `iota[e] = D_e`.
    pub iota: Vec<OpenSet>,
}

/// A morphism from the open sets of a finite spectrum into subsets of a
/// finite point set.
#[derive(Clone, Debug)]
pub struct GbaMorphism {
    alpha: Vec<FixedBitSet>,
    atom_images: Vec<FixedBitSet>,
    target_points: usize,
}

impl GbaMorphism {
    /// Sends each point `p` to `α(p) ∖ ⋃_{q<p} α(q)` and unions.
    pub fn apply(&self, u: &OpenSet) -> FixedBitSet {
        u.ones().fold(FixedBitSet::with_capacity(self.target_points), |acc, p| {
            &acc | &self.atom_images[p]
        })
    }

    /// Writes `U` as the union over `p ∈ U` of `D_p` minus every `D_q` with
    /// `q ≤ p` outside `U`.
    fn apply_by_cover(&self, e: &FinSemilattice, u: &OpenSet) -> FixedBitSet {
        u.ones()
            .map(|p| {
                (0..e.size())
                    .filter(|&q| e.leq(q, p) && !u.contains(q))
                    .fold(self.alpha[p].clone(), |acc, q| set_difference(&acc, &self.alpha[q]))
            })
            .fold(FixedBitSet::with_capacity(self.target_points), |acc, x| &acc | &x)
    }

    fn verify(&self, e: &FinSemilattice) -> Result<()> {
        let all = e.all_open_sets()?;
        for u in &all {
            if self.apply(u) != self.apply_by_cover(e, u) {
                return Err(Error::Internal(format!(
                    "decompositions disagree on {:?}",
                    u.ones().collect::<Vec<_>>()
                )));
            }
        }
        for p in 0..e.size() {
            if self.apply(&e.d(p)) != self.alpha[p] {
                return Err(Error::Internal(format!("psi(D_{p}) differs from alpha({p})")));
            }
        }
        if self.apply(&FixedBitSet::with_capacity(e.size())).count_ones(..) != 0 {
            return Err(Error::Internal("psi does not preserve the empty set".into()));
        }
        if e.size() <= 8 {
            for x in &all {
                let px = self.apply(x);
                for y in &all {
                    let py = self.apply(y);
                    if self.apply(&set_difference(x, y)) != set_difference(&px, &py)
                        || self.apply(&(x | y)) != &px | &py
                        || self.apply(&(x & y)) != &px & &py
                    {
                        return Err(Error::Internal("psi is not a lattice morphism".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_filters() {
        let e = FinSemilattice::chain(2);
        let f = e.filters().unwrap();
        assert_eq!(f[0].members, set_of(2, [0, 1]));
        assert_eq!(f[1].members, set_of(2, [1]));
        assert_eq!(e.filters_exhaustive().unwrap().len(), 2);
    }

    #[test]
    fn free_on_two_generators() {
        let e = FinSemilattice::free(2);
        assert_eq!(e.size(), 3);
        assert_eq!(e.filters_exhaustive().unwrap().len(), 3);
    }

    #[test]
    fn basic_open_sets() {
        let e = FinSemilattice::chain(2);
        assert_eq!(e.basic_open(1, &[]).unwrap().count_ones(..), 2);
        assert_eq!(e.basic_open(0, &[1]), Err(Error::NotBelow { e: 0, f: 1 }));
        let a = FinSemilattice::antichain(3);
        let covers = a.lower_covers(0);
        assert!(covers.is_empty());
        for atom in 1..=3 {
            assert_eq!(a.basic_open(atom, &a.lower_covers(atom)).unwrap(), set_of(4, [atom]));
        }
    }

    #[test]
    fn booleanization_sizes() {
        assert_eq!(FinSemilattice::chain(1).booleanization().unwrap().family.len(), 2);
        assert_eq!(FinSemilattice::chain(2).booleanization().unwrap().family.len(), 4);
        assert_eq!(FinSemilattice::antichain(3).booleanization().unwrap().family.len(), 16);
    }

    #[test]
    fn identity_extension() {
        let e = FinSemilattice::antichain(2);
        let iota: Vec<_> = (0..3).map(|x| e.d(x)).collect();
        let psi = e.extend_to_gba_morphism(&iota, 3).unwrap();
        for u in e.all_open_sets().unwrap() {
            assert_eq!(psi.apply(&u), u);
        }
    }

    #[test]
    fn zero_map_is_degenerate() {
        let e = FinSemilattice::chain(2);
        let zero = vec![FixedBitSet::with_capacity(2); 2];
        assert_eq!(e.extend_to_gba_morphism(&zero, 2).unwrap_err(), Error::Degenerate);
    }

    #[test]
    fn non_meet_morphism() {
        let e = FinSemilattice::antichain(2);
        let alpha = vec![set_of(1, []), set_of(1, [0]), set_of(1, [0])];
        assert_eq!(
            e.extend_to_gba_morphism(&alpha, 1).unwrap_err(),
            Error::NotMeetMorphism(1, 2)
        );
    }

    #[test]
    fn psi_on_principal_and_full() {
        let e = FinSemilattice::free(2);
        let ideal = e.order_ideal_psi(&e.d(1)).unwrap();
        assert_eq!(e.ideal_generator(&ideal), Some(1));
        let all = OrderIdeal {
            members: set_of(3, 0..3),
        };
        assert_eq!(e.order_ideal_psi_inv(&all).unwrap().count_ones(..), 3);
    }
}
