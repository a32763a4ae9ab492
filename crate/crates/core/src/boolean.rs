use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::relation::ElementRelation;
use crate::semigroup::{Signature, UnarySemigroup, Verdict, Violation};
use crate::ElementId;

/// Least upper bound of `a` and `b` under `order`, if it exists.
pub fn join_in(order: &ElementRelation, a: ElementId, b: ElementId) -> Option<ElementId> {
    let mut upper = order.row(a).clone();
    upper.intersect_with(order.row(b));
    least_of(order, &upper)
}

fn least_of(order: &ElementRelation, set: &FixedBitSet) -> Option<ElementId> {
    set.ones().find(|&u| set.is_subset(order.row(u)))
}

impl UnarySemigroup {
    /// The zero, provided it is also a projection.
    pub fn restriction_zero(&self) -> Result<ElementId> {
        self.require(Signature::Star, "boolean restriction check")?;
        match self.zero() {
            Some(z) if self.star(z) == z => Ok(z),
            _ => Err(Error::NoRestrictionZero),
        }
    }

    /// Checks joins of compatible pairs, the relatively complemented
    /// distributive lattice of projections, and right distributivity.
    pub fn check_boolean_restriction(&self) -> Result<Verdict> {
        let zero = self.restriction_zero()?;
        self.guard("boolean restriction check")?;
        let order = self.natural_order()?;
        let compat = self.compatibility()?;
        let n = self.size();

        let mut join = vec![None; n * n];
        for s in 0..n {
            for t in 0..n {
                join[s * n + t] = join_in(&order, s, t);
            }
        }

        for (s, t) in compat.pairs() {
            if join[s * n + t].is_none() {
                return Ok(Verdict::Fail(Violation::new("BR1: compatible join", vec![s, t])));
            }
        }

        if let Some(v) = self.projection_lattice_violation(zero, &order) {
            return Ok(Verdict::Fail(v));
        }

        for s in 0..n {
            for t in 0..n {
                let Some(j) = join[s * n + t] else { continue };
                for u in 0..n {
                    let (su, tu) = (self.mul(s, u), self.mul(t, u));
                    if join[su * n + tu] != Some(self.mul(j, u)) {
                        return Ok(Verdict::Fail(Violation::new("BR3: (s v t)u = su v tu", vec![s, t, u])));
                    }
                }
            }
        }
        Ok(Verdict::Pass)
    }

    fn projection_lattice_violation(&self, zero: ElementId, order: &ElementRelation) -> Option<Violation> {
        let p = self.projections();
        let mut in_p = FixedBitSet::with_capacity(self.size());
        p.iter().for_each(|&e| in_p.insert(e));
        let pjoin = |e: ElementId, f: ElementId| {
            let mut upper = order.row(e).clone();
            upper.intersect_with(order.row(f));
            upper.intersect_with(&in_p);
            least_of(order, &upper)
        };
        for &e in &p {
            if !order.contains(zero, e) {
                return Some(Violation::new("BR2: zero is least", vec![e]));
            }
        }
        for &e in &p {
            for &f in &p {
                if pjoin(e, f).is_none() {
                    return Some(Violation::new("BR2: join of projections", vec![e, f]));
                }
            }
        }
        for &e in &p {
            for &f in &p {
                for &g in &p {
                    let lhs = self.mul(e, pjoin(f, g).unwrap());
                    let rhs = pjoin(self.mul(e, f), self.mul(e, g)).unwrap();
                    if lhs != rhs {
                        return Some(Violation::new("BR2: distributive", vec![e, f, g]));
                    }
                }
            }
        }
        for &e in &p {
            for &f in &p {
                if !order.contains(e, f) {
                    continue;
                }
                let complemented = p.iter().any(|&g| self.mul(e, g) == zero && pjoin(e, g) == Some(f));
                if !complemented {
                    return Some(Violation::new("BR2: relative complement", vec![e, f]));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> UnarySemigroup {
        let mul = (0..k).map(|a| (0..k).map(|b| a.min(b)).collect()).collect();
        UnarySemigroup::build_from_table(mul, Some((0..k).collect()), None).unwrap()
    }

    #[test]
    fn two_chain_is_boolean() {
        assert_eq!(chain(2).check_boolean_restriction().unwrap(), Verdict::Pass);
    }

    #[test]
    fn three_chain_lacks_complements() {
        let v = chain(3).check_boolean_restriction().unwrap();
        let v = v.violation().unwrap();
        assert_eq!(v.law, "BR2: relative complement");
        assert_eq!(v.witness, vec![1, 2]);
    }

    #[test]
    fn group_has_no_zero() {
        let z2 = UnarySemigroup::build_from_table(vec![vec![0, 1], vec![1, 0]], Some(vec![0, 0]), None).unwrap();
        assert_eq!(z2.check_boolean_restriction(), Err(Error::NoRestrictionZero));
    }
}
