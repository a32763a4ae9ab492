use fixedbitset::FixedBitSet;

use crate::ElementId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Order,
    Compatibility,
    Sigma,
}

/// A binary relation on `0..n` stored as one bitset row per element:
/// `rows[a]` holds every `b` with `a R b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementRelation {
    pub kind: RelationKind,
    rows: Vec<FixedBitSet>,
}

impl ElementRelation {
    pub fn from_fn(kind: RelationKind, n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let rows = (0..n)
            .map(|a| {
                let mut row = FixedBitSet::with_capacity(n);
                for b in 0..n {
                    if f(a, b) {
                        row.insert(b);
                    }
                }
                row
            })
            .collect();
        ElementRelation { kind, rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, a: ElementId, b: ElementId) -> bool {
        self.rows[a].contains(b)
    }

    /// Every `b` with `a R b`.
    pub fn row(&self, a: ElementId) -> &FixedBitSet {
        &self.rows[a]
    }

    pub fn transpose(&self) -> ElementRelation {
        let n = self.size();
        ElementRelation::from_fn(self.kind, n, |a, b| self.contains(b, a))
    }

    pub fn pairs(&self) -> Vec<(ElementId, ElementId)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.ones().map(move |b| (a, b)))
            .collect()
    }

    pub fn count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().into_iter().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().into_iter().all(|(a, b)| a == b || !self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.size()).all(|a| self.rows[a].ones().all(|b| self.rows[b].is_subset(&self.rows[a])))
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// Class index per element for an equivalence, numbered by least member.
    pub fn classes(&self) -> Vec<usize> {
        let n = self.size();
        let mut class = vec![usize::MAX; n];
        let mut next = 0;
        for a in 0..n {
            if class[a] == usize::MAX {
                for b in self.rows[a].ones() {
                    class[b] = next;
                }
                next += 1;
            }
        }
        class
    }

    /// Compares membership only; the kind tag is ignored.
    pub fn same_pairs(&self, other: &ElementRelation) -> bool {
        self.rows == other.rows
    }
}
