//! Exact semigroup algebras, convolution algebras of finite categories and
//! the isomorphism between the algebra of a semigroup and that of its
//! universal category.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use crate::category::{FiniteCategory, Slice};
use crate::error::{Error, Result};
use crate::germs::{universal_category, UniversalCategory};
use crate::semigroup::{UnarySemigroup, Verdict, Violation};
use crate::ElementId;

/// Coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Q,
    Z,
    Zp(u64),
}

impl Ring {
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Ring::Q => Scalar::Q(BigRational::from_integer(v.into())),
            Ring::Z => Scalar::Z(v.into()),
            Ring::Zp(p) => Scalar::Zp(v.rem_euclid(p as i64) as u64, p),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Q => f.write_str("q"),
            Ring::Z => f.write_str("z"),
            Ring::Zp(p) => write!(f, "zp:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" => Ok(Ring::Q),
            "z" => Ok(Ring::Z),
            other => {
                let p = other
                    .strip_prefix("zp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Invalid(format!("unknown ring {s:?}")))?;
                if p < 2 || p > u32::MAX as u64 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                    return Err(Error::Invalid(format!("{p} is not a supported prime")));
                }
                Ok(Ring::Zp(p))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Z(BigInt),
    /// Value and modulus.
    Zp(u64, u64),
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Q(_) => Ring::Q,
            Scalar::Z(_) => Ring::Z,
            Scalar::Zp(_, p) => Ring::Zp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(v) => v.is_zero(),
            Scalar::Z(v) => v.is_zero(),
            Scalar::Zp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(v) => v.is_one(),
            Scalar::Z(v) => v.is_one(),
            Scalar::Zp(v, _) => *v == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::RingMismatch(self.ring().to_string(), other.ring().to_string())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Z(a), Scalar::Z(b)) => Scalar::Z(a + b),
            (Scalar::Zp(a, p), Scalar::Zp(b, q)) if p == q => Scalar::Zp((a + b) % p, *p),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Z(a), Scalar::Z(b)) => Scalar::Z(a * b),
            (Scalar::Zp(a, p), Scalar::Zp(b, q)) if p == q => Scalar::Zp(a * b % p, *p),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Z(a) => Scalar::Z(-a),
            Scalar::Zp(a, p) => Scalar::Zp((p - a) % p, *p),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(v) => write!(f, "{v}"),
            Scalar::Z(v) => write!(f, "{v}"),
            Scalar::Zp(v, _) => write!(f, "{v}"),
        }
    }
}

/// What the basis indices of an element refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Elements of a semigroup of the given size.
    Semigroup(usize),
    /// Arrows of a category with the given number of arrows.
    Arrows(usize),
}

impl Basis {
    pub fn dimension(self) -> usize {
        match self {
            Basis::Semigroup(n) | Basis::Arrows(n) => n,
        }
    }
}

/// A finitely supported combination of basis elements. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    ring: Ring,
    basis: Basis,
    coeffs: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn zero(ring: Ring, basis: Basis) -> Self {
        AlgebraElement {
            ring,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(ring: Ring, basis: Basis, i: usize) -> Result<Self> {
        let mut a = Self::zero(ring, basis);
        a.add_term(i, ring.one())?;
        Ok(a)
    }

    pub fn from_terms(ring: Ring, basis: Basis, terms: impl IntoIterator<Item = (usize, Scalar)>) -> Result<Self> {
        let mut a = Self::zero(ring, basis);
        for (i, c) in terms {
            a.add_term(i, c)?;
        }
        Ok(a)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn coefficient(&self, i: usize) -> Scalar {
        self.coeffs.get(&i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    pub fn add_term(&mut self, i: usize, c: Scalar) -> Result<()> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), c.ring().to_string()));
        }
        if i >= self.basis.dimension() {
            return Err(Error::SizeMismatch(format!("basis index {i} out of range")));
        }
        let sum = match self.coeffs.get(&i) {
            Some(old) => old.add(&c)?,
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, sum);
        }
        Ok(())
    }

    fn compatible(&self, other: &AlgebraElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        if self.basis != other.basis {
            return Err(Error::CategoryMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<AlgebraElement> {
        let mut out = Self::zero(self.ring, self.basis);
        for (i, d) in self.terms() {
            out.add_term(i, c.mul(d)?)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&self.ring.from_i64(-1))?)
    }

    /// Sparse form: basis index to coefficient string.
    pub fn to_sparse_strings(&self) -> BTreeMap<usize, String> {
        self.terms().map(|(i, c)| (i, c.to_string())).collect()
    }
}

/// Bilinear extension of the multiplication table.
pub fn semigroup_product(s: &UnarySemigroup, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.compatible(b)?;
    if a.basis != Basis::Semigroup(s.size()) {
        return Err(Error::CategoryMismatch);
    }
    let mut out = AlgebraElement::zero(a.ring, a.basis);
    for (i, c) in a.terms() {
        for (j, d) in b.terms() {
            out.add_term(s.mul(i, j), c.mul(d)?)?;
        }
    }
    Ok(out)
}

/// `(f ∗ g)(x) = Σ_{uv = x} f(u) g(v)`.
pub fn convolution(c: &FiniteCategory, f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
    f.compatible(g)?;
    if f.basis != Basis::Arrows(c.arrow_count()) {
        return Err(Error::CategoryMismatch);
    }
    let mut out = AlgebraElement::zero(f.ring, f.basis);
    for (u, a) in f.terms() {
        for (v, b) in g.terms() {
            if let Some(uv) = c.compose(u, v) {
                out.add_term(uv, a.mul(b)?)?;
            }
        }
    }
    Ok(out)
}

pub fn indicator(c: &FiniteCategory, ring: Ring, u: &Slice) -> Result<AlgebraElement> {
    AlgebraElement::from_terms(ring, Basis::Arrows(c.arrow_count()), u.ones().map(|x| (x, ring.one())))
}

pub fn delta(c: &FiniteCategory, ring: Ring, x: usize) -> Result<AlgebraElement> {
    AlgebraElement::basis_element(ring, Basis::Arrows(c.arrow_count()), x)
}

/// The linear map `s ↦ χ_{ι(s)}` and the evidence that it is an algebra
/// isomorphism.
#[derive(Clone, Debug)]
pub struct AlgebraIsomorphism {
    pub ring: Ring,
    pub universal: UniversalCategory,
    /// A linear extension of the natural order, used as the basis order.
    pub order: Vec<ElementId>,
    /// `matrix[i][j]`: coefficient of `δ` of element `order[j]` in
    /// `F(order[i])`.
    pub matrix: Vec<Vec<Scalar>>,
    pub inverse: Vec<Vec<Scalar>>,
    pub multiplicative: Verdict,
    pub expansion: Verdict,
    pub unitriangular: bool,
    pub semigroup_dimension: usize,
    pub category_dimension: usize,
}

impl AlgebraIsomorphism {
    pub fn image(&self, s: ElementId) -> Result<AlgebraElement> {
        let c = self.universal.category();
        indicator(c, self.ring, &self.universal.iota(s))
    }

    pub fn is_pass(&self) -> bool {
        self.multiplicative.is_pass()
            && self.expansion.is_pass()
            && self.unitriangular
            && self.semigroup_dimension == self.category_dimension
    }
}

/// A linear extension of `≤` with index tie-break.
pub fn topological_order(s: &UnarySemigroup) -> Result<Vec<ElementId>> {
    let order = s.natural_order()?;
    let mut placed = vec![false; s.size()];
    let mut out = Vec::with_capacity(s.size());
    while out.len() < s.size() {
        let next = s
            .elements()
            .find(|&a| !placed[a] && s.elements().all(|b| b == a || placed[b] || !order.contains(b, a)))
            .ok_or_else(|| Error::Internal("natural order has a cycle".into()))?;
        placed[next] = true;
        out.push(next);
    }
    Ok(out)
}

pub fn f_iso(s: &UnarySemigroup, ring: Ring) -> Result<AlgebraIsomorphism> {
    let universal = universal_category(s)?;
    let c = universal.category();
    let n = s.size();
    let basis = Basis::Arrows(c.arrow_count());
    let order = s.natural_order()?;
    let images = s
        .elements()
        .map(|a| indicator(c, ring, &universal.iota(a)))
        .collect::<Result<Vec<_>>>()?;

    let mut expansion = Verdict::Pass;
    for a in s.elements() {
        let expected = AlgebraElement::from_terms(
            ring,
            basis,
            s.elements().filter(|&t| order.contains(t, a)).map(|t| (t, ring.one())),
        )?;
        if images[a] != expected {
            expansion = Verdict::Fail(Violation::new("indicator of iota(s) = sum of deltas below s", vec![a]));
            break;
        }
    }

    let mut multiplicative = Verdict::Pass;
    'pairs: for a in s.elements() {
        for b in s.elements() {
            if convolution(c, &images[a], &images[b])? != images[s.mul(a, b)] {
                multiplicative = Verdict::Fail(Violation::new("F(s) F(t) = F(st)", vec![a, b]));
                break 'pairs;
            }
        }
    }

    let topo = topological_order(s)?;
    let matrix: Vec<Vec<Scalar>> = topo
        .iter()
        .map(|&a| topo.iter().map(|&b| images[a].coefficient(b)).collect())
        .collect();
    let unitriangular = (0..n).all(|i| {
        matrix[i][i].is_one()
            && (0..n).all(|j| j == i || matrix[i][j].is_zero() || (j < i && order.contains(topo[j], topo[i])))
    });
    let inverse = if unitriangular {
        let inv = invert_lower_unitriangular(&matrix, ring)?;
        if mat_mul(&matrix, &inv, ring)? != identity(n, ring) {
            return Err(Error::Internal("inverse change of basis is wrong".into()));
        }
        inv
    } else {
        Vec::new()
    };

    Ok(AlgebraIsomorphism {
        ring,
        order: topo,
        matrix,
        inverse,
        multiplicative,
        expansion,
        unitriangular,
        semigroup_dimension: n,
        category_dimension: c.arrow_count(),
        universal,
    })
}

fn identity(n: usize, ring: Ring) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect()
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>], ring: Ring) -> Result<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut out = vec![vec![ring.zero(); n]; n];
    for i in 0..n {
        for k in (0..n).filter(|&k| !a[i][k].is_zero()) {
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j])?)?;
                }
            }
        }
    }
    Ok(out)
}

/// Forward substitution; valid over any commutative unital ring.
fn invert_lower_unitriangular(m: &[Vec<Scalar>], ring: Ring) -> Result<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut inv = identity(n, ring);
    for i in 0..n {
        for j in 0..i {
            let mut acc = ring.zero();
            for k in j..i {
                if !m[i][k].is_zero() && !inv[k][j].is_zero() {
                    acc = acc.add(&m[i][k].mul(&inv[k][j])?)?;
                }
            }
            inv[i][j] = acc.neg();
        }
    }
    Ok(inv)
}

/// Span comparison for a groupoid: every slice indicator is recovered from
/// bislice indicators by inclusion–exclusion over the maximal bislices it
/// contains, and the two families have the same rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanCheck {
    pub slices: usize,
    pub bislices: usize,
    pub slice_rank: usize,
    pub bislice_rank: usize,
    pub inclusion_exclusion: Verdict,
}

impl SpanCheck {
    pub fn spans_equal(&self) -> bool {
        self.slice_rank == self.bislice_rank && self.inclusion_exclusion.is_pass()
    }
}

const MAX_COVER: usize = 16;

pub fn groupoid_span_check(c: &FiniteCategory, limit: usize) -> Result<SpanCheck> {
    if let Some(x) = c.first_non_invertible() {
        return Err(Error::NotGroupoid(x));
    }
    let slices = c.enumerate_slices(limit)?;
    let bislices = c.enumerate_bislices(limit)?;
    let ring = Ring::Q;
    let mut inclusion_exclusion = Verdict::Pass;
    for (i, u) in slices.iter().enumerate() {
        let inside: Vec<&Slice> = bislices.iter().filter(|b| b.is_subset(u)).collect();
        let maximal: Vec<&Slice> = inside
            .iter()
            .copied()
            .filter(|b| !inside.iter().any(|o| o != b && b.is_subset(o)))
            .collect();
        if maximal.len() > MAX_COVER {
            return Err(Error::TooLarge {
                what: "bislice cover",
                count: maximal.len(),
                limit: MAX_COVER,
            });
        }
        let mut sum = AlgebraElement::zero(ring, Basis::Arrows(c.arrow_count()));
        for mask in 1u32..(1 << maximal.len()) {
            let mut meet = u.clone();
            for (k, b) in maximal.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    meet.intersect_with(b);
                }
            }
            if !c.is_bislice(&meet) {
                inclusion_exclusion = Verdict::Fail(Violation::new("intersection of bislices is a bislice", vec![i]));
            }
            let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
            sum = sum.add(&indicator(c, ring, &meet)?.scale(&ring.from_i64(sign))?)?;
        }
        if sum != indicator(c, ring, u)? {
            inclusion_exclusion = Verdict::Fail(Violation::new("inclusion-exclusion recovers the slice", vec![i]));
        }
        if !inclusion_exclusion.is_pass() {
            break;
        }
    }
    let vectors = |family: &[Slice]| -> Vec<Vec<BigRational>> {
        family
            .iter()
            .map(|u| {
                (0..c.arrow_count())
                    .map(|x| {
                        if u.contains(x) {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let slice_rank = rank(vectors(&slices));
    let bislice_rank = rank(vectors(&bislices));
    Ok(SpanCheck {
        slices: slices.len(),
        bislices: bislices.len(),
        slice_rank,
        bislice_rank,
        inclusion_exclusion,
    })
}

/// Rank over the rationals by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = &rows[i][col] / &pivot;
                for j in col..cols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::full_pt;

    #[test]
    fn ring_parsing() {
        assert_eq!("q".parse::<Ring>().unwrap(), Ring::Q);
        assert_eq!("zp:7".parse::<Ring>().unwrap(), Ring::Zp(7));
        assert!("zp:8".parse::<Ring>().is_err());
    }

    #[test]
    fn zero_coefficients_dropped() {
        let r = Ring::Zp(2);
        let mut a = AlgebraElement::basis_element(r, Basis::Semigroup(3), 1).unwrap();
        a.add_term(1, r.one()).unwrap();
        assert!(a.is_zero());
    }

    #[test]
    fn mismatched_rings() {
        let a = AlgebraElement::basis_element(Ring::Q, Basis::Semigroup(2), 0).unwrap();
        let b = AlgebraElement::basis_element(Ring::Z, Basis::Semigroup(2), 0).unwrap();
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn delta_convolution() {
        let c = FiniteCategory::pair_groupoid(2);
        let r = Ring::Q;
        let d = |x| delta(&c, r, x).unwrap();
        assert_eq!(convolution(&c, &d(1), &d(2)).unwrap(), d(0));
        assert!(convolution(&c, &d(1), &d(1)).unwrap().is_zero());
    }

    #[test]
    fn trivial_monoid_iso() {
        let s = UnarySemigroup::build_from_table(vec![vec![0]], Some(vec![0]), None).unwrap();
        let f = f_iso(&s, Ring::Q).unwrap();
        assert!(f.is_pass());
        assert_eq!(f.matrix, vec![vec![Ring::Q.one()]]);
    }

    #[test]
    fn pt2_iso_over_z2() {
        let s = full_pt(2).unwrap().0.drop_plus();
        let f = f_iso(&s, Ring::Zp(2)).unwrap();
        assert!(f.is_pass());
        assert_eq!(f.semigroup_dimension, 9);
    }

    #[test]
    fn pair_groupoid_spans() {
        let c = FiniteCategory::pair_groupoid(2);
        let sc = groupoid_span_check(&c, 1000).unwrap();
        assert_eq!((sc.slices, sc.bislices), (9, 7));
        assert!(sc.spans_equal());
        assert_eq!(sc.slice_rank, 4);
    }
}
