//! Built-in examples, addressed by name.

use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::lattice::{set_of, FinSemilattice, OpenSet};
use crate::pmap::{binary_relations, full_pt, generate_in_pt, symmetric_inverse, Closure, PartialMap};
use crate::proper::{partial_action_product, MonoidPartialAction};
use crate::semigroup::UnarySemigroup;

/// Largest `n` accepted for `pt:n` and `i:n`.
pub const MAX_MAP_POINTS: usize = 4;

#[derive(Clone, Debug)]
pub enum CatalogEntry {
    /// A semigroup, with the partial maps it is built from when it has them.
    Semigroup {
        semigroup: UnarySemigroup,
        maps: Option<Vec<PartialMap>>,
    },
    Semilattice(FinSemilattice),
    Category(FiniteCategory),
    PartialAction {
        action: MonoidPartialAction,
        family: Vec<OpenSet>,
    },
}

impl CatalogEntry {
    /// The semigroup carried by the entry: semilattices become semigroups
    /// of projections and partial actions their product.
    pub fn semigroup(&self) -> Result<UnarySemigroup> {
        match self {
            CatalogEntry::Semigroup { semigroup, .. } => Ok(semigroup.clone()),
            CatalogEntry::Semilattice(e) => e.as_semigroup(),
            CatalogEntry::PartialAction { action, family } => Ok(partial_action_product(action, family)?.semigroup),
            CatalogEntry::Category(_) => Err(Error::Invalid("a category is not a semigroup".into())),
        }
    }
}

/// Restriction semigroups used for exhaustive sweeps.
pub const SEMIGROUP_SWEEP: &[&str] = &[
    "trivial",
    "cyclic:2",
    "cyclic:3",
    "chain:3",
    "antichain:2",
    "free:2",
    "pt:2",
    "pt:3",
    "i:2",
    "i:3",
    "paper-4",
    "exg:2x2",
    "exg:3x2",
    "mcalister:2:1",
    "mcalister:3:2",
    "swap-diamond",
];

pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownName(name.to_string());
    let (head, arg) = name.split_once(':').unwrap_or((name, ""));
    let number = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let semigroup = |semigroup: UnarySemigroup| CatalogEntry::Semigroup { semigroup, maps: None };
    let with_maps = |(semigroup, maps): (UnarySemigroup, Vec<PartialMap>)| CatalogEntry::Semigroup {
        semigroup,
        maps: Some(maps),
    };
    Ok(match head {
        "trivial" if arg.is_empty() => semigroup(cyclic(1)?),
        "cyclic" => {
            let m = number(arg)?;
            if m == 0 {
                return Err(unknown());
            }
            semigroup(cyclic(m)?)
        }
        "pt" | "i" => {
            let n = number(arg)?;
            if n == 0 || n > MAX_MAP_POINTS {
                return Err(unknown());
            }
            with_maps(if head == "pt" {
                full_pt(n)?
            } else {
                symmetric_inverse(n)?
            })
        }
        "r" if arg == "2" => semigroup(binary_relations(2)?),
        "paper-4" if arg.is_empty() => with_maps(four_element()?),
        "no-local-units" if arg.is_empty() => with_maps(no_local_units()?),
        "exg" => {
            let (k, m) = arg.split_once('x').ok_or_else(unknown)?;
            let (k, m) = (number(k)?, number(m)?);
            if k == 0 || m == 0 {
                return Err(unknown());
            }
            semigroup(chain_times_cyclic(k, m)?)
        }
        "mcalister" => {
            let (k, m) = arg.split_once(':').ok_or_else(unknown)?;
            let (k, m) = (number(k)?, number(m)?);
            if k == 0 || m == 0 || m > k {
                return Err(unknown());
            }
            semigroup(p_semigroup(k, m)?)
        }
        "swap-diamond" if arg.is_empty() => {
            let (action, family) = swap_diamond()?;
            CatalogEntry::PartialAction { action, family }
        }
        "pair-groupoid" => {
            let n = number(arg)?;
            if n == 0 || n > 4 {
                return Err(unknown());
            }
            CatalogEntry::Category(FiniteCategory::pair_groupoid(n))
        }
        "chain" | "antichain" => {
            let k = number(arg)?;
            if k == 0 || k > 64 {
                return Err(unknown());
            }
            CatalogEntry::Semilattice(if head == "chain" {
                FinSemilattice::chain(k)
            } else {
                FinSemilattice::antichain(k)
            })
        }
        "free" => {
            let n = number(arg)?;
            if n == 0 || n > 6 {
                return Err(unknown());
            }
            CatalogEntry::Semilattice(FinSemilattice::free(n))
        }
        _ => return Err(unknown()),
    })
}

/// `ℤ/m` with `*` and `⁺` constantly the identity.
pub fn cyclic(m: usize) -> Result<UnarySemigroup> {
    let mul = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
    UnarySemigroup::build_from_table(mul, Some(vec![0; m]), Some(vec![0; m]))?
        .with_labels((0..m).map(|g| g.to_string()).collect())
}

/// Partial maps on `{a, b}` generated by `a ↦ a`, `a ↦ b` and the identity,
/// ordered `∅, f, g, 1`.
pub fn four_element() -> Result<(UnarySemigroup, Vec<PartialMap>)> {
    let f = PartialMap::new(2, vec![Some(0), None])?;
    let g = PartialMap::new(2, vec![Some(1), None])?;
    let (s, maps) = generate_in_pt(2, &[f, g, PartialMap::identity(2)], Closure::STAR)?;
    let order = [3, 0, 1, 2];
    let s = s.permuted(&order)?;
    let maps = order.iter().map(|&i| maps[i].clone()).collect();
    Ok((
        s.with_labels(vec!["∅".into(), "f".into(), "g".into(), "1".into()])?,
        maps,
    ))
}

/// The four-element example without its identity.
pub fn no_local_units() -> Result<(UnarySemigroup, Vec<PartialMap>)> {
    let f = PartialMap::new(2, vec![Some(0), None])?;
    let g = PartialMap::new(2, vec![Some(1), None])?;
    generate_in_pt(2, &[f, g], Closure::STAR)
}

/// The chain `0 < … < k-1` times `ℤ/m`; `(e, g)` has index `e * m + g`.
pub fn chain_times_cyclic(k: usize, m: usize) -> Result<UnarySemigroup> {
    let n = k * m;
    let split = |a: usize| (a / m, a % m);
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let ((e, g), (f, h)) = (split(a), split(b));
                    e.min(f) * m + (g + h) % m
                })
                .collect()
        })
        .collect();
    let star: Vec<usize> = (0..n).map(|a| split(a).0 * m).collect();
    let labels = (0..n).map(|a| format!("({},{})", split(a).0, split(a).1)).collect();
    UnarySemigroup::build_from_table(mul, Some(star.clone()), Some(star))?.with_labels(labels)
}

/// `ℤ/k` rotating the atoms `a_0, …, a_{k-1}` of the semilattice with a
/// bottom `0` below them, restricted to the ideal `{0, a_0, …, a_{m-1}}`:
/// pairs `(A, g)` with `A` and `g⁻¹A` in the ideal, multiplied by
/// `(A, g)(B, h) = (A ∧ gB, g + h)`.
pub fn p_semigroup(k: usize, m: usize) -> Result<UnarySemigroup> {
    // Poset points: 0 is the bottom, 1 + i is the atom a_i.
    let act = |g: usize, x: usize| if x == 0 { 0 } else { 1 + (x - 1 + g) % k };
    let meet = |x: usize, y: usize| if x == y { x } else { 0 };
    let in_ideal = |x: usize| x <= m;
    let pairs: Vec<(usize, usize)> = (0..=m)
        .flat_map(|a| (0..k).map(move |g| (a, g)))
        .filter(|&(a, g)| in_ideal(act((k - g) % k, a)))
        .collect();
    let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p).expect("closed under product");
    let mul = pairs
        .iter()
        .map(|&(a, g)| {
            pairs
                .iter()
                .map(|&(b, h)| index((meet(a, act(g, b)), (g + h) % k)))
                .collect()
        })
        .collect();
    let labels = pairs
        .iter()
        .map(|&(a, g)| {
            let a = if a == 0 { "0".to_string() } else { format!("a{}", a - 1) };
            format!("({a},{g})")
        })
        .collect();
    UnarySemigroup::build_from_table(mul, None, None)?
        .with_labels(labels)?
        .with_inverse_operations()
}

/// `ℤ/2` acting on the spectrum of the diamond `0 < a, b < 1` by swapping
/// `a` and `b` on `{0, a, b}`; the distinguished sets are the down-sets
/// `D_e`. The domain of the swap is not a single `D_e`.
pub fn swap_diamond() -> Result<(MonoidPartialAction, Vec<OpenSet>)> {
    // Points 0, a, b, 1 are 0, 1, 2, 3.
    let family = vec![
        set_of(4, [0]),
        set_of(4, [0, 1]),
        set_of(4, [0, 2]),
        set_of(4, [0, 1, 2, 3]),
    ];
    let swap = PartialMap::new(4, vec![Some(0), Some(2), Some(1), None])?;
    let action = MonoidPartialAction::new(cyclic(2)?, 4, vec![PartialMap::identity(4), swap])?;
    Ok((action, family))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let size = |n: &str| catalog(n).unwrap().semigroup().unwrap().size();
        assert_eq!(size("pt:2"), 9);
        assert_eq!(size("i:3"), 34);
        assert_eq!(size("r:2"), 16);
        assert_eq!(size("paper-4"), 4);
        assert_eq!(size("exg:3x2"), 6);
        assert_eq!(size("swap-diamond"), 7);
    }

    #[test]
    fn four_element_labels() {
        let s = catalog("paper-4").unwrap().semigroup().unwrap();
        assert_eq!(s.labels().unwrap(), ["∅", "f", "g", "1"]);
    }

    #[test]
    fn unknown_names() {
        for n in ["pt:9", "foo", "exg:2", "cyclic:0", "r:3"] {
            assert!(matches!(catalog(n), Err(Error::UnknownName(_))), "{n}");
        }
    }

    #[test]
    fn sweep_entries_build() {
        for n in SEMIGROUP_SWEEP {
            catalog(n).unwrap().semigroup().unwrap();
        }
    }
}
