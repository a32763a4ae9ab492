//! JSON documents and their conversion to and from core objects.

use std::path::Path;

use germwork_core::catalog::{catalog, CatalogEntry};
use germwork_core::category::FiniteCategory;
use germwork_core::constellation::Constellation;
use germwork_core::germs::RestrictionAction;
use germwork_core::lattice::{set_of, FinSemilattice, OpenSet};
use germwork_core::proper::MonoidPartialAction;
use germwork_core::{ElementRelation, PartialMap, RelationKind, UnarySemigroup};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Document {
    Semigroup(SemigroupDoc),
    Semilattice(SemilatticeDoc),
    Action(ActionDoc),
    PartialAction(PartialActionDoc),
    Constellation(ConstellationDoc),
    Category(CategoryDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plus: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// The partial maps the elements are, when the semigroup is concrete.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maps: Option<Vec<MapDoc>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub ground: usize,
    pub map: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemilatticeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub meet: Vec<Vec<usize>>,
}

/// A semigroup given inline or as `catalog:NAME`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupRef {
    Catalog(String),
    Inline(Box<SemigroupDoc>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub semigroup: SemigroupRef,
    pub space: usize,
    pub theta: Vec<MapDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialActionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub monoid: SemigroupRef,
    pub space: usize,
    pub maps: Vec<MapDoc>,
    /// Distinguished subsets, as sorted point lists.
    pub family: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstellationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub product: Vec<Vec<Option<usize>>>,
    pub star: Vec<usize>,
    /// Pairs `[s, t]` with `s ≤ t`; recomputed from the products if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[usize; 2]>>,
    /// `restriction[s][e]`; recomputed if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restriction: Option<Vec<Vec<Option<usize>>>>,
    /// `corestriction[e][s]`; recomputed if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corestriction: Option<Vec<Vec<Option<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dom: Vec<usize>,
    pub ran: Vec<usize>,
    /// Triples `[x, y, xy]` for every composable pair.
    pub products: Vec<[usize; 3]>,
    pub labels: Vec<String>,
}

/// A document after validation.
#[derive(Clone, Debug)]
pub enum Object {
    Semigroup {
        semigroup: UnarySemigroup,
        maps: Option<Vec<PartialMap>>,
    },
    Semilattice(FinSemilattice),
    Action(RestrictionAction),
    PartialAction {
        action: MonoidPartialAction,
        family: Vec<OpenSet>,
    },
    Constellation(Constellation),
    Category(FiniteCategory),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Semigroup { .. } => "semigroup",
            Object::Semilattice(_) => "semilattice",
            Object::Action(_) => "action",
            Object::PartialAction { .. } => "partial-action",
            Object::Constellation(_) => "constellation",
            Object::Category(_) => "category",
        }
    }
}

/// A loaded input with the name it was given under.
#[derive(Clone, Debug)]
pub struct Input {
    pub source: String,
    pub name: Option<String>,
    pub object: Object,
}

/// Reads `catalog:NAME` or a JSON file.
pub fn load(source: &str, force: bool) -> Result<Input, CliError> {
    if let Some(name) = source.strip_prefix("catalog:") {
        let object = from_catalog(catalog(name)?, force);
        return Ok(Input {
            source: source.to_string(),
            name: Some(name.to_string()),
            object,
        });
    }
    let text = std::fs::read_to_string(Path::new(source)).map_err(|e| CliError::Usage(format!("{source}: {e}")))?;
    let doc = parse(&text)?;
    let name = doc.name().map(str::to_string);
    Ok(Input {
        source: source.to_string(),
        name,
        object: doc.to_object(force)?,
    })
}

pub fn parse(text: &str) -> Result<Document, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
}

fn from_catalog(entry: CatalogEntry, force: bool) -> Object {
    match entry {
        CatalogEntry::Semigroup { semigroup, maps } => Object::Semigroup {
            semigroup: if force { semigroup.forced() } else { semigroup },
            maps,
        },
        CatalogEntry::Semilattice(e) => Object::Semilattice(e),
        CatalogEntry::Category(c) => Object::Category(c),
        CatalogEntry::PartialAction { action, family } => Object::PartialAction { action, family },
    }
}

fn maps_from(docs: &[MapDoc]) -> Result<Vec<PartialMap>, CliError> {
    docs.iter()
        .map(|m| PartialMap::new(m.ground, m.map.clone()).map_err(CliError::from))
        .collect()
}

fn map_docs(maps: &[PartialMap]) -> Vec<MapDoc> {
    maps.iter()
        .map(|m| MapDoc {
            ground: m.ground(),
            map: m.entries().to_vec(),
        })
        .collect()
}

fn schema(what: impl Into<String>) -> CliError {
    CliError::Schema(what.into())
}

impl SemigroupDoc {
    fn build(&self, force: bool) -> Result<(UnarySemigroup, Option<Vec<PartialMap>>), CliError> {
        if self.mul.len() != self.size {
            return Err(schema(format!(
                "size is {} but mul has {} rows",
                self.size,
                self.mul.len()
            )));
        }
        let build = if force {
            UnarySemigroup::build_forced
        } else {
            UnarySemigroup::build_from_table
        };
        let mut s = build(self.mul.clone(), self.star.clone(), self.plus.clone())?;
        if let Some(l) = &self.labels {
            s = s.with_labels(l.clone())?;
        }
        let maps = self.maps.as_deref().map(maps_from).transpose()?;
        if let Some(m) = &maps {
            if m.len() != self.size {
                return Err(schema("one map per element is required"));
            }
            for a in s.elements() {
                for b in s.elements() {
                    if m[a].after(&m[b]) != m[s.mul(a, b)] {
                        return Err(schema(format!("maps do not multiply like the table at {a},{b}")));
                    }
                }
            }
        }
        Ok((s, maps))
    }

    pub fn from_semigroup(name: Option<String>, s: &UnarySemigroup, maps: Option<&[PartialMap]>) -> Self {
        SemigroupDoc {
            name,
            size: s.size(),
            mul: s.mul_rows(),
            star: s.star_table().map(<[usize]>::to_vec),
            plus: s.plus_table().map(<[usize]>::to_vec),
            labels: s.labels().map(<[String]>::to_vec),
            maps: maps.map(map_docs),
        }
    }
}

impl SemigroupRef {
    fn resolve(&self, force: bool) -> Result<UnarySemigroup, CliError> {
        match self {
            SemigroupRef::Catalog(r) => {
                let name = r
                    .strip_prefix("catalog:")
                    .ok_or_else(|| schema(format!("semigroup reference {r:?} must start with catalog:")))?;
                Ok(catalog(name)?.semigroup()?)
            }
            SemigroupRef::Inline(doc) => Ok(doc.build(force)?.0),
        }
    }
}

fn pair_rows(n: usize, rows: &[Vec<Option<usize>>], what: &str) -> Result<(), CliError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(schema(format!("{what} must be {n} by {n}")));
    }
    if rows.iter().flatten().flatten().any(|&x| x >= n) {
        return Err(schema(format!("{what} entry out of range")));
    }
    Ok(())
}

impl Document {
    pub fn name(&self) -> Option<&str> {
        match self {
            Document::Semigroup(d) => d.name.as_deref(),
            Document::Semilattice(d) => d.name.as_deref(),
            Document::Action(d) => d.name.as_deref(),
            Document::PartialAction(d) => d.name.as_deref(),
            Document::Constellation(d) => d.name.as_deref(),
            Document::Category(d) => d.name.as_deref(),
        }
    }

    pub fn to_object(&self, force: bool) -> Result<Object, CliError> {
        Ok(match self {
            Document::Semigroup(d) => {
                let (semigroup, maps) = d.build(force)?;
                Object::Semigroup { semigroup, maps }
            }
            Document::Semilattice(d) => Object::Semilattice(FinSemilattice::from_meet_table(d.meet.clone())?),
            Document::Action(d) => {
                let s = d.semigroup.resolve(force)?;
                Object::Action(RestrictionAction::new(s, d.space, maps_from(&d.theta)?)?)
            }
            Document::PartialAction(d) => {
                let m = d.monoid.resolve(force)?;
                let action = MonoidPartialAction::new(m, d.space, maps_from(&d.maps)?)?;
                if let Some(&x) = d.family.iter().flatten().find(|&&x| x >= d.space) {
                    return Err(schema(format!("family point {x} outside the space")));
                }
                let family = d
                    .family
                    .iter()
                    .map(|set| set_of(d.space, set.iter().copied()))
                    .collect();
                Object::PartialAction { action, family }
            }
            Document::Constellation(d) => {
                let n = d.star.len();
                pair_rows(n, &d.product, "product")?;
                if d.star.iter().any(|&x| x >= n) {
                    return Err(schema("star entry out of range"));
                }
                let order = match &d.order {
                    Some(pairs) => {
                        if pairs.iter().flatten().any(|&x| x >= n) {
                            return Err(schema("order entry out of range"));
                        }
                        ElementRelation::from_fn(RelationKind::Order, n, |s, t| pairs.contains(&[s, t]))
                    }
                    None => ElementRelation::from_fn(RelationKind::Order, n, |s, t| d.product[t][d.star[s]] == Some(s)),
                };
                let mut q = Constellation::from_parts(d.product.clone(), d.star.clone(), order)?;
                if let (Some(r), Some(c)) = (&d.restriction, &d.corestriction) {
                    pair_rows(n, r, "restriction")?;
                    pair_rows(n, c, "corestriction")?;
                    q = q.with_tables(r.clone(), c.clone())?;
                } else if d.restriction.is_some() || d.corestriction.is_some() {
                    return Err(schema("restriction and corestriction must be given together"));
                }
                Object::Constellation(q.with_labels(d.labels.clone()))
            }
            Document::Category(d) => {
                let products: Vec<_> = d.products.iter().map(|&[x, y, z]| (x, y, z)).collect();
                Object::Category(FiniteCategory::new(
                    d.dom.clone(),
                    d.ran.clone(),
                    &products,
                    d.labels.clone(),
                )?)
            }
        })
    }

    pub fn from_object(name: Option<String>, object: &Object) -> Document {
        match object {
            Object::Semigroup { semigroup, maps } => {
                Document::Semigroup(SemigroupDoc::from_semigroup(name, semigroup, maps.as_deref()))
            }
            Object::Semilattice(e) => Document::Semilattice(SemilatticeDoc {
                name,
                meet: e.meet_rows(),
            }),
            Object::Action(a) => Document::Action(ActionDoc {
                name,
                semigroup: SemigroupRef::Inline(Box::new(SemigroupDoc::from_semigroup(None, &a.semigroup, None))),
                space: a.space,
                theta: map_docs(&a.theta),
            }),
            Object::PartialAction { action, family } => Document::PartialAction(PartialActionDoc {
                name,
                monoid: SemigroupRef::Inline(Box::new(SemigroupDoc::from_semigroup(None, &action.monoid, None))),
                space: action.space,
                maps: map_docs(&action.alpha),
                family: family.iter().map(|set| set.ones().collect()).collect(),
            }),
            Object::Constellation(q) => Document::Constellation(ConstellationDoc {
                name,
                product: q.product_rows(),
                star: q.star_table().to_vec(),
                order: Some(q.order().pairs().into_iter().map(|(s, t)| [s, t]).collect()),
                restriction: Some(q.restriction_rows()),
                corestriction: Some(q.corestriction_rows()),
                labels: q.labels().map(<[String]>::to_vec),
            }),
            Object::Category(c) => Document::Category(CategoryDoc {
                name,
                dom: (0..c.arrow_count()).map(|x| c.dom(x)).collect(),
                ran: (0..c.arrow_count()).map(|x| c.ran(x)).collect(),
                products: c.products().into_iter().map(|(x, y, z)| [x, y, z]).collect(),
                labels: c.labels().to_vec(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}
